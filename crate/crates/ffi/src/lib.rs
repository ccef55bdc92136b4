//! C ABI for `zsf-core`.
//!
//! Every function returns a [`ZsfStatus`]. On anything other than
//! `ZSF_STATUS_OK` the calling thread's last error message is set and can be
//! read with [`zsf_last_error`]. Counts cross the boundary as decimal strings
//! owned by the caller and released with [`zsf_string_free`]. Handles are
//! opaque and released with their `_free` function; passing NULL to a `_free`
//! function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zsf_core::arithmetic::euler_phi;
use zsf_core::arrangement::{char_poly, is_admissible, CharPoly, PolyMethod};
use zsf_core::counting::{self, mathieu_zhao_count, CountConfig, CountGrid};
use zsf_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZsfStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    /// A tuple, state or interpolation budget was exceeded.
    ResourceRefused = 3,
    /// The requested cell is not in the table.
    NotFound = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZsfPolyMethod {
    Auto = 0,
    Whitney = 1,
    Interpolate = 2,
}

impl From<ZsfPolyMethod> for PolyMethod {
    fn from(m: ZsfPolyMethod) -> Self {
        match m {
            ZsfPolyMethod::Auto => PolyMethod::Auto,
            ZsfPolyMethod::Whitney => PolyMethod::Whitney,
            ZsfPolyMethod::Interpolate => PolyMethod::Interpolate,
        }
    }
}

/// Resource limits; see [`zsf_config_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ZsfConfig {
    pub tuple_budget: u64,
    pub state_cap: u64,
}

impl From<ZsfConfig> for CountConfig {
    fn from(c: ZsfConfig) -> Self {
        CountConfig {
            tuple_budget: c.tuple_budget,
            state_cap: usize::try_from(c.state_cap).unwrap_or(usize::MAX),
        }
    }
}

/// Opaque characteristic polynomial.
pub struct ZsfCharPoly {
    poly: CharPoly,
}

/// Opaque table of `α_n^d` and `β_n^d`.
pub struct ZsfCountTable {
    grid: CountGrid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ZsfStatus {
    if e.is_resource_refusal() {
        ZsfStatus::ResourceRefused
    } else {
        match e {
            Error::InvalidArgument(_) => ZsfStatus::InvalidArgument,
            _ => ZsfStatus::Internal,
        }
    }
}

/// Runs `f`, turning errors and panics into a status plus message.
fn guarded(f: impl FnOnce() -> Result<(), (ZsfStatus, String)>) -> ZsfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZsfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ZsfStatus::Internal
        }
    }
}

fn core_err(e: Error) -> (ZsfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ZsfStatus, String) {
    (ZsfStatus::NullPointer, format!("{what} is NULL"))
}

fn config(cfg: *const ZsfConfig) -> CountConfig {
    // SAFETY: caller passes NULL or a valid ZsfConfig.
    match unsafe { cfg.as_ref() } {
        Some(c) => (*c).into(),
        None => CountConfig::default(),
    }
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (ZsfStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c =
        CString::new(s).map_err(|_| (ZsfStatus::Internal, "string contains NUL".to_string()))?;
    // SAFETY: checked non-NULL above.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn zsf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn zsf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn zsf_config_default() -> ZsfConfig {
    let c = CountConfig::default();
    ZsfConfig {
        tuple_budget: c.tuple_budget,
        state_cap: c.state_cap as u64,
    }
}

/// `α_n^d` as a decimal string. `cfg` may be NULL for the defaults.
///
/// # Safety
/// `cfg` must be NULL or valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_alpha(
    n: u64,
    d: u64,
    cfg: *const ZsfConfig,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        let v = counting::alpha(n, d, &config(cfg)).map_err(core_err)?;
        write_string(out, v.to_string())
    })
}

/// `β_n^d` as a decimal string. `cfg` may be NULL for the defaults.
///
/// # Safety
/// `cfg` must be NULL or valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_beta(
    n: u64,
    d: u64,
    cfg: *const ZsfConfig,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        let cfg = config(cfg);
        let v = counting::beta_direct(n, d, &cfg)
            .or_else(|_| counting::beta_moebius(n, d, &cfg))
            .map_err(core_err)?;
        write_string(out, v.to_string())
    })
}

/// Euler's totient.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_euler_phi(n: u64, out: *mut u64) -> ZsfStatus {
    guarded(|| {
        let v = euler_phi(n).map_err(core_err)?;
        // SAFETY: caller contract.
        let out = unsafe { out.as_mut() }.ok_or_else(|| null("out"))?;
        *out = v;
        Ok(())
    })
}

/// Whether `α_n^d = f_d(n)` is guaranteed for this `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_is_admissible(n: u64, d: u32, out: *mut bool) -> ZsfStatus {
    guarded(|| {
        let v = is_admissible(n, d).map_err(core_err)?;
        // SAFETY: caller contract.
        let out = unsafe { out.as_mut() }.ok_or_else(|| null("out"))?;
        *out = v;
        Ok(())
    })
}

/// Number of nonzero vectors in `Z_p^len` all of whose support subsets have
/// nonzero sum, as a decimal string.
///
/// # Safety
/// `cfg` must be NULL or valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_mathieu_zhao_count(
    p: u64,
    len: u64,
    cfg: *const ZsfConfig,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        let v = mathieu_zhao_count(p, len, &config(cfg)).map_err(core_err)?;
        write_string(out, v.total.to_string())
    })
}

/// Builds `f_d`.
///
/// # Safety
/// `cfg` must be NULL or valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_new(
    d: u32,
    method: ZsfPolyMethod,
    cfg: *const ZsfConfig,
    out: *mut *mut ZsfCharPoly,
) -> ZsfStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let poly = char_poly(d, method.into(), &config(cfg)).map_err(core_err)?;
        // SAFETY: checked non-NULL above.
        unsafe { *out = Box::into_raw(Box::new(ZsfCharPoly { poly })) };
        Ok(())
    })
}

/// # Safety
/// `poly` must be NULL or a handle from [`zsf_char_poly_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_free(poly: *mut ZsfCharPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree of the polynomial, or 0 for a NULL handle.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_degree(poly: *const ZsfCharPoly) -> u32 {
    poly.as_ref().map_or(0, |p| p.poly.degree())
}

/// Coefficient of `x^power` as a decimal string.
///
/// # Safety
/// `poly` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_coefficient(
    poly: *const ZsfCharPoly,
    power: u32,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        // SAFETY: caller contract.
        let p = unsafe { poly.as_ref() }.ok_or_else(|| null("poly"))?;
        let c = p.poly.coefficient_of(power).ok_or_else(|| {
            (
                ZsfStatus::InvalidArgument,
                format!("power {power} exceeds degree {}", p.poly.degree()),
            )
        })?;
        write_string(out, c.to_string())
    })
}

/// `f_d(n)` as a decimal string (may be negative).
///
/// # Safety
/// `poly` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_evaluate(
    poly: *const ZsfCharPoly,
    n: u64,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        // SAFETY: caller contract.
        let p = unsafe { poly.as_ref() }.ok_or_else(|| null("poly"))?;
        write_string(out, p.poly.evaluate_at(n).to_string())
    })
}

/// The polynomial written out, e.g. `x^2 - 3x + 2`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_char_poly_to_string(
    poly: *const ZsfCharPoly,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| {
        // SAFETY: caller contract.
        let p = unsafe { poly.as_ref() }.ok_or_else(|| null("poly"))?;
        write_string(out, p.poly.to_string())
    })
}

/// Computes every cell `2 <= n <= n_max`, `1 <= d <= min(n - 1, d_max)`;
/// `d_max = 0` means no limit. Cells refused by the budgets are left out and
/// report `ZSF_STATUS_NOT_FOUND` on lookup.
///
/// # Safety
/// `cfg` must be NULL or valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_count_table_new(
    n_max: u64,
    d_max: u64,
    cfg: *const ZsfConfig,
    out: *mut *mut ZsfCountTable,
) -> ZsfStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if n_max < 2 {
            return Err((
                ZsfStatus::InvalidArgument,
                format!("n_max must be at least 2, got {n_max}"),
            ));
        }
        let d_max = (d_max != 0).then_some(d_max);
        let grid = CountGrid::compute(n_max, d_max, &config(cfg));
        // SAFETY: checked non-NULL above.
        unsafe { *out = Box::into_raw(Box::new(ZsfCountTable { grid })) };
        Ok(())
    })
}

/// # Safety
/// `table` must be NULL or a handle from [`zsf_count_table_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn zsf_count_table_free(table: *mut ZsfCountTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

fn lookup(
    table: *const ZsfCountTable,
    n: u64,
    d: u64,
    beta: bool,
    out: *mut *mut c_char,
) -> Result<(), (ZsfStatus, String)> {
    // SAFETY: caller contract.
    let t = unsafe { table.as_ref() }.ok_or_else(|| null("table"))?;
    let v = if beta {
        t.grid.beta(n, d)
    } else {
        t.grid.alpha(n, d)
    };
    let v = v.ok_or_else(|| {
        let why = t
            .grid
            .table(n)
            .and_then(|row| row.refusals.get(&d).cloned())
            .unwrap_or_else(|| "outside the table".to_string());
        (
            ZsfStatus::NotFound,
            format!("no value for n={n}, d={d}: {why}"),
        )
    })?;
    write_string(out, v.to_string())
}

/// # Safety
/// `table` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_count_table_alpha(
    table: *const ZsfCountTable,
    n: u64,
    d: u64,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| lookup(table, n, d, false, out))
}

/// # Safety
/// `table` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zsf_count_table_beta(
    table: *const ZsfCountTable,
    n: u64,
    d: u64,
    out: *mut *mut c_char,
) -> ZsfStatus {
    guarded(|| lookup(table, n, d, true, out))
}
