use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use zsf_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { zsf_string_free(s) };
    v
}

fn last_error() -> String {
    let p = zsf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn counts_as_strings() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { zsf_alpha(18, 9, ptr::null(), &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "162780");
    assert_eq!(
        unsafe { zsf_beta(6, 2, ptr::null(), &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "18");
    assert_eq!(
        unsafe { zsf_mathieu_zhao_count(3, 2, ptr::null(), &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "6");
    let mut phi = 0;
    assert_eq!(unsafe { zsf_euler_phi(36, &mut phi) }, ZsfStatus::Ok);
    assert_eq!(phi, 12);
    let mut ok = false;
    assert_eq!(unsafe { zsf_is_admissible(7, 3, &mut ok) }, ZsfStatus::Ok);
    assert!(ok);
    assert_eq!(unsafe { zsf_is_admissible(8, 3, &mut ok) }, ZsfStatus::Ok);
    assert!(!ok);
}

#[test]
fn polynomial_handle() {
    let mut poly = ptr::null_mut();
    let st = unsafe { zsf_char_poly_new(3, ZsfPolyMethod::Interpolate, ptr::null(), &mut poly) };
    assert_eq!(st, ZsfStatus::Ok);
    assert_eq!(unsafe { zsf_char_poly_degree(poly) }, 3);
    let coeffs: Vec<String> = (0..=3)
        .rev()
        .map(|k| {
            let mut s = ptr::null_mut();
            assert_eq!(
                unsafe { zsf_char_poly_coefficient(poly, k, &mut s) },
                ZsfStatus::Ok
            );
            take(s)
        })
        .collect();
    assert_eq!(coeffs, ["1", "-7", "15", "-9"]);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { zsf_char_poly_evaluate(poly, 5, &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "16");
    assert_eq!(
        unsafe { zsf_char_poly_to_string(poly, &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "x^3 - 7x^2 + 15x - 9");
    assert_eq!(
        unsafe { zsf_char_poly_coefficient(poly, 4, &mut s) },
        ZsfStatus::InvalidArgument
    );
    assert!(last_error().contains("exceeds degree"));
    unsafe { zsf_char_poly_free(poly) };
    unsafe { zsf_char_poly_free(ptr::null_mut()) };
}

#[test]
fn table_handle() {
    let mut t = ptr::null_mut();
    assert_eq!(
        unsafe { zsf_count_table_new(10, 0, ptr::null(), &mut t) },
        ZsfStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { zsf_count_table_alpha(t, 10, 4, &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "1344");
    assert_eq!(
        unsafe { zsf_count_table_beta(t, 9, 8, &mut s) },
        ZsfStatus::Ok
    );
    assert_eq!(take(s), "6");
    assert_eq!(
        unsafe { zsf_count_table_alpha(t, 11, 1, &mut s) },
        ZsfStatus::NotFound
    );
    unsafe { zsf_count_table_free(t) };
}

#[test]
fn errors_carry_messages() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { zsf_alpha(1, 0, ptr::null(), &mut s) },
        ZsfStatus::InvalidArgument
    );
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { zsf_alpha(5, 2, ptr::null(), ptr::null_mut()) },
        ZsfStatus::NullPointer
    );
    assert!(last_error().contains("out"));
    let mut poly = ptr::null_mut();
    let st = unsafe { zsf_char_poly_new(6, ZsfPolyMethod::Whitney, ptr::null(), &mut poly) };
    assert_eq!(st, ZsfStatus::InvalidArgument);
    assert!(poly.is_null());
    let cfg = ZsfConfig {
        tuple_budget: 10,
        state_cap: 4,
    };
    assert_eq!(
        unsafe { zsf_alpha(30, 9, &cfg, &mut s) },
        ZsfStatus::ResourceRefused
    );
    assert!(last_error().contains("cap"));
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/zsf.h")).unwrap();
    let source = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15, "{exports:?}");
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}

/// Compiles a small C program against the header and static library when a C
/// compiler is on PATH.
#[test]
fn c_program_links() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let target = dir.join("../../target/debug");
    let lib = target.join("libzsf_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new(&cc)
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "0 failures\n");
}
