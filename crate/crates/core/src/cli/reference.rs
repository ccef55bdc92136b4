//! Reference values of `α_n^d` for `2 <= n <= 18`, `1 <= d <= n - 1`.

/// `(n, [α_n^1, .., α_n^{n-1}])`.
pub const REFERENCE_ALPHA: &[(u64, &[u64])] = &[
    (2, &[1]),
    (3, &[2, 2]),
    (4, &[3, 6, 2]),
    (5, &[4, 12, 16, 4]),
    (6, &[5, 20, 44, 10, 2]),
    (7, &[6, 30, 96, 90, 36, 6]),
    (8, &[7, 42, 174, 240, 84, 28, 4]),
    (9, &[8, 56, 288, 690, 336, 168, 48, 6]),
    (10, &[9, 72, 440, 1344, 984, 336, 144, 36, 4]),
    (11, &[10, 90, 640, 2590, 3060, 2100, 1200, 450, 100, 10]),
    (12, &[11, 110, 890, 4330, 5786, 2436, 1320, 660, 220, 44, 4]),
    (
        13,
        &[
            12, 132, 1200, 7020, 14832, 12264, 9504, 5940, 2640, 792, 144, 12,
        ],
    ),
    (
        14,
        &[
            13, 156, 1572, 10560, 26172, 22686, 13992, 7722, 4290, 1716, 468, 78, 6,
        ],
    ),
    (
        15,
        &[
            14, 182, 2016, 15564, 52488, 49392, 28736, 24024, 16016, 8008, 2912, 728, 112, 8,
        ],
    ),
    (
        16,
        &[
            15, 210, 2534, 21840, 83292, 95620, 73876, 56880, 40040, 24024, 10920, 3640, 840, 120,
            8,
        ],
    ),
    (
        17,
        &[
            16, 240, 3136, 30160, 143616, 217056, 208000, 209808, 183040, 128128, 69888, 29120,
            8960, 1920, 256, 16,
        ],
    ),
    (
        18,
        &[
            17, 272, 3824, 40330, 217574, 326088, 292080, 216672, 162780, 116688, 74256, 37128,
            14280, 4080, 816, 102, 6,
        ],
    ),
];

/// Largest `n` covered by [`REFERENCE_ALPHA`].
pub const REFERENCE_N_MAX: u64 = 18;

/// `α_n^d` from the reference table, `None` outside it.
pub fn reference_alpha(n: u64, d: u64) -> Option<u64> {
    let (_, row) = REFERENCE_ALPHA.iter().find(|(m, _)| *m == n)?;
    row.get(usize::try_from(d.checked_sub(1)?).ok()?).copied()
}
