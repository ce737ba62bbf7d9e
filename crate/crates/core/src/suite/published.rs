/// Rank 2, order 2.
pub const RANK2_ORDER2: &[(&[u32], i64)] = &[(&[2, 0, 0, 2], 1), (&[1, 1, 1, 1], -1)];

/// Rank 2, order 3.
pub const RANK2_ORDER3: &[(&[u32], i64)] = &[
    (&[2, 0, 0, 0, 2, 0, 0, 0, 2], 1),
    (&[2, 0, 0, 0, 1, 1, 0, 1, 1], -3),
    (&[1, 1, 0, 0, 1, 1, 1, 0, 1], 2),
];

/// Rank 2, order 4.
pub const RANK2_ORDER4: &[(&[u32], i64)] = &[
    (&[2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2], 1),
    (&[2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1], -6),
    (&[1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1], 3),
    (&[2, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1], 8),
    (&[1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1], -6),
];

/// Rank 3, order 2.
pub const RANK3_ORDER2: &[(&[u32], i64)] = &[(&[3, 0, 0, 3], 1), (&[2, 1, 1, 2], -1)];

/// Rank 3, order 3.
pub const RANK3_ORDER3: &[(&[u32], i64)] = &[
    (&[3, 0, 0, 0, 3, 0, 0, 0, 3], 1),
    (&[3, 0, 0, 0, 2, 1, 0, 1, 2], -3),
    (&[2, 1, 0, 0, 2, 1, 1, 0, 2], 6),
    (&[2, 1, 0, 1, 1, 1, 0, 1, 2], -6),
    (&[1, 1, 1, 1, 1, 1, 1, 1, 1], 2),
];

/// Rank 3, order 4.
pub const RANK3_ORDER4: &[(&[u32], i64)] = &[
    (&[3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3], 1),
    (&[3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2], -6),
    (&[3, 0, 0, 0, 0, 2, 1, 0, 0, 0, 2, 1, 0, 1, 0, 2], 24),
    (&[3, 0, 0, 0, 0, 2, 1, 0, 0, 1, 1, 1, 0, 0, 1, 2], -24),
    (&[3, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1], 8),
    (&[2, 1, 0, 0, 0, 2, 1, 0, 0, 0, 2, 1, 1, 0, 0, 2], -6),
    (&[2, 1, 0, 0, 1, 2, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2], 3),
    (&[2, 0, 0, 1, 0, 2, 0, 1, 1, 0, 2, 0, 0, 1, 1, 1], -48),
    (&[2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1, 1, 1, 1, 0], 24),
    (&[2, 0, 1, 0, 0, 2, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1], 36),
    (&[2, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1], -24),
    (&[1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1], 12),
];

/// Rank 4, order 2.
pub const RANK4_ORDER2: &[(&[u32], i64)] =
    &[(&[4, 0, 0, 4], 1), (&[3, 1, 1, 3], -4), (&[2, 2, 2, 2], 3)];

/// Rank 4, order 3.
pub const RANK4_ORDER3: &[(&[u32], i64)] = &[
    (&[4, 0, 0, 0, 4, 0, 0, 0, 4], 1),
    (&[4, 0, 0, 0, 3, 1, 0, 1, 3], -12),
    (&[4, 0, 0, 0, 2, 2, 0, 2, 2], 9),
    (&[3, 1, 0, 0, 3, 1, 1, 0, 3], 8),
    (&[3, 1, 0, 1, 2, 1, 0, 1, 3], 36),
    (&[3, 1, 0, 1, 1, 2, 0, 2, 2], -72),
    (&[2, 2, 0, 0, 2, 2, 2, 0, 2], 6),
    (&[0, 2, 2, 2, 1, 1, 2, 1, 1], 36),
    (&[2, 1, 1, 1, 2, 1, 1, 1, 2], -12),
];

/// Rank 4, order 4.
pub const RANK4_ORDER4: &[(&[u32], i64)] = &[
    (&[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4], 1),
    (&[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3], -24),
    (&[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2], 18),
    (&[4, 0, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 0, 1, 0, 3], 32),
    (&[4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 2, 1, 0, 0, 1, 3], 144),
    (&[4, 0, 0, 0, 0, 3, 0, 1, 0, 0, 2, 2, 0, 1, 2, 1], -288),
    (&[4, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 0, 2, 0, 2], 24),
    (&[4, 0, 0, 0, 0, 0, 2, 2, 0, 2, 1, 1, 0, 2, 1, 1], 144),
    (&[4, 0, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 0, 1, 1, 2], -48),
    (&[3, 1, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 1, 0, 0, 3], -24),
    (&[3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3], 48),
    (&[3, 0, 0, 1, 0, 3, 0, 1, 1, 0, 3, 0, 0, 1, 1, 2], -288),
    (&[3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 3, 1, 1, 1, 1, 1], -96),
    (&[3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2], -72),
    (&[3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 2, 2, 1, 1, 2, 0], 144),
    (&[3, 1, 0, 0, 0, 3, 0, 1, 1, 0, 2, 1, 0, 0, 2, 2], 288),
    (&[3, 0, 0, 1, 0, 3, 1, 0, 0, 1, 2, 1, 1, 0, 1, 2], -432),
    (&[3, 0, 0, 1, 0, 3, 1, 0, 1, 0, 2, 1, 0, 1, 1, 2], 288),
    (&[3, 0, 0, 1, 0, 3, 0, 1, 0, 1, 2, 1, 1, 0, 2, 1], 288),
    (&[3, 0, 0, 1, 0, 3, 1, 0, 0, 0, 2, 2, 1, 1, 1, 1], 288),
    (&[3, 0, 0, 1, 0, 2, 2, 0, 0, 2, 0, 2, 1, 0, 2, 1], -288),
    (&[3, 0, 1, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 2, 1, 1], 864),
    (&[3, 1, 0, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 1, 2, 1], -576),
    (&[3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 1, 0, 1, 2], 144),
    (&[3, 1, 0, 0, 1, 1, 1, 1, 0, 2, 1, 1, 0, 0, 2, 2], -576),
    (&[3, 1, 0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 0, 1, 1, 2], -576),
    (&[3, 0, 0, 1, 0, 2, 1, 1, 0, 1, 2, 1, 1, 1, 1, 1], 288),
    (&[2, 2, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 0, 2], 18),
    (&[2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2], 27),
    (&[2, 2, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 0, 0, 2, 2], -144),
    (&[2, 1, 0, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 1, 0, 2], 480),
    (&[2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 0, 2], 288),
    (&[2, 1, 1, 0, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 0, 2], -504),
    (&[2, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1, 2, 0, 1, 1, 2], -288),
    (&[2, 1, 1, 0, 1, 2, 0, 1, 1, 1, 1, 1, 0, 0, 2, 2], -288),
    (&[2, 2, 0, 0, 0, 0, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1], 144),
    (&[2, 0, 1, 1, 2, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1], 144),
    (&[2, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 1, 1], 528),
    (&[2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], -144),
    (&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], 24),
];

/// Rank 6, order 2.
pub const RANK6_ORDER2: &[(&[u32], i64)] = &[
    (&[6, 0, 0, 6], 1),
    (&[5, 1, 1, 5], -6),
    (&[4, 2, 2, 4], 15),
    (&[3, 3, 3, 3], -10),
];

/// Rank 6, order 3.
pub const RANK6_ORDER3: &[(&[u32], i64)] = &[
    (&[6, 0, 0, 0, 6, 0, 0, 0, 6], 1),
    (&[6, 0, 0, 0, 5, 1, 0, 1, 5], -18),
    (&[6, 0, 0, 0, 4, 2, 0, 2, 4], 45),
    (&[6, 0, 0, 0, 3, 3, 0, 3, 3], -30),
    (&[5, 1, 0, 0, 5, 1, 1, 0, 5], 12),
    (&[5, 0, 1, 0, 5, 1, 1, 1, 4], 90),
    (&[5, 0, 1, 0, 2, 4, 1, 4, 1], -180),
    (&[5, 0, 1, 0, 4, 2, 1, 2, 3], -360),
    (&[5, 0, 1, 0, 3, 3, 1, 3, 2], 360),
    (&[4, 2, 0, 0, 4, 2, 2, 0, 4], 30),
    (&[4, 1, 1, 1, 4, 1, 1, 1, 4], -90),
    (&[1, 4, 1, 4, 0, 2, 1, 2, 3], 720),
    (&[4, 2, 0, 2, 2, 2, 0, 2, 4], 270),
    (&[4, 0, 2, 0, 3, 3, 2, 3, 1], -360),
    (&[4, 1, 1, 1, 3, 2, 1, 2, 3], 180),
    (&[4, 2, 0, 1, 2, 3, 1, 2, 3], -540),
    (&[4, 1, 1, 2, 2, 2, 0, 3, 3], -540),
    (&[3, 3, 0, 0, 3, 3, 3, 0, 3], 20),
    (&[0, 3, 3, 3, 2, 1, 3, 1, 2], 540),
    (&[3, 2, 1, 1, 3, 2, 2, 1, 3], -600),
    (&[3, 1, 2, 1, 3, 2, 2, 2, 2], 540),
    (&[2, 2, 2, 2, 2, 2, 2, 2, 2], -90),
];

/// Displayed rank-2 class representatives, orders 2 to 4.
pub const RANK2_CLASSES: &[&[u32]] = &[
    &[2, 0, 0, 2],
    &[1, 1, 1, 1],
    &[2, 0, 0, 0, 2, 0, 0, 0, 2],
    &[2, 0, 0, 0, 1, 1, 0, 1, 1],
    &[0, 1, 1, 1, 0, 1, 1, 1, 0],
    &[2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2],
    &[2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    &[2, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0],
    &[1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    &[1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1],
];

/// Displayed rank-4 class representatives, orders 2 to 4.
pub const RANK4_CLASSES: &[&[u32]] = &[
    &[4, 0, 0, 4],
    &[3, 1, 1, 3],
    &[2, 2, 2, 2],
    &[4, 0, 0, 0, 4, 0, 0, 0, 4],
    &[4, 0, 0, 0, 3, 1, 0, 1, 3],
    &[4, 0, 0, 0, 2, 2, 0, 2, 2],
    &[3, 1, 0, 0, 3, 1, 1, 0, 3],
    &[3, 1, 0, 1, 2, 1, 0, 1, 3],
    &[3, 0, 1, 0, 2, 2, 1, 2, 1],
    &[2, 2, 0, 0, 2, 2, 2, 0, 2],
    &[0, 2, 2, 2, 1, 1, 2, 1, 1],
    &[2, 1, 1, 1, 2, 1, 1, 1, 2],
    &[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4],
    &[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3],
    &[4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2],
    &[4, 0, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 0, 1, 0, 3],
    &[4, 0, 0, 0, 0, 3, 1, 0, 0, 1, 2, 1, 0, 0, 1, 3],
    &[4, 0, 0, 0, 0, 3, 0, 1, 0, 0, 2, 2, 0, 1, 2, 1],
    &[4, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 0, 2, 0, 2],
    &[4, 0, 0, 0, 0, 0, 2, 2, 0, 2, 1, 1, 0, 2, 1, 1],
    &[4, 0, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 0, 1, 1, 2],
    &[3, 1, 0, 0, 0, 3, 1, 0, 0, 0, 3, 1, 1, 0, 0, 3],
    &[3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 3, 1, 0, 0, 1, 3],
    &[3, 0, 0, 1, 0, 3, 0, 1, 1, 0, 3, 0, 0, 1, 1, 2],
    &[3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 3, 1, 1, 1, 1, 1],
    &[3, 1, 0, 0, 1, 3, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2],
    &[3, 0, 0, 1, 0, 3, 0, 1, 0, 0, 2, 2, 1, 1, 2, 0],
    &[3, 1, 0, 0, 0, 3, 0, 1, 1, 0, 2, 1, 0, 0, 2, 2],
    &[3, 0, 0, 1, 0, 3, 1, 0, 0, 1, 2, 1, 1, 0, 1, 2],
    &[3, 0, 0, 1, 0, 3, 1, 0, 1, 0, 2, 1, 0, 1, 1, 2],
    &[3, 0, 0, 1, 0, 3, 0, 1, 0, 1, 2, 1, 1, 0, 2, 1],
    &[3, 0, 0, 1, 0, 3, 1, 0, 0, 0, 2, 2, 1, 1, 1, 1],
    &[3, 0, 0, 1, 0, 2, 2, 0, 0, 2, 0, 2, 1, 0, 2, 1],
    &[3, 0, 1, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 2, 1, 1],
    &[3, 1, 0, 0, 0, 2, 0, 2, 1, 0, 2, 1, 0, 1, 2, 1],
    &[3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 2, 1, 1, 0, 1, 2],
    &[3, 1, 0, 0, 1, 1, 1, 1, 0, 2, 1, 1, 0, 0, 2, 2],
    &[3, 1, 0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 0, 1, 1, 2],
    &[3, 0, 0, 1, 0, 2, 1, 1, 0, 1, 2, 1, 1, 1, 1, 1],
    &[2, 2, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 0, 2],
    &[2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2],
    &[2, 2, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 0, 0, 2, 2],
    &[2, 1, 0, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 1, 0, 2],
    &[2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 0, 2],
    &[2, 1, 1, 0, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 0, 2],
    &[2, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1, 2, 0, 1, 1, 2],
    &[2, 1, 1, 0, 1, 2, 0, 1, 1, 1, 1, 1, 0, 0, 2, 2],
    &[2, 2, 0, 0, 0, 0, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1],
    &[2, 0, 1, 1, 2, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1],
    &[2, 1, 0, 1, 0, 2, 1, 1, 1, 0, 2, 1, 1, 1, 1, 1],
    &[2, 0, 1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
];

/// Cube of the order-2 census.
pub const P2_CUBED: &[(&[&str], i64)] = &[
    (&["0", "0", "0"], 1),
    (&["0", "0", "1"], -3),
    (&["0", "1", "1"], 3),
    (&["1", "1", "1"], -1),
];

/// Cube of the order-3 census.
pub const P3_CUBED: &[(&[&str], i64)] = &[
    (&["0", "0", "0"], 1),
    (&["0", "0", "1"], -9),
    (&["0", "1", "1"], 27),
    (&["0", "0", "2"], 6),
    (&["1", "1", "1"], -27),
    (&["0", "1", "2"], -36),
    (&["1", "1", "2"], 54),
    (&["0", "2", "2"], 12),
    (&["1", "2", "2"], -36),
    (&["2", "2", "2"], 8),
];

/// Cube of the order-4 census.
pub const P4_CUBED: &[(&[&str], i64)] = &[
    (&["0", "0", "0"], 1),
    (&["0", "0", "1"], -18),
    (&["0", "1", "1"], 108),
    (&["0", "0", "1^2"], 9),
    (&["0", "0", "2"], 24),
    (&["1", "1", "1"], -216),
    (&["0", "1", "1^2"], -108),
    (&["0", "1", "2"], -288),
    (&["0", "0", "3"], -18),
    (&["1", "1", "1^2"], 324),
    (&["1", "1", "2"], 864),
    (&["0", "1", "3"], 108),
    (&["0", "1^2", "1^2"], 27),
    (&["0", "1^2", "2"], 144),
    (&["0", "2", "2"], 192),
    (&["1", "1", "3"], -648),
    (&["1", "1^2", "1^2"], -162),
    (&["1", "1^2", "2"], -864),
    (&["1", "2", "2"], -1152),
    (&["0", "1^2", "3"], -54),
    (&["0", "2", "3"], -288),
    (&["1", "1^2", "3"], 648),
    (&["1", "2", "3"], 1728),
    (&["1^2", "1^2", "1^2"], 27),
    (&["1^2", "1^2", "2"], 216),
    (&["1^2", "2", "2"], 576),
    (&["2", "2", "2"], 512),
    (&["0", "3", "3"], 108),
    (&["1", "3", "3"], -648),
    (&["1^2", "1^2", "3"], -162),
    (&["1^2", "2", "3"], -864),
    (&["2", "2", "3"], -1152),
    (&["1^2", "3", "3"], 324),
    (&["2", "3", "3"], 864),
    (&["3", "3", "3"], -216),
];

/// Fifth power of the order-2 census.
pub const P2_FIFTH: &[(&[&str], i64)] = &[
    (&["0", "0", "0", "0", "0"], 1),
    (&["0", "0", "0", "0", "1"], -5),
    (&["0", "0", "0", "1", "1"], 10),
    (&["0", "0", "1", "1", "1"], -10),
    (&["0", "1", "1", "1", "1"], 5),
    (&["1", "1", "1", "1", "1"], -1),
];

/// Fifth power of the order-3 census.
pub const P3_FIFTH: &[(&[&str], i64)] = &[
    (&["0", "0", "0", "0", "0"], 1),
    (&["0", "0", "0", "0", "1"], -15),
    (&["0", "0", "0", "1", "1"], 90),
    (&["0", "0", "0", "0", "2"], 10),
    (&["0", "0", "1", "1", "1"], -270),
    (&["0", "0", "0", "1", "2"], -120),
    (&["0", "1", "1", "1", "1"], 405),
    (&["0", "0", "1", "1", "2"], 540),
    (&["0", "0", "0", "2", "2"], 40),
    (&["1", "1", "1", "1", "1"], -243),
    (&["0", "1", "1", "1", "2"], -1080),
    (&["0", "0", "1", "2", "2"], -360),
    (&["1", "1", "1", "1", "2"], 810),
    (&["0", "1", "1", "2", "2"], 1080),
    (&["0", "0", "2", "2", "2"], 80),
    (&["1", "1", "1", "2", "2"], -1080),
    (&["0", "1", "2", "2", "2"], -480),
    (&["1", "1", "2", "2", "2"], 720),
    (&["0", "2", "2", "2", "2"], 80),
    (&["1", "2", "2", "2", "2"], -240),
    (&["2", "2", "2", "2", "2"], 32),
];

/// Square of the order-2 census.
pub const P2_SQUARED: &[(&[&str], i64)] = &[(&["0", "0"], 1), (&["0", "1"], -2), (&["1", "1"], 1)];

/// Square of the order-3 census.
pub const P3_SQUARED: &[(&[&str], i64)] = &[
    (&["0", "0"], 1),
    (&["0", "1"], -6),
    (&["1", "1"], 9),
    (&["0", "2"], 4),
    (&["1", "2"], -12),
    (&["2", "2"], 4),
];

/// Square of the order-4 census (coefficients left blank).
pub const P4_SQUARED: &[(&[&str], Option<i64>)] = &[
    (&["0", "0"], Some(1)),
    (&["0", "1"], None),
    (&["1", "1"], None),
    (&["0", "1^2"], None),
    (&["0", "2"], None),
    (&["1", "1^2"], None),
    (&["1", "2"], None),
    (&["0", "3"], None),
    (&["1", "3"], None),
    (&["1^2", "1^2"], None),
    (&["1^2", "2"], None),
    (&["2", "2"], None),
    (&["1^2", "3"], None),
    (&["2", "3"], None),
    (&["3", "3"], None),
];

/// Signed cycle census of orders 2 to 6, as `(label, coefficient)`.
pub const CENSUS: &[(usize, &[(&str, i64)])] = &[
    (2, &[("0", 1), ("1", -1)]),
    (3, &[("0", 1), ("1", -3), ("2", 2)]),
    (4, &[("0", 1), ("1", -6), ("1^2", 3), ("2", 8), ("3", -6)]),
    (
        5,
        &[
            ("0", 1),
            ("1", -10),
            ("1^2", 15),
            ("2", 20),
            ("(2 1)", -20),
            ("3", -30),
            ("4", 24),
        ],
    ),
    (
        6,
        &[
            ("0", 1),
            ("1", -15),
            ("1^2", 45),
            ("1^3", -15),
            ("2", 40),
            ("(2 1)", -120),
            ("2^2", 40),
            ("3", -90),
            ("(3 1)", 90),
            ("4", 144),
            ("5", -120),
        ],
    ),
];

/// Number of semi-magic squares of order 1 to 4 with line sum 2.
pub const H_LINE_SUM_2: [u64; 4] = [1, 3, 21, 282];

/// Number of semi-magic squares of order 1 to 4 with line sum 4, as printed.
pub const H_LINE_SUM_4_TEXT: [u64; 4] = [1, 5, 120, 7558];

/// Partition numbers p(0)..p(9).
pub const PARTITION_SERIES: [u64; 10] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];

/// Rank-4 class-count series, first five terms.
pub const RANK4_SERIES: [u64; 5] = [1, 1, 3, 9, 36];
