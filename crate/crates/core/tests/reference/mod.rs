// Published reference values shared by several integration test targets.
#![allow(dead_code)]

/// Polywheel expansions in the named basis.
pub const A1: &[(&str, &[(&str, &str)])] = &[
    ("2", &[("theta", "1")]),
    ("2,2", &[("theta^2", "1"), ("theta2", "2")]),
    ("4", &[("theta2", "5/2")]),
    ("2,2,2", &[("theta^3", "1"), ("theta*theta2", "6"), ("theta3", "8")]),
    ("4,2", &[("theta*theta2", "5/2"), ("theta3", "10")]),
    ("6", &[("theta3", "35/4")]),
    (
        "2,2,2,2",
        &[("theta^4", "1"), ("theta^2*theta2", "12"), ("theta*theta3", "32"), ("theta2^2", "12"), ("theta4", "48")],
    ),
    ("4,2,2", &[("theta^2*theta2", "5/2"), ("theta*theta3", "20"), ("theta2^2", "5"), ("theta4", "60")]),
    ("4,4", &[("theta2^2", "25/4"), ("theta4", "48"), ("g8b", "24")]),
    ("6,2", &[("theta*theta3", "35/4"), ("theta4", "105/2")]),
    ("8", &[("theta4", "287/8"), ("g8b", "7")]),
];

pub const A1_DEGREE5: &[(&str, &[(&str, &str)])] = &[
    (
        "2,2,2,2,2",
        &[
            ("theta^5", "1"),
            ("theta^3*theta2", "20"),
            ("theta*theta2^2", "60"),
            ("theta^2*theta3", "80"),
            ("theta2*theta3", "160"),
            ("theta*theta4", "240"),
            ("theta5", "384"),
        ],
    ),
    (
        "4,2,2,2",
        &[
            ("theta^3*theta2", "5/2"),
            ("theta*theta2^2", "15"),
            ("theta^2*theta3", "30"),
            ("theta2*theta3", "80"),
            ("theta*theta4", "180"),
            ("theta5", "480"),
        ],
    ),
    (
        "4,4,2",
        &[
            ("theta*theta2^2", "25/4"),
            ("theta2*theta3", "50"),
            ("theta*theta4", "48"),
            ("theta*g8b", "24"),
            ("theta5", "384"),
            ("g10b", "192"),
        ],
    ),
    ("6,2,2", &[("theta^2*theta3", "35/4"), ("theta2*theta3", "35/2"), ("theta*theta4", "105"), ("theta5", "420")]),
    ("6,4", &[("theta2*theta3", "175/8"), ("theta5", "483/2"), ("g10b", "252")]),
    ("8,2", &[("theta*theta4", "287/8"), ("theta*g8b", "7"), ("theta5", "287"), ("g10b", "56")]),
    ("10", &[("theta5", "2541/16"), ("g10b", "231/2")]),
];

/// Basis classes in polywheels (keyed by the polywheel partition) and extras.
pub const A2: &[(&str, &[(&str, &str)])] = &[
    ("theta", &[("2", "1")]),
    ("theta^2", &[("2,2", "1"), ("4", "-4/5")]),
    ("theta2", &[("4", "2/5")]),
    ("theta^3", &[("2,2,2", "1"), ("4,2", "-12/5"), ("6", "64/35")]),
    ("theta*theta2", &[("4,2", "2/5"), ("6", "-16/35")]),
    ("theta3", &[("6", "4/35")]),
    ("theta^4", &[("2,2,2,2", "1"), ("4,2,2", "-24/5"), ("4,4", "48/25"), ("6,2", "256/35"), ("8", "-1152/175")]),
    ("theta^2*theta2", &[("4,2,2", "2/5"), ("4,4", "-8/25"), ("6,2", "-32/35"), ("8", "192/175")]),
    ("theta*theta3", &[("theta2^2", "-1/2"), ("4,4", "2/25"), ("6,2", "4/35"), ("8", "-48/175")]),
    ("theta4", &[("theta2^2", "1/12"), ("4,4", "-1/75"), ("8", "8/175")]),
    ("theta2^2", &[("theta2^2", "1")]),
    ("g8b", &[("theta2^2", "-41/96"), ("4,4", "41/600"), ("8", "-16/175")]),
];

pub const A2_DEGREE5: &[(&str, &[(&str, &str)])] = &[
    (
        "theta^5",
        &[
            ("2,2,2,2,2", "1"),
            ("4,2,2,2", "-8"),
            ("4,4,2", "48/5"),
            ("6,2,2", "128/7"),
            ("6,4", "-512/35"),
            ("8,2", "-1152/35"),
            ("10", "12288/385"),
        ],
    ),
    (
        "theta^3*theta2",
        &[
            ("4,2,2,2", "2/5"),
            ("4,4,2", "-24/25"),
            ("6,2,2", "-48/35"),
            ("6,4", "64/35"),
            ("8,2", "576/175"),
            ("10", "-1536/385"),
        ],
    ),
    (
        "theta^2*theta3",
        &[
            ("theta*theta2^2", "-1"),
            ("4,4,2", "4/25"),
            ("6,2,2", "4/35"),
            ("6,4", "-16/35"),
            ("8,2", "-96/175"),
            ("10", "384/385"),
        ],
    ),
    (
        "theta*theta4",
        &[
            ("theta*theta2^2", "1/12"),
            ("theta2*theta3", "-1"),
            ("4,4,2", "-1/75"),
            ("6,4", "8/105"),
            ("8,2", "8/175"),
            ("10", "-64/385"),
        ],
    ),
    (
        "theta*g8b",
        &[
            ("theta*theta2^2", "-41/96"),
            ("theta2*theta3", "-9/8"),
            ("4,4,2", "41/600"),
            ("6,4", "-11/105"),
            ("8,2", "-16/175"),
            ("10", "184/1155"),
        ],
    ),
    ("theta5", &[("theta2*theta3", "5/24"), ("6,4", "-1/105"), ("10", "8/385")]),
    ("theta*theta2^2", &[("theta*theta2^2", "1")]),
    ("theta2*theta3", &[("theta2*theta3", "1")]),
    ("g10b", &[("theta2*theta3", "-55/192"), ("6,4", "11/840"), ("10", "-23/1155")]),
];

pub const HILBERT_CHI: [&[i64]; 4] = [
    &[2, -20, 2],
    &[3, -42, 234, -42, 3],
    &[4, -64, 508, -2048, 508, -64, 4],
    &[5, -86, 785, -4556, 14786, -4556, 785, -86, 5],
];

pub const KUMMER_CHI: [&[i64]; 3] =
    [&[3, -6, 90, -6, 3], &[4, -8, 44, -336, 44, -8, 4], &[5, -10, 15, -20, 650, -20, 15, -10, 5]];

/// χ^m in the c-basis: (k, m, denominator, terms).
pub type ChiRow = (usize, usize, i64, &'static [(&'static [u32], i64)]);

pub const CHI_IN_C: &[ChiRow] = &[
    (1, 0, 12, &[(&[2], 1)]),
    (1, 1, 12, &[(&[2], -10)]),
    (2, 0, 720, &[(&[2, 2], 3), (&[4], -1)]),
    (2, 1, 720, &[(&[2, 2], 12), (&[4], -124)]),
    (2, 2, 720, &[(&[2, 2], 18), (&[4], 474)]),
    (3, 0, 60480, &[(&[2, 2, 2], 10), (&[4, 2], -9), (&[6], 2)]),
    (3, 1, 60480, &[(&[2, 2, 2], 60), (&[4, 2], -306), (&[6], -492)]),
    (3, 2, 60480, &[(&[2, 2, 2], 150), (&[4, 2], -1143), (&[6], 13134)]),
    (3, 3, 60480, &[(&[2, 2, 2], 200), (&[4, 2], -1692), (&[6], -33224)]),
    (4, 0, 3628800, &[(&[2, 2, 2, 2], 21), (&[4, 2, 2], -34), (&[4, 4], 5), (&[6, 2], 13), (&[8], -3)]),
    (4, 1, 3628800, &[(&[2, 2, 2, 2], 168), (&[4, 2, 2], -872), (&[4, 4], 1240), (&[6, 2], -1816), (&[8], -744)]),
    (4, 2, 3628800, &[(&[2, 2, 2, 2], 588), (&[4, 2, 2], -4552), (&[4, 4], 7340), (&[6, 2], 3964), (&[8], 86316)]),
    (
        4,
        3,
        3628800,
        &[(&[2, 2, 2, 2], 1176), (&[4, 2, 2], -10904), (&[4, 4], 18280), (&[6, 2], 32408), (&[8], -857688)],
    ),
    (
        4,
        4,
        3628800,
        &[(&[2, 2, 2, 2], 1470), (&[4, 2, 2], -14380), (&[4, 4], 24350), (&[6, 2], 53230), (&[8], 1739310)],
    ),
];

/// Monomial in terms of `χ^0..χ^{k-1}` and, in degree 4, `s` last.
pub type InverseRow = (usize, &'static [u32], &'static [i64]);

pub const C_IN_CHI: &[InverseRow] = &[
    (1, &[2], &[12]),
    (2, &[2, 2], &[248, -2]),
    (2, &[4], &[24, -6]),
    (3, &[2, 2, 2], &[7272, -184, -8]),
    (3, &[4, 2], &[1368, -208, -8]),
    (3, &[6], &[36, -16, 4]),
    (4, &[2, 2, 2, 2], &[0, 0, 0, 0, 3]),
    (4, &[4, 2, 2], &[-116032, -372, 112, 12, 2]),
    (4, &[4, 4], &[-74960, 777, 332, 33, 1]),
    (4, &[6, 2], &[4512, -1278, 168, 18, 0]),
    (4, &[8], &[48, -27, 12, -3, 0]),
];

pub const S_IN_CHI: &[InverseRow] = &[
    (1, &[2], &[-24]),
    (2, &[2, 2], &[992, -8]),
    (2, &[4], &[400, 20]),
    (3, &[2, 2, 2], &[-58176, 1472, 64]),
    (3, &[4, 2], &[-18144, -928, -32]),
    (3, &[6], &[-6552, -784, -56]),
    (4, &[2, 2, 2, 2], &[0, 0, 0, 0, 48]),
    (4, &[4, 2, 2], &[1856512, 5952, -1792, -192, -8]),
    (4, &[4, 4], &[657152, 18384, 3520, 336, -4]),
    (4, &[6, 2], &[1446528, -10872, 672, 72, -12]),
    (4, &[8], &[664128, -3924, 1680, 204, -6]),
];

/// Chern numbers of S^[k] and T^[[k]] for k ≤ 3 in the s-basis.
pub const CHERN_LOW: &[(usize, &[u32], i64, i64)] = &[
    (1, &[2], -48, -48),
    (2, &[2, 2], 3312, 3024),
    (2, &[4], 360, 1080),
    (3, &[2, 2, 2], -294400, -241664),
    (3, &[4, 2], -29440, -66560),
    (3, &[6], -4480, -22400),
];

/// Degree 4: (monomial, s-coefficient, S^[4] constant, T^[[4]] constant).
pub const CHERN_FOUR: &[(&[u32], i64, i64, i64)] = &[
    (&[2, 2, 2, 2], 48, 0, 0),
    (&[4, 2, 2], -8, 8238720, 9200000),
    (&[4, 4], -4, 2937120, 3148000),
    (&[6, 2], -12, 8367120, 7350000),
    (&[8], -6, 4047480, 3381000),
];

pub const CLASSES: [&[&str]; 4] = [
    &["theta"],
    &["theta^2", "theta2"],
    &["theta^3", "theta*theta2", "theta3"],
    &["theta^4", "theta^2*theta2", "theta2^2", "theta*theta3", "theta4", "g8b"],
];

pub const HILBERT_B: [&[i64]; 4] =
    [&[48], &[3600, -144], &[373248, -13824, 512], &[49787136, -1693440, 57600, 56448, -1824, 348]];

pub const KUMMER_B: [&[i64]; 4] =
    [&[48], &[3888, -432], &[442368, -36864, 2560], &[64800000, -4320000, 288000, 240000, -12000, -1500]];

pub const VIRTUAL_B: [&[i64]; 4] = [&[-6], &[36, 12], &[-216, -72, -24], &[1296, 432, 144, 144, 48, 24]];

/// Invariants of products, keyed by the display name of the product.
pub const PRODUCT_B: &[(&str, &[i64])] = &[
    ("S^2", &[4608, 0]),
    ("SxS^[2]", &[518400, -6912, 0]),
    ("SxT^[[2]]", &[559872, -20736, 0]),
    ("S^3", &[663552, 0, 0]),
    ("SxS^[3]", &[71663616, -1327104, 0, 24576, 0, 0]),
    ("S^[2]xS^[2]", &[77760000, -1036800, 41472, 0, 0, 0]),
    ("S^2xS^[2]", &[99532800, -663552, 0, 0, 0, 0]),
    ("S^4", &[127401984, 0, 0, 0, 0, 0]),
];

/// Degree-4 parameters `s = s2^4/48` of S^[4] and T^[[4]].
pub const S_PARAMETERS: (i64, i64) = (664080, 490000);
