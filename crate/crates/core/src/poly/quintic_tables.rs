//! Explicit coefficient tables for the quintic discriminant and the sextic
//! resolvent building blocks, as (coefficient, exponents of a, b, c, d, e).

pub(crate) const DISC: &[(i64, [u8; 5])] = &[
    (256, [5, 0, 0, 0, 3]),
    (-192, [4, 1, 0, 1, 2]),
    (-128, [4, 0, 2, 0, 2]),
    (144, [4, 0, 1, 2, 1]),
    (-27, [4, 0, 0, 4, 0]),
    (144, [3, 2, 1, 0, 2]),
    (-6, [3, 2, 0, 2, 1]),
    (-80, [3, 1, 2, 1, 1]),
    (18, [3, 1, 1, 3, 0]),
    (16, [3, 0, 4, 0, 1]),
    (-4, [3, 0, 3, 2, 0]),
    (-27, [2, 4, 0, 0, 2]),
    (18, [2, 3, 1, 1, 1]),
    (-4, [2, 3, 0, 3, 0]),
    (-4, [2, 2, 3, 0, 1]),
    (1, [2, 2, 2, 2, 0]),
    (-1600, [3, 1, 0, 0, 3]),
    (160, [3, 0, 1, 1, 2]),
    (-36, [3, 0, 0, 3, 1]),
    (1020, [2, 2, 0, 1, 2]),
    (560, [2, 1, 2, 0, 2]),
    (-746, [2, 1, 1, 2, 1]),
    (144, [2, 1, 0, 4, 0]),
    (24, [2, 0, 3, 1, 1]),
    (-6, [2, 0, 2, 3, 0]),
    (-630, [1, 3, 1, 0, 2]),
    (24, [1, 3, 0, 2, 1]),
    (356, [1, 2, 2, 1, 1]),
    (-80, [1, 2, 1, 3, 0]),
    (-72, [1, 1, 4, 0, 1]),
    (18, [1, 1, 3, 2, 0]),
    (108, [0, 5, 0, 0, 2]),
    (-72, [0, 4, 1, 1, 1]),
    (16, [0, 4, 0, 3, 0]),
    (16, [0, 3, 3, 0, 1]),
    (-4, [0, 3, 2, 2, 0]),
    (2000, [2, 0, 1, 0, 3]),
    (-50, [2, 0, 0, 2, 2]),
    (2250, [1, 2, 0, 0, 3]),
    (-2050, [1, 1, 1, 1, 2]),
    (160, [1, 1, 0, 3, 1]),
    (-900, [1, 0, 3, 0, 2]),
    (1020, [1, 0, 2, 2, 1]),
    (-192, [1, 0, 1, 4, 0]),
    (-900, [0, 3, 0, 1, 2]),
    (825, [0, 2, 2, 0, 2]),
    (560, [0, 2, 1, 2, 1]),
    (-128, [0, 2, 0, 4, 0]),
    (-630, [0, 1, 3, 1, 1]),
    (144, [0, 1, 2, 3, 0]),
    (108, [0, 0, 5, 0, 1]),
    (-27, [0, 0, 4, 2, 0]),
    (-2500, [1, 0, 0, 1, 3]),
    (-3750, [0, 1, 1, 0, 3]),
    (2000, [0, 1, 0, 2, 2]),
    (2250, [0, 0, 2, 1, 2]),
    (-1600, [0, 0, 1, 3, 1]),
    (256, [0, 0, 0, 5, 0]),
    (3125, [0, 0, 0, 0, 4]),
];
pub(crate) const B2: &[(i64, [u8; 5])] = &[
    (8, [1, 0, 1, 0, 0]),
    (-3, [0, 2, 0, 0, 0]),
    (-20, [0, 0, 0, 1, 0]),
];
pub(crate) const B4: &[(i64, [u8; 5])] = &[
    (-64, [3, 0, 0, 0, 1]),
    (16, [2, 1, 0, 1, 0]),
    (16, [2, 0, 2, 0, 0]),
    (-16, [1, 2, 1, 0, 0]),
    (3, [0, 4, 0, 0, 0]),
    (240, [1, 1, 0, 0, 1]),
    (-112, [1, 0, 1, 1, 0]),
    (-8, [0, 2, 0, 1, 0]),
    (16, [0, 1, 2, 0, 0]),
    (-400, [0, 0, 1, 0, 1]),
    (240, [0, 0, 0, 2, 0]),
];
pub(crate) const B6: &[(i64, [u8; 5])] = &[
    (-64, [4, 0, 0, 2, 0]),
    (64, [3, 1, 1, 1, 0]),
    (-16, [2, 3, 0, 1, 0]),
    (-16, [2, 2, 2, 0, 0]),
    (8, [1, 4, 1, 0, 0]),
    (-1, [0, 6, 0, 0, 0]),
    (384, [3, 0, 0, 1, 1]),
    (-192, [2, 1, 1, 0, 1]),
    (224, [2, 1, 0, 2, 0]),
    (-128, [2, 0, 2, 1, 0]),
    (48, [1, 3, 0, 0, 1]),
    (-112, [1, 2, 1, 1, 0]),
    (64, [1, 1, 3, 0, 0]),
    (28, [0, 4, 0, 1, 0]),
    (-16, [0, 3, 2, 0, 0]),
    (-1600, [2, 0, 0, 0, 2]),
    (-640, [1, 1, 0, 1, 1]),
    (640, [1, 0, 2, 0, 1]),
    (-64, [1, 0, 1, 2, 0]),
    (-80, [0, 2, 1, 0, 1]),
    (-176, [0, 2, 0, 2, 0]),
    (224, [0, 1, 2, 1, 0]),
    (-64, [0, 0, 4, 0, 0]),
    (4000, [0, 1, 0, 0, 2]),
    (-1600, [0, 0, 1, 1, 1]),
    (320, [0, 0, 0, 3, 0]),
];
