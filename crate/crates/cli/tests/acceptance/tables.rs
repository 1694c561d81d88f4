//! Frozen reference data: the published exponent-type tables for both group
//! collections and the factored products of both sides.

/// Column layout shared by the spectrum tables: the divisors of 168.
pub const DIVISORS: [u64; 16] = [1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168];

pub struct GoldenRow {
    pub id: (u64, u64),
    pub name: &'static str,
    pub multiplicity: u64,
    pub exponent: u64,
    pub values: [u64; 16],
}

const fn row(
    id: (u64, u64),
    name: &'static str,
    multiplicity: u64,
    exponent: u64,
    values: [u64; 16],
) -> GoldenRow {
    GoldenRow {
        id,
        name,
        multiplicity,
        exponent,
        values,
    }
}

pub const TABLE_G: [GoldenRow; 18] = [
    row((4, 1), "C_4", 9, 4, [1, 2, 1, 4, 2, 1, 4, 4, 2, 1, 4, 4, 2, 4, 4, 4]),
    row((6, 1), "D_3", 6, 6, [1, 4, 3, 4, 6, 1, 4, 6, 4, 3, 6, 4, 6, 4, 6, 6]),
    row((7, 1), "C_7", 1, 7, [1, 1, 1, 1, 1, 7, 1, 1, 7, 7, 1, 7, 7, 7, 7, 7]),
    row((8, 3), "D_4", 9, 4, [1, 6, 1, 8, 6, 1, 8, 8, 6, 1, 8, 8, 6, 8, 8, 8]),
    row((14, 1), "D_7", 18, 14, [1, 8, 1, 8, 8, 7, 8, 8, 14, 7, 8, 14, 14, 14, 14, 14]),
    row((24, 3), "SL(2,3)", 21, 12, [1, 2, 9, 8, 18, 1, 8, 24, 2, 9, 24, 8, 18, 8, 24, 24]),
    row((48, 6), "C_24:C_2", 3, 24, [1, 14, 3, 28, 18, 1, 32, 36, 14, 3, 48, 28, 18, 32, 36, 48]),
    row((56, 7), "C_7:D_4", 3, 28, [1, 18, 1, 32, 18, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56]),
    row((84, 1), "C_7:C_12", 6, 84, [1, 2, 15, 16, 30, 7, 16, 72, 14, 21, 72, 28, 42, 28, 84, 84]),
    row((84, 5), "Dic_21", 6, 84, [1, 2, 3, 44, 6, 7, 44, 48, 14, 21, 48, 56, 42, 56, 84, 84]),
    row((84, 11), "C_7:A_4", 21, 42, [1, 4, 57, 4, 60, 7, 4, 60, 28, 63, 60, 28, 84, 28, 84, 84]),
    row((98, 4), "C_7:D_7", 2, 14, [1, 50, 1, 50, 50, 49, 50, 50, 98, 49, 50, 98, 98, 98, 98, 98]),
    row((168, 9), "C_4:F_7", 21, 84, [1, 30, 15, 32, 114, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168]),
    row((168, 15), "C_21:D_4", 9, 84, [1, 22, 3, 64, 54, 7, 64, 96, 70, 21, 96, 112, 126, 112, 168, 168]),
    row((168, 17), "C_7:D_12", 6, 84, [1, 50, 3, 64, 54, 7, 64, 96, 98, 21, 96, 112, 126, 112, 168, 168]),
    row((168, 43), "F_8:C_3", 3, 42, [1, 8, 57, 8, 120, 49, 8, 120, 56, 105, 120, 56, 168, 56, 168, 168]),
    row((224, 106), "D_8:D_7", 3, 56, [1, 52, 1, 96, 52, 7, 128, 96, 112, 7, 128, 168, 112, 224, 168, 224]),
    row((336, 31), "C_7:D_24", 3, 168, [1, 98, 3, 100, 102, 7, 128, 108, 182, 21, 192, 196, 210, 224, 252, 336]),
];

pub const TABLE_H: [GoldenRow; 18] = [
    row((2, 1), "C_2", 21, 2, [1, 2, 1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2]),
    row((3, 1), "C_3", 3, 3, [1, 1, 3, 1, 3, 1, 1, 3, 1, 3, 3, 1, 3, 1, 3, 3]),
    row((12, 1), "Dic_3", 6, 12, [1, 2, 3, 8, 6, 1, 8, 12, 2, 3, 12, 8, 6, 8, 12, 12]),
    row((12, 3), "A_4", 21, 6, [1, 4, 9, 4, 12, 1, 4, 12, 4, 9, 12, 4, 12, 4, 12, 12]),
    row((16, 8), "SD_16", 3, 8, [1, 6, 1, 12, 6, 1, 16, 12, 6, 1, 16, 12, 6, 16, 12, 16]),
    row((21, 1), "C_7:C_3", 4, 21, [1, 1, 15, 1, 15, 7, 1, 15, 7, 21, 15, 7, 21, 7, 21, 21]),
    row((24, 6), "D_12", 6, 12, [1, 14, 3, 16, 18, 1, 16, 24, 14, 3, 24, 16, 18, 16, 24, 24]),
    row((24, 8), "C_3:D_4", 6, 12, [1, 10, 3, 16, 18, 1, 16, 24, 10, 3, 24, 16, 18, 16, 24, 24]),
    row((28, 1), "Dic_7", 15, 28, [1, 2, 1, 16, 2, 7, 16, 16, 14, 7, 16, 28, 14, 28, 28, 28]),
    row((42, 1), "F_7", 18, 42, [1, 8, 15, 8, 36, 7, 8, 36, 14, 21, 36, 14, 42, 14, 42, 42]),
    row((42, 5), "D_21", 6, 42, [1, 22, 3, 22, 24, 7, 22, 24, 28, 21, 24, 28, 42, 28, 42, 42]),
    row((48, 7), "D_24", 3, 24, [1, 26, 3, 28, 30, 1, 32, 36, 26, 3, 48, 28, 30, 32, 36, 48]),
    row((56, 5), "D_28", 27, 28, [1, 30, 1, 32, 30, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56]),
    row((168, 11), "Dic_7:C_6", 3, 84, [1, 18, 15, 32, 102, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168]),
    row((168, 23), "C_14.A_4", 21, 84, [1, 2, 57, 8, 114, 7, 8, 120, 14, 63, 120, 56, 126, 56, 168, 168]),
    row((168, 42), "GL(3,2)", 3, 84, [1, 22, 57, 64, 78, 49, 64, 120, 70, 105, 120, 112, 126, 112, 168, 168]),
    row((294, 10), "C_7:F_7", 2, 42, [1, 50, 15, 50, 162, 49, 50, 162, 98, 147, 162, 98, 294, 98, 294, 294]),
    row((336, 36), "D_12.D_7", 3, 168, [1, 14, 3, 100, 18, 7, 128, 108, 98, 21, 192, 196, 126, 224, 252, 336]),
];

/// Factored product `∏ eᵢ(n)^{multᵢ}` per divisor of 168, identical for
/// both sides. Empty factor list means the value 1.
pub const PRODUCTS: [(u64, &[(u64, i64)]); 16] = [
    (1, &[]),
    (2, &[(2, 221), (3, 36), (5, 37), (7, 9), (11, 9), (13, 3)]),
    (3, &[(3, 126), (5, 27), (19, 24)]),
    (4, &[(2, 500), (3, 3), (5, 10), (7, 3), (11, 6)]),
    (6, &[(2, 215), (3, 174), (5, 34), (13, 3), (17, 3), (19, 21)]),
    (7, &[(7, 107)]),
    (8, &[(2, 530), (5, 4), (11, 6)]),
    (12, &[(2, 464), (3, 144), (5, 28)]),
    (14, &[(2, 191), (3, 33), (5, 9), (7, 113), (13, 3)]),
    (21, &[(3, 147), (5, 3), (7, 104)]),
    (24, &[(2, 488), (3, 132), (5, 28)]),
    (28, &[(2, 374), (3, 3), (7, 110)]),
    (42, &[(2, 185), (3, 177), (5, 3), (7, 104)]),
    (56, &[(2, 398), (7, 104)]),
    (84, &[(2, 347), (3, 114), (7, 104)]),
    (168, &[(2, 365), (3, 105), (7, 104)]),
];
