//! Reference tables shared by the golden and acceptance tests.
#![allow(dead_code)]

use dickson::families::{Kind, Sign};
use dickson::{BivarPoly, FamilyId, PolyMatrix};

pub fn p(s: &str) -> BivarPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad fixture `{s}`: {e}"))
}

pub fn matrix(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect(),
    )
    .expect("square fixture")
}

/// Six univariate families, members 0..=5.
pub const UNIVARIATE: [(FamilyId, [&str; 6]); 6] = [
    (
        FamilyId::ChebyshevT,
        [
            "1",
            "x",
            "2x^2 - 1",
            "4x^3 - 3x",
            "8x^4 - 8x^2 + 1",
            "16x^5 - 20x^3 + 5x",
        ],
    ),
    (
        FamilyId::ChebyshevU,
        [
            "1",
            "2x",
            "4x^2 - 1",
            "8x^3 - 4x",
            "16x^4 - 12x^2 + 1",
            "32x^5 - 32x^3 + 6x",
        ],
    ),
    (
        FamilyId::ReducedT,
        [
            "2",
            "x",
            "x^2 - 2",
            "x^3 - 3x",
            "x^4 - 4x^2 + 2",
            "x^5 - 5x^3 + 5x",
        ],
    ),
    (
        FamilyId::ReducedU,
        [
            "1",
            "x",
            "x^2 - 1",
            "x^3 - 2x",
            "x^4 - 3x^2 + 1",
            "x^5 - 4x^3 + 3x",
        ],
    ),
    (
        FamilyId::Lucas,
        [
            "2",
            "x",
            "x^2 + 2",
            "x^3 + 3x",
            "x^4 + 4x^2 + 2",
            "x^5 + 5x^3 + 5x",
        ],
    ),
    (
        FamilyId::Fibonacci,
        [
            "1",
            "x",
            "x^2 + 1",
            "x^3 + 2x",
            "x^4 + 3x^2 + 1",
            "x^5 + 4x^3 + 3x",
        ],
    ),
];

/// Dickson lists for n = 0..=4.
pub const DICKSON: [(Kind, Sign, [&str; 5]); 4] = [
    (
        Kind::First,
        Sign::Minus,
        ["2", "x", "x^2 - 2y", "x^3 - 3xy", "x^4 - 4x^2y + 2y^2"],
    ),
    (
        Kind::Second,
        Sign::Minus,
        ["1", "x", "x^2 - y", "x^3 - 2xy", "x^4 - 3x^2y + y^2"],
    ),
    (
        Kind::First,
        Sign::Plus,
        ["2", "x", "x^2 + 2y", "x^3 + 3xy", "x^4 + 4x^2y + 2y^2"],
    ),
    (
        Kind::Second,
        Sign::Plus,
        ["1", "x", "x^2 + y", "x^3 + 2xy", "x^4 + 3x^2y + y^2"],
    ),
];

/// n = 5 Dickson members as commonly misprinted, and as the recurrence gives them.
pub const DICKSON_N5: [(Kind, Sign, &str, &str); 4] = [
    (
        Kind::First,
        Sign::Minus,
        "x^5 - 5x^3y + 3xy^2",
        "x^5 - 5x^3y + 5xy^2",
    ),
    (
        Kind::Second,
        Sign::Minus,
        "x^5 - 4x^3y + 2xy^2",
        "x^5 - 4x^3y + 3xy^2",
    ),
    (
        Kind::First,
        Sign::Plus,
        "x^5 + 5x^3y + 3xy^2",
        "x^5 + 5x^3y + 5xy^2",
    ),
    (
        Kind::Second,
        Sign::Plus,
        "x^5 + 4x^3y + 2xy^2",
        "x^5 + 4x^3y + 3xy^2",
    ),
];

/// Powers M⁰..M⁴ of [[x, y], [1, 0]].
pub fn generic_powers() -> Vec<PolyMatrix> {
    vec![
        matrix(&[&["1", "0"], &["0", "1"]]),
        matrix(&[&["x", "y"], &["1", "0"]]),
        matrix(&[&["x^2 + y", "xy"], &["x", "y"]]),
        matrix(&[&["x^3 + 2xy", "x^2y + y^2"], &["x^2 + y", "xy"]]),
        matrix(&[
            &["x^4 + 3x^2y + y^2", "x^3y + 2xy^2"],
            &["x^3 + 2xy", "x^2y + y^2"],
        ]),
    ]
}

/// M⁵ as misprinted (two entries wrong).
pub fn generic_power5_misprinted() -> PolyMatrix {
    matrix(&[
        &["x^5 + 3x^3y + 3xy^2", "x^4y + 3x^2y^2 + y^3"],
        &["x^4 + 3x^2y + y^2", "x^3y + y^2"],
    ])
}

/// Symmetric powers M^{⊙1}..M^{⊙4} of [[x, y], [1, 0]] (index 0 is M^{⊙1}).
pub fn generic_sym_powers() -> Vec<PolyMatrix> {
    vec![
        matrix(&[&["x", "y"], &["1", "0"]]),
        matrix(&[&["x^2", "2xy", "y^2"], &["x", "y", "0"], &["1", "0", "0"]]),
        matrix(&[
            &["x^3", "3x^2y", "3xy^2", "y^3"],
            &["x^2", "2xy", "y^2", "0"],
            &["x", "y", "0", "0"],
            &["1", "0", "0", "0"],
        ]),
        matrix(&[
            &["x^4", "4x^3y", "6x^2y^2", "4xy^3", "y^4"],
            &["x^3", "3x^2y", "3xy^2", "y^3", "0"],
            &["x^2", "2xy", "y^2", "0", "0"],
            &["x", "y", "0", "0", "0"],
            &["1", "0", "0", "0", "0"],
        ]),
    ]
}
