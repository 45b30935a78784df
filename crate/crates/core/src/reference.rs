//! Published reference values used by `selfcheck`, the `table` command and
//! the acceptance suite. Transcribed independently of the constructions in
//! [`crate::tensors`].

use crate::golden::GoldenNum;
use crate::tensors::Vec5;

const fn g(a: i64, b: i64, c: i64, d: i64) -> GoldenNum {
    GoldenNum::new(a, b, c, d)
}

const O: GoldenNum = g(1, 0, 0, 0);
const Z: GoldenNum = g(0, 0, 0, 0);
const E: GoldenNum = g(0, 1, 0, 0);
/// `ε^{1/2}`
const S: GoldenNum = g(0, 0, 1, 0);
/// `−ε^{-1/2} = (1 − ε)·√ε`
const NEG_INV_S: GoldenNum = g(0, 0, 1, -1);
/// `−ε^{-1} = 1 − ε`
const NEG_INV_E: GoldenNum = g(1, -1, 0, 0);
/// `ε^{-3/2} = (2 − ε)·√ε`
const INV_S3: GoldenNum = g(0, 0, 2, -1);

/// The twelve fiber vectors in printed order, each with its printed signed
/// parameter pair mod 5.
pub const PRINTED_ORBIT: [((i64, i64), Vec5); 12] = [
    ((1, 1), Vec5([O, Z, Z, E, Z])),
    ((1, 0), Vec5([O, Z, E, Z, Z])),
    ((0, 1), Vec5([O, E, Z, Z, Z])),
    ((1, 2), Vec5([O, Z, O, Z, S])),
    ((2, 1), Vec5([O, O, Z, Z, S])),
    ((1, -1), Vec5([O, Z, Z, O, S])),
    ((1, -2), Vec5([O, Z, O, O, NEG_INV_S])),
    ((2, -1), Vec5([O, O, Z, O, NEG_INV_S])),
    ((2, -2), Vec5([O, O, O, Z, NEG_INV_S])),
    ((2, 0), Vec5([O, O, NEG_INV_E, O, INV_S3])),
    ((0, 2), Vec5([O, NEG_INV_E, O, O, INV_S3])),
    ((2, 2), Vec5([O, O, O, NEG_INV_E, INV_S3])),
];

/// `Φ_T` as five printed square slices `t[i][·][·]`.
pub fn printed_phi_t() -> [[[GoldenNum; 5]; 5]; 5] {
    let e = GoldenNum::eps_pow;
    [
        [[O, Z, Z, Z, Z], [Z, O, Z, Z, Z], [Z; 5], [Z; 5], [Z; 5]],
        [[Z, O, Z, Z, Z], [O, O, Z, Z, Z], [Z; 5], [Z; 5], [Z; 5]],
        [[Z; 5], [Z; 5], [Z, Z, Z, e(-2), Z], [Z, Z, e(-2), Z, Z], [Z, Z, Z, Z, e(-2)]],
        [[Z; 5], [Z; 5], [Z, Z, e(-2), Z, Z], [Z, Z, Z, e(-4), e(-3)], [Z, Z, Z, e(-3), -e(-4)]],
        [[Z; 5], [Z; 5], [Z, Z, Z, Z, e(-2)], [Z, Z, Z, e(-3), -e(-4)], [Z, Z, e(-2), -e(-4), -e(-7)]],
    ]
}

pub fn printed_phi_e() -> Vec5 {
    Vec5([O, Z, Z, O, S])
}

pub fn printed_phi_j() -> [[GoldenNum; 5]; 5] {
    let e = GoldenNum::eps_pow;
    [
        [O, Z, Z, Z, Z],
        [Z, O, Z, Z, Z],
        [Z, Z, O, Z, Z],
        [Z, Z, Z, e(-2), e(-1)],
        [Z, Z, Z, e(-1), -e(-2)],
    ]
}

pub fn printed_phi_23() -> [[GoldenNum; 5]; 5] {
    [
        [O, Z, Z, Z, Z],
        [Z, O, Z, Z, Z],
        [Z, Z, Z, O, Z],
        [Z, Z, O, Z, Z],
        [Z, Z, Z, Z, O],
    ]
}

pub fn printed_phi_13() -> [[GoldenNum; 5]; 5] {
    [
        [O, Z, Z, Z, Z],
        [Z, Z, Z, O, Z],
        [Z, Z, O, Z, Z],
        [Z, O, Z, Z, Z],
        [Z, Z, Z, Z, O],
    ]
}

#[derive(Debug, Clone, Copy)]
pub struct ComparisonRow {
    pub presentation: &'static str,
    pub h1: &'static str,
    pub t: GoldenNum,
}

/// Pairs of small Seifert manifolds with equal `H_1` and different `t`.
pub const COMPARISON_TABLE: [ComparisonRow; 6] = [
    ComparisonRow { presentation: "-1; (2,1) (2,1) (2,1)", h1: "Z_2×Z_2", t: g(3, 1, 0, 0) },
    ComparisonRow { presentation: "-1; (2,1) (2,1) (4,1)", h1: "Z_2×Z_2", t: g(1, 0, 0, 0) },
    ComparisonRow { presentation: "-1; (2,1) (2,1) (3,1)", h1: "Z_4", t: g(3, 1, 0, 0) },
    ComparisonRow { presentation: "-1; (2,1) (2,1) (5,1)", h1: "Z_4", t: g(2, 3, 0, 0) },
    ComparisonRow { presentation: "-1; (2,1) (2,1) (3,2)", h1: "Z_8", t: g(3, 2, 0, 0) },
    ComparisonRow { presentation: "-1; (2,1) (2,1) (5,2)", h1: "Z_8", t: g(2, -1, 0, 0) },
];

#[derive(Debug, Clone, Copy)]
pub struct Anchor {
    pub name: &'static str,
    pub presentation: &'static str,
    pub t: GoldenNum,
}

/// Known values; lens spaces are entered as `(−1; (α,β) (0,1) (1,1))`.
pub const ANCHORS: [Anchor; 4] = [
    Anchor { name: "S^3", presentation: "-1; (1,1) (0,1) (1,1)", t: g(1, 0, 0, 0) },
    Anchor { name: "RP^3", presentation: "-1; (2,1) (0,1) (1,1)", t: g(1, 1, 0, 0) },
    Anchor { name: "S^2 x S^1", presentation: "-1; (0,1) (0,1) (1,1)", t: g(2, 1, 0, 0) },
    Anchor { name: "L(5,2)", presentation: "-1; (5,2) (0,1) (1,1)", t: g(0, 0, 0, 0) },
];

/// Values named explicitly alongside the closed form; all twelve sweep
/// values must include them.
pub const NAMED_VALUES: [GoldenNum; 10] = [
    g(0, 0, 0, 0),
    g(1, 0, 0, 0),
    g(5, 0, 0, 0),
    g(2, 1, 0, 0),
    g(2, -1, 0, 0),
    g(3, -1, 0, 0),
    g(3, 2, 0, 0),
    g(3, 1, 0, 0),
    g(2, 3, 0, 0),
    g(1, 1, 0, 0),
];
