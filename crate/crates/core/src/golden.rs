//! Exact arithmetic in `Z[ε, √ε]` with `ε² = ε + 1`.
//!
//! Every element is stored in the basis `{1, ε, √ε, ε√ε}`, so a value is
//! `(a + b·ε) + (c + d·ε)·√ε`. The representation is unique, which makes
//! structural equality the ring equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The golden ratio `(1 + √5) / 2`, the real image of `ε`.
pub const PHI: f64 = 1.618_033_988_749_895;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GoldenNum {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

// (p0 + p1 ε)(q0 + q1 ε) = (p0 q0 + p1 q1) + (p0 q1 + p1 q0 + p1 q1) ε
fn zeps_mul(p: (i64, i64), q: (i64, i64)) -> Option<(i64, i64)> {
    let hi = p.1.checked_mul(q.1)?;
    let r0 = p.0.checked_mul(q.0)?.checked_add(hi)?;
    let r1 = p
        .0
        .checked_mul(q.1)?
        .checked_add(p.1.checked_mul(q.0)?)?
        .checked_add(hi)?;
    Some((r0, r1))
}

// ε (u0 + u1 ε) = u1 + (u0 + u1) ε
fn zeps_times_eps(u: (i64, i64)) -> Option<(i64, i64)> {
    Some((u.1, u.0.checked_add(u.1)?))
}

fn zeps_add(p: (i64, i64), q: (i64, i64)) -> Option<(i64, i64)> {
    Some((p.0.checked_add(q.0)?, p.1.checked_add(q.1)?))
}

impl GoldenNum {
    pub const ZERO: GoldenNum = GoldenNum::new(0, 0, 0, 0);
    pub const ONE: GoldenNum = GoldenNum::new(1, 0, 0, 0);
    /// `ε`
    pub const EPS: GoldenNum = GoldenNum::new(0, 1, 0, 0);
    /// `√ε`
    pub const SQRT_EPS: GoldenNum = GoldenNum::new(0, 0, 1, 0);
    /// `ε^{-1/2} = (ε - 1)·√ε`
    pub const INV_SQRT_EPS: GoldenNum = GoldenNum::new(0, 0, -1, 1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        GoldenNum { a, b, c, d }
    }

    pub const fn from_int(n: i64) -> Self {
        GoldenNum::new(n, 0, 0, 0)
    }

    pub fn quad(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// True when the `√ε` part vanishes, i.e. the value lies in `Z[ε]`.
    pub fn in_zeps(&self) -> bool {
        self.c == 0 && self.d == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let f = || {
            Some(GoldenNum::new(
                self.a.checked_add(rhs.a)?,
                self.b.checked_add(rhs.b)?,
                self.c.checked_add(rhs.c)?,
                self.d.checked_add(rhs.d)?,
            ))
        };
        f().ok_or(Error::Overflow("golden add"))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Self> {
        let f = || {
            Some(GoldenNum::new(
                self.a.checked_neg()?,
                self.b.checked_neg()?,
                self.c.checked_neg()?,
                self.d.checked_neg()?,
            ))
        };
        f().ok_or(Error::Overflow("golden neg"))
    }

    /// Product reduced by `ε² = ε + 1` and `(√ε)² = ε`.
    ///
    /// Writing `x = x1 + y1·√ε` and `y = x2 + y2·√ε` with `x_i, y_i ∈ Z[ε]`,
    /// the product is `(x1 x2 + y1 y2 ε) + (x1 y2 + x2 y1)·√ε`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let f = || {
            let (x1, y1) = ((self.a, self.b), (self.c, self.d));
            let (x2, y2) = ((rhs.a, rhs.b), (rhs.c, rhs.d));
            let rational = zeps_add(zeps_mul(x1, x2)?, zeps_times_eps(zeps_mul(y1, y2)?)?)?;
            let radical = zeps_add(zeps_mul(x1, y2)?, zeps_mul(x2, y1)?)?;
            Some(GoldenNum::new(rational.0, rational.1, radical.0, radical.1))
        };
        f().ok_or(Error::Overflow("golden mul"))
    }

    /// `ε^{half_steps / 2}`, exact for any sign of the exponent.
    ///
    /// Panics on overflow, which needs `|half_steps|` in the hundreds.
    pub fn eps_pow(half_steps: i32) -> Self {
        let base = if half_steps >= 0 {
            Self::SQRT_EPS
        } else {
            Self::INV_SQRT_EPS
        };
        (0..half_steps.unsigned_abs()).fold(Self::ONE, |acc, _| acc * base)
    }

    /// Real embedding `ε ↦ φ`, `√ε ↦ √φ`.
    pub fn to_real(&self) -> f64 {
        let sqrt_phi = PHI.sqrt();
        self.a as f64 + self.b as f64 * PHI + (self.c as f64 + self.d as f64 * PHI) * sqrt_phi
    }
}

impl Add for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("GoldenNum overflow")
    }
}

impl Sub for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("GoldenNum overflow")
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> Self {
        self.checked_neg().expect("GoldenNum overflow")
    }
}

impl Mul for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("GoldenNum overflow")
    }
}

impl Sum for GoldenNum {
    fn sum<I: Iterator<Item = GoldenNum>>(iter: I) -> Self {
        iter.fold(GoldenNum::ZERO, |acc, x| acc + x)
    }
}

impl From<i64> for GoldenNum {
    fn from(n: i64) -> Self {
        GoldenNum::from_int(n)
    }
}

fn fmt_zeps(a: i64, b: i64) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    if a != 0 {
        terms.push((a < 0, a.unsigned_abs().to_string()));
    }
    if b != 0 {
        let mag = match b.unsigned_abs() {
            1 => "e".to_string(),
            m => format!("{m}·e"),
        };
        terms.push((b < 0, mag));
    }
    let mut out = String::new();
    for (i, (neg, mag)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(mag);
    }
    out
}

/// Human format `a + b·e + (c + d·e)·s`, zero terms suppressed
/// (`e` is `ε`, `s` is `√ε`).
impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let rational = fmt_zeps(self.a, self.b);
        let radical = match (self.c, self.d) {
            (0, 0) => String::new(),
            (1, 0) => "s".to_string(),
            (-1, 0) => "-s".to_string(),
            (c, d) => format!("({})·s", fmt_zeps(c, d)),
        };
        match (rational.is_empty(), radical.is_empty()) {
            (false, true) => f.write_str(&rational),
            (true, false) => f.write_str(&radical),
            _ => match radical.strip_prefix('-') {
                Some(rest) => write!(f, "{rational} - {rest}"),
                None => write!(f, "{rational} + {radical}"),
            },
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GoldenJson {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    #[serde(default, skip_deserializing)]
    float: f64,
}

impl Serialize for GoldenNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GoldenJson {
            a: self.a,
            b: self.b,
            c: self.c,
            d: self.d,
            float: self.to_real(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GoldenNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = GoldenJson::deserialize(deserializer)?;
        Ok(GoldenNum::new(j.a, j.b, j.c, j.d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GoldenNum {
        GoldenNum::new(a, b, c, d)
    }

    #[test]
    fn add_examples() {
        let x = g(3, -2, 7, 1);
        assert_eq!(GoldenNum::ZERO + x, x);
        assert_eq!(g(1, 1, 0, 0) + g(2, 1, 0, 0), g(3, 2, 0, 0));
        // (ε + 2) + (2 - ε)
        assert_eq!(g(2, 1, 0, 0) + g(2, -1, 0, 0), g(4, 0, 0, 0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(GoldenNum::EPS * GoldenNum::EPS, g(1, 1, 0, 0));
        assert_eq!(GoldenNum::SQRT_EPS * GoldenNum::SQRT_EPS, g(0, 1, 0, 0));
        assert_eq!(g(1, 1, 0, 0) * g(1, 1, 0, 0), g(2, 3, 0, 0));
    }

    #[test]
    fn eps_pow_examples() {
        assert_eq!(GoldenNum::eps_pow(0), GoldenNum::ONE);
        assert_eq!(GoldenNum::eps_pow(-2), g(-1, 1, 0, 0));
        assert_eq!(GoldenNum::eps_pow(-4), g(2, -1, 0, 0));
        // ε^{-5/2} = (ε - 1)³ √ε = (2ε - 3) √ε
        assert_eq!(GoldenNum::eps_pow(-5), g(0, 0, -3, 2));
        // ε^{-7/2} = (ε - 1)⁴ √ε = (5 - 3ε) √ε
        assert_eq!(GoldenNum::eps_pow(-7), g(0, 0, 5, -3));
        assert_eq!(GoldenNum::eps_pow(-1), GoldenNum::INV_SQRT_EPS);
        for k in -9..=9 {
            let expected = PHI.powf(k as f64 / 2.0);
            assert!((GoldenNum::eps_pow(k).to_real() - expected).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn eps_pow_is_additive() {
        for j in -16..=16 {
            for k in -16..=16 {
                assert_eq!(
                    GoldenNum::eps_pow(j) * GoldenNum::eps_pow(k),
                    GoldenNum::eps_pow(j + k),
                    "j={j} k={k}"
                );
            }
        }
    }

    #[test]
    fn to_real_examples() {
        assert_eq!(GoldenNum::ONE.to_real(), 1.0);
        assert!((GoldenNum::EPS.to_real() - 1.618_033_988_7).abs() < 1e-10);
        assert!((GoldenNum::SQRT_EPS.to_real() - 1.272_019_649_5).abs() < 1e-10);
    }

    #[test]
    fn overflow_is_reported() {
        let big = g(i64::MAX, 0, 0, 0);
        assert_eq!(big.checked_add(GoldenNum::ONE), Err(Error::Overflow("golden add")));
        assert!(g(0, i64::MAX / 2, 0, 0).checked_mul(g(0, 3, 0, 0)).is_err());
        assert!(g(i64::MIN, 0, 0, 0).checked_neg().is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(GoldenNum::ZERO.to_string(), "0");
        assert_eq!(g(3, 1, 0, 0).to_string(), "3 + e");
        assert_eq!(g(2, -1, 0, 0).to_string(), "2 - e");
        assert_eq!(g(0, 2, 0, 0).to_string(), "2·e");
        assert_eq!(g(-1, 0, 0, 0).to_string(), "-1");
        assert_eq!(GoldenNum::SQRT_EPS.to_string(), "s");
        assert_eq!(g(0, 0, -3, 2).to_string(), "(-3 + 2·e)·s");
        assert_eq!(g(1, 0, -1, 0).to_string(), "1 - s");
        assert_eq!(g(1, 1, 2, -1).to_string(), "1 + e + (2 - e)·s");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(g(3, 1, 0, 0)).unwrap();
        assert_eq!(v["a"], 3);
        assert_eq!(v["b"], 1);
        assert_eq!(v["c"], 0);
        assert!((v["float"].as_f64().unwrap() - (3.0 + PHI)).abs() < 1e-12);
        let back: GoldenNum = serde_json::from_value(v).unwrap();
        assert_eq!(back, g(3, 1, 0, 0));
    }

    fn small() -> impl Strategy<Value = GoldenNum> {
        (-100i64..=100, -100i64..=100, -100i64..=100, -100i64..=100)
            .prop_map(|(a, b, c, d)| g(a, b, c, d))
    }

    fn zeps() -> impl Strategy<Value = GoldenNum> {
        (-1000i64..=1000, -1000i64..=1000).prop_map(|(a, b)| g(a, b, 0, 0))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in small(), y in small(), z in small()) {
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * GoldenNum::ONE, x);
            prop_assert_eq!(x - x, GoldenNum::ZERO);
        }

        #[test]
        fn real_embedding_is_homomorphism(x in small(), y in small()) {
            let tol = 1e-9 * (1.0 + x.to_real().abs() * y.to_real().abs());
            prop_assert!(((x + y).to_real() - (x.to_real() + y.to_real())).abs() < 1e-9);
            prop_assert!(((x * y).to_real() - x.to_real() * y.to_real()).abs() < tol);
        }

        #[test]
        fn zeps_closed_under_mul(x in zeps(), y in zeps()) {
            prop_assert!((x * y).in_zeps());
        }
    }
}
