//! Small Seifert presentations `(b; (α1,β1) (α2,β2) (α3,β3))` over `S²`.
//!
//! Degenerate fibers are allowed: `α = 1` folds into `b` and yields a lens
//! space, `α = 0` (with `β = ±1`) yields a connected sum of lens spaces.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fiber::{class_of, class_vector, FiberClass};
use crate::golden::GoldenNum;
use crate::homology::AbelianGroup;
use crate::tensors::{constants, contract3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber {
    pub alpha: i64,
    pub beta: i64,
}

impl Fiber {
    pub const fn new(alpha: i64, beta: i64) -> Fiber {
        Fiber { alpha, beta }
    }

    /// `gcd(|α|, |β|) = 1`, where `gcd(0, x) = |x|`.
    pub fn is_coprime(&self) -> bool {
        self.alpha.gcd(&self.beta) == 1
    }

    pub fn class(&self) -> Result<FiberClass> {
        class_of(self.alpha, self.beta)
    }

    /// `(−α, −β)`, the same fiber with the opposite orientation pair.
    pub fn flipped(&self) -> Fiber {
        Fiber::new(-self.alpha, -self.beta)
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

impl Serialize for Fiber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.alpha, self.beta].serialize(s)
    }
}

impl From<(i64, i64)> for Fiber {
    fn from((alpha, beta): (i64, i64)) -> Fiber {
        Fiber::new(alpha, beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeifertPresentation {
    pub b: i64,
    pub fibers: [Fiber; 3],
}

impl SeifertPresentation {
    /// Validates coprimality of every fiber.
    pub fn new(b: i64, fibers: [Fiber; 3]) -> Result<SeifertPresentation> {
        for (i, f) in fibers.iter().enumerate() {
            if !f.is_coprime() {
                return Err(Error::NotCoprime {
                    fiber: i + 1,
                    alpha: f.alpha,
                    beta: f.beta,
                });
            }
        }
        Ok(SeifertPresentation { b, fibers })
    }

    pub fn from_pairs(b: i64, pairs: [(i64, i64); 3]) -> Result<SeifertPresentation> {
        SeifertPresentation::new(b, pairs.map(Fiber::from))
    }

    /// `b + Σ βᵢ/αᵢ`; `None` when some `αᵢ = 0`.
    pub fn euler_number(&self) -> Option<Ratio<i64>> {
        self.fibers.iter().try_fold(Ratio::from_integer(self.b), |acc, f| {
            (f.alpha != 0).then(|| acc + Ratio::new(f.beta, f.alpha))
        })
    }

    /// Equivalent presentation with `b = −1`.
    ///
    /// Fibers with `α < 0` are flipped to `(−α, −β)`. The shift `b + 1` is
    /// absorbed by the last fiber with `α ≠ 0` as `β ↦ β + (b + 1)·α`. If every
    /// `α` is zero `b` carries no information and is left as is.
    pub fn normalize(&self) -> Result<SeifertPresentation> {
        let mut fibers = self.fibers.map(|f| if f.alpha < 0 { f.flipped() } else { f });
        let Some(idx) = fibers.iter().rposition(|f| f.alpha != 0) else {
            return Ok(SeifertPresentation { b: self.b, fibers });
        };
        let shift = self.b.checked_add(1).ok_or(Error::Overflow("normalize"))?;
        let f = &mut fibers[idx];
        f.beta = shift
            .checked_mul(f.alpha)
            .and_then(|x| x.checked_add(f.beta))
            .ok_or(Error::Overflow("normalize"))?;
        Ok(SeifertPresentation { b: -1, fibers })
    }

    pub fn classes(&self) -> Result<[FiberClass; 3]> {
        let [f1, f2, f3] = self.fibers;
        Ok([f1.class()?, f2.class()?, f3.class()?])
    }

    /// Tensor route: normalize, map fibers to their class vectors and
    /// contract them against `Φ_T`.
    pub fn t_invariant(&self) -> Result<GoldenNum> {
        let n = self.normalize()?;
        let [v1, v2, v3] = n.classes()?.map(class_vector);
        Ok(contract3(&constants().phi_t, &v1, &v2, &v3))
    }

    /// Relation matrix of `H_1`: rows `αᵢ qᵢ + βᵢ h` and `q1 + q2 + q3 − b h`.
    pub fn h1_matrix(&self) -> Vec<Vec<i64>> {
        let [f1, f2, f3] = self.fibers;
        vec![
            vec![f1.alpha, 0, 0, f1.beta],
            vec![0, f2.alpha, 0, f2.beta],
            vec![0, 0, f3.alpha, f3.beta],
            vec![1, 1, 1, -self.b],
        ]
    }

    pub fn h1(&self) -> Result<AbelianGroup> {
        AbelianGroup::from_relations(&self.h1_matrix(), 4)
    }

    /// `|b·α1α2α3 + Σ βᵢ·αⱼαₖ|`, the order of `H_1` when finite.
    pub fn homology_order(&self) -> Option<i64> {
        let [f1, f2, f3] = self.fibers;
        let prod = f1.alpha.checked_mul(f2.alpha)?.checked_mul(f3.alpha)?;
        let terms = [
            self.b.checked_mul(prod)?,
            f1.beta.checked_mul(f2.alpha)?.checked_mul(f3.alpha)?,
            f2.beta.checked_mul(f1.alpha)?.checked_mul(f3.alpha)?,
            f3.beta.checked_mul(f1.alpha)?.checked_mul(f2.alpha)?,
        ];
        terms
            .iter()
            .try_fold(0i64, |acc, &t| acc.checked_add(t))?
            .checked_abs()
    }
}

/// Canonical text form `b; (a1,b1) (a2,b2) (a3,b3)`.
impl fmt::Display for SeifertPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [f1, f2, f3] = self.fibers;
        write!(f, "{}; {} {} {}", self.b, f1, f2, f3)
    }
}

impl Serialize for SeifertPresentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The trivial fiber used to pad two-fiber (lens) inputs.
pub const TRIVIAL_FIBER: Fiber = Fiber::new(1, 0);

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with(['-', '+']));
        let digits = rest[sign..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected integer"));
        }
        let text = &rest[..sign + digits];
        let value = text.parse().map_err(|_| self.err(format!("integer out of range: {text}")))?;
        self.pos += sign + digits;
        Ok(value)
    }

    fn fiber(&mut self) -> Result<Fiber> {
        self.expect('(')?;
        let alpha = self.int()?;
        self.expect(',')?;
        let beta = self.int()?;
        self.expect(')')?;
        Ok(Fiber::new(alpha, beta))
    }
}

/// Parses `"b; (a1,b1) (a2,b2) (a3,b3)"`. A two-fiber input is padded with
/// the trivial fiber `(1,0)`.
pub fn parse_presentation(s: &str) -> Result<SeifertPresentation> {
    let mut cur = Cursor { src: s, pos: 0 };
    let b = cur.int()?;
    cur.expect(';')?;
    let mut fibers = Vec::with_capacity(3);
    while !cur.at_end() {
        if fibers.len() == 3 {
            return Err(cur.err("more than three fibers"));
        }
        fibers.push(cur.fiber()?);
    }
    match fibers.len() {
        2 => fibers.push(TRIVIAL_FIBER),
        3 => {}
        n => return Err(cur.err(format!("expected 2 or 3 fibers, found {n}"))),
    }
    SeifertPresentation::new(b, [fibers[0], fibers[1], fibers[2]])
}

impl FromStr for SeifertPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LensParams {
    pub p: i64,
    pub q: i64,
}

impl fmt::Display for LensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `(g, x, y)` with `a·x + b·y = g`, `g ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Lens space of the two-fiber presentation `(b; f1, f2)`.
///
/// `b` is first folded into the second fiber (`β2 ↦ β2 + b·α2`), then
/// `p = α1β2 + β1α2` and `q = α2λ − β2μ` with `α1λ + β1μ = 1`.
pub fn lens_reduce(b: i64, f1: Fiber, f2: Fiber) -> Result<LensParams> {
    for (i, f) in [f1, f2].iter().enumerate() {
        if !f.is_coprime() {
            return Err(Error::NotCoprime {
                fiber: i + 1,
                alpha: f.alpha,
                beta: f.beta,
            });
        }
    }
    let of = || Error::Overflow("lens_reduce");
    let beta2 = b
        .checked_mul(f2.alpha)
        .and_then(|x| x.checked_add(f2.beta))
        .ok_or_else(of)?;
    let p = f1
        .alpha
        .checked_mul(beta2)
        .and_then(|x| x.checked_add(f1.beta.checked_mul(f2.alpha)?))
        .ok_or_else(of)?;
    let (_, lambda, mu) = ext_gcd(f1.alpha, f1.beta);
    let q = f2
        .alpha
        .checked_mul(lambda)
        .and_then(|x| x.checked_sub(beta2.checked_mul(mu)?))
        .ok_or_else(of)?;
    Ok(LensParams { p, q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(b: i64, pairs: [(i64, i64); 3]) -> SeifertPresentation {
        SeifertPresentation::from_pairs(b, pairs).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            pres(0, [(2, 1), (3, 1), (5, 4)]).normalize().unwrap(),
            pres(-1, [(2, 1), (3, 1), (5, 9)])
        );
        let p = pres(-1, [(2, 1), (2, 1), (2, 1)]);
        assert_eq!(p.normalize().unwrap(), p);
        assert_eq!(
            pres(-2, [(3, 2), (4, 3), (5, 1)]).normalize().unwrap(),
            pres(-1, [(3, 2), (4, 3), (5, -4)])
        );
        assert_eq!(
            pres(-1, [(-3, 2), (4, 3), (5, 1)]).normalize().unwrap(),
            pres(-1, [(3, -2), (4, 3), (5, 1)])
        );
        // α = 0 fibers are skipped when absorbing b
        assert_eq!(
            pres(2, [(2, 1), (3, 1), (0, 1)]).normalize().unwrap(),
            pres(-1, [(2, 1), (3, 10), (0, 1)])
        );
        let degenerate = pres(4, [(0, 1), (0, -1), (0, 1)]);
        assert_eq!(degenerate.normalize().unwrap(), degenerate);
    }

    #[test]
    fn t_examples() {
        let e = |a, b| GoldenNum::new(a, b, 0, 0);
        assert_eq!(pres(-1, [(2, 1), (2, 1), (2, 1)]).t_invariant().unwrap(), e(3, 1));
        assert_eq!(pres(-1, [(2, 1), (2, 1), (5, 1)]).t_invariant().unwrap(), e(2, 3));
        assert_eq!(pres(-1, [(5, 2), (0, 1), (1, 1)]).t_invariant().unwrap(), e(0, 0));
    }

    #[test]
    fn lens_reduce_examples() {
        assert_eq!(lens_reduce(0, Fiber::new(2, 1), Fiber::new(2, 1)).unwrap().p, 4);
        assert_eq!(
            lens_reduce(0, Fiber::new(1, 0), Fiber::new(3, 1)).unwrap(),
            LensParams { p: 1, q: 3 }
        );
        assert_eq!(
            lens_reduce(0, Fiber::new(2, 1), Fiber::new(3, 1)).unwrap(),
            LensParams { p: 5, q: -1 }
        );
        assert!(lens_reduce(0, Fiber::new(2, 4), Fiber::new(3, 1)).is_err());
    }

    #[test]
    fn ext_gcd_identity() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(g, a.gcd(&b), "({a},{b})");
                assert_eq!(a * x + b * y, g, "({a},{b})");
            }
        }
        assert_eq!(ext_gcd(2, 1), (1, 0, 1));
    }

    #[test]
    fn h1_examples() {
        let h = |p: SeifertPresentation| p.h1().unwrap().to_string();
        assert_eq!(h(pres(-1, [(2, 1), (2, 1), (2, 1)])), "Z_2×Z_2");
        assert_eq!(h(pres(-1, [(2, 1), (2, 1), (3, 2)])), "Z_8");
        assert_eq!(h(pres(-1, [(2, 1), (2, 1), (5, 1)])), "Z_4");
        // S² × S¹
        assert_eq!(h(pres(0, [(1, 0), (1, 0), (1, 0)])), "Z");
        assert_eq!(h(pres(0, [(1, 1), (1, 0), (1, 0)])), "0");
    }

    #[test]
    fn parse_examples() {
        let p = parse_presentation("-1; (2,1) (2,1) (3,2)").unwrap();
        assert_eq!(p, pres(-1, [(2, 1), (2, 1), (3, 2)]));
        let p = parse_presentation("0; (2,1) (2,1)").unwrap();
        assert_eq!(p, pres(0, [(2, 1), (2, 1), (1, 0)]));
        assert_eq!(
            parse_presentation("-1; (2,2) (2,1) (3,2)"),
            Err(Error::NotCoprime { fiber: 1, alpha: 2, beta: 2 })
        );
        assert_eq!(
            parse_presentation("-1; (2,2) (2,1) (3,2)").unwrap_err().to_string(),
            "fiber 1 not coprime: (2,2)"
        );
        let p = parse_presentation("  +3 ;( -2 , 1 )(5,-3)  (7, 2) ").unwrap();
        assert_eq!(p, pres(3, [(-2, 1), (5, -3), (7, 2)]));
    }

    #[test]
    fn parse_errors_carry_columns() {
        let col = |s: &str| match parse_presentation(s) {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(col("x; (1,1) (1,1)"), 1);
        assert_eq!(col("-1 (2,1) (2,1)"), 4);
        assert_eq!(col("-1; (2,1) (2 1)"), 14);
        assert_eq!(col("-1; (2,1)"), 10);
        assert_eq!(col("-1; (2,1) (2,1) (2,1) (2,1)"), 23);
        assert_eq!(col("-1; (2,1) (2,1) (99999999999999999999,1)"), 18);
    }

    #[test]
    fn display_is_canonical() {
        let p = pres(-1, [(2, 1), (2, 1), (3, 2)]);
        assert_eq!(p.to_string(), "-1; (2,1) (2,1) (3,2)");
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn euler_number() {
        let p = pres(0, [(2, 1), (3, 1), (5, 4)]);
        assert_eq!(p.euler_number(), Some(Ratio::new(1, 2) + Ratio::new(1, 3) + Ratio::new(4, 5)));
        assert_eq!(pres(0, [(2, 1), (0, 1), (1, 0)]).euler_number(), None);
    }
}
