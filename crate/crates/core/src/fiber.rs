//! Singular-fiber parameters: A/B words, mod-5 classes and fiber vectors.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tensors::{constants, mat_vec, Constants, Mat5, Vec5};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    /// `(x, y) ↦ (x, x + y)`, realized by the gluing (23).
    A,
    /// `(x, y) ↦ (x + y, y)`, realized by the gluing (13).
    B,
}

impl Letter {
    pub fn act(self, (x, y): (i64, i64)) -> Option<(i64, i64)> {
        match self {
            Letter::A => Some((x, x.checked_add(y)?)),
            Letter::B => Some((x.checked_add(y)?, y)),
        }
    }

    pub fn permutation(self, c: &Constants) -> Mat5 {
        match self {
            Letter::A => c.phi_23,
            Letter::B => c.phi_13,
        }
    }
}

/// Letters in the order they are applied to the seed `(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiberWord(pub Vec<Letter>);

impl FiberWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_to_seed(&self) -> Option<(i64, i64)> {
        self.0.iter().try_fold((1, 1), |p, l| l.act(p))
    }

    /// The fiber vector of the word: the first letter glues `E` through its
    /// permutation, every later letter contributes `Φ_perm · Φ_J`.
    /// `None` for the empty word.
    pub fn vector(&self) -> Option<Vec5> {
        let c = constants();
        let (first, rest) = self.0.split_first()?;
        let mut v = mat_vec(&first.permutation(&c), &c.phi_e);
        for l in rest {
            v = mat_vec(&l.permutation(&c), &mat_vec(&c.phi_j, &v));
        }
        Some(v)
    }
}

impl fmt::Display for FiberWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "A",
                Letter::B => "B",
            })?;
        }
        Ok(())
    }
}

impl Serialize for FiberWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Subtractive Euclid run backward from `(alpha, beta)` to `(1, 1)`.
pub fn fiber_word(alpha: i64, beta: i64) -> Result<FiberWord> {
    if alpha < 1 || beta < 1 {
        return Err(Error::NonPositive { alpha, beta });
    }
    if alpha.gcd(&beta) != 1 {
        return Err(Error::NotCoprime { fiber: 1, alpha, beta });
    }
    let (mut x, mut y) = (alpha, beta);
    let mut letters = Vec::new();
    while (x, y) != (1, 1) {
        if x > y {
            letters.push(Letter::B);
            x -= y;
        } else {
            letters.push(Letter::A);
            y -= x;
        }
    }
    letters.reverse();
    Ok(FiberWord(letters))
}

/// A pair `(λ, μ) ∈ (Z₅ × Z₅ ∖ {0}) / ±`, stored as the lexicographically
/// smaller of `(λ, μ)` and `(−λ, −μ)` with components in `0..5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberClass {
    lambda: u8,
    mu: u8,
}

impl FiberClass {
    /// Canonicalizes any residues; fails for `(0, 0)`.
    pub fn new(lambda: i64, mu: i64) -> Result<FiberClass> {
        let l = lambda.rem_euclid(5) as u8;
        let m = mu.rem_euclid(5) as u8;
        if (l, m) == (0, 0) {
            return Err(Error::ZeroClass { alpha: lambda, beta: mu });
        }
        let neg = ((5 - l) % 5, (5 - m) % 5);
        let (lambda, mu) = (l, m).min(neg);
        Ok(FiberClass { lambda, mu })
    }

    pub fn lambda(&self) -> u8 {
        self.lambda
    }

    pub fn mu(&self) -> u8 {
        self.mu
    }

    /// All twelve classes in canonical order.
    pub fn all() -> Vec<FiberClass> {
        let mut v: Vec<FiberClass> = (0..5)
            .flat_map(|l| (0..5).map(move |m| (l, m)))
            .filter_map(|(l, m)| FiberClass::new(l, m).ok())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// The class of `(2λ, 2μ)`.
    pub fn doubled(&self) -> FiberClass {
        FiberClass::new(2 * self.lambda as i64, 2 * self.mu as i64).expect("nonzero class")
    }

    pub fn det_mod5(&self, other: &FiberClass) -> u8 {
        let d = self.lambda as i64 * other.mu as i64 - other.lambda as i64 * self.mu as i64;
        d.rem_euclid(5) as u8
    }
}

impl fmt::Display for FiberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±({},{})", self.lambda, self.mu)
    }
}

impl Serialize for FiberClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lambda, self.mu].serialize(s)
    }
}

pub fn class_of(alpha: i64, beta: i64) -> Result<FiberClass> {
    FiberClass::new(alpha, beta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub class: FiberClass,
    /// Smallest positive coprime `(α, β)` in the class with a non-empty word.
    pub representative: (i64, i64),
    pub vector: Vec5,
}

/// Class → fiber vector lookup, built once from class representatives.
#[derive(Debug, Clone)]
pub struct ClassTable {
    entries: Vec<ClassEntry>,
}

const REPRESENTATIVE_SEARCH: i64 = 10;

impl ClassTable {
    fn build() -> ClassTable {
        let mut entries: Vec<ClassEntry> = Vec::new();
        for alpha in 1..=REPRESENTATIVE_SEARCH {
            for beta in 1..=REPRESENTATIVE_SEARCH {
                let Ok(word) = fiber_word(alpha, beta) else { continue };
                let Some(vector) = word.vector() else { continue };
                let class = class_of(alpha, beta).expect("coprime pair");
                if entries.iter().all(|e| e.class != class) {
                    entries.push(ClassEntry {
                        class,
                        representative: (alpha, beta),
                        vector,
                    });
                }
            }
        }
        entries.sort_by_key(|e| e.class);
        assert_eq!(entries.len(), 12, "representative search missed a class");
        ClassTable { entries }
    }

    pub fn global() -> &'static ClassTable {
        static TABLE: OnceLock<ClassTable> = OnceLock::new();
        TABLE.get_or_init(ClassTable::build)
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    pub fn get(&self, class: FiberClass) -> &ClassEntry {
        self.entries
            .iter()
            .find(|e| e.class == class)
            .expect("table covers all twelve classes")
    }
}

pub fn class_vector(class: FiberClass) -> Vec5 {
    ClassTable::global().get(class).vector
}

/// Fiber vector through the word route. The empty word, i.e. `(1, 1)`,
/// takes the vector of the class `±(1,1)`.
pub fn fiber_vector(alpha: i64, beta: i64) -> Result<Vec5> {
    let word = fiber_word(alpha, beta)?;
    match word.vector() {
        Some(v) => Ok(v),
        None => Ok(class_vector(class_of(1, 1)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensors::orbit;
    use Letter::{A, B};

    #[test]
    fn word_examples() {
        assert_eq!(fiber_word(1, 1).unwrap(), FiberWord(vec![]));
        assert_eq!(fiber_word(2, 1).unwrap(), FiberWord(vec![B]));
        assert_eq!(fiber_word(5, 2).unwrap(), FiberWord(vec![A, B, B]));
        assert_eq!(fiber_word(5, 2).unwrap().to_string(), "ABB");
    }

    #[test]
    fn word_errors() {
        assert_eq!(fiber_word(4, 2), Err(Error::NotCoprime { fiber: 1, alpha: 4, beta: 2 }));
        assert_eq!(fiber_word(0, 1), Err(Error::NonPositive { alpha: 0, beta: 1 }));
        assert!(fiber_word(3, -1).is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(class_of(7, 3).unwrap(), FiberClass::new(2, 3).unwrap());
        assert_eq!((class_of(7, 3).unwrap().lambda(), class_of(7, 3).unwrap().mu()), (2, 3));
        assert_eq!(class_of(4, 1).unwrap().to_string(), "±(1,4)");
        assert_eq!(class_of(0, 7).unwrap().to_string(), "±(0,2)");
        assert_eq!(class_of(-3, 2).unwrap(), class_of(3, -2).unwrap());
        assert!(matches!(class_of(5, 10), Err(Error::ZeroClass { .. })));
        assert_eq!(FiberClass::all().len(), 12);
    }

    #[test]
    fn fiber_vector_examples() {
        let c = constants();
        assert_eq!(fiber_vector(2, 1).unwrap(), mat_vec(&c.phi_13, &c.phi_e));
        assert_eq!(fiber_vector(7, 3).unwrap(), fiber_vector(2, 3).unwrap());
        assert_eq!(fiber_word(5, 1).unwrap(), FiberWord(vec![B, B, B, B]));
        assert_eq!(fiber_vector(5, 1).unwrap(), class_vector(FiberClass::new(0, 1).unwrap()));
        assert_eq!(fiber_vector(1, 1).unwrap(), class_vector(FiberClass::new(1, 1).unwrap()));
    }

    #[test]
    fn representatives() {
        let t = ClassTable::global();
        let rep = |l, m| t.get(FiberClass::new(l, m).unwrap()).representative;
        assert_eq!(rep(0, 1), (5, 1));
        assert_eq!(rep(0, 2), (5, 2));
        assert_eq!(rep(1, 0), (1, 5));
        assert_eq!(rep(1, 1), (1, 6));
        assert_eq!(rep(2, 1), (2, 1));
        assert_eq!(class_vector(FiberClass::new(2, 1).unwrap()), fiber_vector(2, 1).unwrap());
    }

    #[test]
    fn word_round_trip_and_length() {
        for alpha in 1..=500i64 {
            for beta in 1..=500i64 {
                if alpha.gcd(&beta) != 1 {
                    continue;
                }
                let w = fiber_word(alpha, beta).unwrap();
                assert_eq!(w.apply_to_seed(), Some((alpha, beta)));
                if alpha <= 60 && beta <= 60 {
                    // subtractive Euclid: sum of partial quotients of α/β, minus one
                    let (mut x, mut y, mut quotients) = (alpha, beta, 0);
                    while y != 0 {
                        quotients += x / y;
                        (x, y) = (y, x % y);
                    }
                    assert_eq!(w.len() as i64, quotients - 1, "({alpha},{beta})");
                }
            }
        }
    }

    #[test]
    fn vectors_land_in_orbit() {
        let orb = orbit().unwrap();
        for alpha in 1..=40i64 {
            for beta in 1..=40i64 {
                if alpha.gcd(&beta) == 1 {
                    assert!(orb.contains(&fiber_vector(alpha, beta).unwrap()));
                }
            }
        }
    }
}
