//! Exhaustive evaluation over all unordered triples of fiber classes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fiber::{ClassTable, FiberClass};
use crate::golden::GoldenNum;
use crate::seifert::SeifertPresentation;
use crate::tensors::{constants, contract3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    /// Sorted in canonical class order.
    pub classes: [FiberClass; 3],
    /// `b = −1` with the class representatives as fibers.
    pub presentation: SeifertPresentation,
    pub t: GoldenNum,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    pub entries: Vec<SweepEntry>,
}

/// Number of multisets of size 3 drawn from 12 classes.
pub const TRIPLE_COUNT: usize = 364;

pub fn sweep_all_classes() -> Result<SweepTable> {
    let table = ClassTable::global();
    let classes = FiberClass::all();
    let phi_t = constants().phi_t;
    let mut entries = Vec::with_capacity(TRIPLE_COUNT);
    for (i, &c1) in classes.iter().enumerate() {
        for (j, &c2) in classes.iter().enumerate().skip(i) {
            for &c3 in classes.iter().skip(j) {
                let [e1, e2, e3] = [c1, c2, c3].map(|c| table.get(c));
                let presentation = SeifertPresentation::from_pairs(
                    -1,
                    [e1.representative, e2.representative, e3.representative],
                )?;
                entries.push(SweepEntry {
                    classes: [c1, c2, c3],
                    presentation,
                    t: contract3(&phi_t, &e1.vector, &e2.vector, &e3.vector),
                });
            }
        }
    }
    debug_assert_eq!(entries.len(), TRIPLE_COUNT);
    Ok(SweepTable { entries })
}

impl SweepTable {
    /// Value for an unordered class triple.
    pub fn get(&self, classes: [FiberClass; 3]) -> Option<GoldenNum> {
        let mut key = classes;
        key.sort();
        self.entries.iter().find(|e| e.classes == key).map(|e| e.t)
    }

    /// Distinct values, ordered by their real embedding.
    pub fn distinct_values(&self) -> Vec<GoldenNum> {
        let mut v: Vec<GoldenNum> = self.entries.iter().map(|e| e.t).collect();
        v.sort();
        v.dedup();
        v.sort_by(|x, y| x.to_real().total_cmp(&y.to_real()));
        v
    }

    /// How many class triples take each value.
    pub fn census(&self) -> BTreeMap<GoldenNum, usize> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.t).or_insert(0) += 1;
        }
        m
    }

    /// Shifts `b` over `b_range` on every representative presentation
    /// (compensating in the last fiber so the manifold is unchanged) and
    /// checks that normalization lands on `b = −1` with the recorded value.
    pub fn verify_b_normalization(&self, b_range: std::ops::RangeInclusive<i64>) -> Result<()> {
        for e in &self.entries {
            for b in b_range.clone() {
                let mut p = e.presentation;
                let shift = b - p.b;
                p.b = b;
                let f = &mut p.fibers[2];
                f.beta -= shift * f.alpha;
                let n = p.normalize()?;
                if n.b != -1 || n != e.presentation.normalize()? {
                    return Err(Error::Orbit(format!("{p} normalized to {n}")));
                }
                if p.t_invariant()? != e.t {
                    return Err(Error::Orbit(format!("{p} changed value under b shift")));
                }
            }
        }
        Ok(())
    }
}
