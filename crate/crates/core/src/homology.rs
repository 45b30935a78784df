//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::Overflow("smith normal form")
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

// row[dst] -= q * row[src]
fn row_axpy(m: &mut [Vec<i64>], dst: usize, src: usize, q: i64) -> Result<()> {
    for c in 0..m[dst].len() {
        let t = q.checked_mul(m[src][c]).ok_or_else(overflow)?;
        m[dst][c] = m[dst][c].checked_sub(t).ok_or_else(overflow)?;
    }
    Ok(())
}

// col[dst] -= q * col[src]
fn col_axpy(m: &mut [Vec<i64>], dst: usize, src: usize, q: i64) -> Result<()> {
    for row in m.iter_mut() {
        let t = q.checked_mul(row[src]).ok_or_else(overflow)?;
        row[dst] = row[dst].checked_sub(t).ok_or_else(overflow)?;
    }
    Ok(())
}

/// Invariant factors `d1 | d2 | …` of a rectangular integer matrix, one per
/// diagonal position (`min(rows, cols)` entries, zeros last).
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // smallest nonzero |entry| in the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| m[r][c] != 0)
                .min_by_key(|&(r, c)| m[r][c].unsigned_abs());
            let Some((pr, pc)) = pivot else {
                // rest is zero
                return finish(m, n);
            };
            m.swap(t, pr);
            swap_cols(&mut m, t, pc);

            let p = m[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let q = m[r][t].div_euclid(p);
                row_axpy(&mut m, r, t, q)?;
                clean &= m[r][t] == 0;
            }
            for c in t + 1..cols {
                let q = m[t][c].div_euclid(p);
                col_axpy(&mut m, c, t, q)?;
                clean &= m[t][c] == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % p != 0));
            match offender {
                Some(r) => row_axpy(&mut m, t, r, -1)?,
                None => break,
            }
        }
    }
    finish(m, n)
}

fn finish(m: Vec<Vec<i64>>, n: usize) -> Result<Vec<i64>> {
    (0..n)
        .map(|i| m[i][i].checked_abs().ok_or_else(overflow))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    /// Invariant factors `≥ 2`, each dividing the next.
    pub torsion: Vec<i64>,
    pub free_rank: usize,
}

impl AbelianGroup {
    /// Group presented by `generators` generators and the relation rows of `matrix`.
    pub fn from_relations(matrix: &[Vec<i64>], generators: usize) -> Result<AbelianGroup> {
        let diag = smith_normal_form(matrix)?;
        let torsion: Vec<i64> = diag.iter().copied().filter(|&d| d > 1).collect();
        let nonzero = diag.iter().filter(|&&d| d != 0).count();
        Ok(AbelianGroup {
            torsion,
            free_rank: generators - nonzero,
        })
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn cyclic(n: i64) -> AbelianGroup {
        match n.abs() {
            0 => AbelianGroup { torsion: vec![], free_rank: 1 },
            1 => AbelianGroup::trivial(),
            k => AbelianGroup { torsion: vec![k], free_rank: 0 },
        }
    }

    /// Order of a finite group, `None` if infinite.
    pub fn order(&self) -> Option<i64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("×"))
        }
    }
}
