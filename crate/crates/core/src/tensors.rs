//! Elementary-polyhedron tensors and their contractions.
//!
//! Indices run over the five simple subgraphs of a theta-curve with numbered
//! edges, always in this order:
//!
//! | index | subgraph               |
//! |-------|------------------------|
//! | 0     | empty                  |
//! | 1     | theta without edge 1   |
//! | 2     | theta without edge 2   |
//! | 3     | theta without edge 3   |
//! | 4     | full theta-curve       |
//!
//! Docs elsewhere in the crate count these 1..5.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fiber::{ClassTable, FiberClass};
use crate::golden::GoldenNum;

pub const DIM: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Vec5(pub [GoldenNum; DIM]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Mat5(pub [[GoldenNum; DIM]; DIM]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Cubic5(pub [[[GoldenNum; DIM]; DIM]; DIM]);

impl Vec5 {
    pub const ZERO: Vec5 = Vec5([GoldenNum::ZERO; DIM]);

    pub fn iter(&self) -> impl Iterator<Item = &GoldenNum> {
        self.0.iter()
    }

    pub fn add(&self, rhs: &Vec5) -> Vec5 {
        Vec5(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }

    pub fn sub(&self, rhs: &Vec5) -> Vec5 {
        Vec5(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }

    pub fn scale(&self, k: GoldenNum) -> Vec5 {
        Vec5(self.0.map(|x| k * x))
    }

    /// Exact squared Euclidean distance under the real embedding.
    pub fn dist2(&self, rhs: &Vec5) -> GoldenNum {
        self.sub(rhs).iter().map(|&x| x * x).sum()
    }

    pub fn to_real(&self) -> [f64; DIM] {
        self.0.map(|x| x.to_real())
    }
}

impl Index<usize> for Vec5 {
    type Output = GoldenNum;
    fn index(&self, i: usize) -> &GoldenNum {
        &self.0[i]
    }
}

impl fmt::Display for Vec5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Mat5 {
    pub fn identity() -> Mat5 {
        let mut m = Mat5::default();
        for i in 0..DIM {
            m.0[i][i] = GoldenNum::ONE;
        }
        m
    }

    /// Permutation matrix exchanging indices `i` and `j` (0-based).
    pub fn transposition(i: usize, j: usize) -> Mat5 {
        let mut m = Mat5::identity();
        m.0[i][i] = GoldenNum::ZERO;
        m.0[j][j] = GoldenNum::ZERO;
        m.0[i][j] = GoldenNum::ONE;
        m.0[j][i] = GoldenNum::ONE;
        m
    }

    pub fn mul(&self, rhs: &Mat5) -> Mat5 {
        Mat5(std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..DIM).map(|k| self.0[r][k] * rhs.0[k][c]).sum())
        }))
    }

    pub fn is_permutation(&self) -> bool {
        let unit = |x: &GoldenNum| *x == GoldenNum::ONE;
        let zero_or_unit = self.0.iter().flatten().all(|x| x.is_zero() || unit(x));
        let rows = self.0.iter().all(|row| row.iter().filter(|x| unit(x)).count() == 1);
        let cols = (0..DIM).all(|c| (0..DIM).filter(|&r| unit(&self.0[r][c])).count() == 1);
        zero_or_unit && rows && cols
    }

    pub fn is_symmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.0[i][j] == self.0[j][i]))
    }
}

impl Index<(usize, usize)> for Mat5 {
    type Output = GoldenNum;
    fn index(&self, (r, c): (usize, usize)) -> &GoldenNum {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat5 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GoldenNum {
        &mut self.0[r][c]
    }
}

impl Cubic5 {
    /// Sets an entry and all its index permutations.
    fn set_sym(&mut self, i: usize, j: usize, k: usize, v: GoldenNum) {
        for (x, y, z) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            self.0[x][y][z] = v;
        }
    }

    /// Checks invariance under all six permutations of the three indices.
    pub fn is_fully_symmetric(&self) -> bool {
        let t = &self.0;
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                (0..DIM).all(|k| {
                    let v = t[i][j][k];
                    v == t[i][k][j] && v == t[j][i][k] && v == t[j][k][i] && v == t[k][i][j] && v == t[k][j][i]
                })
            })
        })
    }

    /// The `i`-th square slice `t[i][·][·]`.
    pub fn slice(&self, i: usize) -> Mat5 {
        Mat5(self.0[i])
    }
}

impl Index<(usize, usize, usize)> for Cubic5 {
    type Output = GoldenNum;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &GoldenNum {
        &self.0[i][j][k]
    }
}

/// Generalized t-invariants of the five elementary polyhedra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Constants {
    /// Polyhedron `E`, one theta-curve boundary.
    pub phi_e: Vec5,
    /// Polyhedron `J`, two theta-curve boundaries.
    pub phi_j: Mat5,
    /// Polyhedron `T`, three theta-curve boundaries.
    pub phi_t: Cubic5,
    /// Gluing by the edge permutation (23): swaps subgraph indices 3 and 4.
    pub phi_23: Mat5,
    /// Gluing by the edge permutation (13): swaps subgraph indices 2 and 4.
    pub phi_13: Mat5,
}

pub fn constants() -> Constants {
    let one = GoldenNum::ONE;
    let e = GoldenNum::eps_pow;

    let phi_e = Vec5([one, GoldenNum::ZERO, GoldenNum::ZERO, one, e(1)]);

    let mut phi_j = Mat5::identity();
    phi_j[(3, 3)] = e(-2);
    phi_j[(3, 4)] = e(-1);
    phi_j[(4, 3)] = e(-1);
    phi_j[(4, 4)] = -e(-2);

    let mut phi_t = Cubic5::default();
    phi_t.set_sym(0, 0, 0, one);
    phi_t.set_sym(0, 1, 1, one);
    phi_t.set_sym(1, 1, 1, one);
    phi_t.set_sym(2, 2, 3, e(-2));
    phi_t.set_sym(2, 4, 4, e(-2));
    phi_t.set_sym(3, 3, 3, e(-4));
    phi_t.set_sym(3, 3, 4, e(-3));
    phi_t.set_sym(3, 4, 4, -e(-4));
    phi_t.set_sym(4, 4, 4, -e(-7));

    Constants {
        phi_e,
        phi_j,
        phi_t,
        phi_23: Mat5::transposition(2, 3),
        phi_13: Mat5::transposition(1, 3),
    }
}

pub fn mat_vec(m: &Mat5, v: &Vec5) -> Vec5 {
    Vec5(std::array::from_fn(|r| (0..DIM).map(|c| m.0[r][c] * v.0[c]).sum()))
}

/// `Σ t[i][j][k] · v1[i] · v2[j] · v3[k]`
pub fn contract3(t: &Cubic5, v1: &Vec5, v2: &Vec5, v3: &Vec5) -> GoldenNum {
    let mut acc = GoldenNum::ZERO;
    for i in 0..DIM {
        if v1[i].is_zero() {
            continue;
        }
        for j in 0..DIM {
            if v2[j].is_zero() {
                continue;
            }
            let w = v1[i] * v2[j];
            for k in 0..DIM {
                let tijk = t.0[i][j][k];
                if !tijk.is_zero() && !v3[k].is_zero() {
                    acc = acc + tijk * w * v3[k];
                }
            }
        }
    }
    acc
}

/// The two generators `Φ(23)·Φ_J` and `Φ(13)·Φ_J`.
pub fn generators(c: &Constants) -> [Mat5; 2] {
    [c.phi_23.mul(&c.phi_j), c.phi_13.mul(&c.phi_j)]
}

/// Upper bound on the orbit size before the closure is declared inconsistent.
pub const ORBIT_SIZE: usize = 12;

/// Closure of `{Φ(23)Φ_E, Φ(13)Φ_E}` under left multiplication by the two
/// generators, in breadth-first discovery order.
pub fn orbit() -> Result<Vec<Vec5>> {
    let c = constants();
    let gens = generators(&c);
    let mut found: Vec<Vec5> = Vec::new();
    for seed in [mat_vec(&c.phi_23, &c.phi_e), mat_vec(&c.phi_13, &c.phi_e)] {
        if !found.contains(&seed) {
            found.push(seed);
        }
    }
    let mut cursor = 0;
    while cursor < found.len() {
        let v = found[cursor];
        for g in &gens {
            let w = mat_vec(g, &v);
            if !found.contains(&w) {
                found.push(w);
                if found.len() > ORBIT_SIZE {
                    return Err(Error::Orbit(format!(
                        "closure exceeded {ORBIT_SIZE} vectors"
                    )));
                }
            }
        }
        cursor += 1;
    }
    if found.len() != ORBIT_SIZE {
        return Err(Error::Orbit(format!(
            "closure stabilized at {} vectors, expected {ORBIT_SIZE}",
            found.len()
        )));
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabeledVector {
    pub class: FiberClass,
    pub vector: Vec5,
}

/// The orbit with each vector labeled by the fiber class whose word produces it.
///
/// Fails if the class table and the generator closure do not coincide as sets.
pub fn labeled_orbit() -> Result<Vec<LabeledVector>> {
    let closure = orbit()?;
    let table = ClassTable::global();
    let mut labeled: Vec<LabeledVector> = table
        .entries()
        .iter()
        .map(|e| LabeledVector {
            class: e.class,
            vector: e.vector,
        })
        .collect();
    labeled.sort_by_key(|l| l.class);
    for l in &labeled {
        if !closure.contains(&l.vector) {
            return Err(Error::Orbit(format!("class {} vector {} not in closure", l.class, l.vector)));
        }
    }
    let mut distinct: Vec<Vec5> = labeled.iter().map(|l| l.vector).collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != closure.len() {
        return Err(Error::Orbit("class labels are not a bijection onto the closure".into()));
    }
    Ok(labeled)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceTier {
    Min,
    Medial,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairGeometry {
    /// `λ1·μ2 − λ2·μ1 mod 5`, in `0..5`.
    pub det_mod5: u8,
    pub tier: DistanceTier,
    pub dist2: GoldenNum,
}

impl PairGeometry {
    /// `|det|` with the residue read in `{-2, .., 2}`.
    pub fn abs_det(&self) -> u8 {
        self.det_mod5.min(5 - self.det_mod5) % 5
    }
}

/// The three exact squared distances occurring between orbit vectors,
/// ordered from smallest to largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceTiers([GoldenNum; 3]);

impl DistanceTiers {
    pub fn observe(vectors: &[Vec5]) -> Result<DistanceTiers> {
        let mut seen: Vec<GoldenNum> = Vec::new();
        for (i, u) in vectors.iter().enumerate() {
            for v in &vectors[i + 1..] {
                let d = u.dist2(v);
                if !seen.contains(&d) {
                    seen.push(d);
                }
            }
        }
        if seen.len() != 3 {
            return Err(Error::Orbit(format!(
                "expected 3 distinct pair distances, found {}",
                seen.len()
            )));
        }
        seen.sort_by(|x, y| x.to_real().total_cmp(&y.to_real()));
        Ok(DistanceTiers([seen[0], seen[1], seen[2]]))
    }

    pub fn values(&self) -> [GoldenNum; 3] {
        self.0
    }

    pub fn tier_of(&self, dist2: GoldenNum) -> Option<DistanceTier> {
        match self.0.iter().position(|&d| d == dist2)? {
            0 => Some(DistanceTier::Min),
            1 => Some(DistanceTier::Medial),
            _ => Some(DistanceTier::Max),
        }
    }
}

pub fn pair_geometry(tiers: &DistanceTiers, u: &LabeledVector, v: &LabeledVector) -> Result<PairGeometry> {
    if u.class == v.class {
        return Err(Error::Orbit(format!("pair_geometry needs distinct classes, got {} twice", u.class)));
    }
    let dist2 = u.vector.dist2(&v.vector);
    let tier = tiers
        .tier_of(dist2)
        .ok_or_else(|| Error::Orbit(format!("distance {dist2} is not an orbit distance")))?;
    Ok(PairGeometry {
        det_mod5: u.class.det_mod5(&v.class),
        tier,
        dist2,
    })
}

/// Ordered class quadruples with `v1 − v2 = ε·(v3 − v4)` exactly.
pub fn trapezoids(labeled: &[LabeledVector]) -> Vec<[FiberClass; 4]> {
    let mut out = Vec::new();
    let n = labeled.len();
    for i in 0..n {
        for j in 0..n {
            if j == i {
                continue;
            }
            let long = labeled[i].vector.sub(&labeled[j].vector);
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                for l in 0..n {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    let short = labeled[k].vector.sub(&labeled[l].vector);
                    if long == short.scale(GoldenNum::EPS) {
                        out.push([labeled[i].class, labeled[j].class, labeled[k].class, labeled[l].class]);
                    }
                }
            }
        }
    }
    out
}

/// `v(λ,μ) + v(2λ,2μ)` for every class; the map is constant on the orbit.
pub fn doubled_sums(labeled: &[LabeledVector]) -> BTreeMap<FiberClass, Vec5> {
    let lookup: BTreeMap<FiberClass, Vec5> = labeled.iter().map(|l| (l.class, l.vector)).collect();
    lookup
        .iter()
        .map(|(c, v)| (*c, v.add(&lookup[&c.doubled()])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GoldenNum {
        GoldenNum::new(a, b, c, d)
    }

    #[test]
    fn phi_t_slices_transcribed() {
        let t = constants().phi_t;
        let e = GoldenNum::eps_pow;
        let z = GoldenNum::ZERO;
        let one = GoldenNum::ONE;
        // Five square slices, row by row.
        let slices = [
            [[one, z, z, z, z], [z, one, z, z, z], [z; 5], [z; 5], [z; 5]],
            [[z, one, z, z, z], [one, one, z, z, z], [z; 5], [z; 5], [z; 5]],
            [[z; 5], [z; 5], [z, z, z, e(-2), z], [z, z, e(-2), z, z], [z, z, z, z, e(-2)]],
            [[z; 5], [z; 5], [z, z, e(-2), z, z], [z, z, z, e(-4), e(-3)], [z, z, z, e(-3), -e(-4)]],
            [[z; 5], [z; 5], [z, z, z, z, e(-2)], [z, z, z, e(-3), -e(-4)], [z, z, e(-2), -e(-4), -e(-7)]],
        ];
        for (i, s) in slices.iter().enumerate() {
            assert_eq!(t.slice(i).0, *s, "slice {}", i + 1);
        }
        assert!(t.is_fully_symmetric());
    }

    #[test]
    fn constant_entries() {
        let c = constants();
        assert_eq!(c.phi_e, Vec5([GoldenNum::ONE, g(0, 0, 0, 0), g(0, 0, 0, 0), GoldenNum::ONE, g(0, 0, 1, 0)]));
        assert_eq!(c.phi_t[(4, 4, 4)], -GoldenNum::eps_pow(-7));
        assert_eq!(c.phi_t[(0, 0, 0)], GoldenNum::ONE);
        assert_eq!(c.phi_t[(2, 3, 2)], GoldenNum::eps_pow(-2));
        assert_eq!(c.phi_j[(3, 4)], GoldenNum::INV_SQRT_EPS);
        assert!(c.phi_j.is_symmetric());
        for m in [c.phi_23, c.phi_13] {
            assert!(m.is_permutation());
            assert_eq!(m.mul(&m), Mat5::identity());
        }
    }

    #[test]
    fn mat_vec_examples() {
        let c = constants();
        let v = Vec5([g(1, 2, 3, 4), g(5, 6, 7, 8), g(-1, 0, 2, 0), g(0, 0, 0, 9), g(1, 1, 1, 1)]);
        assert_eq!(mat_vec(&c.phi_23, &mat_vec(&c.phi_23, &v)), v);
        let jv = mat_vec(&c.phi_j, &v);
        assert_eq!(&jv.0[..3], &v.0[..3]);
        assert_eq!(
            mat_vec(&c.phi_13, &c.phi_e),
            Vec5([GoldenNum::ONE, GoldenNum::ONE, GoldenNum::ZERO, GoldenNum::ZERO, GoldenNum::SQRT_EPS])
        );
    }

    #[test]
    fn contract3_zero_and_symmetric() {
        let c = constants();
        let vs = orbit().unwrap();
        assert_eq!(contract3(&c.phi_t, &Vec5::ZERO, &vs[0], &vs[1]), GoldenNum::ZERO);
        let (a, b, d) = (vs[3], vs[7], vs[10]);
        let x = contract3(&c.phi_t, &a, &b, &d);
        for (p, q, r) in [(a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)] {
            assert_eq!(contract3(&c.phi_t, &p, &q, &r), x);
        }
    }

    #[test]
    fn orbit_has_twelve_and_contains_phi_e() {
        let vs = orbit().unwrap();
        assert_eq!(vs.len(), 12);
        assert!(vs.contains(&constants().phi_e));
        let c = constants();
        for g in generators(&c) {
            for v in &vs {
                assert!(vs.contains(&mat_vec(&g, v)));
            }
        }
    }

    #[test]
    fn tiers_are_three() {
        let tiers = DistanceTiers::observe(&orbit().unwrap()).unwrap();
        assert_eq!(tiers.values(), [g(2, 0, 0, 0), g(2, 2, 0, 0), g(4, 2, 0, 0)]);
    }

    #[test]
    fn geometry_examples() {
        let labeled = labeled_orbit().unwrap();
        let tiers = DistanceTiers::observe(&orbit().unwrap()).unwrap();
        let get = |l: i64, m: i64| *labeled.iter().find(|x| x.class == FiberClass::new(l, m).unwrap()).unwrap();
        let g1 = pair_geometry(&tiers, &get(1, 0), &get(2, 0)).unwrap();
        assert_eq!((g1.abs_det(), g1.tier), (0, DistanceTier::Max));
        let g2 = pair_geometry(&tiers, &get(1, 0), &get(0, 2)).unwrap();
        assert_eq!((g2.abs_det(), g2.tier), (2, DistanceTier::Min));
        let g3 = pair_geometry(&tiers, &get(1, 0), &get(0, 1)).unwrap();
        assert_eq!((g3.abs_det(), g3.tier), (1, DistanceTier::Medial));
        assert!(pair_geometry(&tiers, &get(1, 0), &get(1, 0)).is_err());
    }
}
