//! Deterministic end-to-end checks of every published claim the crate
//! reproduces. Each check reports pass/fail with a one-line detail.

use std::collections::BTreeSet;
use std::time::Instant;

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::closed_form::{reconcile, t_closed, UnitConvention};
use crate::error::Result;
use crate::fiber::{class_of, class_vector, fiber_vector, FiberClass};
use crate::golden::GoldenNum;
use crate::reference;
use crate::seifert::{parse_presentation, SeifertPresentation};
use crate::sweep::{sweep_all_classes, SweepTable};
use crate::tensors::{
    constants, labeled_orbit, orbit, pair_geometry, trapezoids, DistanceTier, DistanceTiers, Vec5,
};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub micros: u128,
}

fn outcome(id: u8, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        micros: start.elapsed().as_micros(),
    }
}

pub fn check_constants() -> Result<(bool, String)> {
    let c = constants();
    let checks = [
        ("phi_E", c.phi_e == reference::printed_phi_e()),
        ("phi_J", c.phi_j.0 == reference::printed_phi_j()),
        ("phi_T", c.phi_t.0 == reference::printed_phi_t()),
        ("phi_23", c.phi_23.0 == reference::printed_phi_23()),
        ("phi_13", c.phi_13.0 == reference::printed_phi_13()),
        ("phi_T symmetric", c.phi_t.is_fully_symmetric()),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Ok((failed.is_empty(), if failed.is_empty() { "all entries match".into() } else { format!("mismatch: {}", failed.join(", ")) }))
}

pub fn check_orbit() -> Result<(bool, String)> {
    let found: BTreeSet<Vec5> = orbit()?.into_iter().collect();
    let printed: BTreeSet<Vec5> = reference::PRINTED_ORBIT.iter().map(|(_, v)| *v).collect();
    let labeled = labeled_orbit()?;
    let mut label_mismatch = Vec::new();
    for ((l, m), v) in reference::PRINTED_ORBIT {
        let printed_class = class_of(l, m)?;
        if let Some(x) = labeled.iter().find(|x| x.vector == v) {
            if x.class != printed_class {
                label_mismatch.push(format!("{printed_class} printed, {} derived", x.class));
            }
        }
    }
    let ok = found.len() == 12 && found == printed;
    let detail = format!(
        "{} vectors, equals printed set: {}, printed labels {}",
        found.len(),
        found == printed,
        if label_mismatch.is_empty() { "agree".to_string() } else { format!("differ: {}", label_mismatch.join("; ")) }
    );
    Ok((ok, detail))
}

pub fn check_geometry() -> Result<(bool, String)> {
    let labeled = labeled_orbit()?;
    let tiers = DistanceTiers::observe(&orbit()?)?;
    let mut pairs = 0;
    let mut bad = 0;
    for (i, u) in labeled.iter().enumerate() {
        for v in &labeled[i + 1..] {
            let g = pair_geometry(&tiers, u, v)?;
            let expected = match g.abs_det() {
                0 => DistanceTier::Max,
                1 => DistanceTier::Medial,
                _ => DistanceTier::Min,
            };
            pairs += 1;
            bad += usize::from(g.tier != expected);
        }
    }
    Ok((pairs == 66 && bad == 0, format!("{pairs} pairs, {bad} off-tier")))
}

pub fn check_anchors() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for a in reference::ANCHORS {
        let t = parse_presentation(a.presentation)?.t_invariant()?;
        ok &= t == a.t;
        parts.push(format!("t({}) = {}", a.name, t));
    }
    Ok((ok, parts.join(", ")))
}

pub fn check_comparison_table() -> Result<(bool, String)> {
    let mut ok = true;
    let mut bad = Vec::new();
    for row in reference::COMPARISON_TABLE {
        let p = parse_presentation(row.presentation)?;
        let t = p.t_invariant()?;
        let h1 = p.h1()?.to_string();
        if t != row.t || h1 != row.h1 {
            ok = false;
            bad.push(format!("{}: t {t}, H1 {h1}", row.presentation));
        }
    }
    Ok((ok, if ok { "6/6 rows (t and H1)".into() } else { bad.join("; ") }))
}

pub fn check_distinct_values(sweep: &SweepTable) -> Result<(bool, String)> {
    let values = sweep.distinct_values();
    let named_present = reference::NAMED_VALUES.iter().all(|v| values.contains(v));
    let closed_in_zeps = values.iter().all(GoldenNum::in_zeps);
    sweep.verify_b_normalization(-5..=5)?;
    let listed: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    Ok((
        sweep.entries.len() == 364 && values.len() == 12 && named_present && closed_in_zeps,
        format!("{} triples, {} distinct: {}", sweep.entries.len(), values.len(), listed.join(", ")),
    ))
}

pub fn check_mod5_invariance() -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut bad = 0;
    for alpha in 1..=60i64 {
        for beta in 1..=60i64 {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            pairs += 1;
            let by_word = fiber_vector(alpha, beta)?;
            bad += usize::from(by_word != class_vector(class_of(alpha, beta)?));
        }
    }
    Ok((bad == 0, format!("{pairs} coprime pairs, {bad} class-dependent")))
}

fn random_fiber(rng: &mut StdRng, nonzero_alpha: bool) -> (i64, i64) {
    loop {
        let alpha = rng.gen_range(-40..=40i64);
        let beta = rng.gen_range(-40..=40i64);
        if (!nonzero_alpha || alpha != 0) && alpha.gcd(&beta) == 1 {
            return (alpha, beta);
        }
    }
}

pub fn random_presentation(rng: &mut StdRng, nonzero_alpha: bool) -> SeifertPresentation {
    let fibers = [(); 3].map(|_| random_fiber(rng, nonzero_alpha));
    SeifertPresentation::from_pairs(rng.gen_range(-6..=6), fibers).expect("coprime by construction")
}

pub fn check_route_agreement(sweep: &SweepTable, seed: u64) -> Result<(bool, String)> {
    let report = reconcile(sweep)?;
    let deviating: Vec<String> = report.lens_deviations().map(|r| r.lens.to_string()).collect();
    let called_out = ["L(2,1)", "L(5,2)"].iter().all(|l| deviating.iter().any(|d| d == l));

    let mut rng = StdRng::seed_from_u64(seed);
    let mut random_bad = 0;
    for _ in 0..500 {
        let p = random_presentation(&mut rng, false);
        random_bad += usize::from(t_closed(&p)? != p.t_invariant()?);
    }
    let ok = report.frozen_confirmed() && report.all_cases_agree() && called_out && random_bad == 0;
    Ok((
        ok,
        format!(
            "selected {} (frozen {}), 364/364 triples, {random_bad}/500 random mismatches, printed lens rows deviating: {}",
            report.selected,
            UnitConvention::FROZEN,
            deviating.join(" ")
        ),
    ))
}

pub fn check_linear_relations(sweep: &SweepTable) -> Result<(bool, String)> {
    let classes = FiberClass::all();
    let labeled = labeled_orbit()?;
    let quads = trapezoids(&labeled);
    let mut pairs = 0;
    let mut bad = 0;
    for (i, &c2) in classes.iter().enumerate() {
        for &c3 in &classes[i..] {
            pairs += 1;
            let t = |c: FiberClass| sweep.get([c, c2, c3]).expect("complete sweep");
            let sums: BTreeSet<GoldenNum> = classes.iter().map(|&c| t(c) + t(c.doubled())).collect();
            bad += usize::from(sums.len() != 1);
            for q in &quads {
                bad += usize::from(t(q[0]) - t(q[1]) != GoldenNum::EPS * (t(q[2]) - t(q[3])));
            }
        }
    }
    let example = quads
        .first()
        .map_or("none".to_string(), |q| format!("{} - {} = e({} - {})", q[0], q[1], q[2], q[3]));
    Ok((
        bad == 0 && !quads.is_empty(),
        format!("{pairs} fixed pairs, {} trapezoid quadruples (e.g. {example}), {bad} violations", quads.len()),
    ))
}

pub fn check_homology(seed: u64) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x4831);
    let mut bad = 0;
    for _ in 0..200 {
        let p = random_presentation(&mut rng, true);
        let h = p.h1()?;
        let expected = p.homology_order().expect("small entries");
        let consistent = match expected {
            0 => h.free_rank == 1,
            n => h.order() == Some(n),
        };
        bad += usize::from(!consistent);
    }
    Ok((bad == 0, format!("200 random presentations, {bad} order mismatches")))
}

/// Runs every check. `seed` drives the randomized subsets.
pub fn run_selfcheck(seed: u64) -> Vec<CheckOutcome> {
    let start = Instant::now();
    let sweep = sweep_all_classes();
    let sweep_micros = start.elapsed().as_micros();
    let mut out = vec![
        outcome(1, "constants fidelity", check_constants),
        outcome(2, "orbit of 12 vectors", check_orbit),
        outcome(3, "icosahedron geometry", check_geometry),
        outcome(4, "anchors", check_anchors),
        outcome(5, "comparison table", check_comparison_table),
    ];
    match &sweep {
        Ok(s) => {
            let mut distinct = outcome(6, "12 distinct values", || check_distinct_values(s));
            distinct.micros += sweep_micros;
            out.push(distinct);
            out.push(outcome(7, "mod-5 invariance", check_mod5_invariance));
            out.push(outcome(8, "route agreement", || check_route_agreement(s, seed)));
            out.push(outcome(9, "linear relations", || check_linear_relations(s)));
        }
        Err(e) => {
            for (id, name) in [(6, "12 distinct values"), (8, "route agreement"), (9, "linear relations")] {
                out.push(CheckOutcome { id, name, passed: false, detail: format!("sweep failed: {e}"), micros: 0 });
            }
            out.push(outcome(7, "mod-5 invariance", check_mod5_invariance));
        }
    }
    out.push(outcome(10, "homology cross-check", || check_homology(seed)));
    out.sort_by_key(|o| o.id);
    out
}
