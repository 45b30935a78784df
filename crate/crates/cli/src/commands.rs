use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use tinvariant::closed_form::{classify_with, reconcile as reconcile_sweep, t_closed_with};
use tinvariant::reference::{COMPARISON_TABLE, PRINTED_ORBIT};
use tinvariant::selfcheck::run_selfcheck;
use tinvariant::tensors::labeled_orbit;
use tinvariant::{
    class_of, class_vector, constants, fiber_word, parse_presentation, sweep_all_classes, GoldenNum,
    UnitConvention,
};

use crate::{Failure, Format, Outcome};

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Inconsistent(e.to_string()))
}

fn to_csv(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::Inconsistent(e.to_string());
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(&row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Inconsistent(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Inconsistent(e.to_string()))
}

/// `t_a`, `t_b` of a value in `Z[ε]`.
fn zeps_columns(t: GoldenNum) -> Result<[String; 2], Failure> {
    if !t.in_zeps() {
        return Err(Failure::Inconsistent(format!("{t} is not in Z[e]")));
    }
    Ok([t.a.to_string(), t.b.to_string()])
}

pub fn compute(input: &str, convention: UnitConvention, fmt: Format) -> Result<Outcome, Failure> {
    let p = parse_presentation(input)?;
    let normalized = p.normalize()?;
    let classes = p.classes()?;
    let t = p.t_invariant()?;
    let h1 = p.h1()?;
    let case = classify_with(&p, convention)?;
    let closed = t_closed_with(&p, convention)?;
    let agree = closed == t;
    let classes_text: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
    let body = match fmt {
        Format::Json => to_json(&json!({
            "presentation": p,
            "normalized": normalized,
            "classes": classes,
            "t": t,
            "t_float": t.to_real(),
            "h1": h1,
            "h1_text": h1.to_string(),
            "t_closed": closed,
            "case": case,
            "convention": convention,
            "routes_agree": agree,
        }))?,
        Format::Csv => {
            let [ta, tb] = zeps_columns(t)?;
            let [ca, cb] = zeps_columns(closed)?;
            to_csv(
                &["presentation", "class1", "class2", "class3", "t_a", "t_b", "t_float", "h1", "t_closed_a", "t_closed_b", "case", "routes_agree"],
                vec![vec![
                    p.to_string(),
                    classes_text[0].clone(),
                    classes_text[1].clone(),
                    classes_text[2].clone(),
                    ta,
                    tb,
                    format!("{:.12}", t.to_real()),
                    h1.to_string(),
                    ca,
                    cb,
                    case.tag().to_string(),
                    agree.to_string(),
                ]],
            )?
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "presentation  {p}").ok();
            writeln!(s, "normalized    {normalized}").ok();
            writeln!(s, "classes       {}", classes_text.join(" ")).ok();
            writeln!(s, "t (tensor)    {t}  ({:.9})", t.to_real()).ok();
            writeln!(s, "t (closed)    {closed}  [{case}, {convention}]").ok();
            writeln!(s, "H1            {h1}").ok();
            writeln!(s, "routes agree  {}", if agree { "yes" } else { "NO" }).ok();
            s
        }
    };
    Ok(Outcome {
        body,
        inconsistency: (!agree).then(|| format!("closed form gives {closed}, tensor route {t} for {p}")),
    })
}

pub fn classify(alpha: i64, beta: i64, fmt: Format) -> Result<Outcome, Failure> {
    let class = class_of(alpha, beta)?;
    if alpha.signum() * beta.signum() == 0 && alpha.abs() + beta.abs() != 1 {
        return Err(Failure::Invalid(format!("({alpha},{beta}) is not coprime")));
    }
    let (a, b) = if alpha < 0 { (-alpha, -beta) } else { (alpha, beta) };
    let word = if a > 0 && b > 0 { Some(fiber_word(a, b)?) } else { None };
    let vector = class_vector(class);
    let word_text = word.as_ref().map_or("-".to_string(), |w| w.to_string());
    let body = match fmt {
        Format::Json => to_json(&json!({
            "alpha": alpha,
            "beta": beta,
            "word": word,
            "class": class,
            "vector": vector,
        }))?,
        Format::Csv => to_csv(
            &["alpha", "beta", "word", "class", "vector"],
            vec![vec![alpha.to_string(), beta.to_string(), word_text, class.to_string(), vector.to_string()]],
        )?,
        Format::Text => format!("fiber   ({alpha},{beta})\nword    {word_text}\nclass   {class}\nvector  {vector}\n"),
    };
    Ok(Outcome::ok(body))
}

pub fn sweep(fmt: Format) -> Result<Outcome, Failure> {
    let table = sweep_all_classes()?;
    let values = table.distinct_values();
    let census = table.census();
    let body = match fmt {
        Format::Json => {
            let census: Vec<_> = values.iter().map(|v| json!({ "t": v, "count": census[v] })).collect();
            to_json(&json!({
                "triples": table.entries.len(),
                "distinct": values.len(),
                "census": census,
                "entries": table.entries,
            }))?
        }
        Format::Csv => {
            let mut rows = Vec::with_capacity(table.entries.len());
            for e in &table.entries {
                let [ta, tb] = zeps_columns(e.t)?;
                let mut row: Vec<String> = e.classes.iter().map(|c| c.to_string()).collect();
                row.extend([ta, tb, format!("{:.12}", e.t.to_real())]);
                rows.push(row);
            }
            to_csv(&["class1", "class2", "class3", "t_a", "t_b", "t_float"], rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for e in &table.entries {
                let [c1, c2, c3] = e.classes.map(|c| c.to_string());
                writeln!(s, "{c1:<7} {c2:<7} {c3:<7} {}", e.t).ok();
            }
            writeln!(s).ok();
            writeln!(s, "{} triples, {} distinct values", table.entries.len(), values.len()).ok();
            for v in &values {
                writeln!(s, "  {:<9} {:>10.6}  x{}", v.to_string(), v.to_real(), census[v]).ok();
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

pub fn table(fmt: Format) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for r in COMPARISON_TABLE {
        let p = parse_presentation(r.presentation)?;
        let t = p.t_invariant()?;
        let h1 = p.h1()?.to_string();
        let matches = t == r.t && h1 == r.h1;
        if !matches {
            bad.push(r.presentation);
        }
        rows.push((p, h1, t, r.t, matches));
    }
    let body = match fmt {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(p, h1, t, expected, matches)| {
                    json!({ "presentation": p, "h1": h1, "t": t, "expected": expected, "matches": matches })
                })
                .collect();
            to_json(&rows)?
        }
        Format::Csv => {
            let mut out = Vec::new();
            for (p, h1, t, _, matches) in &rows {
                let [ta, tb] = zeps_columns(*t)?;
                out.push(vec![p.to_string(), h1.clone(), ta, tb, format!("{:.12}", t.to_real()), matches.to_string()]);
            }
            to_csv(&["presentation", "h1", "t_a", "t_b", "t_float", "matches"], out)?
        }
        Format::Text => {
            let mut s = String::new();
            for (p, h1, t, _, matches) in &rows {
                let mark = if *matches { "" } else { "  MISMATCH" };
                writeln!(s, "{:<26} {:<8} {:<8} {:>9.6}{mark}", p.to_string(), h1, t.to_string(), t.to_real()).ok();
            }
            s
        }
    };
    Ok(Outcome {
        body,
        inconsistency: (!bad.is_empty()).then(|| format!("rows differ: {}", bad.join(", "))),
    })
}

pub fn selfcheck(seed: u64, fmt: Format) -> Result<Outcome, Failure> {
    let checks = run_selfcheck(seed);
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.id.to_string()).collect();
    let body = match fmt {
        Format::Json => to_json(&json!({ "seed": seed, "checks": checks }))?,
        Format::Csv => to_csv(
            &["id", "name", "passed", "micros", "detail"],
            checks
                .iter()
                .map(|c| vec![c.id.to_string(), c.name.to_string(), c.passed.to_string(), c.micros.to_string(), c.detail.clone()])
                .collect(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(s, "[{status}] {:>2} {:<22} {}", c.id, c.name, c.detail).ok();
            }
            writeln!(s, "{}/{} passed", checks.len() - failed.len(), checks.len()).ok();
            s
        }
    };
    Ok(Outcome {
        body,
        inconsistency: (!failed.is_empty()).then(|| format!("checks failed: {}", failed.join(", "))),
    })
}

pub fn dump_constants(fmt: Format) -> Result<Outcome, Failure> {
    let c = constants();
    let labeled = labeled_orbit()?;
    let mut vectors = Vec::new();
    for l in &labeled {
        let rep = tinvariant::fiber::ClassTable::global().get(l.class).representative;
        let word = fiber_word(rep.0, rep.1)?;
        vectors.push(json!({
            "class": l.class,
            "representative": [rep.0, rep.1],
            "word": word,
            "vector": l.vector,
        }));
    }
    let mut labels = Vec::new();
    for ((lambda, mu), v) in PRINTED_ORBIT {
        let printed = class_of(lambda, mu)?;
        let derived = labeled.iter().find(|l| l.vector == v).map(|l| l.class);
        labels.push(json!({
            "printed_label": [lambda, mu],
            "printed_class": printed,
            "derived_class": derived,
            "agrees": derived == Some(printed),
        }));
    }
    let doc = json!({
        "phi_e": c.phi_e,
        "phi_j": c.phi_j,
        "phi_t": c.phi_t,
        "phi_23": c.phi_23,
        "phi_13": c.phi_13,
        "vectors": vectors,
        "printed_labels": labels,
    });
    let body = match fmt {
        Format::Json | Format::Csv => to_json(&doc)?,
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "phi_E = {}", c.phi_e).ok();
            for (name, m) in [("phi_J", c.phi_j), ("phi_23", c.phi_23), ("phi_13", c.phi_13)] {
                writeln!(s, "{name}:").ok();
                for row in m.0 {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    writeln!(s, "  [{}]", cells.join(", ")).ok();
                }
            }
            writeln!(s, "phi_T (nonzero entries, i <= j <= k):").ok();
            for i in 0..5 {
                for j in i..5 {
                    for k in j..5 {
                        let x = c.phi_t.0[i][j][k];
                        if !x.is_zero() {
                            writeln!(s, "  t[{}][{}][{}] = {x}", i + 1, j + 1, k + 1).ok();
                        }
                    }
                }
            }
            writeln!(s, "fiber vectors:").ok();
            for l in &labeled {
                writeln!(s, "  {:<7} {}", l.class.to_string(), l.vector).ok();
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

/// Text report, JSON report and an inconsistency if the frozen convention
/// is not the one reconcile selects.
pub fn reconcile() -> Result<(String, String, Option<String>), Failure> {
    let sweep = sweep_all_classes()?;
    let report = reconcile_sweep(&sweep)?;
    let json = to_json(&report)?;
    let text = report.to_string();
    let problem = if !report.frozen_confirmed() {
        Some(format!("frozen convention {} but reconcile selects {}", report.frozen, report.selected))
    } else if !report.all_cases_agree() {
        Some("closed form disagrees with the tensor route".to_string())
    } else {
        None
    };
    Ok((text, json, problem))
}
