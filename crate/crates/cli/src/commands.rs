//! One function per subcommand, each producing a [`Report`].

use std::fs;

use nicebase::almost_abelian::{
    count_nice, exists_nice, nice_witnesses, AlmostAbelian, NiceCount, NiceExistence, Nonexistence,
};
use nicebase::catalog3::{catalog, classify3, expected_nu, reproduce_table};
use nicebase::derivations::{pre_einstein_general_check, PreEinstein, PreEinsteinCheck};
use nicebase::graph_lie::{bracket_string, construct_nice_basis, graph_algebra, nice_predicate, GraphSpec};
use nicebase::lie::{format_structure_constants, is_nilpotent, parse_structure_constants};
use nicebase::linalg::parse_rational;
use nicebase::niceness::{check_adapted, check_nice, Violation};
use nicebase::nu::{certified_pre_einstein, nu_product_rule, report_nu, Nu};
use nicebase::reproduce;
use nicebase::{LieAlgebra, RatMatrix, Rational};
use serde_json::{json, Value};

use crate::report::{Input, Outcome, Report};

pub type CmdResult = Result<Report, String>;

fn read(path: &str) -> Result<(String, Input), String> {
    let bytes = fs::read(path).map_err(|e| format!("{path}: {e}"))?;
    let input = Input::new(path, &bytes);
    let text = String::from_utf8(bytes).map_err(|_| format!("{path}: not valid UTF-8"))?;
    Ok((text, input))
}

fn read_algebra(path: &str) -> Result<(LieAlgebra, Input), String> {
    let (text, input) = read(path)?;
    let g = parse_structure_constants(&text).map_err(|e| format!("{path}: {e}"))?;
    Ok((g, input))
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix_json(m: &RatMatrix) -> Value {
    json!((0..m.rows()).map(|r| strs(&m.row(r))).collect::<Vec<_>>())
}

fn spectrum_json(p: &PreEinstein) -> Value {
    json!(p
        .spectrum()
        .iter()
        .map(|(v, m)| json!({ "eigenvalue": v.to_string(), "multiplicity": m }))
        .collect::<Vec<_>>())
}

fn spectrum_text(p: &PreEinstein) -> String {
    let parts: Vec<String> = p
        .spectrum()
        .iter()
        .map(|(v, m)| if *m == 1 { v.to_string() } else { format!("{v} (x{m})") })
        .collect();
    parts.join(", ")
}

pub fn check(cmd: Vec<String>, path: &str) -> CmdResult {
    let (g, input) = read_algebra(path)?;
    let mut r = Report::new(cmd, vec![input]);
    let verdict = check_nice(&g);
    let nice = verdict.is_nice();
    r.verdict(Outcome::from_bool(nice), if nice { "nice" } else { "not nice" });
    let mut violations = Vec::new();
    for v in &verdict.violations {
        let kind = match v {
            Violation::MultipleOutputs { .. } => "multiple-outputs",
            Violation::SharedOutput { .. } => "shared-output",
        };
        let text = v.describe(&g);
        r.line(format!("violation {kind}: {text}"));
        violations.push(json!({ "kind": kind, "description": text }));
    }
    let adapted = check_adapted(&g);
    r.line(format!(
        "central series adapted: {}",
        if adapted.is_empty() { "yes" } else { "no" }
    ));
    for f in &adapted {
        r.line(format!("  {f}"));
    }
    r.data = json!({
        "dim": g.dim(),
        "nice": nice,
        "violations": violations,
        "adapted": adapted.is_empty(),
        "adaptedness_failures": adapted.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    });
    Ok(r)
}

pub fn pre_einstein(cmd: Vec<String>, path: &str, verify: Option<&str>) -> CmdResult {
    let (g, input) = read_algebra(path)?;
    let mut r = Report::new(cmd, vec![input]);
    let nilpotent = is_nilpotent(&g);
    if let Some(text) = verify {
        let diag = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("--verify: {e}"))?;
        let check = pre_einstein_general_check(&g, &diag).map_err(|e| format!("--verify: {e}"))?;
        let p = PreEinstein { diagonal: diag };
        let (ok, why) = match &check {
            PreEinsteinCheck::Certified => (true, "certified".to_string()),
            PreEinsteinCheck::NotADerivation => (false, "not a derivation".to_string()),
            PreEinsteinCheck::TraceMismatch {
                derivation,
                trace_nd,
                trace_d,
            } => (
                false,
                format!("Tr(N D) = {trace_nd} but Tr(D) = {trace_d} for D = {derivation}"),
            ),
        };
        r.verdict(
            Outcome::from_bool(ok),
            if ok { "certified" } else { "not pre-Einstein" },
        );
        r.line(format!("candidate: {p}"));
        r.line(format!("check: {why}"));
        r.data = json!({
            "diagonal": strs(&p.diagonal),
            "certified": ok,
            "detail": why,
        });
        return Ok(r);
    }
    let p = certified_pre_einstein(&g).map_err(|e| e.to_string())?;
    match p {
        Some(p) => {
            r.verdict(Outcome::Pass, "certified");
            let source = if check_nice(&g).is_nice() {
                "nice defining basis"
            } else {
                "known algebra"
            };
            r.line(format!("source: {source}"));
            r.line(format!("N = {p}"));
            r.line(format!("spectrum: {}", spectrum_text(&p)));
            if !nilpotent {
                r.line("note: algebra is not nilpotent; no nice-basis conclusion is drawn from N");
            }
            r.data = json!({
                "diagonal": strs(&p.diagonal),
                "spectrum": spectrum_json(&p),
                "nilpotent": nilpotent,
                "source": source,
            });
        }
        None => {
            r.verdict(Outcome::Negative, "basis is not nice; pass a candidate with --verify");
            r.data = json!({ "diagonal": Value::Null, "nilpotent": nilpotent });
        }
    }
    Ok(r)
}

pub fn nu_product(cmd: Vec<String>, paths: &[String]) -> CmdResult {
    let mut inputs = Vec::new();
    let mut parts = Vec::new();
    let mut missing = Vec::new();
    let mut summands = Vec::new();
    let mut lines = Vec::new();
    for path in paths {
        let (g, input) = read_algebra(path)?;
        inputs.push(input);
        let nu = report_nu(&g).map_err(|e| format!("{path}: {e}"))?.nu;
        match certified_pre_einstein(&g).map_err(|e| format!("{path}: {e}"))? {
            Some(p) => {
                lines.push(format!("{path}: nu = {nu}, N = {p}"));
                summands.push(json!({
                    "path": path,
                    "nu": nu.to_string(),
                    "pre_einstein": strs(&p.diagonal),
                }));
                parts.push((p, nu));
            }
            None => {
                lines.push(format!("{path}: nu = {nu}, no certified pre-Einstein derivation"));
                summands.push(json!({ "path": path, "nu": nu.to_string(), "pre_einstein": Value::Null }));
                missing.push(path.clone());
            }
        }
    }
    let mut r = Report::new(cmd, inputs);
    r.lines = lines;
    let outcome = if missing.is_empty() {
        nu_product_rule(&parts)
    } else {
        None
    };
    match &outcome {
        Some(nu) => {
            r.verdict(Outcome::Pass, format!("nu = {nu}"));
        }
        None if !missing.is_empty() => {
            r.verdict(Outcome::Negative, "inapplicable");
        }
        None => {
            r.verdict(Outcome::Negative, "inapplicable");
            r.line("pre-Einstein spectra of two summands intersect");
        }
    }
    r.data = json!({
        "summands": summands,
        "applicable": outcome.is_some(),
        "nu": outcome.as_ref().map(|n: &Nu| n.to_string()),
    });
    Ok(r)
}

pub fn aa(cmd: Vec<String>, path: &str) -> CmdResult {
    let (text, input) = read(path)?;
    let a = RatMatrix::parse_text(&text).map_err(|e| format!("{path}: {e}"))?;
    let g = AlmostAbelian::new(a.clone()).map_err(|e| format!("{path}: {e}"))?;
    let mut r = Report::new(cmd, vec![input]);
    let e = |x: nicebase::Error| x.to_string();
    r.line(format!("A = {a}"));
    r.line(format!("characteristic polynomial: {}", a.char_poly().map_err(e)?));
    let existence = exists_nice(&a).map_err(e)?;
    let count = count_nice(&a).map_err(e)?;
    let mut data = json!({ "matrix": matrix_json(&a), "dim": g.algebra().dim() });
    match &existence {
        NiceExistence::Exists(_) => r.verdict(Outcome::Pass, "nice basis exists"),
        NiceExistence::Absent(why) => {
            r.verdict(Outcome::Negative, "no nice basis");
            r.line(match why {
                Nonexistence::NotSemisimple => "reason: A is not semisimple on its invertible part",
                Nonexistence::NoBinomialFactorization => "reason: no splitting into real binomials x^d - r",
            });
        }
        NiceExistence::UnknownIrrational(_) => r.verdict(Outcome::Negative, "unknown-irrational"),
    }
    data["existence"] = json!(match &existence {
        NiceExistence::Exists(_) => "yes",
        NiceExistence::Absent(_) => "no",
        NiceExistence::UnknownIrrational(_) => "unknown-irrational",
    });
    match &count {
        NiceCount::Exact(k) => {
            r.line(format!("nu = {k}"));
            data["nu"] = json!(k.to_string());
        }
        NiceCount::UnknownIrrational(hint) => {
            r.line("nu = unknown (irrational binomial constants possible)");
            r.line(format!(
                "numeric estimate, not certified: {} real factorizations in {} classes",
                hint.factorizations.len(),
                hint.classes
            ));
            data["nu"] = json!("unknown");
            data["numeric_classes"] = json!(hint.classes);
        }
    }
    let mut classes = Vec::new();
    if let Some(ws) = nice_witnesses(&a).map_err(e)? {
        for (i, w) in ws.iter().enumerate() {
            r.line(format!("class {}: {} with basis {}", i + 1, w.factorization, w.basis));
            classes.push(json!({
                "factorization": w.factorization.to_string(),
                "nilpotent_blocks": w.nilpotent_blocks,
                "basis": matrix_json(&w.basis),
            }));
        }
    }
    data["classes"] = json!(classes);
    r.data = data;
    Ok(r)
}

pub fn graph(cmd: Vec<String>, path: &str, emit: Option<&str>, nice: bool) -> CmdResult {
    let (text, input) = read(path)?;
    let spec = GraphSpec::parse(&text).map_err(|e| format!("{path}: {e}"))?;
    let ga = graph_algebra(&spec).map_err(|e| e.to_string())?;
    let mut r = Report::new(cmd, vec![input]);
    let pred = nice_predicate(&spec);
    r.verdict(
        Outcome::from_bool(pred.nice),
        if pred.nice {
            "nice basis exists"
        } else {
            "no nice basis"
        },
    );
    let mut by_len = vec![0usize; spec.class()];
    for w in &ga.words {
        by_len[w.len() - 1] += 1;
    }
    r.line(format!(
        "vertices {}, edges {}, class {}",
        spec.vertices(),
        spec.edges().count(),
        spec.class()
    ));
    r.line(format!("dim = {} (by degree {:?})", ga.algebra.dim(), by_len));
    r.line(format!("theorem: {}", pred.reason));
    let names: Vec<String> = ga.words.iter().map(|w| bracket_string(w, &|x| x + 1)).collect();
    let mut out_algebra = ga
        .algebra
        .clone()
        .with_names(names.clone())
        .map_err(|e| e.to_string())?;
    let mut data = json!({
        "vertices": spec.vertices(),
        "class": spec.class(),
        "edges": spec.edges().map(|(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
        "dim": ga.algebra.dim(),
        "dims_by_degree": by_len,
        "basis": names,
        "nice": pred.nice,
        "theorem": pred.reason.theorem(),
    });
    if nice && pred.nice {
        let b = construct_nice_basis(&spec).map_err(|e| e.to_string())?;
        let verified = check_nice(&b.nice).is_nice();
        r.line(format!(
            "nice basis ({}): {}",
            if verified { "verified" } else { "NOT verified" },
            b.labels.join(" ")
        ));
        if !verified {
            r.outcome = Outcome::Negative;
        }
        data["nice_basis"] = json!({ "labels": b.labels, "verified": verified });
        out_algebra = b.nice;
    }
    if let Some(out) = emit {
        fs::write(out, format_structure_constants(&out_algebra)).map_err(|e| format!("{out}: {e}"))?;
        r.line(format!("wrote structure constants to {out}"));
        data["emitted"] = json!(out);
    }
    r.data = data;
    Ok(r)
}

pub fn catalog3(cmd: Vec<String>, classify: Option<&str>) -> CmdResult {
    if let Some(path) = classify {
        let (g, input) = read_algebra(path)?;
        let mut r = Report::new(cmd, vec![input]);
        let c = classify3(&g).map_err(|e| format!("{path}: {e}"))?;
        match c {
            Some(c) => {
                r.verdict(Outcome::Pass, c.row.label());
                if let Some(p) = &c.parameter {
                    r.line(format!("parameter = {p}"));
                }
                if let Some(m) = &c.matrix {
                    r.line(format!("A = {m}"));
                }
                let source = if c.nu_from_table { "table" } else { "counted" };
                r.line(format!("nu = {} ({source})", c.nu));
                r.data = json!({
                    "row": c.row.label(),
                    "parameter": c.parameter.as_ref().map(|p| p.to_string()),
                    "matrix": c.matrix.as_ref().map(matrix_json),
                    "nu": c.nu,
                    "nu_source": source,
                });
            }
            None => {
                r.verdict(Outcome::Negative, "unknown");
                r.data = json!({ "row": Value::Null });
            }
        }
        return Ok(r);
    }
    let mut r = Report::new(cmd, Vec::new());
    let entries = catalog().map_err(|e| e.to_string())?;
    let mut ok = true;
    for e in &entries {
        ok &= e.verify().map_err(|e| e.to_string())?;
    }
    let rows = match reproduce_table(&entries) {
        Some(t) => t,
        None => {
            r.verdict(Outcome::Negative, "samples of one row disagree");
            return Ok(r);
        }
    };
    let mut records = Vec::new();
    for line in &rows {
        let want = expected_nu(line.row);
        ok &= line.nu == want;
        r.line(format!(
            "{:<40} nu = {}   samples: {}",
            line.row.label(),
            line.nu,
            line.samples.join(", ")
        ));
        records.push(json!({
            "row": line.row.label(),
            "nu": line.nu,
            "expected": want,
            "samples": line.samples,
        }));
    }
    r.verdict(
        Outcome::from_bool(ok),
        if ok { "table reproduced" } else { "table mismatch" },
    );
    r.data = json!({ "rows": records });
    Ok(r)
}

pub fn reproduce(cmd: Vec<String>, only: Option<u8>) -> CmdResult {
    let results = match only {
        Some(id) => vec![reproduce::run(id).ok_or_else(|| format!("unknown criterion {id}"))?],
        None => reproduce::run_all(),
    };
    let mut r = Report::new(cmd, Vec::new());
    let failed = results.iter().filter(|c| !c.passed).count();
    let mut records = Vec::new();
    for c in &results {
        let limit = c
            .limit
            .map(|l| format!(" (limit {} s)", l.as_secs()))
            .unwrap_or_default();
        r.line(format!(
            "[{}] {} {}{limit}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.title
        ));
        for d in &c.detail {
            r.line(format!("    {d}"));
        }
        eprintln!("criterion {}: {:.3} s", c.id, c.elapsed.as_secs_f64());
        records.push(json!({
            "id": c.id,
            "title": c.title,
            "passed": c.passed,
            "limit_seconds": c.limit.map(|l| l.as_secs()),
            "detail": c.detail,
        }));
    }
    r.verdict(
        Outcome::from_bool(failed == 0),
        if failed == 0 {
            format!("all {} criteria pass", results.len())
        } else {
            format!("{failed} of {} criteria fail", results.len())
        },
    );
    r.data = json!({ "criteria": records });
    Ok(r)
}
