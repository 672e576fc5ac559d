//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances are pinned here, independently of the
//! library constants.

use kkec_core::constructions::rho_pendant_bipartite;
use kkec_core::enumeration::canonical_form;
use kkec_core::spectral::rho;
use kkec_core::verify::{run_suite, CheckRecord, ParamRange, Status, Suite, SuiteConfig, VerificationReport};
use kkec_core::{Graph, Graph6};
use std::cell::OnceCell;
use std::process::{Command, ExitCode};
use std::time::Instant;

const FORMULA_TOL: f64 = 1e-8;
const EXTREMAL_TOL: f64 = 1e-9;
const MIN_SWITCH_INSTANCES: u64 = 1000;
const MIN_TUPLES: u64 = 50;
const MIN_UNIMODAL_GRAPHS: u64 = 100;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn suite(s: Suite, k: Option<usize>, range: Option<&str>) -> Result<VerificationReport, String> {
    let mut c = SuiteConfig::new(s);
    c.k = k;
    c.range = range.map(|r| r.parse::<ParamRange>()).transpose().map_err(|e| e.to_string())?;
    run_suite(&c, 1).map_err(|e| e.to_string())
}

fn records<'a>(r: &'a VerificationReport, check: &str) -> Vec<&'a CheckRecord> {
    r.records.iter().filter(|x| x.check == check).collect()
}

fn one<'a>(r: &'a VerificationReport, check: &str) -> Result<&'a CheckRecord, String> {
    match records(r, check).as_slice() {
        [x] => Ok(x),
        other => Err(format!("expected one {check} record, found {}", other.len())),
    }
}

fn passed(x: &CheckRecord) -> Result<(), String> {
    if x.status == Status::Pass {
        Ok(())
    } else {
        Err(format!("{} is {:?}: {}", x.check, x.status, x.payload))
    }
}

fn num(x: &CheckRecord, key: &str) -> Result<f64, String> {
    x.payload[key].as_f64().ok_or_else(|| format!("{} has no numeric {key}", x.check))
}

fn count(x: &CheckRecord, key: &str) -> Result<u64, String> {
    x.payload[key].as_u64().ok_or_else(|| format!("{} has no count {key}", x.check))
}

fn closed_forms() -> Verdict {
    let r = suite(Suite::Constructions, None, None)?;
    let mut total = 0;
    let mut worst = 0f64;
    for x in r.records.iter().filter(|x| x.check.starts_with("closed-form-")) {
        passed(x)?;
        total += count(x, "instances")?;
        worst = worst.max(num(x, "max_abs_error")?);
    }
    passed(one(&r, "formula-quotient-matrices")?)?;
    if records(&r, "closed-form-pendant_bipartite").is_empty() || worst > FORMULA_TOL {
        return Err(format!("max error {worst:e}"));
    }
    Ok(format!("{total} constructions, max |formula - eigensolver| = {worst:.1e}"))
}

fn order_extremal() -> Verdict {
    let r = suite(Suite::Theorem1, Some(2), Some("n=8..9"))?;
    let xs = records(&r, "order-extremal-unique-maximiser");
    if xs.len() != 2 {
        return Err(format!("expected 2 records, found {}", xs.len()));
    }
    let mut notes = Vec::new();
    for (x, n) in xs.into_iter().zip(8..) {
        passed(x)?;
        // independent of the construction code: K_{2,n-2} and its radius sqrt(2(n-2))
        let target = canonical_form(&Graph::complete_bipartite(2, n - 2).map_err(|e| e.to_string())?).to_graph6();
        let argmax: Vec<&str> = x.payload["argmax"].as_array().unwrap().iter().filter_map(|v| v.as_str()).collect();
        if argmax != [target.as_str()] {
            return Err(format!("n={n}: argmax {argmax:?}, expected [{target}]"));
        }
        let rho_max = num(x, "rho_max")?;
        let closed = rho_pendant_bipartite(2, n).map_err(|e| e.to_string())?.value;
        let err = (rho_max - closed).abs().max((rho_max - (2.0 * (n - 2) as f64).sqrt()).abs());
        if err > EXTREMAL_TOL {
            return Err(format!("n={n}: rho_max {rho_max} vs closed form {closed}"));
        }
        notes.push(format!("n={n}: {} candidates, unique argmax {target}, rho {rho_max:.10}", count(x, "candidates")?));
    }
    Ok(notes.join("; "))
}

fn size_extremal() -> Verdict {
    let r = suite(Suite::Theorem2, Some(2), Some("m=8..11"))?;
    let maxes = records(&r, "size-extremal-maximiser");
    let radii = records(&r, "size-extremal-construction-radius");
    if maxes.len() != 4 || radii.len() != 4 {
        return Err(format!("expected 4+4 records, found {}+{}", maxes.len(), radii.len()));
    }
    for x in &maxes {
        if x.status != Status::Informational {
            return Err(format!("{} should be informational below the size threshold", x.check));
        }
    }
    for x in &radii {
        passed(x)?;
        if num(x, "abs_error")? > FORMULA_TOL {
            return Err(format!("construction radius off: {}", x.payload));
        }
    }
    let summary: Vec<String> = maxes
        .iter()
        .map(|x| {
            let matched = x.payload["matched_construction"].as_str().unwrap_or("none");
            format!("m={} matched {matched}", x.payload["m"])
        })
        .collect();
    Ok(format!("constructions within {FORMULA_TOL:e}; {}", summary.join(", ")))
}

fn connectivity_oracle() -> Verdict {
    let r = suite(Suite::Connectivity, None, Some("n=1..7"))?;
    let xs: Vec<&CheckRecord> = r.records.iter().filter(|x| x.check.starts_with("partition-vs-deletion-l")).collect();
    if xs.len() != 3 {
        return Err(format!("expected l = 2, 3, 4, found {} records", xs.len()));
    }
    for x in &xs {
        passed(x)?;
        if !x.payload["discrepancies"].as_array().is_some_and(|a| a.is_empty()) {
            return Err(format!("{}: {}", x.check, x.payload["discrepancies"]));
        }
    }
    Ok(format!("{} graphs x l in {{2,3,4}}, 0 discrepancies", count(xs[0], "graphs")?))
}

fn lemma_report() -> Result<VerificationReport, String> {
    suite(Suite::Lemmas, None, Some("n=1..10"))
}

fn lemma_sweeps(r: &VerificationReport) -> Verdict {
    let checks = [
        "hong-bound",
        "subgraph-monotonicity",
        "coalescence-bound",
        "edge-switching",
        "chordless-minimal-22",
        "minimal-22-size-bound",
        "bridge-bound",
        "pendant-reduction",
        "quotient-divisibility",
        "minimality-characterization",
        "cut-through-every-edge",
    ];
    for c in checks {
        passed(one(r, c)?)?;
    }
    let switches = count(one(r, "edge-switching")?, "instances")?;
    if switches < MIN_SWITCH_INSTANCES {
        return Err(format!("only {switches} edge-switch instances"));
    }
    if r.summary.fail != 0 {
        return Err(format!("{} failing records", r.summary.fail));
    }
    Ok(format!("{} checks, {switches} edge switches, {} subgraph pairs", checks.len(), count(one(r, "subgraph-monotonicity")?, "instances")?))
}

fn proposition_orderings() -> Verdict {
    let mut notes = Vec::new();
    for k in [2, 3, 4] {
        let r = suite(Suite::Propositions, Some(k), None)?;
        for c in ["wing-merge-ordering", "triangle-unfolding-ordering"] {
            let x = one(&r, c)?;
            passed(x)?;
            let tuples = count(x, "tuples")?;
            if tuples < MIN_TUPLES {
                return Err(format!("k={k} {c}: only {tuples} tuples"));
            }
            if num(x, "min_gap")? <= 0.0 && count(x, "exact_decisions")? == 0 {
                return Err(format!("k={k} {c}: nonpositive gap without an exact decision"));
            }
            notes.push(tuples.to_string());
        }
    }
    Ok(format!("k in {{2,3,4}}, tuples per ordering: {}", notes.join("/")))
}

fn unimodality(r: &VerificationReport) -> Verdict {
    let x = one(r, "perron-unimodality")?;
    passed(x)?;
    let graphs = count(x, "graphs")?;
    if graphs < MIN_UNIMODAL_GRAPHS {
        return Err(format!("only {graphs} graphs"));
    }
    Ok(format!("{graphs} constructed graphs, {} internal paths", count(x, "paths")?))
}

/// Report text up to the run block, which is the last field.
fn deterministic_part(text: &str) -> Result<&str, String> {
    text.find("\"run\":").map(|i| &text[..i]).ok_or_else(|| "report has no run block".to_string())
}

fn determinism() -> Verdict {
    let dir = std::env::temp_dir().join(format!("kkec-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut compared = Vec::new();
    for (suite, range) in [("lemmas", "n=1..9"), ("theorem2", "m=8..11")] {
        let mut texts = Vec::new();
        for workers in [1, 8] {
            let out = dir.join(format!("{suite}-{workers}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_kkec"))
                .args(["--workers", &workers.to_string(), "verify", "--suite", suite, "--range", range, "--out"])
                .arg(&out)
                .output()
                .map_err(|e| e.to_string())?;
            if !status.status.success() {
                return Err(format!("{suite} with {workers} workers exited {}", status.status));
            }
            texts.push(std::fs::read_to_string(&out).map_err(|e| e.to_string())?);
        }
        if deterministic_part(&texts[0])? != deterministic_part(&texts[1])? {
            return Err(format!("{suite} reports differ between 1 and 8 workers"));
        }
        compared.push(format!("{suite} {range} ({} bytes)", deterministic_part(&texts[0])?.len()));
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("1 vs 8 workers byte-identical outside the run block: {}", compared.join(", ")))
}

fn main() -> ExitCode {
    // sanity of the independent oracle used above
    assert!((rho(&Graph::from_graph6("Dhc").unwrap()).unwrap() - 2.0).abs() < 1e-12);

    // shared by criteria 5 and 7, built on first use
    let lemmas = OnceCell::new();
    let lemmas = || lemmas.get_or_init(lemma_report).as_ref().map_err(Clone::clone);
    let criteria: Vec<Criterion> = vec![
        ("closed-form agreement", Box::new(closed_forms)),
        ("order-extremal reproduction, k=2, n=8..9", Box::new(order_extremal)),
        ("size-extremal exploration, k=2, m=8..11", Box::new(size_extremal)),
        ("connectivity oracle equivalence, n<=7", Box::new(connectivity_oracle)),
        ("lemma sweeps, exhaustive n<=7, sampled n<=10", Box::new(|| lemma_sweeps(lemmas()?))),
        ("proposition orderings", Box::new(proposition_orderings)),
        ("Perron unimodality on internal paths", Box::new(|| unimodality(lemmas()?))),
        ("report determinism across worker counts", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(note) => println!("PASS criterion {} ({name}): {note} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
