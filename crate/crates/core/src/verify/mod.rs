//! Check suites and the JSON report they produce.
//!
//! A suite is a deterministic list of records. Each record names the check,
//! the statement it exercises (its anchor), a status, and a payload of counts
//! and extremes. Everything except the `run` block is a pure function of the
//! suite configuration, whatever the worker count.

mod suites;

use crate::enumeration::{ExtremalResult, MAX_ORDER, MAX_SIZE};
use crate::error::{Error, Result};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

/// Anchor for records that check tooling rather than a mathematical statement.
pub const PLUMBING: &str = "plumbing";

/// Orders at or below this are swept exhaustively in the lemma suite; above
/// it, graphs are sampled.
pub const EXHAUSTIVE_ORDER: usize = 7;
pub const SAMPLES_PER_ORDER: usize = 200;
pub const SWITCH_INSTANCES: usize = 1000;
pub const COALESCENCE_SAMPLES: usize = 500;
pub const MIN_PROPOSITION_TUPLES: usize = 50;
pub const MIN_UNIMODAL_GRAPHS: usize = 100;

/// Agreement between a closed form and the eigensolver.
pub const FORMULA_TOL: f64 = 1e-8;
/// Agreement between an extremal value and its closed form.
pub const EXTREMAL_TOL: f64 = 1e-9;
/// Slack allowed on upper bounds and the gap that counts as equality.
pub const BOUND_TOL: f64 = 1e-9;
/// Margin for strict subgraph monotonicity before the exact fallback.
pub const SUBGRAPH_MARGIN: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    pub payload: Value,
}

impl CheckRecord {
    pub fn asserted(check: &str, anchor: &str, ok: bool, payload: Value) -> Self {
        CheckRecord {
            check: check.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            payload,
        }
    }

    pub fn informational(check: &str, anchor: &str, payload: Value) -> Self {
        CheckRecord {
            check: check.into(),
            anchor: anchor.into(),
            status: Status::Informational,
            payload,
        }
    }

    /// Pass when `ok`; otherwise fail only if some violation lies inside the
    /// statement's hypothesis.
    pub fn gated(check: &str, anchor: &str, ok: bool, violation_in_hypothesis: bool, payload: Value) -> Self {
        let status = match (ok, violation_in_hypothesis) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Informational,
        };
        CheckRecord { check: check.into(), anchor: anchor.into(), status, payload }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemmas,
    Constructions,
    Connectivity,
    Theorem1,
    Theorem2,
    Propositions,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Lemmas,
        Suite::Constructions,
        Suite::Connectivity,
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Propositions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Constructions => "constructions",
            Suite::Connectivity => "connectivity",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Propositions => "propositions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// A parameter range such as `n=8..9` or `m=8..11` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamRange {
    Order(RangeInclusive<usize>),
    Size(RangeInclusive<usize>),
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("range must look like n=4..7 or m=8..11, got {s:?}"));
        let (var, span) = s.split_once('=').ok_or_else(bad)?;
        let (lo, hi) = match span.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (span, span),
        };
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        match var.trim() {
            "n" => Ok(ParamRange::Order(lo..=hi)),
            "m" => Ok(ParamRange::Size(lo..=hi)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamRange::Order(r) => write!(f, "n={}..{}", r.start(), r.end()),
            ParamRange::Size(r) => write!(f, "m={}..{}", r.start(), r.end()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub k: Option<usize>,
    pub range: Option<ParamRange>,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig { suite, k: None, range: None, seed: 0x6b6b_6563 }
    }

    fn k_or(&self, default: usize) -> usize {
        self.k.unwrap_or(default)
    }

    fn order_range(&self, default: RangeInclusive<usize>) -> Result<RangeInclusive<usize>> {
        match &self.range {
            None => Ok(default),
            Some(ParamRange::Order(r)) => Ok(r.clone()),
            Some(other) => Err(Error::InvalidArgument(format!("suite {} takes an n= range, got {other}", self.suite))),
        }
    }

    fn size_range(&self, default: RangeInclusive<usize>) -> Result<RangeInclusive<usize>> {
        match &self.range {
            None => Ok(default),
            Some(ParamRange::Size(r)) => Ok(r.clone()),
            Some(other) => Err(Error::InvalidArgument(format!("suite {} takes an m= range, got {other}", self.suite))),
        }
    }

    /// Resolved parameters after defaults and cap checks. Fails before any
    /// work is done.
    fn resolve(&self) -> Result<Resolved> {
        let cap = |what: &'static str, value: usize, cap: usize| {
            if value > cap {
                Err(Error::CapExceeded { what, value, cap })
            } else {
                Ok(())
            }
        };
        let min_k = |k: usize, least: usize| {
            if k < least {
                Err(Error::InvalidArgument(format!("k must be at least {least}, got {k}")))
            } else {
                Ok(())
            }
        };
        let r = match self.suite {
            Suite::Lemmas => {
                let range = self.order_range(1..=EXHAUSTIVE_ORDER)?;
                cap("order", *range.end(), MAX_ORDER)?;
                Resolved { k: None, range: Some(ParamRange::Order(range)) }
            }
            Suite::Connectivity => {
                let range = self.order_range(1..=EXHAUSTIVE_ORDER)?;
                cap("order", *range.end(), EXHAUSTIVE_ORDER)?;
                Resolved { k: None, range: Some(ParamRange::Order(range)) }
            }
            Suite::Constructions => Resolved { k: None, range: None },
            Suite::Theorem1 => {
                let k = self.k_or(2);
                min_k(k, 2)?;
                let range = self.order_range(8..=9)?;
                cap("order", *range.end(), MAX_ORDER)?;
                Resolved { k: Some(k), range: Some(ParamRange::Order(range)) }
            }
            Suite::Theorem2 => {
                let k = self.k_or(2);
                min_k(k, 2)?;
                let range = self.size_range(8..=11)?;
                cap("size", *range.end(), MAX_SIZE)?;
                Resolved { k: Some(k), range: Some(ParamRange::Size(range)) }
            }
            Suite::Propositions => {
                let k = self.k_or(3);
                min_k(k, 2)?;
                cap("k", k, 20)?;
                Resolved { k: Some(k), range: None }
            }
        };
        Ok(r)
    }
}

struct Resolved {
    k: Option<usize>,
    range: Option<ParamRange>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Environment {
    pub tolerances: BTreeMap<&'static str, f64>,
    pub caps: BTreeMap<&'static str, usize>,
    pub seed: u64,
}

impl Environment {
    fn current(seed: u64) -> Self {
        Environment {
            tolerances: BTreeMap::from([
                ("eigen_residual", crate::spectral::DEFAULT_TOL),
                ("formula", FORMULA_TOL),
                ("extremal", EXTREMAL_TOL),
                ("bound", BOUND_TOL),
                ("strict_margin", crate::spectral::STRICT_MARGIN),
                ("subgraph_margin", SUBGRAPH_MARGIN),
                ("tie", crate::enumeration::TIE_TOL),
            ]),
            caps: BTreeMap::from([
                ("max_order", MAX_ORDER),
                ("max_size", MAX_SIZE),
                ("exhaustive_order", EXHAUSTIVE_ORDER),
                ("samples_per_order", SAMPLES_PER_ORDER),
                ("switch_instances", SWITCH_INSTANCES),
                ("coalescence_samples", COALESCENCE_SAMPLES),
                ("eigen_iterations", crate::spectral::MAX_ITERATIONS),
            ]),
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub informational: usize,
}

/// Facts about the run that legitimately differ between otherwise identical
/// runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunInfo {
    pub workers: usize,
    pub duration_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub k: Option<usize>,
    pub range: Option<String>,
    pub environment: Environment,
    pub records: Vec<CheckRecord>,
    pub extremal: Vec<ExtremalResult>,
    pub summary: Summary,
    pub run: RunInfo,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Output of a suite body before it is wrapped in a report.
#[derive(Default)]
pub(crate) struct Outcome {
    pub records: Vec<CheckRecord>,
    pub extremal: Vec<ExtremalResult>,
}

/// Runs a suite on the current rayon pool. `workers` is recorded only.
pub fn run_suite(config: &SuiteConfig, workers: usize) -> Result<VerificationReport> {
    let resolved = config.resolve()?;
    let start = Instant::now();
    let out = match config.suite {
        Suite::Lemmas => suites::lemmas(order_of(&resolved), config.seed)?,
        Suite::Connectivity => suites::connectivity(order_of(&resolved))?,
        Suite::Constructions => suites::constructions()?,
        Suite::Theorem1 => suites::theorem1(resolved.k.expect("resolved"), order_of(&resolved))?,
        Suite::Theorem2 => suites::theorem2(resolved.k.expect("resolved"), size_of(&resolved))?,
        Suite::Propositions => suites::propositions(resolved.k.expect("resolved"))?,
    };
    let count = |s: Status| out.records.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        informational: count(Status::Informational),
    };
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        suite: config.suite,
        k: resolved.k,
        range: resolved.range.as_ref().map(|r| r.to_string()),
        environment: Environment::current(config.seed),
        records: out.records,
        extremal: out.extremal,
        summary,
        run: RunInfo {
            workers,
            duration_ms: start.elapsed().as_millis() as u64,
        },
    })
}

fn order_of(r: &Resolved) -> RangeInclusive<usize> {
    match &r.range {
        Some(ParamRange::Order(x)) => x.clone(),
        _ => unreachable!("resolved with an order range"),
    }
}

fn size_of(r: &Resolved) -> RangeInclusive<usize> {
    match &r.range {
        Some(ParamRange::Size(x)) => x.clone(),
        _ => unreachable!("resolved with a size range"),
    }
}
