//! Run reports: one serde document per invocation, printed either as JSON
//! or as indented `key: value` text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rainbow_core::graph::SrgParameters;
use rainbow_core::{classify, Graph};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub seed: u64,
    pub input: Option<InputSummary>,
    pub outcome: Outcome,
    /// Wall-clock time; the only field allowed to differ between runs.
    pub elapsed_us: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Srg {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl From<SrgParameters> for Srg {
    fn from(p: SrgParameters) -> Self {
        Srg {
            n: p.n,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub diameter: Option<usize>,
    pub radius: Option<usize>,
    pub bridges: usize,
    pub cut_vertices: Vec<usize>,
    pub classification: String,
    pub srg: Option<Srg>,
    /// Colors the matching construction never exceeds.
    pub guarantee: Option<usize>,
    pub notes: Vec<String>,
}

impl InputSummary {
    pub fn of(g: &Graph) -> Self {
        let class = classify(g);
        let srg = g.srg_parameters().map(Srg::from);
        let guarantee = class.guarantee();
        let bridges = g.bridges().len();
        let mut notes = Vec::new();
        if let Some(p) = srg {
            if p.mu >= 1 {
                notes.push(format!(
                    "SRG({},{},{},{}) with mu >= 1: diameter 2, rc <= 5, guarantee 5",
                    p.n, p.k, p.lambda, p.mu
                ));
            }
        }
        match guarantee {
            None => notes.push("outside scope: disconnected or diameter above 2".into()),
            Some(c) if bridges > 0 => {
                let noun = if bridges == 1 { "bridge" } else { "bridges" };
                notes.push(format!("{bridges} {noun}: guarantee {c} = bridges + 2"))
            }
            Some(_) => {}
        }
        InputSummary {
            n: g.n(),
            m: g.m(),
            diameter: g.diameter(),
            radius: g.radius(),
            bridges,
            cut_vertices: g.cut_vertices(),
            classification: class.tag().to_string(),
            srg,
            guarantee,
            notes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    pub pair: [usize; 2],
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Analysis {
        min_degree: usize,
        max_degree: usize,
        components: usize,
        /// Vertices of minimum eccentricity.
        centers: Vec<usize>,
    },
    Color {
        colors_used: usize,
        guarantee: usize,
        construction: String,
        center: Option<usize>,
        repair_attempts: usize,
        repaired_by: Option<String>,
        coloring_file: Option<String>,
        /// `(u, w, color)` rows; only when no output file was given.
        coloring: Option<Vec<[u64; 3]>>,
        witnesses: Option<Vec<WitnessPath>>,
    },
    Verify {
        verdict: String,
        failing_pair: Option<[usize; 2]>,
        colors_used: usize,
        witnesses: Option<Vec<WitnessPath>>,
    },
    Exact {
        status: String,
        rc: Option<usize>,
        lower: usize,
        upper: usize,
        colorings_tested: u64,
        budget: u64,
        budget_exhausted: bool,
        witness_file: Option<String>,
        witness: Option<Vec<[u64; 3]>>,
    },
    Gen {
        spec: String,
        tries: usize,
        n: usize,
        m: usize,
        out: String,
    },
    FuzzValidate(ValidateTally),
    FuzzHunt(HuntTally),
    Error {
        message: String,
        failing_pair: Option<[usize; 2]>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub index: u64,
    pub seed: u64,
    pub spec: String,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub value: usize,
    pub graphs: u64,
}

/// Adds one graph to the bucket for `value`, keeping buckets sorted.
pub fn bump(hist: &mut Vec<Bucket>, value: usize) {
    match hist.binary_search_by_key(&value, |b| b.value) {
        Ok(i) => hist[i].graphs += 1,
        Err(i) => hist.insert(i, Bucket { value, graphs: 1 }),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidateTally {
    pub family: String,
    pub count: u64,
    pub generated: u64,
    pub generation_failed: u64,
    pub out_of_scope: u64,
    pub verified: u64,
    pub max_colors: usize,
    pub colors_histogram: Vec<Bucket>,
    /// Graphs whose first coloring failed and needed the repair loop.
    pub repair_activations: u64,
    pub repaired_by: BTreeMap<String, u64>,
    pub failures: Vec<FuzzFailure>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct HuntTally {
    pub family: String,
    pub count: u64,
    pub generated: u64,
    pub generation_failed: u64,
    /// Samples that are not bridgeless of diameter 2.
    pub skipped: u64,
    pub decided: u64,
    /// Samples left as bounds by the budget or edge limit.
    pub undecided: u64,
    pub max_exact_rc: Option<usize>,
    /// Largest proven upper bound over all hunted samples.
    pub max_upper: Option<usize>,
    pub rc_histogram: Vec<Bucket>,
    pub findings: u64,
    pub findings_file: String,
}

pub fn to_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
    serde_json::from_str(text)
}

pub fn to_text(report: &RunReport) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = String::new();
    if let Value::Object(map) = &value {
        for (k, v) in map {
            entry(&mut out, 0, k, v);
        }
    }
    out
}

fn entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, inner) in map {
                entry(out, depth + 1, k, inner);
            }
        }
        Value::Array(items) if items.iter().any(|i| !(i.is_number() || i.is_boolean())) => {
            let _ = writeln!(out, "{pad}{key}:");
            for item in items {
                let _ = writeln!(out, "{pad}  - {}", inline(item, " "));
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{key}: {}", inline(v, ", "));
        }
    }
}

fn inline(v: &Value, sep: &str) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "[]".into(),
        Value::Array(items) => items
            .iter()
            .map(|i| inline(i, ","))
            .collect::<Vec<_>>()
            .join(sep),
        Value::Object(map) if map.is_empty() => "{}".into(),
        Value::Object(map) => map
            .iter()
            .map(|(k, i)| format!("{k}={}", inline(i, ",")))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
