//! Batch runs over generated graphs. Tasks are indexed `0..count`, each with
//! its own seed `task_seed(seed, index)`; they run in parallel and are merged
//! in index order, so the tally only depends on the arguments.

use std::fs::OpenOptions;
use std::io::Write as _;

use rainbow_core::generators::{task_seed, GenSpec};
use rainbow_core::verify::Verdict;
use rainbow_core::{
    classify, color_diam2, exact_rc, verify_rainbow_connected, ColorError, ColorOptions,
    Diam2Classification, ExactConfig, GenError, Graph, RcValue, VerifyOptions,
};
use rayon::prelude::*;

use crate::commands::Done;
use crate::io::{self, InputError};
use crate::report::{bump, FuzzFailure, HuntTally, Outcome, ValidateTally};
use crate::{Exit, FuzzArgs, FuzzMode};

enum Sample {
    Failed,
    Ready(GenSpec, Graph),
}

fn sample(args: &FuzzArgs, seed: u64, index: u64) -> Result<(u64, Sample), InputError> {
    let n = match (args.n, args.n_max) {
        (Some(lo), Some(hi)) => Some(lo + (index % (hi - lo + 1) as u64) as usize),
        (n, _) => n,
    };
    let seed = task_seed(seed, index);
    let spec = args.family.spec(n, seed)?;
    match spec.generate() {
        Ok(g) => Ok((seed, Sample::Ready(spec, g.graph))),
        Err(GenError::GenerationFailed { .. }) => Ok((seed, Sample::Failed)),
        Err(e @ GenError::InvalidSpec(_)) => Err(InputError::Usage(e.to_string())),
    }
}

fn family_name(args: &FuzzArgs) -> String {
    use clap::ValueEnum;
    let name = args.family.family.to_possible_value().expect("named family");
    name.get_name().to_string()
}

pub fn run(args: &FuzzArgs, seed: u64) -> Done {
    if let (Some(lo), Some(hi)) = (args.n, args.n_max) {
        if hi < lo {
            let e = InputError::Usage(format!("--n-max {hi} is below --n {lo}"));
            return Done::input_error(None, e);
        }
    }
    match args.mode {
        FuzzMode::Validate => validate(args, seed),
        FuzzMode::HuntRc5 => hunt(args, seed),
    }
}

enum Checked {
    GenFailed,
    OutOfScope,
    Colored {
        colors: usize,
        repair_attempts: usize,
        repaired_by: Option<&'static str>,
    },
    Failed(FuzzFailure),
}

fn validate_one(args: &FuzzArgs, seed: u64, index: u64) -> Result<Checked, InputError> {
    let (task, Sample::Ready(spec, g)) = sample(args, seed, index)? else {
        return Ok(Checked::GenFailed);
    };
    let failure = |reason: String| {
        Checked::Failed(FuzzFailure {
            index,
            seed: task,
            spec: spec.to_string(),
            reason,
        })
    };
    let opts = ColorOptions {
        seed: task,
        ..ColorOptions::default()
    };
    let out = match color_diam2(&g, &opts) {
        Ok(out) => out,
        Err(ColorError::OutOfScopeGraph) => return Ok(Checked::OutOfScope),
        Err(e) => return Ok(failure(e.to_string())),
    };
    // checked again from scratch, independently of the colorer's own check
    match verify_rainbow_connected(&g, &out.coloring, &VerifyOptions::default()) {
        Ok(cert) if cert.verdict == Verdict::Connected => {}
        Ok(cert) => return Ok(failure(format!("re-verification failed: {:?}", cert.verdict))),
        Err(e) => return Ok(failure(format!("re-verification error: {e}"))),
    }
    if out.colors_used > out.guarantee {
        return Ok(failure(format!(
            "{} colors exceed the guarantee of {}",
            out.colors_used, out.guarantee
        )));
    }
    Ok(Checked::Colored {
        colors: out.colors_used,
        repair_attempts: out.provenance.repair_attempts,
        repaired_by: out.provenance.repaired_by.map(|s| s.name()),
    })
}

fn validate(args: &FuzzArgs, seed: u64) -> Done {
    let results: Vec<_> = (0..args.count)
        .into_par_iter()
        .map(|i| validate_one(args, seed, i))
        .collect();
    let mut t = ValidateTally {
        family: family_name(args),
        count: args.count,
        ..ValidateTally::default()
    };
    for r in results {
        let r = match r {
            Ok(r) => r,
            Err(e) => return Done::input_error(None, e),
        };
        if !matches!(r, Checked::GenFailed) {
            t.generated += 1;
        }
        match r {
            Checked::GenFailed => t.generation_failed += 1,
            Checked::OutOfScope => t.out_of_scope += 1,
            Checked::Colored {
                colors,
                repair_attempts,
                repaired_by,
            } => {
                t.verified += 1;
                t.max_colors = t.max_colors.max(colors);
                bump(&mut t.colors_histogram, colors);
                if repair_attempts > 0 {
                    t.repair_activations += 1;
                }
                if let Some(stage) = repaired_by {
                    *t.repaired_by.entry(stage.to_string()).or_default() += 1;
                }
            }
            Checked::Failed(f) => t.failures.push(f),
        }
    }
    let exit = if t.failures.is_empty() { Exit::Ok } else { Exit::Failure };
    Done {
        input: None,
        outcome: Outcome::FuzzValidate(t),
        exit,
        raw: None,
    }
}

enum Hunted {
    GenFailed,
    Skipped,
    Solved {
        value: RcValue,
        finding: Option<String>,
    },
}

fn hunt_one(args: &FuzzArgs, seed: u64, index: u64) -> Result<Hunted, InputError> {
    let (task, Sample::Ready(spec, g)) = sample(args, seed, index)? else {
        return Ok(Hunted::GenFailed);
    };
    let in_scope = matches!(
        classify(&g),
        Diam2Classification::TwoConnected | Diam2Classification::BridgelessCutVertex { .. }
    );
    if !in_scope {
        return Ok(Hunted::Skipped);
    }
    let cfg = ExactConfig {
        budget: args.budget,
        max_edges: args.max_edges,
        ..ExactConfig::default()
    };
    let res = exact_rc(&g, &cfg).map_err(|e| InputError::Usage(e.to_string()))?;
    let lower = match res.value {
        RcValue::Exact(r) => r,
        RcValue::Bounds { lower, .. } => lower,
    };
    let finding = (lower >= 5).then(|| {
        io::write_edge_list(
            &g,
            &[
                format!("finding index={index} seed={task} value={:?}", res.value),
                format!("gen {spec}"),
            ],
        )
    });
    Ok(Hunted::Solved {
        value: res.value,
        finding,
    })
}

fn hunt(args: &FuzzArgs, seed: u64) -> Done {
    // created up front so an empty file records a run without findings
    let mut file = match OpenOptions::new().create(true).append(true).open(&args.findings) {
        Ok(f) => f,
        Err(source) => {
            let e = InputError::Write {
                path: args.findings.clone(),
                source,
            };
            return Done::input_error(None, e);
        }
    };
    let results: Vec<_> = (0..args.count)
        .into_par_iter()
        .map(|i| hunt_one(args, seed, i))
        .collect();
    let mut t = HuntTally {
        family: family_name(args),
        count: args.count,
        findings_file: args.findings.display().to_string(),
        ..HuntTally::default()
    };
    for r in results {
        let r = match r {
            Ok(r) => r,
            Err(e) => return Done::input_error(None, e),
        };
        if !matches!(r, Hunted::GenFailed) {
            t.generated += 1;
        }
        match r {
            Hunted::GenFailed => t.generation_failed += 1,
            Hunted::Skipped => t.skipped += 1,
            Hunted::Solved { value, finding } => {
                let upper = match value {
                    RcValue::Exact(rc) => {
                        t.decided += 1;
                        t.max_exact_rc = t.max_exact_rc.max(Some(rc));
                        bump(&mut t.rc_histogram, rc);
                        rc
                    }
                    RcValue::Bounds { upper, .. } => {
                        t.undecided += 1;
                        upper
                    }
                };
                t.max_upper = t.max_upper.max(Some(upper));
                if let Some(text) = finding {
                    t.findings += 1;
                    if let Err(source) = file.write_all(text.as_bytes()) {
                        let e = InputError::Write {
                            path: args.findings.clone(),
                            source,
                        };
                        return Done::input_error(None, e);
                    }
                }
            }
        }
    }
    Done {
        input: None,
        outcome: Outcome::FuzzHunt(t),
        exit: Exit::Ok,
        raw: None,
    }
}
