use std::path::Path;

use rainbow_core::verify::{RainbowCertificate, Verdict};
use rainbow_core::{
    color_diam2, exact_rc, verify_rainbow_connected, ColorError, ColorOptions, EdgeColoring,
    ExactConfig, Graph, RcValue, SolverError, VerifyOptions,
};

use crate::io::{self, InputError};
use crate::report::{InputSummary, Outcome, WitnessPath};
use crate::{fuzz, Cli, Command, Exit};

/// What a command produced, before timing and metadata are attached.
#[derive(Debug)]
pub struct Done {
    pub input: Option<InputSummary>,
    pub outcome: Outcome,
    pub exit: Exit,
    pub raw: Option<String>,
}

impl Done {
    fn ok(input: Option<InputSummary>, outcome: Outcome) -> Self {
        Done {
            input,
            outcome,
            exit: Exit::Ok,
            raw: None,
        }
    }

    pub(crate) fn fail(
        input: Option<InputSummary>,
        exit: Exit,
        message: impl ToString,
        failing_pair: Option<(usize, usize)>,
    ) -> Self {
        Done {
            input,
            outcome: Outcome::Error {
                message: message.to_string(),
                failing_pair: failing_pair.map(|(u, w)| [u, w]),
            },
            exit,
            raw: None,
        }
    }

    pub(crate) fn input_error(input: Option<InputSummary>, e: InputError) -> Self {
        Done::fail(input, Exit::Input, e, None)
    }
}

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Analyze { .. } => "analyze",
        Command::Color { .. } => "color",
        Command::Verify { .. } => "verify",
        Command::Exact { .. } => "exact",
        Command::Gen { .. } => "gen",
        Command::Fuzz(_) => "fuzz",
    }
}

pub fn dispatch(cli: &Cli) -> Done {
    match &cli.command {
        Command::Analyze { graph } => analyze(graph),
        Command::Color {
            graph,
            center,
            all_centers,
            witnesses,
            out,
        } => {
            let opts = ColorOptions {
                center: *center,
                all_centers: *all_centers,
                witnesses: *witnesses,
                seed: cli.seed,
                ..ColorOptions::default()
            };
            color(graph, &opts, out.as_deref())
        }
        Command::Verify {
            graph,
            coloring,
            witnesses,
        } => verify(graph, coloring, *witnesses),
        Command::Exact {
            graph,
            budget,
            max_colors,
            max_edges,
            out,
        } => {
            let cfg = ExactConfig {
                budget: *budget,
                max_colors: *max_colors,
                max_edges: *max_edges,
                ..ExactConfig::default()
            };
            exact(graph, &cfg, out.as_deref())
        }
        Command::Gen { family, n, out } => match family.spec(*n, cli.seed) {
            Ok(spec) => gen(&spec, out.as_deref()),
            Err(e) => Done::input_error(None, e),
        },
        Command::Fuzz(args) => fuzz::run(args, cli.seed),
    }
}

fn rows(g: &Graph, col: &EdgeColoring) -> Vec<[u64; 3]> {
    col.triples(g)
        .map(|(u, w, c)| [u as u64, w as u64, c as u64])
        .collect()
}

fn witness_paths(cert: &RainbowCertificate) -> Option<Vec<WitnessPath>> {
    cert.witnesses.as_ref().map(|ws| {
        ws.iter()
            .map(|w| WitnessPath {
                pair: [w.pair.0, w.pair.1],
                path: w.path.clone(),
            })
            .collect()
    })
}

pub fn analyze(path: &Path) -> Done {
    let g = match io::read_graph(path) {
        Ok(g) => g,
        Err(e) => return Done::input_error(None, e),
    };
    let summary = InputSummary::of(&g);
    let degrees = (0..g.n()).map(|v| g.degree(v));
    let centers = match summary.radius {
        Some(r) => (0..g.n())
            .filter(|&v| g.bfs_layers(v).eccentricity() == r)
            .collect(),
        None => Vec::new(),
    };
    let outcome = Outcome::Analysis {
        min_degree: degrees.clone().min().unwrap_or(0),
        max_degree: degrees.max().unwrap_or(0),
        components: g.components().len(),
        centers,
    };
    Done::ok(Some(summary), outcome)
}

pub fn color(path: &Path, opts: &ColorOptions, out: Option<&Path>) -> Done {
    let g = match io::read_graph(path) {
        Ok(g) => g,
        Err(e) => return Done::input_error(None, e),
    };
    let summary = InputSummary::of(&g);
    if let Some(c) = opts.center.filter(|&c| c >= g.n()) {
        let e = InputError::Usage(format!("center {c} is not a vertex of the graph"));
        return Done::input_error(Some(summary), e);
    }
    let result = match color_diam2(&g, opts) {
        Ok(r) => r,
        Err(ColorError::OutOfScopeGraph) => {
            return Done::fail(Some(summary), Exit::Input, ColorError::OutOfScopeGraph, None)
        }
        Err(e @ ColorError::ConstructionFailure { failing_pair, .. }) => {
            return Done::fail(Some(summary), Exit::Failure, e, Some(failing_pair))
        }
        Err(e) => return Done::fail(Some(summary), Exit::Failure, e, None),
    };
    let coloring_file = match out {
        Some(p) => {
            if let Err(e) = io::write(p, &io::write_coloring(&g, &result.coloring)) {
                return Done::input_error(Some(summary), e);
            }
            Some(p.display().to_string())
        }
        None => None,
    };
    let outcome = Outcome::Color {
        colors_used: result.colors_used,
        guarantee: result.guarantee,
        construction: result.provenance.construction.name().to_string(),
        center: result.provenance.center,
        repair_attempts: result.provenance.repair_attempts,
        repaired_by: result.provenance.repaired_by.map(|s| s.name().to_string()),
        coloring: coloring_file.is_none().then(|| rows(&g, &result.coloring)),
        coloring_file,
        witnesses: witness_paths(&result.certificate),
    };
    Done::ok(Some(summary), outcome)
}

pub fn verify(graph: &Path, coloring: &Path, witnesses: bool) -> Done {
    let g = match io::read_graph(graph) {
        Ok(g) => g,
        Err(e) => return Done::input_error(None, e),
    };
    let summary = InputSummary::of(&g);
    let col = match io::read(coloring).and_then(|text| io::parse_coloring(&g, &text)) {
        Ok(c) => c,
        Err(e) => return Done::input_error(Some(summary), e),
    };
    let opts = VerifyOptions::default().with_witnesses(witnesses);
    let cert = match verify_rainbow_connected(&g, &col, &opts) {
        Ok(c) => c,
        Err(e) => return Done::input_error(Some(summary), e.into()),
    };
    let (verdict, pair, exit) = match cert.verdict {
        Verdict::Connected => ("connected", None, Exit::Ok),
        Verdict::FailingPair(u, w) => ("failing_pair", Some([u, w]), Exit::Failure),
    };
    Done {
        input: Some(summary),
        outcome: Outcome::Verify {
            verdict: verdict.to_string(),
            failing_pair: pair,
            colors_used: col.colors_used(),
            witnesses: witness_paths(&cert),
        },
        exit,
        raw: None,
    }
}

pub fn exact(path: &Path, cfg: &ExactConfig, out: Option<&Path>) -> Done {
    let g = match io::read_graph(path) {
        Ok(g) => g,
        Err(e) => return Done::input_error(None, e),
    };
    let summary = InputSummary::of(&g);
    let res = match exact_rc(&g, cfg) {
        Ok(r) => r,
        Err(e @ SolverError::OutOfScopeGraph) => {
            return Done::fail(Some(summary), Exit::Input, e, None)
        }
        Err(e) => return Done::fail(Some(summary), Exit::Failure, e, None),
    };
    let (status, rc, lower, upper, exit) = match res.value {
        RcValue::Exact(r) => ("exact", Some(r), r, r, Exit::Ok),
        RcValue::Bounds { lower, upper } => ("bounds", None, lower, upper, Exit::BudgetExhausted),
    };
    let mut witness_file = None;
    let mut witness = None;
    if let Some(col) = &res.witness {
        match out {
            Some(p) => {
                if let Err(e) = io::write(p, &io::write_coloring(&g, col)) {
                    return Done::input_error(Some(summary), e);
                }
                witness_file = Some(p.display().to_string());
            }
            None => witness = Some(rows(&g, col)),
        }
    }
    Done {
        input: Some(summary),
        outcome: Outcome::Exact {
            status: status.to_string(),
            rc,
            lower,
            upper,
            colorings_tested: res.colorings_tested,
            budget: cfg.budget,
            budget_exhausted: res.budget_exhausted,
            witness_file,
            witness,
        },
        exit,
        raw: None,
    }
}

pub fn gen(spec: &rainbow_core::generators::GenSpec, out: Option<&Path>) -> Done {
    use rainbow_core::GenError;
    let generated = match spec.generate() {
        Ok(g) => g,
        Err(e @ GenError::GenerationFailed { .. }) => {
            return Done::fail(None, Exit::BudgetExhausted, e, None)
        }
        Err(e) => return Done::fail(None, Exit::Input, e, None),
    };
    let g = &generated.graph;
    let text = io::write_edge_list(
        g,
        &[format!("gen {spec}"), format!("tries {}", generated.tries)],
    );
    match out {
        None => Done {
            input: None,
            outcome: Outcome::Gen {
                spec: spec.to_string(),
                tries: generated.tries,
                n: g.n(),
                m: g.m(),
                out: "-".into(),
            },
            exit: Exit::Ok,
            raw: Some(text),
        },
        Some(p) => {
            if let Err(e) = io::write(p, &text) {
                return Done::input_error(None, e);
            }
            Done::ok(
                None,
                Outcome::Gen {
                    spec: spec.to_string(),
                    tries: generated.tries,
                    n: g.n(),
                    m: g.m(),
                    out: p.display().to_string(),
                },
            )
        }
    }
}
