//! Exact rainbow connection numbers by exhaustive search.
//!
//! Colorings are enumerated as restricted-growth strings: the first edge has
//! color 0 and each later edge uses at most one more than the largest color
//! seen so far. Each set partition of the edges is visited once, which
//! removes the `c!` symmetry of renaming colors. Levels `c` run upward from
//! a lower bound, and a level only visits strings with exactly `c` classes;
//! colorings with fewer classes were covered by earlier levels.

use alloc::vec;
use alloc::vec::Vec;

use crate::colorer::{color_diam2, ColorOptions};
use crate::error::SolverError;
use crate::graph::Graph;
use crate::verify::{Color, EdgeColoring, RainbowChecker, MAX_COLOR_CAP};

pub const DEFAULT_BUDGET: u64 = 50_000_000;
pub const DEFAULT_MAX_EDGES: usize = 20;
/// Budget of the exhaustive last resort inside the 2-connected colorer.
pub const DEFAULT_FALLBACK_BUDGET: u64 = 1_000_000;
pub const PROGRESS_INTERVAL: u64 = 1 << 20;

/// Restricted-growth strings of length `m` with exactly `classes` distinct
/// values, in lexicographic order.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    classes: usize,
    current: Vec<u8>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(m: usize, classes: usize) -> Self {
        assert!(classes <= u8::MAX as usize);
        let feasible = classes <= m && (classes > 0 || m == 0);
        let mut current = vec![0u8; m];
        if feasible && classes > 0 {
            // smallest string: zeros, then 1, 2, ..., classes-1 at the end
            for i in 1..classes {
                current[m - classes + i] = i as u8;
            }
        }
        Self {
            classes,
            current,
            started: false,
            done: !feasible,
        }
    }

    /// Moves to the next string; returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let m = self.current.len();
        if m == 0 {
            self.done = true;
            return false;
        }
        let top = self.classes as u8 - 1;
        let mut prefix_max = vec![0u8; m];
        for i in 1..m {
            prefix_max[i] = prefix_max[i - 1].max(self.current[i - 1]);
        }
        for i in (1..m).rev() {
            let next = self.current[i] + 1;
            if next > top || next > prefix_max[i] + 1 {
                continue;
            }
            let high = prefix_max[i].max(next);
            let missing = (top - high) as usize;
            if m - 1 - i < missing {
                continue;
            }
            self.current[i] = next;
            for slot in &mut self.current[i + 1..] {
                *slot = 0;
            }
            for j in 0..missing {
                self.current[m - missing + j] = high + 1 + j as u8;
            }
            return true;
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[u8] {
        &self.current
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    /// Colorings that may be verified before giving up.
    pub budget: u64,
    /// Graphs with more edges only get bounds.
    pub max_edges: usize,
    /// Highest level to search; bounds are reported above it.
    pub max_colors: Option<usize>,
    pub progress_interval: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            max_edges: DEFAULT_MAX_EDGES,
            max_colors: None,
            progress_interval: PROGRESS_INTERVAL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcValue {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcResult {
    pub value: RcValue,
    pub colorings_tested: u64,
    pub budget_exhausted: bool,
    /// A verified coloring with the exact value, or with `upper` colors.
    pub witness: Option<EdgeColoring>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub level: usize,
    pub colorings_tested: u64,
}

/// `diam(G)`, raised to the bridge count when the graph has diameter at
/// most 2 and a cut vertex: there all bridges hang off one vertex and the
/// path between two pendant vertices uses both bridges, so bridges need
/// pairwise distinct colors.
pub fn rc_lower_bound(g: &Graph) -> Result<usize, SolverError> {
    if g.n() <= 1 {
        return Ok(0);
    }
    let d = g.diameter().ok_or(SolverError::OutOfScopeGraph)?;
    if d <= 2 && !g.cut_vertices().is_empty() {
        return Ok(d.max(g.bridges().len()));
    }
    Ok(d)
}

pub fn exact_rc(g: &Graph, cfg: &ExactConfig) -> Result<RcResult, SolverError> {
    exact_rc_with_progress(g, cfg, &mut |_| {})
}

pub fn exact_rc_with_progress(
    g: &Graph,
    cfg: &ExactConfig,
    progress: &mut dyn FnMut(Progress),
) -> Result<RcResult, SolverError> {
    let lower = rc_lower_bound(g)?;
    if g.n() <= 1 {
        return Ok(RcResult {
            value: RcValue::Exact(0),
            colorings_tested: 0,
            budget_exhausted: false,
            witness: Some(EdgeColoring::all_distinct(0)),
        });
    }
    let (upper, upper_coloring) = upper_bound(g);
    let bounds = |lower: usize, tested: u64, exhausted: bool| RcResult {
        value: RcValue::Bounds { lower, upper },
        colorings_tested: tested,
        budget_exhausted: exhausted,
        witness: Some(upper_coloring.clone()),
    };
    if lower >= upper {
        return Ok(RcResult {
            value: RcValue::Exact(upper),
            colorings_tested: 0,
            budget_exhausted: false,
            witness: Some(upper_coloring.clone()),
        });
    }
    if g.m() > cfg.max_edges {
        return Ok(bounds(lower, 0, false));
    }
    let top = (upper - 1).min(cfg.max_colors.unwrap_or(usize::MAX));
    match search_levels(g, lower, top, cfg.budget, cfg.progress_interval, progress) {
        LevelSearch::Found { level, coloring, tested } => Ok(RcResult {
            value: RcValue::Exact(level),
            colorings_tested: tested,
            budget_exhausted: false,
            witness: Some(coloring),
        }),
        LevelSearch::OutOfBudget { level, tested } => Ok(bounds(level, tested, true)),
        LevelSearch::Exhausted { tested } if top + 1 == upper => Ok(RcResult {
            value: RcValue::Exact(upper),
            colorings_tested: tested,
            budget_exhausted: false,
            witness: Some(upper_coloring.clone()),
        }),
        LevelSearch::Exhausted { tested } => Ok(bounds(top + 1, tested, false)),
    }
}

fn upper_bound(g: &Graph) -> (usize, EdgeColoring) {
    let opts = ColorOptions {
        fallback_budget: 0,
        ..ColorOptions::default()
    };
    match color_diam2(g, &opts) {
        Ok(out) => (out.colors_used, out.coloring),
        // any spanning-tree path is rainbow when all colors differ
        Err(_) => (g.m(), EdgeColoring::all_distinct(g.m())),
    }
}

/// Result of a bounded search for a coloring with at most `max_colors`
/// colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub coloring: Option<EdgeColoring>,
    pub colorings_tested: u64,
}

/// Searches levels from the lower bound up to `max_colors` for any
/// rainbow coloring, testing at most `budget` colorings.
pub fn search_coloring(g: &Graph, max_colors: usize, budget: u64) -> SearchOutcome {
    let Ok(lower) = rc_lower_bound(g) else {
        return SearchOutcome {
            coloring: None,
            colorings_tested: 0,
        };
    };
    match search_levels(g, lower.max(1), max_colors, budget, u64::MAX, &mut |_| {}) {
        LevelSearch::Found { coloring, tested, .. } => SearchOutcome {
            coloring: Some(coloring),
            colorings_tested: tested,
        },
        LevelSearch::OutOfBudget { tested, .. } | LevelSearch::Exhausted { tested } => {
            SearchOutcome {
                coloring: None,
                colorings_tested: tested,
            }
        }
    }
}

enum LevelSearch {
    Found {
        level: usize,
        coloring: EdgeColoring,
        tested: u64,
    },
    OutOfBudget {
        level: usize,
        tested: u64,
    },
    Exhausted {
        tested: u64,
    },
}

fn search_levels(
    g: &Graph,
    from: usize,
    to: usize,
    budget: u64,
    progress_interval: u64,
    progress: &mut dyn FnMut(Progress),
) -> LevelSearch {
    let mut checker = RainbowChecker::new(g);
    let mut tested = 0u64;
    let mut hint = None;
    for level in from..=to.min(g.m()) {
        if level > MAX_COLOR_CAP {
            return LevelSearch::OutOfBudget { level, tested };
        }
        let mut strings = RestrictedGrowth::new(g.m(), level);
        while strings.advance() {
            if tested >= budget {
                return LevelSearch::OutOfBudget { level, tested };
            }
            tested += 1;
            if tested % progress_interval == 0 {
                progress(Progress {
                    level,
                    colorings_tested: tested,
                });
            }
            let dense = strings.current();
            match checker.first_failing_pair(dense, level, hint) {
                None => {
                    let colors: Vec<Color> = dense.iter().map(|&c| c as Color + 1).collect();
                    return LevelSearch::Found {
                        level,
                        coloring: EdgeColoring::new(colors).expect("positive colors"),
                        tested,
                    };
                }
                Some(pair) => hint = Some(pair),
            }
        }
    }
    LevelSearch::Exhausted { tested }
}
