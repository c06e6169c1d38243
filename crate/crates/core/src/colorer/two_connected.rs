//! Five-coloring of 2-connected diameter-2 graphs, with a bounded repair
//! loop around the layered construction.
//!
//! Color classes, by the roles of an edge's endpoints:
//!
//! | edge            | second layer spans an edge | second layer independent |
//! |-----------------|----------------------------|--------------------------|
//! | v–X             | 1                          | 1                        |
//! | v–Y             | 2                          | 2                        |
//! | X–Y, Y–A        | 3                          | 3                        |
//! | B1–B2           | 3                          | –                        |
//! | X–A             | 4                          | 4                        |
//! | X–B1            | 4                          | –                        |
//! | Y–B2            | 5                          | –                        |
//! | X–D1            | 5 on the designated edge, else 4 | same               |
//! | anything else   | 5                          | 4                        |

use alloc::format;
use alloc::vec::Vec;

use super::partition::{check_two_connected_diam2, partition, NeighborhoodPartition};
use super::partition::{PartitionVariant, Role};
use super::{finish, ColorOptions, ColoringOutcome, Construction, Provenance, RepairStage};
use crate::error::ColorError;
use crate::exact;
use crate::generators::task_seed;
use crate::graph::{ForestOrder, Graph, Vertex};
use crate::verify::{Color, EdgeColoring, RainbowChecker};

const GUARANTEE: usize = 5;
const RANDOM_FOREST_TRIES: u64 = 8;
// Ceiling on colorings checked while re-designating fifth-color edges for
// one partition.
const REDESIGNATION_LIMIT: usize = 512;

/// Applies the color classes to a partition.
pub fn color_by_roles(
    g: &Graph,
    part: &NeighborhoodPartition,
) -> Result<EdgeColoring, ColorError> {
    let shared = !part.b_is_empty();
    let residual = if shared { 5 } else { 4 };
    let mut colors: Vec<Color> = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        let (ra, rb) = (part.role[a], part.role[b]);
        let (lo, hi, lo_v, hi_v) = if ra <= rb { (ra, rb, a, b) } else { (rb, ra, b, a) };
        use Role::*;
        let c = match (lo, hi) {
            (Center, X) => 1,
            (Center, Y) => 2,
            (X, Y) | (Y, A) => 3,
            (X, A) => 4,
            (X, D1) => {
                if part.five_edge_of(hi_v) == Some(lo_v) {
                    5
                } else {
                    4
                }
            }
            (B1, B2) if shared => 3,
            (X, B1) if shared => 4,
            (Y, B2) if shared => 5,
            (X, X) | (Y, Y) => residual,
            (X, B2) | (Y, B1) | (B1, B1) | (B2, B2) if shared => residual,
            _ => {
                return Err(ColorError::StructureViolation(format!(
                    "edge ({a}, {b}) joins {ra:?} and {rb:?}, outside every color class"
                )))
            }
        };
        colors.push(c);
    }
    Ok(EdgeColoring::new(colors)?)
}

/// Colors a 2-connected graph of diameter at most 2 with at most 5 colors.
pub fn color_two_connected(
    g: &Graph,
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    check_two_connected_diam2(g)?;
    color(g, opts)
}

struct Success {
    coloring: EdgeColoring,
    center: Vertex,
    construction: Construction,
    redesignated: bool,
}

struct Repair<'g> {
    g: &'g Graph,
    checker: RainbowChecker<'g>,
    attempts: usize,
    first_failure: Option<(Vertex, Vertex)>,
}

impl<'g> Repair<'g> {
    fn check(&mut self, col: &EdgeColoring) -> Option<(Vertex, Vertex)> {
        self.attempts += 1;
        let dense: Vec<u8> = col.colors().iter().map(|&c| (c - 1) as u8).collect();
        let fail = self.checker.first_failing_pair(&dense, GUARANTEE, None);
        if self.first_failure.is_none() {
            self.first_failure = fail;
        }
        fail
    }

    fn try_variant(
        &mut self,
        center: Vertex,
        variant: PartitionVariant,
    ) -> Result<Option<Success>, ColorError> {
        let mut part = partition(self.g, center, variant)?;
        let construction = if part.b_is_empty() {
            Construction::TwoConnectedAuxiliary
        } else {
            Construction::TwoConnectedSharedLayer
        };
        let col = color_by_roles(self.g, &part)?;
        let Some(fail) = self.check(&col) else {
            return Ok(Some(Success {
                coloring: col,
                center,
                construction,
                redesignated: false,
            }));
        };
        Ok(self.redesignate(&mut part, fail)?.map(|coloring| Success {
            coloring,
            center,
            construction,
            redesignated: true,
        }))
    }

    // Moves the fifth color to other X-edges of D1 vertices, one vertex at a
    // time. A move is kept when the least failing pair moves strictly later;
    // the failing pair's own D1 endpoints are tried first.
    fn redesignate(
        &mut self,
        part: &mut NeighborhoodPartition,
        mut failing: (Vertex, Vertex),
    ) -> Result<Option<EdgeColoring>, ColorError> {
        let d1 = part.members(Role::D1);
        if d1.is_empty() {
            return Ok(None);
        }
        let budget_end = self.attempts + REDESIGNATION_LIMIT;
        'climb: loop {
            let mut order: Vec<Vertex> = d1
                .iter()
                .copied()
                .filter(|&d| d == failing.0 || d == failing.1)
                .collect();
            order.extend(d1.iter().copied().filter(|&d| d != failing.0 && d != failing.1));
            for d in order {
                let original = part.five_edge_of(d).expect("designated edge");
                let options: Vec<Vertex> = self
                    .g
                    .neighbors(d)
                    .iter()
                    .copied()
                    .filter(|&x| x != original && part.role[x] == Role::X)
                    .collect();
                for x in options {
                    if self.attempts >= budget_end {
                        return Ok(None);
                    }
                    part.set_five_edge(d, x);
                    let col = color_by_roles(self.g, part)?;
                    match self.check(&col) {
                        None => return Ok(Some(col)),
                        Some(p) if p > failing => {
                            failing = p;
                            continue 'climb;
                        }
                        Some(_) => part.set_five_edge(d, original),
                    }
                }
            }
            return Ok(None);
        }
    }
}

pub(super) fn color(g: &Graph, opts: &ColorOptions) -> Result<ColoringOutcome, ColorError> {
    let n = g.n();
    let default_center = opts.center.unwrap_or(0);
    if default_center >= n {
        return Err(ColorError::WrongCase(format!("center {default_center} out of range")));
    }
    let mut repair = Repair {
        g,
        checker: RainbowChecker::new(g),
        attempts: 0,
        first_failure: None,
    };
    let plain = PartitionVariant::default();
    let flipped = PartitionVariant {
        flip: true,
        ..plain
    };

    let mut found: Option<(Success, Option<RepairStage>)> = None;

    if opts.all_centers {
        let mut best: Option<(Success, Option<RepairStage>)> = None;
        for center in 0..n {
            for (variant, stage) in [(plain, None), (flipped, Some(RepairStage::Orientation))] {
                if let Some(s) = repair.try_variant(center, variant)? {
                    let stage = if s.redesignated { stage.or(Some(RepairStage::Redesignate)) } else { stage };
                    let better = best
                        .as_ref()
                        .is_none_or(|(b, _)| s.coloring.colors_used() < b.coloring.colors_used());
                    if better {
                        best = Some((s, stage));
                    }
                    break;
                }
            }
        }
        found = best;
    } else {
        if let Some(s) = repair.try_variant(default_center, plain)? {
            let stage = s.redesignated.then_some(RepairStage::Redesignate);
            found = Some((s, stage));
        }
        if found.is_none() {
            if let Some(s) = repair.try_variant(default_center, flipped)? {
                found = Some((s, Some(RepairStage::Orientation)));
            }
        }
        'centers: for center in (0..n).filter(|&c| c != default_center) {
            if found.is_some() {
                break;
            }
            for variant in [plain, flipped] {
                if let Some(s) = repair.try_variant(center, variant)? {
                    found = Some((s, Some(RepairStage::OtherCenter)));
                    break 'centers;
                }
            }
        }
    }

    if found.is_none() {
        for t in 0..RANDOM_FOREST_TRIES {
            let center = (default_center + t as usize) % n;
            let variant = PartitionVariant {
                flip: t % 2 == 1,
                forest: ForestOrder::Shuffled(task_seed(opts.seed, t)),
            };
            if let Some(s) = repair.try_variant(center, variant)? {
                found = Some((s, Some(RepairStage::RandomForest)));
                break;
            }
        }
    }

    let (coloring, provenance) = match found {
        Some((s, stage)) => (
            s.coloring,
            Provenance {
                construction: s.construction,
                center: Some(s.center),
                repair_attempts: if stage.is_some() { repair.attempts - 1 } else { 0 },
                repaired_by: stage,
            },
        ),
        None => {
            let attempts = repair.attempts;
            let search = exact::search_coloring(g, GUARANTEE, opts.fallback_budget);
            match search.coloring {
                Some(col) => (
                    col,
                    Provenance {
                        construction: Construction::ExactSearch,
                        center: None,
                        repair_attempts: attempts - 1 + search.colorings_tested as usize,
                        repaired_by: Some(RepairStage::ExactSearch),
                    },
                ),
                None => {
                    return Err(ColorError::ConstructionFailure {
                        failing_pair: repair.first_failure.unwrap_or((0, 0)),
                        attempts: attempts + search.colorings_tested as usize,
                    })
                }
            }
        }
    };
    finish(g, coloring, GUARANTEE, provenance, opts)
}
