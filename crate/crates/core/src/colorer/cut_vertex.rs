use alloc::format;
use alloc::vec::Vec;

use super::{classify, finish, BridgedSplit, ColorOptions, ColoringOutcome, Construction};
use super::{Diam2Classification, Provenance};
use crate::error::ColorError;
use crate::graph::{Graph, Side, Vertex};
use crate::verify::{Color, EdgeColoring};

/// Colors a diameter-2 graph with `k >= 1` bridges using at most `k + 2`
/// colors. `split` must be the graph's own classification.
pub fn color_bridged(
    g: &Graph,
    split: &BridgedSplit,
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    match classify(g) {
        Diam2Classification::BridgedCutVertex(actual) if actual == *split => bridged(g, split, opts),
        other => Err(ColorError::WrongCase(format!(
            "expected BridgedCutVertex matching the given split, graph is {}",
            other.tag()
        ))),
    }
}

/// Colors a bridgeless diameter-2 graph with a cut vertex using at most 3
/// colors.
pub fn color_cutvertex_bridgeless(
    g: &Graph,
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    match classify(g) {
        Diam2Classification::BridgelessCutVertex {
            cut_vertex,
            components,
        } => bridgeless(g, cut_vertex, &components, opts),
        other => Err(ColorError::WrongCase(format!(
            "expected BridgelessCutVertex, graph is {}",
            other.tag()
        ))),
    }
}

pub(super) fn bridged(
    g: &Graph,
    split: &BridgedSplit,
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    let v = split.cut_vertex;
    let k = split.bridge_count;
    let mut colors: Vec<Color> = alloc::vec![1; g.m()];
    for (i, &leaf) in split.trivial.iter().enumerate() {
        colors[g.edge_id(v, leaf).expect("bridge to pendant vertex")] = i as Color + 1;
    }
    let construction = if split.nontrivial.is_empty() {
        Construction::DistinctBridges
    } else {
        let rest: Vec<Vertex> = split.nontrivial.iter().flatten().copied().collect();
        color_apex_edges(g, v, &rest, k as Color + 1, k as Color + 2, &mut colors)?;
        Construction::BridgesWithForest
    };
    finish(
        g,
        EdgeColoring::new(colors)?,
        k + 2,
        Provenance::direct(construction, Some(v)),
        opts,
    )
}

pub(super) fn bridgeless(
    g: &Graph,
    v: Vertex,
    components: &[Vec<Vertex>],
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    let rest: Vec<Vertex> = components.iter().flatten().copied().collect();
    let mut colors: Vec<Color> = alloc::vec![1; g.m()];
    color_apex_edges(g, v, &rest, 2, 3, &mut colors)?;
    finish(
        g,
        EdgeColoring::new(colors)?,
        3,
        Provenance::direct(Construction::CutVertexForest, Some(v)),
        opts,
    )
}

// Spanning forest of G[rest] split into two sides; apex edges to the left
// side get `left`, to the right side `right`. Other edges keep their color.
fn color_apex_edges(
    g: &Graph,
    apex: Vertex,
    rest: &[Vertex],
    left: Color,
    right: Color,
    colors: &mut [Color],
) -> Result<(), ColorError> {
    let forest = g
        .spanning_forest_bipartition(rest, true)
        .map_err(|e| ColorError::StructureViolation(format!("{e}")))?;
    for &u in rest {
        let e = g
            .edge_id(apex, u)
            .ok_or_else(|| ColorError::StructureViolation(format!("{u} not adjacent to cut vertex {apex}")))?;
        colors[e] = match forest.side_of(u) {
            Some(Side::Left) => left,
            _ => right,
        };
    }
    Ok(())
}
