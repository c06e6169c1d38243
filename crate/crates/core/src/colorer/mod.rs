//! Constructive rainbow colorings for graphs of diameter at most 2.
//!
//! A connected diameter-2 graph either has bridges (then a unique cut vertex
//! adjacent to everything, colored with `k + 2` colors for `k` bridges), is
//! bridgeless with a single cut vertex (3 colors), or is 2-connected
//! (5 colors, built from the distance layers around a chosen center).
//! Every outcome is checked by the independent verifier before it is
//! returned.

mod cut_vertex;
mod partition;
mod two_connected;

use alloc::vec::Vec;

pub use cut_vertex::{color_bridged, color_cutvertex_bridgeless};
pub use partition::{
    build_auxiliary_h, partition_case_b_nonempty, partition_case_b_empty, AuxiliaryGraph,
    NeighborhoodPartition, PartitionVariant, Role,
};
pub use two_connected::{color_by_roles, color_two_connected};

use crate::error::ColorError;
use crate::exact::DEFAULT_FALLBACK_BUDGET;
use crate::graph::{Graph, Vertex};
use crate::verify::{
    verify_rainbow_connected, EdgeColoring, RainbowCertificate, Verdict, VerifyOptions,
};

/// Cut-vertex structure of a diameter-2 graph with bridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgedSplit {
    pub cut_vertex: Vertex,
    pub bridge_count: usize,
    /// Number of components of `G - v`.
    pub component_count: usize,
    /// Single-vertex components of `G - v` (the far ends of the bridges).
    pub trivial: Vec<Vertex>,
    pub nontrivial: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diam2Classification {
    NotDiameterAtMost2,
    /// Diameter at most 1 (complete graphs, including `K1` and `K2`).
    CompleteLike,
    BridgedCutVertex(BridgedSplit),
    BridgelessCutVertex {
        cut_vertex: Vertex,
        components: Vec<Vec<Vertex>>,
    },
    TwoConnected,
}

impl Diam2Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Diam2Classification::NotDiameterAtMost2 => "NotDiameterAtMost2",
            Diam2Classification::CompleteLike => "CompleteLike",
            Diam2Classification::BridgedCutVertex(_) => "BridgedCutVertex",
            Diam2Classification::BridgelessCutVertex { .. } => "BridgelessCutVertex",
            Diam2Classification::TwoConnected => "TwoConnected",
        }
    }

    /// Color budget the matching construction guarantees.
    pub fn guarantee(&self) -> Option<usize> {
        match self {
            Diam2Classification::NotDiameterAtMost2 => None,
            Diam2Classification::CompleteLike => Some(1),
            Diam2Classification::BridgedCutVertex(s) => Some(s.bridge_count + 2),
            Diam2Classification::BridgelessCutVertex { .. } => Some(3),
            Diam2Classification::TwoConnected => Some(5),
        }
    }
}

pub fn classify(g: &Graph) -> Diam2Classification {
    match g.diameter() {
        None => return Diam2Classification::NotDiameterAtMost2,
        Some(d) if d > 2 => return Diam2Classification::NotDiameterAtMost2,
        Some(d) if d <= 1 => return Diam2Classification::CompleteLike,
        Some(_) => {}
    }
    let bridges = g.bridges();
    let cuts = g.cut_vertices();
    if cuts.is_empty() {
        return Diam2Classification::TwoConnected;
    }
    // Diameter 2 forces a unique cut vertex adjacent to all other vertices.
    assert_eq!(cuts.len(), 1, "diameter-2 graph with several cut vertices");
    let v = cuts[0];
    assert_eq!(g.degree(v), g.n() - 1, "cut vertex of a diameter-2 graph is universal");
    let components = g.components_without(v);
    if bridges.is_empty() {
        return Diam2Classification::BridgelessCutVertex {
            cut_vertex: v,
            components,
        };
    }
    let component_count = components.len();
    let (trivial, nontrivial): (Vec<_>, Vec<_>) =
        components.into_iter().partition(|c| c.len() == 1);
    let trivial: Vec<Vertex> = trivial.into_iter().map(|c| c[0]).collect();
    assert_eq!(trivial.len(), bridges.len(), "every bridge ends in a pendant vertex");
    Diam2Classification::BridgedCutVertex(BridgedSplit {
        cut_vertex: v,
        bridge_count: bridges.len(),
        component_count,
        trivial,
        nontrivial,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Diameter at most 1: one color everywhere.
    Uniform,
    /// Every component of `G - v` trivial: distinct bridge colors.
    DistinctBridges,
    /// Distinct bridge colors plus a forest bipartition of the rest.
    BridgesWithForest,
    /// Bridgeless with a cut vertex: forest bipartition of `G - v`.
    CutVertexForest,
    /// 2-connected, second layer spans at least one edge.
    TwoConnectedSharedLayer,
    /// 2-connected, second layer independent; auxiliary graph on `N(v)`.
    TwoConnectedAuxiliary,
    /// Found by the bounded exhaustive search.
    ExactSearch,
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::Uniform => "uniform",
            Construction::DistinctBridges => "distinct_bridges",
            Construction::BridgesWithForest => "bridges_with_forest",
            Construction::CutVertexForest => "cut_vertex_forest",
            Construction::TwoConnectedSharedLayer => "two_connected_shared_layer",
            Construction::TwoConnectedAuxiliary => "two_connected_auxiliary",
            Construction::ExactSearch => "exact_search",
        }
    }
}

/// Repair stage that produced the final coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepairStage {
    Redesignate,
    Orientation,
    OtherCenter,
    RandomForest,
    ExactSearch,
}

impl RepairStage {
    pub fn name(&self) -> &'static str {
        match self {
            RepairStage::Redesignate => "redesignate",
            RepairStage::Orientation => "orientation",
            RepairStage::OtherCenter => "other_center",
            RepairStage::RandomForest => "random_forest",
            RepairStage::ExactSearch => "exact_search",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub construction: Construction,
    pub center: Option<Vertex>,
    /// Colorings checked after the first one failed.
    pub repair_attempts: usize,
    pub repaired_by: Option<RepairStage>,
}

impl Provenance {
    fn direct(construction: Construction, center: Option<Vertex>) -> Self {
        Self {
            construction,
            center,
            repair_attempts: 0,
            repaired_by: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringOutcome {
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    pub guarantee: usize,
    pub provenance: Provenance,
    pub certificate: RainbowCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorOptions {
    /// Center for the 2-connected construction (default: vertex 0).
    pub center: Option<Vertex>,
    /// Try every center and keep the coloring with the fewest colors
    /// (ties: least center).
    pub all_centers: bool,
    pub witnesses: bool,
    /// Colorings the last-resort exhaustive search may test; 0 disables it.
    pub fallback_budget: u64,
    /// Seed for the randomized spanning forests of the repair loop.
    pub seed: u64,
}

impl Default for ColorOptions {
    fn default() -> Self {
        Self {
            center: None,
            all_centers: false,
            witnesses: false,
            fallback_budget: DEFAULT_FALLBACK_BUDGET,
            seed: 0,
        }
    }
}

/// Colors any connected graph of diameter at most 2 within the budget of
/// its structural class.
pub fn color_diam2(g: &Graph, opts: &ColorOptions) -> Result<ColoringOutcome, ColorError> {
    match classify(g) {
        Diam2Classification::NotDiameterAtMost2 => Err(ColorError::OutOfScopeGraph),
        Diam2Classification::CompleteLike => finish(
            g,
            EdgeColoring::uniform(g.m(), 1),
            1,
            Provenance::direct(Construction::Uniform, None),
            opts,
        ),
        Diam2Classification::BridgedCutVertex(split) => cut_vertex::bridged(g, &split, opts),
        Diam2Classification::BridgelessCutVertex {
            cut_vertex,
            components,
        } => cut_vertex::bridgeless(g, cut_vertex, &components, opts),
        Diam2Classification::TwoConnected => two_connected::color(g, opts),
    }
}

/// Runs the verifier and packages an outcome; a failing verdict is a
/// construction failure.
fn finish(
    g: &Graph,
    coloring: EdgeColoring,
    guarantee: usize,
    provenance: Provenance,
    opts: &ColorOptions,
) -> Result<ColoringOutcome, ColorError> {
    let certificate = verify_rainbow_connected(
        g,
        &coloring,
        &VerifyOptions::default().with_witnesses(opts.witnesses),
    )?;
    if let Verdict::FailingPair(u, w) = certificate.verdict {
        return Err(ColorError::ConstructionFailure {
            failing_pair: (u, w),
            attempts: provenance.repair_attempts + 1,
        });
    }
    let colors_used = coloring.colors_used();
    debug_assert!(colors_used <= guarantee);
    Ok(ColoringOutcome {
        coloring,
        colors_used,
        guarantee,
        provenance,
        certificate,
    })
}
