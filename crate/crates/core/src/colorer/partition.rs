//! Layer partition around a center `v` of a 2-connected diameter-2 graph.
//!
//! `N(v)` is split into `X` and `Y`; the second layer `N²(v)` into `B`
//! (vertices with a neighbor inside `N²(v)`, further split into `B1`/`B2`
//! by a forest bipartition of `G[B]`) and `A`, `D1`, `D2` according to
//! whether a vertex sees both `X` and `Y`, only `X`, or only `Y`. When `B`
//! is empty, `X`/`Y` come from a spanning tree of the auxiliary graph `H`
//! on `N(v)` instead.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::ColorError;
use crate::graph::{ForestOrder, Graph, Side, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Center,
    X,
    Y,
    A,
    B1,
    B2,
    D1,
    D2,
}

impl Role {
    fn swapped(self) -> Self {
        match self {
            Role::X => Role::Y,
            Role::Y => Role::X,
            Role::B1 => Role::B2,
            Role::B2 => Role::B1,
            Role::D1 => Role::D2,
            Role::D2 => Role::D1,
            other => other,
        }
    }
}

/// Choices left open by the construction: which forest side seeds `X`, and
/// the neighbor order used to grow spanning forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionVariant {
    pub flip: bool,
    pub forest: ForestOrder,
}

impl Default for PartitionVariant {
    fn default() -> Self {
        Self {
            flip: false,
            forest: ForestOrder::Ascending,
        }
    }
}

/// Graph `H` on `N(v)`, reindexed `0..|N(v)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub graph: Graph,
    /// `vertices[i]` is the host vertex behind `H`-vertex `i` (ascending).
    pub vertices: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub center: Vertex,
    /// Role per host vertex.
    pub role: Vec<Role>,
    /// Present exactly when `B` is empty.
    pub auxiliary: Option<AuxiliaryGraph>,
    /// `(d, x)` pairs: the edge from `D1`-vertex `d` to `x` carries the
    /// fifth color. Sorted by `d`.
    pub five_edges: Vec<(Vertex, Vertex)>,
    /// Whether the `X`/`Y` labels were swapped to make `D2` empty.
    pub swapped: bool,
}

impl NeighborhoodPartition {
    pub fn members(&self, r: Role) -> Vec<Vertex> {
        (0..self.role.len()).filter(|&u| self.role[u] == r).collect()
    }

    pub fn b_is_empty(&self) -> bool {
        self.auxiliary.is_some()
    }

    pub fn five_edge_of(&self, d: Vertex) -> Option<Vertex> {
        self.five_edges
            .binary_search_by_key(&d, |p| p.0)
            .ok()
            .map(|i| self.five_edges[i].1)
    }

    pub fn set_five_edge(&mut self, d: Vertex, x: Vertex) {
        if let Ok(i) = self.five_edges.binary_search_by_key(&d, |p| p.0) {
            self.five_edges[i].1 = x;
        }
    }

    /// Checks every structural invariant of the partition against `g`;
    /// returns a description of the first violation.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let layers = g.bfs_layers(self.center);
        let n1 = layers.layer(1);
        let n2 = layers.layer(2);
        if self.role.len() != g.n() || layers.eccentricity() > 2 || !layers.reaches_all() {
            return Err("partition does not cover a radius-2 neighborhood".into());
        }
        let in_n2 = |u: Vertex| layers.dist[u] == 2;
        let sees = |u: Vertex, r: Role| g.neighbors(u).iter().any(|&w| self.role[w] == r);
        if self.role[self.center] != Role::Center {
            return Err("center role missing".into());
        }
        for &u in n1 {
            if !matches!(self.role[u], Role::X | Role::Y) {
                return Err(format!("first-layer vertex {u} is neither X nor Y"));
            }
        }
        for &u in n2 {
            let in_b = g.neighbors(u).iter().any(|&w| in_n2(w));
            let r = self.role[u];
            match r {
                Role::B1 | Role::B2 if !in_b => return Err(format!("{u} in B without N² neighbor")),
                Role::A | Role::D1 | Role::D2 if in_b => {
                    return Err(format!("{u} has an N² neighbor but is not in B"))
                }
                Role::Center | Role::X | Role::Y => {
                    return Err(format!("second-layer vertex {u} labelled {r:?}"))
                }
                _ => {}
            }
            let (sx, sy) = (sees(u, Role::X), sees(u, Role::Y));
            let ok = match r {
                Role::A => sx && sy,
                Role::D1 => sx && !sy,
                Role::D2 => sy && !sx,
                Role::B1 => sees(u, Role::B2),
                Role::B2 => sees(u, Role::B1),
                _ => true,
            };
            if !ok {
                return Err(format!("{u} labelled {r:?} has the wrong neighborhood"));
            }
        }
        if !self.members(Role::D2).is_empty() {
            return Err("D2 not normalized to empty".into());
        }
        let d1 = self.members(Role::D1);
        if self.five_edges.len() != d1.len() {
            return Err("five-edge designations do not match D1".into());
        }
        for (&d, &(fd, x)) in d1.iter().zip(&self.five_edges) {
            if d != fd || !g.has_edge(d, x) || self.role[x] != Role::X {
                return Err(format!("bad five-edge designation for {d}"));
            }
            if g.neighbors(d).iter().filter(|&&w| self.role[w] == Role::X).count() < 2 {
                return Err(format!("D1 vertex {d} has a single X neighbor"));
            }
        }
        if let Some(h) = &self.auxiliary {
            if h.vertices != n1 || !h.graph.is_connected() {
                return Err("auxiliary graph malformed or disconnected".into());
            }
        }
        Ok(())
    }
}

fn violation(msg: impl Into<String>) -> ColorError {
    ColorError::StructureViolation(msg.into())
}

pub(crate) fn check_two_connected_diam2(g: &Graph) -> Result<(), ColorError> {
    if !g.is_two_connected() {
        return Err(ColorError::WrongCase("graph is not 2-connected".into()));
    }
    match g.diameter() {
        Some(d) if d <= 2 => Ok(()),
        _ => Err(ColorError::WrongCase("diameter exceeds 2".into())),
    }
}

fn center_in_range(g: &Graph, v: Vertex) -> Result<(), ColorError> {
    if v >= g.n() {
        return Err(ColorError::WrongCase(format!("center {v} out of range")));
    }
    Ok(())
}

// Membership of N²(v) and of B.
fn second_layer(g: &Graph, v: Vertex) -> (Vec<Vertex>, Vec<Vertex>, Vec<bool>) {
    let layers = g.bfs_layers(v);
    let n1 = layers.layer(1).to_vec();
    let n2 = layers.layer(2).to_vec();
    let mut in_b = vec![false; g.n()];
    for &u in &n2 {
        in_b[u] = g.neighbors(u).iter().any(|&w| layers.dist[w] == 2);
    }
    (n1, n2, in_b)
}

/// Partition for a center whose second layer spans at least one edge.
pub fn partition_case_b_nonempty(
    g: &Graph,
    v: Vertex,
) -> Result<NeighborhoodPartition, ColorError> {
    center_in_range(g, v)?;
    check_two_connected_diam2(g)?;
    let part = partition(g, v, PartitionVariant::default())?;
    if part.b_is_empty() {
        return Err(ColorError::WrongCase(format!("second layer of {v} is independent")));
    }
    Ok(part)
}

/// Partition for a center whose second layer is independent.
pub fn partition_case_b_empty(
    g: &Graph,
    v: Vertex,
) -> Result<NeighborhoodPartition, ColorError> {
    center_in_range(g, v)?;
    check_two_connected_diam2(g)?;
    let part = partition(g, v, PartitionVariant::default())?;
    if !part.b_is_empty() {
        return Err(ColorError::WrongCase(format!("second layer of {v} spans an edge")));
    }
    Ok(part)
}

/// The auxiliary graph on `N(v)`: `x ~ y` when adjacent in `G` or joined
/// through a common second-layer neighbor. Requires `B` empty for `v`.
pub fn build_auxiliary_h(g: &Graph, v: Vertex) -> Result<AuxiliaryGraph, ColorError> {
    center_in_range(g, v)?;
    check_two_connected_diam2(g)?;
    let (n1, n2, in_b) = second_layer(g, v);
    if in_b.iter().any(|&b| b) {
        return Err(ColorError::WrongCase(format!("second layer of {v} spans an edge")));
    }
    auxiliary(g, &n1, &n2)
}

fn auxiliary(g: &Graph, n1: &[Vertex], n2: &[Vertex]) -> Result<AuxiliaryGraph, ColorError> {
    let index = |x: Vertex| n1.binary_search(&x).ok();
    let mut edges = Vec::new();
    for (i, &x) in n1.iter().enumerate() {
        for &w in g.neighbors(x) {
            if let Some(j) = index(w) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    for &u in n2 {
        // With B empty, every neighbor of a second-layer vertex lies in N(v).
        let around: Vec<usize> = g.neighbors(u).iter().filter_map(|&w| index(w)).collect();
        for (a, &i) in around.iter().enumerate() {
            for &j in &around[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(n1.len(), edges).map_err(|e| violation(format!("{e}")))?;
    if !graph.is_connected() {
        return Err(violation("auxiliary graph H is disconnected"));
    }
    Ok(AuxiliaryGraph {
        graph,
        vertices: n1.to_vec(),
    })
}

/// Builds the partition for center `v` without re-checking the global
/// preconditions (2-connected, diameter at most 2).
pub(crate) fn partition(
    g: &Graph,
    v: Vertex,
    variant: PartitionVariant,
) -> Result<NeighborhoodPartition, ColorError> {
    let (n1, n2, in_b) = second_layer(g, v);
    let mut role = vec![Role::Center; g.n()];
    let b: Vec<Vertex> = n2.iter().copied().filter(|&u| in_b[u]).collect();
    let seed_side = if variant.flip { Side::Right } else { Side::Left };

    let auxiliary_graph = if b.is_empty() {
        let h = auxiliary(g, &n1, &n2)?;
        let tree = h
            .graph
            .spanning_forest_bipartition_ordered(
                &(0..n1.len()).collect::<Vec<_>>(),
                false,
                variant.forest,
            )
            .map_err(|e| violation(format!("{e}")))?;
        for (i, &x) in n1.iter().enumerate() {
            role[x] = if tree.side_of(i) == Some(seed_side) { Role::X } else { Role::Y };
        }
        Some(h)
    } else {
        let forest = g
            .spanning_forest_bipartition_ordered(&b, true, variant.forest)
            .map_err(|e| violation(format!("{e}")))?;
        for &u in &b {
            role[u] = if forest.side_of(u) == Some(seed_side) { Role::B1 } else { Role::B2 };
        }
        // Seeding: neighbors of B1 go to X (even when they also see B2), other
        // neighbors of B2 go to Y.
        let sees = |role: &[Role], u: Vertex, r: Role| g.neighbors(u).iter().any(|&w| role[w] == r);
        let mut leftover = Vec::new();
        for &u in &n1 {
            if sees(&role, u, Role::B1) {
                role[u] = Role::X;
            } else if sees(&role, u, Role::B2) {
                role[u] = Role::Y;
            } else {
                leftover.push(u);
            }
        }
        // Leftovers are placed against the seeded sets only, so the order of
        // processing does not matter. Every leftover sees X or Y.
        let seeded = role.clone();
        for &u in &leftover {
            role[u] = if sees(&seeded, u, Role::Y) {
                Role::X
            } else if sees(&seeded, u, Role::X) {
                Role::Y
            } else {
                return Err(violation(format!(
                    "first-layer vertex {u} has no neighbor in the seeded X or Y"
                )));
            };
        }
        None
    };

    for &u in n2.iter().filter(|&&u| !in_b[u]) {
        let sx = g.neighbors(u).iter().any(|&w| role[w] == Role::X);
        let sy = g.neighbors(u).iter().any(|&w| role[w] == Role::Y);
        role[u] = match (sx, sy) {
            (true, true) => Role::A,
            (true, false) => Role::D1,
            (false, true) => Role::D2,
            (false, false) => {
                return Err(violation(format!("second-layer vertex {u} has no first-layer neighbor")))
            }
        };
        // Outside B a second-layer vertex only sees the first layer.
        if g.neighbors(u).iter().any(|&w| w != v && !matches!(role[w], Role::X | Role::Y)) {
            return Err(violation(format!("{u} outside B has a second-layer neighbor")));
        }
    }

    let has = |role: &[Role], r: Role| role.iter().any(|&x| x == r);
    let mut swapped = false;
    match (has(&role, Role::D1), has(&role, Role::D2)) {
        (true, true) => {
            return Err(violation("both D1 and D2 are nonempty, contradicting diameter 2"));
        }
        (false, true) => {
            for r in role.iter_mut() {
                *r = r.swapped();
            }
            swapped = true;
        }
        _ => {}
    }
    role[v] = Role::Center;

    let five_edges = (0..g.n())
        .filter(|&u| role[u] == Role::D1)
        .map(|d| {
            let x = g
                .neighbors(d)
                .iter()
                .copied()
                .find(|&w| role[w] == Role::X)
                .expect("D1 vertex sees X");
            (d, x)
        })
        .collect();

    Ok(NeighborhoodPartition {
        center: v,
        role,
        auxiliary: auxiliary_graph,
        five_edges,
        swapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn c5_trace() {
        let g = generators::cycle(5).unwrap();
        let p = partition_case_b_nonempty(&g, 0).unwrap();
        assert_eq!(p.members(Role::B1), vec![2]);
        assert_eq!(p.members(Role::B2), vec![3]);
        assert_eq!(p.members(Role::X), vec![1]);
        assert_eq!(p.members(Role::Y), vec![4]);
        for r in [Role::A, Role::D1, Role::D2] {
            assert!(p.members(r).is_empty());
        }
        p.validate(&g).unwrap();
    }

    #[test]
    fn petersen_b_is_whole_second_layer() {
        let g = generators::petersen();
        for v in 0..10 {
            let p = partition_case_b_nonempty(&g, v).unwrap();
            assert_eq!(p.members(Role::B1).len() + p.members(Role::B2).len(), 6);
            for r in [Role::A, Role::D1, Role::D2] {
                assert!(p.members(r).is_empty());
            }
            p.validate(&g).unwrap();
        }
    }

    #[test]
    fn wheel_rim_center() {
        // rim 0..4, hub 5; from rim vertex 0 the second layer is {2, 3}
        let g = generators::wheel(5).unwrap();
        let p = partition_case_b_nonempty(&g, 0).unwrap();
        assert_eq!(p.members(Role::B1), vec![2]);
        assert_eq!(p.members(Role::B2), vec![3]);
        // 1 sees B1; 4 sees only B2; the hub sees both and goes to X
        assert_eq!(p.members(Role::X), vec![1, 5]);
        assert_eq!(p.members(Role::Y), vec![4]);
        p.validate(&g).unwrap();
    }

    #[test]
    fn auxiliary_on_k23_and_c4() {
        // K_{2,3}: sides {0,1} and {2,3,4}; center 2 has N = {0,1}
        let g = generators::complete_bipartite(2, 3).unwrap();
        let h = build_auxiliary_h(&g, 2).unwrap();
        assert_eq!(h.vertices, vec![0, 1]);
        assert_eq!(h.graph.edges(), &[(0, 1)]);
        let c4 = generators::cycle(4).unwrap();
        let h = build_auxiliary_h(&c4, 0).unwrap();
        assert_eq!(h.vertices, vec![1, 3]);
        assert_eq!(h.graph.m(), 1);
        let p = partition_case_b_empty(&g, 2).unwrap();
        assert!(p.members(Role::D1).is_empty());
        assert_eq!(p.members(Role::A), vec![3, 4]);
        p.validate(&g).unwrap();
    }

    #[test]
    fn universal_center_gives_induced_neighborhood() {
        let w = generators::wheel(5).unwrap();
        let h = build_auxiliary_h(&w, 5).unwrap();
        assert_eq!(h.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(h.graph.m(), 5);
        let p = partition_case_b_empty(&w, 5).unwrap();
        for r in [Role::A, Role::D1, Role::D2] {
            assert!(p.members(r).is_empty());
        }
    }

    #[test]
    fn wrong_case_errors() {
        let c5 = generators::cycle(5).unwrap();
        assert!(matches!(build_auxiliary_h(&c5, 0), Err(ColorError::WrongCase(_))));
        assert!(matches!(partition_case_b_empty(&c5, 0), Err(ColorError::WrongCase(_))));
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        assert!(matches!(partition_case_b_nonempty(&k23, 2), Err(ColorError::WrongCase(_))));
        let star = generators::star(3).unwrap();
        assert!(matches!(partition_case_b_nonempty(&star, 0), Err(ColorError::WrongCase(_))));
    }

    #[test]
    fn d1_normalization() {
        // v=0 with N(0) = {1,2,3}; 4,5 in the second layer. 4 and 5 are
        // joined to the whole first layer except that 5 misses 3.
        let g = Graph::new(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5)],
        )
        .unwrap();
        assert!(g.is_two_connected());
        let p = partition(&g, 0, PartitionVariant::default()).unwrap();
        p.validate(&g).unwrap();
        assert!(p.members(Role::D2).is_empty());
    }
}
