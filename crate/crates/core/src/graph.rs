//! Simple undirected graphs with dense vertex indices, plus the structural
//! analyses the colorers rely on: BFS layers, diameter, bridges, cut
//! vertices, spanning-forest bipartitions and strongly-regular parameters.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;

pub type Vertex = usize;

/// Sentinel distance for vertices unreachable from a BFS center.
pub const UNREACHABLE: usize = usize::MAX;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, w)` with `u < w`, sorted lexicographically;
/// an edge's position in that list is its edge id. Adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    // Edge id of `adj[v][i]`, parallel to `adj`.
    adj_edge: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Reversed and repeated pairs collapse
    /// to a single edge.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (u, w) in edge_list {
            if u >= n || w >= n {
                return Err(GraphError::IndexOutOfRange {
                    vertex: u.max(w),
                    n,
                });
            }
            if u == w {
                return Err(GraphError::InvalidEdge { u, w });
            }
            edges.push((u.min(w), u.max(w)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        let mut adj_edge = vec![Vec::new(); n];
        for (id, &(u, w)) in edges.iter().enumerate() {
            adj[u].push(w);
            adj_edge[u].push(id);
            adj[w].push(u);
            adj_edge[w].push(id);
        }
        for v in 0..n {
            let mut pairs: Vec<(Vertex, usize)> =
                adj[v].iter().copied().zip(adj_edge[v].iter().copied()).collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            adj_edge[v] = pairs.iter().map(|p| p.1).collect();
        }
        Ok(Self {
            n,
            edges,
            adj,
            adj_edge,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            adj_edge: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in id order, each as `(u, w)` with `u < w`.
    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// `(neighbor, edge id)` pairs around `v`, ascending by neighbor.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adj[v].iter().copied().zip(self.adj_edge[v].iter().copied())
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&w).is_ok()
    }

    pub fn edge_id(&self, u: Vertex, w: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(w), u.max(w))).ok()
    }

    pub fn common_neighbor_count(&self, u: Vertex, w: Vertex) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[w]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(None)
    }

    /// Components of `G - v`.
    pub fn components_without(&self, v: Vertex) -> Vec<Vec<Vertex>> {
        self.components_avoiding(Some(v))
    }

    fn components_avoiding(&self, removed: Option<Vertex>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn bfs_layers(&self, center: Vertex) -> BfsLayers {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut layers: Vec<Vec<Vertex>> = vec![vec![center]];
        dist[center] = 0;
        let mut queue = VecDeque::from([center]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for &w in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = d;
                    if layers.len() <= d {
                        layers.push(Vec::new());
                    }
                    layers[d].push(w);
                    queue.push_back(w);
                }
            }
        }
        for layer in &mut layers {
            layer.sort_unstable();
        }
        BfsLayers {
            center,
            dist,
            layers,
        }
    }

    /// Largest eccentricity, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            let bfs = self.bfs_layers(v);
            if !bfs.reaches_all() {
                return None;
            }
            best = best.max(bfs.eccentricity());
        }
        Some(best)
    }

    /// Smallest eccentricity, or `None` if disconnected or empty.
    pub fn radius(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.n {
            let bfs = self.bfs_layers(v);
            if !bfs.reaches_all() {
                return None;
            }
            let e = bfs.eccentricity();
            best = Some(best.map_or(e, |b| b.min(e)));
        }
        best
    }

    /// Edges whose removal increases the number of components, sorted.
    pub fn bridges(&self) -> Vec<(Vertex, Vertex)> {
        self.lowlink().0
    }

    /// Articulation vertices, sorted.
    pub fn cut_vertices(&self) -> Vec<Vertex> {
        self.lowlink().1
    }

    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Iterative lowlink DFS computing bridges and cut vertices together.
    fn lowlink(&self) -> (Vec<(Vertex, Vertex)>, Vec<Vertex>) {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut bridges = Vec::new();
        let mut time = 0;
        // (vertex, edge id used to enter it, next adjacency position)
        let mut stack: Vec<(Vertex, usize, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (v, parent_edge, pos) = *top;
                if pos < self.adj[v].len() {
                    top.2 += 1;
                    let (w, e) = (self.adj[v][pos], self.adj_edge[v][pos]);
                    if e == parent_edge {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            bridges.push((parent.min(v), parent.max(v)));
                        }
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        let cuts = (0..n).filter(|&v| is_cut[v]).collect();
        (bridges, cuts)
    }

    /// Spanning forest of the subgraph induced by `subset` (one DFS tree per
    /// induced component, rooted at its lowest vertex, neighbors visited in
    /// ascending order) together with the proper 2-coloring of that forest.
    pub fn spanning_forest_bipartition(
        &self,
        subset: &[Vertex],
        require_no_isolated: bool,
    ) -> Result<ForestBipartition, GraphError> {
        self.spanning_forest_bipartition_ordered(subset, require_no_isolated, ForestOrder::Ascending)
    }

    pub fn spanning_forest_bipartition_ordered(
        &self,
        subset: &[Vertex],
        require_no_isolated: bool,
        order: ForestOrder,
    ) -> Result<ForestBipartition, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(GraphError::IndexOutOfRange { vertex: v, n: self.n });
            }
            inside[v] = true;
        }
        let mut roots: Vec<Vertex> = (0..self.n).filter(|&v| inside[v]).collect();
        let mut local_adj: Vec<Vec<Vertex>> = vec![Vec::new(); self.n];
        for &v in &roots {
            local_adj[v] = self.adj[v].iter().copied().filter(|&w| inside[w]).collect();
            if require_no_isolated && local_adj[v].is_empty() {
                return Err(GraphError::IsolatedVertex(v));
            }
        }
        if let ForestOrder::Shuffled(seed) = order {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            roots.shuffle(&mut rng);
            for &v in &roots {
                local_adj[v].shuffle(&mut rng);
            }
        }

        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut forest_edges = Vec::new();
        let mut stack: Vec<(Vertex, usize)> = Vec::new();
        for &root in &roots {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::Left);
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, pos) = *top;
                if pos < local_adj[v].len() {
                    top.1 += 1;
                    let w = local_adj[v][pos];
                    if side[w].is_none() {
                        side[w] = side[v].map(Side::flip);
                        forest_edges.push((v.min(w), v.max(w)));
                        stack.push((w, 0));
                    }
                } else {
                    stack.pop();
                }
            }
        }
        Ok(ForestBipartition { forest_edges, side })
    }

    /// `(n, k, lambda, mu)` if the graph is strongly regular. Edgeless and
    /// complete graphs are excluded.
    pub fn srg_parameters(&self) -> Option<SrgParameters> {
        if self.n < 2 || self.m() == 0 || self.is_complete() {
            return None;
        }
        let k = self.degree(0);
        if (0..self.n).any(|v| self.degree(v) != k) {
            return None;
        }
        let mut lambda = None;
        let mut mu = None;
        for u in 0..self.n {
            for w in u + 1..self.n {
                let slot = if self.has_edge(u, w) { &mut lambda } else { &mut mu };
                let c = self.common_neighbor_count(u, w);
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => return None,
                    Some(_) => {}
                }
            }
        }
        Some(SrgParameters {
            n: self.n,
            k,
            lambda: lambda?,
            mu: mu?,
        })
    }
}

/// Distances and distance layers from one center vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayers {
    pub center: Vertex,
    /// Distance per vertex, [`UNREACHABLE`] when not reachable.
    pub dist: Vec<usize>,
    /// `layers[k]` holds the vertices at distance exactly `k`, sorted.
    pub layers: Vec<Vec<Vertex>>,
}

impl BfsLayers {
    /// Largest finite distance from the center.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn reaches_all(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn layer(&self, k: usize) -> &[Vertex] {
        self.layers.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Neighbor visiting order for spanning-forest construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestOrder {
    Ascending,
    /// Roots and neighbor lists permuted by a ChaCha8 stream with this seed.
    Shuffled(u64),
}

/// A spanning forest and the two sides of its proper 2-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestBipartition {
    pub forest_edges: Vec<(Vertex, Vertex)>,
    /// Side per vertex of the host graph; `None` outside the covered subset.
    pub side: Vec<Option<Side>>,
}

impl ForestBipartition {
    pub fn side_of(&self, v: Vertex) -> Option<Side> {
        self.side.get(v).copied().flatten()
    }

    pub fn vertices_on(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == Some(s)).collect()
    }

    pub fn covered(&self) -> usize {
        self.side.iter().filter(|s| s.is_some()).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.m(), 2);
        let one = g(3, &[(0, 1), (1, 0)]);
        assert_eq!(one.m(), 1);
        let c5 = generators::cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let deg_sum: usize = (0..5).map(|v| c5.degree(v)).sum();
        assert_eq!(deg_sum, 2 * c5.m());
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(1, 1)]).unwrap_err(),
            GraphError::InvalidEdge { u: 1, w: 1 }
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            GraphError::IndexOutOfRange { vertex: 3, n: 3 }
        );
    }

    #[test]
    fn bfs_layer_sizes() {
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(c5.bfs_layers(0).layer_sizes(), vec![1, 2, 2]);
        let pet = generators::petersen();
        for v in 0..10 {
            assert_eq!(pet.bfs_layers(v).layer_sizes(), vec![1, 3, 6]);
        }
        let star = generators::star(4).unwrap();
        assert_eq!(star.bfs_layers(0).layer_sizes(), vec![1, 4]);
        assert_eq!(star.bfs_layers(0).layer(1), star.neighbors(0));
    }

    #[test]
    fn bfs_marks_unreachable() {
        let two = g(3, &[(0, 1)]);
        let bfs = two.bfs_layers(0);
        assert_eq!(bfs.dist[2], UNREACHABLE);
        assert!(!bfs.reaches_all());
        assert_eq!(two.diameter(), None);
    }

    #[test]
    fn diameters() {
        assert_eq!(generators::complete(4).unwrap().diameter(), Some(1));
        assert_eq!(generators::cycle(5).unwrap().diameter(), Some(2));
        assert_eq!(generators::cycle(7).unwrap().diameter(), Some(3));
        assert_eq!(generators::star(4).unwrap().radius(), Some(1));
    }

    #[test]
    fn bridges_and_cuts() {
        let tree = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(tree.bridges(), tree.edges().to_vec());
        assert!(generators::cycle(6).unwrap().bridges().is_empty());
        // apex 0, leaves 1 and 2, pairs (3,4) and (5,6)
        let tight = generators::tight_example(2, 2).unwrap();
        assert_eq!(tight.bridges(), vec![(0, 1), (0, 2)]);
        assert_eq!(generators::star(4).unwrap().cut_vertices(), vec![0]);
        assert!(generators::cycle(5).unwrap().cut_vertices().is_empty());
        assert_eq!(generators::tight_example(1, 2).unwrap().cut_vertices(), vec![0]);
    }

    #[test]
    fn two_connectivity() {
        assert!(generators::petersen().is_two_connected());
        assert!(!g(3, &[(0, 1), (1, 2)]).is_two_connected());
        assert!(!g(2, &[(0, 1)]).is_two_connected());
        assert!(generators::complete(3).unwrap().is_two_connected());
    }

    #[test]
    fn forest_on_cycle_and_complete() {
        let c4 = generators::cycle(4).unwrap();
        let f = c4.spanning_forest_bipartition(&[0, 1, 2, 3], true).unwrap();
        assert_eq!(f.forest_edges.len(), 3);
        for &(u, w) in &f.forest_edges {
            assert_ne!(f.side_of(u), f.side_of(w));
        }
        let k4 = generators::complete(4).unwrap();
        let f = k4.spanning_forest_bipartition(&[0, 1, 2, 3], true).unwrap();
        assert_eq!(f.forest_edges.len(), 3);
        // DFS from 0 descends 0-1-2-3
        assert_eq!(f.vertices_on(Side::Left), vec![0, 2]);
        assert_eq!(f.vertices_on(Side::Right), vec![1, 3]);
    }

    #[test]
    fn forest_on_disjoint_edges() {
        let two = g(4, &[(0, 1), (2, 3)]);
        let f = two.spanning_forest_bipartition(&[0, 1, 2, 3], true).unwrap();
        assert_eq!(f.forest_edges, vec![(0, 1), (2, 3)]);
        assert_ne!(f.side_of(0), f.side_of(1));
        assert_ne!(f.side_of(2), f.side_of(3));
    }

    #[test]
    fn forest_rejects_isolated() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            p3.spanning_forest_bipartition(&[0, 2], true).unwrap_err(),
            GraphError::IsolatedVertex(0)
        );
        let f = p3.spanning_forest_bipartition(&[0, 2], false).unwrap();
        assert!(f.forest_edges.is_empty());
        assert_eq!(f.covered(), 2);
    }

    #[test]
    fn srg_examples() {
        assert_eq!(
            generators::petersen().srg_parameters(),
            Some(SrgParameters { n: 10, k: 3, lambda: 0, mu: 1 })
        );
        assert_eq!(
            generators::cycle(5).unwrap().srg_parameters(),
            Some(SrgParameters { n: 5, k: 2, lambda: 0, mu: 1 })
        );
        assert_eq!(g(4, &[(0, 1), (1, 2), (2, 3)]).srg_parameters(), None);
        assert_eq!(generators::complete(5).unwrap().srg_parameters(), None);
        assert_eq!(Graph::empty(4).srg_parameters(), None);
    }
}
