//! Slow, obviously-correct reference implementations for tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use rainbow_core::{EdgeColoring, Graph};

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for w in u + 1..n {
            if mask[bit] {
                edges.push((u, w));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Any simple graph on 1..=max_n vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

pub fn components_of(n: usize, edges: &[(usize, usize)], removed: Option<usize>) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(u, w) in edges {
        if Some(u) == removed || Some(w) == removed {
            continue;
        }
        adj[u].push(w);
        adj[w].push(u);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || Some(s) == removed {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    count
}

pub fn brute_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = components_of(g.n(), g.edges(), None);
    (0..g.m())
        .filter(|&e| {
            let rest: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != e)
                .map(|(_, &p)| p)
                .collect();
            components_of(g.n(), &rest, None) > base
        })
        .map(|e| g.edges()[e])
        .collect()
}

pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = components_of(g.n(), g.edges(), None);
    (0..g.n())
        .filter(|&v| g.degree(v) > 0 && components_of(g.n(), g.edges(), Some(v)) > base)
        .collect()
}

pub const INF: usize = usize::MAX / 4;

pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, w) in g.edges() {
        d[u][w] = 1;
        d[w][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn brute_diameter(g: &Graph) -> Option<usize> {
    let d = floyd(g);
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

fn any_rainbow_path(
    g: &Graph,
    col: &EdgeColoring,
    at: usize,
    target: usize,
    on_path: &mut Vec<bool>,
    colors: &mut Vec<u32>,
) -> bool {
    if at == target {
        return true;
    }
    for (w, e) in g.incident(at) {
        // a prefix that repeats a color cannot extend to a rainbow path
        if on_path[w] || colors.contains(&col.color(e)) {
            continue;
        }
        on_path[w] = true;
        colors.push(col.color(e));
        let found = any_rainbow_path(g, col, w, target, on_path, colors);
        colors.pop();
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

pub fn naive_has_rainbow_path(g: &Graph, col: &EdgeColoring, u: usize, w: usize) -> bool {
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    any_rainbow_path(g, col, u, w, &mut on_path, &mut Vec::new())
}

/// Walks the simple paths out of each vertex, abandoning a path once it
/// repeats a color. Returns the least pair with none.
pub fn naive_failing_pair(g: &Graph, col: &EdgeColoring) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for w in u + 1..g.n() {
            if !naive_has_rainbow_path(g, col, u, w) {
                return Some((u, w));
            }
        }
    }
    None
}

/// Lists every simple `u`-`w` path as an edge sequence.
pub fn all_simple_paths(g: &Graph, u: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if u != w {
        let mut visited = vec![false; g.n()];
        visited[u] = true;
        extend(g, u, w, &mut visited, &mut Vec::new(), &mut out);
    }
    out
}

fn extend(
    g: &Graph,
    at: usize,
    w: usize,
    visited: &mut Vec<bool>,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for (x, e) in g.incident(at) {
        if visited[x] {
            continue;
        }
        path.push(e);
        if x == w {
            out.push(path.clone());
        } else {
            visited[x] = true;
            extend(g, x, w, visited, path, out);
            visited[x] = false;
        }
        path.pop();
    }
}

/// Enumerates all simple paths of every pair with no pruning and tests each
/// for distinct colors. Returns the least pair without a rainbow path.
pub fn all_paths_failing_pair(g: &Graph, col: &EdgeColoring) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for w in u + 1..g.n() {
            let rainbow = all_simple_paths(g, u, w).iter().any(|p| {
                let colors: BTreeSet<u32> = p.iter().map(|&e| col.color(e)).collect();
                colors.len() == p.len()
            });
            if !rainbow {
                return Some((u, w));
            }
        }
    }
    None
}

pub fn brute_srg(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let k = g.degree(0);
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        if g.degree(u) != k {
            return None;
        }
        for w in u + 1..n {
            let common = (0..n).filter(|&x| g.has_edge(u, x) && g.has_edge(w, x)).count();
            let slot = if g.has_edge(u, w) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    // complete and empty graphs are excluded
    Some((n, k, lambda?, mu?))
}

fn prufer_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, w) in edges {
        adj[u].push(w);
        adj[w].push(u);
    }
    // peel leaves down to the one or two centers
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// One representative per isomorphism class of trees on `n >= 2` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 2 {
        return vec![Graph::new(2, [(0, 1)]).unwrap()];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0; n - 2];
    loop {
        let edges = prufer_tree(n, &seq);
        if seen.insert(tree_canon(n, &edges)) {
            out.push(Graph::new(n, edges).unwrap());
        }
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
    }
}
