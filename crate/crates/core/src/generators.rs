//! Deterministic graph families and seeded random diameter-2 samplers.
//!
//! Canonical labelings:
//! - `cycle(n)`: edges `i – (i+1 mod n)`.
//! - `complete_bipartite(s, t)`: first side `0..s`, second side `s..s+t`.
//! - `star(l)`: center 0, leaves `1..=l`.
//! - `petersen()`: outer cycle 0–4, spokes `i – i+5`, inner chords
//!   `i+5 – (i+2 mod 5)+5`.
//! - `wheel(r)`: rim cycle `0..r`, hub `r` (the last index).
//! - `tight_example(k, r)`: apex 0, pendant vertices `1..=k`, then the `r`
//!   disjoint edges `(k+1+2j, k+2+2j)`, every non-apex vertex joined to 0.
//! - `friendship(t)`: apex 0 and triangles `(0, 2j+1, 2j+2)`.
//!
//! Random sources are ChaCha8 streams (`rand_chacha::ChaCha8Rng`) seeded
//! with `seed_from_u64`; [`task_seed`] derives independent per-task seeds
//! by selecting the ChaCha stream number.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::graph::{Graph, Vertex};

fn invalid(msg: impl Into<alloc::string::String>) -> GenError {
    GenError::InvalidSpec(msg.into())
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("generator produced a valid edge list")
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect();
    Ok(build(n, edges))
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, GenError> {
    if s < 1 || t < 1 {
        return Err(invalid(format!("K_(s,t) needs s, t >= 1, got ({s}, {t})")));
    }
    let edges = (0..s).flat_map(|u| (s..s + t).map(move |w| (u, w))).collect();
    Ok(build(s + t, edges))
}

pub fn star(leaves: usize) -> Result<Graph, GenError> {
    if leaves < 1 {
        return Err(invalid("star needs at least one leaf"));
    }
    Ok(build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()))
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, edges)
}

pub fn wheel(rim: usize) -> Result<Graph, GenError> {
    if rim < 3 {
        return Err(invalid(format!("wheel needs a rim of at least 3, got {rim}")));
    }
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Ok(build(rim + 1, edges))
}

/// Apex joined to `k` isolated vertices and to both ends of `r` disjoint
/// edges. Diameter 2 with exactly `k` bridges. The bridged construction
/// spends `k + 2` colors on it, which is optimal only for `k = 1`: the
/// exact rc is 3 for every `k <= 3` the solver has been run on.
pub fn tight_example(k: usize, r: usize) -> Result<Graph, GenError> {
    if k < 1 || r < 2 {
        return Err(invalid(format!("tight example needs k >= 1 and r >= 2, got ({k}, {r})")));
    }
    let n = 1 + k + 2 * r;
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.extend((0..r).map(|j| (k + 1 + 2 * j, k + 2 + 2 * j)));
    Ok(build(n, edges))
}

pub fn friendship(triangles: usize) -> Result<Graph, GenError> {
    if triangles < 1 {
        return Err(invalid("friendship graph needs at least one triangle"));
    }
    let n = 1 + 2 * triangles;
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.extend((0..triangles).map(|j| (2 * j + 1, 2 * j + 2)));
    Ok(build(n, edges))
}

/// Derives the seed for task `index` of a batch seeded with `seed`.
pub fn task_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.next_u64()
}

/// Uniformly random labeled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("tree needs n >= 1"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = alloc::vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(build(n, edges))
}

/// Parameters for rejection-sampling a diameter-2 graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomDiam2 {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub max_tries: usize,
    pub require_bridgeless: bool,
    pub require_two_connected: bool,
}

impl RandomDiam2 {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        Self {
            n,
            p,
            seed,
            max_tries: 10_000,
            require_bridgeless: false,
            require_two_connected: false,
        }
    }

    pub fn bridgeless(mut self) -> Self {
        self.require_bridgeless = true;
        self
    }

    pub fn two_connected(mut self) -> Self {
        self.require_two_connected = true;
        self
    }

    pub fn max_tries(mut self, tries: usize) -> Self {
        self.max_tries = tries;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampled {
    pub graph: Graph,
    pub tries: usize,
}

/// Samples `G(n, p)` graphs from one ChaCha8 stream until one has diameter
/// exactly 2 and meets the requested structural flags.
pub fn random_diam2(spec: &RandomDiam2) -> Result<Sampled, GenError> {
    let RandomDiam2 { n, p, .. } = *spec;
    if n < 3 {
        return Err(invalid(format!("random diameter-2 graph needs n >= 3, got {n}")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(invalid(format!("edge probability must lie in (0, 1), got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for tries in 1..=spec.max_tries {
        let mut edges = Vec::new();
        for u in 0..n {
            for w in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, w));
                }
            }
        }
        let g = build(n, edges);
        if g.diameter() != Some(2) {
            continue;
        }
        if spec.require_bridgeless && !g.bridges().is_empty() {
            continue;
        }
        if spec.require_two_connected && !g.is_two_connected() {
            continue;
        }
        return Ok(Sampled { graph: g, tries });
    }
    Err(GenError::GenerationFailed {
        tries: spec.max_tries,
    })
}

/// A bridgeless diameter-2 graph with exactly one cut vertex: apex 0 joined
/// to every other vertex, the rest split into `blocks >= 2` groups of at
/// least two vertices, each group a random tree plus extra edges with
/// probability `p`.
pub fn random_apex_blocks(
    n: usize,
    blocks: usize,
    p: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    if blocks < 2 || n < 1 + 2 * blocks {
        return Err(invalid(format!(
            "apex blocks need blocks >= 2 and n >= 1 + 2*blocks, got n={n}, blocks={blocks}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // every group starts with two vertices; the remainder is spread randomly
    let mut sizes = alloc::vec![2usize; blocks];
    for _ in 0..n - 1 - 2 * blocks {
        sizes[rng.random_range(0..blocks)] += 1;
    }
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    let mut start = 1;
    for size in sizes {
        let group: Vec<usize> = (start..start + size).collect();
        for i in 1..size {
            let parent = group[rng.random_range(0..i)];
            edges.push((parent, group[i]));
        }
        for i in 0..size {
            for j in i + 1..size {
                if rng.random_bool(p) {
                    edges.push((group[i], group[j]));
                }
            }
        }
        start += size;
    }
    Ok(build(n, edges))
}

/// A named family plus parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Star { leaves: usize },
    Petersen,
    Wheel { rim: usize },
    TightExample { k: usize, r: usize },
    Friendship { triangles: usize },
    RandomTree { n: usize, seed: u64 },
    RandomDiam2(RandomDiam2),
    ApexBlocks { n: usize, blocks: usize, p: f64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    /// Rejection-sampling attempts (1 for deterministic families).
    pub tries: usize,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Generated, GenError> {
        let once = |g: Graph| Generated { graph: g, tries: 1 };
        Ok(match *self {
            GenSpec::Cycle { n } => once(cycle(n)?),
            GenSpec::Path { n } => once(path(n)?),
            GenSpec::Complete { n } => once(complete(n)?),
            GenSpec::CompleteBipartite { s, t } => once(complete_bipartite(s, t)?),
            GenSpec::Star { leaves } => once(star(leaves)?),
            GenSpec::Petersen => once(petersen()),
            GenSpec::Wheel { rim } => once(wheel(rim)?),
            GenSpec::TightExample { k, r } => once(tight_example(k, r)?),
            GenSpec::Friendship { triangles } => once(friendship(triangles)?),
            GenSpec::RandomTree { n, seed } => once(random_tree(n, seed)?),
            GenSpec::RandomDiam2(ref spec) => {
                let s = random_diam2(spec)?;
                Generated {
                    graph: s.graph,
                    tries: s.tries,
                }
            }
            GenSpec::ApexBlocks { n, blocks, p, seed } => once(random_apex_blocks(n, blocks, p, seed)?),
        })
    }

    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Cycle { .. } => "cycle",
            GenSpec::Path { .. } => "path",
            GenSpec::Complete { .. } => "complete",
            GenSpec::CompleteBipartite { .. } => "complete_bipartite",
            GenSpec::Star { .. } => "star",
            GenSpec::Petersen => "petersen",
            GenSpec::Wheel { .. } => "wheel",
            GenSpec::TightExample { .. } => "tight_example",
            GenSpec::Friendship { .. } => "friendship",
            GenSpec::RandomTree { .. } => "random_tree",
            GenSpec::RandomDiam2(_) => "random_diam2",
            GenSpec::ApexBlocks { .. } => "apex_blocks",
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family())?;
        match *self {
            GenSpec::Cycle { n } | GenSpec::Path { n } | GenSpec::Complete { n } => write!(f, " n={n}"),
            GenSpec::CompleteBipartite { s, t } => write!(f, " s={s} t={t}"),
            GenSpec::Star { leaves } => write!(f, " leaves={leaves}"),
            GenSpec::Petersen => Ok(()),
            GenSpec::Wheel { rim } => write!(f, " rim={rim}"),
            GenSpec::TightExample { k, r } => write!(f, " k={k} r={r}"),
            GenSpec::Friendship { triangles } => write!(f, " triangles={triangles}"),
            GenSpec::RandomTree { n, seed } => write!(f, " n={n} seed={seed}"),
            GenSpec::RandomDiam2(s) => write!(
                f,
                " n={} p={} seed={} max_tries={} bridgeless={} two_connected={}",
                s.n, s.p, s.seed, s.max_tries, s.require_bridgeless, s.require_two_connected
            ),
            GenSpec::ApexBlocks { n, blocks, p, seed } => {
                write!(f, " n={n} blocks={blocks} p={p} seed={seed}")
            }
        }
    }
}
