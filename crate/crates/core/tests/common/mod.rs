//! Shared graph suite and brute-force oracles for the integration tests.
#![allow(dead_code)]

use lkcds::graph::families::{complete, cycle, grid, path};
use lkcds::graph::r_subdivision;
use lkcds::{Graph, Vertex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random spanning tree on `n` vertices plus `chords` extra edges.
pub fn random_tree_with_chords(n: usize, chords: usize, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut tries = 0;
    while edges.len() < n - 1 + chords && tries < 50 * (chords + 1) {
        tries += 1;
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !edges.iter().any(|&(x, y)| (x, y) == (a.min(b), a.max(b)) || (x, y) == (a.max(b), a.min(b))) {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges_dedup(n, &edges).unwrap()
}

/// The connected graph suite: paths, cycles, grids up to 5x5, seeded random
/// trees with chords, and 2-subdivided cliques K5..K7.
pub fn suite() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=24 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=24 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for a in 1..=5 {
        for b in a..=5 {
            if a * b >= 2 {
                out.push((format!("grid{a}x{b}"), grid(a, b)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..140 {
        let n = rng.gen_range(4..=20);
        let chords = if i % 3 == 0 { 0 } else { rng.gen_range(0..=n / 3) };
        out.push((format!("tree{i}_n{n}_c{chords}"), random_tree_with_chords(n, chords, &mut rng)));
    }
    for k in 5..=7 {
        out.push((format!("K{k}sub2"), r_subdivision(&complete(k), 2).unwrap()));
    }
    out
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..(1u32 << n)).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Distances from `s` by plain BFS, skipping `blocked` (except `s`).
pub fn bfs(g: &Graph, s: Vertex, blocked: &[bool]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w].is_none() && !blocked[w] {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn brute_dominates(g: &Graph, d: &VertexSet, r: usize, targets: &VertexSet) -> bool {
    let free = vec![false; g.n()];
    let dists: Vec<_> = d.iter().map(|v| bfs(g, v, &free)).collect();
    targets.iter().all(|t| dists.iter().any(|dv| dv[t].is_some_and(|x| x <= r)))
}

pub fn brute_connected(g: &Graph, set: &VertexSet) -> bool {
    let Some(s) = set.first() else { return false };
    let blocked: Vec<bool> = (0..g.n()).map(|v| !set.contains(v)).collect();
    let d = bfs(g, s, &blocked);
    set.iter().all(|v| d[v].is_some())
}

/// Minimum distance-r dominating set size of `targets`, by exhausting all
/// subsets. `connected` restricts to sets inducing a connected subgraph.
pub fn brute_opt(g: &Graph, r: usize, targets: &VertexSet, connected: bool) -> Option<usize> {
    subsets(g.n())
        .filter(|d| !d.is_empty() || targets.is_empty())
        .filter(|d| !connected || d.is_empty() || brute_connected(g, d))
        .filter(|d| brute_dominates(g, d, r, targets))
        .map(|d| d.len())
        .min()
}

/// Fewest vertices of a connected subgraph touching every group.
pub fn brute_group_steiner(g: &Graph, groups: &[VertexSet]) -> Option<usize> {
    subsets(g.n())
        .filter(|s| !s.is_empty())
        .filter(|s| groups.iter().all(|grp| grp.iter().any(|v| s.contains(v))))
        .filter(|s| brute_connected(g, s))
        .map(|s| s.len())
        .min()
}

/// Avoiding distance from `u` to `a` in `g - (A \ {a})`, capped at `r`.
pub fn split_distance(g: &Graph, u: Vertex, a: Vertex, set: &VertexSet, r: usize) -> Option<usize> {
    let blocked: Vec<bool> = (0..g.n()).map(|v| v != a && set.contains(v)).collect();
    bfs(g, u, &blocked)[a].filter(|&d| d <= r)
}
