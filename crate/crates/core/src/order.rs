//! Linear vertex orders and weak reachability.
//!
//! `u` is weakly `s`-reachable from `v` under `L` when some path of length at
//! most `s` joins them and `u` is the `L`-minimum of that path. All numbers
//! reported here are for a given order; the minimum over all orders is only
//! computed by brute force on tiny graphs.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{lex_product, Graph, Vertex, VertexSet};

/// A graph together with a linear order of its vertices.
#[derive(Clone, Debug)]
pub struct OrderedGraph {
    graph: Graph,
    /// `order[i]` is the vertex at position `i`.
    order: Vec<Vertex>,
    /// `pos[v]` is the position of `v`.
    pos: Vec<usize>,
}

impl OrderedGraph {
    /// `order` lists vertices from smallest to largest.
    pub fn new(graph: Graph, order: Vec<Vertex>) -> Result<Self> {
        let n = graph.n();
        if order.len() != n {
            return Err(Error::Domain(format!("order has {} entries for {n} vertices", order.len())));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::Domain("order is not a permutation".into()));
            }
            pos[v] = i;
        }
        Ok(OrderedGraph { graph, order, pos })
    }

    /// The identity order `0 < 1 < .. < n-1`.
    pub fn identity(graph: Graph) -> Self {
        let order = graph.vertices().collect();
        Self::new(graph, order).unwrap()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    /// Vertices `v` with `u ∈ WReach_s[v]`: a BFS from `u` that only enters
    /// vertices placed after `u`.
    fn reached_from(&self, u: Vertex, s: usize) -> Vec<Vertex> {
        let n = self.graph.n();
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut out = vec![u];
        let mut q = VecDeque::from([u]);
        while let Some(v) = q.pop_front() {
            if dist[v] == s {
                continue;
            }
            for &w in self.graph.neighbors(v) {
                if dist[w] == usize::MAX && self.pos[w] > self.pos[u] {
                    dist[w] = dist[v] + 1;
                    out.push(w);
                    q.push_back(w);
                }
            }
        }
        out
    }

    pub fn is_weakly_reachable(&self, u: Vertex, v: Vertex, s: usize) -> bool {
        self.reached_from(u, s).contains(&v)
    }

    /// Restriction of the order to a subgraph given by `vertex_map`
    /// (subgraph id to id in this graph).
    pub fn restrict(&self, sub: Graph, vertex_map: &[Vertex]) -> Result<OrderedGraph> {
        let mut ids: Vec<Vertex> = (0..sub.n()).collect();
        ids.sort_by_key(|&i| self.pos[vertex_map[i]]);
        OrderedGraph::new(sub, ids)
    }
}

/// Weakly `s`-reachable sets for every vertex under one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WReachReport {
    pub s: usize,
    pub sets: Vec<VertexSet>,
    pub max_size: usize,
}

impl WReachReport {
    pub fn mean_size(&self) -> f64 {
        if self.sets.is_empty() {
            return 0.0;
        }
        self.sets.iter().map(VertexSet::len).sum::<usize>() as f64 / self.sets.len() as f64
    }

    /// `WReach_s[G, L, A]`: union over the members of `a`.
    pub fn union_over(&self, a: &VertexSet) -> VertexSet {
        a.iter().flat_map(|v| self.sets[v].iter()).collect()
    }
}

pub fn wreach(og: &OrderedGraph, s: usize) -> WReachReport {
    let n = og.graph.n();
    let reached: Vec<Vec<Vertex>> = (0..n).into_par_iter().map(|u| og.reached_from(u, s)).collect();
    let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (u, vs) in reached.into_iter().enumerate() {
        for v in vs {
            sets[v].push(u);
        }
    }
    let sets: Vec<VertexSet> = sets.into_iter().map(VertexSet::from).collect();
    let max_size = sets.iter().map(VertexSet::len).max().unwrap_or(0);
    WReachReport { s, sets, max_size }
}

/// Ordering strategies for [`heuristic_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderStrategy {
    /// Repeatedly delete a minimum-degree vertex; the deletion sequence,
    /// reversed, is the order.
    MinDegree,
    /// Breadth-first from the smallest unvisited vertex of each component.
    Bfs,
    Random(u64),
}

impl std::fmt::Display for OrderStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderStrategy::MinDegree => write!(f, "min-degree"),
            OrderStrategy::Bfs => write!(f, "bfs"),
            OrderStrategy::Random(seed) => write!(f, "random({seed})"),
        }
    }
}

pub fn heuristic_order(g: &Graph, strategy: OrderStrategy) -> OrderedGraph {
    let n = g.n();
    let order = match strategy {
        OrderStrategy::MinDegree => {
            let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
            let mut removed = vec![false; n];
            let mut seq = Vec::with_capacity(n);
            for _ in 0..n {
                let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
                removed[v] = true;
                seq.push(v);
                for &w in g.neighbors(v) {
                    if !removed[w] {
                        deg[w] -= 1;
                    }
                }
            }
            seq.reverse();
            seq
        }
        OrderStrategy::Bfs => {
            let mut seen = vec![false; n];
            let mut seq = Vec::with_capacity(n);
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                seen[s] = true;
                let mut q = VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    seq.push(v);
                    for &w in g.neighbors(v) {
                        if !seen[w] {
                            seen[w] = true;
                            q.push_back(w);
                        }
                    }
                }
            }
            seq
        }
        OrderStrategy::Random(seed) => {
            let mut seq: Vec<Vertex> = (0..n).collect();
            seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            seq
        }
    };
    OrderedGraph::new(g.clone(), order).expect("strategies produce permutations")
}

/// Returns the `L`-minimum vertex `z` of `path` after checking that it lies
/// in both `WReach_r[X]` and `WReach_r[y]`.
///
/// `path` must start in `x` and end at `y`, be a simple path of the graph
/// with at least one edge and at most `r` edges.
pub fn check_separation(
    og: &OrderedGraph,
    x: &VertexSet,
    y: Vertex,
    path: &[Vertex],
    r: usize,
) -> Result<Vertex> {
    let g = og.graph();
    if path.len() < 2 {
        return Err(Error::Contract("separation path needs at least one edge".into()));
    }
    if path.len() - 1 > r {
        return Err(Error::Contract(format!("path has length {} > {r}", path.len() - 1)));
    }
    if !x.contains(path[0]) || *path.last().unwrap() != y {
        return Err(Error::Contract("path must run from a member of X to y".into()));
    }
    if path.iter().any(|&v| v >= g.n()) || path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::Contract("path uses a non-edge".into()));
    }
    if VertexSet::from(path.to_vec()).len() != path.len() {
        return Err(Error::Contract("path repeats a vertex".into()));
    }
    let z = *path.iter().min_by_key(|&&v| og.position(v)).unwrap();
    let reach = og.reached_from(z, r);
    if !reach.contains(&path[0]) || !reach.contains(&y) {
        return Err(Error::Contract(format!(
            "minimum vertex {z} is not weakly {r}-reachable from both path ends"
        )));
    }
    Ok(z)
}

/// Order on `lex_product(g, h)` ranking `(x, y)` by the position of `x`,
/// then by `y`.
pub fn product_order(og: &OrderedGraph, h: &Graph) -> OrderedGraph {
    let hn = h.n();
    let product = lex_product(og.graph(), h);
    let order = og.order().iter().flat_map(|&x| (0..hn).map(move |y| x * hn + y)).collect();
    OrderedGraph::new(product, order).expect("product order is a permutation")
}

/// Exact `wcol_s` by trying every order. Only for `n <= 8`.
pub fn wcol_exact(g: &Graph, s: usize) -> Result<usize> {
    let n = g.n();
    if n > 8 {
        return Err(Error::Domain(format!("exhaustive wcol is limited to n <= 8, got {n}")));
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut perm, 0, &mut |p| {
        let og = OrderedGraph::new(g.clone(), p.to_vec()).unwrap();
        best = best.min(wreach(&og, s).max_size);
    });
    Ok(if n == 0 { 0 } else { best })
}

fn permute(p: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// CSV report `strategy,s,max_size,mean_size`.
pub fn wcol_report_csv(g: &Graph, strategies: &[OrderStrategy], radii: &[usize]) -> String {
    let mut out = String::from("# lkcds wcol-report v1\nstrategy,s,max_size,mean_size\n");
    for &st in strategies {
        let og = heuristic_order(g, st);
        for &s in radii {
            let rep = wreach(&og, s);
            out.push_str(&format!("{},{},{},{:.4}\n", st, s, rep.max_size, rep.mean_size()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn wreach_path_example() {
        let og = OrderedGraph::identity(path(4));
        let rep = wreach(&og, 2);
        assert_eq!(rep.sets[3], VertexSet::from([1, 2, 3]));
        assert_eq!(rep.max_size, 3);
    }

    #[test]
    fn wreach_clique_example() {
        let og = heuristic_order(&complete(4), OrderStrategy::Random(3));
        let rep = wreach(&og, 1);
        let first = og.order()[0];
        let last = og.order()[3];
        assert!(rep.sets.iter().all(|s| s.contains(first)));
        assert_eq!(rep.max_size, 4);
        assert_eq!(rep.sets[last].len(), 4);
    }

    #[test]
    fn wreach_star_center_first() {
        let og = OrderedGraph::identity(star(4));
        let rep = wreach(&og, 2);
        for leaf in 1..=4 {
            assert_eq!(rep.sets[leaf], VertexSet::from([0, leaf]));
        }
        assert_eq!(rep.max_size, 2);
    }

    #[test]
    fn wreach_radius_zero_is_trivial() {
        let og = heuristic_order(&grid(3, 3), OrderStrategy::Bfs);
        let rep = wreach(&og, 0);
        assert!(rep.sets.iter().enumerate().all(|(v, s)| *s == VertexSet::singleton(v)));
    }

    #[test]
    fn heuristic_examples() {
        let og = heuristic_order(&path(4), OrderStrategy::MinDegree);
        assert!(wreach(&og, 1).max_size <= 2);
        for st in [OrderStrategy::MinDegree, OrderStrategy::Bfs, OrderStrategy::Random(1)] {
            assert_eq!(wreach(&heuristic_order(&complete(4), st), 1).max_size, 4);
        }
        let a = heuristic_order(&grid(3, 3), OrderStrategy::Random(7));
        let b = heuristic_order(&grid(3, 3), OrderStrategy::Random(7));
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn separation_examples() {
        let p5 = path(5);
        let x = VertexSet::singleton(0);
        let og = OrderedGraph::identity(p5.clone());
        assert_eq!(check_separation(&og, &x, 2, &[0, 1, 2], 2).unwrap(), 0);
        let og = OrderedGraph::new(p5, vec![2, 1, 0, 3, 4]).unwrap();
        assert_eq!(check_separation(&og, &x, 2, &[0, 1, 2], 2).unwrap(), 2);
        assert!(check_separation(&og, &x, 0, &[0], 2).is_err());
        assert!(check_separation(&og, &x, 2, &[0, 1, 2], 1).is_err());
        assert!(check_separation(&og, &x, 3, &[0, 2, 3], 3).is_err());
    }

    #[test]
    fn product_order_examples() {
        let og = OrderedGraph::identity(path(2));
        let po = product_order(&og, &complete(2));
        assert!(po.graph().graph_eq(&complete(4)));
        assert_eq!(po.order(), &[0, 1, 2, 3]);

        let og = heuristic_order(&cycle(5), OrderStrategy::Random(2));
        let po = product_order(&og, &Graph::empty(1));
        assert_eq!(po.order(), og.order());

        let og = OrderedGraph::identity(path(4));
        let po = product_order(&og, &complete(3));
        let lhs = wreach(&po, 2).max_size;
        let rhs = wreach(&og, 2).max_size;
        assert!(lhs <= 3 * rhs, "{lhs} > 3 * {rhs}");
        assert!(lhs <= 9);
    }

    #[test]
    fn exact_wcol_small() {
        assert_eq!(wcol_exact(&path(4), 1).unwrap(), 2);
        assert_eq!(wcol_exact(&complete(4), 2).unwrap(), 4);
        assert!(wcol_exact(&path(9), 1).is_err());
    }
}
