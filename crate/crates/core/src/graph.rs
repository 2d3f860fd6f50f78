//! Immutable simple undirected graphs, vertex sets, and the construction
//! operators used throughout the crate.
//!
//! Vertices are dense ids `0..n`. Neighbor lists are kept sorted so every
//! derived structure (and every serialization) is deterministic.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// Builds the set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_sorted_unchecked(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }

    /// Image of the set under `map`.
    pub fn map(&self, map: &[Vertex]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Records how a subgraph sits inside its host: `vertex_map[i]` is the host
/// id of subgraph vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphWitness {
    pub vertex_map: Vec<Vertex>,
}

impl SubgraphWitness {
    /// Checks injectivity and that every subgraph edge exists in `host`.
    pub fn certify(&self, sub: &Graph, host: &Graph) -> Result<()> {
        if self.vertex_map.len() != sub.n() {
            return Err(Error::Contract(format!(
                "witness maps {} vertices but subgraph has {}",
                self.vertex_map.len(),
                sub.n()
            )));
        }
        let image: VertexSet = self.vertex_map.iter().copied().collect();
        if image.len() != self.vertex_map.len() {
            return Err(Error::Contract("witness map is not injective".into()));
        }
        if let Some(&bad) = self.vertex_map.iter().find(|&&v| v >= host.n()) {
            return Err(Error::Contract(format!("witness maps to missing host vertex {bad}")));
        }
        for (u, v) in sub.edges() {
            let (hu, hv) = (self.vertex_map[u], self.vertex_map[v]);
            if !host.has_edge(hu, hv) {
                return Err(Error::Contract(format!(
                    "subgraph edge {u}-{v} maps to non-edge {hu}-{hv}"
                )));
            }
        }
        Ok(())
    }

    /// Inverse lookup: host id to subgraph id.
    pub fn inverse(&self, host_n: usize) -> Vec<Option<Vertex>> {
        let mut inv = vec![None; host_n];
        for (i, &h) in self.vertex_map.iter().enumerate() {
            inv[h] = Some(i);
        }
        inv
    }
}

/// Immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Domain(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len(), labels: None })
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut es: Vec<(Vertex, Vertex)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es.dedup();
        Self::from_edges(n, &es)
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by the vertices with `mask[v]`.
    pub fn components_within(&self, mask: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if !mask[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Whether `set` induces a connected subgraph. The empty set counts as
    /// connected.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        set.is_empty() || self.components_within(&set.mask(self.n())).len() == 1
    }

    /// Induced subgraph on `set`; subgraph vertex `i` is the `i`-th smallest
    /// member of `set`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, SubgraphWitness) {
        let map = set.as_slice().to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(map.len(), &edges).expect("induced subgraph of a simple graph");
        (g, SubgraphWitness { vertex_map: map })
    }

    /// Subgraph with vertex set `set` and only the listed host edges. Edges
    /// must join members of `set` and exist in the host.
    pub fn edge_subgraph(
        &self,
        set: &VertexSet,
        edges: &[(Vertex, Vertex)],
    ) -> Result<(Graph, SubgraphWitness)> {
        let map = set.as_slice().to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut les = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::Contract(format!("{u}-{v} is not a host edge")));
            }
            let (a, b) = (local[u], local[v]);
            if a == usize::MAX || b == usize::MAX {
                return Err(Error::Contract(format!("edge {u}-{v} leaves the vertex set")));
            }
            les.push((a, b));
        }
        let g = Graph::from_edges_dedup(map.len(), &les)?;
        Ok((g, SubgraphWitness { vertex_map: map }))
    }

    /// Plain BFS distances from `sources` up to `cap`.
    pub fn distances_from(&self, sources: &VertexSet, cap: usize) -> Vec<Option<usize>> {
        bfs_layers(self, sources, cap, &VertexSet::new())
    }

    /// Closed `r`-neighborhood of `v`.
    pub fn ball(&self, v: Vertex, r: usize) -> VertexSet {
        VertexSet::from_mask(
            &self
                .distances_from(&VertexSet::singleton(v), r)
                .iter()
                .map(Option::is_some)
                .collect::<Vec<_>>(),
        )
    }

    /// Shortest path between `s` and `t` (inclusive), smallest-id parents.
    pub fn shortest_path(&self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            if v == t {
                break;
            }
            for &w in &self.adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    q.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Some(path)
    }

    /// Same vertex count and edge set (labels ignored).
    pub fn graph_eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

/// Multi-source BFS with a depth cap and forbidden vertices.
///
/// A forbidden vertex can be reached (it is recorded as an endpoint) but is
/// never expanded, so it never appears as an internal vertex of a path.
/// Sources are always expanded even when forbidden: they only ever occur as
/// path endpoints.
pub fn bfs_layers(
    g: &Graph,
    sources: &VertexSet,
    depth_cap: usize,
    forbidden: &VertexSet,
) -> Vec<Option<usize>> {
    let n = g.n();
    let forbidden = forbidden.mask(n);
    let mut dist = vec![None; n];
    let mut q = VecDeque::new();
    for s in sources.iter() {
        dist[s] = Some(0);
        q.push_back(s);
    }
    while let Some(v) = q.pop_front() {
        let d = dist[v].unwrap();
        if d == depth_cap || (forbidden[v] && d > 0) {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

/// Replaces every edge by a path of length exactly `r` (`r - 1` fresh
/// internal vertices). Original vertices keep ids `0..n`; the internal
/// vertices of the `i`-th edge (lexicographic order) get consecutive ids
/// starting at `n + i * (r - 1)`, ordered from the smaller endpoint.
pub fn r_subdivision(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::Domain("subdivision length must be at least 1".into()));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(g.m() * r);
    let mut next = n;
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 1..r {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(next, &edges)
}

/// Lexicographic product: `(x, y)` gets id `x * |V(h)| + y`; `(x, y)` and
/// `(x', y')` are adjacent iff `x x'` is a `g`-edge, or `x = x'` and `y y'`
/// is an `h`-edge.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.n();
    let mut edges = Vec::new();
    for (x, xp) in g.edges() {
        for y in 0..hn {
            for yp in 0..hn {
                edges.push((x * hn + y, xp * hn + yp));
            }
        }
    }
    for x in g.vertices() {
        for (y, yp) in h.edges() {
            edges.push((x * hn + y, x * hn + yp));
        }
    }
    Graph::from_edges(g.n() * hn, &edges).expect("lexicographic product is simple")
}

/// Standard families used by tests, examples and the benchmark suite.
pub mod families {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// `rows x cols` grid, vertex `(i, j)` has id `i * cols + j`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if j + 1 < cols {
                    edges.push((v, v + 1));
                }
                if i + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, &edges).unwrap()
    }
}

/// Input format for [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Optional `p <n> <m>` header, then `u v` per line, 0-based, `#` comments.
    EdgeList,
    /// DIMACS `.gr`: `c` comments, `p <kind> <n> <m>` header, edges as
    /// `u v` or `a u v [w]`, 1-based.
    Dimacs,
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::Parse { line, msg: format!("expected a non-negative integer, got {tok:?}") })
}

/// Parses a graph. Without a header, `n` is one more than the largest id.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut declared: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match format {
            GraphFormat::EdgeList => raw.split('#').next().unwrap_or(""),
            GraphFormat::Dimacs => raw,
        };
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match format {
            GraphFormat::EdgeList => {
                if toks[0] == "p" {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(Error::Parse { line, msg: "header must come first".into() });
                    }
                    if toks.len() != 3 {
                        return Err(Error::Parse { line, msg: "expected `p <n> <m>`".into() });
                    }
                    declared = Some((parse_usize(toks[1], line)?, parse_usize(toks[2], line)?, line));
                    continue;
                }
                if toks.len() != 2 {
                    return Err(Error::Parse { line, msg: "expected `u v`".into() });
                }
                edges.push((parse_usize(toks[0], line)?, parse_usize(toks[1], line)?, line));
            }
            GraphFormat::Dimacs => {
                match toks[0] {
                    "c" => continue,
                    "p" => {
                        if declared.is_some() {
                            return Err(Error::Parse { line, msg: "duplicate header".into() });
                        }
                        if toks.len() != 4 {
                            return Err(Error::Parse { line, msg: "expected `p <kind> <n> <m>`".into() });
                        }
                        declared = Some((parse_usize(toks[2], line)?, parse_usize(toks[3], line)?, line));
                        continue;
                    }
                    _ => {}
                }
                let nums = if toks[0] == "a" || toks[0] == "e" { &toks[1..] } else { &toks[..] };
                if nums.len() < 2 || nums.len() > 3 {
                    return Err(Error::Parse { line, msg: "expected an edge line".into() });
                }
                let u = parse_usize(nums[0], line)?;
                let v = parse_usize(nums[1], line)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse { line, msg: "DIMACS vertex ids are 1-based".into() });
                }
                edges.push((u - 1, v - 1, line));
            }
        }
    }
    let n = match declared {
        Some((n, _, _)) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    if let Some((_, m, hline)) = declared {
        if m != edges.len() {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
    }
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("vertex out of range (n = {n})") });
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u}-{v}") });
        }
    }
    let plain: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::from_edges(n, &plain)
}

/// Serializes in edge-list form with a `p <n> <m>` header.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn parse_examples() {
        let p3 = parse_graph("p 3 2\n0 1\n1 2", GraphFormat::EdgeList).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        assert!(p3.graph_eq(&path(3)));

        let k1 = parse_graph("p 1 0", GraphFormat::EdgeList).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));

        let k4 = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("p 3 2\n0 1\n1 x\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_graph("0 1\n1 1\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("0 1\n1 0\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("p 2 1\n0 5\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_and_dimacs() {
        let g = parse_graph("# triangle\np 3 3\n0 1 # first\n1 2\n2 0\n", GraphFormat::EdgeList).unwrap();
        assert!(g.graph_eq(&complete(3)));
        let d = parse_graph("c hello\np tw 3 2\n1 2\n2 3\n", GraphFormat::Dimacs).unwrap();
        assert!(d.graph_eq(&path(3)));
        let a = parse_graph("p sp 3 2\na 1 2 7\na 2 3 1\n", GraphFormat::Dimacs).unwrap();
        assert!(a.graph_eq(&path(3)));
    }

    #[test]
    fn subdivision_examples() {
        let k3 = complete(3);
        assert!(r_subdivision(&k3, 1).unwrap().graph_eq(&k3));
        let c = r_subdivision(&k3, 2).unwrap();
        assert_eq!((c.n(), c.m()), (6, 6));
        assert!(c.vertices().all(|v| c.degree(v) == 2) && c.is_connected());
        let p = r_subdivision(&path(2), 3).unwrap();
        assert_eq!((p.n(), p.m()), (4, 3));
        assert_eq!(p.shortest_path(0, 1).unwrap().len(), 4);
        assert!(r_subdivision(&k3, 0).is_err());
    }

    #[test]
    fn lex_product_examples() {
        let k4 = lex_product(&path(2), &complete(2));
        assert!(k4.graph_eq(&complete(4)));
        let g = cycle(5);
        assert!(lex_product(&g, &Graph::empty(1)).graph_eq(&g));
        let h = star(3);
        assert!(lex_product(&Graph::empty(1), &h).graph_eq(&h));
    }

    #[test]
    fn bfs_examples() {
        let p5 = path(5);
        let d = bfs_layers(&p5, &VertexSet::singleton(0), 2, &VertexSet::new());
        assert_eq!(d, vec![Some(0), Some(1), Some(2), None, None]);

        // C_6 as c1..c6 = 0..5, forbidden c4.
        let c6 = cycle(6);
        let d = bfs_layers(&c6, &VertexSet::singleton(0), 3, &VertexSet::singleton(3));
        assert_eq!(d[2], Some(2));
        assert_eq!(d[4], Some(2));
        assert_eq!(d[3], Some(3));

        let d = bfs_layers(&c6, &VertexSet::full(6), 0, &VertexSet::new());
        assert!(d.iter().all(|x| *x == Some(0)));
    }

    #[test]
    fn forbidden_vertices_block_paths() {
        // Path 0-1-2 with 1 forbidden: 2 is unreachable from 0.
        let d = bfs_layers(&path(3), &VertexSet::singleton(0), 5, &VertexSet::singleton(1));
        assert_eq!(d, vec![Some(0), Some(1), None]);
        // A forbidden source still expands.
        let d = bfs_layers(&path(3), &VertexSet::singleton(0), 5, &VertexSet::singleton(0));
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn witness_certification() {
        let g = cycle(5);
        let (sub, w) = g.induced_subgraph(&VertexSet::from([0, 1, 2]));
        assert!(sub.graph_eq(&path(3)));
        w.certify(&sub, &g).unwrap();
        let bad = SubgraphWitness { vertex_map: vec![0, 2, 1] };
        assert!(bad.certify(&sub, &g).is_err());
    }
}
