//! Exact minimum Steiner trees and group Steiner trees, measured by vertex
//! count.
//!
//! The solver is the Dreyfus–Wagner subset dynamic program with unit edge
//! weights: `cost[mask][v]` is the fewest edges of a tree containing `v` that
//! touches every group in `mask`. A tree with `e` edges has `e + 1` vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const DEFAULT_GROUP_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryMode {
    Terminals,
    Groups,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerQuery {
    pub mode: QueryMode,
    /// One group per terminal in terminal mode.
    pub groups: Vec<VertexSet>,
    pub size_cap: Option<usize>,
    pub group_limit: usize,
}

impl SteinerQuery {
    pub fn terminals(terminals: &VertexSet) -> Self {
        SteinerQuery {
            mode: QueryMode::Terminals,
            groups: terminals.iter().map(VertexSet::singleton).collect(),
            size_cap: None,
            group_limit: DEFAULT_GROUP_LIMIT,
        }
    }

    pub fn groups(groups: Vec<VertexSet>) -> Self {
        SteinerQuery { mode: QueryMode::Groups, groups, size_cap: None, group_limit: DEFAULT_GROUP_LIMIT }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.size_cap = Some(cap);
        self
    }

    pub fn with_group_limit(mut self, limit: usize) -> Self {
        self.group_limit = limit;
        self
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        if self.groups.is_empty() {
            return Err(Error::Domain("Steiner query without terminals or groups".into()));
        }
        if self.groups.len() > self.group_limit {
            return Err(Error::Domain(format!(
                "{} groups exceed the configured limit of {}",
                self.groups.len(),
                self.group_limit
            )));
        }
        let mut owner = vec![false; g.n()];
        for grp in &self.groups {
            if grp.is_empty() {
                return Err(Error::Domain("empty Steiner group".into()));
            }
            for v in grp.iter() {
                if v >= g.n() {
                    return Err(Error::Domain(format!("terminal {v} out of range")));
                }
                if owner[v] {
                    return Err(Error::Domain(format!("vertex {v} lies in two groups")));
                }
                owner[v] = true;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerTree {
    pub vertices: VertexSet,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    /// For each group, the smallest tree vertex belonging to it.
    pub touched: Vec<Vertex>,
}

impl SteinerTree {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Checks that the edges form a tree on `vertices` inside `g` and that
    /// every group is touched.
    pub fn validate(&self, g: &Graph, groups: &[VertexSet]) -> Result<()> {
        if self.vertices.is_empty() || self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::Contract("vertex and edge counts do not form a tree".into()));
        }
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || !self.vertices.contains(u) || !self.vertices.contains(v) {
                return Err(Error::Contract(format!("tree edge {u}-{v} is invalid")));
            }
        }
        let (sub, _) = g
            .edge_subgraph(&self.vertices, &self.edges)
            .map_err(|e| Error::Contract(e.to_string()))?;
        if sub.m() != self.edges.len() || !sub.is_connected() {
            return Err(Error::Contract("tree edges are not connected or repeat".into()));
        }
        for (i, grp) in groups.iter().enumerate() {
            if grp.intersection(&self.vertices).is_empty() {
                return Err(Error::Contract(format!("group {i} is not touched")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SteinerOutcome {
    Tree(SteinerTree),
    ExceedsCap,
    Infeasible,
}

impl SteinerOutcome {
    pub fn tree(&self) -> Option<&SteinerTree> {
        match self {
            SteinerOutcome::Tree(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy)]
enum Back {
    None,
    Seed,
    Merge(usize),
    Step(Vertex),
}

struct Table {
    cost: Vec<Vec<usize>>,
    back: Vec<Vec<Back>>,
}

const INF: usize = usize::MAX / 4;

fn solve_table(g: &Graph, groups: &[VertexSet], bound: usize) -> Table {
    let n = g.n();
    let k = groups.len();
    let full = (1usize << k) - 1;
    let mut cost = vec![vec![INF; n]; full + 1];
    let mut back = vec![vec![Back::None; n]; full + 1];
    for (i, grp) in groups.iter().enumerate() {
        for v in grp.iter() {
            cost[1 << i][v] = 0;
            back[1 << i][v] = Back::Seed;
        }
    }
    for mask in 1..=full {
        if mask.count_ones() > 1 {
            let low = mask & mask.wrapping_neg();
            for v in 0..n {
                let mut best = cost[mask][v];
                let mut arg = back[mask][v];
                // Enumerate splits whose first half holds the lowest group.
                let rest = mask ^ low;
                let mut sub = rest;
                loop {
                    let a = sub | low;
                    if a != mask {
                        let b = mask ^ a;
                        let c = cost[a][v].saturating_add(cost[b][v]);
                        if c < best {
                            best = c;
                            arg = Back::Merge(a);
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                cost[mask][v] = best;
                back[mask][v] = arg;
            }
        }
        // Unit-weight relaxation with a bucket queue.
        let mut buckets: Vec<VecDeque<Vertex>> = Vec::new();
        for (v, &c) in cost[mask].iter().enumerate() {
            if c <= bound {
                if buckets.len() <= c {
                    buckets.resize_with(c + 1, VecDeque::new);
                }
                buckets[c].push_back(v);
            }
        }
        let mut d = 0;
        while d < buckets.len() {
            while let Some(v) = buckets[d].pop_front() {
                if cost[mask][v] != d || d >= bound {
                    continue;
                }
                for &w in g.neighbors(v) {
                    if d + 1 < cost[mask][w] {
                        cost[mask][w] = d + 1;
                        back[mask][w] = Back::Step(v);
                        if buckets.len() <= d + 1 {
                            buckets.resize_with(d + 2, VecDeque::new);
                        }
                        buckets[d + 1].push_back(w);
                    }
                }
            }
            d += 1;
        }
    }
    Table { cost, back }
}

fn collect(t: &Table, mask: usize, v: Vertex, verts: &mut Vec<Vertex>, edges: &mut Vec<(Vertex, Vertex)>) {
    verts.push(v);
    match t.back[mask][v] {
        Back::None => unreachable!("reconstructing an unreached state"),
        Back::Seed => {}
        Back::Merge(a) => {
            collect(t, a, v, verts, edges);
            collect(t, mask ^ a, v, verts, edges);
        }
        Back::Step(u) => {
            edges.push((u.min(v), u.max(v)));
            collect(t, mask, u, verts, edges);
        }
    }
}

/// Minimum-vertex (group) Steiner tree. Among optimal trees the one
/// reconstructed from the smallest root id is returned, so results are
/// deterministic.
pub fn steiner_exact(g: &Graph, q: &SteinerQuery) -> Result<SteinerOutcome> {
    q.validate(g)?;
    let bound = match q.size_cap {
        Some(0) => return Ok(SteinerOutcome::ExceedsCap),
        Some(cap) => cap - 1,
        None => g.n(),
    };
    let table = solve_table(g, &q.groups, bound);
    let full = (1usize << q.groups.len()) - 1;
    let best = (0..g.n()).map(|v| (table.cost[full][v], v)).min();
    let (edges_count, root) = match best {
        Some((c, v)) if c < INF => (c, v),
        _ => {
            // With a bound the DP may stop early; only report infeasibility
            // when the unbounded problem has no tree.
            if q.size_cap.is_some() && st_value(g, q)?.is_some() {
                return Ok(SteinerOutcome::ExceedsCap);
            }
            return Ok(SteinerOutcome::Infeasible);
        }
    };
    if let Some(cap) = q.size_cap {
        if edges_count + 1 > cap {
            return Ok(SteinerOutcome::ExceedsCap);
        }
    }
    let mut verts = Vec::new();
    let mut edges = Vec::new();
    collect(&table, full, root, &mut verts, &mut edges);
    edges.sort_unstable();
    edges.dedup();
    let vertices: VertexSet = verts.into_iter().collect();
    debug_assert_eq!(vertices.len(), edges_count + 1);
    let touched = q
        .groups
        .iter()
        .map(|grp| grp.iter().find(|&v| vertices.contains(v)).expect("tree touches every group"))
        .collect();
    let tree = SteinerTree { vertices, edges, touched };
    debug_assert!(tree.validate(g, &q.groups).is_ok());
    Ok(SteinerOutcome::Tree(tree))
}

/// `st_G(Y)` ignoring any cap; `None` when no connecting tree exists.
pub fn st_value(g: &Graph, q: &SteinerQuery) -> Result<Option<usize>> {
    q.validate(g)?;
    let table = solve_table(g, &q.groups, g.n());
    let full = (1usize << q.groups.len()) - 1;
    Ok(table.cost[full].iter().copied().min().filter(|&c| c < INF).map(|c| c + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn path_terminals() {
        let q = SteinerQuery::terminals(&VertexSet::from([0, 4]));
        let t = steiner_exact(&path(5), &q).unwrap();
        assert_eq!(t.tree().unwrap().size(), 5);
    }

    #[test]
    fn cycle_groups_example() {
        // C_6 groups {c1},{c3},{c5}.
        let q = SteinerQuery::groups(vec![
            VertexSet::singleton(0),
            VertexSet::singleton(2),
            VertexSet::singleton(4),
        ]);
        let out = steiner_exact(&cycle(6), &q).unwrap();
        let t = out.tree().unwrap();
        assert_eq!(t.size(), 5);
        t.validate(&cycle(6), &q.groups).unwrap();
    }

    #[test]
    fn single_terminal() {
        let q = SteinerQuery::terminals(&VertexSet::singleton(3));
        let t = steiner_exact(&grid(3, 3), &q).unwrap();
        let t = t.tree().unwrap();
        assert_eq!(t.vertices, VertexSet::singleton(3));
        assert!(t.edges.is_empty());
    }

    #[test]
    fn st_value_examples() {
        let q = SteinerQuery::terminals(&VertexSet::from([0, 1]));
        assert_eq!(st_value(&complete(4), &q).unwrap(), Some(2));

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let q = SteinerQuery::terminals(&VertexSet::from([0, 3]));
        assert_eq!(st_value(&two, &q).unwrap(), None);
        assert_eq!(steiner_exact(&two, &q).unwrap(), SteinerOutcome::Infeasible);

        let q = SteinerQuery::groups(vec![VertexSet::from([0, 3]), VertexSet::singleton(1)]);
        assert_eq!(st_value(&cycle(6), &q).unwrap(), Some(2));
    }

    #[test]
    fn cap_semantics() {
        let q = SteinerQuery::terminals(&VertexSet::from([0, 4])).with_cap(4);
        assert_eq!(steiner_exact(&path(5), &q).unwrap(), SteinerOutcome::ExceedsCap);
        let q = SteinerQuery::terminals(&VertexSet::from([0, 4])).with_cap(5);
        assert!(steiner_exact(&path(5), &q).unwrap().tree().is_some());
    }

    #[test]
    fn query_validation() {
        let g = path(4);
        assert!(steiner_exact(&g, &SteinerQuery::terminals(&VertexSet::new())).is_err());
        let q = SteinerQuery::groups(vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]);
        assert!(steiner_exact(&g, &q).is_err());
        let q = SteinerQuery::terminals(&VertexSet::from([0, 1, 2])).with_group_limit(2);
        assert!(steiner_exact(&g, &q).is_err());
    }
}
