//! Distance-r domination predicates, connectivity augmentation and
//! covering families of small subtrees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{bfs_layers, Graph, Vertex, VertexSet};
use crate::ratio::{ceil_usize, floor_usize, Rational};

/// Whether every target lies within distance `r` of `d`.
pub fn dominates(g: &Graph, d: &VertexSet, r: usize, targets: &VertexSet) -> bool {
    if targets.is_empty() {
        return true;
    }
    if d.is_empty() {
        return false;
    }
    let dist = bfs_layers(g, d, r, &VertexSet::new());
    targets.iter().all(|v| dist[v].is_some())
}

/// Greedy max-coverage upper bound: repeatedly pick the vertex whose
/// `r`-ball covers the most undominated targets (smallest id on ties).
pub fn greedy_rdom(g: &Graph, r: usize, targets: &VertexSet) -> VertexSet {
    let n = g.n();
    let balls: Vec<VertexSet> = g.vertices().map(|v| g.ball(v, r)).collect();
    let mut open = targets.mask(n);
    let mut left = targets.len();
    let mut out = VertexSet::new();
    while left > 0 {
        let (best, gain) = (0..n)
            .map(|v| (v, balls[v].iter().filter(|&w| open[w]).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty graph when targets remain");
        debug_assert!(gain > 0);
        out.insert(best);
        for w in balls[best].iter() {
            if open[w] {
                open[w] = false;
                left -= 1;
            }
        }
    }
    out
}

/// Shortest path from component `from` to any other component of `in_set`;
/// returns `(internal vertices, endpoint in the other component)`.
fn nearest_other(g: &Graph, comp: &VertexSet, label: &[usize], from: usize) -> Option<(Vec<Vertex>, Vertex)> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    for v in comp.iter() {
        parent[v] = v;
        q.push_back(v);
    }
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if parent[w] != usize::MAX {
                continue;
            }
            parent[w] = v;
            if label[w] != usize::MAX && label[w] != from {
                let mut internal = Vec::new();
                let mut cur = v;
                while label[cur] != from {
                    internal.push(cur);
                    cur = parent[cur];
                }
                internal.reverse();
                return Some((internal, w));
            }
            q.push_back(w);
        }
    }
    None
}

/// Augments `d` to a connected set: returns `Q` with `G[D ∪ Q]` connected.
///
/// Components are merged one at a time along a globally shortest path
/// between two distinct components (ties: component with smaller least
/// member). When `d` r-dominates a connected set that
/// meets every component's neighborhood, every such path has at most `2r`
/// internal vertices; a longer one is reported as a contract violation.
pub fn connect(g: &Graph, d: &VertexSet, r: usize) -> Result<VertexSet> {
    if d.is_empty() {
        return Err(Error::Domain("cannot connect an empty set".into()));
    }
    let n = g.n();
    let mut current = d.clone();
    let mut q = VertexSet::new();
    loop {
        let comps = g.components_within(&current.mask(n));
        if comps.len() <= 1 {
            return Ok(q);
        }
        let mut label = vec![usize::MAX; n];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                label[v] = i;
            }
        }
        let mut best: Option<(usize, Vertex, Vec<Vertex>)> = None;
        for (i, c) in comps.iter().enumerate() {
            if let Some((internal, end)) = nearest_other(g, c, &label, i) {
                let better = match &best {
                    None => true,
                    Some((len, _, _)) => internal.len() < *len,
                };
                if better {
                    best = Some((internal.len(), end, internal));
                }
            }
        }
        let (len, _, internal) = best.ok_or_else(|| {
            Error::Domain("set spans several connected components of the graph".into())
        })?;
        if len > 2 * r {
            return Err(Error::Contract(format!(
                "merging components needs {len} connector vertices, more than 2r = {}",
                2 * r
            )));
        }
        for v in internal {
            current.insert(v);
            q.insert(v);
        }
    }
}

/// A covering family: small subtrees of the host whose union is `V(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringFamily {
    pub t: Rational,
    pub trees: Vec<(VertexSet, Vec<(Vertex, Vertex)>)>,
}

impl CoveringFamily {
    pub fn total_size(&self) -> usize {
        self.trees.iter().map(|(v, _)| v.len()).sum()
    }

    /// Asserts the size, union and count bounds, and that each piece is a
    /// subtree of `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let cap = floor_usize(self.t * 2);
        let mut covered = vec![false; n];
        for (vs, es) in &self.trees {
            if vs.is_empty() || vs.len() > cap {
                return Err(Error::Contract(format!("piece of size {} exceeds 2t = {cap}", vs.len())));
            }
            if es.len() + 1 != vs.len() {
                return Err(Error::Contract("piece is not a tree".into()));
            }
            let (sub, _) = g.edge_subgraph(vs, es).map_err(|e| Error::Contract(e.to_string()))?;
            if !sub.is_connected() || sub.m() != es.len() {
                return Err(Error::Contract("piece is not a subtree".into()));
            }
            for v in vs.iter() {
                covered[v] = true;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::Contract("pieces do not cover V(G)".into()));
        }
        let nr = Rational::from_integer(n as i64);
        let count = Rational::from_integer(self.trees.len() as i64);
        if count > nr / self.t + 1 {
            return Err(Error::Contract(format!(
                "{} pieces exceed |V|/t + 1 = {}",
                self.trees.len(),
                nr / self.t + 1
            )));
        }
        let total = Rational::from_integer(self.total_size() as i64);
        if total > (Rational::from_integer(1) + self.t.recip()) * nr + 1 {
            return Err(Error::Contract(format!("total piece size {} exceeds (1+1/t)|V|+1", self.total_size())));
        }
        Ok(())
    }
}

/// Splits a connected graph into subtrees of at most `⌊2t⌋` vertices.
///
/// A BFS spanning tree rooted at 0 is cut bottom-up: the deepest vertex `v`
/// whose remaining subtree holds at least `⌈t⌉` vertices is detached whole
/// when it fits, otherwise `v` plus a bundle of its child subtrees (largest
/// first, up to `⌊2t⌋ - 1` vertices) is detached while `v` stays. The last
/// remainder is the final piece. The bounds are checked before returning.
pub fn covering_family(g: &Graph, t: Rational) -> Result<CoveringFamily> {
    if t < Rational::new(1, 2) {
        return Err(Error::Domain("covering families need t >= 1/2".into()));
    }
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(Error::Domain("covering families need a connected, nonempty graph".into()));
    }
    let cap = floor_usize(t * 2);
    let min_new = ceil_usize(t).max(1);

    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut bfs = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < bfs.len() {
        let v = bfs[i];
        i += 1;
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                bfs.push(w);
            }
        }
    }
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &v in &bfs[1..] {
        children[parent[v]].push(v);
    }
    let mut alive = vec![true; n];
    let mut trees = Vec::new();

    let subtree_of = |root: Vertex, alive: &[bool], children: &[Vec<Vertex>]| -> Vec<Vertex> {
        let mut out = vec![root];
        let mut j = 0;
        while j < out.len() {
            let v = out[j];
            j += 1;
            out.extend(children[v].iter().copied().filter(|&c| alive[c]));
        }
        out
    };
    let piece = |vs: Vec<Vertex>, parent: &[Vertex], top: Vertex| {
        let set: VertexSet = vs.iter().copied().collect();
        let mut es: Vec<(Vertex, Vertex)> = vs
            .iter()
            .filter(|&&v| v != top)
            .map(|&v| (v.min(parent[v]), v.max(parent[v])))
            .collect();
        es.sort_unstable();
        (set, es)
    };

    loop {
        // Remaining subtree sizes, bottom-up.
        let mut size = vec![0usize; n];
        for &v in bfs.iter().rev() {
            if alive[v] {
                size[v] = 1 + children[v].iter().filter(|&&c| alive[c]).map(|&c| size[c]).sum::<usize>();
            }
        }
        if size[0] <= cap {
            let rest = subtree_of(0, &alive, &children);
            trees.push(piece(rest, &parent, 0));
            break;
        }
        let v = bfs
            .iter()
            .copied()
            .filter(|&v| alive[v] && size[v] >= min_new)
            .max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)))
            .expect("root qualifies");
        if size[v] <= cap {
            let vs = subtree_of(v, &alive, &children);
            for &w in &vs {
                alive[w] = false;
            }
            trees.push(piece(vs, &parent, v));
            continue;
        }
        let mut kids: Vec<Vertex> = children[v].iter().copied().filter(|&c| alive[c]).collect();
        kids.sort_by(|&a, &b| size[b].cmp(&size[a]).then(a.cmp(&b)));
        let mut bundle = vec![v];
        let mut used = 0;
        for c in kids {
            if used + size[c] < cap {
                used += size[c];
                let vs = subtree_of(c, &alive, &children);
                bundle.extend(vs);
            }
        }
        if used == 0 {
            // Only reachable when cap == 1: fall back to a singleton.
            let c = children[v].iter().copied().find(|&c| alive[c]).unwrap();
            let vs = subtree_of(c, &alive, &children);
            let leaf = *vs.iter().find(|&&w| children[w].iter().all(|&x| !alive[x])).unwrap();
            alive[leaf] = false;
            trees.push((VertexSet::singleton(leaf), Vec::new()));
            continue;
        }
        for &w in &bundle[1..] {
            alive[w] = false;
        }
        trees.push(piece(bundle, &parent, v));
    }
    let fam = CoveringFamily { t, trees };
    fam.check(g)?;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::ratio::int;

    #[test]
    fn dominates_examples() {
        let c6 = cycle(6);
        assert!(dominates(&c6, &VertexSet::from([0, 3]), 1, &VertexSet::full(6)));
        let p5 = path(5);
        assert!(!dominates(&p5, &VertexSet::singleton(0), 2, &VertexSet::full(5)));
        assert!(dominates(&p5, &VertexSet::full(5), 0, &VertexSet::full(5)));
        assert!(dominates(&p5, &VertexSet::new(), 1, &VertexSet::new()));
    }

    #[test]
    fn connect_examples() {
        let s = star(5);
        assert_eq!(connect(&s, &VertexSet::from([1, 2]), 1).unwrap(), VertexSet::singleton(0));
        let g = grid(3, 3);
        assert!(connect(&g, &VertexSet::from([0, 1, 4]), 1).unwrap().is_empty());
        let p7 = path(7);
        let q = connect(&p7, &VertexSet::from([0, 3, 6]), 1).unwrap();
        assert_eq!(q, VertexSet::from([1, 2, 4, 5]));
    }

    #[test]
    fn connect_reports_broken_hypothesis() {
        let p7 = path(7);
        let err = connect(&p7, &VertexSet::from([0, 6]), 1).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_rdom(&star(5), 1, &VertexSet::full(6)), VertexSet::singleton(0));
        assert_eq!(greedy_rdom(&path(5), 2, &VertexSet::full(5)), VertexSet::singleton(2));
        assert!(greedy_rdom(&path(5), 1, &VertexSet::new()).is_empty());
    }

    #[test]
    fn covering_family_examples() {
        let p9 = path(9);
        let f = covering_family(&p9, int(2)).unwrap();
        assert!(f.trees.iter().all(|(v, _)| v.len() <= 4));
        assert!(f.trees.len() <= 5);
        assert!(f.total_size() <= 14);

        let g = grid(3, 3);
        let f = covering_family(&g, Rational::new(1, 2)).unwrap();
        assert_eq!(f.trees.len(), 9);
        assert!(f.trees.iter().all(|(v, _)| v.len() == 1));

        let f = covering_family(&Graph::empty(1), int(3)).unwrap();
        assert_eq!(f.trees, vec![(VertexSet::singleton(0), vec![])]);
    }

    #[test]
    fn covering_family_rejects_disconnected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(covering_family(&g, int(1)), Err(Error::Domain(_))));
    }
}
