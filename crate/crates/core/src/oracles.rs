//! Exact exponential-time solvers for domination, connected domination and
//! set cover. They back the verification suites and the small-optimum
//! shortcut of the pipeline, so every search is budgeted and cancellable.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::domset::{connect, dominates, greedy_rdom};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Found,
    /// No solution of size at most the cap exists.
    NoneWithinCap,
    /// No solution of any size exists.
    Infeasible,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Found => "found",
            SolveStatus::NoneWithinCap => "none-within-cap",
            SolveStatus::Infeasible => "infeasible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<S = VertexSet> {
    pub status: SolveStatus,
    pub solution: Option<S>,
    pub value: Option<usize>,
    /// Search nodes expanded.
    pub nodes: u64,
}

impl<S> SolveResult<S> {
    fn found(solution: S, value: usize, nodes: u64) -> Self {
        SolveResult { status: SolveStatus::Found, solution: Some(solution), value: Some(value), nodes }
    }

    fn none(status: SolveStatus, nodes: u64) -> Self {
        SolveResult { status, solution: None, value: None, nodes }
    }

    pub fn is_found(&self) -> bool {
        self.status == SolveStatus::Found
    }

    /// `min{value, k + 1}`, with "nothing within the cap" counted as `k + 1`.
    pub fn capped(&self, k: usize) -> usize {
        self.value.map_or(k + 1, |v| v.min(k + 1))
    }
}

/// Cooperative cancellation flag shared between a caller and a search.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Node limit plus optional cancellation for one search.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub cancel: Option<CancelToken>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget { node_limit: Some(limit), cancel: None }
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    fn meter(&self, context: &'static str) -> Meter<'_> {
        Meter { budget: self, used: 0, context }
    }
}

struct Meter<'a> {
    budget: &'a Budget,
    used: u64,
    context: &'static str,
}

impl Meter<'_> {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.used > limit {
                return Err(Error::Budget { limit, context: self.context.to_string() });
            }
        }
        if self.used.is_multiple_of(1024) {
            if let Some(c) = &self.budget.cancel {
                if c.is_cancelled() {
                    return Err(Error::Cancelled(self.context.to_string()));
                }
            }
        }
        Ok(())
    }
}

/// Fixed-width bitset over vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::zeros(n);
        for v in it {
            b.set(v);
        }
        b
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn get(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Minimum set `D ⊆ candidates` with `|D| <= k` that r-dominates `targets`.
///
/// Iterative deepening; each node branches on the open target with the
/// fewest candidate dominators (smallest id on ties) and tries those
/// dominators in increasing id order, so the first solution found is
/// deterministic. Returns `Ok(None)` when no such set exists.
pub fn find_dominator(
    g: &Graph,
    targets: &VertexSet,
    candidates: &VertexSet,
    r: usize,
    k: usize,
    budget: &Budget,
) -> Result<Option<VertexSet>> {
    let mut meter = budget.meter("dominating set search");
    find_dominator_metered(g, targets, candidates, r, k, &mut meter)
}

fn find_dominator_metered(
    g: &Graph,
    targets: &VertexSet,
    candidates: &VertexSet,
    r: usize,
    k: usize,
    meter: &mut Meter<'_>,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    if targets.is_empty() {
        return Ok(Some(VertexSet::new()));
    }
    let open = Bits::from_iter(n, targets.iter());
    // Candidate balls restricted to the targets.
    let balls: Vec<(Vertex, Bits)> = candidates
        .iter()
        .map(|c| (c, Bits::from_iter(n, g.ball(c, r).iter().filter(|&v| open.get(v)))))
        .filter(|(_, b)| b.count() > 0)
        .collect();
    let mut dominators_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (_, b)) in balls.iter().enumerate() {
        for v in b.iter() {
            dominators_of[v].push(i);
        }
    }
    if targets.iter().any(|v| dominators_of[v].is_empty()) {
        return Ok(None);
    }
    let max_cover = balls.iter().map(|(_, b)| b.count()).max().unwrap_or(0);

    struct Search<'s> {
        balls: &'s [(Vertex, Bits)],
        dominators_of: &'s [Vec<usize>],
        max_cover: usize,
    }
    impl Search<'_> {
        fn go(&self, open: &Bits, left: usize, chosen: &mut Vec<usize>, meter: &mut Meter<'_>) -> Result<bool> {
            meter.tick()?;
            let remaining = open.count();
            if remaining == 0 {
                return Ok(true);
            }
            if left == 0 || remaining > left * self.max_cover {
                return Ok(false);
            }
            let target = open
                .iter()
                .min_by_key(|&v| (self.dominators_of[v].len(), v))
                .expect("open target");
            for &i in &self.dominators_of[target] {
                let mut next = open.clone();
                next.subtract(&self.balls[i].1);
                chosen.push(i);
                if self.go(&next, left - 1, chosen, meter)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            Ok(false)
        }
    }

    let search = Search { balls: &balls, dominators_of: &dominators_of, max_cover };
    for size in 1..=k {
        let mut chosen = Vec::new();
        if search.go(&open, size, &mut chosen, meter)? {
            return Ok(Some(chosen.iter().map(|&i| balls[i].0).collect()));
        }
    }
    Ok(None)
}

/// Minimum distance-r dominating set of size at most `k_cap`.
pub fn exact_ds(g: &Graph, r: usize, k_cap: usize, budget: &Budget) -> Result<SolveResult> {
    let mut meter = budget.meter("dominating set search");
    let all = VertexSet::full(g.n());
    let found = find_dominator_metered(g, &all, &all, r, k_cap, &mut meter)?;
    Ok(match found {
        Some(d) => {
            let v = d.len();
            SolveResult::found(d, v, meter.used)
        }
        None => SolveResult::none(SolveStatus::NoneWithinCap, meter.used),
    })
}

/// Calls `visit` on every connected vertex set of exactly `size` vertices
/// drawn from `allowed`, each set once, as a sorted slice.
///
/// Sets are grown from their minimum vertex by the exclusive-extension
/// scheme, so the order of visits is deterministic.
pub fn for_each_connected_subset<F>(
    g: &Graph,
    size: usize,
    allowed: &[bool],
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let mut meter = budget.meter("connected subset enumeration");
    enumerate_connected(g, size, allowed, &mut meter, &mut visit)
}

fn enumerate_connected<F>(
    g: &Graph,
    size: usize,
    allowed: &[bool],
    meter: &mut Meter<'_>,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let n = g.n();
    if size == 0 {
        return Ok(visit(&[]));
    }
    // 0: untouched, 1: in subset, 2: in subset's neighborhood.
    struct State<'g> {
        g: &'g Graph,
        allowed: &'g [bool],
        size: usize,
        anchor: Vertex,
        mark: Vec<u32>,
    }
    fn extend<F: FnMut(&[Vertex]) -> ControlFlow<()>>(
        st: &mut State<'_>,
        sub: &mut Vec<Vertex>,
        ext: Vec<Vertex>,
        meter: &mut Meter<'_>,
        visit: &mut F,
    ) -> Result<ControlFlow<()>> {
        meter.tick()?;
        if sub.len() == st.size {
            let mut sorted = sub.clone();
            sorted.sort_unstable();
            return Ok(visit(&sorted));
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            // Exclusive neighbors of w: not in the subset nor adjacent to it.
            let mut added = Vec::new();
            for &u in st.g.neighbors(w) {
                if u > st.anchor && st.allowed[u] && st.mark[u] == 0 {
                    added.push(u);
                }
            }
            let mut next = ext.clone();
            next.extend(added.iter().copied());
            sub.push(w);
            st.mark[w] += 1;
            let mut bumped = Vec::new();
            for &u in st.g.neighbors(w) {
                st.mark[u] += 1;
                bumped.push(u);
            }
            let flow = extend(st, sub, next, meter, visit)?;
            for u in bumped {
                st.mark[u] -= 1;
            }
            st.mark[w] -= 1;
            sub.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    let mut st = State { g, allowed, size, anchor: 0, mark: vec![0; n] };
    for v in 0..n {
        if !allowed[v] {
            continue;
        }
        st.anchor = v;
        let mut sub = vec![v];
        st.mark[v] += 1;
        for &u in g.neighbors(v) {
            st.mark[u] += 1;
        }
        let ext: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| u > v && allowed[u])
            .rev()
            .collect();
        let flow = if size == 1 {
            meter.tick()?;
            visit(&sub)
        } else {
            extend(&mut st, &mut sub, ext, meter, visit)?
        };
        for &u in g.neighbors(v) {
            st.mark[u] -= 1;
        }
        st.mark[v] -= 1;
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Domain("graph must be connected".into()));
    }
    Ok(())
}

/// Minimum connected distance-r dominating set of `targets`, lexicographically
/// smallest among the minimum ones, of size at most `k_cap`.
fn exact_connected(
    g: &Graph,
    targets: &VertexSet,
    r: usize,
    k_cap: usize,
    budget: &Budget,
) -> Result<SolveResult> {
    require_connected(g)?;
    if targets.is_empty() {
        return Ok(SolveResult::found(VertexSet::new(), 0, 0));
    }
    let n = g.n();
    let mut meter = budget.meter("connected dominating set search");
    // Upper bound from greedy domination made connected.
    let greedy = greedy_rdom(g, r, targets);
    let upper = match connect(g, &greedy, r) {
        Ok(q) => greedy.len() + q.len(),
        Err(_) => n,
    };
    let limit = k_cap.min(upper).min(n);
    let open = Bits::from_iter(n, targets.iter());
    let balls: Vec<Bits> = (0..n)
        .map(|v| Bits::from_iter(n, g.ball(v, r).iter().filter(|&w| open.get(w))))
        .collect();
    let need = open.count();
    let allowed = vec![true; n];
    for size in 1..=limit {
        let mut best: Option<Vec<Vertex>> = None;
        let _ = enumerate_connected(g, size, &allowed, &mut meter, &mut |set: &[Vertex]| {
            if best.as_deref().is_some_and(|b| b <= set) {
                return ControlFlow::Continue(());
            }
            let mut covered = Bits::zeros(n);
            for &v in set {
                for (a, b) in covered.0.iter_mut().zip(&balls[v].0) {
                    *a |= b;
                }
            }
            if covered.and_count(&open) == need {
                best = Some(set.to_vec());
            }
            ControlFlow::Continue(())
        })?;
        if let Some(b) = best {
            return Ok(SolveResult::found(VertexSet::from_sorted_unchecked(b), size, meter.used));
        }
    }
    Ok(SolveResult::none(SolveStatus::NoneWithinCap, meter.used))
}

/// Minimum connected distance-r dominating set of a connected graph.
pub fn exact_cds(g: &Graph, r: usize, k_cap: usize, budget: &Budget) -> Result<SolveResult> {
    exact_connected(g, &VertexSet::full(g.n()), r, k_cap, budget)
}

/// Minimum connected set that r-dominates `z`. An empty `z` yields the
/// empty solution.
pub fn exact_acds(g: &Graph, z: &VertexSet, r: usize, k_cap: usize, budget: &Budget) -> Result<SolveResult> {
    if let Some(v) = z.max() {
        if v >= g.n() {
            return Err(Error::Domain(format!("vertex {v} out of range")));
        }
    }
    exact_connected(g, z, r, k_cap, budget)
}

/// Objective value of a candidate connected dominating set of `z`:
/// `None` when `d` is not connected or fails to dominate, otherwise
/// `min{|d|, k + 1}`.
pub fn acds_objective(g: &Graph, z: &VertexSet, r: usize, k: usize, d: &VertexSet) -> Option<usize> {
    let valid = (d.is_empty() && z.is_empty()) || (!d.is_empty() && g.induces_connected(d) && dominates(g, d, r, z));
    valid.then(|| d.len().min(k + 1))
}

pub fn cds_objective(g: &Graph, r: usize, k: usize, d: &VertexSet) -> Option<usize> {
    acds_objective(g, &VertexSet::full(g.n()), r, k, d)
}

/// `(U, F, k)`: cover `0..universe_size` with at most `k` of `sets`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut sets = sets;
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
            if let Some(&e) = s.iter().find(|&&e| e >= universe_size) {
                return Err(Error::Domain(format!("element {e} outside universe of size {universe_size}")));
            }
        }
        Ok(SetCoverInstance { universe_size, sets, k })
    }

    pub fn is_coverable(&self) -> bool {
        let mut seen = vec![false; self.universe_size];
        for s in &self.sets {
            for &e in s {
                seen[e] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut seen = vec![false; self.universe_size];
        for &i in chosen {
            for &e in &self.sets[i] {
                seen[e] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Text form: `u <universe> <num_sets> <k>` then one set per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "u" {
            return Err(Error::Parse { line: hline, msg: "expected `u <universe> <num_sets> <k>`".into() });
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse { line: hline, msg: format!("bad integer {s:?}") })
        };
        let (u, m, k) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
        let mut sets = Vec::with_capacity(m);
        for (line, l) in lines {
            let set = l
                .split_whitespace()
                .map(|t| {
                    let e = t
                        .parse::<usize>()
                        .map_err(|_| Error::Parse { line, msg: format!("bad element {t:?}") })?;
                    if e >= u {
                        return Err(Error::Parse { line, msg: format!("element {e} outside universe") });
                    }
                    Ok(e)
                })
                .collect::<Result<Vec<_>>>()?;
            sets.push(set);
        }
        if sets.len() != m {
            return Err(Error::Parse { line: hline, msg: format!("header declares {m} sets, found {}", sets.len()) });
        }
        Self::new(u, sets, k)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("u {} {} {}\n", self.universe_size, self.sets.len(), self.k);
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Minimum subfamily (set indices) covering the universe with at most
/// `inst.k` sets.
pub fn exact_setcover(inst: &SetCoverInstance, budget: &Budget) -> Result<SolveResult<Vec<usize>>> {
    let mut meter = budget.meter("set cover search");
    if !inst.is_coverable() {
        return Ok(SolveResult::none(SolveStatus::Infeasible, 0));
    }
    let u = inst.universe_size;
    let masks: Vec<Bits> = inst.sets.iter().map(|s| Bits::from_iter(u, s.iter().copied())).collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); u];
    for (i, s) in inst.sets.iter().enumerate() {
        for &e in s {
            containing[e].push(i);
        }
    }
    let max_cover = masks.iter().map(Bits::count).max().unwrap_or(0);

    fn go(
        open: &Bits,
        left: usize,
        masks: &[Bits],
        containing: &[Vec<usize>],
        max_cover: usize,
        chosen: &mut Vec<usize>,
        meter: &mut Meter<'_>,
    ) -> Result<bool> {
        meter.tick()?;
        let remaining = open.count();
        if remaining == 0 {
            return Ok(true);
        }
        if left == 0 || remaining > left * max_cover {
            return Ok(false);
        }
        let e = open.iter().min_by_key(|&e| (containing[e].len(), e)).unwrap();
        for &i in &containing[e] {
            if masks[i].and_count(open) == 0 {
                continue;
            }
            let mut next = open.clone();
            next.subtract(&masks[i]);
            chosen.push(i);
            if go(&next, left - 1, masks, containing, max_cover, chosen, meter)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    let open = Bits::from_iter(u, 0..u);
    if u == 0 {
        return Ok(SolveResult::found(Vec::new(), 0, 0));
    }
    for size in 1..=inst.k.min(inst.sets.len()) {
        let mut chosen = Vec::new();
        if go(&open, size, &masks, &containing, max_cover, &mut chosen, &mut meter)? {
            chosen.sort_unstable();
            return Ok(SolveResult::found(chosen, size, meter.used));
        }
    }
    Ok(SolveResult::none(SolveStatus::NoneWithinCap, meter.used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn exact_cds_examples() {
        let res = exact_cds(&cycle(6), 1, 6, &unlimited()).unwrap();
        assert_eq!(res.value, Some(4));
        assert_eq!(res.solution.unwrap(), VertexSet::from([0, 1, 2, 3]));
        let res = exact_cds(&path(5), 1, 5, &unlimited()).unwrap();
        assert_eq!(res.solution.unwrap(), VertexSet::from([1, 2, 3]));
        assert_eq!(exact_cds(&Graph::empty(1), 1, 1, &unlimited()).unwrap().value, Some(1));
        let none = exact_cds(&cycle(6), 1, 3, &unlimited()).unwrap();
        assert_eq!(none.status, SolveStatus::NoneWithinCap);
        assert_eq!(none.capped(3), 4);
    }

    #[test]
    fn exact_cds_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(exact_cds(&g, 1, 4, &unlimited()), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_acds_examples() {
        let p5 = path(5);
        let res = exact_acds(&p5, &VertexSet::singleton(0), 1, 5, &unlimited()).unwrap();
        assert_eq!(res.value, Some(1));
        assert_eq!(res.solution.unwrap(), VertexSet::singleton(0));
        let res = exact_acds(&p5, &VertexSet::from([0, 4]), 1, 5, &unlimited()).unwrap();
        assert_eq!(res.solution.unwrap(), VertexSet::from([1, 2, 3]));
        let res = exact_acds(&p5, &VertexSet::new(), 1, 5, &unlimited()).unwrap();
        assert_eq!(res.value, Some(0));
        assert!(res.solution.unwrap().is_empty());
    }

    #[test]
    fn exact_ds_examples() {
        let res = exact_ds(&cycle(6), 1, 6, &unlimited()).unwrap();
        assert_eq!(res.solution.unwrap(), VertexSet::from([0, 3]));
        assert_eq!(exact_ds(&star(5), 1, 1, &unlimited()).unwrap().solution.unwrap(), VertexSet::singleton(0));
        assert_eq!(exact_ds(&path(5), 2, 5, &unlimited()).unwrap().solution.unwrap(), VertexSet::singleton(2));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let err = exact_ds(&grid(5, 5), 1, 7, &Budget::nodes(10)).unwrap_err();
        assert!(matches!(err, Error::Budget { limit: 10, .. }));
    }

    #[test]
    fn cancellation_stops_search() {
        let token = CancelToken::new();
        token.cancel();
        let err = exact_cds(&grid(5, 5), 1, 25, &Budget::unlimited().with_cancel(token)).unwrap_err();
        assert!(matches!(err, Error::Cancelled(_)));
    }

    #[test]
    fn setcover_examples() {
        let inst = SetCoverInstance::new(2, vec![vec![0], vec![0, 1]], 1).unwrap();
        let res = exact_setcover(&inst, &unlimited()).unwrap();
        assert_eq!(res.solution.unwrap(), vec![1]);

        let inst = SetCoverInstance::new(3, vec![vec![0], vec![1]], 5).unwrap();
        assert_eq!(exact_setcover(&inst, &unlimited()).unwrap().status, SolveStatus::Infeasible);

        let inst = SetCoverInstance::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 2).unwrap();
        let res = exact_setcover(&inst, &unlimited()).unwrap();
        assert_eq!(res.value, Some(2));
        assert!(inst.covers(res.solution.as_ref().unwrap()));
    }

    #[test]
    fn setcover_text_format() {
        let inst = SetCoverInstance::parse("u 4 2 1\n0 1\n2 3\n").unwrap();
        assert_eq!(inst.sets, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(SetCoverInstance::parse(&inst.serialize()).unwrap(), inst);
        assert!(matches!(SetCoverInstance::parse("u 2 1 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(SetCoverInstance::parse("u 2 2 1\n0 1\n").is_err());
    }

    #[test]
    fn connected_subsets_of_path() {
        let mut seen = Vec::new();
        let _ = for_each_connected_subset(&path(4), 2, &[true; 4], &unlimited(), |s| {
            seen.push(s.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        seen.sort();
        assert_eq!(seen, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn objectives() {
        let p5 = path(5);
        assert_eq!(cds_objective(&p5, 1, 5, &VertexSet::from([1, 2, 3])), Some(3));
        assert_eq!(cds_objective(&p5, 1, 2, &VertexSet::from([1, 2, 3])), Some(3));
        assert_eq!(cds_objective(&p5, 1, 5, &VertexSet::from([1, 3])), None);
    }
}
