//! Domination cores: sets `Z` such that every set of at most `k` vertices
//! that r-dominates `Z` r-dominates the whole graph.
//!
//! Cores are found by shrinking `V(G)` with removal rules that keep the
//! core property. No size bound is promised.

use std::fmt;

use crate::domset::connect;
use crate::error::{Error, Result};
use crate::graph::{bfs_layers, Graph, Vertex, VertexSet};
use crate::oracles::{exact_ds, find_dominator, Budget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreMode {
    Exact,
    Heuristic,
    Trivial,
}

impl fmt::Display for CoreMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreMode::Exact => "exact",
            CoreMode::Heuristic => "heuristic",
            CoreMode::Trivial => "trivial",
        })
    }
}

impl std::str::FromStr for CoreMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(CoreMode::Exact),
            "heuristic" => Ok(CoreMode::Heuristic),
            "trivial" => Ok(CoreMode::Trivial),
            other => Err(Error::Domain(format!("unknown core mode {other:?}"))),
        }
    }
}

/// How a core was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certification {
    /// Every removal was checked by exhaustive search.
    Exhaustive,
    /// Only neighborhood-inclusion removals were applied.
    HeuristicSound,
    /// `Z = V(G)`.
    Trivial,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certification::Exhaustive => "exhaustive",
            Certification::HeuristicSound => "heuristic-sound",
            Certification::Trivial => "trivial",
        })
    }
}

impl std::str::FromStr for Certification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Certification::Exhaustive),
            "heuristic-sound" => Ok(Certification::HeuristicSound),
            "trivial" => Ok(Certification::Trivial),
            other => Err(Error::Domain(format!("unknown certification {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCore {
    pub z: VertexSet,
    pub k: usize,
    pub r: usize,
    pub certified: Certification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreOutcome {
    Core(DominationCore),
    /// The graph has no r-dominating set of size at most `k`.
    Reject(String),
}

impl CoreOutcome {
    pub fn core(self) -> Option<DominationCore> {
        match self {
            CoreOutcome::Core(c) => Some(c),
            CoreOutcome::Reject(_) => None,
        }
    }
}

fn check_params(g: &Graph, k: usize, r: usize) -> Result<()> {
    if k == 0 || r == 0 {
        return Err(Error::Domain("k and r must be at least 1".into()));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Domain("graph must be connected and nonempty".into()));
    }
    Ok(())
}

/// Finds a (k,r)-domination core.
///
/// Removals run in descending id order, repeated until a pass removes
/// nothing. A vertex `z` is dropped when another member `z'` has
/// `N_r[z'] ⊆ N_r[z]`; in exact mode also when no set of at most `k`
/// vertices outside `N_r[z]` r-dominates `Z \ {z}`.
pub fn find_core(g: &Graph, k: usize, r: usize, mode: CoreMode, budget: &Budget) -> Result<CoreOutcome> {
    check_params(g, k, r)?;
    let n = g.n();
    let all = VertexSet::full(n);
    if mode == CoreMode::Trivial {
        return Ok(CoreOutcome::Core(DominationCore { z: all, k, r, certified: Certification::Trivial }));
    }
    if mode == CoreMode::Exact && !exact_ds(g, r, k, budget)?.is_found() {
        return Ok(CoreOutcome::Reject(format!("no distance-{r} dominating set of size at most {k}")));
    }
    let balls: Vec<VertexSet> = g.vertices().map(|v| g.ball(v, r)).collect();
    let mut z = all;
    loop {
        let mut changed = false;
        for v in (0..n).rev() {
            if !z.contains(v) {
                continue;
            }
            let dominated_by_other = z.iter().any(|w| w != v && balls[w].is_subset(&balls[v]));
            let removable = dominated_by_other
                || (mode == CoreMode::Exact && {
                    let mut rest = z.clone();
                    rest.remove(v);
                    let outside = VertexSet::full(n).difference(&balls[v]);
                    find_dominator(g, &rest, &outside, r, k, budget)?.is_none()
                });
            if removable {
                z.remove(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let certified = match mode {
        CoreMode::Exact => Certification::Exhaustive,
        _ => Certification::HeuristicSound,
    };
    Ok(CoreOutcome::Core(DominationCore { z, k, r, certified }))
}

/// A set of at most `k` vertices that r-dominates `z` but misses some
/// vertex, if one exists.
pub fn core_counterexample(
    g: &Graph,
    z: &VertexSet,
    k: usize,
    r: usize,
    budget: &Budget,
) -> Result<Option<(VertexSet, Vertex)>> {
    let n = g.n();
    for v in g.vertices().filter(|&v| !z.contains(v)) {
        let outside = VertexSet::full(n).difference(&g.ball(v, r));
        if let Some(d) = find_dominator(g, z, &outside, r, k, budget)? {
            return Ok(Some((d, v)));
        }
    }
    Ok(None)
}

/// Whether `z` is a (k,r)-domination core of `g`.
pub fn core_verify(g: &Graph, z: &VertexSet, k: usize, r: usize, budget: &Budget) -> Result<bool> {
    Ok(core_counterexample(g, z, k, r, budget)?.is_none())
}

/// Grows a core into a connected core, or rejects when some vertex lies
/// farther than `2r` from it.
pub fn connected_core(g: &Graph, core: &DominationCore) -> Result<CoreOutcome> {
    let r = core.r;
    if core.z.is_empty() {
        return Err(Error::Domain("core is empty".into()));
    }
    let dist = bfs_layers(g, &core.z, 2 * r, &VertexSet::new());
    if let Some(far) = dist.iter().position(Option::is_none) {
        return Ok(CoreOutcome::Reject(format!("vertex {far} lies farther than {} from the core", 2 * r)));
    }
    let q = connect(g, &core.z, 2 * r)?;
    Ok(CoreOutcome::Core(DominationCore { z: core.z.union(&q), ..core.clone() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn budget() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn star_cores() {
        let s = star(5);
        let two_leaves = VertexSet::from([1, 2]);
        assert!(core_verify(&s, &two_leaves, 1, 1, &budget()).unwrap());
        assert!(!core_verify(&s, &VertexSet::singleton(1), 1, 1, &budget()).unwrap());
        assert!(core_verify(&s, &VertexSet::full(6), 1, 1, &budget()).unwrap());

        let core = find_core(&s, 1, 1, CoreMode::Exact, &budget()).unwrap().core().unwrap();
        assert_eq!(core.z, two_leaves);
        assert_eq!(core.certified, Certification::Exhaustive);
    }

    #[test]
    fn heuristic_drops_the_star_center() {
        // N[leaf] ⊆ N[center], so the center goes; the leaves stay.
        let core = find_core(&star(5), 1, 1, CoreMode::Heuristic, &budget()).unwrap().core().unwrap();
        assert_eq!(core.z, VertexSet::from([1, 2, 3, 4, 5]));
        assert!(core_verify(&star(5), &core.z, 1, 1, &budget()).unwrap());
    }

    #[test]
    fn trivial_mode() {
        let core = find_core(&path(4), 2, 1, CoreMode::Trivial, &budget()).unwrap().core().unwrap();
        assert_eq!(core.z, VertexSet::full(4));
        assert_eq!(core.certified, Certification::Trivial);
    }

    #[test]
    fn exact_mode_rejects_undominatable() {
        let out = find_core(&path(9), 1, 1, CoreMode::Exact, &budget()).unwrap();
        assert!(matches!(out, CoreOutcome::Reject(_)));
    }

    #[test]
    fn connected_core_examples() {
        let p9 = path(9);
        let core = DominationCore { z: VertexSet::singleton(0), k: 1, r: 1, certified: Certification::Trivial };
        assert!(matches!(connected_core(&p9, &core).unwrap(), CoreOutcome::Reject(_)));

        let core = DominationCore { z: VertexSet::from([1, 2]), k: 1, r: 1, certified: Certification::Exhaustive };
        let out = connected_core(&star(5), &core).unwrap().core().unwrap();
        assert_eq!(out.z, VertexSet::from([0, 1, 2]));

        let core = DominationCore { z: VertexSet::from([1, 2, 3]), k: 2, r: 1, certified: Certification::Trivial };
        assert_eq!(connected_core(&path(5), &core).unwrap().core().unwrap().z, core.z);
    }

    #[test]
    fn modes_parse() {
        assert_eq!("heuristic".parse::<CoreMode>().unwrap(), CoreMode::Heuristic);
        assert!("fast".parse::<CoreMode>().is_err());
    }
}
