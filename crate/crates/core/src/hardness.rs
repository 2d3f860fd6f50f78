//! Set cover to distance-r domination on exact r-subdivisions.
//!
//! The pre-subdivision graph is the set/element incidence graph plus a guard
//! vertex adjacent to every set vertex and a pendant hanging off the guard.
//! The pendant forces the guard (or itself) into every dominating set, so
//! the parameter shifts by [`GADGET_OFFSET`].

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::core_finder::CoreMode;
use crate::error::{Error, Result};
use crate::graph::{r_subdivision, Graph, Vertex};
use crate::oracles::{exact_setcover, Budget, SetCoverInstance};
use crate::pipeline::{pre_kernel, KernelOutcome, KernelParams};
use crate::ratio::int;

/// `k_out - k_in`.
pub const GADGET_OFFSET: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    SetVertex(usize),
    ElementVertex(usize),
    Gadget,
    Subdivision,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::SetVertex(i) => write!(f, "set {i}"),
            Role::ElementVertex(e) => write!(f, "element {e}"),
            Role::Gadget => f.write_str("gadget"),
            Role::Subdivision => f.write_str("subdivision"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardnessInstance {
    pub source: SetCoverInstance,
    pub r: usize,
    /// The graph before subdivision.
    pub pre_graph: Graph,
    /// `r_subdivision(pre_graph, r)`.
    pub g: Graph,
    pub k_in: usize,
    pub k_out: usize,
    pub offset: usize,
    pub roles: Vec<Role>,
}

impl HardnessInstance {
    /// Checks the structural invariants: `g` is exactly the r-subdivision
    /// of `pre_graph` and every vertex has a role.
    pub fn check(&self) -> Result<()> {
        let expected = r_subdivision(&self.pre_graph, self.r)?;
        if !expected.graph_eq(&self.g) {
            return Err(Error::Contract("graph is not the r-subdivision of its pre-graph".into()));
        }
        if self.roles.len() != self.g.n() || self.k_out != self.k_in + self.offset {
            return Err(Error::Contract("roles or parameters inconsistent".into()));
        }
        Ok(())
    }

    /// One `vertex role [index]` line per vertex.
    pub fn roles_sidecar(&self) -> String {
        let mut out = format!("# lkcds roles v1 offset={} k_in={} k_out={} r={}\n", self.offset, self.k_in, self.k_out, self.r);
        for (v, role) in self.roles.iter().enumerate() {
            out.push_str(&format!("{v} {role}\n"));
        }
        out
    }
}

/// Builds the domination instance for `inst` at radius `r`.
///
/// Vertex ids: sets `0..|F|`, elements `|F|..|F|+|U|`, then the guard, the
/// pendant, and the subdivision vertices.
pub fn generate(inst: &SetCoverInstance, r: usize) -> Result<HardnessInstance> {
    if inst.sets.is_empty() {
        return Err(Error::Domain("set family is empty".into()));
    }
    if !inst.is_coverable() {
        return Err(Error::Domain("set family does not cover the universe".into()));
    }
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let m = inst.sets.len();
    let u = inst.universe_size;
    let guard = m + u;
    let pendant = guard + 1;
    let mut edges = Vec::new();
    for (i, s) in inst.sets.iter().enumerate() {
        edges.extend(s.iter().map(|&e| (i, m + e)));
        edges.push((i, guard));
    }
    edges.push((guard, pendant));
    let pre_graph = Graph::from_edges(pendant + 1, &edges)?;
    let g = r_subdivision(&pre_graph, r)?;
    let roles = (0..g.n())
        .map(|v| match v {
            v if v < m => Role::SetVertex(v),
            v if v < guard => Role::ElementVertex(v - m),
            v if v <= pendant => Role::Gadget,
            _ => Role::Subdivision,
        })
        .collect();
    let out = HardnessInstance {
        source: inst.clone(),
        r,
        pre_graph,
        g,
        k_in: inst.k,
        k_out: inst.k + GADGET_OFFSET,
        offset: GADGET_OFFSET,
        roles,
    };
    out.check()?;
    Ok(out)
}

/// A random coverable instance with `u` elements and `m` sets. Every
/// element lands in at least one set; `k` is the exact optimum.
pub fn random_setcover(u: usize, m: usize, rng: &mut impl Rng) -> Result<SetCoverInstance> {
    if m == 0 && u > 0 {
        return Err(Error::Domain("cannot cover a nonempty universe with no sets".into()));
    }
    let mut sets = vec![Vec::new(); m];
    for e in 0..u {
        sets[rng.gen_range(0..m)].push(e);
        for s in sets.iter_mut() {
            if rng.gen_bool(0.3) {
                s.push(e);
            }
        }
    }
    sets.shuffle(rng);
    let mut inst = SetCoverInstance::new(u, sets, m)?;
    let opt = exact_setcover(&inst, &Budget::unlimited())?;
    inst.k = opt.value.expect("coverable by construction");
    Ok(inst)
}

/// One generated instance per `(|U|, |F|)` pair, seeded.
pub fn family_sweep(sizes: &[(usize, usize)], r: usize, seed: u64) -> Result<Vec<HardnessInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&(u, m)| generate(&random_setcover(u, m.max(1), &mut rng)?, r))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub universe: usize,
    pub sets: usize,
    pub k_in: usize,
    pub k_out: usize,
    pub n: usize,
    pub m: usize,
    /// `None` when the pipeline rejected or ran out of budget.
    pub gprime_vertices: Option<usize>,
    pub outcome: String,
}

/// Runs the pre-kernel on every instance at `k = k_out`.
pub fn sweep_report(
    batch: &[HardnessInstance],
    alpha_factor: i64,
    mode: CoreMode,
    budget: &Budget,
) -> Result<Vec<SweepRow>> {
    batch
        .par_iter()
        .map(|h| {
            let params = KernelParams::new(h.k_out, h.r, int(alpha_factor * (4 * h.r as i64 + 3)), int(1))?;
            let (gprime_vertices, outcome) = match pre_kernel(&h.g, &params, mode, budget) {
                Ok(KernelOutcome::Kernel(k)) => (Some(k.gprime.n()), k.provenance.kind.to_string()),
                Ok(KernelOutcome::Reject(_)) => (None, "reject".to_string()),
                Err(Error::Budget { .. } | Error::Cancelled(_)) => (None, "budget".to_string()),
                Err(e) => return Err(e),
            };
            Ok(SweepRow {
                universe: h.source.universe_size,
                sets: h.source.sets.len(),
                k_in: h.k_in,
                k_out: h.k_out,
                n: h.g.n(),
                m: h.g.m(),
                gprime_vertices,
                outcome,
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("# lkcds hardness-sweep v1\nuniverse,sets,k_in,k_out,n,m,gprime_vertices,outcome\n");
    for r in rows {
        let gv = r.gprime_vertices.map_or(String::new(), |v| v.to_string());
        out.push_str(&format!("{},{},{},{},{},{},{},{}\n", r.universe, r.sets, r.k_in, r.k_out, r.n, r.m, gv, r.outcome));
    }
    out
}

/// Vertices of a given role, in id order.
pub fn vertices_with(h: &HardnessInstance, pred: impl Fn(Role) -> bool) -> Vec<Vertex> {
    h.roles.iter().enumerate().filter(|(_, &r)| pred(r)).map(|(v, _)| v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::exact_ds;

    fn both_sides(inst: &SetCoverInstance, r: usize) -> (bool, bool) {
        let h = generate(inst, r).unwrap();
        let b = Budget::unlimited();
        let sc = exact_setcover(inst, &b).unwrap().is_found();
        let ds = exact_ds(&h.g, r, h.k_out, &b).unwrap().is_found();
        (sc, ds)
    }

    #[test]
    fn small_examples() {
        let inst = SetCoverInstance::new(2, vec![vec![0], vec![0, 1]], 1).unwrap();
        let h = generate(&inst, 1).unwrap();
        assert_eq!(h.k_out, 2);
        assert_eq!(both_sides(&inst, 1), (true, true));

        let inst = SetCoverInstance::new(3, vec![vec![0], vec![1], vec![2]], 2).unwrap();
        assert_eq!(both_sides(&inst, 2), (false, false));

        let inst = SetCoverInstance::new(3, vec![vec![0, 1], vec![2], vec![1, 2]], 3).unwrap();
        assert_eq!(both_sides(&inst, 1), (true, true));
    }

    #[test]
    fn structure() {
        let inst = SetCoverInstance::new(2, vec![vec![0], vec![0, 1]], 1).unwrap();
        let h = generate(&inst, 3).unwrap();
        assert_eq!(h.pre_graph.n(), 6);
        assert_eq!(h.pre_graph.m(), 6);
        assert_eq!(h.g.n(), 6 + 6 * 2);
        assert_eq!(vertices_with(&h, |r| r == Role::Gadget), vec![4, 5]);
        assert!(h.roles_sidecar().contains("\n0 set 0\n"));
    }

    #[test]
    fn rejects_uncoverable() {
        let inst = SetCoverInstance::new(3, vec![vec![0], vec![1]], 2).unwrap();
        assert!(matches!(generate(&inst, 1), Err(Error::Domain(_))));
        let inst = SetCoverInstance::new(0, vec![], 0).unwrap();
        assert!(generate(&inst, 1).is_err());
    }

    #[test]
    fn sweep_is_seeded() {
        let a = family_sweep(&[(4, 4), (6, 6)], 2, 1).unwrap();
        let b = family_sweep(&[(4, 4), (6, 6)], 2, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert!(family_sweep(&[], 2, 1).unwrap().is_empty());
        let rows = sweep_report(&a[..1], 1, CoreMode::Heuristic, &Budget::nodes(2_000_000)).unwrap();
        assert!(sweep_csv(&rows).starts_with("# lkcds hardness-sweep v1\n"));
    }
}
