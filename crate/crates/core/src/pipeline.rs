//! The approximate bi-kernel for connected distance-r domination, its
//! solution lifting, ratio certificates, and the exact kernel for plain
//! distance-r domination.
//!
//! A kernel is an annotated instance `(G', Z, k)`: find a connected set in
//! `G'` that r-dominates `Z`. Lifting maps it back to the input graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::closure::{assemble, build_closure};
use crate::core_finder::{connected_core, find_core, Certification, CoreMode, CoreOutcome};
use crate::domset::dominates;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, serialize_graph, Graph, GraphFormat, Vertex, VertexSet};
use crate::oracles::{acds_objective, cds_objective, exact_acds, exact_cds, find_dominator, Budget};
use crate::projections::classify;
use crate::ratio::{ceil_usize, format_rational, int, parse_rational, Rational};

pub const FORMAT_TAG: &str = "lkcds/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelParams {
    pub k: usize,
    pub r: usize,
    pub alpha: Rational,
    /// Recorded only.
    pub epsilon: Rational,
    /// `(alpha - 1) / (4r + 2)`.
    pub t: Rational,
    /// `max(1, t)`.
    pub t_eff: Rational,
}

impl KernelParams {
    pub fn new(k: usize, r: usize, alpha: Rational, epsilon: Rational) -> Result<Self> {
        if k == 0 || r == 0 {
            return Err(Error::Domain("k and r must be at least 1".into()));
        }
        if alpha <= int(1) {
            return Err(Error::Domain(format!("alpha = {} must exceed 1", format_rational(alpha))));
        }
        if epsilon <= int(0) {
            return Err(Error::Domain("epsilon must be positive".into()));
        }
        let t = (alpha - 1) / int(4 * r as i64 + 2);
        let t_eff = t.max(int(1));
        Ok(KernelParams { k, r, alpha, epsilon, t, t_eff })
    }

    /// `1 + (4r + 2) / t_eff`, the ratio the construction guarantees.
    pub fn achieved_ratio(&self) -> Rational {
        int(1) + int(4 * self.r as i64 + 2) / self.t_eff
    }
}

/// How a kernel instance was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// Connected core plus tree closure.
    Closure,
    /// The input had a tiny optimum; the instance carries it.
    Shortcut,
    /// Exact kernel for plain distance-r domination.
    DsKernel,
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelKind::Closure => "closure",
            KernelKind::Shortcut => "shortcut",
            KernelKind::DsKernel => "ds-kernel",
        })
    }
}

impl std::str::FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closure" => Ok(KernelKind::Closure),
            "shortcut" => Ok(KernelKind::Shortcut),
            "ds-kernel" => Ok(KernelKind::DsKernel),
            _ => Err(Error::Domain(format!("unknown kernel kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub kind: KernelKind,
    pub core_mode: CoreMode,
    pub certified: Option<Certification>,
    pub original_n: usize,
    pub original_m: usize,
    /// Exact solution carried by shortcut instances, in kernel ids.
    pub carried: Option<VertexSet>,
    /// Free-form counters (closure statistics and the like).
    pub stats: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelInstance {
    pub gprime: Graph,
    pub z: VertexSet,
    pub k: usize,
    pub r: usize,
    /// Kernel id to original id.
    pub vertex_map: Vec<Vertex>,
    pub params: KernelParams,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    Kernel(Box<KernelInstance>),
    Reject(String),
}

impl KernelOutcome {
    pub fn kernel(self) -> Option<KernelInstance> {
        match self {
            KernelOutcome::Kernel(k) => Some(*k),
            KernelOutcome::Reject(_) => None,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Domain("graph must be connected and nonempty".into()));
    }
    Ok(())
}

fn connected_core_for(g: &Graph, params: &KernelParams, mode: CoreMode, budget: &Budget) -> Result<std::result::Result<crate::core_finder::DominationCore, String>> {
    let core = match find_core(g, params.k, params.r, mode, budget)? {
        CoreOutcome::Core(c) => c,
        CoreOutcome::Reject(why) => return Ok(Err(why)),
    };
    Ok(match connected_core(g, &core)? {
        CoreOutcome::Core(c) => Ok(c),
        CoreOutcome::Reject(why) => Err(why),
    })
}

/// Reduces `(g, k)` to an annotated instance whose optimum is within
/// `alpha` of the original one, or rejects when `g` has no r-dominating
/// set of size at most `k`.
///
/// When the connected optimum is below `⌈t_eff⌉` it is found exactly and
/// carried by a trivial instance instead.
pub fn pre_kernel(g: &Graph, params: &KernelParams, mode: CoreMode, budget: &Budget) -> Result<KernelOutcome> {
    require_connected(g)?;
    let (k, r) = (params.k, params.r);
    let threshold = ceil_usize(params.t_eff);
    if threshold >= 2 {
        let res = exact_cds(g, r, threshold - 1, budget)?;
        if let Some(d) = res.solution {
            let (gprime, _) = g.induced_subgraph(&d);
            let local = VertexSet::full(d.len());
            let mut stats = BTreeMap::new();
            stats.insert("shortcut_opt".to_string(), d.len().to_string());
            return Ok(KernelOutcome::Kernel(Box::new(KernelInstance {
                gprime,
                z: local.clone(),
                k,
                r,
                vertex_map: d.into_vec(),
                params: params.clone(),
                provenance: Provenance {
                    kind: KernelKind::Shortcut,
                    core_mode: mode,
                    certified: None,
                    original_n: g.n(),
                    original_m: g.m(),
                    carried: Some(local),
                    stats,
                },
            })));
        }
    }
    let core = match connected_core_for(g, params, mode, budget)? {
        Ok(c) => c,
        Err(why) => return Ok(KernelOutcome::Reject(why)),
    };
    let closure = build_closure(g, &core.z, r, params.t_eff, budget)?;
    let s = &closure.stats;
    let stats: BTreeMap<String, String> = [
        ("core_size", core.z.len().to_string()),
        ("classes", s.classes.to_string()),
        ("kept", s.kept.to_string()),
        ("terminals", s.terminals.to_string()),
        ("subsets_enumerated", s.subsets_enumerated.to_string()),
        ("gprime_vertices", s.gprime_vertices.to_string()),
        ("gprime_edges", s.gprime_edges.to_string()),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b))
    .collect();
    Ok(KernelOutcome::Kernel(Box::new(KernelInstance {
        gprime: closure.gprime,
        z: closure.x,
        k,
        r,
        vertex_map: closure.witness.vertex_map,
        params: params.clone(),
        provenance: Provenance {
            kind: KernelKind::Closure,
            core_mode: mode,
            certified: Some(core.certified),
            original_n: g.n(),
            original_m: g.m(),
            carried: None,
            stats,
        },
    })))
}

/// Kernel for plain distance-r domination: the connected core, one
/// representative per profile class, and avoiding paths that keep the
/// representatives' profiles.
pub fn ds_kernel(g: &Graph, k: usize, r: usize, mode: CoreMode, budget: &Budget) -> Result<KernelOutcome> {
    require_connected(g)?;
    // alpha is irrelevant here; any valid value will do.
    let params = KernelParams::new(k, r, int(4 * r as i64 + 3), int(1))?;
    let core = match connected_core_for(g, &params, mode, budget)? {
        Ok(c) => c,
        Err(why) => return Ok(KernelOutcome::Reject(why)),
    };
    let classes = classify(g, &core.z, r);
    let reps: VertexSet = classes.representatives.iter().copied().collect();
    let (gprime, witness) = assemble(g, &core.z, r, &BTreeMap::new(), &reps)?;
    let inv = witness.inverse(g.n());
    let z: VertexSet = core.z.iter().map(|v| inv[v].expect("core kept")).collect();
    let mut stats = BTreeMap::new();
    stats.insert("core_size".to_string(), core.z.len().to_string());
    stats.insert("classes".to_string(), classes.num_classes().to_string());
    stats.insert("gprime_vertices".to_string(), gprime.n().to_string());
    Ok(KernelOutcome::Kernel(Box::new(KernelInstance {
        gprime,
        z,
        k,
        r,
        vertex_map: witness.vertex_map,
        params,
        provenance: Provenance {
            kind: KernelKind::DsKernel,
            core_mode: mode,
            certified: Some(core.certified),
            original_n: g.n(),
            original_m: g.m(),
            carried: None,
            stats,
        },
    })))
}

/// Smallest set of at most `k` kernel vertices that r-dominates `Z` in the
/// kernel graph.
pub fn ds_kernel_opt(inst: &KernelInstance, budget: &Budget) -> Result<Option<VertexSet>> {
    find_dominator(&inst.gprime, &inst.z, &VertexSet::full(inst.gprime.n()), inst.r, inst.k, budget)
}

impl KernelInstance {
    fn check_ids(&self, d: &VertexSet) -> Result<()> {
        if d.as_slice().last().is_some_and(|&v| v >= self.gprime.n()) {
            return Err(Error::Domain("solution names vertices outside the kernel".into()));
        }
        Ok(())
    }

    /// Whether `d` is a feasible kernel solution.
    pub fn accepts(&self, d: &VertexSet) -> bool {
        if d.as_slice().last().is_some_and(|&v| v >= self.gprime.n()) {
            return false;
        }
        match self.provenance.kind {
            KernelKind::DsKernel => dominates(&self.gprime, d, self.r, &self.z),
            _ => acds_objective(&self.gprime, &self.z, self.r, self.k, d).is_some(),
        }
    }

    pub fn objective(&self, d: &VertexSet) -> Option<usize> {
        if d.as_slice().last().is_some_and(|&v| v >= self.gprime.n()) {
            return None;
        }
        acds_objective(&self.gprime, &self.z, self.r, self.k, d)
    }
}

/// Maps a kernel solution back to the original graph.
///
/// Infeasible solutions are refused. Shortcut instances return their
/// carried optimum. When `|d| <= k` the image is checked to be a valid
/// (connected, unless the instance is a plain domination kernel) distance-r
/// dominating set of `original`.
pub fn lift(original: &Graph, inst: &KernelInstance, d: &VertexSet) -> Result<VertexSet> {
    inst.check_ids(d)?;
    if !inst.accepts(d) {
        return Err(Error::Domain("solution is infeasible for the kernel instance".into()));
    }
    let chosen = match (&inst.provenance.kind, &inst.provenance.carried) {
        (KernelKind::Shortcut, Some(c)) => c,
        _ => d,
    };
    let image: VertexSet = chosen.iter().map(|v| inst.vertex_map[v]).collect();
    if image.as_slice().last().is_some_and(|&v| v >= original.n()) {
        return Err(Error::Domain("kernel map points outside the original graph".into()));
    }
    if d.len() <= inst.k {
        let all = VertexSet::full(original.n());
        let ok = match inst.provenance.kind {
            KernelKind::DsKernel => dominates(original, &image, inst.r, &all),
            _ => original.induces_connected(&image) && dominates(original, &image, inst.r, &all),
        };
        if !ok {
            return Err(Error::Contract(format!("lifted set {image} does not dominate the original graph")));
        }
    }
    Ok(image)
}

/// Both sides of the ratio inequality with capped objectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCertificate {
    pub lifted_value: Option<usize>,
    pub original_opt: Option<usize>,
    pub kernel_value: Option<usize>,
    pub kernel_opt: Option<usize>,
    /// `kernel_opt <= alpha * original_opt`.
    pub opt_bound_ok: Option<bool>,
    /// `lifted / original_opt <= alpha * kernel_value / kernel_opt`.
    pub ratio_ok: Option<bool>,
    pub note: Option<String>,
}

fn optional<T>(r: Result<T>, note: &mut Option<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::Budget { .. } | Error::Cancelled(_))) => {
            *note = Some(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Evaluates a kernel solution `d` against both optima. Budget exhaustion
/// leaves the optima and verdicts undetermined.
pub fn ratio_check(
    original: &Graph,
    inst: &KernelInstance,
    d: &VertexSet,
    budget: &Budget,
) -> Result<RatioCertificate> {
    let k = inst.k;
    let alpha = inst.params.alpha;
    let mut note = None;
    let kernel_value = inst.objective(d);
    let lifted_value = match lift(original, inst, d) {
        Ok(img) => cds_objective(original, inst.r, k, &img),
        Err(Error::Domain(_)) => None,
        Err(e) => return Err(e),
    };
    let original_opt = optional(exact_cds(original, inst.r, k, budget), &mut note)?.map(|s| s.capped(k));
    let kernel_opt =
        optional(exact_acds(&inst.gprime, &inst.z, inst.r, k, budget), &mut note)?.map(|s| s.capped(k));
    let opt_bound_ok = match (kernel_opt, original_opt) {
        (Some(ko), Some(oo)) => Some(int(ko as i64) <= alpha * int(oo as i64)),
        _ => None,
    };
    let ratio_ok = match (original_opt, kernel_opt) {
        (Some(oo), Some(ko)) => Some(match (lifted_value, kernel_value) {
            // An infeasible kernel solution has infinite cost; nothing to show.
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(lv), Some(kv)) => {
                if ko == 0 || oo == 0 {
                    lv == 0
                } else {
                    Rational::new(lv as i64, oo as i64) <= alpha * Rational::new(kv as i64, ko as i64)
                }
            }
        }),
        _ => None,
    };
    Ok(RatioCertificate { lifted_value, original_opt, kernel_value, kernel_opt, opt_bound_ok, ratio_ok, note })
}

fn join(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl KernelInstance {
    /// Sectioned text form, stable byte for byte.
    pub fn serialize(&self) -> String {
        let p = &self.params;
        let pv = &self.provenance;
        let mut out = String::new();
        out.push_str(FORMAT_TAG);
        out.push_str("\n[graph]\n");
        out.push_str(&serialize_graph(&self.gprime));
        out.push_str("[Z]\n");
        out.push_str(&join(self.z.iter()));
        out.push_str("\n[map]\n");
        out.push_str(&join(self.vertex_map.iter().copied()));
        out.push_str("\n[params]\n");
        out.push_str(&format!(
            "k = {}\nr = {}\nalpha = {}\nepsilon = {}\nt = {}\nt_eff = {}\n",
            p.k,
            p.r,
            format_rational(p.alpha),
            format_rational(p.epsilon),
            format_rational(p.t),
            format_rational(p.t_eff)
        ));
        out.push_str("[provenance]\n");
        out.push_str(&format!("kind = {}\ncore_mode = {}\n", pv.kind, pv.core_mode));
        out.push_str(&format!(
            "certified = {}\n",
            pv.certified.map_or("none".to_string(), |c| c.to_string())
        ));
        out.push_str(&format!("original_n = {}\noriginal_m = {}\n", pv.original_n, pv.original_m));
        out.push_str(&format!(
            "carried = {}\n",
            pv.carried.as_ref().map_or("none".to_string(), |c| join(c.iter()))
        ));
        for (key, v) in &pv.stats {
            out.push_str(&format!("{key} = {v}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, l)) if l.trim() == FORMAT_TAG => {}
            _ => return Err(Error::Parse { line: 1, msg: format!("missing `{FORMAT_TAG}` tag") }),
        }
        let mut sections: BTreeMap<&str, (usize, Vec<&str>)> = BTreeMap::new();
        let mut current: Option<&str> = None;
        for (no, l) in lines {
            let t = l.trim();
            if t.starts_with('[') && t.ends_with(']') {
                let name = &t[1..t.len() - 1];
                if sections.insert(name, (no, Vec::new())).is_some() {
                    return Err(Error::Parse { line: no, msg: format!("duplicate section [{name}]") });
                }
                current = Some(name);
                continue;
            }
            match current {
                Some(name) => sections.get_mut(name).unwrap().1.push(l),
                None if t.is_empty() => {}
                None => return Err(Error::Parse { line: no, msg: "content before the first section".into() }),
            }
        }
        let section = |name: &str| {
            sections
                .get(name)
                .cloned()
                .ok_or(Error::Parse { line: 0, msg: format!("missing section [{name}]") })
        };
        let (gline, glines) = section("graph")?;
        let gprime = parse_graph(&glines.join("\n"), GraphFormat::EdgeList).map_err(|e| match e {
            Error::Parse { line, msg } => Error::Parse { line: gline + line, msg },
            other => other,
        })?;
        let ids = |name: &str| -> Result<Vec<usize>> {
            let (line, body) = section(name)?;
            body.join(" ")
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse { line: line + 1, msg: format!("bad id {t:?} in [{name}]") })
                })
                .collect()
        };
        let z: VertexSet = ids("Z")?.into_iter().collect();
        let vertex_map = ids("map")?;
        let kv = |name: &str| -> Result<(usize, BTreeMap<String, String>)> {
            let (line, body) = section(name)?;
            let mut map = BTreeMap::new();
            for (i, l) in body.iter().enumerate() {
                if l.trim().is_empty() {
                    continue;
                }
                let (a, b) = l
                    .split_once('=')
                    .ok_or(Error::Parse { line: line + 1 + i, msg: "expected `key = value`".into() })?;
                map.insert(a.trim().to_string(), b.trim().to_string());
            }
            Ok((line, map))
        };
        let (pline, params) = kv("params")?;
        let (vline, prov) = kv("provenance")?;
        let get = |m: &BTreeMap<String, String>, line: usize, key: &str| -> Result<String> {
            m.get(key).cloned().ok_or(Error::Parse { line, msg: format!("missing key {key:?}") })
        };
        let num = |m: &BTreeMap<String, String>, line: usize, key: &str| -> Result<usize> {
            get(m, line, key)?
                .parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("bad integer for {key:?}") })
        };
        let rat = |key: &str| -> Result<Rational> {
            parse_rational(&get(&params, pline, key)?).map_err(|_| Error::Parse { line: pline, msg: format!("bad rational for {key:?}") })
        };
        let k = num(&params, pline, "k")?;
        let r = num(&params, pline, "r")?;
        let kp = KernelParams::new(k, r, rat("alpha")?, rat("epsilon")?)
            .map_err(|e| Error::Parse { line: pline, msg: e.to_string() })?;
        if kp.t != rat("t")? || kp.t_eff != rat("t_eff")? {
            return Err(Error::Parse { line: pline, msg: "t or t_eff disagrees with alpha and r".into() });
        }
        let bad = |e: Error| Error::Parse { line: vline, msg: e.to_string() };
        let kind: KernelKind = get(&prov, vline, "kind")?.parse().map_err(bad)?;
        let core_mode: CoreMode = get(&prov, vline, "core_mode")?.parse().map_err(bad)?;
        let certified = match get(&prov, vline, "certified")?.as_str() {
            "none" => None,
            c => Some(c.parse::<Certification>().map_err(bad)?),
        };
        let carried = match get(&prov, vline, "carried")?.as_str() {
            "none" => None,
            c => Some(
                c.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line: vline, msg: "bad carried id".into() }))
                    .collect::<Result<VertexSet>>()?,
            ),
        };
        let original_n = num(&prov, vline, "original_n")?;
        let original_m = num(&prov, vline, "original_m")?;
        let stats = prov
            .into_iter()
            .filter(|(key, _)| !["kind", "core_mode", "certified", "carried", "original_n", "original_m"].contains(&key.as_str()))
            .collect();

        if vertex_map.len() != gprime.n() {
            return Err(Error::Parse { line: 0, msg: "[map] length differs from the kernel vertex count".into() });
        }
        if z.as_slice().last().is_some_and(|&v| v >= gprime.n()) {
            return Err(Error::Parse { line: 0, msg: "[Z] names vertices outside the kernel".into() });
        }
        let mut seen = vertex_map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != vertex_map.len() || vertex_map.iter().any(|&v| v >= original_n) {
            return Err(Error::Parse { line: 0, msg: "[map] is not injective into the original graph".into() });
        }
        Ok(KernelInstance {
            gprime,
            z,
            k,
            r,
            vertex_map,
            params: kp,
            provenance: Provenance { kind, core_mode, certified, original_n, original_m, carried, stats },
        })
    }

    /// Checks that every kernel edge exists in `original` under the map.
    pub fn certify_against(&self, original: &Graph) -> Result<()> {
        if original.n() != self.provenance.original_n {
            return Err(Error::Contract("original graph size differs from the recorded one".into()));
        }
        for (a, b) in self.gprime.edges() {
            let (u, v) = (self.vertex_map[a], self.vertex_map[b]);
            if !original.has_edge(u, v) {
                return Err(Error::Contract(format!("kernel edge {a}-{b} maps to non-edge {u}-{v}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn params(k: usize, r: usize, alpha: i64) -> KernelParams {
        KernelParams::new(k, r, int(alpha), Rational::new(1, 2)).unwrap()
    }

    #[test]
    fn params_compute_t() {
        let p = params(3, 1, 7);
        assert_eq!(p.t, int(1));
        assert_eq!(p.t_eff, int(1));
        let p = params(3, 2, 3);
        assert_eq!(p.t, Rational::new(1, 5));
        assert_eq!(p.t_eff, int(1));
        assert_eq!(p.achieved_ratio(), int(11));
        assert!(KernelParams::new(1, 1, int(1), int(1)).is_err());
    }

    #[test]
    fn star_kernel() {
        let g = star(5);
        let p = params(1, 1, 7);
        let inst = pre_kernel(&g, &p, CoreMode::Exact, &Budget::unlimited()).unwrap().kernel().unwrap();
        let opt = exact_acds(&inst.gprime, &inst.z, 1, 1, &Budget::unlimited()).unwrap();
        assert_eq!(opt.value, Some(1));
        let d = opt.solution.unwrap();
        assert_eq!(lift(&g, &inst, &d).unwrap(), VertexSet::singleton(0));
        let cert = ratio_check(&g, &inst, &d, &Budget::unlimited()).unwrap();
        assert_eq!(cert.ratio_ok, Some(true));
        assert_eq!(cert.opt_bound_ok, Some(true));
    }

    #[test]
    fn path_rejects() {
        let out = pre_kernel(&path(9), &params(1, 1, 7), CoreMode::Exact, &Budget::unlimited()).unwrap();
        assert!(matches!(out, KernelOutcome::Reject(_)));
    }

    #[test]
    fn shortcut_for_tiny_optimum() {
        // alpha = 14 at r = 1 gives t = 13/6, so optima below 3 are solved exactly.
        let g = star(5);
        let inst = pre_kernel(&g, &params(2, 1, 14), CoreMode::Exact, &Budget::unlimited()).unwrap().kernel().unwrap();
        assert_eq!(inst.provenance.kind, KernelKind::Shortcut);
        let any = VertexSet::full(inst.gprime.n());
        assert_eq!(lift(&g, &inst, &any).unwrap(), VertexSet::singleton(0));
    }

    #[test]
    fn lift_refuses_infeasible() {
        let g = path(5);
        let inst = pre_kernel(&g, &params(3, 1, 7), CoreMode::Trivial, &Budget::unlimited()).unwrap().kernel().unwrap();
        let err = lift(&g, &inst, &VertexSet::from([1, 3])).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let all = VertexSet::full(inst.gprime.n());
        assert_eq!(lift(&g, &inst, &all).unwrap(), VertexSet::full(5));
    }

    #[test]
    fn cycle_ratio() {
        let g = cycle(6);
        let inst = pre_kernel(&g, &params(4, 1, 7), CoreMode::Exact, &Budget::unlimited()).unwrap().kernel().unwrap();
        let d = exact_acds(&inst.gprime, &inst.z, 1, 4, &Budget::unlimited()).unwrap().solution.unwrap();
        let cert = ratio_check(&g, &inst, &d, &Budget::unlimited()).unwrap();
        assert_eq!(cert.ratio_ok, Some(true));
        assert!(cert.lifted_value.unwrap() <= 28);
    }

    #[test]
    fn ds_kernel_examples() {
        let b = Budget::unlimited();
        let inst = ds_kernel(&star(5), 1, 1, CoreMode::Exact, &b).unwrap().kernel().unwrap();
        let d = ds_kernel_opt(&inst, &b).unwrap().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(lift(&star(5), &inst, &d).unwrap(), VertexSet::singleton(0));

        let inst = ds_kernel(&path(5), 2, 1, CoreMode::Exact, &b).unwrap().kernel().unwrap();
        assert_eq!(ds_kernel_opt(&inst, &b).unwrap().unwrap().len(), 2);

        assert!(matches!(ds_kernel(&path(9), 1, 1, CoreMode::Exact, &b).unwrap(), KernelOutcome::Reject(_)));
    }

    #[test]
    fn serialization_round_trip_is_stable() {
        let g = grid(3, 3);
        let inst = pre_kernel(&g, &params(3, 1, 7), CoreMode::Exact, &Budget::unlimited()).unwrap().kernel().unwrap();
        let text = inst.serialize();
        assert!(text.starts_with("lkcds/1\n[graph]\n"));
        let back = KernelInstance::parse(&text).unwrap();
        assert_eq!(back.serialize(), text);
        assert!(back.gprime.graph_eq(&inst.gprime));
        back.certify_against(&g).unwrap();
        let again = pre_kernel(&g, &params(3, 1, 7), CoreMode::Exact, &Budget::unlimited()).unwrap().kernel().unwrap();
        assert_eq!(again.serialize(), text);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(KernelInstance::parse("nope").is_err());
        assert!(KernelInstance::parse("lkcds/1\n[graph]\np 1 0\n").is_err());
    }
}
