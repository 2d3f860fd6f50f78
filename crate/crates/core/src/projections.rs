//! `A`-avoiding reachability: r-projections, r-projection profiles and the
//! partition of `V(G) \ X` into profile classes.
//!
//! A path from `u ∉ A` to `v ∈ A` is `A`-avoiding when no vertex other than
//! `v` lies in `A`. Profiles store the finite distances only; an absent
//! entry means "farther than `r`". Distances are always at least 1 because
//! profiles are only defined for vertices outside `A`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bfs_layers, Graph, Vertex, VertexSet};

/// Shortest `A`-avoiding distances from one vertex to the members of `A`,
/// truncated at radius `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectionProfile {
    pub r: usize,
    /// `(a, d)` pairs sorted by `a`, with `1 <= d <= r`.
    pub entries: Vec<(Vertex, usize)>,
}

impl ProjectionProfile {
    pub fn get(&self, a: Vertex) -> Option<usize> {
        self.entries
            .binary_search_by_key(&a, |&(v, _)| v)
            .ok()
            .map(|i| self.entries[i].1)
    }

    /// The r-projection: the members of `A` with a finite entry.
    pub fn support(&self) -> VertexSet {
        self.entries.iter().map(|&(a, _)| a).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(a, d)` minimizing `d`, ties broken by smallest `a`.
    pub fn nearest(&self) -> Option<(Vertex, usize)> {
        self.entries.iter().copied().min_by_key(|&(a, d)| (d, a))
    }
}

fn check_outside(u: Vertex, a: &VertexSet) -> Result<()> {
    if a.contains(u) {
        return Err(Error::Domain(format!(
            "projection profiles are undefined for vertex {u}, which lies in the target set"
        )));
    }
    Ok(())
}

/// Profile of `u` on `a` with radius `r`.
pub fn profile(g: &Graph, u: Vertex, a: &VertexSet, r: usize) -> Result<ProjectionProfile> {
    check_outside(u, a)?;
    let dist = bfs_layers(g, &VertexSet::singleton(u), r, a);
    let entries = a.iter().filter_map(|x| dist[x].map(|d| (x, d))).collect();
    Ok(ProjectionProfile { r, entries })
}

/// `M_r(u, A)`: members of `a` reachable from `u` by an `a`-avoiding path of
/// length at most `r`.
pub fn projection(g: &Graph, u: Vertex, a: &VertexSet, r: usize) -> Result<VertexSet> {
    Ok(profile(g, u, a, r)?.support())
}

/// Partition of `V(G) \ X` by profile equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileClassification {
    pub r: usize,
    /// Class index for every vertex outside `X`, `None` for members of `X`.
    pub class_of: Vec<Option<usize>>,
    /// Smallest member of each class.
    pub representatives: Vec<Vertex>,
    pub profiles: Vec<ProjectionProfile>,
    pub members: Vec<VertexSet>,
}

impl ProfileClassification {
    pub fn num_classes(&self) -> usize {
        self.profiles.len()
    }

    /// Index of the class whose profile has no finite entry, if realized.
    pub fn empty_class(&self) -> Option<usize> {
        // Canonical order puts the empty profile first.
        self.profiles.first().filter(|p| p.is_empty()).map(|_| 0)
    }

    pub fn class_with_profile(&self, p: &ProjectionProfile) -> Option<usize> {
        self.profiles.binary_search(p).ok()
    }
}

/// Per-vertex profiles on `x` for every vertex outside `x`, computed with
/// one `x`-avoiding flood per member of `x`.
pub fn all_profiles(g: &Graph, x: &VertexSet, r: usize) -> Vec<Option<ProjectionProfile>> {
    let n = g.n();
    let floods: Vec<(Vertex, Vec<Option<usize>>)> = x
        .as_slice()
        .par_iter()
        .map(|&s| (s, bfs_layers(g, &VertexSet::singleton(s), r, x)))
        .collect();
    let in_x = x.mask(n);
    let mut entries: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
    // `x` is sorted, so entries come out sorted by core vertex.
    for (s, dist) in &floods {
        for w in 0..n {
            if in_x[w] {
                continue;
            }
            if let Some(d) = dist[w] {
                entries[w].push((*s, d));
            }
        }
    }
    entries
        .into_iter()
        .enumerate()
        .map(|(w, e)| (!in_x[w]).then_some(ProjectionProfile { r, entries: e }))
        .collect()
}

/// Classes of `∼_{X,r}`, indexed in sorted canonical profile order.
pub fn classify(g: &Graph, x: &VertexSet, r: usize) -> ProfileClassification {
    let profiles = all_profiles(g, x, r);
    let mut groups: BTreeMap<ProjectionProfile, Vec<Vertex>> = BTreeMap::new();
    for (w, p) in profiles.into_iter().enumerate() {
        if let Some(p) = p {
            groups.entry(p).or_default().push(w);
        }
    }
    let mut class_of = vec![None; g.n()];
    let mut representatives = Vec::with_capacity(groups.len());
    let mut out_profiles = Vec::with_capacity(groups.len());
    let mut members = Vec::with_capacity(groups.len());
    for (i, (p, vs)) in groups.into_iter().enumerate() {
        for &v in &vs {
            class_of[v] = Some(i);
        }
        representatives.push(vs[0]);
        out_profiles.push(p);
        members.push(VertexSet::from_sorted_unchecked(vs));
    }
    ProfileClassification { r, class_of, representatives, profiles: out_profiles, members }
}

/// `μ̂_r(G, A)`: number of distinct profiles realized outside `a`.
pub fn mu_hat(g: &Graph, a: &VertexSet, r: usize) -> usize {
    classify(g, a, r).num_classes()
}

/// CSV rows `class,size,finite_entries` for the `profile-stats` report.
pub fn profile_stats_csv(c: &ProfileClassification) -> String {
    let mut out = String::from("# lkcds profile-stats v1\nclass,size,finite_entries\n");
    for i in 0..c.num_classes() {
        out.push_str(&format!("{},{},{}\n", i, c.members[i].len(), c.profiles[i].entries.len()));
    }
    out
}
