//! Property tests: exact solvers against exhaustive enumeration.

mod common;

use common::*;
use lkcds::oracles::{exact_cds, exact_ds, Budget};
use lkcds::projections::profile;
use lkcds::steiner::{st_value, SteinerQuery};
use lkcds::VertexSet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = lkcds::Graph> {
    (2..=max_n, 0..=6usize, any::<u64>()).prop_map(|(n, chords, seed)| {
        random_tree_with_chords(n, chords, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ds_and_cds_match_enumeration(g in graph(11), r in 1..=2usize) {
        let all = VertexSet::full(g.n());
        let b = Budget::unlimited();
        prop_assert_eq!(exact_ds(&g, r, g.n(), &b).unwrap().value, brute_opt(&g, r, &all, false));
        prop_assert_eq!(exact_cds(&g, r, g.n(), &b).unwrap().value, brute_opt(&g, r, &all, true));
    }

    #[test]
    fn group_steiner_matches_enumeration(g in graph(10), seed in any::<u64>(), k in 1..=4usize) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool: Vec<usize> = (0..g.n()).collect();
        pool.shuffle(&mut rng);
        let mut groups: Vec<VertexSet> = Vec::new();
        for _ in 0..k.min(g.n()) {
            let take = rng.gen_range(1..=3).min(pool.len() - (k.min(g.n()) - groups.len() - 1));
            groups.push(pool.drain(..take).collect());
        }
        let q = SteinerQuery::groups(groups.clone());
        prop_assert_eq!(st_value(&g, &q).unwrap(), brute_group_steiner(&g, &groups));
    }

    #[test]
    fn profiles_match_split_distances(g in graph(10), mask in any::<u16>(), r in 1..=3usize) {
        let a: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        for u in (0..g.n()).filter(|&u| !a.contains(u)) {
            let p = profile(&g, u, &a, r).unwrap();
            for x in a.iter() {
                prop_assert_eq!(p.get(x), split_distance(&g, u, x, &a, r));
            }
        }
    }
}
