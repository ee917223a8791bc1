//! Randomized invariant checks for the convexity and Radon machinery.

use p3c_core::canon::{canonical_form, canonical_level_sequence};
use p3c_core::radon::{self, VertexMultiset};
use p3c_core::tree_dp;
use p3c_core::{convexity, families, Graph, VertexSet};

use proptest::collection::vec;
use proptest::prelude::*;

/// Random graph on `1..=max_n` vertices with each edge kept independently.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        vec(proptest::bool::weighted(0.4), slots).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).expect("generated edges are simple")
        })
    })
}

/// Random graph plus a vertex subset of it.
fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        vec(any::<bool>(), n).prop_map(move |bits| {
            let mut s = VertexSet::empty(n);
            for (v, &b) in bits.iter().enumerate() {
                if b {
                    s.insert(v);
                }
            }
            (g.clone(), s)
        })
    })
}

/// Uniform random labeled tree generated from a seed.
fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| families::random_tree(n, seed))
}

fn subset(bits: &[bool], base: &VertexSet) -> VertexSet {
    let mut s = VertexSet::empty(base.universe());
    for (i, v) in base.iter().enumerate() {
        if bits[i % bits.len()] {
            s.insert(v);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hull_is_extensive_idempotent_and_convex((g, s) in graph_and_set(12)) {
        let h = convexity::hull(&g, &s);
        prop_assert!(s.is_subset_of(&h));
        prop_assert!(convexity::is_convex(&g, &h));
        prop_assert_eq!(convexity::hull(&g, &h), h);
    }

    #[test]
    fn hull_is_monotone((g, s) in graph_and_set(12), extra in vec(any::<bool>(), 12)) {
        let mut t = s.clone();
        for (v, &b) in extra.iter().take(g.n()).enumerate() {
            if b {
                t.insert(v);
            }
        }
        let hs = convexity::hull(&g, &s);
        let ht = convexity::hull(&g, &t);
        prop_assert!(hs.is_subset_of(&ht));
    }

    #[test]
    fn hull_is_the_least_convex_superset((g, s) in graph_and_set(8)) {
        let mut meet = VertexSet::full(g.n());
        for c in convexity::all_convex_sets(&g).unwrap() {
            if s.is_subset_of(&c) {
                meet.intersect_with(&c);
            }
        }
        prop_assert_eq!(convexity::hull(&g, &s), meet);
    }

    #[test]
    fn free_sets_are_convex((g, s) in graph_and_set(12)) {
        if convexity::is_free(&g, &s) {
            prop_assert!(convexity::is_convex(&g, &s));
        }
    }

    #[test]
    fn anti_radon_is_downward_closed(
        (g, s) in graph_and_set(7),
        k in 2usize..=3,
        bits in vec(any::<bool>(), 8),
    ) {
        let r = VertexMultiset::from_elements(g.n(), &s.elements()).unwrap();
        if r.size() == 0 || r.size() > 6 {
            return Ok(());
        }
        if radon::is_k_anti_radon(&g, &r, k).unwrap() {
            let sub = VertexMultiset::from_elements(g.n(), &subset(&bits, &s).elements()).unwrap();
            prop_assert!(radon::is_k_anti_radon(&g, &sub, k).unwrap());
        }
    }

    #[test]
    fn partitions_are_certified(
        (g, s) in graph_and_set(7),
        k in 2usize..=3,
    ) {
        let r = VertexMultiset::from_elements(g.n(), &s.elements()).unwrap();
        if r.size() > 6 {
            return Ok(());
        }
        if let Some(p) = radon::find_k_radon_partition(&g, &r, k).unwrap() {
            prop_assert_eq!(p.parts.len(), k);
            let mut total = VertexMultiset::empty(g.n());
            for part in &p.parts {
                prop_assert!(part.size() > 0);
                for (v, m) in part.iter_pairs() {
                    total.add(v, m);
                }
            }
            prop_assert_eq!(&total, &r);
            let common = radon::hulls_common_point(&g, &p.parts);
            prop_assert_eq!(common, Some(p.common));
        }
    }

    #[test]
    fn tree_alpha_dp_matches_branch_and_bound(t in arb_tree(14)) {
        let (by_dp, witness) = tree_dp::alpha_tree(&t).unwrap();
        let (by_search, _) = convexity::max_free_set(&t).unwrap();
        prop_assert_eq!(by_dp, by_search);
        prop_assert!(convexity::is_free(&t, &witness));
        prop_assert_eq!(witness.len(), by_dp);
    }

    #[test]
    fn canonical_sequence_ignores_labeling(t in arb_tree(12), keys in vec(any::<u64>(), 12)) {
        let n = t.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| (keys[i % keys.len()], i));
        let mut relabel = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            relabel[old] = new;
        }
        let edges: Vec<(usize, usize)> =
            t.edges().iter().map(|&(u, v)| (relabel[u], relabel[v])).collect();
        let shuffled = Graph::new(n, &edges).unwrap();
        prop_assert_eq!(
            canonical_level_sequence(&t).unwrap(),
            canonical_level_sequence(&shuffled).unwrap()
        );
        prop_assert_eq!(
            canonical_form(&t).unwrap().edges(),
            canonical_form(&shuffled).unwrap().edges()
        );
    }

    #[test]
    fn star_radon_number_never_exceeds_plain(t in arb_tree(8), k in 2usize..=3, vkey in any::<u64>()) {
        let v = (vkey % t.n() as u64) as usize;
        let plain = radon::max_anti_radon_multiset(&t, k).unwrap().value;
        let star = radon::radon_star(&t, v, k).unwrap().value;
        prop_assert!(star <= plain);
        prop_assert_eq!(star, tree_dp::radon_star_tree(&t, v, k).unwrap());
    }

    #[test]
    fn covering_free_set_exists_on_random_trees(t in arb_tree(12)) {
        if t.n() < 2 {
            return Ok(());
        }
        let a = tree_dp::free_set_covering_leaves(&t).unwrap();
        prop_assert!(convexity::is_free(&t, &a));
        prop_assert_eq!(a.len(), tree_dp::alpha_tree(&t).unwrap().0);
        prop_assert!(tree_dp::leaf_coverage_holds(&t, &a));
    }
}
