//! The P3 hull operator, convex and free sets, and exact maximizers.
//!
//! A vertex joins the hull of a set as soon as two of its neighbors are
//! already in; iterating this rule to a fixpoint yields the smallest convex
//! superset. Free sets obey the stronger rule that no vertex of the graph,
//! inside or outside, sees two set members.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

/// Hull growth split into synchronous rounds: `rounds[i]` holds the vertices
/// absorbed in the `i`-th sweep, so `hull = seed U rounds[0] U rounds[1] ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    pub seed: VertexSet,
    pub rounds: Vec<VertexSet>,
    pub hull: VertexSet,
}

fn absorb_round(g: &Graph, cur: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut add = VertexSet::empty(n);
    for v in 0..n {
        if !cur.contains(v) && g.neighbors(v).intersection_len(cur) >= 2 {
            add.insert(v);
        }
    }
    add
}

/// Smallest convex superset of `s`.
pub fn hull(g: &Graph, s: &VertexSet) -> VertexSet {
    assert_eq!(s.universe(), g.n(), "set universe does not match graph order");
    let mut cur = s.clone();
    loop {
        let add = absorb_round(g, &cur);
        if add.is_empty() {
            return cur;
        }
        cur.union_with(&add);
    }
}

/// Hull computation that records each synchronous absorption round.
pub fn hull_trace(g: &Graph, s: &VertexSet) -> HullTrace {
    assert_eq!(s.universe(), g.n(), "set universe does not match graph order");
    let mut cur = s.clone();
    let mut rounds = Vec::new();
    loop {
        let add = absorb_round(g, &cur);
        if add.is_empty() {
            return HullTrace { seed: s.clone(), rounds, hull: cur };
        }
        cur.union_with(&add);
        rounds.push(add);
    }
}

/// A set is convex when no outside vertex has two neighbors inside.
pub fn is_convex(g: &Graph, u: &VertexSet) -> bool {
    assert_eq!(u.universe(), g.n(), "set universe does not match graph order");
    absorb_round(g, u).is_empty()
}

/// A set is free when every vertex of the graph, members included, has at
/// most one neighbor in it. Free sets are convex.
pub fn is_free(g: &Graph, a: &VertexSet) -> bool {
    assert_eq!(a.universe(), g.n(), "set universe does not match graph order");
    (0..g.n()).all(|v| g.neighbors(v).intersection_len(a) <= 1)
}

/// Largest order a graph may have for the all-subsets sweep.
pub const ALL_CONVEX_MAX_ORDER: usize = 20;

/// Every convex subset of `g`, sorted by size and then lexicographically by
/// element list. Exhaustive over all `2^n` subsets, hence the order guard.
pub fn all_convex_sets(g: &Graph) -> Result<Vec<VertexSet>, Error> {
    let n = g.n();
    if n > ALL_CONVEX_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: ALL_CONVEX_MAX_ORDER });
    }
    let adj = g.adjacency_words().expect("order fits in one word");
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let convex = (0..n)
            .all(|v| mask >> v & 1 == 1 || (adj[v] & mask).count_ones() <= 1);
        if convex {
            out.push(mask);
        }
    }
    out.sort_unstable_by(|&a, &b| {
        // Size first; ties by ascending element list, decided by the lowest
        // differing bit (the set containing it is lexicographically smaller).
        a.count_ones().cmp(&b.count_ones()).then_with(|| {
            let d = a ^ b;
            if d == 0 {
                core::cmp::Ordering::Equal
            } else if a & d & d.wrapping_neg() != 0 {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        })
    });
    Ok(out.into_iter().map(|mask| VertexSet::from_word(n, mask)).collect())
}

/// Largest order the branch-and-bound maximizers accept.
pub const BRUTE_FORCE_MAX_ORDER: usize = 64;

/// Maximum free set: returns `(alpha~, witness)`. Branch and bound over
/// vertices in degree-descending order with a greedy seed solution.
pub fn max_free_set(g: &Graph) -> Result<(usize, VertexSet), Error> {
    max_free_set_excluding(g, &VertexSet::empty(g.n()))
}

/// Maximum free set avoiding all vertices in `forbidden` (the set may still
/// be seen by them; they just cannot be members).
pub fn max_free_set_excluding(
    g: &Graph,
    forbidden: &VertexSet,
) -> Result<(usize, VertexSet), Error> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: BRUTE_FORCE_MAX_ORDER });
    }
    assert_eq!(forbidden.universe(), n, "set universe does not match graph order");
    let adj = g.adjacency_words().expect("order fits in one word");

    let mut order: Vec<usize> = (0..n).filter(|&v| !forbidden.contains(v)).collect();
    order.sort_unstable_by_key(|&v| (core::cmp::Reverse(adj[v].count_ones()), v));

    // Greedy seed: take every vertex whose neighborhood is still unblocked.
    // `blocked` marks vertices that already see one chosen member.
    let mut best_mask = 0u64;
    let mut best = 0u32;
    let mut blocked = 0u64;
    for &v in &order {
        if adj[v] & blocked == 0 {
            best_mask |= 1 << v;
            best += 1;
            blocked |= adj[v];
        }
    }

    struct Search<'a> {
        adj: &'a [u64],
        best: u32,
        best_mask: u64,
    }
    impl Search<'_> {
        fn run(&mut self, cands: &[usize], chosen: u64, size: u32, blocked: u64) {
            if size + cands.len() as u32 <= self.best {
                return;
            }
            let Some((&v, rest)) = cands.split_first() else {
                if size > self.best {
                    self.best = size;
                    self.best_mask = chosen;
                }
                return;
            };
            // Take v: every neighbor of v gains its single allowed member.
            let blocked_v = blocked | self.adj[v];
            let filtered: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|&w| self.adj[w] & blocked_v == 0)
                .collect();
            self.run(&filtered, chosen | 1 << v, size + 1, blocked_v);
            // Skip v.
            self.run(rest, chosen, size, blocked);
        }
    }

    let mut search = Search { adj: &adj, best, best_mask };
    // Candidate invariant: every listed vertex is addable under `blocked`.
    search.run(&order, 0, 0, 0);

    let witness = VertexSet::from_word(n, search.best_mask);
    debug_assert!(is_free(g, &witness));
    Ok((search.best as usize, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn vs(n: usize, elements: &[usize]) -> VertexSet {
        VertexSet::from_elements(n, elements)
    }

    #[test]
    fn hull_absorbs_middle_of_path() {
        let g = path(3);
        assert_eq!(hull(&g, &vs(3, &[0, 2])).elements(), vec![0, 1, 2]);
        assert_eq!(hull(&g, &vs(3, &[0, 1])).elements(), vec![0, 1]);
        assert_eq!(hull(&g, &vs(3, &[])).elements(), Vec::<usize>::new());
    }

    #[test]
    fn hull_of_distant_pair_is_itself() {
        let g = path(5);
        let s = vs(5, &[0, 4]);
        assert_eq!(hull(&g, &s), s);
        assert!(is_convex(&g, &s));
    }

    #[test]
    fn trace_records_rounds() {
        let t = hull_trace(&path(3), &vs(3, &[0, 2]));
        assert_eq!(t.rounds.len(), 1);
        assert_eq!(t.rounds[0].elements(), vec![1]);
        assert_eq!(t.hull.elements(), vec![0, 1, 2]);
        let empty = hull_trace(&path(3), &vs(3, &[0]));
        assert!(empty.rounds.is_empty());
    }

    #[test]
    fn convex_but_not_free() {
        let g = path(4);
        let s = vs(4, &[0, 1, 2]);
        assert!(is_convex(&g, &s));
        assert!(!is_free(&g, &s));
    }

    #[test]
    fn free_sets_of_star() {
        let g = star(3);
        assert!(is_free(&g, &vs(4, &[0, 1])));
        assert!(!is_free(&g, &vs(4, &[1, 2])));
        assert!(is_free(&g, &vs(4, &[])));
    }

    #[test]
    fn all_convex_sets_of_p3() {
        let sets = all_convex_sets(&path(3)).unwrap();
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.elements()).collect();
        assert_eq!(
            lists,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn all_convex_sets_guard() {
        let g = Graph::new(21, &[]).unwrap();
        assert_eq!(
            all_convex_sets(&g),
            Err(Error::OrderTooLarge { n: 21, max: ALL_CONVEX_MAX_ORDER })
        );
    }

    #[test]
    fn max_free_set_small_graphs() {
        assert_eq!(max_free_set(&Graph::new(1, &[]).unwrap()).unwrap().0, 1);
        assert_eq!(max_free_set(&path(2)).unwrap().0, 2);
        assert_eq!(max_free_set(&path(3)).unwrap().0, 2);
        assert_eq!(max_free_set(&path(4)).unwrap().0, 2);
        assert_eq!(max_free_set(&path(5)).unwrap().0, 3);
        assert_eq!(max_free_set(&star(3)).unwrap().0, 2);
        let (a, w) = max_free_set(&star(9)).unwrap();
        assert_eq!(a, 2);
        assert!(is_free(&star(9), &w));
    }

    #[test]
    fn max_free_set_excluding_vertex() {
        let g = path(3);
        let (a, w) = max_free_set_excluding(&g, &vs(3, &[1])).unwrap();
        assert_eq!(a, 1);
        assert!(!w.contains(1));
        let g2 = path(2);
        assert_eq!(max_free_set_excluding(&g2, &vs(2, &[0])).unwrap().0, 1);
    }
}
