//! Tree recursions: the free-set DP, the rooted exclusion quantities
//! `alpha~*` and `r~_k*`, and the exchange construction of a maximum free set
//! covering every endvertex.
//!
//! The rooted quantities obey the same decomposition: removing the query
//! vertex `v` splits the tree into components `T_1..T_l`, each rooted at a
//! former neighbor `v_i` of `v`, and the optimum keeps the rooted constraint
//! in all components but one, which contributes its unconstrained value:
//!
//! ```text
//! f*(T, v) = max_i ( sum_{j != i} f*(T_j, v_j) + f(T_i) )
//! ```
//!
//! with `f = alpha~` (free number) or `f = r~_k` (anti-Radon number).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::canon::{canonical_level_sequence, rooted_level_sequence};
use crate::convexity::is_free;
use crate::error::Error;
use crate::graph::Graph;
use crate::radon;

/// Optimal free-set sizes within one rooted subtree, split by whether the
/// root is in the set and whether some child already is. `None` marks an
/// infeasible state (a leaf cannot have a child in the set).
#[derive(Clone, Copy, Debug, Default)]
pub struct AlphaStates {
    /// Indexed by `[root_in_set][child_in_set_used]`.
    pub value: [[Option<u32>; 2]; 2],
}

struct AlphaDp {
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
    states: Vec<AlphaStates>,
}

/// Feasibility rule: a vertex tolerates at most one neighbor in the set, so
/// a member's children may contain at most one member, and if the parent is
/// a member the children contain none.
fn alpha_dp(t: &Graph) -> AlphaDp {
    let n = t.n();
    let (order, parent) = t.bfs(0);
    debug_assert_eq!(order.len(), n);
    let mut children = vec![Vec::new(); n];
    for &u in &order[1..] {
        children[parent[u].expect("non-root has a parent")].push(u);
    }
    let mut states = vec![AlphaStates::default(); n];
    for &u in order.iter().rev() {
        let cs = &children[u];
        // Best child contributions: b0 = child outside the set (any used
        // flag), a1 = child inside (any used flag), v00 = child outside with
        // no member grandchild (forced when u is a member).
        let b0 = |c: usize| {
            let s = states[c].value;
            s[0][0].unwrap_or(0).max(s[0][1].unwrap_or(0))
        };
        let a1 = |c: usize| {
            let s = states[c].value;
            s[1][0].unwrap_or(0).max(s[1][1].unwrap_or(0))
        };
        let sum_b0: u32 = cs.iter().map(|&c| b0(c)).sum();
        let sum_v00: u32 = cs.iter().map(|&c| states[c].value[0][0].expect("always feasible")).sum();

        let mut s = AlphaStates::default();
        s.value[0][0] = Some(sum_b0);
        s.value[0][1] = cs
            .iter()
            .map(|&c| sum_b0 - b0(c) + a1(c))
            .max();
        s.value[1][0] = Some(1 + sum_v00);
        s.value[1][1] = cs
            .iter()
            .map(|&c| {
                let v00 = states[c].value[0][0].expect("always feasible");
                let v10 = states[c].value[1][0].expect("always feasible");
                1 + sum_v00 - v00 + v10
            })
            .max();
        states[u] = s;
    }
    AlphaDp { order, children, states }
}

/// `alpha~(t)` with a maximum free set, by dynamic programming over the tree
/// rooted at vertex 0. Agrees with the branch-and-bound maximizer; witness
/// choice is deterministic (fixed state scan order, lowest child first).
pub fn alpha_tree(t: &Graph) -> Result<(usize, VertexSet), Error> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let dp = alpha_dp(t);
    let root = dp.order[0];
    let root_states = dp.states[root].value;
    let all = [(0usize, 0usize), (0, 1), (1, 0), (1, 1)];
    let (mut best_state, mut best) = ((0, 0), 0);
    for (s, used) in all {
        if let Some(v) = root_states[s][used] {
            if v > best {
                best = v;
                best_state = (s, used);
            }
        }
    }

    let mut set = VertexSet::empty(t.n());
    let mut stack = vec![(root, best_state)];
    while let Some((u, (s, used))) = stack.pop() {
        if s == 1 {
            set.insert(u);
        }
        let cs = &dp.children[u];
        let b0 = |c: usize| {
            let sv = dp.states[c].value;
            sv[0][0].unwrap_or(0).max(sv[0][1].unwrap_or(0))
        };
        let b0_state = |c: usize| {
            let sv = dp.states[c].value;
            if sv[0][0].unwrap_or(0) >= sv[0][1].unwrap_or(0) { (0, 0) } else { (0, 1) }
        };
        let a1 = |c: usize| {
            let sv = dp.states[c].value;
            sv[1][0].unwrap_or(0).max(sv[1][1].unwrap_or(0))
        };
        let a1_state = |c: usize| {
            let sv = dp.states[c].value;
            if sv[1][0].unwrap_or(0) >= sv[1][1].unwrap_or(0) { (1, 0) } else { (1, 1) }
        };
        let target = dp.states[u].value[s][used].expect("assigned state is feasible");
        match (s, used) {
            (0, 0) => {
                for &c in cs {
                    stack.push((c, b0_state(c)));
                }
            }
            (0, 1) => {
                let sum_b0: u32 = cs.iter().map(|&c| b0(c)).sum();
                let j = *cs
                    .iter()
                    .find(|&&c| sum_b0 - b0(c) + a1(c) == target)
                    .expect("some child attains the optimum");
                for &c in cs {
                    stack.push(if c == j { (c, a1_state(c)) } else { (c, b0_state(c)) });
                }
            }
            (1, 0) => {
                for &c in cs {
                    stack.push((c, (0, 0)));
                }
            }
            (1, 1) => {
                let sum_v00: u32 = cs
                    .iter()
                    .map(|&c| dp.states[c].value[0][0].expect("always feasible"))
                    .sum();
                let j = *cs
                    .iter()
                    .find(|&&c| {
                        let v00 = dp.states[c].value[0][0].expect("always feasible");
                        let v10 = dp.states[c].value[1][0].expect("always feasible");
                        1 + sum_v00 - v00 + v10 == target
                    })
                    .expect("some child attains the optimum");
                for &c in cs {
                    stack.push(if c == j { (c, (1, 0)) } else { (c, (0, 0)) });
                }
            }
            _ => unreachable!(),
        }
    }
    debug_assert!(is_free(t, &set));
    debug_assert_eq!(set.len(), best as usize);
    Ok((best as usize, set))
}

/// `alpha~*(t, v)`: the largest free set not containing `v`, computed by the
/// component recursion (not by forbidding `v` in a DP, so the two routes can
/// cross-check each other).
pub fn alpha_star_tree(t: &Graph, v: usize) -> Result<usize, Error> {
    if v >= t.n() {
        return Err(Error::VertexOutOfRange { v, n: t.n() });
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() == 1 {
        return Ok(0);
    }
    let comps = t.remove_vertex_components(v)?;
    let mut stars = Vec::with_capacity(comps.len());
    let mut alphas = Vec::with_capacity(comps.len());
    for c in &comps {
        stars.push(alpha_star_tree(&c.graph, c.root)?);
        alphas.push(alpha_tree(&c.graph)?.0);
    }
    let total: usize = stars.iter().sum();
    Ok((0..comps.len())
        .map(|j| total - stars[j] + alphas[j])
        .max()
        .expect("v has at least one neighbor"))
}

/// Memo for [`radon_star_tree_with`]: rooted values keyed by the canonical
/// rooted level sequence, whole-tree values by the free canonical sequence.
/// Inserts are idempotent (same key, same value), so sharing is harmless.
#[derive(Default)]
pub struct RadonStarMemo {
    star: BTreeMap<(Vec<u32>, u8), usize>,
    whole: BTreeMap<(Vec<u32>, u8), usize>,
}

impl RadonStarMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.star.len() + self.whole.len()
    }

    pub fn is_empty(&self) -> bool {
        self.star.is_empty() && self.whole.is_empty()
    }
}

/// `r~_k*(t, v)` by the component recursion, with the default exhaustive
/// evaluator supplying `r~_k` of each component.
pub fn radon_star_tree(t: &Graph, v: usize, k: usize) -> Result<usize, Error> {
    let mut base = |g: &Graph| radon::max_anti_radon_multiset(g, k).map(|r| r.value);
    radon_star_tree_with(t, v, k, &mut base, &mut RadonStarMemo::new())
}

/// `r~_k*(t, v)` by the component recursion with a caller-chosen exact
/// evaluator for `r~_k` and a memo, keyed on canonical (rooted) tree shapes,
/// that persists across calls. The evaluator is exponential, so sweeps that
/// revisit isomorphic subtrees should share one memo.
pub fn radon_star_tree_with(
    t: &Graph,
    v: usize,
    k: usize,
    base: &mut dyn FnMut(&Graph) -> Result<usize, Error>,
    memo: &mut RadonStarMemo,
) -> Result<usize, Error> {
    if !radon::K_RANGE.contains(&k) {
        return Err(Error::UnsupportedK { k });
    }
    if v >= t.n() {
        return Err(Error::VertexOutOfRange { v, n: t.n() });
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    radon_star_rec(t, v, k, base, memo)
}

fn radon_star_rec(
    t: &Graph,
    v: usize,
    k: usize,
    base: &mut dyn FnMut(&Graph) -> Result<usize, Error>,
    memo: &mut RadonStarMemo,
) -> Result<usize, Error> {
    if t.n() == 1 {
        return Ok(0);
    }
    let key = (rooted_level_sequence(t, v)?, k as u8);
    if let Some(&hit) = memo.star.get(&key) {
        return Ok(hit);
    }
    let comps = t.remove_vertex_components(v)?;
    let mut stars = Vec::with_capacity(comps.len());
    let mut wholes = Vec::with_capacity(comps.len());
    for c in &comps {
        stars.push(radon_star_rec(&c.graph, c.root, k, base, memo)?);
        let whole_key = (canonical_level_sequence(&c.graph)?, k as u8);
        let whole = match memo.whole.get(&whole_key) {
            Some(&w) => w,
            None => {
                let w = base(&c.graph)?;
                memo.whole.insert(whole_key, w);
                w
            }
        };
        wholes.push(whole);
    }
    let total: usize = stars.iter().sum();
    let value = (0..comps.len())
        .map(|j| total - stars[j] + wholes[j])
        .max()
        .expect("v has at least one neighbor");
    memo.star.insert(key, value);
    Ok(value)
}

/// Does every endvertex of `t` lie in `a` or have a brother (another
/// endvertex at distance two) in `a`?
pub fn leaf_coverage_holds(t: &Graph, a: &VertexSet) -> bool {
    let leaves = t.endvertices();
    let covered = |v: usize| {
        if a.contains(v) {
            return true;
        }
        let u = t.neighbors(v).min().expect("endvertex has a neighbor");
        t.neighbors(u).iter().any(|w| w != v && leaves.contains(w) && a.contains(w))
    };
    let all_covered = leaves.iter().all(covered);
    all_covered
}

/// A maximum free set in which every endvertex is covered (in the set or
/// with a brother in it), built by the exchange argument: an uncovered
/// endvertex `v` with neighbor `u` forces some non-endvertex `w` in the set
/// adjacent to `u`; swapping `w` for `v` keeps the set free and maximum and
/// strictly grows the number of covered endvertices.
pub fn free_set_covering_leaves(t: &Graph) -> Result<VertexSet, Error> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::TooFewVertices { n: t.n(), min: 2 });
    }
    let (alpha, mut a) = alpha_tree(t)?;
    let leaves = t.endvertices();
    loop {
        let uncovered = leaves.iter().find(|&v| {
            !a.contains(v) && {
                let u = t.neighbors(v).min().expect("endvertex has a neighbor");
                !t.neighbors(u)
                    .iter()
                    .any(|w| w != v && leaves.contains(w) && a.contains(w))
            }
        });
        let Some(v) = uncovered else {
            debug_assert_eq!(a.len(), alpha);
            return Ok(a);
        };
        let u = t.neighbors(v).min().expect("endvertex has a neighbor");
        // A maximum free set must block v through u, else adding v would
        // stay free. The blocker is no endvertex (that would cover v).
        let w = t
            .neighbors(u)
            .iter()
            .find(|&w| w != v && a.contains(w))
            .expect("maximum free set blocks every uncovered endvertex");
        debug_assert!(!leaves.contains(w));
        a.remove(w);
        a.insert(v);
        debug_assert!(is_free(t, &a));
    }
}
