//! Radon partitions of vertex multisets and the anti-Radon maximizers.
//!
//! A k-Radon partition splits a multiset into k nonempty parts whose hulls
//! share a vertex; a multiset admitting none is k-anti-Radon. The searches
//! here are exhaustive and exact: `r~_k` is the size of a largest k-anti-Radon
//! multiset, and the rooted variant `r~_k*(g, v)` additionally requires the
//! hull of the witness to avoid `v`.
//!
//! Three facts keep the brute force honest and fast:
//! - hulls depend only on the support of a part, so hull values are cached
//!   per support mask;
//! - a multiset carrying any vertex k or more times always has a k-Radon
//!   partition (k parts each holding a copy), so maximizer candidates use
//!   multiplicities at most k-1;
//! - sub-multisets of anti-Radon multisets are anti-Radon (a removed element
//!   can be re-absorbed into an existing part, hulls only grow), so scanning
//!   candidate sizes downward may stop at the first witness.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

/// Multiset of vertices of a fixed graph, stored as one multiplicity per
/// vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexMultiset {
    n: usize,
    mult: Vec<u32>,
}

impl VertexMultiset {
    pub fn empty(n: usize) -> Self {
        VertexMultiset { n, mult: vec![0; n] }
    }

    /// Builds a multiset from `(vertex, multiplicity)` pairs; repeated pairs
    /// accumulate.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<Self, Error> {
        let mut s = Self::empty(n);
        for &(v, m) in pairs {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            s.mult[v] += m;
        }
        Ok(s)
    }

    /// Builds a multiset from elements, counting repeats.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self, Error> {
        Self::from_pairs(n, &elements.iter().map(|&v| (v, 1)).collect::<Vec<_>>())
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn multiplicity(&self, v: usize) -> u32 {
        self.mult[v]
    }

    pub fn add(&mut self, v: usize, m: u32) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.mult[v] += m;
    }

    /// Total size counting multiplicities.
    pub fn size(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    /// Vertices occurring at least once.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for (v, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_set(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// `(vertex, multiplicity)` pairs with positive multiplicity, ascending.
    pub fn iter_pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(v, &m)| (v, m))
    }

    /// Sorted element list with repeats, e.g. `{u, u, v}` as `[u, u, v]`.
    pub fn expanded(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (v, m) in self.iter_pairs() {
            out.extend(core::iter::repeat_n(v, m as usize));
        }
        out
    }

    /// True when every multiplicity of `self` is at most that in `other`.
    pub fn is_sub_multiset_of(&self, other: &VertexMultiset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }
}

impl core::fmt::Debug for VertexMultiset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.expanded()).finish()
    }
}

/// Partition of a multiset into `k` nonempty parts whose hulls all contain
/// the vertex `common` (the lowest-index one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonPartition {
    pub parts: Vec<VertexMultiset>,
    pub common: usize,
}

/// Outcome of a maximizer: the optimum `value`, a witness attaining it, and
/// whether the witness was re-verified after the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonResult {
    pub value: usize,
    pub witness: VertexMultiset,
    pub certificate_checked: bool,
}

pub const K_RANGE: core::ops::RangeInclusive<usize> = 2..=5;

/// Largest multiset size accepted by one exhaustive anti-Radon check.
pub const ANTI_RADON_MAX_SIZE: usize = 24;

fn check_k(k: usize) -> Result<(), Error> {
    if K_RANGE.contains(&k) { Ok(()) } else { Err(Error::UnsupportedK { k }) }
}

/// Lowest-index vertex lying in the hull of every part's support, if any.
/// Works on graphs of any order; parts with empty support yield `None`.
pub fn hulls_common_point(g: &Graph, parts: &[VertexMultiset]) -> Option<usize> {
    let mut common = VertexSet::full(g.n());
    for part in parts {
        common.intersect_with(&crate::convexity::hull(g, &part.support()));
    }
    common.min()
}

// ==== the search engine ==================================================

/// Hull values keyed by support mask. Small universes use a flat table so
/// the partition search never touches a tree map on its hot path.
enum HullCache {
    Flat(Vec<u64>),
    Tree(BTreeMap<u64, u64>),
}

const FLAT_CACHE_MAX_ORDER: usize = 16;
const NO_ENTRY: u64 = u64::MAX;

/// Exhaustive Radon machinery for one graph of order at most 64. The hull
/// cache persists across calls, so reuse one engine for repeated queries on
/// the same graph.
pub struct RadonEngine<'g> {
    g: &'g Graph,
    adj: Vec<u64>,
    cache: HullCache,
}

/// Per-node state of the partition search: one bit mask, one counter and one
/// equality-group id per part. Copied down the recursion, never undone.
#[derive(Clone, Copy)]
struct Parts {
    masks: [u64; 5],
    counts: [u32; 5],
    // group_start[j] = smallest part index whose content equals part j's;
    // parts with equal content are interchangeable, so compositions are
    // forced non-increasing inside each group.
    group_start: [u8; 5],
}

struct PartitionSearch<'a, 'g> {
    engine: &'a mut RadonEngine<'g>,
    k: usize,
    support: Vec<usize>,
    mults: Vec<u32>,
    // suffix_mask[i] / suffix_count[i] cover support[i..].
    suffix_mask: Vec<u64>,
    suffix_count: Vec<u32>,
    trail: Vec<[u32; 5]>,
    solution: Option<(Vec<[u32; 5]>, usize)>,
}

impl<'g> RadonEngine<'g> {
    pub fn new(g: &'g Graph) -> Result<Self, Error> {
        let Some(adj) = g.adjacency_words() else {
            return Err(Error::OrderTooLarge { n: g.n(), max: 64 });
        };
        let cache = if g.n() <= FLAT_CACHE_MAX_ORDER {
            HullCache::Flat(vec![NO_ENTRY; 1 << g.n()])
        } else {
            HullCache::Tree(BTreeMap::new())
        };
        Ok(RadonEngine { g, adj, cache })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Hull of the vertices in `mask`, cached.
    fn hull_mask(&mut self, mask: u64) -> u64 {
        match &mut self.cache {
            HullCache::Flat(table) => {
                let hit = table[mask as usize];
                if hit != NO_ENTRY {
                    return hit;
                }
            }
            HullCache::Tree(map) => {
                if let Some(&hit) = map.get(&mask) {
                    return hit;
                }
            }
        }
        let n = self.adj.len();
        let mut cur = mask;
        loop {
            let mut add = 0u64;
            for v in 0..n {
                if cur >> v & 1 == 0 && (self.adj[v] & cur).count_ones() >= 2 {
                    add |= 1 << v;
                }
            }
            if add == 0 {
                break;
            }
            cur |= add;
        }
        match &mut self.cache {
            HullCache::Flat(table) => table[mask as usize] = cur,
            HullCache::Tree(map) => {
                map.insert(mask, cur);
            }
        }
        cur
    }

    /// Finds any k-Radon partition of `r`, or proves there is none.
    ///
    /// Multisets smaller than `k` trivially have no such partition. The
    /// search is a DFS over the support, assigning each vertex's copies to
    /// parts; interchangeable parts get non-increasing shares, branches whose
    /// optimistic hulls already miss a common vertex are cut, and once all
    /// parts are nonempty with intersecting hulls the remainder is dumped
    /// into the first part (hulls only grow).
    pub fn find_k_radon_partition(
        &mut self,
        r: &VertexMultiset,
        k: usize,
    ) -> Result<Option<RadonPartition>, Error> {
        check_k(k)?;
        assert_eq!(r.universe(), self.g.n(), "multiset universe does not match graph order");
        let size = r.size();
        if size > ANTI_RADON_MAX_SIZE {
            return Err(Error::MultisetTooLarge { size, max: ANTI_RADON_MAX_SIZE });
        }
        if size < k {
            return Ok(None);
        }

        // A vertex with k or more copies seeds a partition directly: k-1
        // singleton parts plus the remainder, every hull containing it.
        if let Some(v) = (0..r.universe()).find(|&v| r.multiplicity(v) >= k as u32) {
            let mut parts = vec![VertexMultiset::from_pairs(r.universe(), &[(v, 1)])?; k - 1];
            let mut rest = r.clone();
            rest.mult[v] -= (k - 1) as u32;
            parts.push(rest);
            let common = hulls_common_point(self.g, &parts)
                .expect("all parts contain a shared vertex");
            return Ok(Some(RadonPartition { parts, common }));
        }

        let support: Vec<usize> = r.iter_pairs().map(|(v, _)| v).collect();
        let mults: Vec<u32> = r.iter_pairs().map(|(_, m)| m).collect();
        let len = support.len();
        let mut suffix_mask = vec![0u64; len + 1];
        let mut suffix_count = vec![0u32; len + 1];
        for i in (0..len).rev() {
            suffix_mask[i] = suffix_mask[i + 1] | 1 << support[i];
            suffix_count[i] = suffix_count[i + 1] + mults[i];
        }

        let mut search = PartitionSearch {
            engine: self,
            k,
            support,
            mults,
            suffix_mask,
            suffix_count,
            trail: Vec::new(),
            solution: None,
        };
        let start = Parts { masks: [0; 5], counts: [0; 5], group_start: [0; 5] };
        search.dfs(0, start);

        let Some((trail, dump_from)) = search.solution else {
            return Ok(None);
        };
        let support = search.support;
        let mults = search.mults;
        let mut parts = vec![VertexMultiset::empty(r.universe()); k];
        for (i, row) in trail.iter().enumerate() {
            for (j, part) in parts.iter_mut().enumerate() {
                if row[j] > 0 {
                    part.add(support[i], row[j]);
                }
            }
        }
        for i in dump_from..support.len() {
            parts[0].add(support[i], mults[i]);
        }
        debug_assert!(parts.iter().all(|p| p.size() > 0));
        debug_assert_eq!(
            parts.iter().fold(VertexMultiset::empty(r.universe()), |mut acc, p| {
                for (v, m) in p.iter_pairs() {
                    acc.add(v, m);
                }
                acc
            }),
            *r
        );
        let common =
            hulls_common_point(self.g, &parts).expect("search certified a common hull vertex");
        Ok(Some(RadonPartition { parts, common }))
    }

    /// True when `r` has no k-Radon partition.
    pub fn is_k_anti_radon(&mut self, r: &VertexMultiset, k: usize) -> Result<bool, Error> {
        Ok(self.find_k_radon_partition(r, k)?.is_none())
    }

    /// `r~_k`: size of a largest k-anti-Radon multiset, with the
    /// lexicographically least witness of that size.
    pub fn max_anti_radon_multiset(&mut self, k: usize) -> Result<RadonResult, Error> {
        check_k(k)?;
        self.descend(k, |_| (k - 1) as u32, None)
    }

    /// Largest k-anti-Radon set (all multiplicities at most one). This is
    /// one less than the classical Radon number over sets.
    pub fn max_anti_radon_set(&mut self, k: usize) -> Result<RadonResult, Error> {
        check_k(k)?;
        self.descend(k, |_| 1, None)
    }

    /// `r~_k*(g, v)`: size of a largest k-anti-Radon multiset whose hull
    /// avoids `v`.
    pub fn radon_star(&mut self, v: usize, k: usize) -> Result<RadonResult, Error> {
        check_k(k)?;
        let n = self.g.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let cap = move |u: usize| if u == v { 0 } else { (k - 1) as u32 };
        self.descend(k, cap, Some(v))
    }

    /// Scans candidate sizes downward from the multiplicity-capped maximum;
    /// within a size, candidates are generated in ascending lexicographic
    /// order of their expanded element lists, so the first anti-Radon hit is
    /// the least witness of maximum size.
    fn descend(
        &mut self,
        k: usize,
        cap: impl Fn(usize) -> u32,
        avoid: Option<usize>,
    ) -> Result<RadonResult, Error> {
        let n = self.g.n();
        let total_cap: usize = (0..n).map(|v| cap(v) as usize).sum();
        if total_cap > ANTI_RADON_MAX_SIZE {
            return Err(Error::MultisetTooLarge { size: total_cap, max: ANTI_RADON_MAX_SIZE });
        }
        let caps: Vec<u32> = (0..n).map(&cap).collect();
        let suffix_cap: Vec<usize> = {
            let mut s = vec![0usize; n + 1];
            for v in (0..n).rev() {
                s[v] = s[v + 1] + caps[v] as usize;
            }
            s
        };

        for size in (0..=total_cap).rev() {
            let mut current = VertexMultiset::empty(n);
            if let Some(witness) = self.level_scan(k, &caps, &suffix_cap, avoid, 0, size, &mut current)? {
                let checked = self.is_k_anti_radon(&witness, k)?;
                debug_assert!(checked);
                return Ok(RadonResult { value: size, witness, certificate_checked: checked });
            }
        }
        // Only the order-zero graph gets here: every graph with a vertex has
        // anti-Radon singletons.
        Ok(RadonResult {
            value: 0,
            witness: VertexMultiset::empty(n),
            certificate_checked: true,
        })
    }

    /// Depth-first enumeration of all multisets of the given residual size,
    /// assigning multiplicities vertex by vertex, highest first (which yields
    /// ascending expanded element lists). Returns the first anti-Radon hit.
    #[allow(clippy::too_many_arguments)]
    fn level_scan(
        &mut self,
        k: usize,
        caps: &[u32],
        suffix_cap: &[usize],
        avoid: Option<usize>,
        v: usize,
        remaining: usize,
        current: &mut VertexMultiset,
    ) -> Result<Option<VertexMultiset>, Error> {
        if remaining == 0 {
            if let Some(x) = avoid {
                let support = current.support().to_word();
                if self.hull_mask(support) >> x & 1 == 1 {
                    return Ok(None);
                }
            }
            if self.is_k_anti_radon(current, k)? {
                return Ok(Some(current.clone()));
            }
            return Ok(None);
        }
        if v >= caps.len() || remaining > suffix_cap[v] {
            return Ok(None);
        }
        let hi = (caps[v] as usize).min(remaining);
        // Feasibility: vertices after v can still absorb what remains.
        let lo = remaining.saturating_sub(suffix_cap[v + 1]);
        for m in (lo..=hi).rev() {
            if m > 0 {
                current.mult[v] = m as u32;
            }
            let hit = self.level_scan(k, caps, suffix_cap, avoid, v + 1, remaining - m, current)?;
            current.mult[v] = 0;
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }
}

impl PartitionSearch<'_, '_> {
    /// Returns true once a partition is certified; `parts` is consumed by
    /// value so backtracking is implicit.
    fn dfs(&mut self, i: usize, parts: Parts) -> bool {
        let k = self.k;
        let remaining = self.suffix_count[i];
        let empty = parts.counts[..k].iter().filter(|&&c| c == 0).count() as u32;
        if empty > remaining {
            return false;
        }

        // Optimistic bound: even granting every part all unassigned
        // vertices, the hulls must still meet somewhere.
        let suffix = self.suffix_mask[i];
        let mut optimistic = u64::MAX;
        for j in 0..k {
            optimistic &= self.engine.hull_mask(parts.masks[j] | suffix);
            if optimistic == 0 {
                return false;
            }
        }

        if empty == 0 {
            let mut met = u64::MAX;
            for j in 0..k {
                met &= self.engine.hull_mask(parts.masks[j]);
                if met == 0 {
                    break;
                }
            }
            if met != 0 {
                // All parts are nonempty and already meet: the rest of the
                // multiset can ride along in part 0.
                self.solution = Some((self.trail.clone(), i));
                return true;
            }
        }

        if i == self.support.len() {
            return false;
        }

        let mut composition = [0u32; 5];
        self.assign(i, 0, self.mults[i], &mut composition, parts)
    }

    /// Distributes the copies of `support[i]` over parts `j..k`, descending,
    /// respecting non-increasing shares inside each equality group.
    fn assign(
        &mut self,
        i: usize,
        j: usize,
        left: u32,
        composition: &mut [u32; 5],
        parts: Parts,
    ) -> bool {
        let k = self.k;
        if j == k {
            if left > 0 {
                return false;
            }
            let mut next = parts;
            let v = self.support[i];
            for t in 0..k {
                if composition[t] > 0 {
                    next.masks[t] |= 1 << v;
                    next.counts[t] += composition[t];
                }
                // Groups refine: a boundary appears wherever one existed or
                // the shares differ.
                if t > 0 && parts.group_start[t] as usize == t {
                    next.group_start[t] = t as u8;
                } else if t > 0 {
                    next.group_start[t] = if composition[t] == composition[t - 1] {
                        next.group_start[t - 1]
                    } else {
                        t as u8
                    };
                }
            }
            self.trail.push(*composition);
            let hit = self.dfs(i + 1, next);
            self.trail.pop();
            return hit;
        }
        let in_group = parts.group_start[j] as usize != j;
        let hi = if in_group { composition[j - 1].min(left) } else { left };
        let lo = if j == k - 1 { left } else { 0 };
        if lo > hi {
            return false;
        }
        let mut m = hi;
        loop {
            composition[j] = m;
            if self.assign(i, j + 1, left - m, composition, parts) {
                return true;
            }
            composition[j] = 0;
            if m == lo {
                return false;
            }
            m -= 1;
        }
    }
}

// ==== free-function wrappers ==============================================

/// One-shot [`RadonEngine::find_k_radon_partition`] on a fresh engine.
pub fn find_k_radon_partition(
    g: &Graph,
    r: &VertexMultiset,
    k: usize,
) -> Result<Option<RadonPartition>, Error> {
    RadonEngine::new(g)?.find_k_radon_partition(r, k)
}

/// True when `r` admits no k-Radon partition in `g`.
pub fn is_k_anti_radon(g: &Graph, r: &VertexMultiset, k: usize) -> Result<bool, Error> {
    RadonEngine::new(g)?.is_k_anti_radon(r, k)
}

/// `r~_k(g)` with a lexicographically least maximum witness.
pub fn max_anti_radon_multiset(g: &Graph, k: usize) -> Result<RadonResult, Error> {
    RadonEngine::new(g)?.max_anti_radon_multiset(k)
}

/// Largest k-anti-Radon set of `g` (the set Radon number minus one).
pub fn max_anti_radon_set(g: &Graph, k: usize) -> Result<RadonResult, Error> {
    RadonEngine::new(g)?.max_anti_radon_set(k)
}

/// `r~_k*(g, v)`: largest k-anti-Radon multiset whose hull avoids `v`.
pub fn radon_star(g: &Graph, v: usize, k: usize) -> Result<RadonResult, Error> {
    RadonEngine::new(g)?.radon_star(v, k)
}
