//! Named graph families and tree generation.
//!
//! Three sources of test graphs live here:
//!
//! * [`counterexample_g1`], a fixed seven-vertex graph on which the doubled
//!   free number fails to bound the second Radon number.
//! * [`sharpness_tree`], a family of trees attaining equality in that bound,
//!   with [`sharpness_layout`] exposing the vertex roles of each block.
//! * Tree generators: [`enumerate_trees`] streams every unlabeled tree of a
//!   given order exactly once, and [`random_tree`] draws a uniformly random
//!   labeled tree from a seed.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_form, graph_from_level_sequence};
use crate::error::Error;
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_trees`].
pub const ENUMERATE_MAX_ORDER: usize = 20;

/// A seven-vertex graph with free number 1 and second Radon number 3.
///
/// Vertex 0 is adjacent to all others, and the remaining six vertices form
/// three disjoint edges {1,2}, {3,4}, {5,6}. Every two-element set fails to
/// be free (vertex 0 always has two neighbors in it), yet the three-element
/// set {1,3,5} admits no Radon partition, so the second Radon number exceeds
/// twice the free number.
pub fn counterexample_g1() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (0, 6),
        (1, 2),
        (3, 4),
        (5, 6),
    ];
    Graph::new(7, &edges).expect("fixed edge list is valid")
}

/// Vertex roles inside each ten-vertex block of [`sharpness_tree`].
///
/// Block `i` (zero-based, `i < m`) occupies vertices `10*i .. 10*i + 10`:
///
/// ```text
/// spine(i) ── hub(i) ──┬── branch(i)      ── three leaves
///                      └── branch_mate(i) ── three leaves
/// ```
///
/// Consecutive spine vertices are adjacent, forming a path across blocks.
pub mod sharpness_layout {
    use alloc::vec::Vec;

    /// Spine vertex of block `i`; adjacent to neighboring spine vertices.
    pub fn spine(i: usize) -> usize {
        10 * i
    }

    /// Degree-three hub joining the spine vertex to both branch vertices.
    pub fn hub(i: usize) -> usize {
        10 * i + 1
    }

    /// First branch vertex of block `i`; carries three leaves.
    pub fn branch(i: usize) -> usize {
        10 * i + 2
    }

    /// Second branch vertex of block `i`; carries three leaves.
    pub fn branch_mate(i: usize) -> usize {
        10 * i + 3
    }

    /// The three leaves hanging from [`branch`]`(i)`.
    pub fn branch_leaves(i: usize) -> [usize; 3] {
        [10 * i + 4, 10 * i + 5, 10 * i + 6]
    }

    /// The three leaves hanging from [`branch_mate`]`(i)`.
    pub fn mate_leaves(i: usize) -> [usize; 3] {
        [10 * i + 7, 10 * i + 8, 10 * i + 9]
    }

    /// All `6m` branch leaves of the `m`-block tree, ascending.
    ///
    /// This set admits no Radon partition for the second Radon number, and
    /// for `m >= 2` it is exactly the set of endvertices of the tree.
    pub fn leaf_witness(m: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(6 * m);
        for i in 0..m {
            out.extend_from_slice(&branch_leaves(i));
            out.extend_from_slice(&mate_leaves(i));
        }
        out.sort_unstable();
        out
    }
}

/// Builds the `m`-block sharpness tree on `10m` vertices.
///
/// Each block contributes a spine vertex, a hub, and two branch vertices
/// with three leaves apiece; see [`sharpness_layout`] for the exact indices.
/// The tree has free number `3m` and second Radon number `6m`, attaining the
/// doubled-free-number bound with equality. For `m >= 2` its endvertices are
/// exactly the `6m` branch leaves; for `m == 1` the lone spine vertex is an
/// additional endvertex.
///
/// # Errors
///
/// Returns [`Error::BadFamilyParameter`] when `m == 0`.
pub fn sharpness_tree(m: usize) -> Result<Graph, Error> {
    if m == 0 {
        return Err(Error::BadFamilyParameter {
            name: "m",
            value: 0,
        });
    }
    let mut edges = Vec::with_capacity(10 * m - 1);
    for i in 0..m {
        let (v, u) = (sharpness_layout::spine(i), sharpness_layout::hub(i));
        let (w, wm) = (
            sharpness_layout::branch(i),
            sharpness_layout::branch_mate(i),
        );
        edges.push((v, u));
        edges.push((u, w));
        edges.push((u, wm));
        for leaf in sharpness_layout::branch_leaves(i) {
            edges.push((w, leaf));
        }
        for leaf in sharpness_layout::mate_leaves(i) {
            edges.push((wm, leaf));
        }
        if i > 0 {
            edges.push((sharpness_layout::spine(i - 1), v));
        }
    }
    let g = Graph::new(10 * m, &edges)?;
    debug_assert!(g.is_tree());
    Ok(g)
}

/// Generates every canonical rooted level sequence on `size` vertices.
///
/// A rooted tree is canonical when the sequences of its child subtrees are
/// canonical and arranged in non-increasing lexicographic order. The result
/// is sorted descending, so a non-increasing choice of children is the same
/// as a non-decreasing walk over indices.
fn rooted_sequences(size: usize) -> Vec<Vec<u32>> {
    let mut by_size: Vec<Vec<Vec<u32>>> = Vec::with_capacity(size + 1);
    by_size.push(Vec::new());
    for s in 1..=size {
        let mut pool: Vec<(usize, &Vec<u32>)> = Vec::new();
        for (t, seqs) in by_size.iter().enumerate().skip(1) {
            pool.extend(seqs.iter().map(|seq| (t, seq)));
        }
        pool.sort_unstable_by(|a, b| b.1.cmp(a.1));
        let mut out = Vec::new();
        compose_children(&pool, 0, s - 1, &mut Vec::new(), &mut |children| {
            let mut seq = Vec::with_capacity(s);
            seq.push(0);
            for child in children {
                seq.extend(child.iter().map(|&l| l + 1));
            }
            out.push(seq);
        });
        out.sort_unstable_by(|a, b| b.cmp(a));
        by_size.push(out);
    }
    by_size.pop().unwrap_or_default()
}

/// Enumerates non-increasing child multisets from `pool` summing to `rem`.
fn compose_children<'a>(
    pool: &[(usize, &'a Vec<u32>)],
    start: usize,
    rem: usize,
    chosen: &mut Vec<&'a Vec<u32>>,
    emit: &mut impl FnMut(&[&'a Vec<u32>]),
) {
    if rem == 0 {
        emit(chosen);
        return;
    }
    for idx in start..pool.len() {
        let (sz, seq) = pool[idx];
        if sz > rem {
            continue;
        }
        chosen.push(seq);
        compose_children(pool, idx, rem - sz, chosen, emit);
        chosen.pop();
    }
}

/// Streaming enumeration of all unlabeled trees of a fixed order.
///
/// Every tree is yielded exactly once, labeled canonically (its vertex order
/// realizes [`canonical_level_sequence`]). Trees whose centroid is a single
/// vertex are produced first by composing canonical rooted subtrees of size
/// at most `(n - 1) / 2` around the centroid; when `n` is even, trees with a
/// centroid edge follow as unordered pairs of rooted trees on `n / 2`
/// vertices joined at their roots. Memory stays proportional to the rooted
/// sequence pool, never to the number of trees emitted.
pub struct TreeStream {
    n: usize,
    /// Canonical rooted sequences of each size up to the centroid cap,
    /// sorted descending; `path` indexes into this pool non-decreasingly.
    pool: Vec<(usize, Vec<u32>)>,
    path: Vec<usize>,
    cursor: usize,
    rem: usize,
    uni_done: bool,
    /// Rooted sequences on `n / 2` vertices for the centroid-edge phase.
    halves: Vec<Vec<u32>>,
    pair: (usize, usize),
}

/// Streams every unlabeled tree on `n` vertices exactly once.
///
/// # Errors
///
/// Returns [`Error::TooFewVertices`] when `n == 0` and
/// [`Error::OrderTooLarge`] when `n` exceeds [`ENUMERATE_MAX_ORDER`].
pub fn enumerate_trees(n: usize) -> Result<TreeStream, Error> {
    if n == 0 {
        return Err(Error::TooFewVertices { n: 0, min: 1 });
    }
    if n > ENUMERATE_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: ENUMERATE_MAX_ORDER,
        });
    }
    let cap = (n - 1) / 2;
    let mut pool: Vec<(usize, Vec<u32>)> = Vec::new();
    for s in 1..=cap {
        pool.extend(rooted_sequences(s).into_iter().map(|seq| (s, seq)));
    }
    pool.sort_unstable_by(|a, b| b.1.cmp(&a.1));
    let halves = if n.is_multiple_of(2) {
        rooted_sequences(n / 2)
    } else {
        Vec::new()
    };
    Ok(TreeStream {
        n,
        pool,
        path: Vec::new(),
        cursor: 0,
        rem: n - 1,
        uni_done: false,
        halves,
        pair: (0, 0),
    })
}

impl TreeStream {
    /// Advances the depth-first walk over centroid-rooted child multisets.
    fn next_unicentroidal(&mut self) -> Option<Graph> {
        loop {
            if self.rem == 0 {
                let mut seq = Vec::with_capacity(self.n);
                seq.push(0);
                for &idx in &self.path {
                    seq.extend(self.pool[idx].1.iter().map(|&l| l + 1));
                }
                let g = graph_from_level_sequence(&seq)
                    .expect("composed sequence is a valid level sequence");
                match self.path.pop() {
                    Some(idx) => {
                        self.rem += self.pool[idx].0;
                        self.cursor = idx + 1;
                    }
                    None => self.uni_done = true,
                }
                return Some(g);
            }
            while self.cursor < self.pool.len() && self.pool[self.cursor].0 > self.rem {
                self.cursor += 1;
            }
            if self.cursor == self.pool.len() {
                match self.path.pop() {
                    Some(idx) => {
                        self.rem += self.pool[idx].0;
                        self.cursor = idx + 1;
                    }
                    None => {
                        self.uni_done = true;
                        return None;
                    }
                }
            } else {
                self.rem -= self.pool[self.cursor].0;
                self.path.push(self.cursor);
            }
        }
    }

    /// Joins the next unordered pair of half trees at their roots.
    fn next_bicentroidal(&mut self) -> Option<Graph> {
        let (i, j) = self.pair;
        if i >= self.halves.len() {
            return None;
        }
        let h = self.n / 2;
        let mut edges = level_sequence_edges(&self.halves[i], 0);
        edges.extend(level_sequence_edges(&self.halves[j], h));
        edges.push((0, h));
        let g = Graph::new(self.n, &edges).expect("joined halves form a tree");
        debug_assert!(g.is_tree());
        self.pair = if j + 1 < self.halves.len() {
            (i, j + 1)
        } else {
            (i + 1, i + 1)
        };
        Some(canonical_form(&g).expect("joined halves form a tree"))
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.uni_done {
            if let Some(g) = self.next_unicentroidal() {
                return Some(g);
            }
        }
        self.next_bicentroidal()
    }
}

/// Decodes the parent edges of a rooted level sequence, offsetting labels.
fn level_sequence_edges(seq: &[u32], offset: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut ancestors: Vec<usize> = Vec::new();
    for (v, &level) in seq.iter().enumerate() {
        ancestors.truncate(level as usize);
        if let Some(&parent) = ancestors.last() {
            edges.push((parent + offset, v + offset));
        }
        ancestors.push(v);
    }
    edges
}

/// Draws a uniformly random labeled tree on `n` vertices.
///
/// The tree is decoded from a random length `n - 2` sequence over the vertex
/// set, which puts the uniform distribution on labeled trees. The same
/// `(n, seed)` pair always yields the same tree.
///
/// # Panics
///
/// Panics when `n == 0`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n > 0, "random tree needs at least one vertex");
    if n == 1 {
        return Graph::new(1, &[]).expect("single vertex");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();

    let mut degree = alloc::vec![1u32; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<core::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(core::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let core::cmp::Reverse(leaf) = leaves.pop().expect("code leaves a leaf available");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(core::cmp::Reverse(v));
        }
    }
    let core::cmp::Reverse(a) = leaves.pop().expect("two vertices remain");
    let core::cmp::Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    let g = Graph::new(n, &edges).expect("decoded edges form a tree");
    debug_assert!(g.is_tree());
    g
}
