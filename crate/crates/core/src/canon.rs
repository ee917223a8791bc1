//! Canonical level sequences: the identity of a tree.
//!
//! A rooted tree maps to its depth sequence in DFS preorder with subtrees
//! visited in non-increasing lexicographic order of their own sequences; two
//! rooted trees are isomorphic exactly when these sequences match. A free
//! tree is canonicalized by rooting at its centroid (taking the larger
//! sequence when there are two centroids). Sequences start at level 0 for
//! the root.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;

/// Canonical depth sequence of `t` rooted at `root`.
pub fn rooted_level_sequence(t: &Graph, root: usize) -> Result<Vec<u32>, Error> {
    if root >= t.n() {
        return Err(Error::VertexOutOfRange { v: root, n: t.n() });
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(sort_subtree(t, root, usize::MAX, 0))
}

fn sort_subtree(t: &Graph, u: usize, parent: usize, depth: u32) -> Vec<u32> {
    let mut subs: Vec<Vec<u32>> = t
        .neighbors(u)
        .iter()
        .filter(|&w| w != parent)
        .map(|w| sort_subtree(t, w, u, depth + 1))
        .collect();
    subs.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::with_capacity(1 + subs.iter().map(Vec::len).sum::<usize>());
    out.push(depth);
    for s in subs {
        out.extend_from_slice(&s);
    }
    out
}

/// The one or two centroids of a tree (vertices minimizing the largest
/// component of their removal), ascending.
pub fn centroids(t: &Graph) -> Result<Vec<usize>, Error> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if n == 1 {
        return Ok(vec![0]);
    }
    let (order, parent) = t.bfs(0);
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            size[p] += size[u];
        }
    }
    let weight = |v: usize| -> usize {
        let mut w = n - size[v];
        for c in t.neighbors(v).iter() {
            if parent[c] == Some(v) {
                w = w.max(size[c]);
            }
        }
        w
    };
    let best = (0..n).map(weight).min().expect("n >= 1");
    Ok((0..n).filter(|&v| weight(v) == best).collect())
}

/// Canonical level sequence of a free tree: the lexicographically largest
/// centroid-rooted sequence.
pub fn canonical_level_sequence(t: &Graph) -> Result<Vec<u32>, Error> {
    let cs = centroids(t)?;
    cs.iter()
        .map(|&c| rooted_level_sequence(t, c))
        .try_fold(Vec::new(), |best, seq| {
            let seq = seq?;
            Ok(if seq > best { seq } else { best })
        })
}

/// Rebuilds the tree described by a level sequence; vertex `i` is the `i`-th
/// entry, so the labeling is the canonical DFS preorder.
pub fn graph_from_level_sequence(seq: &[u32]) -> Result<Graph, Error> {
    if seq.is_empty() || seq[0] != 0 {
        return Err(Error::InvalidLevelSequence);
    }
    // ancestor[d] = most recent vertex seen at depth d.
    let mut ancestor = vec![0usize; seq.len()];
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    for (i, &lvl) in seq.iter().enumerate().skip(1) {
        let d = lvl as usize;
        if d == 0 || lvl > seq[i - 1] + 1 {
            return Err(Error::InvalidLevelSequence);
        }
        edges.push((ancestor[d - 1], i));
        ancestor[d] = i;
    }
    let g = Graph::new(seq.len(), &edges)?;
    debug_assert!(g.is_tree());
    Ok(g)
}

/// Isomorphism-invariant relabeling: the canonical sequence rebuilt as a
/// graph. Isomorphic trees yield identical labeled graphs.
pub fn canonical_form(t: &Graph) -> Result<Graph, Error> {
    graph_from_level_sequence(&canonical_level_sequence(t)?)
}
