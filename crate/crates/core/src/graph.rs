//! Finite simple graphs over vertices `0..n` with bitset adjacency rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::error::Error;

/// Largest supported graph order; everything here is exact combinatorics and
/// the verification sweeps stay far below this.
pub const MAX_ORDER: usize = 10_000;

/// Undirected simple graph. Adjacency is stored as one [`VertexSet`] row per
/// vertex; rows are kept symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Rejects endpoints `>= n`, self-loops and duplicate edges (in either
    /// orientation), and orders above [`MAX_ORDER`].
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
            m += 1;
        }
        Ok(Graph { n, adj, m })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighborhood of `v` as a set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency rows packed into one word each; available when `n <= 64`.
    pub(crate) fn adjacency_words(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.adj.iter().map(|row| row.to_word()).collect())
    }

    /// Vertices of degree exactly one.
    pub fn endvertices(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) == 1 {
                s.insert(v);
            }
        }
        s
    }

    /// Breadth-first traversal from `root`: visit order plus parent links.
    /// Only the component of `root` is visited.
    pub(crate) fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        debug_assert!(root < self.n);
        let mut parent = vec![None; self.n];
        let mut seen = VertexSet::empty(self.n);
        seen.insert(root);
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for w in self.adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    parent[w] = Some(u);
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs(0).0.len() == self.n
    }

    /// A tree is a connected graph with `n - 1` edges; the empty graph is not
    /// a tree, the single vertex is.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `keep`; `labels[local] = original` maps the new
    /// indices (assigned in ascending original order) back.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = keep.elements();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &labels {
            for w in self.adj[v].iter() {
                if v < w && keep.contains(w) {
                    edges.push((local[v], local[w]));
                }
            }
        }
        let g = Graph::new(labels.len(), &edges).expect("induced subgraph is valid");
        (g, labels)
    }

    /// Components of `t - v` for a tree `t`, one per neighbor of `v`, in
    /// ascending neighbor order. Each component is rooted at that neighbor.
    pub fn remove_vertex_components(&self, v: usize) -> Result<Vec<RootedComponent>, Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let mut out = Vec::with_capacity(self.degree(v));
        for root in self.adj[v].iter() {
            // Collect the subtree hanging off `root` away from `v`.
            let mut keep = VertexSet::empty(self.n);
            keep.insert(root);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if w != v && !keep.contains(w) {
                        keep.insert(w);
                        stack.push(w);
                    }
                }
            }
            let (graph, labels) = self.induced(&keep);
            let local_root = labels.binary_search(&root).expect("root is kept");
            out.push(RootedComponent { graph, root: local_root, labels });
        }
        Ok(out)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// One component of `t - v`, relabeled to `0..size`, with its attachment
/// point. `labels[local] = original vertex`, and `root` is the local index of
/// the unique former neighbor of `v` in this component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedComponent {
    pub graph: Graph,
    pub root: usize,
    pub labels: Vec<usize>,
}
