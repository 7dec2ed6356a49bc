//! Simple undirected graphs with bitset adjacency.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] is immutable once built;
//! every constructor validates the edge list, so downstream code can rely on
//! symmetric, loop-free adjacency.

mod automorphism;
mod distance;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use automorphism::has_nontrivial_automorphism;
pub use distance::{DistanceMatrix, UNREACHABLE};
pub use graph6::{parse_graph6, to_graph6};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

/// Human-editable edge-list form: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from `(u, v)` pairs. Duplicate pairs collapse into one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Trusted constructor: `adj` must already be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Self {
        let n = adj.len();
        debug_assert!((0..n).all(|u| !adj[u].contains(u)));
        debug_assert!((0..n).all(|u| adj[u].ones().all(|v| adj[v].contains(u))));
        let edge_count = adj.iter().map(|s| s.count_ones(..)).sum::<usize>() / 2;
        Graph { n, adj, edge_count }
    }

    pub fn from_json(json: &EdgeListJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edge_list(json.n, &edges)
    }

    pub fn to_json(&self) -> EdgeListJson {
        EdgeListJson {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut queue = VecDeque::from([0]);
        seen.insert(0);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].ones() {
                if !seen.put(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.is_full()
    }

    /// Largest finite distance. Errors on disconnected input, where the
    /// diameter is undefined.
    pub fn diameter(&self) -> Result<usize> {
        self.distance_matrix().diameter()
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    /// Two-colouring by BFS, or `None` if the graph has an odd cycle. In each
    /// component the lowest vertex goes to `side_a`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in self.adj[u].ones() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut side_a = FixedBitSet::with_capacity(self.n);
        let mut side_b = FixedBitSet::with_capacity(self.n);
        for (u, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                side_a.insert(u);
            } else {
                side_b.insert(u);
            }
        }
        Some(Bipartition { side_a, side_b })
    }

    /// Cartesian product `self □ other`. Vertex `(i, j)` gets index
    /// `i * other.order() + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let n = self.n * m;
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..self.n {
            for j in 0..m {
                let z = i * m + j;
                for j2 in other.adj[j].ones() {
                    adj[z].insert(i * m + j2);
                }
                for i2 in self.adj[i].ones() {
                    adj[z].insert(i2 * m + j);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Relabels vertices: old vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from vertex count"));
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        for &p in perm {
            if p >= self.n || seen.put(p) {
                return Err(Error::param("not a permutation"));
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(self.n); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Adjacency rows as `u16` masks; only meaningful for `n <= 16`.
    pub(crate) fn small_masks(&self) -> Vec<u16> {
        debug_assert!(self.n <= 16);
        self.adj
            .iter()
            .map(|s| s.ones().fold(0u16, |m, v| m | (1 << v)))
            .collect()
    }

    pub(crate) fn from_small_masks(masks: &[u16]) -> Graph {
        let n = masks.len();
        let adj = masks
            .iter()
            .map(|&m| {
                let mut s = FixedBitSet::with_capacity(n);
                (0..n).filter(|&v| m >> v & 1 == 1).for_each(|v| s.insert(v));
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A proper 2-colouring of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: FixedBitSet,
    pub side_b: FixedBitSet,
}

impl Bipartition {
    pub fn sizes(&self) -> (usize, usize) {
        (self.side_a.count_ones(..), self.side_b.count_ones(..))
    }

    /// Checks the invariants against `g`: disjoint, covering, no edge inside a side.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.side_a.len() != n || self.side_b.len() != n {
            return false;
        }
        if !self.side_a.is_disjoint(&self.side_b) || self.side_a.union_count(&self.side_b) != n {
            return false;
        }
        g.edges()
            .all(|(u, v)| self.side_a.contains(u) != self.side_a.contains(v))
    }
}
