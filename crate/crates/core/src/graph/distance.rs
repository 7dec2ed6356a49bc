use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::Graph;
use crate::{Error, Result};

/// Distance between vertices in different components. Compares greater than
/// every finite distance.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// One frontier-bitset BFS per source. Each level costs `O(|frontier| * n / 64)`
    /// word operations, which beats adjacency-list BFS on the dense graphs used
    /// by the extremal families.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![UNREACHABLE; n * n];
        dist.par_chunks_mut(n.max(1))
            .enumerate()
            .for_each(|(src, row)| bfs_row(g, src, row));
        DistanceMatrix { n, dist }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return Err(Error::Disconnected);
            }
            best = best.max(d);
        }
        Ok(best as usize)
    }
}

fn bfs_row(g: &Graph, src: usize, row: &mut [u32]) {
    let n = g.order();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut frontier = FixedBitSet::with_capacity(n);
    let mut next = FixedBitSet::with_capacity(n);
    seen.insert(src);
    frontier.insert(src);
    row[src] = 0;
    let mut level = 0;
    while !frontier.is_clear() {
        level += 1;
        next.clear();
        for u in frontier.ones() {
            next.union_with(g.neighbors(u));
        }
        next.difference_with(&seen);
        for v in next.ones() {
            row[v] = level;
        }
        seen.union_with(&next);
        std::mem::swap(&mut frontier, &mut next);
    }
}
