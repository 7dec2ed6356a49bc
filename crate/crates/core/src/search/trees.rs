//! Direct generation of non-isomorphic free trees, rooted at their centre.
//!
//! A catalog of rooted trees is built bottom-up, each tree stored as a
//! non-decreasing multiset of child ids, which makes rooted isomorphism
//! classes unique by construction. A free tree with a central vertex of radius
//! `h` is a root whose children have height `<= h - 1`, at least two of them
//! exactly `h - 1`. A bicentral tree is an unordered pair of rooted trees of
//! equal height joined at their roots. Since the centre is unique, every free
//! tree is produced exactly once.

use fixedbitset::FixedBitSet;

use crate::{Error, Graph, Result};

pub const MAX_TREE_ORDER: usize = 12;

#[derive(Clone, Debug)]
struct Rooted {
    size: usize,
    height: usize,
    children: Vec<usize>,
}

struct Catalog {
    trees: Vec<Rooted>,
}

impl Catalog {
    /// All rooted trees with at most `max_size` vertices, ids ordered by size.
    fn new(max_size: usize) -> Self {
        let mut cat = Catalog { trees: Vec::new() };
        for size in 1..=max_size {
            let mut found = Vec::new();
            cat.multisets(size - 1, 0, usize::MAX, &mut Vec::new(), &mut |children| {
                found.push(children.to_vec())
            });
            for children in found {
                let height = children
                    .iter()
                    .map(|&c| cat.trees[c].height + 1)
                    .max()
                    .unwrap_or(0);
                cat.trees.push(Rooted { size, height, children });
            }
        }
        cat
    }

    /// Non-decreasing id sequences starting at `min_id`, of total size
    /// `remaining`, using only trees of height `<= max_height`.
    fn multisets(
        &self,
        remaining: usize,
        min_id: usize,
        max_height: usize,
        current: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            emit(current);
            return;
        }
        for id in min_id..self.trees.len() {
            let t = &self.trees[id];
            if t.size > remaining {
                break;
            }
            if t.height > max_height {
                continue;
            }
            current.push(id);
            self.multisets(remaining - t.size, id, max_height, current, emit);
            current.pop();
        }
    }

    fn build(&self, roots: &[usize], joined: bool) -> Graph {
        let n: usize = roots.iter().map(|&r| self.trees[r].size).sum::<usize>() + usize::from(!joined);
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut next = 0;
        let link = |adj: &mut Vec<FixedBitSet>, a: usize, b: usize| {
            adj[a].insert(b);
            adj[b].insert(a);
        };
        if joined {
            let a = self.place(roots[0], &mut next, &mut adj);
            let b = self.place(roots[1], &mut next, &mut adj);
            link(&mut adj, a, b);
        } else {
            let centre = next;
            next += 1;
            for &c in roots {
                let r = self.place(c, &mut next, &mut adj);
                link(&mut adj, centre, r);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Lays out tree `id` in preorder starting at `*next`; returns its root.
    fn place(&self, id: usize, next: &mut usize, adj: &mut Vec<FixedBitSet>) -> usize {
        let root = *next;
        *next += 1;
        for &c in &self.trees[id].children {
            let r = self.place(c, next, adj);
            adj[root].insert(r);
            adj[r].insert(root);
        }
        root
    }
}

/// One representative per isomorphism class of free trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    let cat = Catalog::new(n - 1);
    let mut out = Vec::new();

    // unicentral, radius h
    for h in 1..=(n - 1) / 2 {
        let mut sets = Vec::new();
        cat.multisets(n - 1, 0, h - 1, &mut Vec::new(), &mut |c| {
            if c.iter().filter(|&&id| cat.trees[id].height == h - 1).count() >= 2 {
                sets.push(c.to_vec());
            }
        });
        out.extend(sets.iter().map(|c| cat.build(c, false)));
    }

    // bicentral
    for a in 0..cat.trees.len() {
        for b in a..cat.trees.len() {
            let (ta, tb) = (&cat.trees[a], &cat.trees[b]);
            if ta.size + tb.size == n && ta.height == tb.height {
                out.push(cat.build(&[a, b], true));
            }
        }
    }
    Ok(out)
}
