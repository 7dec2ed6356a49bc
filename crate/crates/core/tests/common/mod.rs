#![allow(dead_code)]

use std::collections::BTreeSet;

use periscope::Graph;

/// Floyd-Warshall over the adjacency predicate.
#[allow(clippy::needless_range_loop)]
pub fn floyd(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                d[u][v] = 0;
            } else if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Vertices strictly closer to `u` than to `v`.
pub fn closer(d: &[Vec<u64>], u: usize, v: usize) -> u64 {
    (0..d.len()).filter(|&x| d[x][u] < d[x][v]).count() as u64
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct OracleIndices {
    pub peri: u64,
    pub eperi: u64,
    pub espr: u64,
    pub mo: u64,
    pub mo_star: u64,
    pub nt: u64,
    pub irr: u64,
}

/// Every index straight from its definition.
pub fn oracle_indices(g: &Graph) -> OracleIndices {
    let n = g.order();
    let d = floyd(g);
    let nn = |u, v| closer(&d, u, v);
    let mut o = OracleIndices::default();
    for v in 0..n {
        for u in 0..n {
            if u != v && nn(u, v) > nn(v, u) {
                o.peri += 1;
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let diff = nn(u, v).abs_diff(nn(v, u));
            o.mo_star += diff;
            o.nt += diff * diff;
            if g.has_edge(u, v) {
                o.mo += diff;
                o.irr += (g.degree(u) as u64).abs_diff(g.degree(v) as u64);
                for x in 0..n {
                    if nn(x, u) > nn(u, x) && nn(x, v) > nn(v, x) {
                        o.eperi += 1;
                    }
                    if x != u && x != v {
                        o.espr += nn(x, u) + nn(x, v);
                    }
                }
            }
        }
    }
    o
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle adjacency bits of `g` relabelled by `perm` (`perm[old] = new`).
pub fn bits_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
        bits |= 1 << idx;
    }
    bits
}

/// Smallest adjacency code over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| bits_under(g, p)).min().unwrap()
}

pub fn brute_has_nontrivial_automorphism(g: &Graph, perms: &[Vec<usize>]) -> bool {
    let id = bits_under(g, &(0..g.order()).collect::<Vec<_>>());
    perms
        .iter()
        .any(|p| p.iter().enumerate().any(|(i, &j)| i != j) && bits_under(g, p) == id)
}

/// Canonical codes of every connected labelled graph on `n` vertices.
pub fn labelled_connected_classes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            classes.insert(brute_canonical(&g, &perms));
        }
    }
    classes
}
