//! Canonical labeling for small graphs (`n <= 16`).
//!
//! Individualization-refinement: the ordered partition is refined to an
//! equitable one, the first non-singleton cell is split by individualizing each
//! of its vertices in turn, and every discrete leaf yields a labeling. The
//! canonical form is the labeling with the lexicographically largest upper
//! triangle (graph6 bit order). Individualizing `b` after its twin `a` is
//! skipped: swapping twins fixes every other vertex, so both subtrees produce
//! the same set of leaf keys.

use crate::Graph;

pub const MAX_CANON_ORDER: usize = 16;

/// Canonical key plus the labeling that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Upper triangle in graph6 bit order, most significant bit first.
    pub key: u128,
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<u8>,
}

pub fn canonical_form(masks: &[u16]) -> Canonical {
    let n = masks.len();
    assert!(n <= MAX_CANON_ORDER);
    let mut best = None;
    if n == 0 {
        return Canonical { key: 0, position: Vec::new() };
    }
    let cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    search(masks, cells, &mut best);
    best.expect("at least one leaf")
}

/// The canonically relabeled graph.
pub fn canonical_graph(g: &Graph) -> Graph {
    let masks = g.small_masks();
    let c = canonical_form(&masks);
    Graph::from_small_masks(&relabel_masks(&masks, &c.position))
}

pub(crate) fn relabel_masks(masks: &[u16], position: &[u8]) -> Vec<u16> {
    let mut out = vec![0u16; masks.len()];
    for (u, &m) in masks.iter().enumerate() {
        let pu = position[u] as usize;
        for (v, &pv) in position.iter().enumerate() {
            if m >> v & 1 == 1 {
                out[pu] |= 1 << pv;
            }
        }
    }
    out
}

fn cell_mask(cell: &[u8]) -> u16 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

fn refine(masks: &[u16], cells: &mut Vec<Vec<u8>>) {
    'restart: loop {
        for ci in 0..cells.len() {
            if cells[ci].len() == 1 {
                continue;
            }
            for wi in 0..cells.len() {
                let w = cell_mask(&cells[wi]);
                let deg = |v: u8| (masks[v as usize] & w).count_ones();
                let first = deg(cells[ci][0]);
                if cells[ci].iter().all(|&v| deg(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[ci]);
                cell.sort_by_key(|&v| (deg(v), v));
                let mut parts: Vec<Vec<u8>> = Vec::new();
                let mut last = None;
                for v in cell {
                    if last != Some(deg(v)) {
                        parts.push(Vec::new());
                        last = Some(deg(v));
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(ci..=ci, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn leaf_key(masks: &[u16], cells: &[Vec<u8>]) -> (u128, Vec<u8>) {
    let n = masks.len();
    let mut position = vec![0u8; n];
    let mut vertex_at = vec![0u8; n];
    for (i, c) in cells.iter().enumerate() {
        position[c[0] as usize] = i as u8;
        vertex_at[i] = c[0];
    }
    let mut key = 0u128;
    for j in 1..n {
        let vj = vertex_at[j] as usize;
        for &vi in &vertex_at[..j] {
            key = key << 1 | (masks[vj] >> vi & 1) as u128;
        }
    }
    (key, position)
}

fn search(masks: &[u16], mut cells: Vec<Vec<u8>>, best: &mut Option<Canonical>) {
    refine(masks, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let (key, position) = leaf_key(masks, &cells);
        if best.as_ref().is_none_or(|b| key > b.key) {
            *best = Some(Canonical { key, position });
        }
        return;
    };
    let mut tried: Vec<u8> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&t| twins(masks, t, v)) {
            continue;
        }
        tried.push(v);
        let rest: Vec<u8> = cells[target].iter().copied().filter(|&x| x != v).collect();
        let mut child = cells.clone();
        child.splice(target..=target, [vec![v], rest]);
        search(masks, child, best);
    }
}

fn twins(masks: &[u16], a: u8, b: u8) -> bool {
    let clear = !(1u16 << a | 1u16 << b);
    masks[a as usize] & clear == masks[b as usize] & clear
}
