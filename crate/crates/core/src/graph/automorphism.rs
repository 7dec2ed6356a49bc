use super::Graph;

/// True iff some non-identity vertex permutation preserves adjacency.
///
/// Vertices are first split by `(degree, sorted distance profile)`, which any
/// automorphism must preserve. The search then tries, for each vertex `k` in
/// turn, the automorphisms fixing `0..k` and moving `k`; every nontrivial
/// automorphism falls in exactly one of those branches.
pub fn has_nontrivial_automorphism(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    let dm = g.distance_matrix();
    let class: Vec<usize> = {
        let mut profile: Vec<(usize, Vec<u32>)> = (0..n)
            .map(|u| {
                let mut row = dm.row(u).to_vec();
                row.sort_unstable();
                (g.degree(u), row)
            })
            .collect();
        let mut keys = profile.clone();
        keys.sort();
        keys.dedup();
        profile
            .drain(..)
            .map(|p| keys.binary_search(&p).unwrap())
            .collect()
    };

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for k in 0..n {
        for w in k + 1..n {
            if class[w] != class[k] {
                continue;
            }
            map.iter_mut().for_each(|m| *m = usize::MAX);
            used.iter_mut().for_each(|u| *u = false);
            for i in 0..k {
                map[i] = i;
                used[i] = true;
            }
            if !consistent(g, &map, k, w) {
                continue;
            }
            map[k] = w;
            used[w] = true;
            if extend(g, &class, &mut map, &mut used, k + 1) {
                return true;
            }
        }
    }
    false
}

/// Can vertex `u` be mapped to `img` given the assignments already in `map`?
fn consistent(g: &Graph, map: &[usize], u: usize, img: usize) -> bool {
    map.iter()
        .enumerate()
        .filter(|&(_, &m)| m != usize::MAX)
        .all(|(x, &mx)| g.has_edge(u, x) == g.has_edge(img, mx))
}

fn extend(g: &Graph, class: &[usize], map: &mut [usize], used: &mut [bool], u: usize) -> bool {
    let n = g.order();
    if u == n {
        return true;
    }
    for img in 0..n {
        if used[img] || class[img] != class[u] || !consistent(g, map, u, img) {
            continue;
        }
        map[u] = img;
        used[img] = true;
        if extend(g, class, map, used, u + 1) {
            return true;
        }
        map[u] = usize::MAX;
        used[img] = false;
    }
    false
}
