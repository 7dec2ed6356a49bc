//! Deterministic generators for the named graph families.
//!
//! Every generator documents its vertex labeling so that serialized witnesses
//! are reproducible.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Graph, Result};

/// `(sqrt(3) - 1) / 2`, the geometric ratio of clique sizes in [`eperi_extremal`].
pub const ALPHA: f64 = 0.366_025_403_784_438_6;

/// Guard added before flooring `s * alpha^i` so values that are analytically
/// integral do not round down.
const FLOOR_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Star,
    Spider,
    BalancedSpider,
    EperiExtremal,
    EsprExtremal,
    PendantClique,
    RhombicDodecahedron,
    RhombicTriacontahedron,
    Table1Witness,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::CompleteMultipartite,
        Family::Star,
        Family::Spider,
        Family::BalancedSpider,
        Family::EperiExtremal,
        Family::EsprExtremal,
        Family::PendantClique,
        Family::RhombicDodecahedron,
        Family::RhombicTriacontahedron,
        Family::Table1Witness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Star => "star",
            Family::Spider => "spider",
            Family::BalancedSpider => "balanced_spider",
            Family::EperiExtremal => "eperi_extremal",
            Family::EsprExtremal => "espr_extremal",
            Family::PendantClique => "pendant_clique",
            Family::RhombicDodecahedron => "rhombic_dodecahedron",
            Family::RhombicTriacontahedron => "rhombic_triacontahedron",
            Family::Table1Witness => "table1_witness",
        }
    }

    /// Required parameter count, or `None` for variable arity.
    fn arity(self) -> Option<usize> {
        match self {
            Family::Path
            | Family::Cycle
            | Family::Complete
            | Family::Star
            | Family::EperiExtremal
            | Family::EsprExtremal
            | Family::PendantClique => Some(1),
            Family::CompleteBipartite | Family::BalancedSpider | Family::Table1Witness => Some(2),
            Family::RhombicDodecahedron | Family::RhombicTriacontahedron => Some(0),
            Family::Spider | Family::CompleteMultipartite => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::param(format!("unknown family {s:?}")))
    }
}

/// A family tag plus its integer parameters.
///
/// `table1_witness` takes `[n, class]` with class `0` for trees and `1` for
/// connected graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl ConstructionSpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        ConstructionSpec { family, params }
    }

    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        if let Some(k) = self.family.arity() {
            if p.len() != k {
                return Err(Error::param(format!(
                    "{} takes {k} parameter(s), got {}",
                    self.family,
                    p.len()
                )));
            }
        }
        match self.family {
            Family::Path => path(p[0]),
            Family::Cycle => cycle(p[0]),
            Family::Complete => complete(p[0]),
            Family::CompleteBipartite => complete_bipartite(p[0], p[1]),
            Family::CompleteMultipartite => complete_multipartite(p),
            Family::Star => star(p[0]),
            Family::Spider => spider(p),
            Family::BalancedSpider => balanced_spider(p[0], p[1]),
            Family::EperiExtremal => eperi_extremal(p[0]),
            Family::EsprExtremal => espr_extremal(p[0]),
            Family::PendantClique => pendant_clique(p[0]),
            Family::RhombicDodecahedron => Ok(rhombic_dodecahedron()),
            Family::RhombicTriacontahedron => Ok(rhombic_triacontahedron()),
            Family::Table1Witness => {
                let class = match p[1] {
                    0 => WitnessClass::Trees,
                    1 => WitnessClass::Graphs,
                    c => return Err(Error::param(format!("witness class must be 0 or 1, got {c}"))),
                };
                table1_witness(p[0], class)
            }
        }
    }
}

fn positive(what: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::param(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    positive("path length", n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("clique size", n)?;
    complete_multipartite(&vec![1; n])
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// Parts are consecutive index blocks in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::param("empty family"));
    }
    for &p in parts {
        positive("part size", p)?;
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    balanced_spider(k, 1)
}

/// Centre 0; leg `j` occupies the next `legs[j]` indices, nearest the centre first.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(Error::param("spider needs at least one leg"));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        if len == 0 {
            return Err(Error::param("spider legs must have length at least 1"));
        }
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges)
}

/// `S_{a,b}`: `a` legs of length `b`, `ab + 1` vertices, centre 0.
pub fn balanced_spider(a: usize, b: usize) -> Result<Graph> {
    positive("leg count", a)?;
    positive("leg length", b)?;
    spider(&vec![b; a])
}

/// Clique sizes and chain lengths of [`eperi_extremal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EperiLayout {
    pub s: usize,
    pub i_max: usize,
    /// Clique sizes for `i = -1, 0, ..., i_max`.
    pub clique_sizes: Vec<usize>,
    /// Chain lengths for the same indices: `2 i_max + 1 - 2i`.
    pub chain_lengths: Vec<usize>,
}

impl EperiLayout {
    pub fn new(s: usize) -> Result<Self> {
        if s < 4 {
            return Err(Error::param("eperi_extremal needs s >= 4"));
        }
        let sf = s as f64;
        let mut clique_sizes = vec![floor_guarded(sf / (1.0 - ALPHA))];
        let mut i = 0i32;
        loop {
            let x = sf * ALPHA.powi(i);
            if x + FLOOR_EPS < 1.0 {
                break;
            }
            clique_sizes.push(floor_guarded(x));
            i += 1;
        }
        let i_max = (i - 1) as usize;
        let chain_lengths = (0..clique_sizes.len()).map(|k| 2 * i_max + 3 - 2 * k).collect();
        Ok(EperiLayout { s, i_max, clique_sizes, chain_lengths })
    }

    pub fn order(&self) -> usize {
        1 + self.clique_sizes.iter().sum::<usize>() + self.chain_lengths.iter().sum::<usize>()
    }

    /// Vertices in the arm through the largest clique, chain included.
    pub fn largest_arm(&self) -> usize {
        self.clique_sizes[0] + self.chain_lengths[0]
    }
}

fn floor_guarded(x: f64) -> usize {
    (x + FLOOR_EPS).floor() as usize
}

/// Clique chain with geometrically shrinking cliques hung off one centre.
///
/// Cliques `K_{floor(s/(1-alpha))}` (index `-1`) and `K_{floor(s alpha^i)}` for
/// `i = 0..=i_max`, where `i_max` is the last `i` with `s alpha^i >= 1`. Clique
/// `i` reaches the centre through a path of `2 i_max + 1 - 2i` chain vertices.
///
/// Labeling: centre `0`; then clique vertices, clique `-1` first; then chain
/// vertices, chain `-1` first, each chain ordered from its clique end to its
/// centre end. The first vertex of each clique is its attachment point.
pub fn eperi_extremal(s: usize) -> Result<Graph> {
    let layout = EperiLayout::new(s)?;
    let n = layout.order();
    if 2 * layout.largest_arm() >= n {
        return Err(Error::param(format!(
            "s = {s}: the largest arm has {} of {n} vertices, not less than half",
            layout.largest_arm()
        )));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    let mut anchors = Vec::new();
    for &size in &layout.clique_sizes {
        anchors.push(next);
        for u in next..next + size {
            for v in u + 1..next + size {
                edges.push((u, v));
            }
        }
        next += size;
    }
    for (&anchor, &len) in anchors.iter().zip(&layout.chain_lengths) {
        let mut prev = anchor;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
    }
    debug_assert_eq!(next, n);
    Graph::from_edge_list(n, &edges)
}

/// `n = 4s + 1` vertices: cliques on each of the groups `a, b, c, d`
/// (`s` vertices each), complete joins `a-b` and `c-d`, and a hub `v` joined to
/// every `b` and every `c`.
///
/// Labeling: `a_i = i`, `b_i = s + i`, `c_i = 2s + i`, `d_i = 3s + i`, `v = 4s`.
pub fn espr_extremal(s: usize) -> Result<Graph> {
    positive("s", s)?;
    let n = 4 * s + 1;
    let hub = 4 * s;
    let group = |u: usize| if u == hub { 4 } else { u / s };
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            matches!(
                (group(u), group(v)),
                (0, 0) | (1, 1) | (2, 2) | (3, 3) | (0, 1) | (2, 3) | (1, 4) | (2, 4)
            )
        })
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Clique on `ceil(n/2)` vertices `0..k` with `floor(n/2)` pendants: pendant
/// `k + i` hangs off clique vertex `i`, so for odd `n` the highest clique
/// vertex is left bare.
pub fn pendant_clique(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param("pendant_clique needs n >= 2"));
    }
    let k = n.div_ceil(2);
    let mut edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    edges.extend((0..n / 2).map(|i| (i, k + i)));
    Graph::from_edge_list(n, &edges)
}

/// Vertex-face incidence graph of the cube: vertices `0..8` are cube corners
/// (bit `c` of the index is coordinate `c`), `8 + 2c + b` is the face
/// `coordinate c == b`.
pub fn rhombic_dodecahedron() -> Graph {
    let mut edges = Vec::with_capacity(24);
    for corner in 0..8usize {
        for c in 0..3 {
            let b = corner >> c & 1;
            edges.push((corner, 8 + 2 * c + b));
        }
    }
    Graph::from_edge_list(14, &edges).expect("static incidence structure")
}

/// Pentagonal faces of the regular dodecahedron over vertices `0..20`.
///
/// Vertex numbering: the cube corners `(±1, ±1, ±1)` are `0..8` (bit 2, 1, 0 of
/// the index set means `x`, `y`, `z` negative), followed by `(0, ±1/φ, ±φ)` as
/// `8..12`, `(±1/φ, ±φ, 0)` as `12..16` and `(±φ, 0, ±1/φ)` as `16..20`, each
/// block in the same sign order.
pub const DODECAHEDRON_FACES: [[usize; 5]; 12] = [
    [0, 8, 4, 14, 12],
    [0, 8, 10, 2, 16],
    [0, 12, 1, 17, 16],
    [1, 9, 5, 14, 12],
    [1, 9, 11, 3, 17],
    [2, 10, 6, 15, 13],
    [2, 13, 3, 17, 16],
    [3, 11, 7, 15, 13],
    [4, 8, 10, 6, 18],
    [4, 14, 5, 19, 18],
    [5, 9, 11, 7, 19],
    [6, 15, 7, 19, 18],
];

/// Vertex-face incidence graph of the dodecahedron: vertices `0..20` as in
/// [`DODECAHEDRON_FACES`], face `f` is vertex `20 + f`.
pub fn rhombic_triacontahedron() -> Graph {
    let edges: Vec<_> = DODECAHEDRON_FACES
        .iter()
        .enumerate()
        .flat_map(|(f, face)| face.iter().map(move |&v| (v, 20 + f)))
        .collect();
    Graph::from_edge_list(32, &edges).expect("static incidence structure")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessClass {
    Trees,
    Graphs,
}

/// The graph attaining the maximum `peri` over `n`-vertex trees or connected
/// graphs, `3 <= n <= 8`.
pub fn table1_witness(n: usize, class: WitnessClass) -> Result<Graph> {
    use WitnessClass::*;
    match (n, class) {
        (3, _) => path(3),
        (4, Trees) => path(4),
        // triangle 0-1-2 with a pendant on 2
        (4, Graphs) => Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
        (5, _) => spider(&[1, 1, 2]),
        (6, Trees) => spider(&[1, 2, 2]),
        (6, Graphs) => Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 4)]),
        (7, _) => spider(&[1, 2, 3]),
        (8, Trees) => spider(&[1, 1, 2, 3]),
        (8, Graphs) => Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 5)],
        ),
        _ => Err(Error::param(format!("no table witness for n = {n}; supported range is 3..=8"))),
    }
}
