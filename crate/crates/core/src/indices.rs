//! Peripherality, Mostar, Trinajstić and irregularity indices.
//!
//! Everything distance-based goes through [`ClosenessCounts`], the matrix of
//! `n_G(u, v)` = number of vertices strictly closer to `u` than to `v`.
//! Equidistant vertices count toward neither side. It is built once per graph
//! (all-pairs BFS plus an `O(n^3)` counting pass) and every index is read off
//! it. All indices are defined for connected graphs only; disconnected input
//! is rejected with [`Error::Disconnected`].

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::graph::{DistanceMatrix, Graph};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ClosenessCounts {
    n: usize,
    dist: DistanceMatrix,
    /// Row-major, `counts[u * n + v] = n_G(u, v)`.
    counts: Vec<u32>,
}

/// Histogram of `D(x) = d(x, u) - d(x, v)` over all vertices `x`, for one
/// ordered pair `(u, v)`. Bin `k` holds the count for `D = k - offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffHistogram {
    offset: i64,
    bins: Vec<u32>,
}

impl DiffHistogram {
    pub fn count(&self, diff: i64) -> u32 {
        let k = diff + self.offset;
        if k < 0 || k as usize >= self.bins.len() {
            0
        } else {
            self.bins[k as usize]
        }
    }

    /// Largest `|D|` representable; bins outside are empty.
    pub fn radius(&self) -> i64 {
        self.offset
    }

    /// Number of `x` with `D(x) < a`.
    pub fn below(&self, a: i64) -> u32 {
        let upto = (a + self.offset).clamp(0, self.bins.len() as i64) as usize;
        self.bins[..upto].iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let b = &self.bins;
        (0..b.len() / 2).all(|k| b[k] == b[b.len() - 1 - k])
    }
}

impl ClosenessCounts {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::from_distances(g.distance_matrix())
    }

    pub fn from_distances(dist: DistanceMatrix) -> Result<Self> {
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = dist.order();
        let upper: Vec<Vec<(u32, u32)>> = (0..n)
            .into_par_iter()
            .map(|u| {
                let du = dist.row(u);
                (u + 1..n)
                    .map(|v| {
                        let dv = dist.row(v);
                        du.iter().zip(dv).fold((0u32, 0u32), |(lt, gt), (&a, &b)| {
                            (lt + (a < b) as u32, gt + (a > b) as u32)
                        })
                    })
                    .collect()
            })
            .collect();
        let mut counts = vec![0u32; n * n];
        for (u, row) in upper.into_iter().enumerate() {
            for (k, (uv, vu)) in row.into_iter().enumerate() {
                let v = u + 1 + k;
                counts[u * n + v] = uv;
                counts[v * n + u] = vu;
            }
        }
        Ok(ClosenessCounts { n, dist, counts })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// `n_G(u, v)`.
    #[inline]
    pub fn count(&self, u: usize, v: usize) -> u32 {
        self.counts[u * self.n + v]
    }

    pub fn diff_histogram(&self, u: usize, v: usize) -> DiffHistogram {
        let diam = self.dist.diameter().expect("connected by construction") as i64;
        let mut bins = vec![0u32; 2 * diam as usize + 1];
        for (&a, &b) in self.dist.row(u).iter().zip(self.dist.row(v)) {
            bins[(a as i64 - b as i64 + diam) as usize] += 1;
        }
        DiffHistogram { offset: diam, bins }
    }

    /// `n_a(u, v)`: vertices `x` with `d(x, u) < a + d(x, v)`. `a = 0` gives `n_G(u, v)`.
    pub fn shifted_count(&self, a: i64, u: usize, v: usize) -> Result<u32> {
        self.check_pair(u, v)?;
        if a == 0 {
            return Ok(self.count(u, v));
        }
        Ok(self.diff_histogram(u, v).below(a))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::param("pair must have distinct vertices"));
        }
        Ok(())
    }

    fn check_edge(&self, g: &Graph, u: usize, v: usize) -> Result<()> {
        debug_assert_eq!(g.order(), self.n);
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(())
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }

    /// `peri(v)`: vertices `u` with `n_G(u, v) > n_G(v, u)`.
    pub fn peri_vertex(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| self.count(u, v) > self.count(v, u)).count() as u64
    }

    /// Equals the number of unordered pairs with `n_G(u, v) != n_G(v, u)`.
    pub fn peri_graph(&self) -> u64 {
        (0..self.n).map(|v| self.peri_vertex(v)).sum()
    }

    /// Is `({u, v}, x)` a dominant pair: `x` beats both endpoints?
    pub fn is_dominant(&self, g: &Graph, (u, v): (usize, usize), x: usize) -> Result<bool> {
        self.check_edge(g, u, v)?;
        Ok(self.beats(x, u) && self.beats(x, v))
    }

    #[inline]
    fn beats(&self, x: usize, u: usize) -> bool {
        self.count(x, u) > self.count(u, x)
    }

    pub fn eperi_edge(&self, g: &Graph, u: usize, v: usize) -> Result<u64> {
        self.check_edge(g, u, v)?;
        Ok((0..self.n).filter(|&x| self.beats(x, u) && self.beats(x, v)).count() as u64)
    }

    /// Number of dominant pairs, via one "beats" bitset per vertex.
    pub fn eperi_graph(&self, g: &Graph) -> u64 {
        let beaten_by: Vec<FixedBitSet> = (0..self.n)
            .into_par_iter()
            .map(|u| {
                let mut s = FixedBitSet::with_capacity(self.n);
                (0..self.n).filter(|&x| self.beats(x, u)).for_each(|x| s.insert(x));
                s
            })
            .collect();
        (0..self.n)
            .into_par_iter()
            .map(|u| {
                g.neighbors(u)
                    .ones()
                    .filter(|&v| v > u)
                    .map(|v| beaten_by[u].intersection_count(&beaten_by[v]) as u64)
                    .sum::<u64>()
            })
            .sum()
    }

    /// `sum_x n_G(x, u)` for every `u`.
    fn column_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.n];
        for x in 0..self.n {
            for (u, s) in sums.iter_mut().enumerate() {
                *s += self.count(x, u) as u64;
            }
        }
        sums
    }

    pub fn espr_edge(&self, g: &Graph, u: usize, v: usize) -> Result<u64> {
        self.check_edge(g, u, v)?;
        Ok((0..self.n)
            .filter(|&x| x != u && x != v)
            .map(|x| self.count(x, u) as u64 + self.count(x, v) as u64)
            .sum())
    }

    /// The terms `x = u` and `x = v` that the per-edge sum excludes are exactly
    /// `n_G(u, v) + n_G(v, u)`, so each edge is `S(u) + S(v)` minus those.
    pub fn espr_graph(&self, g: &Graph) -> Result<u64> {
        let sums = self.column_sums();
        g.edges().try_fold(0u64, |acc, (u, v)| {
            let e = sums[u] + sums[v] - self.count(u, v) as u64 - self.count(v, u) as u64;
            acc.checked_add(e).ok_or(Error::Overflow("espr"))
        })
    }

    /// `sum_u deg(u) * sum_x n_G(x, u)`. Exceeds `espr_graph` by exactly
    /// `sum over edges of n_G(u, v) + n_G(v, u)`.
    pub fn espr_degree_proxy(&self, g: &Graph) -> Result<u64> {
        let sums = self.column_sums();
        sums.iter().enumerate().try_fold(0u64, |acc, (u, &s)| {
            (g.degree(u) as u64)
                .checked_mul(s)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("espr proxy"))
        })
    }

    #[inline]
    pub fn mostar_pair(&self, u: usize, v: usize) -> u64 {
        self.count(u, v).abs_diff(self.count(v, u)) as u64
    }

    pub fn mostar_graph(&self, g: &Graph) -> u64 {
        g.edges().map(|(u, v)| self.mostar_pair(u, v)).sum()
    }

    pub fn total_mostar(&self) -> u64 {
        self.pairs().map(|(u, v)| self.mostar_pair(u, v)).sum()
    }

    #[inline]
    pub fn nt_pair(&self, u: usize, v: usize) -> u64 {
        let d = self.mostar_pair(u, v);
        d * d
    }

    pub fn nt_graph(&self) -> Result<u64> {
        self.pairs().try_fold(0u64, |acc, (u, v)| {
            acc.checked_add(self.nt_pair(u, v)).ok_or(Error::Overflow("NT"))
        })
    }

    /// `NT(G) = 0`, i.e. `n_G(u, v) = n_G(v, u)` for every pair.
    pub fn is_nt_balanced(&self) -> bool {
        self.pairs().all(|(u, v)| self.count(u, v) == self.count(v, u))
    }

    /// `n_a(u, v) = n_a(v, u)` for every shift `a`, which holds iff every
    /// pair's distance-difference histogram is symmetric about zero.
    pub fn is_ultra_nt_balanced(&self) -> bool {
        self.is_nt_balanced()
            && self
                .pairs()
                .collect::<Vec<_>>()
                .par_iter()
                .all(|&(u, v)| self.diff_histogram(u, v).is_symmetric())
    }
}

pub fn irr_edge(g: &Graph, u: usize, v: usize) -> Result<u64> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(g.degree(u).abs_diff(g.degree(v)) as u64)
}

/// Albertson irregularity. Degree-based, so disconnected graphs are fine here.
pub fn irr_graph(g: &Graph) -> u64 {
    let deg = g.degrees();
    g.edges().map(|(u, v)| deg[u].abs_diff(deg[v]) as u64).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Peri,
    Eperi,
    Espr,
    Mo,
    MoStar,
    Nt,
    Irr,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::Peri,
        IndexKind::Eperi,
        IndexKind::Espr,
        IndexKind::Mo,
        IndexKind::MoStar,
        IndexKind::Nt,
        IndexKind::Irr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Peri => "peri",
            IndexKind::Eperi => "eperi",
            IndexKind::Espr => "espr",
            IndexKind::Mo => "mo",
            IndexKind::MoStar => "mo_star",
            IndexKind::Nt => "nt",
            IndexKind::Irr => "irr",
        }
    }

    /// Evaluates this index from precomputed counts.
    pub fn evaluate(self, g: &Graph, cc: &ClosenessCounts) -> Result<u64> {
        Ok(match self {
            IndexKind::Peri => cc.peri_graph(),
            IndexKind::Eperi => cc.eperi_graph(g),
            IndexKind::Espr => cc.espr_graph(g)?,
            IndexKind::Mo => cc.mostar_graph(g),
            IndexKind::MoStar => cc.total_mostar(),
            IndexKind::Nt => cc.nt_graph()?,
            IndexKind::Irr => irr_graph(g),
        })
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "peri" => Ok(IndexKind::Peri),
            "eperi" => Ok(IndexKind::Eperi),
            "espr" => Ok(IndexKind::Espr),
            "mo" | "mostar" => Ok(IndexKind::Mo),
            "mo_star" | "mo*" | "mostar_total" | "total_mostar" => Ok(IndexKind::MoStar),
            "nt" => Ok(IndexKind::Nt),
            "irr" => Ok(IndexKind::Irr),
            other => Err(Error::param(format!("unknown index {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBreakdown {
    pub u: usize,
    pub v: usize,
    pub eperi: u64,
    pub espr: u64,
    pub mo: u64,
    pub irr: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairBreakdown {
    pub u: usize,
    pub v: usize,
    pub mo: u64,
    pub nt: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Breakdown {
    pub peri: Vec<u64>,
    pub edges: Vec<EdgeBreakdown>,
    pub pairs: Vec<PairBreakdown>,
}

/// Every index of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub peri: u64,
    pub eperi: u64,
    pub espr: u64,
    pub mo: u64,
    pub mo_star: u64,
    pub nt: u64,
    pub irr: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Breakdown>,
}

impl IndexReport {
    pub fn compute(g: &Graph, with_breakdown: bool) -> Result<Self> {
        let cc = ClosenessCounts::new(g)?;
        Self::from_counts(g, &cc, with_breakdown)
    }

    pub fn from_counts(g: &Graph, cc: &ClosenessCounts, with_breakdown: bool) -> Result<Self> {
        let breakdown = if with_breakdown {
            let edges = g
                .edges()
                .map(|(u, v)| {
                    Ok(EdgeBreakdown {
                        u,
                        v,
                        eperi: cc.eperi_edge(g, u, v)?,
                        espr: cc.espr_edge(g, u, v)?,
                        mo: cc.mostar_pair(u, v),
                        irr: irr_edge(g, u, v)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Some(Breakdown {
                peri: (0..g.order()).map(|v| cc.peri_vertex(v)).collect(),
                edges,
                pairs: cc
                    .pairs()
                    .map(|(u, v)| PairBreakdown { u, v, mo: cc.mostar_pair(u, v), nt: cc.nt_pair(u, v) })
                    .collect(),
            })
        } else {
            None
        };
        Ok(IndexReport {
            n: g.order(),
            peri: cc.peri_graph(),
            eperi: cc.eperi_graph(g),
            espr: cc.espr_graph(g)?,
            mo: cc.mostar_graph(g),
            mo_star: cc.total_mostar(),
            nt: cc.nt_graph()?,
            irr: irr_graph(g),
            breakdown,
        })
    }

    pub fn get(&self, kind: IndexKind) -> u64 {
        match kind {
            IndexKind::Peri => self.peri,
            IndexKind::Eperi => self.eperi,
            IndexKind::Espr => self.espr,
            IndexKind::Mo => self.mo,
            IndexKind::MoStar => self.mo_star,
            IndexKind::Nt => self.nt,
            IndexKind::Irr => self.irr,
        }
    }

    /// JSON object restricted to `kinds` (plus `n` and any breakdown), keys sorted.
    pub fn to_json(&self, kinds: &[IndexKind]) -> Value {
        let mut map = Map::new();
        map.insert("n".into(), self.n.into());
        for &k in kinds {
            map.insert(k.name().into(), self.get(k).into());
        }
        if let Some(b) = &self.breakdown {
            map.insert("breakdown".into(), serde_json::to_value(b).expect("plain data"));
        }
        Value::Object(map)
    }
}

/// Checks the general upper bounds and identities every connected graph
/// satisfies, returning a description of each violation:
///
/// - `peri <= C(n, 2)`
/// - `eperi < n^3 / 6` (at most one dominant pair per vertex triple)
/// - `espr <= n^4 / 4`
/// - `NT <= C(n, 2) (n - 2)^2`
/// - `espr_degree_proxy = espr + sum over edges of n(u, v) + n(v, u)`
/// - `NT >= Mo* >= Mo`
pub fn bound_violations(g: &Graph, cc: &ClosenessCounts, report: &IndexReport) -> Result<Vec<String>> {
    let n = g.order() as u128;
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bad = Vec::new();
    let r = report;
    if r.peri as u128 > pairs {
        bad.push(format!("peri {} > C(n,2) = {pairs}", r.peri));
    }
    if 6 * r.eperi as u128 >= n * n * n && n > 0 {
        bad.push(format!("eperi {} >= n^3/6", r.eperi));
    }
    if 4 * r.espr as u128 > n.pow(4) {
        bad.push(format!("espr {} > n^4/4", r.espr));
    }
    let nt_cap = pairs * n.saturating_sub(2).pow(2);
    if r.nt as u128 > nt_cap {
        bad.push(format!("NT {} > C(n,2)(n-2)^2 = {nt_cap}", r.nt));
    }
    let proxy = cc.espr_degree_proxy(g)? as u128;
    let correction: u128 = g
        .edges()
        .map(|(u, v)| cc.count(u, v) as u128 + cc.count(v, u) as u128)
        .sum();
    if proxy != r.espr as u128 + correction {
        bad.push(format!("proxy {proxy} != espr {} + {correction}", r.espr));
    }
    if !(r.nt >= r.mo_star && r.mo_star >= r.mo) {
        bad.push(format!("NT {} >= Mo* {} >= Mo {} fails", r.nt, r.mo_star, r.mo));
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        graph(n, &(0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>())
    }

    fn star(k: usize) -> Graph {
        graph(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
    }

    fn c4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn counts_small() {
        let p3 = path(3);
        let cc = ClosenessCounts::new(&p3).unwrap();
        assert_eq!(cc.count(1, 0), 2);
        assert_eq!(cc.count(0, 1), 1);
        assert_eq!(cc.count(0, 2), 1);
        let cc = ClosenessCounts::new(&complete(5)).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(cc.count(u, v), (u != v) as u32);
            }
        }
        let cc = ClosenessCounts::new(&c4()).unwrap();
        assert_eq!(cc.count(0, 1), 2);
        assert_eq!(cc.count(1, 0), 2);
        assert_eq!(cc.count(0, 2), 1);
    }

    #[test]
    fn rejects_disconnected() {
        let g = graph(3, &[(0, 1)]);
        assert!(matches!(ClosenessCounts::new(&g), Err(Error::Disconnected)));
        assert!(matches!(IndexReport::compute(&g, false), Err(Error::Disconnected)));
    }

    #[test]
    fn shifted_counts() {
        let p4 = path(4);
        let cc = ClosenessCounts::new(&p4).unwrap();
        let diam = 3;
        for u in 0..4 {
            for v in 0..4 {
                if u == v {
                    assert!(cc.shifted_count(0, u, v).is_err());
                    continue;
                }
                assert_eq!(cc.shifted_count(0, u, v).unwrap(), cc.count(u, v));
                assert_eq!(cc.diff_histogram(u, v).below(0), cc.count(u, v));
                assert_eq!(cc.shifted_count(diam + 1, u, v).unwrap(), 4);
                assert_eq!(cc.shifted_count(100, u, v).unwrap(), 4);
                assert_eq!(cc.shifted_count(-(diam + 1), u, v).unwrap(), 0);
                assert_eq!(cc.shifted_count(-100, u, v).unwrap(), 0);
            }
        }
        // d(x,0) - d(x,1) over x = 0..4 is -1, 1, 1, 1
        assert_eq!(cc.shifted_count(1, 0, 1).unwrap(), 1);
        assert_eq!(cc.shifted_count(2, 0, 1).unwrap(), 4);
    }

    #[test]
    fn peri_values() {
        assert_eq!(ClosenessCounts::new(&path(3)).unwrap().peri_graph(), 2);
        assert_eq!(ClosenessCounts::new(&complete(6)).unwrap().peri_graph(), 0);
        // spider with legs 1, 1, 2
        let spider = graph(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        assert_eq!(ClosenessCounts::new(&spider).unwrap().peri_graph(), 9);
    }

    #[test]
    fn eperi_values() {
        let k5 = complete(5);
        assert_eq!(ClosenessCounts::new(&k5).unwrap().eperi_graph(&k5), 0);
        let p4 = path(4);
        assert_eq!(ClosenessCounts::new(&p4).unwrap().eperi_graph(&p4), 0);
        // triangle 0-1-2 with pendant 3 on vertex 2
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let cc = ClosenessCounts::new(&g).unwrap();
        assert_eq!(cc.eperi_graph(&g), 1);
        assert_eq!(cc.eperi_edge(&g, 0, 1).unwrap(), 1);
        assert!(cc.is_dominant(&g, (0, 1), 2).unwrap());
        assert!(matches!(cc.eperi_edge(&g, 0, 3), Err(Error::NotAnEdge(0, 3))));
    }

    #[test]
    fn espr_values() {
        let g = c4();
        let cc = ClosenessCounts::new(&g).unwrap();
        assert_eq!(cc.espr_graph(&g).unwrap(), 24);
        let k3 = complete(3);
        assert_eq!(ClosenessCounts::new(&k3).unwrap().espr_graph(&k3).unwrap(), 6);
        let p3 = path(3);
        let cc = ClosenessCounts::new(&p3).unwrap();
        assert_eq!(cc.espr_graph(&p3).unwrap(), 4);
        assert_eq!(cc.espr_edge(&p3, 0, 1).unwrap(), 2);
        assert!(cc.espr_edge(&p3, 0, 2).is_err());
    }

    #[test]
    fn espr_proxy_values() {
        let k3 = complete(3);
        assert_eq!(ClosenessCounts::new(&k3).unwrap().espr_degree_proxy(&k3).unwrap(), 12);
        let p3 = path(3);
        assert_eq!(ClosenessCounts::new(&p3).unwrap().espr_degree_proxy(&p3).unwrap(), 10);
    }

    #[test]
    fn mostar_values() {
        let p3 = path(3);
        let cc = ClosenessCounts::new(&p3).unwrap();
        assert_eq!(cc.mostar_graph(&p3), 2);
        assert_eq!(cc.total_mostar(), 2);
        assert_eq!(cc.mostar_pair(0, 2), 0);
        let k4 = complete(4);
        assert_eq!(ClosenessCounts::new(&k4).unwrap().mostar_graph(&k4), 0);
    }

    #[test]
    fn nt_values() {
        assert_eq!(ClosenessCounts::new(&path(4)).unwrap().nt_graph().unwrap(), 10);
        assert_eq!(ClosenessCounts::new(&star(3)).unwrap().nt_graph().unwrap(), 12);
        assert_eq!(ClosenessCounts::new(&complete(7)).unwrap().nt_graph().unwrap(), 0);
    }

    #[test]
    fn irr_values() {
        assert_eq!(irr_graph(&c4()), 0);
        assert_eq!(irr_graph(&complete(5)), 0);
        assert_eq!(irr_graph(&star(3)), 6);
        assert_eq!(irr_graph(&path(4)), 2);
        assert_eq!(irr_edge(&path(4), 0, 1).unwrap(), 1);
        assert!(irr_edge(&path(4), 0, 2).is_err());
    }

    #[test]
    fn balance() {
        let cc = ClosenessCounts::new(&complete(5)).unwrap();
        assert!(cc.is_nt_balanced() && cc.is_ultra_nt_balanced());
        let cc = ClosenessCounts::new(&path(3)).unwrap();
        assert!(!cc.is_nt_balanced() && !cc.is_ultra_nt_balanced());
        let cc = ClosenessCounts::new(&c4()).unwrap();
        assert!(cc.is_ultra_nt_balanced());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let r = IndexReport::compute(&g, true).unwrap();
        assert_eq!((r.peri, r.eperi, r.espr, r.mo, r.mo_star, r.nt, r.irr), (0, 0, 0, 0, 0, 0, 0));
    }

    #[test]
    fn report_sums_match_breakdown() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 4)]);
        let r = IndexReport::compute(&g, true).unwrap();
        let b = r.breakdown.as_ref().unwrap();
        assert_eq!(b.peri.iter().sum::<u64>(), r.peri);
        assert_eq!(b.edges.iter().map(|e| e.eperi).sum::<u64>(), r.eperi);
        assert_eq!(b.edges.iter().map(|e| e.espr).sum::<u64>(), r.espr);
        assert_eq!(b.edges.iter().map(|e| e.mo).sum::<u64>(), r.mo);
        assert_eq!(b.edges.iter().map(|e| e.irr).sum::<u64>(), r.irr);
        assert_eq!(b.pairs.iter().map(|p| p.mo).sum::<u64>(), r.mo_star);
        assert_eq!(b.pairs.iter().map(|p| p.nt).sum::<u64>(), r.nt);
        assert_eq!(r.peri, 15);
    }

    #[test]
    fn report_json_field_names() {
        let r = IndexReport::compute(&complete(3), false).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"n":3,"peri":0,"eperi":0,"espr":6,"mo":0,"mo_star":0,"nt":0,"irr":0}"#);
        let only = r.to_json(&[IndexKind::Nt]);
        assert_eq!(only.to_string(), r#"{"n":3,"nt":0}"#);
        let all = r.to_json(&IndexKind::ALL).to_string();
        assert!(all.starts_with(r#"{"eperi":0,"espr":6,"irr":0"#));
    }

    #[test]
    fn index_kind_parse() {
        for k in IndexKind::ALL {
            assert_eq!(k.name().parse::<IndexKind>().unwrap(), k);
        }
        assert!("bogus".parse::<IndexKind>().is_err());
    }
}
