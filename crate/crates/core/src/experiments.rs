//! Ratio sweeps over the extremal families, the ultra NT-balance closure
//! check for Cartesian products, and the Monte-Carlo irregularity study.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{balanced_spider, complete_multipartite, eperi_extremal, espr_extremal, pendant_clique};
use crate::indices::{bound_violations, irr_graph, ClosenessCounts, IndexKind, IndexReport};
use crate::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepFamily {
    /// `eperi` of [`eperi_extremal`]`(s)`, normalised by `n^3`.
    EperiExtremal,
    /// `espr` of [`espr_extremal`]`(s)`, normalised by `n^4`.
    EsprExtremal,
    /// `NT` of the balanced spider `S_{a,a}`.
    BalancedSpiderNt,
    /// `NT` of [`pendant_clique`]`(n)`.
    PendantCliqueNt,
    /// `espr` of the complete tripartite graph `K_{m,m,m}` (diameter 2, every
    /// degree `2n/3`).
    TripartiteEspr,
}

impl SweepFamily {
    pub const ALL: [SweepFamily; 5] = [
        SweepFamily::EperiExtremal,
        SweepFamily::EsprExtremal,
        SweepFamily::BalancedSpiderNt,
        SweepFamily::PendantCliqueNt,
        SweepFamily::TripartiteEspr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::EperiExtremal => "eperi_extremal",
            SweepFamily::EsprExtremal => "espr_extremal",
            SweepFamily::BalancedSpiderNt => "balanced_spider_nt",
            SweepFamily::PendantCliqueNt => "pendant_clique_nt",
            SweepFamily::TripartiteEspr => "tripartite_espr",
        }
    }

    pub fn index(self) -> IndexKind {
        match self {
            SweepFamily::EperiExtremal => IndexKind::Eperi,
            SweepFamily::EsprExtremal | SweepFamily::TripartiteEspr => IndexKind::Espr,
            SweepFamily::BalancedSpiderNt | SweepFamily::PendantCliqueNt => IndexKind::Nt,
        }
    }

    /// Power of `n` the index is normalised by.
    pub fn exponent(self) -> i32 {
        match self {
            SweepFamily::EperiExtremal => 3,
            _ => 4,
        }
    }

    /// Asymptotic value of `index / n^k` for the family.
    pub fn target(self) -> f64 {
        match self {
            SweepFamily::EperiExtremal => 3f64.sqrt() / 24.0,
            SweepFamily::EsprExtremal => 5.0 / 32.0,
            SweepFamily::BalancedSpiderNt => 0.5,
            SweepFamily::PendantCliqueNt => 0.25,
            SweepFamily::TripartiteEspr => 4.0 / 27.0,
        }
    }

    pub fn build(self, param: usize) -> Result<Graph> {
        match self {
            SweepFamily::EperiExtremal => eperi_extremal(param),
            SweepFamily::EsprExtremal => espr_extremal(param),
            SweepFamily::BalancedSpiderNt => balanced_spider(param, param),
            SweepFamily::PendantCliqueNt => pendant_clique(param),
            SweepFamily::TripartiteEspr => complete_multipartite(&[param; 3]),
        }
    }
}

impl fmt::Display for SweepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        SweepFamily::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::param(format!("unknown sweep family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: SweepFamily,
    pub param: usize,
    pub n: usize,
    pub value: u64,
    pub ratio: f64,
    pub target: f64,
    /// General index bounds this graph breaks; always expected empty.
    #[serde(skip)]
    pub bound_violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioSweepReport {
    pub family: SweepFamily,
    pub exponent: i32,
    pub target: f64,
    /// Sorted by `n`.
    pub rows: Vec<SweepRow>,
}

impl RatioSweepReport {
    pub fn last(&self) -> Option<&SweepRow> {
        self.rows.last()
    }

    /// `|ratio - target| / target` at the largest size.
    pub fn final_relative_gap(&self) -> Option<f64> {
        self.last().map(|r| (r.ratio - self.target).abs() / self.target)
    }

    /// Whether the distance to the target strictly shrinks over the last
    /// `window` rows.
    pub fn approaching(&self, window: usize) -> bool {
        if self.rows.len() < window {
            return false;
        }
        let gaps: Vec<f64> = self.rows[self.rows.len() - window..]
            .iter()
            .map(|r| (r.ratio - self.target).abs())
            .collect();
        gaps.windows(2).all(|w| w[1] < w[0])
    }

    /// Within `rel_tol` of the target at the largest size and approaching it
    /// over the last three rows.
    pub fn converges(&self, rel_tol: f64) -> bool {
        self.final_relative_gap().is_some_and(|g| g <= rel_tol) && self.approaching(3)
    }

    /// CSV with columns `family,param,n,value,ratio,target`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::param(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::param(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// Exact index value and `value / n^k` for each parameter. Each graph is
/// also checked against [`bound_violations`].
pub fn ratio_sweep(family: SweepFamily, params: &[usize]) -> Result<RatioSweepReport> {
    if params.is_empty() {
        return Err(Error::param("empty parameter range"));
    }
    let k = family.exponent();
    let target = family.target();
    let mut rows = params
        .iter()
        .map(|&param| {
            let g = family.build(param)?;
            let cc = ClosenessCounts::new(&g)?;
            let report = IndexReport::from_counts(&g, &cc, false)?;
            let bound_violations = bound_violations(&g, &cc, &report)?;
            let value = report.get(family.index());
            let n = g.order();
            Ok(SweepRow {
                family,
                param,
                n,
                value,
                ratio: value as f64 / (n as f64).powi(k),
                target,
                bound_violations,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.n, r.param));
    Ok(RatioSweepReport { family, exponent: k, target, rows })
}

/// Checks `NT(S_{a,b}) >= n (n - a) (n - 2b)^2 / 2` exactly, `n = ab + 1`.
pub fn spider_nt_bound_holds(a: usize, b: usize, nt: u64) -> bool {
    let n = (a * b + 1) as u128;
    let (a, b) = (a as u128, b as u128);
    let gap = n.abs_diff(2 * b);
    2 * nt as u128 >= n * (n - a) * gap * gap
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureRow {
    pub left_order: usize,
    pub right_order: usize,
    pub n: usize,
    pub ultra: bool,
    pub nt: u64,
    pub regular: bool,
}

/// For each pair of ultra NT-balanced factors, rebuilds the Cartesian product
/// and rechecks ultra balance from scratch.
pub fn verify_ultra_closure(pairs: &[(Graph, Graph)]) -> Result<Vec<ClosureRow>> {
    for (i, (g, h)) in pairs.iter().enumerate() {
        for (side, f) in [("left", g), ("right", h)] {
            if !ClosenessCounts::new(f)?.is_ultra_nt_balanced() {
                return Err(Error::param(format!("pair {i}: {side} factor is not ultra NT-balanced")));
            }
        }
    }
    pairs
        .iter()
        .map(|(g, h)| {
            let prod = g.cartesian_product(h);
            let cc = ClosenessCounts::new(&prod)?;
            Ok(ClosureRow {
                left_order: g.order(),
                right_order: h.order(),
                n: prod.order(),
                ultra: cc.is_ultra_nt_balanced(),
                nt: cc.nt_graph()?,
                regular: prod.is_regular(),
            })
        })
        .collect()
}

/// `G(n, p)` from ChaCha8 seeded with `seed`. Pairs `(u, v)`, `u < v`, are
/// drawn in lexicographic order, one Bernoulli draw each. The result may be
/// disconnected.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::param(format!("edge probability must lie in (0, 1), got {p}")))
    }
}

/// `p sqrt(p (1 - p) / pi) n^{5/2}`.
pub fn predicted_irr(n: usize, p: f64) -> f64 {
    p * (p * (1.0 - p) / PI).sqrt() * (n as f64).powf(2.5)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloReport {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub sample_mean: f64,
    pub predicted: f64,
    pub relative_error: f64,
}

/// Mean `irr` over `trials` samples; trial `t` uses seed `seed + t` (wrapping).
pub fn monte_carlo_irr(n: usize, p: f64, trials: usize, seed: u64) -> Result<MonteCarloReport> {
    check_probability(p)?;
    if trials == 0 {
        return Err(Error::param("trials must be at least 1"));
    }
    let samples = (0..trials)
        .into_par_iter()
        .map(|t| sample_gnp(n, p, seed.wrapping_add(t as u64)).map(|g| irr_graph(&g)))
        .collect::<Result<Vec<u64>>>()?;
    let total: u64 = samples.iter().sum();
    let sample_mean = total as f64 / trials as f64;
    let predicted = predicted_irr(n, p);
    Ok(MonteCarloReport {
        n,
        p,
        trials,
        seed,
        sample_mean,
        predicted,
        relative_error: (sample_mean - predicted).abs() / predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_is_deterministic() {
        let a = sample_gnp(40, 0.3, 99).unwrap();
        let b = sample_gnp(40, 0.3, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_gnp(40, 0.3, 100).unwrap());
    }

    #[test]
    fn gnp_edge_count_is_binomial() {
        let (n, p) = (30usize, 0.4);
        let pairs = (n * (n - 1) / 2) as f64;
        let trials = 100;
        let mean = (0..trials)
            .map(|t| sample_gnp(n, p, t).unwrap().edge_count() as f64)
            .sum::<f64>()
            / trials as f64;
        let sigma_of_mean = (pairs * p * (1.0 - p) / trials as f64).sqrt();
        assert!((mean - p * pairs).abs() < 3.0 * sigma_of_mean, "mean {mean}");
    }

    #[test]
    fn gnp_two_vertices() {
        let trials = 2000;
        let hits = (0..trials).filter(|&t| sample_gnp(2, 0.3, t).unwrap().edge_count() == 1).count();
        let freq = hits as f64 / trials as f64;
        assert!((freq - 0.3).abs() < 3.0 * (0.3f64 * 0.7 / trials as f64).sqrt());
    }

    #[test]
    fn degenerate_probability() {
        for p in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(sample_gnp(5, p, 0).is_err());
            assert!(monte_carlo_irr(5, p, 10, 0).is_err());
        }
        assert!(monte_carlo_irr(5, 0.5, 0, 0).is_err());
    }

    #[test]
    fn half_probability_prediction() {
        let n = 200;
        let want = (n as f64).powf(2.5) / (4.0 * PI.sqrt());
        assert!((predicted_irr(n, 0.5) - want).abs() < 1e-9 * want);
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let a = monte_carlo_irr(50, 0.5, 8, 1).unwrap();
        let b = monte_carlo_irr(50, 0.5, 8, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sweep_rows_sorted_and_csv() {
        let r = ratio_sweep(SweepFamily::EsprExtremal, &[3, 1, 2]).unwrap();
        assert_eq!(r.rows.iter().map(|r| r.param).collect::<Vec<_>>(), vec![1, 2, 3]);
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("family,param,n,value,ratio,target\n"));
        assert_eq!(csv.lines().count(), 4);
        assert!(ratio_sweep(SweepFamily::EsprExtremal, &[]).is_err());
        assert!(ratio_sweep(SweepFamily::EperiExtremal, &[2]).is_err());
    }

    #[test]
    fn closure_rejects_unbalanced_factor() {
        let p3 = crate::constructions::path(3).unwrap();
        let k2 = crate::constructions::complete(2).unwrap();
        assert!(verify_ultra_closure(&[(p3, k2.clone())]).is_err());
        let rows = verify_ultra_closure(&[(k2.clone(), k2)]).unwrap();
        assert!(rows[0].ultra && rows[0].nt == 0 && rows[0].regular);
    }

    #[test]
    fn spider_bound_small() {
        // S_{3,1} is the star S3: NT = 12, bound n(n-a)(n-2b)^2/2 = 4*1*4/2 = 8
        assert!(spider_nt_bound_holds(3, 1, 12));
        assert!(!spider_nt_bound_holds(3, 1, 7));
    }
}
