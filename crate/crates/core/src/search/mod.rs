//! Exhaustive search over small isomorphism classes.
//!
//! Connected graphs are generated by vertex extension: every connected graph
//! on `n >= 2` vertices has a non-cut vertex, so it arises from a connected
//! graph on `n - 1` vertices by adding a vertex with a nonempty neighbourhood.
//! Children are deduplicated by their canonical key. Each parent graph is an
//! independent shard; shards run in parallel and merge into an ordered map, so
//! the output order (by canonical graph6) does not depend on scheduling.

pub mod canon;
mod trees;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::to_graph6;
use crate::indices::{ClosenessCounts, IndexKind};
use crate::{Error, Graph, Result};

pub use canon::{canonical_form, canonical_graph, Canonical};
pub use trees::{enumerate_trees, MAX_TREE_ORDER};

/// Largest `n` accepted by [`enumerate_connected_graphs`]. `n = 9` (261080
/// classes) takes minutes rather than seconds.
pub const MAX_GRAPH_ORDER: usize = 9;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labeling, sorted by canonical graph6.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GRAPH_ORDER).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "connected graph enumeration supports 1 <= n <= {MAX_GRAPH_ORDER}, got {n}"
        )));
    }
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for k in 2..=n {
        level = extend_level(&level, k);
    }
    Ok(level.iter().map(|m| Graph::from_small_masks(m)).collect())
}

fn extend_level(parents: &[Vec<u16>], k: usize) -> Vec<Vec<u16>> {
    let new = k - 1;
    let merged = parents
        .par_iter()
        .map(|parent| {
            let mut shard = BTreeMap::new();
            for nbrs in 1u16..(1 << new) {
                let mut masks = parent.clone();
                masks.push(nbrs);
                for (v, m) in masks.iter_mut().enumerate().take(new) {
                    if nbrs >> v & 1 == 1 {
                        *m |= 1 << new;
                    }
                }
                let c = canonical_form(&masks);
                shard
                    .entry(c.key)
                    .or_insert_with(|| canon::relabel_masks(&masks, &c.position));
            }
            shard
        })
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    merged.into_values().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Trees,
    ConnectedGraphs,
    /// Connected bipartite graphs.
    Bipartite,
    /// Connected graphs of exactly this diameter.
    FixedDiameter(usize),
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Trees => f.write_str("trees"),
            GraphClass::ConnectedGraphs => f.write_str("graphs"),
            GraphClass::Bipartite => f.write_str("bipartite"),
            GraphClass::FixedDiameter(d) => write!(f, "diameter:{d}"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(GraphClass::Trees),
            "graphs" | "connected" | "connected_graphs" => Ok(GraphClass::ConnectedGraphs),
            "bipartite" => Ok(GraphClass::Bipartite),
            _ => s
                .strip_prefix("diameter:")
                .and_then(|d| d.parse().ok())
                .map(GraphClass::FixedDiameter)
                .ok_or_else(|| Error::param(format!("unknown graph class {s:?}"))),
        }
    }
}

/// Every graph of the class on `n` vertices, one per isomorphism class.
pub fn enumerate_class(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    let graphs = match class {
        GraphClass::Trees => enumerate_trees(n)?,
        _ => enumerate_connected_graphs(n)?,
    };
    Ok(match class {
        GraphClass::Trees | GraphClass::ConnectedGraphs => graphs,
        GraphClass::Bipartite => graphs.into_iter().filter(|g| g.bipartition().is_some()).collect(),
        GraphClass::FixedDiameter(d) => graphs
            .into_iter()
            .filter(|g| g.diameter().ok() == Some(d))
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub class: GraphClass,
    pub index: IndexKind,
    pub max_value: u64,
    /// Canonical graph6 of every maximiser, sorted.
    pub witnesses: Vec<String>,
    pub enumerated_count: usize,
}

/// Maximum of `index` over the class, with all maximisers up to isomorphism.
pub fn maximize_index(n: usize, class: GraphClass, index: IndexKind) -> Result<SearchResult> {
    let graphs = enumerate_class(n, class)?;
    if graphs.is_empty() {
        return Err(Error::param(format!("class {class} is empty for n = {n}")));
    }
    let values = graphs
        .par_iter()
        .map(|g| {
            let cc = ClosenessCounts::new(g)?;
            index.evaluate(g, &cc)
        })
        .collect::<Result<Vec<u64>>>()?;
    let max_value = *values.iter().max().expect("nonempty");
    let mut witnesses: Vec<String> = graphs
        .iter()
        .zip(&values)
        .filter(|&(_, &v)| v == max_value)
        .map(|(g, _)| to_graph6(&canonical_graph(g)))
        .collect();
    witnesses.sort();
    Ok(SearchResult { n, class, index, max_value, witnesses, enumerated_count: graphs.len() })
}

/// Connected NT-balanced graphs on `n` vertices; with `require_not_ultra`,
/// only those that fail the ultra check.
pub fn find_nt_balanced(n: usize, require_not_ultra: bool) -> Result<Vec<Graph>> {
    let graphs = enumerate_connected_graphs(n)?;
    let hits = graphs
        .into_par_iter()
        .map(|g| {
            let cc = ClosenessCounts::new(&g)?;
            let keep = cc.is_nt_balanced() && !(require_not_ultra && cc.is_ultra_nt_balanced());
            Ok(keep.then_some(g))
        })
        .collect::<Result<Vec<Option<Graph>>>>()?;
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_small() {
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_connected_graphs(i + 1).unwrap().len(), want);
        }
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(10).is_err());
    }

    #[test]
    fn class_parsing() {
        assert_eq!("trees".parse::<GraphClass>().unwrap(), GraphClass::Trees);
        assert_eq!("graphs".parse::<GraphClass>().unwrap(), GraphClass::ConnectedGraphs);
        assert_eq!("diameter:2".parse::<GraphClass>().unwrap(), GraphClass::FixedDiameter(2));
        assert!("diameter:x".parse::<GraphClass>().is_err());
        for c in [GraphClass::Trees, GraphClass::Bipartite, GraphClass::FixedDiameter(3)] {
            assert_eq!(c.to_string().parse::<GraphClass>().unwrap(), c);
        }
    }

    #[test]
    fn small_maxima() {
        let r = maximize_index(5, GraphClass::Trees, IndexKind::Peri).unwrap();
        assert_eq!(r.max_value, 9);
        assert_eq!(r.enumerated_count, 3);
        let r = maximize_index(4, GraphClass::ConnectedGraphs, IndexKind::Peri).unwrap();
        assert_eq!(r.max_value, 5);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn nt_balanced_on_three_vertices() {
        let found = find_nt_balanced(3, false).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].edge_count(), 3);
        assert!(find_nt_balanced(3, true).unwrap().is_empty());
    }
}
