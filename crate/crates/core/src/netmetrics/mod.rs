//! Per-network metric profiles and their pairwise dissimilarities.
//!
//! A profile bundles degree and PageRank distributions (compared by earth
//! mover's distance) with distance histograms and a triad profile (compared
//! by the ratio-based dissimilarity). Directed networks carry 7 metrics,
//! undirected ones 4.

mod distance;
mod emd;
mod pagerank;
mod ratio;
mod triads;

pub use distance::{distance_histogram, Bin, DistanceMode, Histogram};
pub use emd::emd;
pub use pagerank::pagerank;
pub use ratio::{ratio_dissimilarity, ratio_dissimilarity_counts};
pub use triads::{
    normalize_counts, triad_counts, triad_profile, DIRECTED_CLASS_NAMES, UNDIRECTED_CLASS_NAMES,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::graph::GrowthGraph;
use crate::rng::{sub_rng, Stream};

/// The named metrics of the fitness function.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Metric {
    #[serde(rename = "k_in")]
    InDegree,
    #[serde(rename = "k_out")]
    OutDegree,
    #[serde(rename = "k")]
    Degree,
    #[serde(rename = "PR_d")]
    PageRankDirect,
    #[serde(rename = "PR_r")]
    PageRankReverse,
    #[serde(rename = "PR")]
    PageRank,
    #[serde(rename = "d_d")]
    DistanceDirected,
    #[serde(rename = "d_u")]
    DistanceUndirected,
    #[serde(rename = "tau")]
    TriadProfile,
}

impl Metric {
    pub const DIRECTED: [Metric; 7] = [
        Metric::InDegree,
        Metric::OutDegree,
        Metric::PageRankDirect,
        Metric::PageRankReverse,
        Metric::DistanceDirected,
        Metric::DistanceUndirected,
        Metric::TriadProfile,
    ];

    pub const UNDIRECTED: [Metric; 4] = [
        Metric::Degree,
        Metric::PageRank,
        Metric::DistanceUndirected,
        Metric::TriadProfile,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::InDegree => "k_in",
            Metric::OutDegree => "k_out",
            Metric::Degree => "k",
            Metric::PageRankDirect => "PR_d",
            Metric::PageRankReverse => "PR_r",
            Metric::PageRank => "PR",
            Metric::DistanceDirected => "d_d",
            Metric::DistanceUndirected => "d_u",
            Metric::TriadProfile => "tau",
        }
    }

    pub fn for_mode(directed: bool) -> &'static [Metric] {
        if directed {
            &Metric::DIRECTED
        } else {
            &Metric::UNDIRECTED
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("profiles have different directedness")]
    DirectednessMismatch,
    #[error("metric sets do not match ({0})")]
    MetricSetMismatch(String),
}

/// Knobs of profile computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricParams {
    pub pagerank_damping: f64,
    pub pagerank_tol: f64,
    pub pagerank_max_iter: u32,
    /// Up to this many vertices, distance histograms use every source.
    pub exact_bfs_limit: usize,
    /// Number of sampled BFS sources above the exact limit.
    pub sampled_sources: usize,
    /// Stream seed for BFS source sampling.
    pub source_seed: u64,
}

impl Default for MetricParams {
    fn default() -> Self {
        MetricParams {
            pagerank_damping: 0.85,
            pagerank_tol: 1e-9,
            pagerank_max_iter: 200,
            exact_bfs_limit: 2000,
            sampled_sources: 500,
            source_seed: 0,
        }
    }
}

/// The per-network bundle of distributions the fitness compares.
#[derive(Debug, Clone)]
pub struct MetricProfile {
    directed: bool,
    degree: BTreeMap<Metric, Vec<f64>>,
    pagerank: BTreeMap<Metric, Vec<f64>>,
    distance: BTreeMap<Metric, Histogram>,
    triad_counts: Vec<u64>,
}

impl MetricProfile {
    pub fn compute(g: &GrowthGraph, params: &MetricParams) -> MetricProfile {
        assert!(g.vertex_count() >= 1, "profile needs a nonempty graph");
        let n = g.vertex_count();
        let directed = g.is_directed();
        let sorted = |mut v: Vec<f64>| {
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v
        };
        let vertices = || 0..n as u32;

        let mut degree = BTreeMap::new();
        let mut pagerank_dists = BTreeMap::new();
        let mut distance = BTreeMap::new();

        let pr = |reverse: bool| {
            sorted(pagerank(
                g,
                reverse,
                params.pagerank_damping,
                params.pagerank_tol,
                params.pagerank_max_iter,
            ))
        };
        let source_cap = if n <= params.exact_bfs_limit {
            n
        } else {
            params.sampled_sources
        };
        let hist = |mode: DistanceMode, index: u64| {
            let mut rng = sub_rng(params.source_seed, Stream::BfsSources, index);
            distance_histogram(g, mode, source_cap, &mut rng)
        };

        if directed {
            degree.insert(
                Metric::InDegree,
                sorted(vertices().map(|v| g.indeg(v) as f64).collect()),
            );
            degree.insert(
                Metric::OutDegree,
                sorted(vertices().map(|v| g.outdeg(v) as f64).collect()),
            );
            pagerank_dists.insert(Metric::PageRankDirect, pr(false));
            pagerank_dists.insert(Metric::PageRankReverse, pr(true));
            distance.insert(Metric::DistanceDirected, hist(DistanceMode::Directed, 0));
            distance.insert(
                Metric::DistanceUndirected,
                hist(DistanceMode::Undirected, 1),
            );
        } else {
            degree.insert(
                Metric::Degree,
                sorted(vertices().map(|v| g.degree(v) as f64).collect()),
            );
            pagerank_dists.insert(Metric::PageRank, pr(false));
            distance.insert(
                Metric::DistanceUndirected,
                hist(DistanceMode::Undirected, 1),
            );
        }

        MetricProfile {
            directed,
            degree,
            pagerank: pagerank_dists,
            distance,
            triad_counts: triad_counts(g),
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn metric_names(&self) -> &'static [Metric] {
        Metric::for_mode(self.directed)
    }

    pub fn degree_dist(&self, metric: Metric) -> Option<&[f64]> {
        self.degree.get(&metric).map(Vec::as_slice)
    }

    pub fn pagerank_dist(&self, metric: Metric) -> Option<&[f64]> {
        self.pagerank.get(&metric).map(Vec::as_slice)
    }

    pub fn distance_hist(&self, metric: Metric) -> Option<&Histogram> {
        self.distance.get(&metric)
    }

    pub fn triad_counts(&self) -> &[u64] {
        &self.triad_counts
    }

    /// Normalized triad frequencies.
    pub fn triad_profile(&self) -> Vec<f64> {
        normalize_counts(&self.triad_counts)
    }
}

/// The named dissimilarities between two profiles of equal directedness:
/// EMD on degrees and PageRank, ratio dissimilarity on distances and triads.
pub fn dissimilarity_vector(
    a: &MetricProfile,
    b: &MetricProfile,
) -> Result<BTreeMap<Metric, f64>, MetricError> {
    if a.directed != b.directed {
        return Err(MetricError::DirectednessMismatch);
    }
    let mut out = BTreeMap::new();
    for (metric, dist_a) in &a.degree {
        out.insert(*metric, emd(dist_a, &b.degree[metric]));
    }
    for (metric, dist_a) in &a.pagerank {
        out.insert(*metric, emd(dist_a, &b.pagerank[metric]));
    }
    for (metric, hist_a) in &a.distance {
        out.insert(*metric, ratio_dissimilarity(hist_a, &b.distance[metric]));
    }
    let counts_a: Vec<f64> = a.triad_counts.iter().map(|&c| c as f64).collect();
    let counts_b: Vec<f64> = b.triad_counts.iter().map(|&c| c as f64).collect();
    out.insert(
        Metric::TriadProfile,
        ratio_dissimilarity_counts(&counts_a, &counts_b),
    );
    Ok(out)
}
