//! Erdős–Rényi baseline normalization and the max-ratio fitness.
//!
//! Raw dissimilarities live on incomparable scales. Dividing each by the
//! mean dissimilarity between the target and an ensemble of same-size ER
//! graphs expresses every metric as improvement over random: a ratio of 1
//! means no improvement, and the fitness is the worst (highest) ratio.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::graph::{erdos_renyi, GraphError, GrowthGraph};
use crate::netmetrics::{dissimilarity_vector, Metric, MetricError, MetricParams, MetricProfile};
use crate::rng::{sub_rng, Stream};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FitnessError {
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("baseline mean for `{0}` is zero; cannot normalize")]
    ZeroBaselineMean(Metric),
}

/// Per-metric mean dissimilarities between one target and its ER ensemble.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineNorms {
    pub target_hash: String,
    pub params_hash: String,
    pub ensemble_size: u32,
    pub seed: u64,
    pub means: BTreeMap<Metric, f64>,
}

/// Hash of the metric parameters, part of the baseline cache key.
pub fn metric_params_hash(params: &MetricParams) -> String {
    let json = serde_json::to_string(params).expect("params serialize");
    let digest = Sha256::digest(json.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in digest {
        let _ = write!(hex, "{byte:02x}");
    }
    hex
}

/// Build the baseline: `ensemble_size` ER graphs with the target's size and
/// directedness, profiled and compared against the target; means per metric.
///
/// Ensemble members use independent derived streams, so the result is
/// reproducible regardless of how the work is scheduled.
pub fn baseline_norms(
    target: &GrowthGraph,
    ensemble_size: u32,
    params: &MetricParams,
    seed: u64,
) -> Result<BaselineNorms, FitnessError> {
    assert!(target.vertex_count() >= 1, "target must be nonempty");
    assert!(ensemble_size >= 1, "ensemble must be nonempty");
    let target_profile = MetricProfile::compute(target, params);
    let n = target.vertex_count();
    let m = target.arc_count();
    let directed = target.is_directed();

    let vectors: Vec<Result<BTreeMap<Metric, f64>, FitnessError>> = (0..ensemble_size)
        .into_par_iter()
        .map(|member| {
            let mut rng = sub_rng(seed, Stream::Baseline, u64::from(member));
            let er = erdos_renyi(n, m, directed, &mut rng)?;
            let profile = MetricProfile::compute(&er, params);
            Ok(dissimilarity_vector(&target_profile, &profile)?)
        })
        .collect();

    let mut means: BTreeMap<Metric, f64> = BTreeMap::new();
    for vector in vectors {
        for (metric, value) in vector? {
            *means.entry(metric).or_insert(0.0) += value;
        }
    }
    for value in means.values_mut() {
        *value /= f64::from(ensemble_size);
    }
    for (&metric, &mean) in &means {
        if mean <= 0.0 {
            return Err(FitnessError::ZeroBaselineMean(metric));
        }
    }
    Ok(BaselineNorms {
        target_hash: target.content_hash(),
        params_hash: metric_params_hash(params),
        ensemble_size,
        seed,
        means,
    })
}

/// Dissimilarity ratios against the baseline plus their maximum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitnessReport {
    pub ratios: BTreeMap<Metric, f64>,
    pub fitness: f64,
}

/// Normalize a dissimilarity vector into ratios; fitness is the highest one.
pub fn fitness_report(
    dissim: &BTreeMap<Metric, f64>,
    norms: &BaselineNorms,
) -> Result<FitnessReport, FitnessError> {
    if dissim.len() != norms.means.len()
        || dissim.keys().any(|metric| !norms.means.contains_key(metric))
    {
        let have: Vec<&str> = dissim.keys().map(|m| m.as_str()).collect();
        let want: Vec<&str> = norms.means.keys().map(|m| m.as_str()).collect();
        return Err(FitnessError::Metric(MetricError::MetricSetMismatch(
            format!("have {have:?}, baseline has {want:?}"),
        )));
    }
    let mut ratios = BTreeMap::new();
    for (&metric, &value) in dissim {
        let mean = norms.means[&metric];
        if mean <= 0.0 {
            return Err(FitnessError::ZeroBaselineMean(metric));
        }
        ratios.insert(metric, value / mean);
    }
    let fitness = ratios.values().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(FitnessReport { ratios, fitness })
}

/// Score a candidate profile against the target under the baseline norms.
pub fn fitness(
    candidate: &MetricProfile,
    target: &MetricProfile,
    norms: &BaselineNorms,
) -> Result<FitnessReport, FitnessError> {
    let dissim = dissimilarity_vector(target, candidate)?;
    fitness_report(&dissim, norms)
}

fn cache_file_name(norms_key: (&str, &str, u32, u64)) -> String {
    let (target_hash, params_hash, ensemble, seed) = norms_key;
    format!(
        "{}-{}-{ensemble}-{seed}.json",
        &target_hash[..16.min(target_hash.len())],
        &params_hash[..16.min(params_hash.len())]
    )
}

/// Load cached norms if a matching entry exists.
pub fn load_cached_norms(
    dir: &Path,
    target_hash: &str,
    params_hash: &str,
    ensemble_size: u32,
    seed: u64,
) -> Option<BaselineNorms> {
    let path = dir.join(cache_file_name((target_hash, params_hash, ensemble_size, seed)));
    let text = fs::read_to_string(path).ok()?;
    let norms: BaselineNorms = serde_json::from_str(&text).ok()?;
    (norms.target_hash == target_hash
        && norms.params_hash == params_hash
        && norms.ensemble_size == ensemble_size
        && norms.seed == seed)
        .then_some(norms)
}

/// Persist norms in the cache directory; returns the file path.
pub fn store_cached_norms(dir: &Path, norms: &BaselineNorms) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(cache_file_name((
        &norms.target_hash,
        &norms.params_hash,
        norms.ensemble_size,
        norms.seed,
    )));
    let json = serde_json::to_string_pretty(norms).expect("norms serialize");
    fs::write(&path, json)?;
    Ok(path)
}
