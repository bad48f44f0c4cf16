//! Ratio-based dissimilarity for histograms and count profiles.
//!
//! The measure is a bin-mass-weighted mean of absolute log-ratios of
//! add-one-smoothed counts over the union of occupied bins: symmetric, zero
//! only for identical counts, and robust to bins that one side leaves
//! empty. Weighting by bin mass keeps sparsely occupied boundary bins
//! (which fluctuate wildly between random graphs) from dominating the
//! measure.

use super::distance::{Bin, Histogram};
use std::collections::BTreeSet;

fn log_ratio_term(a: f64, b: f64) -> f64 {
    ((a + 1.0) / (b + 1.0)).ln().abs()
}

fn weighted_log_ratio<I: Iterator<Item = (f64, f64)>>(pairs: I) -> f64 {
    let mut total_mass = 0.0;
    let mut sum = 0.0;
    for (a, b) in pairs {
        if a > 0.0 || b > 0.0 {
            let mass = a + b;
            total_mass += mass;
            sum += mass * log_ratio_term(a, b);
        }
    }
    if total_mass == 0.0 {
        0.0
    } else {
        sum / total_mass
    }
}

/// Ratio dissimilarity between two histograms over the union of their
/// occupied bins.
pub fn ratio_dissimilarity(a: &Histogram, b: &Histogram) -> f64 {
    let occupied: BTreeSet<Bin> = a
        .iter()
        .chain(b.iter())
        .filter(|&(_, c)| c > 0)
        .map(|(bin, _)| bin)
        .collect();
    weighted_log_ratio(
        occupied
            .iter()
            .map(|&bin| (a.count(bin) as f64, b.count(bin) as f64)),
    )
}

/// Ratio dissimilarity between two aligned count vectors (e.g. triad class
/// counts). Bins where both sides are zero are ignored.
pub fn ratio_dissimilarity_counts(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "count vectors must align");
    weighted_log_ratio(a.iter().copied().zip(b.iter().copied()))
}
