//! Behavioral dissimilarity between two generator programs.
//!
//! Growing a network with one program, we compute at every arc-creation step
//! the selection probabilities both programs assign over the same candidate
//! sample and accumulate the mean absolute gap (per candidate, then per
//! step). Averaging the two growth directions gives a symmetric measure that
//! is zero for programs with identical selection behavior, including any
//! positive rescaling of the weights.

use serde::Serialize;

use crate::genlang::GeneratorProgram;
use crate::graph::GraphError;
use crate::growth::{grow_traced, selection_probabilities, ContextSpec, GrowthParams};
use crate::rng::{sub_seed, Stream};

/// The two directed terms and their mean.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenDissimilarity {
    pub d_ww2: f64,
    pub d_w2w: f64,
    pub d: f64,
    /// Trajectory seeds of the two directions, recorded for replay. Both
    /// directions share one seed so that swapping the arguments exactly
    /// swaps the directed terms.
    pub seeds: [u64; 2],
}

/// Mean probability gap along a trajectory grown by `w`.
///
/// Contexts carry every distance variable either program reads, so the
/// passenger program `w2` sees the same inputs it would see driving.
pub fn directed_dissim(
    w: &GeneratorProgram,
    w2: &GeneratorProgram,
    n: usize,
    m: usize,
    params: &GrowthParams,
    seed: u64,
) -> Result<f64, GraphError> {
    assert_eq!(
        w.is_directed(),
        w2.is_directed(),
        "programs must share directedness"
    );
    let spec = ContextSpec::for_program(w).union(ContextSpec::for_program(w2));
    let mut total = 0.0;
    let mut steps = 0u64;
    grow_traced(w, n, m, params, seed, spec, |contexts, weights| {
        let p_w = selection_probabilities(weights);
        let weights_w2: Vec<f64> = contexts.iter().map(|ctx| w2.evaluate(ctx)).collect();
        let p_w2 = selection_probabilities(&weights_w2);
        let gap: f64 = p_w
            .iter()
            .zip(p_w2.iter())
            .map(|(a, b)| (a - b).abs())
            .sum();
        total += gap / p_w.len() as f64;
        steps += 1;
    })?;
    Ok(if steps == 0 { 0.0 } else { total / steps as f64 })
}

/// Symmetrized generator dissimilarity `d = (d_ww2 + d_w2w) / 2`.
pub fn generator_dissimilarity(
    w: &GeneratorProgram,
    w2: &GeneratorProgram,
    n: usize,
    m: usize,
    params: &GrowthParams,
    seed: u64,
) -> Result<GenDissimilarity, GraphError> {
    let trajectory_seed = sub_seed(seed, Stream::Gensim, 0);
    let d_ww2 = directed_dissim(w, w2, n, m, params, trajectory_seed)?;
    let d_w2w = directed_dissim(w2, w, n, m, params, trajectory_seed)?;
    Ok(GenDissimilarity {
        d_ww2,
        d_w2w,
        d: 0.5 * (d_ww2 + d_w2w),
        seeds: [trajectory_seed, trajectory_seed],
    })
}
