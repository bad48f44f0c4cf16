//! Arc-by-arc network growth driven by a generator program.
//!
//! Each step samples a set of absent candidate arcs, builds a context per
//! candidate (degrees plus walk-estimated distances), evaluates the
//! generator on every context and selects one arc stochastically with
//! probability proportional to its clamped weight.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::genlang::{ArcContext, GeneratorProgram};
use crate::graph::{sample_absent_arcs, GraphError, GrowthGraph};
use crate::rng::{sub_rng, Stream};

/// Knobs of the growth engine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthParams {
    /// Candidate sample size as a fraction of |V|² (clamped below by
    /// `min_sample` and above by the number of absent arcs).
    pub sample_ratio: f64,
    pub min_sample: usize,
    /// Independent random walks per distance estimate.
    pub walk_count: usize,
    /// Maximum steps per walk.
    pub walk_max_len: usize,
    /// Distance reported when no walk reaches the target.
    pub distance_cap: f64,
}

impl Default for GrowthParams {
    fn default() -> Self {
        GrowthParams {
            sample_ratio: 0.01,
            min_sample: 50,
            walk_count: 3,
            walk_max_len: 10,
            distance_cap: 11.0,
        }
    }
}

impl GrowthParams {
    pub fn validate(&self) -> Result<(), GraphError> {
        if !(self.sample_ratio > 0.0 && self.sample_ratio <= 1.0) {
            return Err(GraphError::InvalidParams(
                "sample_ratio must lie in (0, 1]".into(),
            ));
        }
        if self.walk_max_len < 1 {
            return Err(GraphError::InvalidParams("walk_max_len must be >= 1".into()));
        }
        if !(self.distance_cap > self.walk_max_len as f64) {
            return Err(GraphError::InvalidParams(
                "distance_cap must exceed walk_max_len".into(),
            ));
        }
        Ok(())
    }
}

/// Which arc orientation a walk follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkMode {
    /// Traverse arcs both ways (the only legal mode on undirected graphs).
    Undirected,
    /// Follow arcs forwards.
    Directed,
    /// Follow arcs backwards.
    Reverse,
}

fn step(g: &GrowthGraph, at: u32, mode: WalkMode, rng: &mut impl Rng) -> Option<u32> {
    match mode {
        WalkMode::Directed => {
            let out = g.out_neighbors(at);
            (!out.is_empty()).then(|| out[rng.gen_range(0..out.len())])
        }
        WalkMode::Reverse => {
            let inn = g.in_neighbors(at);
            (!inn.is_empty()).then(|| inn[rng.gen_range(0..inn.len())])
        }
        WalkMode::Undirected => {
            if g.is_directed() {
                let out = g.out_neighbors(at);
                let inn = g.in_neighbors(at);
                let total = out.len() + inn.len();
                if total == 0 {
                    return None;
                }
                let k = rng.gen_range(0..total);
                Some(if k < out.len() { out[k] } else { inn[k - out.len()] })
            } else {
                let out = g.out_neighbors(at);
                (!out.is_empty()).then(|| out[rng.gen_range(0..out.len())])
            }
        }
    }
}

/// Random-walk heuristic distance from `from` to `to`.
///
/// Runs `walk_count` independent walks of at most `walk_max_len` steps and
/// returns the smallest step count at which any walk first visits `to`, or
/// `distance_cap` if none does. Walks stop early at dead ends. The estimate
/// is always in `[1, distance_cap]` and never below the true shortest-path
/// distance.
pub fn walk_distance(
    g: &GrowthGraph,
    from: u32,
    to: u32,
    mode: WalkMode,
    params: &GrowthParams,
    rng: &mut impl Rng,
) -> f64 {
    debug_assert_ne!(from, to);
    debug_assert!(g.is_directed() || mode == WalkMode::Undirected, "mode illegal for graph");
    let mut best: Option<usize> = None;
    for _ in 0..params.walk_count {
        let mut at = from;
        for step_no in 1..=params.walk_max_len {
            let Some(next) = step(g, at, mode, rng) else {
                break;
            };
            if next == to {
                best = Some(best.map_or(step_no, |b| b.min(step_no)));
                break;
            }
            at = next;
        }
    }
    best.map_or(params.distance_cap, |b| b as f64)
}

/// Which distance estimates to fill in a context. Unfilled distances are set
/// to `distance_cap` and must not be read by the program being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContextSpec {
    pub du: bool,
    pub dd: bool,
    pub dr: bool,
}

impl ContextSpec {
    /// Everything legal for the mode.
    pub fn all(directed: bool) -> Self {
        ContextSpec {
            du: true,
            dd: directed,
            dr: directed,
        }
    }

    /// Only what `program` actually reads.
    pub fn for_program(program: &GeneratorProgram) -> Self {
        let use_ = program.distance_use();
        ContextSpec {
            du: use_.du,
            dd: use_.dd,
            dr: use_.dr,
        }
    }

    pub fn union(self, other: ContextSpec) -> Self {
        ContextSpec {
            du: self.du || other.du,
            dd: self.dd || other.dd,
            dr: self.dr || other.dr,
        }
    }
}

fn context_with_spec(
    g: &GrowthGraph,
    i: u32,
    j: u32,
    params: &GrowthParams,
    spec: ContextSpec,
    rng: &mut impl Rng,
) -> ArcContext {
    let cap = params.distance_cap;
    let du = if spec.du {
        walk_distance(g, i, j, WalkMode::Undirected, params, rng)
    } else {
        cap
    };
    let ident = |v: u32| u64::from(v) + 1;
    if g.is_directed() {
        let dd = if spec.dd {
            walk_distance(g, i, j, WalkMode::Directed, params, rng)
        } else {
            cap
        };
        let dr = if spec.dr {
            walk_distance(g, i, j, WalkMode::Reverse, params, rng)
        } else {
            cap
        };
        ArcContext::directed(
            ident(i),
            ident(j),
            u64::from(g.indeg(i)),
            u64::from(g.indeg(j)),
            u64::from(g.outdeg(i)),
            u64::from(g.outdeg(j)),
            du,
            dd,
            dr,
        )
    } else {
        ArcContext::undirected(
            ident(i),
            ident(j),
            u64::from(g.degree(i)),
            u64::from(g.degree(j)),
            du,
        )
    }
}

/// Full context for the candidate arc `(i, j)`: identifiers, cached degrees
/// and all walk-estimated distances legal for the graph's mode.
pub fn arc_context(
    g: &GrowthGraph,
    i: u32,
    j: u32,
    params: &GrowthParams,
    rng: &mut impl Rng,
) -> ArcContext {
    context_with_spec(g, i, j, params, ContextSpec::all(g.is_directed()), rng)
}

/// Draw the candidate sample for one growth step: `max(⌈s_r·n²⌉,
/// min_sample)` distinct absent arcs, capped by the number of absent arcs.
pub fn sample_candidates(
    g: &GrowthGraph,
    params: &GrowthParams,
    rng: &mut impl Rng,
) -> Result<Vec<(u32, u32)>, GraphError> {
    let absent = g.absent_arc_count();
    if absent == 0 {
        return Err(GraphError::Saturated);
    }
    let n = g.vertex_count();
    let raw = params.sample_ratio * (n * n) as f64;
    // tolerate fp error in the product so e.g. 0.01 * 10000 stays 100
    let want = (raw - 1e-9).ceil().max(1.0) as usize;
    let target = want.max(params.min_sample).min(absent);
    sample_absent_arcs(g, target, rng)
}

/// Eq-style arc selection: negative weights clamp to zero; if every weight
/// is zero all are treated as one; the index is drawn with probability
/// proportional to the clamped weight.
pub fn select_arc(weights: &[f64], rng: &mut impl Rng) -> usize {
    assert!(!weights.is_empty(), "empty candidate set");
    let total: f64 = weights.iter().map(|w| w.max(0.0)).sum();
    if total <= 0.0 {
        return rng.gen_range(0..weights.len());
    }
    let r = rng.gen::<f64>() * total;
    let mut cum = 0.0;
    let mut last_positive = 0;
    for (idx, &w) in weights.iter().enumerate() {
        let w = w.max(0.0);
        if w > 0.0 {
            cum += w;
            last_positive = idx;
            if r < cum {
                return idx;
            }
        }
    }
    last_positive
}

/// The probability vector that `select_arc` samples from.
pub fn selection_probabilities(weights: &[f64]) -> Vec<f64> {
    assert!(!weights.is_empty(), "empty candidate set");
    let total: f64 = weights.iter().map(|w| w.max(0.0)).sum();
    if total <= 0.0 {
        return vec![1.0 / weights.len() as f64; weights.len()];
    }
    weights.iter().map(|w| w.max(0.0) / total).collect()
}

/// Grow a network of `m` arcs over `n` initially isolated vertices.
pub fn grow_network(
    program: &GeneratorProgram,
    n: usize,
    m: usize,
    params: &GrowthParams,
    seed: u64,
) -> Result<GrowthGraph, GraphError> {
    grow_traced(
        program,
        n,
        m,
        params,
        seed,
        ContextSpec::for_program(program),
        |_, _| {},
    )
}

/// Growth loop with a per-step observer, used by generator-similarity
/// analysis. The observer sees the candidate contexts and the weights the
/// growing program assigned, before the arc is inserted.
///
/// `spec` must cover every distance variable any observer-side evaluation
/// will read; `grow_network` passes the growing program's own needs.
pub fn grow_traced(
    program: &GeneratorProgram,
    n: usize,
    m: usize,
    params: &GrowthParams,
    seed: u64,
    spec: ContextSpec,
    mut observer: impl FnMut(&[ArcContext], &[f64]),
) -> Result<GrowthGraph, GraphError> {
    params.validate()?;
    let directed = program.is_directed();
    let mut graph = GrowthGraph::new(n, directed);
    if m > graph.arc_capacity() {
        return Err(GraphError::CapacityExceeded {
            requested: m,
            capacity: graph.arc_capacity(),
        });
    }
    let spec = spec.union(ContextSpec::for_program(program));
    let mut sample_rng = sub_rng(seed, Stream::GrowthSampling, 0);
    let mut walk_rng = sub_rng(seed, Stream::GrowthWalks, 0);
    let mut contexts: Vec<ArcContext> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for _ in 0..m {
        let candidates = sample_candidates(&graph, params, &mut sample_rng)?;
        contexts.clear();
        weights.clear();
        for &(i, j) in &candidates {
            let ctx = context_with_spec(&graph, i, j, params, spec, &mut walk_rng);
            weights.push(program.evaluate(&ctx));
            contexts.push(ctx);
        }
        observer(&contexts, &weights);
        let pick = select_arc(&weights, &mut sample_rng);
        let (u, v) = candidates[pick];
        graph.add_arc(u, v).expect("candidates are absent arcs");
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlang::parse_program;
    use crate::rng::{sub_rng, Stream};
    use std::collections::{HashMap, VecDeque};

    fn bfs_distance(g: &GrowthGraph, from: u32, to: u32, mode: WalkMode) -> Option<usize> {
        let n = g.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[from as usize] = 0;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            let neighbors: Vec<u32> = match mode {
                WalkMode::Directed => g.out_neighbors(u).to_vec(),
                WalkMode::Reverse => g.in_neighbors(u).to_vec(),
                WalkMode::Undirected => {
                    let mut all = g.out_neighbors(u).to_vec();
                    if g.is_directed() {
                        all.extend_from_slice(g.in_neighbors(u));
                    }
                    all
                }
            };
            for v in neighbors {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        (dist[to as usize] != usize::MAX).then_some(dist[to as usize])
    }

    #[test]
    fn sampling_everything_returns_all_ordered_pairs() {
        let g = GrowthGraph::new(10, true);
        let params = GrowthParams {
            sample_ratio: 1.0,
            min_sample: 1,
            ..GrowthParams::default()
        };
        let mut rng = sub_rng(31, Stream::GrowthSampling, 0);
        let sample = sample_candidates(&g, &params, &mut rng).unwrap();
        assert_eq!(sample.len(), 90);
        let distinct: std::collections::HashSet<_> = sample.iter().collect();
        assert_eq!(distinct.len(), 90);
        assert!(sample.iter().all(|&(u, v)| u != v));
    }

    #[test]
    fn sample_size_formula() {
        let g = GrowthGraph::new(100, true);
        let params = GrowthParams {
            sample_ratio: 0.01,
            min_sample: 10,
            ..GrowthParams::default()
        };
        let mut rng = sub_rng(32, Stream::GrowthSampling, 0);
        assert_eq!(sample_candidates(&g, &params, &mut rng).unwrap().len(), 100);

        let min_applied = GrowthParams {
            sample_ratio: 0.0001,
            min_sample: 50,
            ..GrowthParams::default()
        };
        assert_eq!(
            sample_candidates(&g, &min_applied, &mut rng).unwrap().len(),
            50
        );
    }

    #[test]
    fn saturated_graph_errors() {
        let mut g = GrowthGraph::new(2, false);
        g.add_arc(0, 1).unwrap();
        let mut rng = sub_rng(33, Stream::GrowthSampling, 0);
        assert_eq!(
            sample_candidates(&g, &GrowthParams::default(), &mut rng),
            Err(GraphError::Saturated)
        );
    }

    #[test]
    fn sampling_is_uniform_over_absent_arcs() {
        // 5 vertices undirected with one present edge: 9 absent pairs.
        let mut g = GrowthGraph::new(5, false);
        g.add_arc(0, 1).unwrap();
        let params = GrowthParams {
            sample_ratio: 0.04, // one candidate per draw
            min_sample: 1,
            ..GrowthParams::default()
        };
        let mut rng = sub_rng(34, Stream::GrowthSampling, 0);
        let mut hits: HashMap<(u32, u32), u64> = HashMap::new();
        let draws = 10_000usize;
        for _ in 0..draws {
            let sample = sample_candidates(&g, &params, &mut rng).unwrap();
            assert_eq!(sample.len(), 1);
            let (u, v) = sample[0];
            let key = (u.min(v), u.max(v));
            assert!(!g.has_arc(key.0, key.1));
            *hits.entry(key).or_default() += 1;
        }
        assert_eq!(hits.len(), 9, "every absent pair should appear");
        let expect = draws as f64 / 9.0;
        let sigma = (draws as f64 * (1.0 / 9.0) * (8.0 / 9.0)).sqrt();
        for (&pair, &count) in &hits {
            assert!(
                (count as f64 - expect).abs() < 3.0 * sigma,
                "pair {pair:?} hit {count} times, expected ~{expect:.0}"
            );
        }
    }

    #[test]
    fn walk_estimate_bounds() {
        let params = GrowthParams::default();
        // isolated origin: no steps possible
        let g = GrowthGraph::new(4, true);
        let mut rng = sub_rng(35, Stream::GrowthWalks, 0);
        assert_eq!(
            walk_distance(&g, 0, 1, WalkMode::Directed, &params, &mut rng),
            params.distance_cap
        );

        // single outgoing arc: the first step always lands on the target
        let mut g = GrowthGraph::new(4, true);
        g.add_arc(0, 1).unwrap();
        for _ in 0..50 {
            assert_eq!(
                walk_distance(&g, 0, 1, WalkMode::Directed, &params, &mut rng),
                1.0
            );
        }
        // reverse orientation from the target side
        for _ in 0..50 {
            assert_eq!(
                walk_distance(&g, 1, 0, WalkMode::Reverse, &params, &mut rng),
                1.0
            );
        }
    }

    #[test]
    fn walk_estimate_never_beats_bfs() {
        let mut rng = sub_rng(36, Stream::GrowthWalks, 0);
        let g = crate::graph::erdos_renyi(20, 50, true, &mut rng).unwrap();
        let params = GrowthParams::default();
        for mode in [WalkMode::Undirected, WalkMode::Directed, WalkMode::Reverse] {
            for from in 0..20u32 {
                for to in 0..20u32 {
                    if from == to {
                        continue;
                    }
                    let estimate = walk_distance(&g, from, to, mode, &params, &mut rng);
                    assert!(estimate >= 1.0 && estimate <= params.distance_cap);
                    match bfs_distance(&g, from, to, mode) {
                        Some(d) => assert!(
                            estimate >= d as f64,
                            "estimate {estimate} below true distance {d}"
                        ),
                        None => assert_eq!(estimate, params.distance_cap),
                    }
                }
            }
        }
    }

    #[test]
    fn mean_walk_estimate_dominates_bfs_distance() {
        let mut rng = sub_rng(37, Stream::GrowthWalks, 0);
        let g = crate::graph::erdos_renyi(20, 60, true, &mut rng).unwrap();
        let params = GrowthParams::default();
        for (from, to) in [(0u32, 7u32), (3, 12), (5, 19), (8, 1)] {
            if let Some(d) = bfs_distance(&g, from, to, WalkMode::Undirected) {
                let mean: f64 = (0..1_000)
                    .map(|_| walk_distance(&g, from, to, WalkMode::Undirected, &params, &mut rng))
                    .sum::<f64>()
                    / 1_000.0;
                assert!(mean >= d as f64, "mean {mean} below exact distance {d}");
            }
        }
    }

    #[test]
    fn context_on_empty_graph() {
        let g = GrowthGraph::new(5, true);
        let params = GrowthParams::default();
        let mut rng = sub_rng(38, Stream::GrowthWalks, 0);
        let ctx = arc_context(&g, 0, 1, &params, &mut rng);
        assert_eq!((ctx.i, ctx.j), (1, 2));
        assert_eq!((ctx.indeg_i, ctx.indeg_j), (0, 0));
        let d = ctx.directed.unwrap();
        assert_eq!((d.outdeg_i, d.outdeg_j), (0, 0));
        assert_eq!(ctx.dist_u, params.distance_cap);
        assert_eq!(d.dist_d, params.distance_cap);
        assert_eq!(d.dist_r, params.distance_cap);
    }

    #[test]
    fn context_after_one_arc() {
        let mut g = GrowthGraph::new(5, true);
        g.add_arc(0, 1).unwrap();
        let params = GrowthParams::default();
        let mut rng = sub_rng(39, Stream::GrowthWalks, 0);
        let ctx = arc_context(&g, 0, 1, &params, &mut rng);
        assert_eq!(ctx.indeg_j, 1);
        let d = ctx.directed.unwrap();
        assert_eq!(d.outdeg_i, 1);
        assert!(d.dist_d >= 1.0);
        assert_eq!(d.dist_d, 1.0, "only one outgoing arc, so the walk hits j");
    }

    #[test]
    fn undirected_context_has_no_directed_fields() {
        let g = GrowthGraph::new(5, false);
        let params = GrowthParams::default();
        let mut rng = sub_rng(40, Stream::GrowthWalks, 0);
        let ctx = arc_context(&g, 0, 1, &params, &mut rng);
        assert!(ctx.directed.is_none());
    }

    #[test]
    fn select_arc_follows_weights() {
        let mut rng = sub_rng(41, Stream::GrowthSampling, 0);
        let draws = 10_000usize;
        let mut first = 0usize;
        for _ in 0..draws {
            if select_arc(&[5.0, 1.0], &mut rng) == 0 {
                first += 1;
            }
        }
        let p = 5.0 / 6.0;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        assert!(
            (first as f64 - draws as f64 * p).abs() < 3.0 * sigma,
            "observed {first} of {draws}"
        );
    }

    #[test]
    fn all_zero_weights_fall_back_to_uniform() {
        let mut rng = sub_rng(42, Stream::GrowthSampling, 0);
        let mut counts = [0usize; 3];
        let draws = 9_000usize;
        for _ in 0..draws {
            counts[select_arc(&[0.0, 0.0, 0.0], &mut rng)] += 1;
        }
        let expect = draws as f64 / 3.0;
        let sigma = (draws as f64 * (1.0 / 3.0) * (2.0 / 3.0)).sqrt();
        for c in counts {
            assert!((c as f64 - expect).abs() < 3.0 * sigma);
        }
        assert_eq!(
            selection_probabilities(&[0.0, 0.0, 0.0]),
            vec![1.0 / 3.0; 3]
        );
    }

    #[test]
    fn negative_weights_are_clamped() {
        let mut rng = sub_rng(43, Stream::GrowthSampling, 0);
        for _ in 0..200 {
            assert_eq!(select_arc(&[-2.0, 3.0], &mut rng), 1);
        }
        assert_eq!(selection_probabilities(&[-2.0, 3.0]), vec![0.0, 1.0]);
    }

    #[test]
    fn grow_produces_exactly_m_simple_arcs() {
        let program = parse_program("(indeg j)", true).unwrap();
        let params = GrowthParams::default();
        let g = grow_network(&program, 40, 300, &params, 7).unwrap();
        assert_eq!(g.arc_count(), 300);
        let mut seen = std::collections::HashSet::new();
        for (u, v) in g.arcs() {
            assert_ne!(u, v, "self-loop");
            assert!(seen.insert((u, v)), "duplicate arc {u}->{v}");
        }
        let (indeg, outdeg) = g.recount_degrees();
        for v in 0..40u32 {
            assert_eq!(g.indeg(v), indeg[v as usize]);
            assert_eq!(g.outdeg(v), outdeg[v as usize]);
        }
    }

    #[test]
    fn zero_arcs_gives_empty_graph() {
        let program = parse_program("1", true).unwrap();
        let g = grow_network(&program, 10, 0, &GrowthParams::default(), 1).unwrap();
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn capacity_overflow_is_rejected() {
        let program = parse_program("1", true).unwrap();
        let err = grow_network(&program, 3, 7, &GrowthParams::default(), 1).unwrap_err();
        assert!(matches!(err, GraphError::CapacityExceeded { .. }));
    }

    #[test]
    fn growth_is_deterministic_per_seed() {
        let program = parse_program("(+ (indeg j) du)", true).unwrap();
        let params = GrowthParams::default();
        let a = grow_network(&program, 30, 120, &params, 99).unwrap();
        let b = grow_network(&program, 30, 120, &params, 99).unwrap();
        assert_eq!(a.arcs().collect::<Vec<_>>(), b.arcs().collect::<Vec<_>>());
        let c = grow_network(&program, 30, 120, &params, 100).unwrap();
        assert_ne!(a.arcs().collect::<Vec<_>>(), c.arcs().collect::<Vec<_>>());
    }

    #[test]
    fn constant_generator_matches_er_degree_statistics() {
        // EMD between the grown in-degree distribution and ER samples stays
        // below the 95th percentile of ER-to-ER EMDs.
        let program = parse_program("1", true).unwrap();
        let params = GrowthParams::default();
        let g = grow_network(&program, 100, 1000, &params, 5).unwrap();
        let grown: Vec<f64> = sorted_indegs(&g);

        let mut rng = sub_rng(44, Stream::Baseline, 0);
        let ensemble: Vec<Vec<f64>> = (0..30)
            .map(|_| sorted_indegs(&crate::graph::erdos_renyi(100, 1000, true, &mut rng).unwrap()))
            .collect();
        let mean_to_er: f64 = ensemble
            .iter()
            .map(|er| crate::netmetrics::emd(&grown, er))
            .sum::<f64>()
            / ensemble.len() as f64;
        let mut er_to_er: Vec<f64> = Vec::new();
        for a in 0..ensemble.len() {
            for b in (a + 1)..ensemble.len() {
                er_to_er.push(crate::netmetrics::emd(&ensemble[a], &ensemble[b]));
            }
        }
        er_to_er.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let p95 = er_to_er[(er_to_er.len() as f64 * 0.95) as usize];
        assert!(
            mean_to_er < p95,
            "constant-generator degrees drift from ER: {mean_to_er} vs p95 {p95}"
        );
    }

    #[test]
    fn preferential_attachment_has_heavier_tail_than_er() {
        let program = parse_program("(indeg j)", true).unwrap();
        let params = GrowthParams::default();
        let g = grow_network(&program, 200, 2000, &params, 5).unwrap();
        let grown_max = (0..200u32).map(|v| g.indeg(v)).max().unwrap();

        let mut rng = sub_rng(45, Stream::Baseline, 0);
        let mut er_max: Vec<u32> = (0..100)
            .map(|_| {
                let er = crate::graph::erdos_renyi(200, 2000, true, &mut rng).unwrap();
                (0..200u32).map(|v| er.indeg(v)).max().unwrap()
            })
            .collect();
        er_max.sort_unstable();
        let p99 = er_max[98];
        assert!(
            grown_max > p99,
            "max in-degree {grown_max} not heavier than ER p99 {p99}"
        );
    }

    fn sorted_indegs(g: &GrowthGraph) -> Vec<f64> {
        let mut d: Vec<f64> = (0..g.vertex_count() as u32)
            .map(|v| g.indeg(v) as f64)
            .collect();
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        d
    }
}
