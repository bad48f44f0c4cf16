//! Mutation-only evolutionary search with dual champions.
//!
//! The search keeps the best-scoring program seen so far (`best`) and the
//! shortest program whose fitness stays within a tolerance of it
//! (`shortest`). Each generation mutates a uniformly chosen champion, grows
//! one network from the child and scores it; champions are replaced under
//! the rules in [`SearchState::consider`]. The run stops once neither
//! champion has changed for `stable_limit` consecutive generations, and the
//! shortest champion is the result.

use serde::{Deserialize, Serialize};
use std::io::{self, Write};

use crate::fitness::{baseline_norms, fitness, BaselineNorms, FitnessError, FitnessReport};
use crate::genlang::{mutate, random_program, GeneratorProgram, TreeGenParams};
use crate::graph::{GraphError, GrowthGraph};
use crate::growth::{grow_network, GrowthParams};
use crate::netmetrics::{MetricParams, MetricProfile};
use crate::rng::{sub_rng, sub_seed, Stream};
use rand::Rng;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Fitness(#[from] FitnessError),
}

/// All knobs of one search run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    pub seed: u64,
    /// Anti-bloat tolerance: how much worse (relative) the shortest champion
    /// may score than the best one. 0.15 tends to stall evolution and 0.05
    /// to produce bloated, hard-to-read programs.
    pub tolerance: f64,
    /// Consecutive unchanged generations before the search stops.
    pub stable_limit: u32,
    pub ensemble_size: u32,
    pub growth: GrowthParams,
    pub metrics: MetricParams,
    pub tree_gen: TreeGenParams,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            seed: 0,
            tolerance: 0.10,
            stable_limit: 1000,
            ensemble_size: 30,
            growth: GrowthParams::default(),
            metrics: MetricParams::default(),
            tree_gen: TreeGenParams::default(),
        }
    }
}

impl SearchParams {
    pub fn validate(&self) -> Result<(), GraphError> {
        self.growth.validate()?;
        if self.tolerance < 0.0 {
            return Err(GraphError::InvalidParams("tolerance must be >= 0".into()));
        }
        if self.stable_limit < 1 {
            return Err(GraphError::InvalidParams("stable_limit must be >= 1".into()));
        }
        if self.ensemble_size < 1 {
            return Err(GraphError::InvalidParams("ensemble_size must be >= 1".into()));
        }
        self.tree_gen
            .validate()
            .map_err(GraphError::InvalidParams)?;
        Ok(())
    }
}

/// A program together with the report of its one evaluation. Champion
/// fitness is frozen at evaluation time and never re-measured.
#[derive(Debug, Clone, PartialEq)]
pub struct Champion {
    pub program: GeneratorProgram,
    pub report: FitnessReport,
}

impl Champion {
    pub fn fitness(&self) -> f64 {
        self.report.fitness
    }

    pub fn length(&self) -> usize {
        self.program.length()
    }
}

/// What happened to the champions in one generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Event {
    Init,
    None,
    Best,
    Short,
    Both,
}

impl Event {
    pub fn as_str(self) -> &'static str {
        match self {
            Event::Init => "init",
            Event::None => "none",
            Event::Best => "best",
            Event::Short => "short",
            Event::Both => "both",
        }
    }
}

/// One history row: the evaluated child's fitness and length plus the event
/// it triggered.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryRecord {
    pub generation: u64,
    pub event: Event,
    pub fitness: f64,
    pub length: usize,
}

/// Immutable surroundings of a search run.
pub struct SearchCtx<'a> {
    pub target_profile: &'a MetricProfile,
    pub norms: &'a BaselineNorms,
    pub n: usize,
    pub m: usize,
    pub directed: bool,
    pub params: &'a SearchParams,
}

#[derive(Debug, Clone)]
pub struct SearchState {
    best: Champion,
    shortest: Champion,
    generation: u64,
    stable_count: u32,
    history: Vec<HistoryRecord>,
}

impl SearchState {
    pub fn best(&self) -> &Champion {
        &self.best
    }

    pub fn shortest(&self) -> &Champion {
        &self.shortest
    }

    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub fn stable_count(&self) -> u32 {
        self.stable_count
    }

    pub fn history(&self) -> &[HistoryRecord] {
        &self.history
    }

    /// Champion replacement rules:
    /// (a) a strictly better child becomes the best champion;
    /// (b) if that pushed the shortest champion outside the tolerance, the
    ///     new best takes over as shortest too;
    /// (c) a child within tolerance that is shorter than the shortest
    ///     champion (or as short with strictly better fitness) becomes the
    ///     shortest champion.
    fn consider(&mut self, child: Champion, tolerance: f64) -> Event {
        let mut best_changed = false;
        let mut short_changed = false;
        if child.fitness() < self.best.fitness() {
            self.best = child.clone();
            best_changed = true;
            if self.shortest.fitness() > (1.0 + tolerance) * self.best.fitness() {
                self.shortest = self.best.clone();
                short_changed = true;
            }
        }
        if child.fitness() <= (1.0 + tolerance) * self.best.fitness() {
            let shorter = child.length() < self.shortest.length();
            let tie_break = child.length() == self.shortest.length()
                && child.fitness() < self.shortest.fitness();
            if shorter || tie_break {
                self.shortest = child;
                short_changed = true;
            }
        }
        match (best_changed, short_changed) {
            (true, true) => Event::Both,
            (true, false) => Event::Best,
            (false, true) => Event::Short,
            (false, false) => Event::None,
        }
    }

    fn record(&mut self, event: Event, fitness: f64, length: usize) {
        self.history.push(HistoryRecord {
            generation: self.generation,
            event,
            fitness,
            length,
        });
    }
}

fn evaluate_program(
    program: GeneratorProgram,
    ctx: &SearchCtx<'_>,
    grow_seed: u64,
) -> Result<Champion, SearchError> {
    let graph = grow_network(&program, ctx.n, ctx.m, &ctx.params.growth, grow_seed)?;
    let profile = MetricProfile::compute(&graph, &ctx.params.metrics);
    let report = fitness(&profile, ctx.target_profile, ctx.norms)?;
    Ok(Champion { program, report })
}

/// Start a run: one random program evaluated once, both champions set to it.
pub fn init_state(ctx: &SearchCtx<'_>) -> Result<SearchState, SearchError> {
    let seed = ctx.params.seed;
    let mut rng = sub_rng(seed, Stream::InitProgram, 0);
    let program = random_program(&ctx.params.tree_gen, ctx.directed, &mut rng);
    let champion = evaluate_program(program, ctx, sub_seed(seed, Stream::Growth, 0))?;
    let mut state = SearchState {
        best: champion.clone(),
        shortest: champion.clone(),
        generation: 0,
        stable_count: 0,
        history: Vec::new(),
    };
    state.record(Event::Init, champion.fitness(), champion.length());
    Ok(state)
}

/// Run one generation: mutate a uniformly chosen champion, evaluate the
/// child, apply the replacement rules. The stability counter resets on any
/// champion change and increments otherwise.
pub fn step_generation(
    state: &mut SearchState,
    ctx: &SearchCtx<'_>,
) -> Result<Event, SearchError> {
    let seed = ctx.params.seed;
    let generation = state.generation + 1;
    let mut rng = sub_rng(seed, Stream::Mutation, generation);
    let parent = if rng.gen_bool(0.5) {
        &state.best
    } else {
        &state.shortest
    };
    let child_program = mutate(&parent.program, &ctx.params.tree_gen, &mut rng);
    let child = evaluate_program(child_program, ctx, sub_seed(seed, Stream::Growth, generation))?;
    let (child_fitness, child_length) = (child.fitness(), child.length());
    let event = state.consider(child, ctx.params.tolerance);
    state.generation = generation;
    if event == Event::None {
        state.stable_count += 1;
    } else {
        state.stable_count = 0;
    }
    state.record(event, child_fitness, child_length);
    Ok(event)
}

/// Everything a finished run produced.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// The best-fitness champion.
    pub best: Champion,
    /// The shortest champion within tolerance: the run's result.
    pub shortest: Champion,
    pub history: Vec<HistoryRecord>,
    pub generations: u64,
    pub norms: BaselineNorms,
}

/// Full search run against a target network.
///
/// `cached_norms` skips the baseline-ensemble computation when the caller
/// already holds norms for this target and parameter set.
pub fn run_search(
    target: &GrowthGraph,
    params: &SearchParams,
    cached_norms: Option<BaselineNorms>,
) -> Result<SearchOutcome, SearchError> {
    params.validate()?;
    let target_profile = MetricProfile::compute(target, &params.metrics);
    let norms = match cached_norms {
        Some(norms) => norms,
        None => baseline_norms(
            target,
            params.ensemble_size,
            &params.metrics,
            sub_seed(params.seed, Stream::Baseline, 0),
        )?,
    };
    let ctx = SearchCtx {
        target_profile: &target_profile,
        norms: &norms,
        n: target.vertex_count(),
        m: target.arc_count(),
        directed: target.is_directed(),
        params,
    };
    let mut state = init_state(&ctx)?;
    while state.stable_count < params.stable_limit {
        step_generation(&mut state, &ctx)?;
    }
    Ok(SearchOutcome {
        best: state.best.clone(),
        shortest: state.shortest.clone(),
        generations: state.generation,
        history: std::mem::take(&mut state.history),
        norms,
    })
}

/// Write history as CSV: `generation,event,fitness,length`.
pub fn write_history_csv(records: &[HistoryRecord], out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "generation,event,fitness,length")?;
    for r in records {
        writeln!(out, "{},{},{},{}", r.generation, r.event.as_str(), r.fitness, r.length)?;
    }
    Ok(())
}
