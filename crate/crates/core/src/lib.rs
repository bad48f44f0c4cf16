//! Discovery of decentralized network growth programs.
//!
//! A network *generator* is a small expression tree that maps the local
//! context of a candidate arc (vertex identifiers, degrees, walk-estimated
//! distances) to a selection weight. Networks are grown arc by arc from a
//! generator, scored against a target network with a multi-metric
//! dissimilarity normalized by an Erdős–Rényi baseline, and generators are
//! evolved by mutation-driven search with dual champions: the best-scoring
//! program and the shortest program within a fitness tolerance.
//!
//! Module map:
//! - [`genlang`]: the generator expression language (types, parsing,
//!   evaluation, random generation, mutation).
//! - [`graph`]: the simple-graph representation plus edge-list I/O.
//! - [`growth`]: candidate sampling, walk-based distance estimation and the
//!   stochastic arc-selection growth loop.
//! - [`netmetrics`]: degree/PageRank/distance/triad profiles and their
//!   dissimilarities (earth mover's distance and a ratio-based measure).
//! - [`fitness`]: Erdős–Rényi baseline normalization and the max-ratio
//!   fitness.
//! - [`evolve`]: the mutation-only search loop with anti-bloat tolerance.
//! - [`gensim`]: behavioral dissimilarity between two generators.

pub mod evolve;
pub mod fitness;
pub mod genlang;
pub mod gensim;
pub mod graph;
pub mod growth;
pub mod netmetrics;
pub mod rng;

pub use evolve::{run_search, SearchOutcome, SearchParams};
pub use fitness::{BaselineNorms, FitnessReport};
pub use genlang::{ArcContext, ExprNode, GeneratorProgram, TreeGenParams};
pub use gensim::GenDissimilarity;
pub use graph::GrowthGraph;
pub use growth::GrowthParams;
pub use netmetrics::{Metric, MetricParams, MetricProfile};
