use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use netmorph::evolve::{run_search, write_history_csv, SearchParams};
use netmorph::fitness::{
    baseline_norms, fitness, load_cached_norms, metric_params_hash, store_cached_norms,
    BaselineNorms, FitnessError,
};
use netmorph::genlang::{parse_program, GeneratorProgram, LangError};
use netmorph::gensim::generator_dissimilarity;
use netmorph::graph::{parse_edge_list, GraphError, GrowthGraph};
use netmorph::growth::grow_network;
use netmorph::netmetrics::{dissimilarity_vector, Metric, MetricParams, MetricProfile};
use netmorph::rng::{sub_rng, sub_seed, Stream};
use netmorph::FitnessReport;

use crate::Command;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Runtime(String),
}

impl From<GraphError> for CliError {
    fn from(err: GraphError) -> Self {
        match err {
            GraphError::EdgeList { .. } => CliError::Input(err.to_string()),
            GraphError::InvalidParams(_) => CliError::Usage(err.to_string()),
            _ => CliError::Runtime(err.to_string()),
        }
    }
}

impl From<FitnessError> for CliError {
    fn from(err: FitnessError) -> Self {
        match err {
            FitnessError::Graph(inner) => inner.into(),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<netmorph::evolve::SearchError> for CliError {
    fn from(err: netmorph::evolve::SearchError) -> Self {
        match err {
            netmorph::evolve::SearchError::Graph(inner) => inner.into(),
            netmorph::evolve::SearchError::Fitness(inner) => inner.into(),
        }
    }
}

fn lang_error(path: &Path, err: LangError) -> CliError {
    CliError::Input(format!("{}: {err}", path.display()))
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("{}: {err}", path.display())))
}

fn write_output(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes)
        .map_err(|err| CliError::Runtime(format!("{}: {err}", path.display())))
}

fn load_program(path: &Path, directed: bool) -> Result<GeneratorProgram, CliError> {
    let text = read_input(path)?;
    parse_program(&text, directed).map_err(|err| lang_error(path, err))
}

fn load_target(
    path: &Path,
    directed: bool,
    shuffle_ids: bool,
    seed: u64,
) -> Result<GrowthGraph, CliError> {
    let text = read_input(path)?;
    let (graph, _labels) = parse_edge_list(&text, directed)?;
    if graph.vertex_count() == 0 {
        return Err(CliError::Input(format!(
            "{}: no edges found",
            path.display()
        )));
    }
    if shuffle_ids {
        let mut rng = sub_rng(seed, Stream::IdShuffle, 0);
        let perm = netmorph::rng::random_permutation(graph.vertex_count(), &mut rng);
        Ok(graph.relabel(&perm))
    } else {
        Ok(graph)
    }
}

fn cache_dir() -> PathBuf {
    std::env::var_os("NETMORPH_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".netmorph-cache"))
}

/// Baseline norms for a target: cache hit if available, otherwise computed
/// and stored.
fn norms_for_target(
    target: &GrowthGraph,
    ensemble: u32,
    metrics: &MetricParams,
    baseline_seed: u64,
) -> Result<BaselineNorms, CliError> {
    let dir = cache_dir();
    let target_hash = target.content_hash();
    let params_hash = metric_params_hash(metrics);
    if let Some(norms) =
        load_cached_norms(&dir, &target_hash, &params_hash, ensemble, baseline_seed)
    {
        return Ok(norms);
    }
    let norms = baseline_norms(target, ensemble, metrics, baseline_seed)?;
    if let Err(err) = store_cached_norms(&dir, &norms) {
        eprintln!("warning: could not store baseline cache: {err}");
    }
    Ok(norms)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

#[derive(Serialize)]
struct TargetInfo {
    path: String,
    vertices: usize,
    arcs: usize,
    directed: bool,
    hash: String,
}

#[derive(Serialize)]
struct ProgramSummary {
    program: String,
    length: usize,
    report: FitnessReport,
}

#[derive(Serialize)]
struct RunReport<'a> {
    seed: u64,
    params: &'a SearchParams,
    target: TargetInfo,
    generations: u64,
    best: ProgramSummary,
    shortest: ProgramSummary,
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Synth {
            program,
            vertices,
            arcs,
            undirected,
            seed,
            out,
            growth,
        } => {
            let prog = load_program(&program, !undirected)?;
            let params = growth.to_params();
            params.validate()?;
            let graph = grow_network(&prog, vertices, arcs, &params, sub_seed(seed, Stream::Synth, 0))?;
            let mut bytes = Vec::new();
            graph
                .write_edge_list(&mut bytes)
                .expect("in-memory write cannot fail");
            write_output(&out, &bytes)?;
            println!(
                "wrote {} arcs over {} vertices to {}",
                graph.arc_count(),
                graph.vertex_count(),
                out.display()
            );
            Ok(())
        }

        Command::Evolve {
            target,
            undirected,
            seed,
            out_dir,
            tolerance,
            stable_gens,
            ensemble,
            shuffle_ids,
            growth,
        } => {
            let graph = load_target(&target, !undirected, shuffle_ids, seed)?;
            let params = SearchParams {
                seed,
                tolerance,
                stable_limit: stable_gens,
                ensemble_size: ensemble,
                growth: growth.to_params(),
                metrics: MetricParams::default(),
                ..SearchParams::default()
            };
            params.validate()?;
            let norms = norms_for_target(
                &graph,
                ensemble,
                &params.metrics,
                sub_seed(seed, Stream::Baseline, 0),
            )?;
            let outcome = run_search(&graph, &params, Some(norms))?;

            fs::create_dir_all(&out_dir)
                .map_err(|err| CliError::Runtime(format!("{}: {err}", out_dir.display())))?;
            let report = RunReport {
                seed,
                params: &params,
                target: TargetInfo {
                    path: target.display().to_string(),
                    vertices: graph.vertex_count(),
                    arcs: graph.arc_count(),
                    directed: graph.is_directed(),
                    hash: graph.content_hash(),
                },
                generations: outcome.generations,
                best: ProgramSummary {
                    program: outcome.best.program.to_string(),
                    length: outcome.best.length(),
                    report: outcome.best.report.clone(),
                },
                shortest: ProgramSummary {
                    program: outcome.shortest.program.to_string(),
                    length: outcome.shortest.length(),
                    report: outcome.shortest.report.clone(),
                },
            };
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            write_output(&out_dir.join("run.json"), json.as_bytes())?;

            let mut csv = Vec::new();
            write_history_csv(&outcome.history, &mut csv).expect("in-memory write");
            write_output(&out_dir.join("history.csv"), &csv)?;

            write_output(
                &out_dir.join("best.gen"),
                format!("{}\n", outcome.best.program).as_bytes(),
            )?;
            write_output(
                &out_dir.join("shortest.gen"),
                format!("{}\n", outcome.shortest.program).as_bytes(),
            )?;

            let synthetic = grow_network(
                &outcome.shortest.program,
                graph.vertex_count(),
                graph.arc_count(),
                &params.growth,
                sub_seed(seed, Stream::Synth, 1),
            )?;
            let mut edges = Vec::new();
            synthetic
                .write_edge_list(&mut edges)
                .expect("in-memory write");
            write_output(&out_dir.join("synthetic.edges"), &edges)?;

            println!(
                "{} generations; shortest: {} (length {}, fitness {:.6}); best fitness {:.6}",
                outcome.generations,
                outcome.shortest.program,
                outcome.shortest.length(),
                outcome.shortest.fitness(),
                outcome.best.fitness()
            );
            println!("run directory: {}", out_dir.display());
            Ok(())
        }

        Command::Eval {
            program,
            candidate,
            target,
            undirected,
            seed,
            ensemble,
            shuffle_ids,
            growth,
        } => {
            let directed = !undirected;
            let graph = load_target(&target, directed, shuffle_ids, seed)?;
            let metrics = MetricParams::default();
            let norms = norms_for_target(
                &graph,
                ensemble,
                &metrics,
                sub_seed(seed, Stream::Baseline, 0),
            )?;
            let target_profile = MetricProfile::compute(&graph, &metrics);
            let candidate_profile = match (program, candidate) {
                (Some(path), None) => {
                    let prog = load_program(&path, directed)?;
                    let params = growth.to_params();
                    params.validate()?;
                    let grown = grow_network(
                        &prog,
                        graph.vertex_count(),
                        graph.arc_count(),
                        &params,
                        sub_seed(seed, Stream::Growth, 0),
                    )?;
                    MetricProfile::compute(&grown, &metrics)
                }
                (None, Some(path)) => {
                    let candidate_graph = load_target(&path, directed, false, seed)?;
                    MetricProfile::compute(&candidate_graph, &metrics)
                }
                _ => {
                    return Err(CliError::Usage(
                        "exactly one of --program or --candidate is required".into(),
                    ))
                }
            };
            let report = fitness(&candidate_profile, &target_profile, &norms)?;
            print_json(&report);
            Ok(())
        }

        Command::Compare {
            a,
            b,
            undirected,
            hist_dir,
        } => {
            let directed = !undirected;
            let graph_a = load_target(&a, directed, false, 0)?;
            let graph_b = load_target(&b, directed, false, 0)?;
            let metrics = MetricParams::default();
            let profile_a = MetricProfile::compute(&graph_a, &metrics);
            let profile_b = MetricProfile::compute(&graph_b, &metrics);
            let vector = dissimilarity_vector(&profile_a, &profile_b)
                .map_err(|err| CliError::Runtime(err.to_string()))?;
            print_json(&vector);
            if let Some(dir) = hist_dir {
                fs::create_dir_all(&dir)
                    .map_err(|err| CliError::Runtime(format!("{}: {err}", dir.display())))?;
                for (tag, profile) in [("a", &profile_a), ("b", &profile_b)] {
                    dump_histograms(&dir, tag, profile)?;
                }
                eprintln!("histograms: {}", dir.display());
            }
            Ok(())
        }

        Command::Baseline {
            target,
            count,
            undirected,
            seed,
            shuffle_ids,
        } => {
            let graph = load_target(&target, !undirected, shuffle_ids, seed)?;
            let metrics = MetricParams::default();
            let norms = norms_for_target(
                &graph,
                count,
                &metrics,
                sub_seed(seed, Stream::Baseline, 0),
            )?;
            print_json(&norms);
            Ok(())
        }

        Command::Gensim {
            a,
            b,
            vertices,
            arcs,
            undirected,
            seed,
            growth,
        } => {
            let directed = !undirected;
            let prog_a = load_program(&a, directed)?;
            let prog_b = load_program(&b, directed)?;
            let params = growth.to_params();
            params.validate()?;
            let result = generator_dissimilarity(&prog_a, &prog_b, vertices, arcs, &params, seed)?;
            print_json(&result);
            Ok(())
        }
    }
}

fn dump_histograms(dir: &Path, tag: &str, profile: &MetricProfile) -> Result<(), CliError> {
    let hist_metrics: &[(Metric, &str)] = &[
        (Metric::DistanceDirected, "d_d"),
        (Metric::DistanceUndirected, "d_u"),
    ];
    for &(metric, name) in hist_metrics {
        if let Some(hist) = profile.distance_hist(metric) {
            let mut bytes = Vec::new();
            hist.write_lines(&mut bytes).expect("in-memory write");
            write_output(&dir.join(format!("{tag}_{name}.hist")), &bytes)?;
        }
    }
    let class_names: &[&str] = if profile.is_directed() {
        &netmorph::netmetrics::DIRECTED_CLASS_NAMES
    } else {
        &netmorph::netmetrics::UNDIRECTED_CLASS_NAMES
    };
    let mut bytes = Vec::new();
    for (name, count) in class_names.iter().zip(profile.triad_counts()) {
        writeln!(&mut bytes, "{name} {count}").expect("in-memory write");
    }
    write_output(&dir.join(format!("{tag}_tau.hist")), &bytes)?;
    Ok(())
}
