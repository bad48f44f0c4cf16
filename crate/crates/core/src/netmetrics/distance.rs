//! Exact BFS distance histograms.

use rand::Rng;
use std::collections::VecDeque;
use std::io::{self, Write};

use crate::graph::GrowthGraph;

/// Histogram key: an integer distance or the unreachable overflow bin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bin {
    Finite(u32),
    Unreachable,
}

impl std::fmt::Display for Bin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bin::Finite(d) => write!(f, "{d}"),
            Bin::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Counts per bin.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Histogram {
    bins: std::collections::BTreeMap<Bin, u64>,
}

impl Histogram {
    pub fn new() -> Self {
        Histogram::default()
    }

    pub fn add(&mut self, bin: Bin) {
        *self.bins.entry(bin).or_insert(0) += 1;
    }

    pub fn count(&self, bin: Bin) -> u64 {
        self.bins.get(&bin).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.bins.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bin, u64)> + '_ {
        self.bins.iter().map(|(&b, &c)| (b, c))
    }

    /// Plot-ready dump: one `bin count` line per occupied bin.
    pub fn write_lines(&self, out: &mut impl Write) -> io::Result<()> {
        for (bin, count) in self.iter() {
            writeln!(out, "{bin} {count}")?;
        }
        Ok(())
    }
}

/// Which distances a histogram measures on a directed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    /// Follow arcs.
    Directed,
    /// Ignore arc orientation.
    Undirected,
}

fn bfs(g: &GrowthGraph, source: u32, mode: DistanceMode, dist: &mut [u32]) {
    dist.fill(u32::MAX);
    dist[source as usize] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        let push = |v: u32, dist: &mut [u32], queue: &mut VecDeque<u32>| {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        };
        for &v in g.out_neighbors(u) {
            push(v, dist, &mut queue);
        }
        if mode == DistanceMode::Undirected && g.is_directed() {
            for &v in g.in_neighbors(u) {
                push(v, dist, &mut queue);
            }
        }
    }
}

/// Histogram of exact BFS distances over ordered (source, target) pairs.
///
/// Sources are all vertices when `source_cap >= n`, otherwise `source_cap`
/// vertices chosen uniformly without replacement. Unreached targets land in
/// the overflow bin, so bin counts always sum to `sources * (n - 1)`.
pub fn distance_histogram(
    g: &GrowthGraph,
    mode: DistanceMode,
    source_cap: usize,
    rng: &mut impl Rng,
) -> Histogram {
    debug_assert!(
        g.is_directed() || mode == DistanceMode::Undirected,
        "directed distances need a directed graph"
    );
    let n = g.vertex_count();
    let sources: Vec<u32> = if source_cap >= n {
        (0..n as u32).collect()
    } else {
        let mut all: Vec<u32> = (0..n as u32).collect();
        for k in 0..source_cap {
            let pick = rng.gen_range(k..all.len());
            all.swap(k, pick);
        }
        all.truncate(source_cap);
        all
    };
    let mut hist = Histogram::new();
    let mut dist = vec![u32::MAX; n];
    for &s in &sources {
        bfs(g, s, mode, &mut dist);
        for v in 0..n as u32 {
            if v == s {
                continue;
            }
            match dist[v as usize] {
                u32::MAX => hist.add(Bin::Unreachable),
                d => hist.add(Bin::Finite(d)),
            }
        }
    }
    hist
}
