//! Simple directed/undirected graphs under construction.
//!
//! `GrowthGraph` keeps adjacency lists (for O(1) uniform neighbor sampling
//! during walks), hash-set membership (for O(1) duplicate checks) and degree
//! caches. Self-loops and duplicate arcs are rejected. Undirected graphs
//! store each edge once logically; both endpoints see it in their adjacency.

use rand::Rng;
use sha2::{Digest, Sha256};
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::io::{self, Write};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(u32),
    #[error("arc {0} -> {1} already present")]
    DuplicateArc(u32, u32),
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("graph is saturated: no absent arcs left")]
    Saturated,
    #[error("requested {requested} arcs but capacity is {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone)]
pub struct GrowthGraph {
    directed: bool,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>, // unused (empty) when undirected
    out_set: Vec<HashSet<u32>>,
    indeg: Vec<u32>,
    outdeg: Vec<u32>,
    arc_count: usize,
}

impl GrowthGraph {
    pub fn new(n: usize, directed: bool) -> Self {
        GrowthGraph {
            directed,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); if directed { n } else { 0 }],
            out_set: vec![HashSet::new(); n],
            indeg: vec![0; n],
            outdeg: vec![0; n],
            arc_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Number of legal arcs: ordered pairs for directed graphs, unordered
    /// pairs for undirected ones. Self-loops are never legal.
    pub fn arc_capacity(&self) -> usize {
        let n = self.vertex_count();
        if self.directed {
            n * n.saturating_sub(1)
        } else {
            n * n.saturating_sub(1) / 2
        }
    }

    pub fn absent_arc_count(&self) -> usize {
        self.arc_capacity() - self.arc_count
    }

    pub fn indeg(&self, v: u32) -> u32 {
        self.indeg[v as usize]
    }

    pub fn outdeg(&self, v: u32) -> u32 {
        self.outdeg[v as usize]
    }

    /// Undirected degree; for directed graphs this is indeg + outdeg.
    pub fn degree(&self, v: u32) -> u32 {
        if self.directed {
            self.indeg[v as usize] + self.outdeg[v as usize]
        } else {
            self.outdeg[v as usize]
        }
    }

    /// Out-neighbors; for undirected graphs, all neighbors.
    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    /// In-neighbors; for undirected graphs, all neighbors.
    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        if self.directed {
            &self.in_adj[v as usize]
        } else {
            &self.out_adj[v as usize]
        }
    }

    /// Arc membership. Symmetric for undirected graphs.
    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.out_set[u as usize].contains(&v)
    }

    pub fn add_arc(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if (w as usize) >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_arc(u, v) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        self.out_adj[u as usize].push(v);
        self.out_set[u as usize].insert(v);
        self.outdeg[u as usize] += 1;
        self.indeg[v as usize] += 1;
        if self.directed {
            self.in_adj[v as usize].push(u);
        } else {
            self.out_adj[v as usize].push(u);
            self.out_set[v as usize].insert(u);
            self.outdeg[v as usize] += 1;
            self.indeg[u as usize] += 1;
        }
        self.arc_count += 1;
        debug_assert_eq!(self.outdeg[u as usize] as usize, self.out_adj[u as usize].len());
        Ok(())
    }

    /// All arcs, each once: ordered pairs for directed graphs, `(min, max)`
    /// pairs for undirected ones.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.out_adj.iter().enumerate().flat_map(move |(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| self.directed || u < v)
                .map(move |v| (u, v))
        })
    }

    /// Recount degrees straight from the adjacency (for invariant checks).
    pub fn recount_degrees(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.vertex_count();
        let mut indeg = vec![0u32; n];
        let mut outdeg = vec![0u32; n];
        for (u, list) in self.out_adj.iter().enumerate() {
            outdeg[u] = list.len() as u32;
            if self.directed {
                for &v in list {
                    indeg[v as usize] += 1;
                }
            }
        }
        if !self.directed {
            indeg.copy_from_slice(&outdeg);
        }
        (indeg, outdeg)
    }

    /// Content hash of the arc set (order-independent), used as cache key.
    pub fn content_hash(&self) -> String {
        let mut arcs: Vec<(u32, u32)> = self.arcs().collect();
        arcs.sort_unstable();
        let mut text = String::new();
        let _ = write!(
            text,
            "{} {} {}",
            if self.directed { "directed" } else { "undirected" },
            self.vertex_count(),
            self.arc_count
        );
        for (u, v) in arcs {
            let _ = write!(text, "\n{u} {v}");
        }
        let digest = Sha256::digest(text.as_bytes());
        let mut hex = String::with_capacity(64);
        for byte in digest {
            let _ = write!(hex, "{byte:02x}");
        }
        hex
    }

    /// Rebuild the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> GrowthGraph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut g = GrowthGraph::new(self.vertex_count(), self.directed);
        for (u, v) in self.arcs() {
            g.add_arc(perm[u as usize], perm[v as usize])
                .expect("relabeling preserves simplicity");
        }
        g
    }

    /// Write the edge list: one `src dst` pair of 1-based identifiers per
    /// line.
    pub fn write_edge_list(&self, out: &mut impl Write) -> io::Result<()> {
        for (u, v) in self.arcs() {
            writeln!(out, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// Parse an edge list: one `src dst` pair of labels per line, `#` comments.
///
/// Labels map to 0-based internal vertices in first-appearance order, so the
/// 1-based identifiers seen by generators follow the file order. Self-loops
/// and repeated arcs are skipped. Returns the graph and the label table.
pub fn parse_edge_list(
    text: &str,
    directed: bool,
) -> Result<(GrowthGraph, Vec<String>), GraphError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let src = fields.next();
        let dst = fields.next();
        let (src, dst) = match (src, dst, fields.next()) {
            (Some(s), Some(d), None) => (s, d),
            _ => {
                return Err(GraphError::EdgeList {
                    line: lineno + 1,
                    msg: format!("expected `src dst`, got `{line}`"),
                })
            }
        };
        let mut id_of = |label: &str| -> u32 {
            *index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                (labels.len() - 1) as u32
            })
        };
        let u = id_of(src);
        let v = id_of(dst);
        arcs.push((u, v));
    }
    let mut graph = GrowthGraph::new(labels.len(), directed);
    for (u, v) in arcs {
        match graph.add_arc(u, v) {
            Ok(()) | Err(GraphError::SelfLoop(_)) | Err(GraphError::DuplicateArc(..)) => {}
            Err(other) => return Err(other),
        }
    }
    Ok((graph, labels))
}

/// Draw `count` distinct absent arcs uniformly at random.
///
/// Uses rejection sampling while the absent set is large and falls back to
/// enumeration plus a partial shuffle when the graph gets dense. For
/// undirected graphs the returned orientation is random; the pair itself is
/// what is sampled.
pub fn sample_absent_arcs(
    g: &GrowthGraph,
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<(u32, u32)>, GraphError> {
    let absent = g.absent_arc_count();
    if absent == 0 {
        return Err(GraphError::Saturated);
    }
    let count = count.min(absent);
    let n = g.vertex_count() as u32;
    // Rejection sampling degrades as count approaches the absent total.
    if count * 2 >= absent {
        let mut pool: Vec<(u32, u32)> = Vec::with_capacity(absent);
        for u in 0..n {
            let lo = if g.is_directed() { 0 } else { u + 1 };
            for v in lo..n {
                if u != v && !g.has_arc(u, v) {
                    pool.push((u, v));
                }
            }
        }
        debug_assert_eq!(pool.len(), absent);
        for k in 0..count {
            let pick = rng.gen_range(k..pool.len());
            pool.swap(k, pick);
        }
        pool.truncate(count);
        if !g.is_directed() {
            for arc in pool.iter_mut() {
                if rng.gen_bool(0.5) {
                    *arc = (arc.1, arc.0);
                }
            }
        }
        return Ok(pool);
    }
    let mut chosen: HashSet<u64> = HashSet::with_capacity(count * 2);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_arc(u, v) {
            continue;
        }
        let (a, b) = if g.is_directed() || u < v { (u, v) } else { (v, u) };
        if chosen.insert(u64::from(a) * u64::from(n) + u64::from(b)) {
            out.push((u, v));
        }
    }
    Ok(out)
}

/// A uniform Erdős–Rényi graph with exactly `m` arcs and no self-loops or
/// duplicates.
pub fn erdos_renyi(
    n: usize,
    m: usize,
    directed: bool,
    rng: &mut impl Rng,
) -> Result<GrowthGraph, GraphError> {
    let mut g = GrowthGraph::new(n, directed);
    if m > g.arc_capacity() {
        return Err(GraphError::CapacityExceeded {
            requested: m,
            capacity: g.arc_capacity(),
        });
    }
    if m == 0 {
        return Ok(g);
    }
    for (u, v) in sample_absent_arcs(&g, m, rng)? {
        g.add_arc(u, v).expect("sampled arcs are absent");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{sub_rng, Stream};

    #[test]
    fn rejects_self_loops_and_duplicates() {
        let mut g = GrowthGraph::new(3, true);
        assert_eq!(g.add_arc(0, 0), Err(GraphError::SelfLoop(0)));
        g.add_arc(0, 1).unwrap();
        assert_eq!(g.add_arc(0, 1), Err(GraphError::DuplicateArc(0, 1)));
        assert!(g.add_arc(1, 0).is_ok(), "reverse arc is distinct");
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn undirected_edges_are_symmetric_and_counted_once() {
        let mut g = GrowthGraph::new(3, false);
        g.add_arc(2, 0).unwrap();
        assert!(g.has_arc(0, 2) && g.has_arc(2, 0));
        assert_eq!(g.add_arc(0, 2), Err(GraphError::DuplicateArc(0, 2)));
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(2), 1);
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn degree_caches_match_recount_after_random_insertions() {
        for directed in [true, false] {
            let mut rng = sub_rng(21, Stream::Growth, directed as u64);
            let mut g = GrowthGraph::new(12, directed);
            for _ in 0..40 {
                let (u, v) = sample_absent_arcs(&g, 1, &mut rng).unwrap()[0];
                g.add_arc(u, v).unwrap();
                let (indeg, outdeg) = g.recount_degrees();
                for v in 0..12u32 {
                    assert_eq!(g.indeg(v), indeg[v as usize]);
                    assert_eq!(g.outdeg(v), outdeg[v as usize]);
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip_and_first_appearance_ids() {
        let text = "# comment\nalpha beta\nbeta gamma # tail\ngamma alpha\n";
        let (g, labels) = parse_edge_list(text, true).unwrap();
        assert_eq!(labels, vec!["alpha", "beta", "gamma"]);
        assert_eq!(g.arc_count(), 3);
        assert!(g.has_arc(0, 1) && g.has_arc(1, 2) && g.has_arc(2, 0));

        let mut out = Vec::new();
        g.write_edge_list(&mut out).unwrap();
        let (back, _) = parse_edge_list(std::str::from_utf8(&out).unwrap(), true).unwrap();
        assert_eq!(back.arc_count(), g.arc_count());
        let mut a: Vec<_> = back.arcs().collect();
        let mut b: Vec<_> = g.arcs().collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn edge_list_skips_self_loops_and_duplicates() {
        let text = "a a\na b\na b\nb a\n";
        let (g, _) = parse_edge_list(text, true).unwrap();
        assert_eq!(g.arc_count(), 2); // a->b and b->a
        let (gu, _) = parse_edge_list(text, false).unwrap();
        assert_eq!(gu.arc_count(), 1); // single undirected edge
    }

    #[test]
    fn malformed_edge_list_is_rejected() {
        let err = parse_edge_list("a b c\n", true).unwrap_err();
        assert!(matches!(err, GraphError::EdgeList { line: 1, .. }));
    }

    #[test]
    fn content_hash_ignores_insertion_order() {
        let mut g1 = GrowthGraph::new(4, true);
        g1.add_arc(0, 1).unwrap();
        g1.add_arc(2, 3).unwrap();
        let mut g2 = GrowthGraph::new(4, true);
        g2.add_arc(2, 3).unwrap();
        g2.add_arc(0, 1).unwrap();
        assert_eq!(g1.content_hash(), g2.content_hash());
        g2.add_arc(1, 0).unwrap();
        assert_ne!(g1.content_hash(), g2.content_hash());
    }

    #[test]
    fn erdos_renyi_has_exact_arc_count() {
        let mut rng = sub_rng(22, Stream::Baseline, 0);
        let g = erdos_renyi(50, 300, true, &mut rng).unwrap();
        assert_eq!(g.arc_count(), 300);
        assert_eq!(g.arcs().count(), 300);
        let dense = erdos_renyi(10, 45, false, &mut rng).unwrap();
        assert_eq!(dense.arc_count(), 45);
        assert_eq!(dense.absent_arc_count(), 0);
        assert!(erdos_renyi(10, 46, false, &mut rng).is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let mut g = GrowthGraph::new(3, true);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 2).unwrap();
        let relabeled = g.relabel(&[2, 0, 1]);
        assert!(relabeled.has_arc(2, 0));
        assert!(relabeled.has_arc(0, 1));
        assert_eq!(relabeled.arc_count(), 2);
    }
}
