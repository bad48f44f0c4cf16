//! Connected triad profiles.
//!
//! Directed graphs are profiled over the 13 connected classes of the
//! standard triad census (dyadic and empty classes excluded); undirected
//! graphs over the 2 connected classes (path, triangle). Profiles are
//! normalized frequency vectors.

use crate::graph::GrowthGraph;

/// Names of the 13 connected directed triad classes, in profile order.
pub const DIRECTED_CLASS_NAMES: [&str; 13] = [
    "021D", "021U", "021C", "111D", "111U", "030T", "030C", "201", "120D", "120U", "120C",
    "210", "300",
];

/// Names of the 2 connected undirected triad classes, in profile order.
pub const UNDIRECTED_CLASS_NAMES: [&str; 2] = ["path", "triangle"];

// Batagelj–Mrvar triad-type lookup: the 6-bit adjacency code of an ordered
// vertex triple maps to one of the 16 census classes
// (003, 012, 102, 021D, 021U, 021C, 111D, 111U, 030T, 030C, 201,
//  120D, 120U, 120C, 210, 300).
const TRITYPES: [u8; 64] = [
    0, 1, 1, 2, 1, 3, 5, 7, 1, 5, 4, 6, 2, 7, 6, 10, 1, 5, 3, 7, 4, 8, 8, 12, 5, 9, 8, 13, 6,
    13, 11, 14, 1, 4, 5, 6, 5, 8, 9, 13, 3, 8, 8, 11, 7, 12, 13, 14, 2, 6, 7, 10, 6, 11, 13,
    14, 7, 13, 12, 14, 10, 14, 14, 15,
];

fn tricode(g: &GrowthGraph, v: u32, u: u32, w: u32) -> usize {
    let mut code = 0usize;
    if g.has_arc(v, u) {
        code |= 1;
    }
    if g.has_arc(u, v) {
        code |= 2;
    }
    if g.has_arc(v, w) {
        code |= 4;
    }
    if g.has_arc(w, v) {
        code |= 8;
    }
    if g.has_arc(u, w) {
        code |= 16;
    }
    if g.has_arc(w, u) {
        code |= 32;
    }
    code
}

fn linked(g: &GrowthGraph, a: u32, b: u32) -> bool {
    g.has_arc(a, b) || g.has_arc(b, a)
}

/// Counts of the 13 connected directed classes.
///
/// Iterates linked pairs and their joint neighborhoods, so disconnected
/// triples are never touched; each connected triple is classified exactly
/// once.
fn directed_counts(g: &GrowthGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut counts = vec![0u64; 13];
    if n < 3 {
        return counts;
    }
    let mut seen = vec![false; n];
    let mut touched: Vec<u32> = Vec::new();
    for v in 0..n as u32 {
        let mut pairs: Vec<u32> = g
            .out_neighbors(v)
            .iter()
            .chain(g.in_neighbors(v).iter())
            .copied()
            .filter(|&u| u > v)
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        for &u in &pairs {
            touched.clear();
            for &w in g.out_neighbors(u).iter().chain(g.in_neighbors(u).iter()) {
                if w != v && w != u && !seen[w as usize] {
                    seen[w as usize] = true;
                    touched.push(w);
                }
            }
            for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v).iter()) {
                if w != v && w != u && !seen[w as usize] {
                    seen[w as usize] = true;
                    touched.push(w);
                }
            }
            for &w in &touched {
                // count each triple once across its linked pairs
                if u < w || (v < w && w < u && !linked(g, v, w)) {
                    let class = TRITYPES[tricode(g, v, u, w)];
                    if class >= 3 {
                        counts[class as usize - 3] += 1;
                    }
                }
                seen[w as usize] = false;
            }
        }
    }
    counts
}

/// Counts of connected undirected triples: (path, triangle).
fn undirected_counts(g: &GrowthGraph) -> Vec<u64> {
    let n = g.vertex_count();
    if n < 3 {
        return vec![0, 0];
    }
    let mut triangle_incidences = 0u64;
    for (u, v) in g.arcs() {
        let (small, large) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
        for &w in g.out_neighbors(small) {
            if w != large && g.has_arc(large, w) {
                triangle_incidences += 1;
            }
        }
    }
    let triangles = triangle_incidences / 3;
    let cherries: u64 = (0..n as u32)
        .map(|v| {
            let d = u64::from(g.degree(v));
            d * d.saturating_sub(1) / 2
        })
        .sum();
    let paths = cherries - 3 * triangles;
    vec![paths, triangles]
}

/// Raw counts of connected triad classes (13 directed, 2 undirected).
pub fn triad_counts(g: &GrowthGraph) -> Vec<u64> {
    if g.is_directed() {
        directed_counts(g)
    } else {
        undirected_counts(g)
    }
}

/// Normalize counts into a frequency vector; all-zero when nothing is
/// connected.
pub fn normalize_counts(counts: &[u64]) -> Vec<f64> {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return vec![0.0; counts.len()];
    }
    counts.iter().map(|&c| c as f64 / total as f64).collect()
}

/// Normalized triad profile of a graph.
pub fn triad_profile(g: &GrowthGraph) -> Vec<f64> {
    normalize_counts(&triad_counts(g))
}
