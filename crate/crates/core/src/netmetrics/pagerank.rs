//! PageRank by power iteration with uniform dangling redistribution.

use crate::graph::GrowthGraph;

/// Per-vertex PageRank scores, summing to 1.
///
/// `reverse` scores the graph with every arc inverted (identical to forward
/// PageRank on undirected graphs). Iteration stops when the L1 change drops
/// below `tol` or after `max_iter` sweeps.
pub fn pagerank(
    g: &GrowthGraph,
    reverse: bool,
    damping: f64,
    tol: f64,
    max_iter: u32,
) -> Vec<f64> {
    let n = g.vertex_count();
    assert!(n >= 1, "pagerank needs at least one vertex");
    let nf = n as f64;

    // On the (possibly inverted) graph: predecessors of v and out-degree.
    let preds = |v: u32| -> &[u32] {
        if reverse && g.is_directed() {
            g.out_neighbors(v)
        } else {
            g.in_neighbors(v)
        }
    };
    let out_degree = |v: u32| -> u32 {
        if g.is_directed() {
            if reverse {
                g.indeg(v)
            } else {
                g.outdeg(v)
            }
        } else {
            g.degree(v)
        }
    };

    let mut x = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iter {
        let dangling: f64 = (0..n as u32)
            .filter(|&v| out_degree(v) == 0)
            .map(|v| x[v as usize])
            .sum();
        let base = (1.0 - damping) / nf + damping * dangling / nf;
        for v in 0..n as u32 {
            let mut acc = 0.0;
            for &u in preds(v) {
                acc += x[u as usize] / out_degree(u) as f64;
            }
            next[v as usize] = base + damping * acc;
        }
        let delta: f64 = x
            .iter()
            .zip(next.iter())
            .map(|(a, b)| (a - b).abs())
            .sum();
        std::mem::swap(&mut x, &mut next);
        if delta < tol {
            break;
        }
    }
    let sum: f64 = x.iter().sum();
    for v in x.iter_mut() {
        *v /= sum;
    }
    x
}
