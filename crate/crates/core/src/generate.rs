//! Random instance generators for tests and `tsr gen`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::{ThresholdGraph, Vertex};
use crate::reductions::HittingSystem;

fn random_tau<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> u32 {
    rng.gen_range(1..=degree as u32)
}

/// Random labelled tree on `n >= 2` vertices (each vertex hangs off a
/// random earlier one, then ids are shuffled), thresholds uniform in
/// `1..=degree`.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<ThresholdGraph> {
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (label[rng.gen_range(0..i)], label[i])).collect();
    let mut deg = vec![0; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let tau = deg.iter().map(|&d| random_tau(rng, d)).collect();
    ThresholdGraph::from_edges(tau, &edges)
}

/// Positions of `m` threshold-2 vertices along a run, separated by up to
/// `max_gap` threshold-1 vertices. Returns the thresholds in order.
fn spaced<R: Rng + ?Sized>(rng: &mut R, m: usize, max_gap: usize) -> Vec<u32> {
    let mut tau = Vec::new();
    for i in 0..m {
        if i > 0 {
            tau.extend(std::iter::repeat_n(1, rng.gen_range(0..=max_gap)));
        }
        tau.push(2);
    }
    tau
}

/// Path with `m` threshold-2 vertices, both ends threshold 1, and random
/// threshold-1 runs of length `0..=max_gap` between consecutive
/// threshold-2 vertices. Vertices are numbered along the path.
pub fn path_with_spacing<R: Rng + ?Sized>(rng: &mut R, m: usize, max_gap: usize) -> Result<ThresholdGraph> {
    let mut tau = vec![1];
    tau.extend(spaced(rng, m, max_gap));
    tau.push(1);
    let n = tau.len();
    ThresholdGraph::from_edges(tau, &crate::graph::families::path_edges(n))
}

/// Cycle with `m` threshold-2 vertices and random threshold-1 runs
/// (including the run closing the cycle), padded to at least 3 vertices.
pub fn cycle_with_spacing<R: Rng + ?Sized>(rng: &mut R, m: usize, max_gap: usize) -> Result<ThresholdGraph> {
    let mut tau = spaced(rng, m, max_gap);
    tau.extend(std::iter::repeat_n(1, rng.gen_range(0..=max_gap)));
    while tau.len() < 3 {
        tau.push(1);
    }
    let n = tau.len();
    ThresholdGraph::from_edges(tau, &crate::graph::families::cycle_edges(n))
}

/// Disjoint paths and cycles with about `n` vertices in total (at most
/// `n`, at least 2), ids shuffled, thresholds uniform in `1..=degree`.
pub fn random_deg2<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<ThresholdGraph> {
    let n = n.max(2);
    let mut edges = Vec::new();
    let mut used = 0;
    while n - used >= 2 {
        let room = n - used;
        let cycle = room >= 3 && rng.gen_bool(0.5);
        let len = if cycle {
            rng.gen_range(3..=room)
        } else {
            rng.gen_range(2..=room)
        };
        for i in 0..len - 1 {
            edges.push((used + i, used + i + 1));
        }
        if cycle {
            edges.push((used + len - 1, used));
        }
        used += len;
    }
    let mut label: Vec<Vertex> = (0..used).collect();
    label.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (label[u], label[v])).collect();
    let mut deg = vec![0; used];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let tau = deg.iter().map(|&d| random_tau(rng, d)).collect();
    ThresholdGraph::from_edges(tau, &edges)
}

/// Connected graph on `n >= 2` vertices: a random tree plus each other
/// pair with probability `p`. Thresholds uniform in `1..=degree`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<ThresholdGraph> {
    let tree = random_tree(rng, n)?;
    let mut g = tree.graph().clone();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    let tau = (0..n).map(|v| random_tau(rng, g.degree(v))).collect();
    ThresholdGraph::new(g, tau)
}

/// Hitting system with `m` nonempty random subsets of an `n`-element
/// universe and the given `k`.
pub fn random_hitting_system<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, k: usize) -> Result<HittingSystem> {
    let sets = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            all.truncate(size);
            all
        })
        .collect();
    HittingSystem::new(n, sets, k)
}
