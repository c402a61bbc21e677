//! Simple random walk on a regular graph, exact Dirichlet quotients of test functions,
//! and the second-eigenvalue gap scan.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::error::{Error, Result};
use crate::flipgraph::Associahedron;
use crate::graph::{uniform_below, Graph};
use crate::spectra::{lambda_2, SolverOptions};
use crate::triangulation::Triangulation;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Start {
    Vertex(usize),
    /// Drawn from the walk's own generator before the first step.
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkConfig {
    pub steps: u64,
    pub seed: u64,
    pub start: Start,
}

/// Where a trajectory went. `visits[v]` counts the times `v` was entered, so the counts
/// sum to `steps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkSummary {
    pub start: usize,
    pub end: usize,
    pub steps: u64,
    pub visits: Vec<u64>,
    pub returns: u64,
}

impl WalkSummary {
    /// Total-variation distance between the visit frequencies and the uniform law.
    pub fn total_variation(&self) -> f64 {
        if self.steps == 0 {
            return 1.0 - 1.0 / self.visits.len() as f64;
        }
        let u = 1.0 / self.visits.len() as f64;
        0.5 * self.visits.iter().map(|&c| (c as f64 / self.steps as f64 - u).abs()).sum::<f64>()
    }
}

fn require_walkable(g: &Graph) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    let d = g.degree_tag().ok_or_else(|| Error::invalid("graph must be regular"))?;
    if !g.is_connected() {
        return Err(Error::invalid("graph must be connected"));
    }
    Ok(d)
}

/// Runs the walk that moves to a uniform neighbour at every step. The seed fixes the
/// whole trajectory.
pub fn simulate_walk(g: &Graph, cfg: &WalkConfig) -> Result<WalkSummary> {
    let d = require_walkable(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let start = match cfg.start {
        Start::Vertex(v) if v < g.vertex_count() => v,
        Start::Vertex(v) => return Err(Error::invalid(alloc::format!("start vertex {v} is out of range"))),
        Start::Uniform => uniform_below(&mut rng, g.vertex_count()),
    };
    let mut visits = vec![0u64; g.vertex_count()];
    let mut at = start;
    let mut returns = 0;
    if d > 0 {
        for _ in 0..cfg.steps {
            at = g.neighbors(at)[uniform_below(&mut rng, d)] as usize;
            visits[at] += 1;
            returns += u64::from(at == start);
        }
    } else if cfg.steps > 0 {
        // a single isolated vertex: every step is a loop in place
        visits[at] = cfg.steps;
        returns = cfg.steps;
    }
    Ok(WalkSummary { start, end: at, steps: cfg.steps, visits, returns })
}

/// Exact Dirichlet data of a test function under one stationary walk step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TestFunctionReport {
    /// `E (f(X1) - f(X0))^2` with `X0` uniform.
    pub dirichlet: f64,
    /// Variance of `f` under the uniform law.
    pub variance: f64,
    pub quotient: f64,
    /// `quotient / 2`, an upper bound on the normalised gap `1 - lambda_2 / d`.
    pub gap_upper: f64,
}

pub fn dirichlet_quotient(g: &Graph, f: &[f64]) -> Result<TestFunctionReport> {
    let nv = g.vertex_count();
    if f.len() != nv {
        return Err(Error::invalid("test function length differs from the vertex count"));
    }
    let d = g.degree_tag().filter(|&d| d > 0).ok_or_else(|| Error::invalid("graph must be regular of positive degree"))?;
    let mean = f.iter().sum::<f64>() / nv as f64;
    let variance = f.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / nv as f64;
    let scale = f.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if !(variance > 1e-24 * scale * scale) || variance == 0.0 {
        return Err(Error::invalid("test function is constant"));
    }
    // each undirected edge is two directed steps
    let sum: f64 = g.edges().map(|(u, v)| (f[u] - f[v]) * (f[u] - f[v])).sum();
    let dirichlet = 2.0 * sum / (nv * d) as f64;
    let quotient = dirichlet / variance;
    Ok(TestFunctionReport { dirichlet, variance, quotient, gap_upper: quotient / 2.0 })
}

/// The triangle of `t` sitting at a centroid of its dual tree; among several centroids,
/// the lexicographically smallest vertex triple.
pub fn centroid_triangle(t: &Triangulation) -> [usize; 3] {
    let dt = t.dual_tree();
    dt.centroids().into_iter().map(|c| dt.triangles[c]).min().expect("a dual tree has a centroid")
}

/// `f(t)`: cyclic distance from the vertex `floor(n/4)` to the nearest corner of the
/// central triangle of `t`, with the central triangle chosen by `central`.
pub fn aldous_test_function_with(assoc: &Associahedron, central: impl Fn(&Triangulation) -> [usize; 3]) -> Result<Vec<f64>> {
    let n = assoc.n();
    if n < 6 {
        return Err(Error::Range { what: "n", value: n, min: 6, max: usize::MAX });
    }
    let p = n / 4;
    Ok(assoc
        .triangulations()
        .iter()
        .map(|t| {
            central(t)
                .iter()
                .map(|&a| {
                    let gap = a.abs_diff(p);
                    gap.min(n - gap)
                })
                .min()
                .expect("three corners") as f64
        })
        .collect())
}

pub fn aldous_test_function(assoc: &Associahedron) -> Result<Vec<f64>> {
    aldous_test_function_with(assoc, centroid_triangle)
}

/// One row of the gap scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapRow {
    pub n: usize,
    pub lambda_2: f64,
    /// `(n - 3 - lambda_2) * sqrt n`.
    pub constant: f64,
    /// `1 - lambda_2 / (n - 3)`.
    pub normalized_gap: f64,
}

pub fn gap_row(n: usize, lambda_2: f64) -> GapRow {
    let d = n as f64 - 3.0;
    GapRow { n, lambda_2, constant: (d - lambda_2) * libm::sqrt(n as f64), normalized_gap: 1.0 - lambda_2 / d }
}

/// Second eigenvalue and empirical gap constant for each `n` in `ns`.
pub fn gap_scan(ns: impl IntoIterator<Item = usize>, opts: &SolverOptions, limits: &Limits) -> Result<Vec<GapRow>> {
    ns.into_iter()
        .map(|n| {
            let a = Associahedron::with_limits(n, limits)?;
            Ok(gap_row(n, lambda_2(a.graph(), opts)?.value))
        })
        .collect()
}
