//! Extreme adjacency eigenvalues: exact dense decomposition for small graphs,
//! Lanczos on shifted or deflated operators for Catalan-scale ones.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{largest_eigenpair, symmetric_eigen, LanczosOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Dense,
    Iterative,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Dense => "dense",
            Method::Iterative => "iterative",
        }
    }
}

/// Which solver to use for extreme eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    /// Dense up to `SolverOptions::auto_dense_limit` vertices, iterative beyond.
    Auto,
    Dense,
    Iterative,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    pub solver: Solver,
    pub tol: f64,
    pub seed: u64,
    pub max_matvecs: usize,
    pub basis: usize,
    /// Hard cap for the dense path.
    pub dense_limit: usize,
    /// Size up to which `Solver::Auto` picks the dense path.
    pub auto_dense_limit: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            solver: Solver::Auto,
            tol: 1e-9,
            seed: 0x5eed,
            max_matvecs: 20_000,
            basis: 300,
            dense_limit: 5000,
            auto_dense_limit: 1500,
        }
    }
}

impl SolverOptions {
    fn lanczos(&self) -> LanczosOptions {
        LanczosOptions { tol: self.tol, max_matvecs: self.max_matvecs, basis: self.basis, seed: self.seed }
    }

    fn method_for(&self, g: &Graph) -> Method {
        match self.solver {
            Solver::Dense => Method::Dense,
            Solver::Iterative => Method::Iterative,
            Solver::Auto if g.vertex_count() <= self.auto_dense_limit => Method::Dense,
            Solver::Auto if g.degree_tag().is_none() && g.vertex_count() <= self.dense_limit => Method::Dense,
            Solver::Auto => Method::Iterative,
        }
    }
}

/// One eigenvalue with a unit eigenvector and its residual `||A x - value x||`.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    pub value: f64,
    pub residual: f64,
    pub method: Method,
    /// Operator applications for the iterative path, matrix order for the dense one.
    pub iterations: usize,
    pub tolerance: f64,
    pub vector: Vec<f64>,
}

/// Eigenvalues sorted descending, repeated by multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    fn from_ascending(mut values: Vec<f64>) -> Self {
        values.reverse();
        Spectrum { eigenvalues: values }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// Second-largest eigenvalue.
    pub fn second(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

fn check_dense(g: &Graph, limit: usize) -> Result<()> {
    let size = g.vertex_count();
    if size > limit {
        return Err(Error::Capacity { what: "dense eigensolver", size, limit });
    }
    if size == 0 {
        return Err(Error::invalid("graph has no vertices"));
    }
    Ok(())
}

/// Full adjacency spectrum of `g`, which must have at most `limit` vertices.
pub fn dense_spectrum(g: &Graph, limit: usize) -> Result<Spectrum> {
    check_dense(g, limit)?;
    let n = g.vertex_count();
    let eig = symmetric_eigen(g.dense_adjacency(), n, false);
    Ok(Spectrum::from_ascending(eig.values))
}

/// Adjacency eigenpair at ascending position `k` (0 = smallest).
fn dense_eigenpair(g: &Graph, k: usize, opts: &SolverOptions) -> Result<SpectralResult> {
    check_dense(g, opts.dense_limit)?;
    let n = g.vertex_count();
    let eig = symmetric_eigen(g.dense_adjacency(), n, true);
    let vectors = eig.vectors.expect("requested");
    let vector = vectors[k * n..(k + 1) * n].to_vec();
    let value = eig.values[k];
    Ok(SpectralResult {
        value,
        residual: residual(g, value, &vector),
        method: Method::Dense,
        iterations: n,
        tolerance: opts.tol,
        vector,
    })
}

/// `||A x - value x||_2`.
pub fn residual(g: &Graph, value: f64, x: &[f64]) -> f64 {
    let mut ax = vec![0.0; x.len()];
    g.matvec(x, &mut ax);
    libm::sqrt(ax.iter().zip(x).map(|(a, b)| (a - value * b) * (a - value * b)).sum())
}

fn require_regular(g: &Graph) -> Result<usize> {
    g.degree_tag()
        .ok_or_else(|| Error::invalid("the iterative path needs a regular graph"))
}

/// Smallest adjacency eigenvalue.
///
/// The iterative path finds the top of the positive semidefinite shift `dI - A` and
/// maps it back as `d - theta`.
pub fn lambda_min(g: &Graph, opts: &SolverOptions) -> Result<SpectralResult> {
    match opts.method_for(g) {
        Method::Dense => dense_eigenpair(g, 0, opts),
        Method::Iterative => {
            let d = require_regular(g)? as f64;
            let r = largest_eigenpair(
                g.vertex_count(),
                |x, y| {
                    g.matvec(x, y);
                    for (yi, xi) in y.iter_mut().zip(x) {
                        *yi = d * xi - *yi;
                    }
                },
                None,
                &opts.lanczos(),
            )?;
            let value = d - r.value;
            Ok(SpectralResult {
                value,
                residual: residual(g, value, &r.vector),
                method: Method::Iterative,
                iterations: r.matvecs,
                tolerance: opts.tol,
                vector: r.vector,
            })
        }
    }
}

/// Second-largest adjacency eigenvalue of a connected graph.
///
/// The iterative path removes the constant Perron vector and takes the top of `A`
/// on its orthogonal complement.
pub fn lambda_2(g: &Graph, opts: &SolverOptions) -> Result<SpectralResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::invalid("the second eigenvalue needs at least two vertices"));
    }
    match opts.method_for(g) {
        Method::Dense => dense_eigenpair(g, n - 2, opts),
        Method::Iterative => {
            require_regular(g)?;
            if !g.is_connected() {
                return Err(Error::invalid("the iterative second eigenvalue needs a connected graph"));
            }
            let remove_constant = |x: &mut [f64]| {
                let mean = x.iter().sum::<f64>() / x.len() as f64;
                x.iter_mut().for_each(|v| *v -= mean);
            };
            let r = largest_eigenpair(n, |x, y| g.matvec(x, y), Some(&remove_constant), &opts.lanczos())?;
            Ok(SpectralResult {
                value: r.value,
                residual: residual(g, r.value, &r.vector),
                method: Method::Iterative,
                iterations: r.matvecs,
                tolerance: opts.tol,
                vector: r.vector,
            })
        }
    }
}

/// Spectrum of the cycle `C_m`: `2 cos(2 pi j / m)` for `j = 0..m`.
pub fn cycle_spectrum(m: usize) -> Spectrum {
    assert!(m >= 3, "a cycle needs at least three vertices");
    let mut values: Vec<f64> =
        (0..m).map(|j| 2.0 * libm::cos(2.0 * PI * j as f64 / m as f64)).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Spectrum { eigenvalues: values }
}

/// Smallest eigenvalue of the odd cycle `C_{2r+1}` in closed form, `-2 cos(pi / (2r+1))`.
pub fn odd_cycle_min(r: usize) -> f64 {
    -2.0 * libm::cos(PI / (2 * r + 1) as f64)
}

/// Both sides of `sum_{ij in E} (x_i + x_j)^2 >= (k + lambda_min(K)) * sum x^2` for a
/// `k`-regular `K` whose smallest eigenvalue is `lam_min`.
pub fn quadratic_form_sides(k_graph: &Graph, lam_min: f64, x: &[f64]) -> Result<(f64, f64)> {
    let k = k_graph
        .degree_tag()
        .ok_or_else(|| Error::invalid("the pattern graph must be regular"))?;
    if x.len() != k_graph.vertex_count() {
        return Err(Error::invalid(alloc::format!(
            "vector has {} entries, graph has {} vertices",
            x.len(),
            k_graph.vertex_count()
        )));
    }
    let lhs = k_graph.edges().map(|(i, j)| (x[i] + x[j]) * (x[i] + x[j])).sum();
    let rhs = (k as f64 + lam_min) * x.iter().map(|v| v * v).sum::<f64>();
    Ok((lhs, rhs))
}

/// [`quadratic_form_sides`] with the smallest eigenvalue computed densely.
pub fn quadratic_form_check(k_graph: &Graph, x: &[f64]) -> Result<(f64, f64)> {
    let opts = SolverOptions { solver: Solver::Dense, ..SolverOptions::default() };
    let lam = lambda_min(k_graph, &opts)?.value;
    quadratic_form_sides(k_graph, lam, x)
}

/// Smallest eigenvalue of a box product from the smallest eigenvalues of its factors.
pub fn box_spectrum_min(a: f64, b: f64) -> f64 {
    a + b
}
