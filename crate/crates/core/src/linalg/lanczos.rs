//! Lanczos iteration for the algebraically largest eigenpair of a symmetric operator.
//!
//! Every new Krylov vector is re-orthogonalised against the whole stored basis
//! (twice, classical Gram-Schmidt). When the basis reaches its cap the iteration
//! restarts from the current Ritz vector.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::dense::tridiagonal_eigen;
use crate::error::{Error, Result};
use crate::graph::uniform_unit;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LanczosOptions {
    /// Target for `||Op x - theta x||` with `||x|| = 1`.
    pub tol: f64,
    /// Cap on operator applications.
    pub max_matvecs: usize,
    /// Krylov basis size before a restart.
    pub basis: usize,
    pub seed: u64,
}

impl Default for LanczosOptions {
    fn default() -> Self {
        LanczosOptions { tol: 1e-9, max_matvecs: 20_000, basis: 300, seed: 0x5eed }
    }
}

/// A converged (or best available) Ritz pair.
#[derive(Clone, Debug)]
pub struct RitzPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub matvecs: usize,
    pub restarts: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Largest eigenpair of the symmetric operator `apply` on `dim`-vectors.
///
/// `project`, when given, is applied to the start vector and to every operator output;
/// it must be an orthogonal projector commuting with the operator (for example, removal
/// of a known eigenvector), and confines the search to its range.
pub fn largest_eigenpair(
    dim: usize,
    mut apply: impl FnMut(&[f64], &mut [f64]),
    project: Option<&dyn Fn(&mut [f64])>,
    opts: &LanczosOptions,
) -> Result<RitzPair> {
    if dim == 0 {
        return Err(Error::invalid("empty operator"));
    }
    let proj = |x: &mut [f64]| {
        if let Some(p) = project {
            p(x)
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut start: Vec<f64> = (0..dim).map(|_| uniform_unit(&mut rng) - 0.5).collect();
    proj(&mut start);
    let s = norm(&start);
    if s == 0.0 {
        return Err(Error::invalid("projection removes the whole space"));
    }
    start.iter_mut().for_each(|x| *x /= s);

    let basis_cap = opts.basis.clamp(2, dim.max(2));
    let mut matvecs = 0usize;
    let mut restarts = 0usize;
    let mut best = RitzPair { value: f64::NAN, vector: start.clone(), residual: f64::INFINITY, matvecs: 0, restarts: 0 };
    let mut w = vec![0.0; dim];

    loop {
        let mut basis: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut exhausted = false;

        loop {
            let j = alpha.len();
            apply(&basis[j], &mut w);
            matvecs += 1;
            proj(&mut w);
            let a = dot(&w, &basis[j]);
            alpha.push(a);
            axpy(-a, &basis[j], &mut w);
            if j > 0 {
                axpy(-beta[j - 1], &basis[j - 1], &mut w);
            }
            for _ in 0..2 {
                for q in &basis {
                    let c = dot(&w, q);
                    axpy(-c, q, &mut w);
                }
            }
            let b = norm(&w);
            let steps = alpha.len();
            let at_cap = steps >= basis_cap || steps >= dim;
            let invariant = b <= 1e-12 * (1.0 + a.abs());
            let check = at_cap || invariant || steps % 10 == 0 || matvecs >= opts.max_matvecs;
            if check {
                let t = tridiagonal_eigen(&alpha, &beta, true);
                let k = steps - 1;
                let y = &t.vectors.as_ref().expect("requested")[k * steps..(k + 1) * steps];
                let estimate = (b * y[steps - 1]).abs();
                if estimate <= opts.tol * 0.5 || at_cap || invariant || matvecs >= opts.max_matvecs {
                    let mut x = vec![0.0; dim];
                    for (yi, q) in y.iter().zip(&basis) {
                        axpy(*yi, q, &mut x);
                    }
                    let nx = norm(&x);
                    x.iter_mut().for_each(|v| *v /= nx);
                    apply(&x, &mut w);
                    matvecs += 1;
                    proj(&mut w);
                    let value = dot(&x, &w);
                    axpy(-value, &x, &mut w);
                    let residual = norm(&w);
                    if residual < best.residual {
                        best = RitzPair { value, vector: x.clone(), residual, matvecs, restarts };
                    }
                    if residual <= opts.tol {
                        best.matvecs = matvecs;
                        return Ok(best);
                    }
                    if matvecs >= opts.max_matvecs {
                        return Err(Error::Convergence {
                            estimate: best.value,
                            residual: best.residual,
                            iterations: matvecs,
                        });
                    }
                    if estimate <= opts.tol * 0.5 || at_cap || invariant {
                        start = x;
                        exhausted = true;
                    }
                }
            }
            if exhausted {
                break;
            }
            beta.push(b);
            w.iter_mut().for_each(|v| *v /= b);
            basis.push(core::mem::replace(&mut w, vec![0.0; dim]));
        }
        restarts += 1;
    }
}
