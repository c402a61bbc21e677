//! Symmetric eigensolver: Householder reduction to tridiagonal form followed by
//! the implicit QL iteration (the classic `tred2` / `tql2` pair).
//!
//! Matrices are stored column-major, `a[c * n + r]`, so the inner loops walk
//! contiguous memory.

use alloc::vec;
use alloc::vec::Vec;

/// Eigen-decomposition of a real symmetric matrix.
pub struct SymmetricEigen {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Column-major eigenvectors, column `k` pairs with `values[k]`; present when requested.
    pub vectors: Option<Vec<f64>>,
}

/// Decomposes the symmetric `n x n` matrix `a` (column-major). Only the lower triangle is read.
pub fn symmetric_eigen(mut a: Vec<f64>, n: usize, want_vectors: bool) -> SymmetricEigen {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return SymmetricEigen { values: Vec::new(), vectors: want_vectors.then(Vec::new) };
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut a, n, &mut d, &mut e, want_vectors);
    tql2(&mut d, &mut e, want_vectors.then_some(&mut a[..]), n);
    finish(d, want_vectors.then_some(a), n)
}

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off` (`off[i]` couples rows `i` and `i + 1`).
pub fn tridiagonal_eigen(diag: &[f64], off: &[f64], want_vectors: bool) -> SymmetricEigen {
    let n = diag.len();
    if n == 0 {
        return SymmetricEigen { values: Vec::new(), vectors: want_vectors.then(Vec::new) };
    }
    assert_eq!(off.len() + 1, n, "off-diagonal must have n - 1 entries");
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[1..].copy_from_slice(off);
    let mut v = want_vectors.then(|| {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        v
    });
    tql2(&mut d, &mut e, v.as_deref_mut(), n);
    finish(d, v, n)
}

fn finish(d: Vec<f64>, v: Option<Vec<f64>>, n: usize) -> SymmetricEigen {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = v.map(|v| {
        let mut sorted = vec![0.0; n * n];
        for (k, &i) in order.iter().enumerate() {
            sorted[k * n..(k + 1) * n].copy_from_slice(&v[i * n..(i + 1) * n]);
        }
        sorted
    });
    SymmetricEigen { values, vectors }
}

/// Householder tridiagonalisation. On return `d` holds the diagonal and `e[1..]` the
/// sub-diagonal; with `accumulate` the orthogonal transform overwrites `v`.
fn tred2(v: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64], accumulate: bool) {
    let at = |r: usize, c: usize| c * n + r;
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let f = d[i - 1];
            let mut g = libm::sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);
            for j in 0..i {
                let f = d[j];
                v[at(j, i)] = f;
                let mut g = e[j] + v[at(j, j)] * f;
                let col = &v[j * n..j * n + i];
                for k in j + 1..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let (f, g) = (d[j], e[j]);
                let col = &mut v[j * n..j * n + i];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for j in 0..n {
            d[j] = v[at(j, j)];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(k, i + 1)] * v[at(k, j)];
                }
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit QL on the tridiagonal `(d, e)`; `e[i]` couples rows `i - 1` and `i`.
fn tql2(d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>, n: usize) {
    if n == 0 {
        return;
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in &mut d[l + 2..n] {
                    *x -= h;
                }
                f += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        let (left, right) = v.split_at_mut((i + 1) * n);
                        let col_i = &mut left[i * n..];
                        let col_next = &mut right[..n];
                        for k in 0..n {
                            let hk = col_next[k];
                            col_next[k] = s * col_i[k] + c * hk;
                            col_i[k] = c * col_i[k] - s * hk;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &[f64], n: usize, eig: &SymmetricEigen) -> f64 {
        let v = eig.vectors.as_ref().unwrap();
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let x = &v[k * n..(k + 1) * n];
            for r in 0..n {
                let ax: f64 = (0..n).map(|c| a[c * n + r] * x[c]).sum();
                worst = worst.max((ax - eig.values[k] * x[r]).abs());
            }
        }
        worst
    }

    #[test]
    fn diagonal_and_two_by_two() {
        let e = symmetric_eigen(vec![3.0, 0.0, 0.0, -1.0], 2, false);
        assert_eq!(e.values, vec![-1.0, 3.0]);
        let e = symmetric_eigen(vec![0.0, 1.0, 1.0, 0.0], 2, true);
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
        assert!(residual(&[0.0, 1.0, 1.0, 0.0], 2, &e) < 1e-14);
    }

    #[test]
    fn path_graph_spectrum() {
        // P_m has eigenvalues 2 cos(pi k / (m + 1))
        let m = 30;
        let mut a = vec![0.0; m * m];
        for i in 1..m {
            a[i * m + i - 1] = 1.0;
            a[(i - 1) * m + i] = 1.0;
        }
        let e = symmetric_eigen(a.clone(), m, true);
        let mut expected: Vec<f64> = (1..=m)
            .map(|k| 2.0 * libm::cos(core::f64::consts::PI * k as f64 / (m + 1) as f64))
            .collect();
        expected.sort_by(f64::total_cmp);
        for (x, y) in e.values.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(residual(&a, m, &e) < 1e-12);
        let values_only = symmetric_eigen(a, m, false);
        for (x, y) in values_only.values.iter().zip(&e.values) {
            assert!((x - y).abs() < 1e-12);
        }
        let off = vec![1.0; m - 1];
        let t = tridiagonal_eigen(&vec![0.0; m], &off, true);
        for (x, y) in t.values.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn dense_random_symmetric() {
        let n = 25;
        let mut a = vec![0.0; n * n];
        let mut s: u64 = 12345;
        for r in 0..n {
            for c in 0..=r {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let x = (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
                a[c * n + r] = x;
                a[r * n + c] = x;
            }
        }
        let e = symmetric_eigen(a.clone(), n, true);
        assert!(residual(&a, n, &e) < 1e-12);
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-12);
    }
}
