//! Lower and upper bounds on extreme eigenvalues: the subgraph-collection bound and its
//! odd-cycle form, the closed forms for flip graphs, the box-product upper-bound
//! recursion, the chromatic and mixing-time consequences, and the limit bracket.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{subgraph_copies, SubgraphCopy};
use crate::reference::{self, LAMBDA_MIN_N4, LAMBDA_MIN_TABLE};
use crate::spectra::dense_spectrum;
use crate::Limits;

/// Slack allowed when certifying an inequality numerically.
pub const CERTIFY_SLACK: f64 = 1e-9;

/// Incidence counts of a collection of copies of a pattern `K` inside `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionStats {
    /// Fewest copies containing any vertex.
    pub m: usize,
    /// Most copies containing any edge.
    pub t: usize,
    pub per_vertex: Vec<usize>,
    /// Aligned with `G.edges()`.
    pub per_edge: Vec<usize>,
    pub copy_count: usize,
}

/// Statistics of the maximal collection: every subgraph of `g` isomorphic to `k`.
pub fn collection_stats(g: &Graph, k: &Graph, limits: &Limits) -> Result<CollectionStats> {
    let copies = subgraph_copies(k, g, limits.oracle_vertices)?;
    stats_from_copies(g, &copies)
}

/// Statistics of an explicit collection. Every copy edge must be an edge of `g`.
pub fn stats_from_copies(g: &Graph, copies: &[SubgraphCopy]) -> Result<CollectionStats> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut per_vertex = vec![0usize; g.vertex_count()];
    let mut per_edge = vec![0usize; edges.len()];
    for copy in copies {
        for &v in &copy.vertices {
            if v >= g.vertex_count() {
                return Err(Error::invalid(alloc::format!("copy vertex {v} is out of range")));
            }
            per_vertex[v] += 1;
        }
        for &(a, b) in &copy.edges {
            let key = (a.min(b), a.max(b));
            let pos = edges
                .binary_search(&key)
                .map_err(|_| Error::invalid(alloc::format!("copy edge {a}-{b} is not an edge of the host")))?;
            per_edge[pos] += 1;
        }
    }
    Ok(CollectionStats {
        m: per_vertex.iter().copied().min().unwrap_or(0),
        t: per_edge.iter().copied().max().unwrap_or(0),
        per_vertex,
        per_edge,
        copy_count: copies.len(),
    })
}

/// `-d + (k + lam_min_k) * m / t`, a lower bound on `lambda_min` of a `d`-regular graph
/// whose vertices each lie in at least `m` copies of a `k`-regular `K` and whose edges
/// each lie in at most `t`.
pub fn theorem_bound(d: usize, k: usize, lam_min_k: f64, m: usize, t: usize) -> Result<f64> {
    if t == 0 {
        return Err(Error::invalid("t must be positive"));
    }
    if k == 0 || d < k {
        return Err(Error::invalid(alloc::format!("need d >= k >= 1, got d = {d}, k = {k}")));
    }
    Ok(-(d as f64) + (k as f64 + lam_min_k) * m as f64 / t as f64)
}

/// The collection bound for copies of the odd cycle `C_{2r+1}`.
pub fn odd_cycle_bound(d: usize, r: usize, m: usize, t: usize) -> Result<f64> {
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    if t == 0 {
        return Err(Error::invalid("t must be positive"));
    }
    let s = libm::sin(PI / (4 * r + 2) as f64);
    Ok(-(d as f64) + 4.0 * s * s * m as f64 / t as f64)
}

/// `-(5 + sqrt 5)/8 * (n - 3) - (3 - sqrt 5)/8`.
pub fn assoc_lower_bound(n: usize) -> f64 {
    let r5 = libm::sqrt(5.0);
    -(5.0 + r5) / 8.0 * (n as f64 - 3.0) - (3.0 - r5) / 8.0
}

/// The pentagon bound recomputed as an odd-cycle bound with `m = n - 4`, `t = 4`.
pub fn assoc_lower_bound_via_cycles(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::Range { what: "n", value: n, min: 5, max: usize::MAX });
    }
    odd_cycle_bound(n - 3, 2, n - 4, 4)
}

/// `-(n - 3) + (2 - sqrt 2)(n - 5)/14`, from the hexagon collection. Weaker than the
/// pentagon bound.
pub fn assoc_hexagon_lower_bound(n: usize) -> f64 {
    -(n as f64 - 3.0) + (2.0 - libm::sqrt(2.0)) * (n as f64 - 5.0) / 14.0
}

/// The stored `lambda_min` values for `4 <= n <= 12`, indexed from `n = 4`.
pub fn table_base() -> Vec<(usize, f64)> {
    let mut base = vec![(4, LAMBDA_MIN_N4)];
    base.extend_from_slice(&LAMBDA_MIN_TABLE);
    base
}

/// Upper bounds on `lambda_min` for `4 <= n <= n_max`, starting from known values for
/// `n = 4, 5, ..., b` (contiguous) and extending by the cheapest split
/// `ub(n) = min_k ub(k) + ub(n - k + 2)`. Entry `i` is for `n = i + 4`.
pub fn upper_bound_sequence(base: &[(usize, f64)], n_max: usize) -> Result<Vec<f64>> {
    if base.is_empty() || base.iter().enumerate().any(|(i, &(n, _))| n != i + 4) {
        return Err(Error::invalid("base values must cover n = 4, 5, ... contiguously"));
    }
    let mut ub: Vec<f64> = base.iter().map(|&(_, v)| v).collect();
    for n in ub.len() + 4..=n_max {
        let best = (4..=n - 2)
            .filter(|&k| n - k + 2 >= 4)
            .map(|k| ub[k - 4] + ub[n - k + 2 - 4])
            .fold(f64::INFINITY, f64::min);
        ub.push(best);
    }
    ub.truncate(n_max.saturating_sub(3));
    Ok(ub)
}

/// Best split bound on `lambda_min` from the stored table; equals the table for `n <= 12`.
pub fn assoc_upper_bound(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::Range { what: "n", value: n, min: 4, max: usize::MAX });
    }
    Ok(upper_bound_sequence(&table_base(), n)?[n - 4])
}

/// Slope of the upper-bound recursion: `lambda_min(12-gon) / 10`.
pub fn upper_slope() -> f64 {
    reference::LIMIT_UPPER
}

/// Offset `c_r` for each residue `r = n mod 10`: `ub(n) <= slope * n + c_r` for every
/// `n >= n0` in the class, where `n0` is the first such `n` above 12.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidueOffset {
    pub residue: usize,
    pub n0: usize,
    pub offset: f64,
}

pub fn residue_offsets() -> Result<Vec<ResidueOffset>> {
    let ub = upper_bound_sequence(&table_base(), 22)?;
    Ok((13..=22)
        .map(|n0| ResidueOffset { residue: n0 % 10, n0, offset: ub[n0 - 4] - upper_slope() * n0 as f64 })
        .collect())
}

/// `1 + (n - 3) / |lam_min|`.
pub fn chromatic_lower_bound(n: usize, lam_min: f64) -> Result<f64> {
    if !(lam_min < 0.0) {
        return Err(Error::invalid("lambda_min must be negative"));
    }
    Ok(1.0 + (n as f64 - 3.0) / lam_min.abs())
}

/// Natural log of the Catalan number `C_m`.
pub fn ln_catalan(m: usize) -> f64 {
    let m = m as f64;
    libm::lgamma(2.0 * m + 1.0) - 2.0 * libm::lgamma(m + 1.0) - libm::log(m + 1.0)
}

/// Mixing-time sandwich `(upper, lower)` for the walk on the `n`-gon flip graph with
/// second eigenvalue `lam2`, natural log.
pub fn mixing_bounds(n: usize, lam2: f64, eps: f64) -> Result<(f64, f64)> {
    if n < 4 {
        return Err(Error::Range { what: "n", value: n, min: 4, max: usize::MAX });
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid("eps must lie in (0, 1)"));
    }
    let d = n as f64 - 3.0;
    let gap = d - lam2;
    if !(gap > 0.0) {
        return Err(Error::invalid("lambda_2 must be below the degree"));
    }
    let upper = d / gap * (ln_catalan(n - 2) - libm::log(eps));
    let lower = lam2 / (2.0 * gap);
    Ok((upper, lower))
}

/// Bracket for `lim lambda_min / n`, with the per-`n` ratios of the stored table.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitBracket {
    pub upper: f64,
    pub lower: f64,
    /// `(n, lambda_min / (n - 3))`.
    pub ratios: Vec<(usize, f64)>,
    /// `min_n lambda_min / (n - 2)`; by subadditivity the limit is at most this.
    pub subadditive_estimate: f64,
}

pub fn limit_bracket() -> LimitBracket {
    let ratios = LAMBDA_MIN_TABLE.iter().map(|&(n, v)| (n, v / (n as f64 - 3.0))).collect();
    let subadditive_estimate = table_base()
        .iter()
        .map(|&(n, v)| v / (n as f64 - 2.0))
        .fold(f64::INFINITY, f64::min);
    LimitBracket { upper: reference::LIMIT_UPPER, lower: reference::limit_lower(), ratios, subadditive_estimate }
}

/// Which side of the exact value a bound claims to lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `bound <= exact`.
    Lower,
    /// `bound >= exact`.
    Upper,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        }
    }
}

/// A bound, optionally checked against the exact quantity it bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub direction: Direction,
    pub bound: f64,
    pub exact: Option<f64>,
    /// `None` when no exact value was available.
    pub satisfied: Option<bool>,
    pub parameters: Vec<(String, f64)>,
    pub note: Option<String>,
}

impl BoundReport {
    pub fn new(name: &str, direction: Direction, bound: f64) -> Self {
        BoundReport {
            name: name.into(),
            direction,
            bound,
            exact: None,
            satisfied: None,
            parameters: Vec::new(),
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: f64) -> Self {
        self.parameters.push((key.into(), value));
        self
    }

    pub fn note(mut self, text: &str) -> Self {
        self.note = Some(text.into());
        self
    }

    pub fn with_exact(mut self, exact: f64) -> Self {
        self.exact = Some(exact);
        self.satisfied = Some(match self.direction {
            Direction::Lower => self.bound <= exact + CERTIFY_SLACK,
            Direction::Upper => self.bound + CERTIFY_SLACK >= exact,
        });
        self
    }
}

/// The collection bound for all copies of `k` in `g`, checked against dense spectra.
/// Returns `None` when `g` has no copy of `k`.
pub fn certify_collection(name: &str, g: &Graph, k: &Graph, limits: &Limits) -> Result<Option<BoundReport>> {
    let d = g.degree_tag().ok_or_else(|| Error::invalid("host graph must be regular"))?;
    let kd = k.degree_tag().ok_or_else(|| Error::invalid("pattern graph must be regular"))?;
    let stats = collection_stats(g, k, limits)?;
    if stats.copy_count == 0 {
        return Ok(None);
    }
    let lam_k = dense_spectrum(k, limits.dense_vertices)?.min();
    let bound = theorem_bound(d, kd, lam_k, stats.m, stats.t)?;
    let exact = dense_spectrum(g, limits.dense_vertices)?.min();
    Ok(Some(
        BoundReport::new(name, Direction::Lower, bound)
            .param("d", d as f64)
            .param("k", kd as f64)
            .param("lambda_min_k", lam_k)
            .param("m", stats.m as f64)
            .param("t", stats.t as f64)
            .param("copies", stats.copy_count as f64)
            .with_exact(exact),
    ))
}

/// Every closed-form bound for the `n`-gon flip graph, checked against `lam_min` and
/// `lam2` when given.
pub fn assoc_reports(n: usize, lam_min: Option<f64>, lam2: Option<f64>) -> Result<Vec<BoundReport>> {
    if n < 4 {
        return Err(Error::Range { what: "n", value: n, min: 4, max: usize::MAX });
    }
    let nf = n as f64;
    let check = |r: BoundReport, exact: Option<f64>| match exact {
        Some(x) => r.with_exact(x),
        None => r,
    };
    let mut out = Vec::new();
    if n >= 5 {
        out.push(check(
            BoundReport::new("pentagon_lower", Direction::Lower, assoc_lower_bound(n))
                .param("n", nf)
                .param("m", nf - 4.0)
                .param("t", 4.0),
            lam_min,
        ));
    }
    if n >= 6 {
        out.push(check(
            BoundReport::new("hexagon_lower", Direction::Lower, assoc_hexagon_lower_bound(n))
                .param("n", nf)
                .note("weaker than pentagon_lower"),
            lam_min,
        ));
    }
    let ub = assoc_upper_bound(n)?;
    let upper_note = if n <= 12 { "stored three-decimal value" } else { "best split of stored values" };
    out.push(check(BoundReport::new("split_upper", Direction::Upper, ub).param("n", nf).note(upper_note), lam_min));
    if let Some(lm) = lam_min.filter(|&v| v < 0.0) {
        out.push(
            BoundReport::new("chromatic_lower", Direction::Lower, chromatic_lower_bound(n, lm)?)
                .param("n", nf)
                .param("lambda_min", lm)
                .note("bounds the chromatic number; not certified here"),
        );
    }
    if let Some(l2) = lam2 {
        let eps = 0.25;
        if let Ok((upper, lower)) = mixing_bounds(n, l2, eps) {
            out.push(
                BoundReport::new("mixing_upper", Direction::Upper, upper)
                    .param("n", nf)
                    .param("lambda_2", l2)
                    .param("eps", eps)
                    .note("natural log"),
            );
            out.push(
                BoundReport::new("mixing_lower", Direction::Lower, lower)
                    .param("n", nf)
                    .param("lambda_2", l2)
                    .param("eps", eps),
            );
        }
    }
    Ok(out)
}
