//! Command implementations. Each writes its output to a sink and returns `Err(Claims)`
//! when something it checked turned out false.

use std::io::Write;
use std::time::Instant;

use assoc_core::bounds::{
    assoc_lower_bound, assoc_lower_bound_via_cycles, assoc_hexagon_lower_bound, assoc_reports, assoc_upper_bound,
    certify_collection, limit_bracket, residue_offsets, stats_from_copies, theorem_bound, upper_slope, BoundReport,
    Direction,
};
use assoc_core::census::{census, five_cycle_total};
use assoc_core::iso::SubgraphCopy;
use assoc_core::reference::{lambda_2_table, lambda_min_table, rounds_down_to, rounds_up_to};
use assoc_core::spectra::{dense_spectrum, lambda_2, lambda_min, SolverOptions, SpectralResult};
use assoc_core::triangulation::catalan_count;
use assoc_core::walk::{aldous_test_function, dirichlet_quotient, gap_row, simulate_walk, Start, WalkConfig};
use assoc_core::{Associahedron, Graph, Limits};

use crate::error::{input, CliError, CliResult};
use crate::formats;
use crate::reports::{
    BoundJson, CertifyJson, Claim, EigenvalueJson, GapJson, OffsetJson, SpectrumJson, TableRow, TestFunctionJson,
    WalkJson,
};

/// Largest `n` for which certification runs the brute-force census oracles.
pub const CENSUS_ORACLE_MAX_N: usize = 10;
/// Largest `n` for which certification searches for every 5-cycle copy.
pub const COLLECTION_MAX_N: usize = 9;

fn write_json(mut w: impl Write, value: &impl serde::Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn flip_graph(n: usize, limits: &Limits) -> CliResult<Associahedron> {
    Ok(Associahedron::with_limits(n, limits)?)
}

pub fn cmd_enumerate(w: impl Write, n: usize, limits: &Limits) -> CliResult<()> {
    let a = flip_graph(n, limits)?;
    formats::write_triangulations(w, a.triangulations())
}

pub fn cmd_graph_edges(w: impl Write, n: usize, limits: &Limits) -> CliResult<()> {
    let a = flip_graph(n, limits)?;
    formats::write_edge_list(w, a.graph())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Min,
    Second,
    Full,
}

pub fn cmd_spectrum(
    w: impl Write,
    n: usize,
    which: Which,
    opts: &SolverOptions,
    limits: &Limits,
    timing: bool,
) -> CliResult<()> {
    let a = flip_graph(n, limits)?;
    let clock = Instant::now();
    let seconds = |c: Instant| timing.then(|| c.elapsed().as_secs_f64());
    match which {
        Which::Min | Which::Second => {
            let (label, r) = match which {
                Which::Min => ("min", lambda_min(a.graph(), opts)?),
                _ => ("second", lambda_2(a.graph(), opts)?),
            };
            let mut out = EigenvalueJson::new(n, label, &r);
            out.seconds = seconds(clock);
            write_json(w, &out)
        }
        Which::Full => {
            let spec = dense_spectrum(a.graph(), limits.dense_vertices)?;
            let out = SpectrumJson {
                n,
                which: "full",
                vertices: a.graph().vertex_count(),
                eigenvalues: spec.eigenvalues,
                seconds: seconds(clock),
            };
            write_json(w, &out)
        }
    }
}

pub fn cmd_census(mut w: impl Write, n: usize, oracle: bool, edges: bool, limits: &Limits) -> CliResult<()> {
    let a = flip_graph(n, limits)?;
    let report = census(&a, oracle, limits)?;
    formats::write_vertex_census(&mut w, &report, a.triangulations())?;
    if edges {
        writeln!(w)?;
        formats::write_edge_census(&mut w, &report)?;
    }
    let claims = census_claims(n, &a, &report);
    fail_on(&claims)
}

fn fail_on(claims: &[Claim]) -> CliResult<()> {
    let failed: Vec<String> = claims.iter().filter(|c| !c.passed).map(Claim::label).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Claims(failed))
    }
}

/// A pattern graph for user-supplied collections.
pub fn pattern_graph(name: &str) -> CliResult<Graph> {
    match name {
        "k3" => Ok(Graph::complete(3)),
        "c5" => Ok(Graph::cycle(5)),
        "c7" => Ok(Graph::cycle(7)),
        "c9" => Ok(Graph::cycle(9)),
        "a6" => Ok(assoc_core::build_associahedron(6)?),
        other => Err(input(format!("unknown pattern {other:?}; expected k3, c5, c7, c9 or a6"))),
    }
}

pub fn cmd_bounds(
    w: impl Write,
    n: usize,
    certify: bool,
    collection: Option<(&Graph, &[Vec<usize>])>,
    opts: &SolverOptions,
    limits: &Limits,
) -> CliResult<()> {
    if n < 4 {
        return Err(input("bounds need n >= 4"));
    }
    let a = if certify || collection.is_some() { Some(flip_graph(n, limits)?) } else { None };
    let (lam_min, lam2) = match (&a, certify) {
        (Some(a), true) => (Some(lambda_min(a.graph(), opts)?.value), Some(lambda_2(a.graph(), opts)?.value)),
        _ => (None, None),
    };
    let mut reports = assoc_reports(n, lam_min, lam2)?;
    if certify && n >= 5 && n <= COLLECTION_MAX_N {
        let a = a.as_ref().expect("built above");
        if let Some(r) = certify_collection("pentagon_collection", a.graph(), &Graph::cycle(5), limits)? {
            reports.push(r);
        }
    }
    if let Some((pattern, maps)) = collection {
        let a = a.as_ref().expect("built above");
        reports.push(user_collection(a.graph(), pattern, maps, lam_min, limits)?);
    }
    let json: Vec<BoundJson> = reports.iter().map(BoundJson::from).collect();
    write_json(w, &json)?;
    let failed: Vec<String> =
        reports.iter().filter(|r| r.satisfied == Some(false)).map(|r| r.name.clone()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Claims(failed))
    }
}

fn user_collection(
    g: &Graph,
    pattern: &Graph,
    maps: &[Vec<usize>],
    lam_min: Option<f64>,
    limits: &Limits,
) -> CliResult<BoundReport> {
    let d = g.degree_tag().ok_or_else(|| input("host graph is not regular"))?;
    let k = pattern.degree_tag().ok_or_else(|| input("pattern graph is not regular"))?;
    let mut copies = Vec::with_capacity(maps.len());
    for map in maps {
        if map.len() != pattern.vertex_count() {
            return Err(input(format!("copy {map:?} does not have {} vertices", pattern.vertex_count())));
        }
        let mut distinct = map.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != map.len() {
            return Err(input(format!("copy {map:?} repeats a vertex")));
        }
        copies.push(SubgraphCopy::from_map(pattern, map));
    }
    let stats = stats_from_copies(g, &copies)?;
    if stats.t == 0 {
        return Err(input("the collection is empty"));
    }
    let lam_k = dense_spectrum(pattern, limits.dense_vertices)?.min();
    let bound = theorem_bound(d, k, lam_k, stats.m, stats.t)?;
    let report = BoundReport::new("user_collection", Direction::Lower, bound)
        .param("d", d as f64)
        .param("k", k as f64)
        .param("lambda_min_k", lam_k)
        .param("m", stats.m as f64)
        .param("t", stats.t as f64)
        .param("copies", stats.copy_count as f64);
    Ok(match lam_min {
        Some(x) => report.with_exact(x),
        None => report,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum TestFn {
    None,
    Aldous,
    Eigen,
    Values(Vec<f64>),
}

pub struct WalkRequest {
    pub n: usize,
    pub steps: u64,
    pub seed: u64,
    pub start: Option<usize>,
    pub test_fn: TestFn,
}

pub fn cmd_walk(
    w: impl Write,
    visits: Option<impl Write>,
    req: &WalkRequest,
    opts: &SolverOptions,
    limits: &Limits,
) -> CliResult<()> {
    let a = flip_graph(req.n, limits)?;
    let start = req.start.map_or(Start::Uniform, Start::Vertex);
    let summary = simulate_walk(a.graph(), &WalkConfig { steps: req.steps, seed: req.seed, start })?;
    let tf = match &req.test_fn {
        TestFn::None => None,
        TestFn::Aldous => Some(("aldous", aldous_test_function(&a)?)),
        TestFn::Eigen => Some(("eigen", lambda_2(a.graph(), opts)?.vector)),
        TestFn::Values(v) => Some(("file", v.clone())),
    };
    let tf_json = match tf {
        Some((kind, f)) => Some(TestFunctionJson::new(kind, req.n, &dirichlet_quotient(a.graph(), &f)?)),
        None => None,
    };
    if let Some(out) = visits {
        let mut csv = csv::Writer::from_writer(out);
        csv.write_record(["vertex", "visits"])?;
        for (v, c) in summary.visits.iter().enumerate() {
            csv.write_record([v.to_string(), c.to_string()])?;
        }
        csv.flush()?;
    }
    write_json(w, &WalkJson::new(req.n, req.seed, &summary, tf_json))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    LambdaMin,
    Lambda2,
    Gap,
    Offsets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn round_up3(x: f64) -> f64 {
    (x * 1000.0 - 1e-6).ceil() / 1000.0
}

fn round_down3(x: f64) -> f64 {
    (x * 1000.0 + 1e-6).floor() / 1000.0
}

/// One row per `n` in `5..=n_max`, checked against the stored table where it has an entry.
pub fn run_table(kind: TableKind, n_max: usize, opts: &SolverOptions, limits: &Limits) -> CliResult<Vec<TableRow>> {
    if n_max < 5 {
        return Err(input("the table starts at n = 5"));
    }
    let mut rows = Vec::new();
    for n in 5..=n_max {
        let a = flip_graph(n, limits)?;
        let (r, rounded, reference, ok): (SpectralResult, f64, Option<f64>, bool) = match kind {
            TableKind::LambdaMin => {
                let r = lambda_min(a.graph(), opts)?;
                let reference = lambda_min_table(n);
                let ok = reference.is_none_or(|t| (r.value - t).abs() <= 1e-3 && rounds_up_to(r.value, t, 1e-9));
                (r.clone(), round_up3(r.value), reference, ok)
            }
            TableKind::Lambda2 => {
                let r = lambda_2(a.graph(), opts)?;
                let reference = lambda_2_table(n);
                let ok = reference.is_none_or(|t| (r.value - t).abs() <= 1e-3 && rounds_down_to(r.value, t, 1e-9));
                (r.clone(), round_down3(r.value), reference, ok)
            }
            _ => return Err(input("run_table reproduces lambda_min and lambda_2 only")),
        };
        rows.push(TableRow {
            n,
            n_minus_3: n - 3,
            value: r.value,
            rounded,
            reference,
            ok,
            method: r.method.as_str(),
            residual: r.residual,
        });
    }
    Ok(rows)
}

pub fn cmd_table(
    mut w: impl Write,
    kind: TableKind,
    n_max: usize,
    format: Format,
    opts: &SolverOptions,
    limits: &Limits,
) -> CliResult<()> {
    match kind {
        TableKind::LambdaMin | TableKind::Lambda2 => {
            let rows = run_table(kind, n_max, opts, limits)?;
            match format {
                Format::Json => write_json(&mut w, &rows)?,
                Format::Csv => write_csv(&mut w, &rows)?,
                Format::Text => {
                    writeln!(w, "n-3\tvalue")?;
                    for r in &rows {
                        writeln!(w, "{}\t{:.3}", r.n_minus_3, r.rounded)?;
                    }
                }
            }
            let failed: Vec<String> = rows.iter().filter(|r| !r.ok).map(|r| format!("table@{}", r.n)).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Claims(failed))
            }
        }
        TableKind::Gap => {
            if n_max < 5 {
                return Err(input("the gap scan starts at n = 5"));
            }
            let mut rows = Vec::new();
            for n in 5..=n_max {
                let a = flip_graph(n, limits)?;
                let g = gap_row(n, lambda_2(a.graph(), opts)?.value);
                rows.push(GapJson { n, lambda_2: g.lambda_2, constant: g.constant, normalized_gap: g.normalized_gap });
            }
            match format {
                Format::Json => write_json(&mut w, &rows),
                Format::Csv => write_csv(&mut w, &rows),
                Format::Text => {
                    writeln!(w, "n\tlambda_2\tc_n")?;
                    for r in &rows {
                        writeln!(w, "{}\t{:.6}\t{:.6}", r.n, r.lambda_2, r.constant)?;
                    }
                    Ok(())
                }
            }
        }
        TableKind::Offsets => {
            let rows: Vec<OffsetJson> = residue_offsets()?
                .into_iter()
                .map(|o| OffsetJson { residue: o.residue, n0: o.n0, slope: upper_slope(), offset: o.offset })
                .collect();
            match format {
                Format::Json => write_json(&mut w, &rows),
                Format::Csv => write_csv(&mut w, &rows),
                Format::Text => {
                    writeln!(w, "r\tn0\tc_r")?;
                    for r in &rows {
                        writeln!(w, "{}\t{}\t{:.4}", r.residue, r.n0, r.offset)?;
                    }
                    Ok(())
                }
            }
        }
    }
}

fn write_csv<T: serde::Serialize>(w: impl Write, rows: &[T]) -> CliResult<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

fn census_claims(n: usize, a: &Associahedron, report: &assoc_core::census::CensusReport) -> Vec<Claim> {
    let mut claims = Vec::new();
    let some = Some(n);
    if n < 5 {
        let cycles = five_cycle_total(a.graph(), usize::MAX).unwrap_or(usize::MAX);
        claims.push(Claim::new("no_five_cycles", some, cycles == 0, format!("{cycles} five-cycles")));
        return claims;
    }
    let (lo, hi) = report.pentagon_vertex_range().unwrap_or((0, 0));
    claims.push(Claim::new("pentagon_vertex_min", some, lo + 4 >= n, format!("min {lo}, max {hi}, need >= {}", n - 4)));
    let ear_identity = report.pentagon_formula.iter().zip(&report.ears).all(|(&p, &e)| p + 6 == n + e);
    claims.push(Claim::new("pentagon_vertex_ears", some, ear_identity, "count = n - 6 + ears"));
    let (elo, ehi) = report.pentagon_edge_range().unwrap_or((0, 0));
    claims.push(Claim::new("pentagon_edge_range", some, elo >= 1 && ehi <= 4, format!("range [{elo}, {ehi}] in [1, 4]")));
    if let Some(o) = &report.pentagon_oracle {
        claims.push(Claim::new("pentagon_vertex_oracle", some, &report.pentagon_formula == o, "formula = brute force"));
    }
    if let Some(o) = &report.edge_pentagon_oracle {
        claims.push(Claim::new("pentagon_edge_oracle", some, &report.edge_pentagon == o, "formula = brute force"));
    }
    if n >= 6 {
        let (hlo, hhi) = report.hexagon_vertex_range().unwrap_or((0, 0));
        claims.push(Claim::new("hexagon_vertex_min", some, hlo + 5 >= n, format!("min {hlo}, max {hhi}, need >= {}", n - 5)));
        let (eh_lo, eh_hi) = report.hexagon_edge_range().unwrap_or((0, 0));
        claims.push(Claim::new(
            "hexagon_edge_range",
            some,
            eh_lo >= 1 && eh_hi <= 14,
            format!("range [{eh_lo}, {eh_hi}] in [1, 14]"),
        ));
        if let Some(o) = &report.hexagon_oracle {
            let totals: Vec<usize> = report.hexagon_formula.iter().map(|h| h.total()).collect();
            claims.push(Claim::new("hexagon_vertex_oracle", some, &totals == o, "formula = copy search"));
        }
        if let Some(o) = &report.edge_hexagon_oracle {
            claims.push(Claim::new("hexagon_edge_oracle", some, &report.edge_hexagon == o, "formula = copy search"));
        }
    }
    claims
}

fn check_le(name: &str, n: Option<usize>, lhs: f64, rhs: f64) -> Claim {
    Claim::new(name, n, lhs <= rhs + 1e-9, format!("{lhs:.9} <= {rhs:.9}"))
}

/// Every checkable statement for `4 <= n <= n_max`: flip-graph shape, censuses against
/// oracles, the eigenvalue tables, the bound sandwich, subadditivity, and the limit bracket.
pub fn run_certify(n_max: usize, opts: &SolverOptions, limits: &Limits) -> CliResult<Vec<Claim>> {
    if n_max < 4 {
        return Err(input("certification starts at n = 4"));
    }
    let mut claims = Vec::new();
    let mut lam_min = vec![f64::NAN; n_max + 1];
    for n in 4..=n_max {
        let a = flip_graph(n, limits)?;
        let g = a.graph();
        let some = Some(n);
        let shape = g.vertex_count() as u64 == catalan_count(n)
            && g.degree_tag() == Some(n - 3)
            && g.is_connected()
            && g.triangle_count() == 0;
        claims.push(Claim::new("flip_graph_shape", some, shape, format!("{} vertices, degree {}", g.vertex_count(), n - 3)));

        let report = census(&a, n <= CENSUS_ORACLE_MAX_N, limits)?;
        claims.extend(census_claims(n, &a, &report));

        let lm = lambda_min(g, opts)?.value;
        lam_min[n] = lm;
        if n >= 5 {
            claims.push(check_le("pentagon_lower_bound", some, assoc_lower_bound(n), lm));
            let identity = (assoc_lower_bound(n) - assoc_lower_bound_via_cycles(n)?).abs() <= 1e-12;
            claims.push(Claim::new("pentagon_bound_identity", some, identity, "closed form = odd-cycle form"));
            let l2 = lambda_2(g, opts)?.value;
            if let Some(t) = lambda_2_table(n) {
                claims.push(Claim::new(
                    "lambda_2_table",
                    some,
                    (l2 - t).abs() <= 1e-3,
                    format!("{l2:.6} vs {t}"),
                ));
            }
        }
        if n >= 6 {
            claims.push(check_le("hexagon_lower_bound", some, assoc_hexagon_lower_bound(n), lm));
        }
        if let Some(t) = lambda_min_table(n) {
            claims.push(Claim::new("lambda_min_table", some, (lm - t).abs() <= 1e-3, format!("{lm:.6} vs {t}")));
        }
        claims.push(check_le("split_upper_bound", some, lm, assoc_upper_bound(n)?));
    }
    for k in 4..=n_max {
        for l in k..=n_max {
            if k + l - 2 <= n_max {
                let name = format!("slice_subadditivity_{k}_{l}");
                claims.push(check_le(&name, Some(k + l - 2), lam_min[k + l - 2], lam_min[k] + lam_min[l]));
            }
        }
    }
    let bracket = limit_bracket();
    let inside = bracket.ratios.iter().all(|&(_, r)| r >= bracket.lower && r <= bracket.upper);
    claims.push(Claim::new(
        "limit_bracket",
        None,
        inside,
        format!("ratios within [{:.4}, {:.4}]", bracket.lower, bracket.upper),
    ));
    Ok(claims)
}

pub fn cmd_certify(w: impl Write, n_max: usize, opts: &SolverOptions, limits: &Limits) -> CliResult<()> {
    let claims = run_certify(n_max, opts, limits)?;
    let passed = claims.iter().all(|c| c.passed);
    write_json(w, &CertifyJson { n_max, passed, claims: claims.clone() })?;
    fail_on(&claims)
}
