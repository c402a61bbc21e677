//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with its own harness. The process fails when a criterion fails that is not
//! listed in `KNOWN_FAILURES`; listed failures are still printed as FAIL.

use std::process::Command;
use std::time::Instant;

use assoc_core::bounds::{
    assoc_lower_bound, assoc_lower_bound_via_cycles, certify_collection, limit_bracket,
};
use assoc_core::census::{census, hexagon_count_vertex_oracle};
use assoc_core::iso::is_isomorphic;
use assoc_core::reference::{limit_lower, LAMBDA_2_TABLE, LAMBDA_MIN_TABLE};
use assoc_core::spectra::{dense_spectrum, lambda_2, lambda_min, Solver, SolverOptions};
use assoc_core::walk::{aldous_test_function, dirichlet_quotient};
use assoc_core::{build_associahedron, diagonal_slice, Associahedron, Diagonal, Graph, Limits};

/// Criteria whose literal statement cannot hold, with the reason printed beside them.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    3,
    "the listed multiset has trace 6 - 6*sqrt(2), not 0; the triple eigenvalue is sqrt(2) - 1, not 1 - sqrt(2)",
)];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn opts() -> SolverOptions {
    SolverOptions::default()
}

fn lam_min(n: usize) -> f64 {
    lambda_min(&build_associahedron(n).unwrap(), &opts()).unwrap().value
}

fn criterion_1() -> Outcome {
    let clock = Instant::now();
    let mut worst: f64 = 0.0;
    let mut methods = Vec::new();
    for &(n, t) in &LAMBDA_MIN_TABLE {
        let r = lambda_min(&build_associahedron(n).unwrap(), &opts()).unwrap();
        worst = worst.max((r.value - t).abs());
        methods.push(format!("{n}:{}", r.method.as_str()));
    }
    let secs = clock.elapsed().as_secs_f64();
    outcome(
        worst <= 1e-3 && secs <= 60.0,
        format!("max deviation {worst:.2e}, {secs:.1} s, solvers {}", methods.join(" ")),
    )
}

fn criterion_2() -> Outcome {
    let mut worst: f64 = 0.0;
    for &(n, t) in &LAMBDA_2_TABLE {
        let v = lambda_2(&build_associahedron(n).unwrap(), &opts()).unwrap().value;
        worst = worst.max((v - t).abs());
    }
    outcome(worst <= 1e-3, format!("max deviation {worst:.2e}"))
}

fn criterion_3() -> Outcome {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let mut listed = vec![3.0, 2.0, 2.0, r3, 0.0, 0.0];
    listed.extend([1.0 - r2; 3]);
    listed.extend([-1.0, -r3]);
    listed.extend([-1.0 - r2; 3]);
    listed.sort_by(|a, b| b.total_cmp(a));
    let computed = dense_spectrum(&build_associahedron(6).unwrap(), 100).unwrap().eigenvalues;
    let worst = listed.iter().zip(&computed).map(|(a, b)| (a - b).abs()).fold(0.0f64, f64::max);
    let mut corrected = listed.clone();
    for x in corrected.iter_mut().filter(|x| (**x - (1.0 - r2)).abs() < 1e-12) {
        *x = r2 - 1.0;
    }
    corrected.sort_by(|a, b| b.total_cmp(a));
    let worst_corrected = corrected.iter().zip(&computed).map(|(a, b)| (a - b).abs()).fold(0.0f64, f64::max);
    outcome(
        computed.len() == listed.len() && worst <= 1e-9,
        format!(
            "literal multiset: max deviation {worst:.3e}; with sqrt(2)-1 in place of 1-sqrt(2): {worst_corrected:.1e}"
        ),
    )
}

fn criterion_4() -> Outcome {
    let clock = Instant::now();
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 5..=9 {
        let a = Associahedron::new(n).unwrap();
        let r = census(&a, true, &limits).unwrap();
        let vertex_ok = Some(&r.pentagon_formula) == r.pentagon_oracle.as_ref()
            && r.pentagon_formula.iter().all(|&c| c + 4 >= n)
            && r.pentagon_formula.iter().zip(&r.ears).all(|(&c, &e)| c + 6 == n + e);
        let edge_ok = Some(&r.edge_pentagon) == r.edge_pentagon_oracle.as_ref()
            && r.edge_pentagon.iter().all(|&c| (1..=4).contains(&c));
        ok &= vertex_ok && edge_ok;
        let (lo, hi) = r.pentagon_edge_range().unwrap();
        notes.push(format!("n={n}: edge range [{lo},{hi}]"));
    }
    let secs = clock.elapsed().as_secs_f64();
    outcome(ok && secs <= 120.0, format!("{}; {secs:.1} s", notes.join(", ")))
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 6..=8 {
        let a = Associahedron::new(n).unwrap();
        let r = census(&a, true, &limits).unwrap();
        let totals: Vec<usize> = r.hexagon_formula.iter().map(|h| h.total()).collect();
        let geometric: Vec<usize> =
            a.triangulations().iter().map(|t| hexagon_count_vertex_oracle(t, limits.max_n).unwrap()).collect();
        let vertex_ok = Some(&totals) == r.hexagon_oracle.as_ref()
            && totals == geometric
            && totals.iter().all(|&c| c + 5 >= n);
        let edge_ok = r.edge_hexagon.iter().all(|&c| (1..=14).contains(&c))
            && Some(&r.edge_hexagon) == r.edge_hexagon_oracle.as_ref();
        ok &= vertex_ok && edge_ok;
        let (lo, hi) = r.hexagon_edge_range().unwrap();
        notes.push(format!("n={n}: edge range [{lo},{hi}]"));
    }
    outcome(ok, notes.join(", "))
}

fn criterion_6() -> Outcome {
    let limits = Limits::default();
    let mut cases: Vec<(String, Graph, Graph)> = vec![
        ("K4/K3".into(), Graph::complete(4), Graph::complete(3)),
        ("Petersen/C5".into(), Graph::petersen(), Graph::cycle(5)),
    ];
    for n in 5..=9 {
        cases.push((format!("A{n}/C5"), build_associahedron(n).unwrap(), Graph::cycle(5)));
    }
    for seed in 0..10 {
        let g = Graph::random_regular(20, 3, seed).unwrap();
        for (name, k) in [("K3", Graph::complete(3)), ("C5", Graph::cycle(5)), ("C7", Graph::cycle(7))] {
            cases.push((format!("R{seed}/{name}"), g.clone(), k));
        }
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut tightest = f64::INFINITY;
    for (name, g, k) in &cases {
        if let Some(r) = certify_collection(name, g, k, &limits).unwrap() {
            checked += 1;
            tightest = tightest.min(r.exact.unwrap() - r.bound);
            if r.satisfied != Some(true) {
                failures.push(name.clone());
            }
        }
    }
    outcome(
        failures.is_empty() && checked >= 7,
        format!("{checked} graph/pattern pairs with copies, smallest margin {tightest:.3e}, failures {failures:?}"),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut margin = f64::INFINITY;
    for n in 5..=12 {
        let m = lam_min(n) - assoc_lower_bound(n);
        margin = margin.min(m);
        ok &= m >= -1e-9;
    }
    let worst_identity = (5..=50)
        .map(|n| (assoc_lower_bound(n) - assoc_lower_bound_via_cycles(n).unwrap()).abs())
        .fold(0.0f64, f64::max);
    outcome(
        ok && worst_identity <= 1e-12,
        format!("smallest margin {margin:.4}, identity deviation {worst_identity:.1e}"),
    )
}

fn criterion_8() -> Outcome {
    let lam: Vec<f64> = (0..=12).map(|n| if n >= 4 { lam_min(n) } else { f64::NAN }).collect();
    let mut pairs = 0;
    let mut ok = true;
    for k in 4..=8 {
        for l in k..=12 - k {
            pairs += 1;
            ok &= lam[k + l] <= lam[k] + lam[l];
            ok &= lam[k + l - 2] <= lam[k] + lam[l];
        }
    }
    let mut slices = 0;
    for n in 5..=10 {
        for k in 3..n {
            let slice = diagonal_slice(n, Diagonal::new(n, 1, k).unwrap()).unwrap();
            let product = build_associahedron(k)
                .unwrap()
                .box_product(&build_associahedron(n - k + 2).unwrap(), 1 << 22)
                .unwrap();
            ok &= is_isomorphic(&slice, &product, 5000).unwrap();
            slices += 1;
        }
    }
    outcome(ok, format!("{pairs} subadditive pairs, {slices} slice isomorphisms"))
}

fn criterion_9() -> Outcome {
    let lower = limit_lower();
    let upper_constant = limit_bracket().upper;
    let lam12 = lam_min(12);
    let ratios: Vec<(usize, f64)> = (5..=12).map(|n| (n, lam_min(n) / (n as f64 - 3.0))).collect();
    let inside = ratios.iter().all(|&(_, r)| r >= lower && r <= upper_constant);
    let round4 = |x: f64| (x * 1e4).round() / 1e4;
    let endpoints = round4(lower) == -0.9045 && round4(lam12 / 10.0) == -0.6904 && upper_constant == -0.6904;
    let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &(_, r)| (a.min(r), b.max(r)));
    outcome(
        inside && endpoints,
        format!(
            "ratios in [{lo:.4}, {hi:.4}], lower {:.4}, lambda_min(12)/10 = {:.4}",
            round4(lower),
            round4(lam12 / 10.0)
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut scaled = Vec::new();
    let mut ok = true;
    for n in 6..=12 {
        let a = Associahedron::new(n).unwrap();
        let f = aldous_test_function(&a).unwrap();
        let r = dirichlet_quotient(a.graph(), &f).unwrap();
        if n >= 8 {
            scaled.push(r.quotient * (n as f64).powf(1.5));
        }
        if n <= 10 {
            let l2 = lambda_2(a.graph(), &SolverOptions { solver: Solver::Dense, ..opts() }).unwrap();
            let gap = 1.0 - l2.value / (n as f64 - 3.0);
            ok &= r.quotient + 1e-8 >= gap;
            let eig = dirichlet_quotient(a.graph(), &l2.vector).unwrap();
            ok &= eig.quotient + 1e-8 >= gap;
        }
    }
    let (lo, hi) = scaled.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
    outcome(ok && hi <= 4.0 * lo, format!("quotient*n^1.5 over n=8..12 in [{lo:.3}, {hi:.3}], ratio {:.3}", hi / lo))
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_assoc")).args(args).output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_11() -> Outcome {
    let commands: &[&[&str]] = &[
        &["enumerate", "--n", "8"],
        &["graph", "--n", "8", "--export", "edges"],
        &["spectrum", "--n", "8", "--which", "min"],
        &["spectrum", "--n", "11", "--which", "second"],
        &["spectrum", "--n", "6", "--which", "full"],
        &["census", "--n", "7", "--oracle", "--edges"],
        &["bounds", "--n", "7", "--certify"],
        &["walk", "--n", "8", "--steps", "20000", "--seed", "9", "--test-fn", "aldous"],
        &["walk", "--n", "7", "--steps", "500", "--seed", "2", "--test-fn", "eigen"],
        &["table", "--kind", "lambda_min", "--n-max", "9", "--format", "csv"],
        &["table", "--kind", "offsets"],
        &["certify", "--n-max", "7"],
    ];
    let mut differing = Vec::new();
    for args in commands {
        let first = run_cli(args);
        let second = run_cli(args);
        if first != second || first.0.is_empty() {
            differing.push(args.join(" "));
        }
    }
    outcome(differing.is_empty(), format!("{} commands run twice, differing {differing:?}", commands.len()))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "lambda_min table, n = 5..12", criterion_1),
        (2, "lambda_2 table, n = 5..12", criterion_2),
        (3, "hexagon flip graph spectrum as listed", criterion_3),
        (4, "pentagon census, n = 5..9", criterion_4),
        (5, "hexagon census, n = 6..8", criterion_5),
        (6, "collection bound certification", criterion_6),
        (7, "pentagon bound sandwich and identity", criterion_7),
        (8, "subadditivity and slice isomorphism", criterion_8),
        (9, "limit bracket", criterion_9),
        (10, "Aldous test function scaling and variational bound", criterion_10),
        (11, "byte-identical CLI output", criterion_11),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, name, check) in criteria {
        let o = check();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status}  {name}: {}", o.detail);
        if o.passed {
            passed += 1;
        } else if let Some((_, why)) = KNOWN_FAILURES.iter().find(|(k, _)| *k == id) {
            println!("             known failure: {why}");
        } else {
            unexpected.push(id);
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
