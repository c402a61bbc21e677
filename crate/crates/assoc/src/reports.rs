//! Serializable report records. Field order is fixed so output is byte-stable.

use std::collections::BTreeMap;

use assoc_core::bounds::BoundReport;
use assoc_core::spectra::SpectralResult;
use assoc_core::walk::{TestFunctionReport, WalkSummary};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct EigenvalueJson {
    pub n: usize,
    pub which: &'static str,
    pub value: f64,
    pub residual: f64,
    pub method: &'static str,
    pub iterations: usize,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl EigenvalueJson {
    pub fn new(n: usize, which: &'static str, r: &SpectralResult) -> Self {
        EigenvalueJson {
            n,
            which,
            value: r.value,
            residual: r.residual,
            method: r.method.as_str(),
            iterations: r.iterations,
            tolerance: r.tolerance,
            seconds: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub which: &'static str,
    pub vertices: usize,
    /// Descending, with multiplicity.
    pub eigenvalues: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundJson {
    pub bound_name: String,
    pub direction: &'static str,
    pub bound_value: f64,
    pub exact_value: Option<f64>,
    pub satisfied: Option<bool>,
    pub parameters: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&BoundReport> for BoundJson {
    fn from(r: &BoundReport) -> Self {
        BoundJson {
            bound_name: r.name.clone(),
            direction: r.direction.as_str(),
            bound_value: r.bound,
            exact_value: r.exact,
            satisfied: r.satisfied,
            parameters: r.parameters.iter().cloned().collect(),
            note: r.note.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TestFunctionJson {
    pub kind: String,
    pub dirichlet: f64,
    pub variance: f64,
    pub quotient: f64,
    pub gap_upper: f64,
    /// `quotient * n^(3/2)`.
    pub scaled_quotient: f64,
}

impl TestFunctionJson {
    pub fn new(kind: &str, n: usize, r: &TestFunctionReport) -> Self {
        TestFunctionJson {
            kind: kind.into(),
            dirichlet: r.dirichlet,
            variance: r.variance,
            quotient: r.quotient,
            gap_upper: r.gap_upper,
            scaled_quotient: r.quotient * (n as f64).powf(1.5),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkJson {
    pub n: usize,
    pub steps: u64,
    pub seed: u64,
    pub start: usize,
    pub end: usize,
    pub returns: u64,
    pub total_variation: f64,
    pub test_function: Option<TestFunctionJson>,
}

impl WalkJson {
    pub fn new(n: usize, seed: u64, s: &WalkSummary, test_function: Option<TestFunctionJson>) -> Self {
        WalkJson {
            n,
            steps: s.steps,
            seed,
            start: s.start,
            end: s.end,
            returns: s.returns,
            total_variation: s.total_variation(),
            test_function,
        }
    }
}

/// One reproduced table row.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub n_minus_3: usize,
    pub value: f64,
    /// `value` rounded the way the reference table rounds.
    pub rounded: f64,
    pub reference: Option<f64>,
    pub ok: bool,
    pub method: &'static str,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapJson {
    pub n: usize,
    pub lambda_2: f64,
    pub constant: f64,
    pub normalized_gap: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OffsetJson {
    pub residue: usize,
    pub n0: usize,
    pub slope: f64,
    pub offset: f64,
}

/// A named, checked statement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub n: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    pub fn new(claim: &str, n: Option<usize>, passed: bool, detail: impl Into<String>) -> Self {
        Claim { claim: claim.into(), n, passed, detail: detail.into() }
    }

    /// `claim` or `claim@n`.
    pub fn label(&self) -> String {
        match self.n {
            Some(n) => format!("{}@{n}", self.claim),
            None => self.claim.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyJson {
    pub n_max: usize,
    pub passed: bool,
    pub claims: Vec<Claim>,
}
