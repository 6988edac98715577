//! Exact polynomial algebra for the `G`, `GP`, `GQ` families and the classical
//! generators, with basis expansion, substitution operators and identity checks.

pub mod basis;
pub mod families;
pub mod identities;
pub mod operators;
pub mod poly;

use thiserror::Error;

use crate::partitions::Partition;
use crate::tableaux::TableauError;

pub use basis::{expand_in_basis, Basis, BetaValue, LinearCombo};
pub use families::{e_poly, family_poly, h_poly, q_poly, schur_poly, ssyt_poly};
pub use poly::{BetaPolynomial, IntPoly, Monomial, Poly, Rational, XPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("polynomials live in different variable counts ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("{0} variables requested; at most 15 are supported")]
    TooManyVariables(usize),
    #[error("degree cap {cap} exceeds the variable count {vars}; the truncation would not be faithful")]
    CapExceedsVariables { cap: u32, vars: usize },
    #[error("not in the span of the {basis} basis: residual term {monomial:?} of degree {degree}")]
    NotInSpan { basis: String, monomial: Vec<u32>, degree: u32 },
    #[error("{0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

impl From<crate::partitions::PartitionError> for SymFuncError {
    fn from(e: crate::partitions::PartitionError) -> Self {
        SymFuncError::InvalidArgument(e.to_string())
    }
}

/// Report of a single identity check, with the first counterexample if any.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), pass: true, cases: 0, counterexample: None }
    }

    /// Record one case; the first failure is kept.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(describe());
        }
    }

    pub fn merge(mut self, other: CheckReport) -> Self {
        self.cases += other.cases;
        if self.pass && !other.pass {
            self.pass = false;
            self.counterexample = other.counterexample.map(|c| format!("{}: {c}", other.name));
        }
        self
    }
}

pub(crate) fn shape_label(lambda: &Partition, mu: &Partition) -> String {
    if mu.is_empty() {
        lambda.to_string()
    } else {
        format!("{lambda}//{mu}")
    }
}
