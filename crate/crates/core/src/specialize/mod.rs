//! Specializations of the Grothendieck families: finite alphabets, the
//! atoms `φ_a`, `ε_b`, `π_γ` and their unions, one-variable closed forms and
//! the generating-series identities that classify positive specializations.

pub mod atoms;
pub mod classify;
pub mod evaluate;
pub mod onevar;
pub mod series;

pub use atoms::{Atom, Atoms};
pub use classify::{classification_check, monotonicity_check, MonotonicityReport, SeriesReport, Theorem};
pub use evaluate::{alphabet_value, Evaluator};
pub use series::{ExactSeries, Scalar, Series, ZSeries};

use thiserror::Error;

use crate::partitions::PartitionError;
use crate::symfunc::SymFuncError;
use crate::tableaux::TableauError;

#[derive(Debug, Error)]
pub enum SpecializeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("E(z+β) has a pole: 1 − bβ = 0 for b = {b}, β = {beta}")]
    PoleAtShift { b: String, beta: String },
    #[error("ρ(1 + βG_1) diverges: 1 − bβ ≤ 0 for b = {b}, β = {beta}")]
    DivergentG1 { b: String, beta: String },
    #[error("parameter constraint violated: {0}")]
    ParameterConstraintViolated(String),
    #[error("specialization is not normalized: ρ(GP_1) = {value}, expected 1")]
    NotNormalized { value: String },
    #[error("no exact value: {0}")]
    NotExact(String),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
