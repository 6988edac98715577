//! Exact and numeric engine for symmetric Grothendieck polynomials and the
//! K-theoretic Schur P- and Q-functions.

pub mod harmonic;
pub mod partitions;
pub mod specialize;
pub mod symfunc;
pub mod suite;
pub mod tableaux;
