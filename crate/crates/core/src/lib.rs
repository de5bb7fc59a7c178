//! Exact-arithmetic computation of polynomial theta functions and KP tau
//! functions for rational curves whose singular points are unibranch.
//!
//! The library computes, over the rationals and without any floating point:
//!
//! * numerical semigroups, Weierstrass gap sequences and their partitions,
//! * Schur-Weierstrass polynomials and their specialization to symmetric
//!   Schur polynomials,
//! * canonical (Rosenlicht) differential bases of rational curves given by a
//!   parametrization, and the abelian integrals that parametrize the theta
//!   divisor,
//! * Sato-Grassmannian frames, Pluecker coordinates and tau functions,
//! * polynomial theta functions, both recovered from tau and fitted by exact
//!   implicitization of the Abel parametrization,
//! * degree and leading-term reports for theta, the tau/theta comparison
//!   factor, and a Taylor-series residual check that the results solve the
//!   KP equation.
//!
//! The `algtheta` binary exposes the pipeline on curve specification files;
//! see the crate README for the file format.

pub mod algebra;
pub mod curve;
pub mod error;
pub mod kp;
pub mod pipeline;
pub mod report;
pub mod sato;
pub mod schur;
pub mod semigroup;
pub mod theta;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
