//! Exact-arithmetic kernel: rationals, sparse weighted multivariate
//! polynomials, truncated power series, univariate rational functions with
//! partial-fraction decomposition, and small exact linear algebra.

pub mod linalg;
pub mod multipoly;
pub mod rat;
pub mod ratfun;
pub mod series;
pub mod unipoly;

pub use multipoly::{MultiPoly, PolyRing};
pub use rat::Rat;
pub use ratfun::{Antiderivative, PartialFractions, PoleBlock, RationalFunction};
pub use series::TruncSeries;
pub use unipoly::UniPoly;
