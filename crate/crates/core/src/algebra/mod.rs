//! Exact commutative algebra: scalars, polynomials, quotient rings and truncated series.

pub mod binomial;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod series;

pub use binomial::{binomial_mod2, generalized_binomial_mod2};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ring::{indecomposable_degrees, Generator, GradedPolynomial, PolyRing};
pub use scalar::{rational, Scalar, ScalarKind, F2, Q};
pub use series::{SeriesVars, Sym, TruncatedSeries, Truncation};
