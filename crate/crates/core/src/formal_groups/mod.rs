//! Formal group laws from logarithms over torsion-free rings, their 2-series,
//! the isogeny `g(x, α) = x (x +_F α)` and the computation of the power
//! operation on `ℂPⁿ` modulo `[2]_F(α)`.

pub mod coefficients;
pub mod law;
pub mod pipeline;

pub use coefficients::{CoefficientRing, FglConfig, Lattice};
pub use law::FormalGroupLaw;
pub use pipeline::{appendix_pipeline, reduce_mod_two_series, PowerOpResult};
