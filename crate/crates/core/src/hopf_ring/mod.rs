//! A small quotient of the Hopf ring for complex cobordism: classes
//! `[c] ∘ b₁^{∘m}` modulo #-decomposables, ∘-decomposables and `b₂, b₃, ...`,
//! with coefficients `c` taken modulo decomposables in `π_*MU`.

pub mod chain;
pub mod classes;

pub use chain::{verify_hopf_chain, ChainReport, Identification};
pub use classes::{
    import_pseries, qhat_b1, qhat_on_hurewicz, suspend_to_dual, CoeffClass, HopfClass, PSeries, RavenelWilsonRule,
    RawTerm, RuleOrder, SuspendedClass,
};
