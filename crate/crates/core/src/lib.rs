//! Exact symbolic engine for mod-2 Dyer-Lashof calculus, homology operation tables,
//! formal-group power operations and the verification suites built on them.

pub mod algebra;
pub mod dyer_lashof;
pub mod error;
pub mod formal_groups;
pub mod hopf_ring;
pub mod models;
pub mod verify;
