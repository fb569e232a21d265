//! The free unstable mod-2 Dyer-Lashof algebra.

pub mod big_relation;
pub mod context;
pub mod expr;
pub mod juggling;
pub mod maps;
pub mod normalize;
pub mod parser;
pub mod word;

pub use context::DlContext;
pub use expr::Expr;
pub use maps::SubstitutionMap;
pub use normalize::{adem_step, AdemTerm, Application, IdentityCheck, Normalized, Normalizer, Strategy};
pub use parser::parse_expression;
pub use word::{display_poly, DlPoly, Word};
