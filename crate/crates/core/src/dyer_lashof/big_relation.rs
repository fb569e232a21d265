//! The degree-30 relation among operations on a degree-2 class, and the maps
//! built around it.

use std::sync::Arc;

use super::context::DlContext;
use super::expr::Expr;
use super::maps::SubstitutionMap;
use super::normalize::{Application, Normalizer};
use super::parser::parse_expression;
use super::word::display_poly;
use crate::error::DlError;

/// Auxiliary classes built from `x`, in the order they are declared.
pub const Y_CLASSES: [(&str, u32, &str); 7] = [
    ("y5", 5, "Q3 x"),
    ("y7", 7, "Q5 x"),
    ("y9", 9, "Q7 x"),
    ("y13", 13, "Q11 x"),
    ("y8", 8, "Q6 x + x^4"),
    ("y10", 10, "Q8 x + x^2 Q4 x"),
    ("y12", 12, "Q10 x + (Q4 x)^2"),
];

/// The summands of the relation, one per line of its term-by-term expansion.
pub const RELATION_TERMS: [&str; 12] = [
    "Q20 y10",
    "Q18 y12",
    "Q17 y13",
    "x^4 Q12 y10",
    "y9^2 (Q4 x)^2",
    "y7^2 Q9 Q5 x",
    "y8^2 Q8 Q4 x",
    "Q9 y9 (Q4 x)^2",
    "Q10 y8 (Q4 x)^2",
    "y5^2 Q11 Q7 x",
    "y5^2 Q10 Q8 x",
    "y5^2 x^4 Q6 Q4 x",
];

/// The seven supporting identities, in `x` alone.
pub const AUX_IDENTITIES: [(&str, &str); 7] = [
    ("Q20 Q8 x", "Q18 Q10 x + Q17 Q11 x"),
    (
        "Q20 (x^2 Q4 x)",
        "x^4 Q16 Q4 x + (Q3 x)^2 Q14 Q4 x + (Q4 x)^2 Q12 Q4 x + (Q5 x)^2 Q10 Q4 x + (Q6 x)^2 Q8 Q4 x + (Q7 x)^2 (Q4 x)^2",
    ),
    ("Q18 (Q4 x)^2", "0"),
    ("x^4 Q16 Q4 x", "x^4 Q12 Q8 x"),
    ("(Q3 x)^2 Q14 Q4 x", "(Q3 x)^2 Q11 Q7 x + (Q3 x)^2 Q10 Q8 x"),
    ("(Q4 x)^2 Q12 Q4 x", "(Q4 x)^2 Q10 Q6 x + (Q4 x)^2 Q9 Q7 x"),
    ("(Q5 x)^2 Q10 Q4 x", "(Q5 x)^2 Q9 Q5 x"),
];

/// Expected normal form of the suspended relation, as displayed with the
/// vanishing `Q9` summand still present.
pub const SUSPENDED_RELATION: &str =
    "Q20 y11' + Q18 y13' + Q17 y14' + x^4 Q12 y11' + Q9 y10' (Q4 x)^2 + Q10 y9' (Q4 x)^2";

/// Generators `x, y5, ..., y12`.
pub fn y_context() -> Arc<DlContext> {
    let mut pairs = vec![("x", 2)];
    pairs.extend(Y_CLASSES.iter().map(|(n, d, _)| (*n, *d)));
    Arc::new(DlContext::from_pairs(&pairs).expect("valid names"))
}

pub fn x_context() -> Arc<DlContext> {
    Arc::new(DlContext::from_pairs(&[("x", 2)]).expect("valid names"))
}

pub fn z30_context() -> Arc<DlContext> {
    Arc::new(DlContext::from_pairs(&[("x", 2), ("z30", 30)]).expect("valid names"))
}

/// The relation as one sum, optionally without one summand.
pub fn relation_text(drop: Option<usize>) -> String {
    RELATION_TERMS.iter().enumerate().filter(|(i, _)| Some(*i) != drop).map(|(_, t)| *t).collect::<Vec<_>>().join(" + ")
}

/// `R`: sends `z30` to the relation.
pub fn relation_map(drop: Option<usize>) -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(z30_context(), y_context(), &["x"], &[("z30", &relation_text(drop))])
}

/// Sends each `y_i` to its definition in terms of `x`.
pub fn definitions_map() -> Result<SubstitutionMap, DlError> {
    let images: Vec<(&str, &str)> = Y_CLASSES.iter().map(|(n, _, e)| (*n, *e)).collect();
    SubstitutionMap::new(y_context(), x_context(), &["x"], &images)
}

/// The relation with every `y_i` replaced by its definition, as an expression in `x`.
pub fn expanded_relation(drop: Option<usize>) -> Result<Expr, DlError> {
    let r = relation_map(drop)?;
    let y = definitions_map()?;
    let composite = y.after(&r)?;
    Ok(composite.image("z30").expect("z30 declared").clone())
}

/// Result of normalizing the expanded relation.
#[derive(Clone, Debug)]
pub struct RelationOutcome {
    pub vanishes: bool,
    pub residual: String,
    pub degree: Option<u32>,
    pub level: u32,
    pub witness: Option<Application>,
}

pub fn check_relation(drop: Option<usize>) -> Result<RelationOutcome, DlError> {
    let ctx = x_context();
    let e = expanded_relation(drop)?;
    let degree = e.degree(&ctx)?;
    let n = Normalizer::new(&ctx).normalize(&e)?;
    Ok(RelationOutcome {
        vanishes: n.poly.is_zero(),
        residual: display_poly(&n.poly, &ctx),
        degree,
        level: n.level(),
        witness: n.max_application,
    })
}

/// Verifies supporting identity `i`; returns whether it holds and the residual.
pub fn check_aux_identity(i: usize) -> Result<(bool, String), DlError> {
    let ctx = x_context();
    let (l, r) = AUX_IDENTITIES[i];
    let lhs = parse_expression(l, &ctx)?;
    let rhs = parse_expression(r, &ctx)?;
    let check = Normalizer::new(&ctx).verify_identity(&lhs, &rhs)?;
    Ok((check.holds, display_poly(&check.residual, &ctx)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_vanishes_in_degree_thirty() {
        let out = check_relation(None).unwrap();
        assert_eq!(out.degree, Some(30));
        assert!(out.vanishes, "residual {}", out.residual);
    }

    #[test]
    fn needs_an_e12_structure() {
        let out = check_relation(None).unwrap();
        assert_eq!(out.level, 12);
        let w = out.witness.unwrap();
        assert_eq!((w.s, w.degree), (20, 10));
    }

    #[test]
    fn dropping_a_summand_leaves_a_witness() {
        for i in 0..RELATION_TERMS.len() {
            let out = check_relation(Some(i)).unwrap();
            assert!(!out.vanishes, "term {i}");
        }
    }

    #[test]
    fn supporting_identities_hold() {
        for i in 0..AUX_IDENTITIES.len() {
            let (ok, residual) = check_aux_identity(i).unwrap();
            assert!(ok, "identity {i}: {residual}");
        }
    }
}
