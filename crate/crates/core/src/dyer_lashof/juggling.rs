//! The maps μ, ν, α, β and Q̄ relating the degree-30 relation to operations on
//! a degree-4 class, and the identity `μR = Q̄ν + βα` they satisfy.

use std::sync::Arc;

use super::big_relation::{relation_map, y_context, SUSPENDED_RELATION};
use super::context::DlContext;
use super::maps::SubstitutionMap;
use super::normalize::Normalizer;
use super::parser::parse_expression;
use super::word::display_poly;
use crate::error::DlError;

fn ctx(pairs: &[(&str, u32)]) -> Arc<DlContext> {
    Arc::new(DlContext::from_pairs(pairs).expect("valid names"))
}

pub fn x_y4_context() -> Arc<DlContext> {
    ctx(&[("x", 2), ("y4", 4)])
}

/// μ: every `y_i` goes to 0 except `y10 ↦ Q6 y4`.
pub fn mu() -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(
        y_context(),
        x_y4_context(),
        &["x"],
        &[("y5", "0"), ("y7", "0"), ("y9", "0"), ("y13", "0"), ("y8", "0"), ("y10", "Q6 y4"), ("y12", "0")],
    )
}

/// ν: `z30 ↦ Q16 z14`.
pub fn nu() -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(ctx(&[("x", 2), ("z30", 30)]), ctx(&[("x", 2), ("z14", 14)]), &["x"], &[("z30", "Q16 z14")])
}

/// α: `z30 ↦ z15^2`.
pub fn alpha() -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(ctx(&[("x", 2), ("z30", 30)]), ctx(&[("x", 2), ("z15", 15)]), &["x"], &[("z30", "z15^2")])
}

/// β: `z15 ↦ Q3 x Q6 y4`.
pub fn beta() -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(ctx(&[("x", 2), ("z15", 15)]), x_y4_context(), &["x"], &[("z15", "Q3 x Q6 y4")])
}

/// Q̄: `z14 ↦ Q10 y4 + x^2 Q6 y4`.
pub fn qbar() -> Result<SubstitutionMap, DlError> {
    SubstitutionMap::new(ctx(&[("x", 2), ("z14", 14)]), x_y4_context(), &["x"], &[("z14", "Q10 y4 + x^2 Q6 y4")])
}

/// Normalized images on `z30` of both sides of `μR = Q̄ν + βα`.
#[derive(Clone, Debug)]
pub struct JuggleOutcome {
    pub mu_r: String,
    pub qbar_nu_plus_beta_alpha: String,
    pub holds: bool,
}

pub fn check_juggle() -> Result<JuggleOutcome, DlError> {
    let lhs = mu()?.compose(&relation_map(None)?)?;
    let rhs = qbar()?.after(&nu()?)?.sum(&beta()?.after(&alpha()?)?)?;
    Ok(JuggleOutcome {
        mu_r: lhs.display_image("z30")?,
        qbar_nu_plus_beta_alpha: rhs.display_image("z30")?,
        holds: lhs.equivalent(&rhs)?,
    })
}

/// Compares the suspended relation with its expected indeterminacy form.
pub fn check_suspended_relation() -> Result<(bool, String), DlError> {
    let sigma = relation_map(None)?.suspend()?;
    let target = sigma.target().clone();
    let got = Normalizer::new(&target).normalize(sigma.image("z31'").expect("suspended z30"))?.poly;
    let want = Normalizer::new(&target).normalize(&parse_expression(SUSPENDED_RELATION, &target)?)?.poly;
    Ok((got == want, display_poly(&got, &target)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_r_matches_the_expected_intermediate() {
        let mu_r = mu().unwrap().after(&relation_map(None).unwrap()).unwrap();
        let c = x_y4_context();
        let direct = parse_expression("Q20 Q6 y4 + x^4 Q12 Q6 y4", &c).unwrap();
        let n = Normalizer::new(&c);
        let check = n.verify_identity(mu_r.image("z30").unwrap(), &direct).unwrap();
        assert!(check.holds);
    }

    #[test]
    fn juggling_identity() {
        let out = check_juggle().unwrap();
        assert!(out.holds, "{} vs {}", out.mu_r, out.qbar_nu_plus_beta_alpha);
        assert_eq!(out.mu_r, out.qbar_nu_plus_beta_alpha);
    }

    #[test]
    fn suspended_relation_form() {
        let (ok, shown) = check_suspended_relation().unwrap();
        assert!(ok, "{shown}");
        assert_eq!(shown, "Q20 y11' + Q18 y13' + Q17 y14' + x^4 Q12 y11' + Q10 y9' (Q4 x)^2");
    }
}
