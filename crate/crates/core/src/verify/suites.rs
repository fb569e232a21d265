//! The registry of suites and their checks.

use std::fmt::Display;

use super::config::Fault;
use super::properties;
use super::{Check, Env, Outcome};
use crate::dyer_lashof::big_relation::{
    self, check_aux_identity, check_relation, expanded_relation, x_context, Y_CLASSES,
};
use crate::dyer_lashof::juggling::{self, check_juggle, check_suspended_relation, x_y4_context};
use crate::dyer_lashof::{parse_expression, Normalizer};
use crate::error::DlError;
use crate::error::SuiteError;
use crate::formal_groups::law::{Series, X, Y};
use crate::formal_groups::{appendix_pipeline, FglConfig, FormalGroupLaw, PowerOpResult};
use crate::hopf_ring::{self, qhat_b1, verify_hopf_chain, Identification, RavenelWilsonRule};
use crate::models::evaluate::Assignment;
use crate::models::hmu::check_dl_compatibility;
use crate::models::indeterminacy::indeterminacy_scan;
use crate::models::{map_p, DlModel, Elem};

pub const SUITE_NAMES: [&str; 12] = [
    "big-relation",
    "en-level",
    "priddy",
    "steinberger",
    "model-compat",
    "secondjuggle",
    "firstjuggle-algebra",
    "indeterminacy",
    "appendix",
    "hopf-chain",
    "xi5-chain",
    "properties",
];

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

pub fn checks(name: &str) -> Result<Vec<Check>, SuiteError> {
    Ok(match name {
        "big-relation" => big_relation_checks(),
        "en-level" => en_level_checks(),
        "priddy" => priddy_checks(),
        "steinberger" => steinberger_checks(),
        "model-compat" => model_compat_checks(),
        "secondjuggle" => second_juggle_checks(),
        "firstjuggle-algebra" => first_juggle_checks(),
        "indeterminacy" => indeterminacy_checks(),
        "appendix" => appendix_checks(),
        "hopf-chain" => hopf_chain_checks(),
        "xi5-chain" => xi5_chain_checks(),
        "properties" => properties::checks(),
        _ => return Err(SuiteError::UnknownSuite(name.into())),
    })
}

fn dropped_term(env: &Env) -> Option<usize> {
    env.config.fault.map(|Fault::RelationTerm(i)| i)
}

fn relation_sum(env: &Env) -> Result<Outcome, String> {
    let out = check_relation(dropped_term(env)).map_err(err)?;
    Ok(Outcome::holds(out.vanishes && out.degree == Some(30), out.residual))
}

fn aux_check(i: usize) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |_| {
        let (holds, residual) = check_aux_identity(i).map_err(err)?;
        Ok(Outcome::holds(holds, residual))
    }
}

fn big_relation_checks() -> Vec<Check> {
    vec![
        Check::new("relation-sum", "the degree-30 relation normalizes to zero", relation_sum),
        Check::new("aux-1", "Q20 Q8 x = Q18 Q10 x + Q17 Q11 x", aux_check(0)),
        Check::new("aux-2", "Cartan expansion of Q20 (x^2 Q4 x)", aux_check(1)),
        Check::new("aux-3", "Q18 (Q4 x)^2 = 0", aux_check(2)),
        Check::new("aux-4", "x^4 Q16 Q4 x = x^4 Q12 Q8 x", aux_check(3)),
        Check::new("aux-5", "(Q3 x)^2 Q14 Q4 x expands by Adem", aux_check(4)),
        Check::new("aux-6", "(Q4 x)^2 Q12 Q4 x expands by Adem", aux_check(5)),
        Check::new("aux-7", "(Q5 x)^2 Q10 Q4 x = (Q5 x)^2 Q9 Q5 x", aux_check(6)),
    ]
}

fn en_level_checks() -> Vec<Check> {
    vec![
        Check::new("level", "the relation needs an E_12 structure", |env| {
            let out = check_relation(dropped_term(env)).map_err(err)?;
            Ok(Outcome::matches(format!("E{}", out.level), "E12"))
        }),
        Check::new("witness", "the most demanding application is Q20 on degree 10", |env| {
            let out = check_relation(dropped_term(env)).map_err(err)?;
            let w = out.witness.map_or("none".into(), |a| format!("Q{} on degree {}", a.s, a.degree));
            Ok(Outcome::matches(w, "Q20 on degree 10"))
        }),
        Check::new("window-11", "normalizing inside E_11 is refused", |_| {
            let ctx = x_context();
            let e = expanded_relation(None).map_err(err)?;
            match Normalizer::new(&ctx).with_window(11).normalize(&e) {
                Err(DlError::OutsideWindow { s, degree, level }) => {
                    Ok(Outcome::holds(true, format!("Q{s} on degree {degree} lies outside E{level}")))
                }
                Err(e) => Err(e.to_string()),
                Ok(_) => Ok(Outcome::holds(false, "normalized inside E_11")),
            }
        }),
        Check::new("strict-window", "excluding top operations moves the bound to E_13", |_| {
            let ctx = x_context();
            let e = expanded_relation(None).map_err(err)?;
            let at_12 = Normalizer::new(&ctx).with_strict_window(12).normalize(&e).is_err();
            let at_13 = Normalizer::new(&ctx).with_strict_window(13).normalize(&e).map_err(err)?.poly.is_zero();
            Ok(Outcome::holds(at_12 && at_13, format!("strict E12 refuses: {at_12}; strict E13 vanishes: {at_13}")))
        }),
        Check::new("window-12", "normalizing inside E_12 succeeds", |_| {
            let ctx = x_context();
            let e = expanded_relation(None).map_err(err)?;
            let n = Normalizer::new(&ctx).with_window(12).normalize(&e).map_err(err)?;
            Ok(Outcome::holds(n.poly.is_zero(), crate::dyer_lashof::display_poly(&n.poly, &ctx)))
        }),
    ]
}

/// Operation values in `H_*MU`, as `(label, j, k, value)`.
pub const PRIDDY_VALUES: [(&str, u32, u32, &str); 7] = [
    ("Q2-b1", 2, 1, "b1^2"),
    ("Q4-b1", 4, 1, "b3 + b1 b2 + b1^3"),
    ("Q6-b1", 6, 1, "b1^4"),
    ("Q8-b1", 8, 1, "b5 + b1 b4 + b2 b3 + b1^2 b3 + b1 b2^2 + b1^3 b2 + b1^5"),
    ("Q10-b1", 10, 1, "b3^2 + b1^2 b2^2 + b1^6"),
    ("Q6-b2", 6, 2, "b5 + b1 b4 + b2 b3 + b1 b2^2"),
    ("Q10-b2", 10, 2, "b1^2 b5 + b1^3 b4 + b1^2 b2 b3 + b1^3 b2^2"),
];

/// Identities in `H_*MU` at `x = b1`, `y4 = b2`, as `(label, lhs, rhs)`.
pub const PRIDDY_IDENTITIES: [(&str, &str, &str); 4] = [
    ("identity-Q6-b1", "Q6 x + x^4", "0"),
    ("identity-Q10-b1", "Q10 x + (Q4 x)^2", "0"),
    ("identity-Q6-b2", "Q6 y4", "Q8 x + x^2 Q4 x"),
    ("identity-Q10-b2", "Q10 y4 + x^2 Q6 y4", "0"),
];

fn priddy_value(i: usize) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |env| {
        let (_, j, k, expected) = PRIDDY_VALUES[i];
        let h = env.hmu();
        let got = h.priddy(j, k).map_err(err)?;
        let want = h.parse(expected).map_err(err)?;
        Ok(Outcome::holds(got == want, h.display(&got)))
    }
}

fn evaluate_identity(model: &dyn DlModel, values: &[(&str, &str)], lhs: &str, rhs: &str) -> Result<Outcome, String> {
    let ctx = x_y4_context();
    let asg = Assignment::new(model, &ctx).with_texts(values).map_err(err)?;
    let l = asg.evaluate(&parse_expression(lhs, &ctx).map_err(err)?).map_err(err)?;
    let r = asg.evaluate(&parse_expression(rhs, &ctx).map_err(err)?).map_err(err)?;
    Ok(Outcome::holds(l == r, format!("{} = {}", model.display(&l), model.display(&r))))
}

fn priddy_identity(i: usize) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |env| {
        let (_, lhs, rhs) = PRIDDY_IDENTITIES[i];
        evaluate_identity(env.hmu(), &[("x", "b1"), ("y4", "b2")], lhs, rhs)
    }
}

fn priddy_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (i, (label, ..)) in PRIDDY_VALUES.iter().enumerate() {
        out.push(Check::new(label, "Priddy's formula in H_*MU", priddy_value(i)));
    }
    for (i, (label, ..)) in PRIDDY_IDENTITIES.iter().enumerate() {
        out.push(Check::new(label, "identity derived from the operation table", priddy_identity(i)));
    }
    out.push(Check::new("odd-vanish", "Q^j b_k = 0 for odd j", |env| {
        let h = env.hmu();
        let bound = env.config.max_degree;
        let mut count = 0;
        for k in 1..=8u32 {
            for j in (1..).step_by(2).take_while(|j| j + 2 * k <= bound) {
                count += 1;
                if !h.priddy(j, k).map_err(err)?.is_zero() {
                    return Ok(Outcome::holds(false, format!("Q{j} b{k} is nonzero")));
                }
            }
        }
        Ok(Outcome::holds(true, format!("{count} odd operations vanish")))
    }));
    out.push(Check::new("square-boundary", "Q^{2k} b_k = b_k^2 from the formula", |env| {
        let h = env.hmu();
        for k in 1..=8u32 {
            if h.priddy(2 * k, k).map_err(err)? != h.b(k).pow(2) {
                return Ok(Outcome::holds(false, format!("Q{} b{k}", 2 * k)));
            }
        }
        Ok(Outcome::holds(true, "k = 1..8"))
    }));
    out
}

/// Operation values on conjugates, as `(label, s, i, value in conjugates)`.
pub const STEINBERGER_VALUES: [(&str, u32, usize, &str); 5] = [
    ("Q2-xibar1", 2, 1, "xibar2"),
    ("Q3-xibar1", 3, 1, "xibar1^4"),
    ("Q4-xibar1", 4, 1, "xibar1^2 xibar2"),
    ("Q5-xibar1", 5, 1, "xibar2^2"),
    ("Q16-xibar4", 16, 4, "xibar5"),
];

/// Cartan identities on `ξ̄₁²`, evaluated with `x = ξ₁²`.
pub const STEINBERGER_IDENTITIES: [(&str, &str, &str); 3] = [
    ("identity-Q6", "Q6 x + x^4", "0"),
    ("identity-Q8", "Q8 x + x^2 Q4 x", "0"),
    ("identity-Q10", "Q10 x + (Q4 x)^2", "0"),
];

/// Evaluates a product of powers of conjugates such as `xibar1^2 xibar2`.
fn conjugate_monomial(env: &Env, text: &str) -> Result<Elem, String> {
    let a = env.dual();
    let mut out = Elem::one();
    for factor in text.split_whitespace() {
        let (name, e) = factor.split_once('^').unwrap_or((factor, "1"));
        let i: usize = name.trim_start_matches("xibar").parse().map_err(err)?;
        let e: u32 = e.parse().map_err(err)?;
        let c = a.conjugate(i).ok_or_else(|| format!("xibar{i} exceeds the degree bound"))?;
        out = out.mul(&c.pow(e));
    }
    Ok(out)
}

fn steinberger_value(i: usize) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |env| {
        let (_, s, g, expected) = STEINBERGER_VALUES[i];
        let a = env.dual();
        let c = a.conjugate(g).ok_or("conjugate exceeds the degree bound")?;
        let got = a.apply_q(s, &c).map_err(err)?;
        let want = conjugate_monomial(env, expected)?;
        Ok(Outcome::holds(got == want, a.display(&got)))
    }
}

fn steinberger_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (i, (label, ..)) in STEINBERGER_VALUES.iter().enumerate() {
        out.push(Check::new(label, "Steinberger's action through the antipode", steinberger_value(i)));
    }
    for (label, lhs, rhs) in STEINBERGER_IDENTITIES {
        out.push(Check::new(label, "Cartan consequence on xibar1^2", move |env| {
            evaluate_identity(env.dual(), &[("x", "xi1^2")], lhs, rhs)
        }));
    }
    out.push(Check::new(
        "generating-function",
        "sum of Q^s xi1 inverts 1 + xi1 + xi2 + ... through degree 32",
        |env| {
            let a = env.dual();
            let top = 32.min(a.max_degree());
            let xi1 = a.xi(1).ok_or("no xi1")?;
            let mut total = Elem::one().add(&xi1);
            for s in 1..top {
                total.add_assign(&a.apply_q(s, &xi1).map_err(err)?);
            }
            let mut sum = Elem::one();
            for i in 1..=a.rank() {
                sum.add_assign(&a.xi(i).expect("in range"));
            }
            let product = sum.mul(&total);
            let low = product.filter(|m| a.degree(m) <= top);
            Ok(Outcome::holds(low == Elem::one(), format!("checked through degree {top}")))
        },
    ));
    out.push(Check::new("case-rule-boundary", "the conjugate rule agrees with instability at s = |xibar_i|", |env| {
        let a = env.dual();
        for i in 1..=a.rank() {
            if 2 * ((1u32 << i) - 1) <= a.max_degree() {
                a.check_conjugate_square(i).map_err(err)?;
            }
        }
        Ok(Outcome::holds(true, "consistent"))
    }));
    out.push(Check::new("doubling", "Q^{2^i} xibar_i = xibar_{i+1}", |env| {
        let a = env.dual();
        let mut checked = Vec::new();
        for i in 1..a.rank() {
            let q = a.apply_q(1 << i, &a.conjugate(i).expect("in range")).map_err(err)?;
            if q != a.conjugate(i + 1).expect("in range") {
                return Ok(Outcome::holds(false, format!("fails at i = {i}")));
            }
            checked.push(i.to_string());
        }
        Ok(Outcome::holds(true, format!("i = {}", checked.join(", "))))
    }));
    out
}

fn model_compat_checks() -> Vec<Check> {
    vec![
        Check::new("p-commutes", "p(Q^s u) = Q^s p(u) for s <= 24 and |u| <= 14", |env| {
            let c = check_dl_compatibility(env.hmu(), env.dual(), 14, 24).map_err(err)?;
            Ok(match c.failure {
                None => Outcome::holds(true, format!("{} pairs", c.checked)),
                Some((m, s)) => Outcome::holds(false, format!("Q{s} on {m}")),
            })
        }),
        Check::new("spot-Q4-b1", "p(Q4 b1) = (Q2 xi1)^2", |env| {
            let (h, a) = (env.hmu(), env.dual());
            let lhs = map_p(h, a, &h.apply_q(4, &h.b(1)).map_err(err)?).map_err(err)?;
            let rhs = a.apply_q(2, &a.xi(1).ok_or("no xi1")?).map_err(err)?.pow(2);
            Ok(Outcome::holds(lhs == rhs, a.display(&lhs)))
        }),
        Check::new("spot-Q3-b1", "p(Q3 b1) = Q3 p(b1) = 0", |env| {
            let (h, a) = (env.hmu(), env.dual());
            let lhs = map_p(h, a, &h.apply_q(3, &h.b(1)).map_err(err)?).map_err(err)?;
            let rhs = a.apply_q(3, &map_p(h, a, &h.b(1)).map_err(err)?).map_err(err)?;
            Ok(Outcome::holds(lhs.is_zero() && rhs.is_zero(), a.display(&lhs)))
        }),
        Check::new("spot-Q6-b1", "p(Q6 b1) = xi1^8", |env| {
            let (h, a) = (env.hmu(), env.dual());
            let lhs = map_p(h, a, &h.apply_q(6, &h.b(1)).map_err(err)?).map_err(err)?;
            Ok(Outcome::matches(a.display(&lhs), "xi1^8"))
        }),
    ]
}

fn second_juggle_checks() -> Vec<Check> {
    vec![
        Check::new("juggle", "mu R = Qbar nu + beta alpha on z30", |_| {
            let j = check_juggle().map_err(err)?;
            Ok(Outcome::holds(j.holds, format!("{} = {}", j.mu_r, j.qbar_nu_plus_beta_alpha)))
        }),
        Check::new("suspended-relation", "sigma R has the displayed indeterminacy form", |_| {
            let (holds, shown) = check_suspended_relation().map_err(err)?;
            Ok(Outcome::holds(holds, shown))
        }),
    ]
}

fn y_classes_vanish(env: &Env) -> Result<Outcome, String> {
    let a = env.dual();
    let ctx = x_context();
    let asg = Assignment::new(a, &ctx).with_texts(&[("x", "xi1^2")]).map_err(err)?;
    for (name, _, def) in Y_CLASSES {
        let v = asg.evaluate(&parse_expression(def, &ctx).map_err(err)?).map_err(err)?;
        if !v.is_zero() {
            return Ok(Outcome::holds(false, format!("{name} = {}", a.display(&v))));
        }
    }
    Ok(Outcome::holds(true, "all seven vanish"))
}

fn twisted_square(env: &Env) -> Result<Outcome, String> {
    let h = env.hmu();
    let mu = juggling::mu().map_err(err)?;
    let target = x_y4_context();
    let asg = Assignment::new(h, &target).with_texts(&[("x", "b1"), ("y4", "b2")]).map_err(err)?;
    let xctx = x_context();
    let base = Assignment::new(h, &xctx).with_texts(&[("x", "b1")]).map_err(err)?;
    for (name, _, def) in Y_CLASSES {
        let direct = base.evaluate(&parse_expression(def, &xctx).map_err(err)?).map_err(err)?;
        let through = asg.evaluate(mu.image(name).ok_or("missing image")?).map_err(err)?;
        if direct != through {
            return Ok(Outcome::holds(false, format!("{name}: {} vs {}", h.display(&direct), h.display(&through))));
        }
    }
    Ok(Outcome::holds(true, "Q6 b2 = Q8 b1 + b1^2 Q4 b1 and the other six classes agree"))
}

fn first_juggle_scan(env: &Env) -> Result<Outcome, String> {
    let sigma = juggling::qbar().map_err(err)?.suspend().map_err(err)?;
    let scan = indeterminacy_scan(&sigma, env.dual(), 15, &[5]).map_err(err)?;
    Ok(Outcome::holds(
        scan.all_decomposable(),
        scan.failure.unwrap_or_else(|| format!("{} evaluations of {}", scan.evaluations, scan.generators.join(", "))),
    ))
}

fn first_juggle_checks() -> Vec<Check> {
    vec![
        Check::new("y-at-xi1-squared", "the seven y classes vanish at x = xi1^2", y_classes_vanish),
        Check::new("twisted-square-at-b1", "f commutes with mu at (x, y4) = (b1, b2)", twisted_square),
        Check::new("y10-at-b1", "Q8 b1 + b1^2 Q4 b1 = Q6 b2", |env| {
            evaluate_identity(env.hmu(), &[("x", "b1"), ("y4", "b2")], "Q8 x + x^2 Q4 x", "Q6 y4")
        }),
        Check::new("qbar-at-b1-b2", "Q10 b2 + b1^2 Q6 b2 = 0", |env| {
            evaluate_identity(env.hmu(), &[("x", "b1"), ("y4", "b2")], "Q10 y4 + x^2 Q6 y4", "0")
        }),
        Check::new("scan-degree-15", "sigma Qbar values are decomposable on degree 5", first_juggle_scan),
    ]
}

fn no_indecomposables(degrees: &'static [u32]) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |env| {
        let a = env.dual();
        let found: Vec<String> =
            a.ring().generators().iter().filter(|g| degrees.contains(&g.degree)).map(|g| g.name.clone()).collect();
        Ok(Outcome::holds(found.is_empty(), if found.is_empty() { "none".into() } else { found.join(", ") }))
    }
}

fn degree_31_quotient(env: &Env) -> Result<Outcome, String> {
    let a = env.dual();
    let found: Vec<String> = a.ring().generators().iter().filter(|g| g.degree == 31).map(|g| g.name.clone()).collect();
    Ok(Outcome::matches(found.join(", "), "xi5"))
}

fn relation_scan(env: &Env) -> Result<Outcome, String> {
    let sigma = big_relation::relation_map(None).map_err(err)?.suspend().map_err(err)?;
    let scan = indeterminacy_scan(&sigma, env.dual(), 31, &[9, 11, 13, 14]).map_err(err)?;
    Ok(Outcome::holds(
        scan.all_decomposable(),
        scan.failure.unwrap_or_else(|| format!("{} evaluations of {}", scan.evaluations, scan.generators.join(", "))),
    ))
}

fn indeterminacy_checks() -> Vec<Check> {
    vec![
        Check::new("degree-5", "no indecomposables in degree 5", no_indecomposables(&[5])),
        Check::new("degrees-11-13-14", "no indecomposables in degrees 11, 13, 14", no_indecomposables(&[11, 13, 14])),
        Check::new("degree-31", "the indecomposables of degree 31 are spanned by xi5", degree_31_quotient),
        Check::new("scan-degree-31", "the indeterminacy of sigma R is decomposable", relation_scan),
        Check::new("scan-degree-15", "sigma Qbar values are decomposable on degree 5", first_juggle_scan),
    ]
}

fn appendix_result(env: &Env) -> Result<(FormalGroupLaw, PowerOpResult), String> {
    let law = FormalGroupLaw::from_config(&FglConfig::preset("appendix-z-v3").map_err(err)?, env.config.truncation)
        .map_err(err)?;
    let r = appendix_pipeline(&law, 2).map_err(err)?;
    Ok((law, r))
}

fn series_matches(actual: &Series, expected: &str) -> Result<Outcome, String> {
    let want = Series::parse(actual.vars().clone(), actual.truncation().clone(), expected).map_err(err)?;
    Ok(Outcome::holds(actual.agrees_with(&want), actual.to_string()))
}

fn appendix_checks() -> Vec<Check> {
    vec![
        Check::new("law", "x +_F y = x + y + v3/2 (x^8 + y^8 - (x+y)^8)", |env| {
            let (law, _) = appendix_result(env)?;
            let (x, y) = (law.var(X), law.var(Y));
            let s = x.add(&y).map_err(err)?;
            let half = law.parse("1/2 v3").map_err(err)?;
            let corr =
                x.pow(8).add(&y.pow(8)).and_then(|t| t.sub(&s.pow(8))).and_then(|t| half.mul(&t)).map_err(err)?;
            let expected = s.add(&corr).map_err(err)?;
            Ok(Outcome::holds(law.sum().agrees_with(&expected), law.sum().to_string()))
        }),
        Check::new("bracket2", "<2>_F = 2 - 127 v3 a^7", |env| {
            let (law, _) = appendix_result(env)?;
            series_matches(&law.bracket2_series().map_err(err)?, "2 - 127 v3 a^7")
        }),
        Check::new("g-low-terms", "g = a x + (1 - 4 v3 a^7) x^2 - 14 v3 a^6 x^3 + O(x^4)", |env| {
            let (law, _) = appendix_result(env)?;
            let g = law.isogeny_g().map_err(err)?.truncate(&law.truncation().with_var(X, 4));
            series_matches(&g, "a x + x^2 - 4 v3 a^7 x^2 - 14 v3 a^6 x^3")
        }),
        Check::new("k", "k = y + (1 - 4 v3 a^7) y^2 - 14 v3 a^7 y^3 + O(y^4)", |env| {
            let (law, r) = appendix_result(env)?;
            let k = r.k.truncate(&r.k.truncation().clone().with_var(Y, 4));
            let _ = law;
            series_matches(&k, "y + y^2 - 4 v3 a^7 y^2 - 14 v3 a^7 y^3")
        }),
        Check::new("k-inverse", "k^-1 = y + (4 v3 a^7 - 1) y^2 + (2 - 2 v3 a^7) y^3 + O(y^4)", |env| {
            let (_, r) = appendix_result(env)?;
            let k = r.k_inverse.truncate(&r.k_inverse.truncation().clone().with_var(Y, 4));
            series_matches(&k, "y - y^2 + 4 v3 a^7 y^2 + 2 y^3 - 2 v3 a^7 y^3")
        }),
        Check::new("f2", "f_2 = 6 - 6 v3 a^7", |env| {
            let (_, r) = appendix_result(env)?;
            series_matches(&r.f_n, "6 - 6 v3 a^7")
        }),
        Check::new("h2", "h_2 = 3", |env| {
            let (_, r) = appendix_result(env)?;
            Ok(Outcome::matches(r.h_n.to_string(), "3"))
        }),
        Check::new("raw", "f(P(CP^2)) = 375 v3 a^3", |env| {
            let (_, r) = appendix_result(env)?;
            Ok(Outcome::matches(r.raw.to_string(), "375 v3 a^3"))
        }),
        Check::new("reduced", "375 v3 a^3 = v3 a^3 modulo [2]_F(a)", |env| {
            let (_, r) = appendix_result(env)?;
            Ok(Outcome::matches(r.reduced.to_string(), "v3 a^3"))
        }),
        Check::new("reconstruction", "f_2 - h_2 <2>_F = a^4 f(CP^2)^2 modulo a^5", |env| {
            let (_, r) = appendix_result(env)?;
            Ok(Outcome::holds(
                r.reconstruction_holds(),
                format!("f(CP^2) = {}", r.bracket2.vars().ring().fmt_poly(&r.cp_n)),
            ))
        }),
        Check::new("isogeny", "g is an isogeny modulo (a, 2)", |env| {
            let (law, _) = appendix_result(env)?;
            law.check_isogeny().map_err(err)?;
            Ok(Outcome::holds(true, "F^(2)(x^2, y^2) = F(x, y)^2 mod 2"))
        }),
    ]
}

fn chain_check(
    k: u32,
    identification: fn() -> Identification,
    expected: &'static str,
) -> impl Fn(&Env) -> Result<Outcome, String> {
    move |env| {
        let r = verify_hopf_chain(k, &identification(), env.config.truncation).map_err(err)?;
        let witness = format!(
            "raw {}; reduced {}; identification {}; P {}; class {}; endpoint {}",
            r.raw,
            r.reduced,
            r.identification,
            r.pseries.as_deref().unwrap_or("-"),
            r.hopf_class.as_deref().unwrap_or("-"),
            r.endpoint.as_deref().unwrap_or("-"),
        );
        Ok(Outcome::holds(r.endpoint_is(expected), witness))
    }
}

fn hopf_chain_checks() -> Vec<Check> {
    vec![
        Check::new("identification", "v3 is identified with x7 mod decomposables", |_| {
            Ok(Outcome::matches(Identification::v3_to_x7().describe(), "v3 -> x7"))
        }),
        Check::new("chain-k5", "Q10 (sigma x2) = sigma x7", chain_check(5, Identification::v3_to_x7, "sigma x7")),
        Check::new(
            "chain-k4",
            "Q8 (sigma x2) = 0 since c2 is decomposable",
            chain_check(4, Identification::v3_to_x7, "0"),
        ),
        Check::new("chain-unidentified", "without the identification the raw class is reported", |env| {
            let r = verify_hopf_chain(5, &Identification::none(), env.config.truncation).map_err(err)?;
            let surfaced = r.endpoint.is_none() && r.raw == "375 v3 a^3";
            Ok(Outcome::holds(surfaced, format!("raw {}; {}", r.raw, r.error.unwrap_or_default())))
        }),
        Check::new("qhat-b1", "Qhat^2 b1 = b1 o b1 and Qhat^4 b1 = 0 in the quotient", |_| {
            let two = qhat_b1(2).map_err(err)?;
            let four = qhat_b1(4).map_err(err)?;
            let odd = qhat_b1(3).is_err();
            Ok(Outcome::holds(
                two == hopf_ring::HopfClass::term(hopf_ring::CoeffClass::One, 2) && four.is_zero() && odd,
                format!("{two}; {four}"),
            ))
        }),
        Check::new("rw-additive", "the formal-sum relation at the additive law", |env| {
            let law =
                FormalGroupLaw::from_config(&FglConfig::preset("additive-z").map_err(err)?, env.config.truncation)
                    .map_err(err)?;
            let terms = RavenelWilsonRule.terms(&law);
            Ok(Outcome::holds(RavenelWilsonRule.check_additive(&law), format!("{terms:?}")))
        }),
        Check::imported("translation-rule", "Qhat^s([1] # x) = Qhat^s(x) in the quotient"),
        Check::imported("dl-stability", "suspension commutes with Dyer-Lashof operations"),
    ]
}

fn xi5_chain_checks() -> Vec<Check> {
    vec![
        Check::new("1-juggle", "mu R = Qbar nu + beta alpha on z30", |_| {
            let j = check_juggle().map_err(err)?;
            Ok(Outcome::holds(j.holds, j.mu_r))
        }),
        Check::new("2-y-at-xi1-squared", "the seven y classes vanish at x = xi1^2", y_classes_vanish),
        Check::new("2-twisted-square", "Q6 b2 = Q8 b1 + b1^2 Q4 b1", twisted_square),
        Check::new("3-q16-conjugate", "Q16 xibar4 = xibar5", steinberger_value(4)),
        Check::new("3-q16-xi4", "Q16 xi4 = xi5 mod decomposables", |env| {
            let a = env.dual();
            let q = a.apply_q(16, &a.xi(4).ok_or("no xi4")?).map_err(err)?;
            let linear = q.filter(|m| m.word_length() == 1);
            Ok(Outcome::matches(a.display(&linear), "xi5"))
        }),
        Check::new("4-degree-5", "no indecomposables in degree 5", no_indecomposables(&[5])),
        Check::new("4-degrees-11-13-14", "no indecomposables in degrees 11, 13, 14", no_indecomposables(&[11, 13, 14])),
        Check::new("4-scan-degree-15", "sigma Qbar values are decomposable on degree 5", first_juggle_scan),
        Check::new("4-scan-degree-31", "the indeterminacy of sigma R is decomposable", relation_scan),
        Check::new("4-degree-31", "the indecomposables of degree 31 are spanned by xi5", degree_31_quotient),
        Check::new(
            "5-hopf-endpoint",
            "Q10 (sigma x2) = sigma x7",
            chain_check(5, Identification::v3_to_x7, "sigma x7"),
        ),
        Check::new("5-p-kills-b2", "p(b2) = 0, so the bracket on b2 is defined in degree 5", |env| {
            let (h, a) = (env.hmu(), env.dual());
            let pb2 = map_p(h, a, &h.b(2)).map_err(err)?;
            let degree = h.degree(&crate::algebra::Monomial::var(1)) + 1;
            Ok(Outcome::holds(
                pb2.is_zero() && degree == 5,
                format!("p(b2) = {}, bracket degree {degree}", a.display(&pb2)),
            ))
        }),
        Check::imported("5-bracket-detects", "the bracket on b_n is sigma x_n mod decomposables"),
        Check::imported("juggling-gluing", "the bracket-level juggling that glues these steps"),
    ]
}
