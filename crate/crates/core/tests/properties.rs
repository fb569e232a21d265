//! Randomized invariants of the rewriting engine, suspension and series arithmetic.

use std::sync::Arc;

use dlforge::algebra::binomial_mod2;
use dlforge::dyer_lashof::normalize::is_normal_form;
use dlforge::dyer_lashof::word::poly_to_expr;
use dlforge::dyer_lashof::{parse_expression, DlContext, Normalizer, Strategy as Rewrite, SubstitutionMap};
use dlforge::formal_groups::law::{A, X, Y};
use dlforge::formal_groups::{FglConfig, FormalGroupLaw};
use num_bigint::BigUint;
use proptest::prelude::*;

fn two_generators() -> DlContext {
    DlContext::from_pairs(&[("x", 2), ("y", 3)]).unwrap()
}

fn word() -> impl Strategy<Value = String> {
    (prop::collection::vec(1u32..=12, 0..=3), prop::bool::ANY).prop_map(|(ops, on_y)| {
        let mut parts: Vec<String> = ops.iter().map(|s| format!("Q{s}")).collect();
        parts.push(if on_y { "y".into() } else { "x".into() });
        format!("({})", parts.join(" "))
    })
}

fn expression() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::collection::vec(word(), 1..=2), 1..=3)
        .prop_map(|sum| sum.iter().map(|p| p.join(" ")).collect::<Vec<_>>().join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_forms_are_stable(text in expression()) {
        let ctx = two_generators();
        let e = parse_expression(&text, &ctx).unwrap();
        let once = Normalizer::new(&ctx).normalize(&e).unwrap().poly;
        prop_assert!(is_normal_form(&once, &ctx));
        let twice = Normalizer::new(&ctx).normalize(&poly_to_expr(&once)).unwrap().poly;
        prop_assert_eq!(&once, &twice);
        for s in [Rewrite::LeftmostFirst, Rewrite::RightmostFirst] {
            let other = Normalizer::new(&ctx).with_strategy(s).normalize(&e).unwrap().poly;
            prop_assert_eq!(&once, &other);
        }
    }

    #[test]
    fn level_is_monotone_under_windows(text in expression()) {
        let ctx = two_generators();
        let e = parse_expression(&text, &ctx).unwrap();
        let (level, _) = Normalizer::new(&ctx).min_en_level(&e).unwrap();
        prop_assert!(Normalizer::new(&ctx).with_window(level).normalize(&e).is_ok());
        if level > 1 {
            prop_assert!(Normalizer::new(&ctx).with_window(level - 1).normalize(&e).is_err());
        }
    }

    #[test]
    fn suspension_respects_composition(d in 3u32..=6, s1 in 0u32..=8, s2 in 0u32..=8, extra in prop::bool::ANY) {
        let q1 = d + s1;
        let w = q1 + d;
        let q2 = w + s2;
        let c0 = Arc::new(DlContext::from_pairs(&[("x", 2), ("v", d)]).unwrap());
        let c1 = Arc::new(DlContext::from_pairs(&[("x", 2), ("w", w)]).unwrap());
        let c2 = Arc::new(DlContext::from_pairs(&[("x", 2), ("z", q2 + w)]).unwrap());
        let mut fw = format!("Q{q1} v");
        if extra && q1 % 2 == 0 {
            fw.push_str(&format!(" + x^{} v", q1 / 2));
        }
        let gz = format!("Q{q2} w + x^2 Q{} w", q2 - 4);
        let f = SubstitutionMap::new(c1, c0, &["x"], &[("w", &fw)]).unwrap();
        let g = SubstitutionMap::new(c2, f.source().clone(), &["x"], &[("z", &gz)]).unwrap();
        let composite = f.after(&g).unwrap().suspend().unwrap();
        let stepwise = f.suspend().unwrap().after(&g.suspend().unwrap()).unwrap();
        prop_assert!(composite.equivalent(&stepwise).unwrap());
    }

    #[test]
    fn lucas_parity_matches_exact_binomials(n in 0u32..=64, k in 0u32..=64) {
        let exact = if k > n {
            BigUint::from(0u32)
        } else {
            (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
        };
        prop_assert_eq!(exact.bit(0), binomial_mod2(n as i64, k as i64));
    }

    #[test]
    fn random_logarithms_give_group_laws(c1 in -5i64..=5, c2 in -5i64..=5, d in 1i64..=4) {
        let text = format!("name random\nlattice rational\nlog x + {c1}/{d} x^2 + {c2}/{d} x^3\n");
        let law = FormalGroupLaw::from_config(&FglConfig::parse(&text).unwrap(), 7).unwrap();
        let (x, y, a) = (law.var(X), law.var(Y), law.var(A));
        let left = law.add(&law.add(&x, &y).unwrap(), &a).unwrap();
        let right = law.add(&x, &law.add(&y, &a).unwrap()).unwrap();
        prop_assert!(left.agrees_with(&right));
        let zero = law.constant(0);
        prop_assert!(law.add(&x, &zero).unwrap().agrees_with(&x));
        let exp_log = law.log().compose(&[law.log_inverse().clone(), y.clone(), a.clone()]).unwrap();
        prop_assert!(exp_log.agrees_with(&x));
        let unit = law.constant(1).add(&law.log().scale(&dlforge::algebra::rational(c1, d))).unwrap();
        prop_assert!(unit.mul(&unit.invert().unwrap()).unwrap().agrees_with(&law.constant(1)));
    }
}
