//! Decomposability of the indeterminacy of a suspended relation.
//!
//! The indeterminacy in the target degree is spanned by the values of the
//! suspended relation's image as its free classes range over the model. Sums,
//! products and operations applied to decomposables stay decomposable, so it
//! suffices to check the spanning values.

use std::collections::BTreeMap;

use serde::Serialize;

use super::evaluate::Assignment;
use super::{is_decomposable, monomials_of_degree, DlModel, Elem};
use crate::algebra::indecomposable_degrees;
use crate::dyer_lashof::{display_poly, DlPoly, SubstitutionMap};
use crate::error::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndeterminacyScan {
    pub target_degree: u32,
    pub source_degrees: Vec<u32>,
    /// One entry per free class: the part of the image it appears in.
    pub generators: Vec<String>,
    /// Source degrees in which the model has indecomposables.
    pub indecomposable_sources: Vec<u32>,
    pub evaluations: usize,
    /// First indecomposable value, with the assignment that produced it.
    pub failure: Option<String>,
}

impl IndeterminacyScan {
    pub fn all_decomposable(&self) -> bool {
        self.failure.is_none()
    }
}

/// Scans the image of the source class of degree `target_degree` under
/// `relation`, restricted to free classes whose degree is in `source_degrees`.
pub fn indeterminacy_scan(
    relation: &SubstitutionMap,
    model: &dyn DlModel,
    target_degree: u32,
    source_degrees: &[u32],
) -> Result<IndeterminacyScan, ModelError> {
    let source = relation.source();
    let target = relation.target().clone();
    let class = (0..source.len())
        .find(|&i| source.degree(i) == target_degree && !relation.base().iter().any(|b| b == source.name(i)))
        .ok_or_else(|| ModelError::Inconsistent(format!("no source class in degree {target_degree}")))?;
    let image = &relation.normal_images()?[class];
    let is_base = |g: usize| relation.base().iter().any(|b| b == target.name(g));

    let mut groups: BTreeMap<usize, DlPoly> = BTreeMap::new();
    for (m, c) in image.terms() {
        let free: Vec<usize> = m.factors().iter().map(|(w, _)| w.gen).filter(|&g| !is_base(g)).collect();
        if let [g] = free[..] {
            if source_degrees.contains(&target.degree(g)) {
                groups.entry(g).or_insert_with(DlPoly::zero).add_term(m.clone(), *c);
            }
        }
    }

    let gens = model.ring().generators();
    let indecomposables = indecomposable_degrees(gens, model.max_degree());
    let mut scan = IndeterminacyScan {
        target_degree,
        source_degrees: source_degrees.to_vec(),
        generators: groups.values().map(|p| display_poly(p, &target)).collect(),
        indecomposable_sources: source_degrees.iter().copied().filter(|d| indecomposables.contains(d)).collect(),
        evaluations: 0,
        failure: None,
    };

    let base: Vec<usize> = (0..target.len()).filter(|&g| is_base(g)).collect();
    let base_choices: Vec<Vec<Elem>> = base
        .iter()
        .map(|&g| {
            let basis: Vec<Elem> =
                monomials_of_degree(model.ring(), target.degree(g)).into_iter().map(Elem::monomial).collect();
            if basis.is_empty() {
                vec![Elem::zero()]
            } else {
                basis
            }
        })
        .collect();

    for (&g, part) in &groups {
        for b in monomials_of_degree(model.ring(), target.degree(g)) {
            let mut choice = vec![0usize; base.len()];
            loop {
                let mut asg = Assignment::new(model, &target);
                for h in 0..target.len() {
                    if !is_base(h) {
                        let v = if h == g { Elem::monomial(b.clone()) } else { Elem::zero() };
                        asg.set(target.name(h), v)?;
                    }
                }
                for (k, &h) in base.iter().enumerate() {
                    asg.set(target.name(h), base_choices[k][choice[k]].clone())?;
                }
                let value = asg.evaluate_poly(part)?;
                scan.evaluations += 1;
                if !is_decomposable(&value) {
                    scan.failure = Some(format!(
                        "{} at {} = {} gives {}",
                        display_poly(part, &target),
                        target.name(g),
                        model.ring().fmt_monomial(&b),
                        model.display(&value)
                    ));
                    return Ok(scan);
                }
                if !advance(&mut choice, &base_choices) {
                    break;
                }
            }
        }
    }
    Ok(scan)
}

fn advance(choice: &mut [usize], options: &[Vec<Elem>]) -> bool {
    for k in 0..choice.len() {
        choice[k] += 1;
        if choice[k] < options[k].len() {
            return true;
        }
        choice[k] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyer_lashof::juggling::qbar;
    use crate::models::DualSteenrod;

    #[test]
    fn first_juggle_scan_in_degree_15() {
        let a = DualSteenrod::new(31);
        let sigma = qbar().unwrap().suspend().unwrap();
        let scan = indeterminacy_scan(&sigma, &a, 15, &[5]).unwrap();
        assert!(scan.all_decomposable(), "{:?}", scan.failure);
        assert!(scan.indecomposable_sources.is_empty());
        assert_eq!(scan.generators.len(), 1);
    }

    #[test]
    fn empty_source_list_gives_empty_indeterminacy() {
        let a = DualSteenrod::new(31);
        let sigma = qbar().unwrap().suspend().unwrap();
        let scan = indeterminacy_scan(&sigma, &a, 15, &[]).unwrap();
        assert!(scan.generators.is_empty());
        assert_eq!(scan.evaluations, 0);
    }
}
