//! Registry of named verification checks.

use std::thread;

use crate::algebra::confluence::check_local_confluence;
use crate::algebra::poly::Poly;
use crate::algebra::word::{Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::linalg::Echelon;
use crate::presets::{mq2, preset};
use crate::properties::{self, PropertyOptions};
use crate::report::{CheckReport, Status};
use crate::{comodule, frt, hopf};

pub type VerifyOptions = PropertyOptions;

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    /// Acceptance criterion the check belongs to.
    pub criterion: u8,
    pub run: fn(&VerifyOptions) -> CheckReport,
}

fn confluence(name: &str) -> CheckReport {
    let check = format!("confluence-{name}");
    match preset(name) {
        Ok(p) => check_local_confluence(&p).to_check(&check, &p),
        Err(e) => CheckReport::error(&check, e),
    }
}

/// `d*a` and the other five relations of `Mq2` reduce to their oriented
/// right-hand sides, and the degree-2 census agrees with the rank of all
/// reduced words of degree 2.
pub fn relations_engine() -> CheckReport {
    let name = "relations-engine";
    let run = || -> Result<CheckReport> {
        let m = mq2();
        let mut residues = Vec::new();
        let da = Poly::generator(&m, "d")?.mul(&Poly::generator(&m, "a")?)?;
        let expected = crate::expr::parse_raw("a*d - (q - 1)*beta*gamma", m.generators())?;
        let expected = Poly::from_terms(&m, expected)?;
        if da != expected {
            residues.push(format!("d*a = {da}"));
        }
        for r in m.defining_rules() {
            let lhs = Poly::from_word(&m, &r.lhs)?;
            let rhs = Poly::from_terms(&m, r.rhs.clone())?;
            if lhs != rhs {
                residues.push(format!("{}: {lhs} vs {rhs}", m.render_monomial(&Monomial(r.lhs.clone()))));
            }
            if r.rhs.keys().any(|w| !m.is_normal(&w.0)) {
                residues.push(format!("right side of {} is not normal", m.render_monomial(&Monomial(r.lhs.clone()))));
            }
        }
        let census = m.dimension_census(2);
        let alphabet = m.alphabet();
        let mut ech: Echelon<Monomial> = Echelon::new();
        for &x in &alphabet {
            for &y in &alphabet {
                let t: Terms = m.reduce_word(&[x, y])?;
                ech.insert(&t.into_iter().collect());
            }
        }
        if census.get(2) != Some(&ech.rank()) || ech.rank() != 10 {
            residues.push(format!("census {census:?}, rank of reduced words {}", ech.rank()));
        }
        Ok(CheckReport::from_residues(name, residues)
            .with_note(format!("d*a = {da}"))
            .with_note(format!("census up to degree 2: {census:?}")))
    };
    run().unwrap_or_else(|e| CheckReport::error(name, e))
}

macro_rules! check {
    ($name:expr, $crit:expr, $f:expr) => {
        Check {
            name: $name,
            criterion: $crit,
            run: |_| $f(),
        }
    };
}

macro_rules! prop {
    ($name:expr, $f:path) => {
        Check {
            name: $name,
            criterion: 13,
            run: |o| $f(o),
        }
    };
}

/// Every check, sorted by name.
pub fn registry() -> Vec<Check> {
    let mut v = vec![
        check!("confluence-plane", 1, || confluence("plane")),
        check!("confluence-dual-plane", 1, || confluence("dual-plane")),
        check!("confluence-Mq2", 1, || confluence("Mq2")),
        check!("confluence-SLq2", 1, || confluence("SLq2")),
        check!("confluence-Uqgl2", 1, || confluence("Uqgl2")),
        check!("relations-engine", 2, relations_engine),
        check!("coaction-homomorphism", 3, comodule::coaction_homomorphism),
        check!("determinant-central", 4, hopf::checks::determinant_central),
        check!("determinant-equality", 4, hopf::checks::determinant_equality),
        check!("determinant-grouplike", 4, hopf::checks::determinant_grouplike),
        check!("determinant-multiplicative", 4, hopf::checks::determinant_multiplicative),
        check!("bialgebra-relations", 5, hopf::checks::bialgebra_relations),
        check!("coassociativity", 5, hopf::checks::coassociativity),
        check!("counit", 5, hopf::checks::counit_axioms),
        check!("non-cocommutative", 5, hopf::checks::non_cocommutative),
        check!("lemma-tilde", 6, hopf::checks::lemma_tilde),
        check!("lemma-tilde-printed-sign", 6, hopf::checks::lemma_tilde_printed),
        check!("antipode-matrix", 7, hopf::checks::antipode_matrix),
        check!("antipode-generator", 7, hopf::checks::antipode_generator),
        check!("antipode-relations", 7, hopf::checks::antipode_relations),
        check!("antipode-square", 7, hopf::checks::antipode_square),
        check!("star-involutive", 8, hopf::checks::star_involutive),
        check!("star-ideal", 8, hopf::checks::star_ideal),
        check!("star-coproduct", 8, hopf::checks::star_coproduct),
        check!("comodule-axioms", 9, comodule::comodule_axioms),
        check!("manin-subcomodule", 9, comodule::manin_subcomodule),
        check!("dual-plane", 9, comodule::dual_plane_report),
        check!("frt-relations", 10, frt::checks::frt_relations),
        check!("frt-free-span", 10, frt::checks::frt_free_span),
        check!("frt-convention-sweep", 10, frt::checks::frt_convention_sweep),
        check!("graded-permutation-cube", 11, frt::checks::p_cube),
        check!("hecke", 11, frt::checks::hecke),
        check!("braid-plain", 11, frt::checks::braid_plain),
        check!("braid-graded", 11, frt::checks::braid_graded),
        check!("rll-relations", 12, frt::checks::rll_relations),
        check!("rll-convention-sweep", 12, frt::checks::rll_convention_sweep),
        check!("l-coproduct", 12, frt::checks::l_coproduct_relations),
        check!("l-coproduct-plain", 12, frt::checks::l_coproduct_plain),
        prop!("prop-poly-associativity", properties::poly_associativity),
        prop!("prop-tensor-associativity", properties::tensor_associativity),
        prop!("prop-grade-additivity", properties::grade_additivity),
        prop!("prop-reduce", properties::reduce_laws),
        prop!("prop-localization", properties::localization),
        prop!("prop-determinant-regularity", properties::determinant_regularity),
    ];
    v.sort_by_key(|c| c.name);
    v
}

pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name).collect()
}

pub fn find(name: &str) -> Result<Check> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| AlgebraError::UnknownCheck {
            name: name.to_string(),
            available: check_names().join(", "),
        })
}

pub fn run_check(name: &str, opts: &VerifyOptions) -> Result<CheckReport> {
    let c = find(name)?;
    Ok(run_one(&c, opts))
}

fn run_one(c: &Check, opts: &VerifyOptions) -> CheckReport {
    let mut r = (c.run)(opts);
    // A check reports under its registry name even if it labels itself otherwise.
    r.name = c.name.to_string();
    r
}

/// Runs `checks` concurrently; the result is in the order given.
pub fn run_checks(checks: &[Check], opts: &VerifyOptions) -> Vec<CheckReport> {
    thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || run_one(c, opts))).collect();
        handles
            .into_iter()
            .zip(checks)
            .map(|(h, c)| h.join().unwrap_or_else(|_| CheckReport::error(c.name, "check panicked")))
            .collect()
    })
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckReport> {
    run_checks(&registry(), opts)
}

/// Reports of the checks belonging to criterion `n`.
pub fn run_criterion(n: u8, opts: &VerifyOptions) -> Vec<CheckReport> {
    let checks: Vec<_> = registry().into_iter().filter(|c| c.criterion == n).collect();
    run_checks(&checks, opts)
}

/// A criterion holds when none of its checks fail and it has at least one
/// check that is not informational.
pub fn criterion_holds(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Pass) && !reports.iter().any(|r| r.status == Status::Fail)
}

/// `true` when no report is a failure.
pub fn all_clear(reports: &[CheckReport]) -> bool {
    !reports.iter().any(CheckReport::failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_covers_every_criterion() {
        let names = check_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
        for n in 1..=13 {
            assert!(registry().iter().any(|c| c.criterion == n), "criterion {n}");
        }
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(find("nope"), Err(AlgebraError::UnknownCheck { .. })));
    }

    #[test]
    fn criterion_rule() {
        let pass = CheckReport::new("x", Status::Pass);
        let report = CheckReport::new("y", Status::Report);
        let fail = CheckReport::new("z", Status::Fail);
        assert!(criterion_holds(&[pass.clone(), report.clone()]));
        assert!(!criterion_holds(std::slice::from_ref(&report)));
        assert!(!criterion_holds(&[pass, fail]));
    }
}
