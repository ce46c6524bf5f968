//! Seeded randomized identity suites over the built-in presets.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::algebra::word::{Letter, Monomial, Terms};
use crate::error::Result;
use crate::hopf::LocalizedElement;
use crate::linalg::Echelon;
use crate::presets::{mq2, plane, quantum_determinant, slq2, uqgl2};
use crate::report::CheckReport;
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyOptions {
    pub cases: usize,
    pub seed: u64,
}

impl Default for PropertyOptions {
    fn default() -> Self {
        PropertyOptions {
            cases: 1000,
            seed: 0x5eed_2023,
        }
    }
}

fn rng_for(opts: &PropertyOptions, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed ^ suite.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Small nonzero coefficient `a + b q`.
pub fn random_scalar(rng: &mut impl Rng) -> CycScalar {
    loop {
        let c = CycScalar::from_ints(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random word of length at most `max_len`; inverse letters are used for
/// invertible generators.
pub fn random_word(rng: &mut impl Rng, p: &Presentation, max_len: usize) -> Vec<Letter> {
    let alphabet = p.alphabet();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *alphabet.choose(rng).expect("nonempty alphabet")).collect()
}

/// Random combination of up to `max_terms` words.
pub fn random_poly(rng: &mut impl Rng, p: &Arc<Presentation>, max_terms: usize, max_len: usize) -> Result<Poly> {
    let mut terms = Terms::new();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let w = Monomial(random_word(rng, p, max_len));
        let c = random_scalar(rng);
        let e = terms.entry(w).or_insert_with(CycScalar::zero);
        *e += &c;
    }
    terms.retain(|_, c| !c.is_zero());
    Poly::from_terms(p, terms)
}

/// Random element of the graded tensor product of `slots`.
pub fn random_tensor(rng: &mut impl Rng, slots: &[Arc<Presentation>], max_terms: usize) -> Result<TensorPoly> {
    let mut acc = TensorPoly::zero(slots);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let factors = slots
            .iter()
            .map(|p| Poly::from_word(p, &random_word(rng, p, 2)))
            .collect::<Result<Vec<_>>>()?;
        acc = acc.try_add(&TensorPoly::from_polys(&factors).scale(&random_scalar(rng)))?;
    }
    Ok(acc)
}

fn suite(name: &str, opts: &PropertyOptions, mut case: impl FnMut(usize) -> Result<Option<String>>) -> CheckReport {
    let mut failures = Vec::new();
    for i in 0..opts.cases {
        match case(i) {
            Ok(None) => {}
            Ok(Some(msg)) => failures.push(format!("case {i}: {msg}")),
            Err(e) => failures.push(format!("case {i}: error: {e}")),
        }
        if failures.len() >= 5 {
            break;
        }
    }
    CheckReport::from_residues(name, failures).with_note(format!("{} cases, seed {:#x}", opts.cases, opts.seed))
}

fn algebras() -> Vec<Arc<Presentation>> {
    vec![mq2(), plane(), slq2(), uqgl2()]
}

/// `(xy)z = x(yz)` in every preset with relations.
pub fn poly_associativity(opts: &PropertyOptions) -> CheckReport {
    let mut rng = rng_for(opts, 1);
    let algs = algebras();
    suite("prop-poly-associativity", opts, |i| {
        let p = &algs[i % algs.len()];
        let x = random_poly(&mut rng, p, 3, 3)?;
        let y = random_poly(&mut rng, p, 3, 3)?;
        let z = random_poly(&mut rng, p, 3, 3)?;
        let l = x.mul(&y)?.mul(&z)?;
        let r = x.mul(&y.mul(&z)?)?;
        Ok((l != r).then(|| format!("({x})({y})({z}) in {}", p.name())))
    })
}

/// `(XY)Z = X(YZ)` in braided tensor products with two and three slots.
pub fn tensor_associativity(opts: &PropertyOptions) -> CheckReport {
    let mut rng = rng_for(opts, 2);
    let layouts = [vec![mq2(), mq2()], vec![mq2(), plane()], vec![plane(), mq2(), plane()], vec![mq2(), mq2(), mq2()]];
    suite("prop-tensor-associativity", opts, |i| {
        let slots = &layouts[i % layouts.len()];
        let x = random_tensor(&mut rng, slots, 2)?;
        let y = random_tensor(&mut rng, slots, 2)?;
        let z = random_tensor(&mut rng, slots, 2)?;
        let l = x.mul(&y, Braiding::Graded)?.mul(&z, Braiding::Graded)?;
        let r = x.mul(&y.mul(&z, Braiding::Graded)?, Braiding::Graded)?;
        Ok((l != r).then(|| format!("({x})({y})({z})")))
    })
}

/// The normal form of a product of monomials is homogeneous of the summed
/// grade.
pub fn grade_additivity(opts: &PropertyOptions) -> CheckReport {
    let mut rng = rng_for(opts, 3);
    let algs = algebras();
    suite("prop-grade-additivity", opts, |i| {
        let p = &algs[i % algs.len()];
        let u = random_word(&mut rng, p, 4);
        let v = random_word(&mut rng, p, 4);
        let x = Poly::from_word(p, &u)?;
        let y = Poly::from_word(p, &v)?;
        let xy = x.mul(&y)?;
        let expected = p.monomial_grade(&Monomial(u)) + p.monomial_grade(&Monomial(v));
        if xy.is_zero() {
            return Ok(None);
        }
        Ok((xy.grade().homogeneous() != Some(expected)).then(|| format!("{x} * {y} = {xy}, expected grade {expected}")))
    })
}

/// Reduction is idempotent, lands on normal words and is linear.
pub fn reduce_laws(opts: &PropertyOptions) -> CheckReport {
    let mut rng = rng_for(opts, 4);
    let algs = algebras();
    suite("prop-reduce", opts, |i| {
        let p = &algs[i % algs.len()];
        let u = random_word(&mut rng, p, 5);
        let v = random_word(&mut rng, p, 5);
        let (c1, c2) = (random_scalar(&mut rng), random_scalar(&mut rng));
        let ru = Poly::from_word(p, &u)?;
        let rv = Poly::from_word(p, &v)?;
        if let Some(m) = ru.terms().keys().find(|m| !p.is_normal(&m.0)) {
            return Ok(Some(format!("non-normal word {} in reduced form", p.render_monomial(m))));
        }
        let again = Poly::from_terms(p, ru.terms().clone())?;
        if again != ru {
            return Ok(Some(format!("reduce not idempotent on {ru}")));
        }
        let mut raw: Terms = BTreeMap::new();
        *raw.entry(Monomial(u)).or_insert_with(CycScalar::zero) += &c1;
        *raw.entry(Monomial(v)).or_insert_with(CycScalar::zero) += &c2;
        raw.retain(|_, c| !c.is_zero());
        let whole = Poly::from_terms(p, raw)?;
        let parts = &ru.scale(&c1) + &rv.scale(&c2);
        Ok((whole != parts).then(|| format!("reduce not linear: {whole} vs {parts}")))
    })
}

/// `(p, m)` and `(p Dq, m + 1)` are the same element, stripping `Dq` gives
/// an equal element, and products respect the equivalence.
pub fn localization(opts: &PropertyOptions) -> CheckReport {
    let mut rng = rng_for(opts, 5);
    let m = mq2();
    let det = quantum_determinant(&m).expect("Mq2 has the matrix generators");
    suite("prop-localization", opts, |_| {
        let p = random_poly(&mut rng, &m, 3, 3)?;
        let k = rng.gen_range(0..3u32);
        let x = LocalizedElement::new(p.clone(), k)?;
        let y = LocalizedElement::new(p.mul(&det)?, k + 1)?;
        if !x.equals(&y)? {
            return Ok(Some(format!("({p}, {k}) differs from its lift")));
        }
        if !y.normalized()?.equals(&x)? {
            return Ok(Some(format!("normalizing ({p} Dq, {}) changed the element", k + 1)));
        }
        let z = LocalizedElement::new(random_poly(&mut rng, &m, 2, 2)?, rng.gen_range(0..2u32))?;
        Ok((!x.mul(&z)?.equals(&y.mul(&z)?)?).then(|| format!("products disagree for ({p}, {k})")))
    })
}

/// Multiplication by `Dq` is injective on each degree up to `max_degree`.
pub fn determinant_rank_by_degree(max_degree: usize) -> Result<Vec<(usize, usize, usize)>> {
    let m = mq2();
    let det = quantum_determinant(&m)?;
    let mut out = Vec::new();
    for (deg, words) in m.normal_words(max_degree).into_iter().enumerate() {
        let mut ech: Echelon<Monomial> = Echelon::new();
        for w in &words {
            let img = det.mul(&Poly::from_word(&m, w)?)?;
            ech.insert(&img.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect());
        }
        out.push((deg, words.len(), ech.rank()));
    }
    Ok(out)
}

/// `Dq` is a non-zero-divisor: full rank on every degree up to 6, and
/// `Dq p = p Dq != 0` for random nonzero `p`.
pub fn determinant_regularity(opts: &PropertyOptions) -> CheckReport {
    let name = "prop-determinant-regularity";
    let ranks = match determinant_rank_by_degree(6) {
        Ok(r) => r,
        Err(e) => return CheckReport::error(name, e),
    };
    let mut rng = rng_for(opts, 6);
    let m = mq2();
    let det = quantum_determinant(&m).expect("Mq2 has the matrix generators");
    let mut rep = suite(name, opts, |_| {
        let p = random_poly(&mut rng, &m, 4, 4)?;
        if p.is_zero() {
            return Ok(None);
        }
        let (l, r) = (det.mul(&p)?, p.mul(&det)?);
        if l.is_zero() {
            return Ok(Some(format!("Dq * ({p}) = 0")));
        }
        Ok((l != r).then(|| format!("Dq does not commute with {p}")))
    });
    for (deg, n, rank) in ranks {
        if n != rank {
            rep.residues.push(format!("degree {deg}: rank {rank} of {n}"));
            rep.status = crate::report::Status::Fail;
        }
        rep.notes.push(format!("degree {deg}: {n} monomials, rank {rank}"));
    }
    rep
}

pub fn all_suites(opts: &PropertyOptions) -> Vec<CheckReport> {
    vec![
        poly_associativity(opts),
        tensor_associativity(opts),
        grade_additivity(opts),
        reduce_laws(opts),
        localization(opts),
        determinant_regularity(opts),
    ]
}
