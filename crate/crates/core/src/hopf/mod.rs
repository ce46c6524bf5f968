//! Coproduct, counit, antipode and star on the graded matrix algebras, plus
//! the checks of their axioms.

pub mod checks;
pub mod localization;
pub mod morphism;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use localization::{LocalizedElement, LocalizedTensor};
pub use morphism::{CoefficientTwist, GradedMorphism, MorphismMode};

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::algebra::word::{Monomial, Terms};
use crate::error::Result;
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};

fn gen(p: &Arc<Presentation>, n: &str) -> Result<Poly> {
    Poly::generator(p, n)
}

fn t2(x: &Poly, y: &Poly) -> TensorPoly {
    TensorPoly::from_polys(&[x.clone(), y.clone()])
}

/// `Delta(T) = T ox. T`:
/// `Delta(a) = a ox a + beta ox gamma`, `Delta(beta) = a ox beta + beta ox d`,
/// `Delta(gamma) = gamma ox a + d ox gamma`, `Delta(d) = gamma ox beta + d ox d`.
pub fn coproduct(p: &Arc<Presentation>) -> Result<GradedMorphism> {
    let (a, b, g, d) = (gen(p, "a")?, gen(p, "beta")?, gen(p, "gamma")?, gen(p, "d")?);
    GradedMorphism::new("delta", p, &[p.clone(), p.clone()], MorphismMode::Homomorphism)
        .with_image("a", &t2(&a, &a) + &t2(&b, &g))?
        .with_image("beta", &t2(&a, &b) + &t2(&b, &d))?
        .with_image("gamma", &t2(&g, &a) + &t2(&d, &g))?
        .with_image("d", &t2(&g, &b) + &t2(&d, &d))
}

/// `eps(a) = eps(d) = 1`, `eps(beta) = eps(gamma) = 0`.
pub fn counit(p: &Arc<Presentation>) -> Result<GradedMorphism> {
    let one = TensorPoly::one(&[]);
    let zero = TensorPoly::zero(&[]);
    GradedMorphism::new("epsilon", p, &[], MorphismMode::Homomorphism)
        .with_image("a", one.clone())?
        .with_image("beta", zero.clone())?
        .with_image("gamma", zero)?
        .with_image("d", one)
}

/// The numerator part of the antipode: `a -> d`, `beta -> -beta`,
/// `gamma -> -q*gamma`, `d -> a`, extended as a braided anti-homomorphism.
/// `S(w) = S~(w) * Dq^-len(w)`.
pub fn antipode_numerator(p: &Arc<Presentation>) -> Result<GradedMorphism> {
    let one = |x: Poly| TensorPoly::from_poly(&x);
    GradedMorphism::new("antipode", p, std::slice::from_ref(p), MorphismMode::BraidedAntiHomomorphism)
        .with_image("a", one(gen(p, "d")?))?
        .with_image("beta", one(-&gen(p, "beta")?))?
        .with_image("gamma", one(gen(p, "gamma")?.scale(&-CycScalar::q())))?
        .with_image("d", one(gen(p, "a")?))
}

/// The same images as [`antipode_numerator`] extended as a plain
/// anti-homomorphism, kept for comparison.
pub fn antipode_numerator_plain(p: &Arc<Presentation>) -> Result<GradedMorphism> {
    let one = |x: Poly| TensorPoly::from_poly(&x);
    GradedMorphism::new("antipode-plain", p, std::slice::from_ref(p), MorphismMode::AntiHomomorphism)
        .with_image("a", one(gen(p, "d")?))?
        .with_image("beta", one(-&gen(p, "beta")?))?
        .with_image("gamma", one(gen(p, "gamma")?.scale(&-CycScalar::q())))?
        .with_image("d", one(gen(p, "a")?))
}

/// Antipode of a polynomial, as an element of the localized algebra.
pub fn antipode(x: &Poly) -> Result<LocalizedElement> {
    let p = x.presentation();
    let s = antipode_numerator(p)?;
    let mut by_degree: BTreeMap<usize, Terms> = BTreeMap::new();
    for (m, c) in x.terms() {
        by_degree.entry(m.degree()).or_default().insert(m.clone(), c.clone());
    }
    let mut acc = LocalizedElement::from_poly(Poly::zero(p))?;
    for (deg, terms) in by_degree {
        let num = s.apply_terms(&terms)?.to_poly().expect("single slot");
        acc = acc.add(&LocalizedElement::new(num, deg as u32)?)?;
    }
    Ok(acc)
}

/// `S(p * Dq^-m) = Dq^m * S(p)`, using `S(Dq) = Dq^-1` and that `Dq` is
/// central of grade 0.
pub fn antipode_localized(x: &LocalizedElement) -> Result<LocalizedElement> {
    let s = antipode(x.numerator())?;
    let dm = x.determinant().pow(x.power())?;
    s.mul(&LocalizedElement::from_poly(dm)?)
}

/// Conjugate-linear anti-homomorphism `a* = a`, `beta* = beta`,
/// `gamma* = q*gamma`, `d* = d`.
pub fn star(p: &Arc<Presentation>) -> Result<GradedMorphism> {
    let one = |x: Poly| TensorPoly::from_poly(&x);
    GradedMorphism::new("star", p, std::slice::from_ref(p), MorphismMode::AntiHomomorphism)
        .with_twist(CoefficientTwist::Conjugation)
        .with_image("a", one(gen(p, "a")?))?
        .with_image("beta", one(gen(p, "beta")?))?
        .with_image("gamma", one(gen(p, "gamma")?.scale(&CycScalar::q())))?
        .with_image("d", one(gen(p, "d")?))
}

pub fn star_apply(x: &Poly) -> Result<Poly> {
    star(x.presentation())?.apply_poly(x)
}

/// `(star ox star)` on a 2-slot tensor, optionally with the graded twist
/// `(x ox y)* = q^(t(x)t(y)) x* ox y*`.
pub fn star_tensor(t: &TensorPoly, star: &GradedMorphism, twisted: bool) -> Result<TensorPoly> {
    let slots = t.slots().to_vec();
    let mut out = TensorPoly::zero(&slots);
    for (m, c) in t.terms() {
        let x = star.apply_word(&m[0].0)?.to_poly().expect("single slot");
        let y = star.apply_word(&m[1].0)?.to_poly().expect("single slot");
        let mut coeff = c.conj();
        if twisted {
            let e = slots[0].monomial_grade(&m[0]).as_i64() * slots[1].monomial_grade(&m[1]).as_i64();
            coeff = &coeff * &CycScalar::q_power(e);
        }
        out = out.try_add(&t2(&x, &y).scale(&coeff))?;
    }
    Ok(out)
}

/// `m o (S ox id) o Delta` and `m o (id ox S) o Delta` on `x`, with the plain
/// product after applying `S`.
pub fn antipode_convolutions(x: &Poly) -> Result<(LocalizedElement, LocalizedElement)> {
    let p = x.presentation();
    let delta = coproduct(p)?;
    let dx = delta.apply(x)?;
    let mut left = LocalizedElement::from_poly(Poly::zero(p))?;
    let mut right = left.clone();
    for (m, c) in dx.terms() {
        let x1 = Poly::from_word(p, &m[0].0)?;
        let x2 = Poly::from_word(p, &m[1].0)?;
        let l = antipode(&x1)?.mul(&LocalizedElement::from_poly(x2.clone())?)?;
        let r = LocalizedElement::from_poly(x1)?.mul(&antipode(&x2)?)?;
        left = left.add(&l.scale(c))?;
        right = right.add(&r.scale(c))?;
    }
    Ok((left, right))
}

/// `m o (eps ox id) o t` for a 2-slot tensor.
pub fn collapse_left(t: &TensorPoly, eps: &GradedMorphism) -> Result<Poly> {
    let out = t.map_slot(0, &[], |m| eps.apply_word(&m.0))?;
    Ok(out.to_poly().expect("single slot"))
}

/// `m o (id ox eps) o t` for a 2-slot tensor.
pub fn collapse_right(t: &TensorPoly, eps: &GradedMorphism) -> Result<Poly> {
    let out = t.map_slot(1, &[], |m| eps.apply_word(&m.0))?;
    Ok(out.to_poly().expect("single slot"))
}

/// Monomial image helper for [`TensorPoly::map_slot`].
pub fn word_image<'a>(f: &'a GradedMorphism) -> impl FnMut(&Monomial) -> Result<TensorPoly> + 'a {
    move |m| f.apply_word(&m.0)
}

/// `tau(Delta(x))` with the graded flip.
pub fn flipped_coproduct(x: &Poly) -> Result<TensorPoly> {
    coproduct(x.presentation())?.apply(x)?.flip(Braiding::Graded)
}
