//! n-fold tensor products of graded algebras.
//!
//! With [`Braiding::Graded`] the product of `x1 ox ... ox xn` and
//! `y1 ox ... ox yn` picks up `q^(sum over i > j of t(x_i) t(y_j))`, which for
//! two slots is `(a1 ox a2)(a3 ox a4) = q^(t(a2) t(a3)) a1 a3 ox a2 a4`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::algebra::grade::{GradeOf, Z3};
use crate::algebra::poly::Poly;
use crate::algebra::presentation::{render_word, Presentation};
use crate::algebra::word::{Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::render::render_linear;
use crate::scalars::CycScalar;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum Braiding {
    #[default]
    Graded,
    /// Ordinary slotwise product, no q factors.
    Plain,
    /// The inverse braiding: `q` replaced by `q^2` in the graded factor.
    Inverse,
}

impl Braiding {
    /// `q^(sign * e)` for the grade exponent `e`, or `None` when unbraided.
    fn factor(self, e: i64) -> Option<CycScalar> {
        match self {
            Braiding::Graded => Some(CycScalar::q_power(e)),
            Braiding::Inverse => Some(CycScalar::q_power(-e)),
            Braiding::Plain => None,
        }
    }
}

pub type TensorMonomial = Vec<Monomial>;

#[derive(Clone, Debug)]
pub struct TensorPoly {
    slots: Vec<Arc<Presentation>>,
    terms: BTreeMap<TensorMonomial, CycScalar>,
}

fn add_tterm(terms: &mut BTreeMap<TensorMonomial, CycScalar>, m: TensorMonomial, c: CycScalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn same_slots(a: &[Arc<Presentation>], b: &[Arc<Presentation>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| Arc::ptr_eq(x, y) || **x == **y)
}

fn slot_names(s: &[Arc<Presentation>]) -> String {
    s.iter().map(|p| p.name()).collect::<Vec<_>>().join(" ox ")
}

impl TensorPoly {
    pub fn zero(slots: &[Arc<Presentation>]) -> TensorPoly {
        TensorPoly {
            slots: slots.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(slots: &[Arc<Presentation>], c: CycScalar) -> TensorPoly {
        let mut t = TensorPoly::zero(slots);
        add_tterm(&mut t.terms, vec![Monomial::one(); slots.len()], c);
        t
    }

    pub fn one(slots: &[Arc<Presentation>]) -> TensorPoly {
        TensorPoly::scalar(slots, CycScalar::one())
    }

    /// `x1 ox x2 ox ... ox xn` with no reordering factors.
    pub fn from_polys(factors: &[Poly]) -> TensorPoly {
        let slots: Vec<_> = factors.iter().map(|p| p.presentation().clone()).collect();
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), CycScalar::one());
        for f in factors {
            let mut next = BTreeMap::new();
            for (m, c) in &terms {
                for (fm, fc) in f.terms() {
                    let mut key: TensorMonomial = m.clone();
                    key.push(fm.clone());
                    add_tterm(&mut next, key, c * fc);
                }
            }
            terms = next;
        }
        TensorPoly { slots, terms }
    }

    pub fn from_poly(p: &Poly) -> TensorPoly {
        TensorPoly::from_polys(std::slice::from_ref(p))
    }

    /// `1 ox ... ox x ox ... ox 1` with `x` in position `slot`.
    pub fn slot_embed(x: &Poly, slot: usize, slots: &[Arc<Presentation>]) -> Result<TensorPoly> {
        if slot >= slots.len() {
            return Err(AlgebraError::SlotMismatch(format!("slot {slot} out of range for {} slots", slots.len())));
        }
        if **x.presentation() != *slots[slot] {
            return Err(AlgebraError::PresentationMismatch {
                left: x.presentation().name().to_string(),
                right: slots[slot].name().to_string(),
            });
        }
        let factors: Vec<Poly> = slots
            .iter()
            .enumerate()
            .map(|(i, p)| if i == slot { x.clone() } else { Poly::one(p) })
            .collect();
        Ok(TensorPoly::from_polys(&factors))
    }

    pub fn slots(&self) -> &[Arc<Presentation>] {
        &self.slots
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn terms(&self) -> &BTreeMap<TensorMonomial, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[Monomial]) -> CycScalar {
        self.terms.get(m).cloned().unwrap_or_else(CycScalar::zero)
    }

    /// The value of a 0-slot tensor.
    pub fn as_scalar(&self) -> Option<CycScalar> {
        if !self.slots.is_empty() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(CycScalar::zero))
    }

    /// The single slot of a 1-slot tensor as a polynomial.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.slots.len() != 1 {
            return None;
        }
        let terms: Terms = self.terms.iter().map(|(m, c)| (m[0].clone(), c.clone())).collect();
        Some(Poly::from_normal_terms(&self.slots[0], terms))
    }

    pub fn monomial_grade(&self, m: &[Monomial]) -> Z3 {
        m.iter()
            .zip(&self.slots)
            .fold(Z3::ZERO, |acc, (x, p)| acc + p.monomial_grade(x))
    }

    pub fn grade(&self) -> GradeOf {
        GradeOf::combine(self.terms.keys().map(|m| self.monomial_grade(m)))
    }

    fn check_slots(&self, other: &TensorPoly) -> Result<()> {
        if same_slots(&self.slots, &other.slots) {
            Ok(())
        } else {
            Err(AlgebraError::SlotMismatch(format!(
                "`{}` vs `{}`",
                slot_names(&self.slots),
                slot_names(&other.slots)
            )))
        }
    }

    pub fn scale(&self, c: &CycScalar) -> TensorPoly {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            add_tterm(&mut terms, m.clone(), x * c);
        }
        TensorPoly {
            slots: self.slots.clone(),
            terms,
        }
    }

    pub fn try_add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_slots(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_tterm(&mut terms, m.clone(), c.clone());
        }
        Ok(TensorPoly {
            slots: self.slots.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.try_add(&other.scale(&CycScalar::from_int(-1)))
    }

    /// Product in the tensor algebra; each slot is reduced in its own presentation.
    pub fn mul(&self, other: &TensorPoly, braiding: Braiding) -> Result<TensorPoly> {
        self.check_slots(other)?;
        let n = self.slots.len();
        let mut out = BTreeMap::new();
        for (xm, xc) in &self.terms {
            for (ym, yc) in &other.terms {
                let mut c = xc * yc;
                if braiding != Braiding::Plain {
                    let mut e = 0i64;
                    for i in 0..n {
                        let gi = self.slots[i].monomial_grade(&xm[i]).as_i64();
                        if gi == 0 {
                            continue;
                        }
                        for j in 0..i {
                            e += gi * self.slots[j].monomial_grade(&ym[j]).as_i64();
                        }
                    }
                    if let Some(f) = braiding.factor(e) {
                        c = &c * &f;
                    }
                }
                let mut partial: Vec<(TensorMonomial, CycScalar)> = vec![(Vec::with_capacity(n), c)];
                for i in 0..n {
                    let prod = self.slots[i].reduce_word(&xm[i].concat(&ym[i]).0)?;
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (key, pc) in &partial {
                        for (m, mc) in &prod {
                            let mut k = key.clone();
                            k.push(m.clone());
                            next.push((k, pc * mc));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    add_tterm(&mut out, k, c);
                }
            }
        }
        Ok(TensorPoly {
            slots: self.slots.clone(),
            terms: out,
        })
    }

    pub fn pow(&self, n: u32, braiding: Braiding) -> Result<TensorPoly> {
        let mut acc = TensorPoly::one(&self.slots);
        for _ in 0..n {
            acc = acc.mul(self, braiding)?;
        }
        Ok(acc)
    }

    /// `self ox other` as a tensor with the slots of both, no factors.
    pub fn tensor(&self, other: &TensorPoly) -> TensorPoly {
        let mut slots = self.slots.clone();
        slots.extend(other.slots.iter().cloned());
        let mut terms = BTreeMap::new();
        for (xm, xc) in &self.terms {
            for (ym, yc) in &other.terms {
                let mut k = xm.clone();
                k.extend(ym.iter().cloned());
                add_tterm(&mut terms, k, xc * yc);
            }
        }
        TensorPoly { slots, terms }
    }

    /// Replaces slot `slot` by the image of each of its monomials under `f`.
    /// Every image must have the slot layout `image_slots`; an empty layout
    /// collapses the slot to a scalar.
    pub fn map_slot(
        &self,
        slot: usize,
        image_slots: &[Arc<Presentation>],
        mut f: impl FnMut(&Monomial) -> Result<TensorPoly>,
    ) -> Result<TensorPoly> {
        if slot >= self.slots.len() {
            return Err(AlgebraError::SlotMismatch(format!("slot {slot} out of range")));
        }
        let mut slots: Vec<_> = self.slots[..slot].to_vec();
        slots.extend(image_slots.iter().cloned());
        slots.extend(self.slots[slot + 1..].iter().cloned());
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let img = f(&m[slot])?;
            if !same_slots(img.slots(), image_slots) {
                return Err(AlgebraError::SlotMismatch(format!(
                    "image has slots `{}`, expected `{}`",
                    slot_names(img.slots()),
                    slot_names(image_slots)
                )));
            }
            for (im, ic) in &img.terms {
                let mut k: TensorMonomial = m[..slot].to_vec();
                k.extend(im.iter().cloned());
                k.extend(m[slot + 1..].iter().cloned());
                add_tterm(&mut terms, k, c * ic);
            }
        }
        Ok(TensorPoly { slots, terms })
    }

    /// Multiplies slots `i` and `i + 1` together (plain product, same presentation).
    pub fn multiply_slots(&self, i: usize) -> Result<TensorPoly> {
        if i + 1 >= self.slots.len() {
            return Err(AlgebraError::SlotMismatch(format!("cannot merge slot {i} with its successor")));
        }
        if *self.slots[i] != *self.slots[i + 1] {
            return Err(AlgebraError::PresentationMismatch {
                left: self.slots[i].name().to_string(),
                right: self.slots[i + 1].name().to_string(),
            });
        }
        let p = &self.slots[i];
        let mut slots = self.slots.clone();
        slots.remove(i + 1);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let prod = p.reduce_word(&m[i].concat(&m[i + 1]).0)?;
            for (pm, pc) in prod {
                let mut k: TensorMonomial = m[..i].to_vec();
                k.push(pm);
                k.extend(m[i + 2..].iter().cloned());
                add_tterm(&mut terms, k, c * &pc);
            }
        }
        Ok(TensorPoly { slots, terms })
    }

    /// Swaps the two slots of a 2-slot tensor: `x ox y -> q^(t(x)t(y)) y ox x`
    /// when graded, `q^(-t(x)t(y))` with the inverse braiding.
    pub fn flip(&self, braiding: Braiding) -> Result<TensorPoly> {
        if self.slots.len() != 2 {
            return Err(AlgebraError::SlotMismatch("flip needs exactly two slots".into()));
        }
        let slots = vec![self.slots[1].clone(), self.slots[0].clone()];
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = self.slots[0].monomial_grade(&m[0]).as_i64() * self.slots[1].monomial_grade(&m[1]).as_i64();
            let c = match braiding.factor(e) {
                Some(f) => c * &f,
                None => c.clone(),
            };
            add_tterm(&mut terms, vec![m[1].clone(), m[0].clone()], c);
        }
        Ok(TensorPoly { slots, terms })
    }

    /// Re-reduces every slot in the given presentations (same generators).
    pub fn transfer(&self, slots: &[Arc<Presentation>]) -> Result<TensorPoly> {
        if slots.len() != self.slots.len()
            || slots.iter().zip(&self.slots).any(|(a, b)| a.generators() != b.generators())
        {
            return Err(AlgebraError::SlotMismatch(format!(
                "cannot move `{}` into `{}`",
                slot_names(&self.slots),
                slot_names(slots)
            )));
        }
        let mut out = TensorPoly::zero(slots);
        for (m, c) in &self.terms {
            let factors = m
                .iter()
                .zip(slots)
                .map(|(x, p)| Poly::from_word(p, &x.0))
                .collect::<Result<Vec<_>>>()?;
            out = out.try_add(&TensorPoly::from_polys(&factors).scale(c))?;
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&CycScalar) -> CycScalar) -> TensorPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_tterm(&mut terms, m.clone(), f(c));
        }
        TensorPoly {
            slots: self.slots.clone(),
            terms,
        }
    }
}

impl PartialEq for TensorPoly {
    fn eq(&self, other: &Self) -> bool {
        same_slots(&self.slots, &other.slots) && self.terms == other.terms
    }
}

impl From<&Poly> for TensorPoly {
    fn from(p: &Poly) -> Self {
        TensorPoly::from_poly(p)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render_linear(self.terms.iter().map(|(m, c)| {
            let t = if self.slots.len() <= 1 && m.iter().all(Monomial::is_one) {
                None
            } else {
                Some(
                    m.iter()
                        .zip(&self.slots)
                        .map(|(x, p)| render_word(p.generators(), &x.0))
                        .collect::<Vec<_>>()
                        .join(" ox "),
                )
            };
            (t, c)
        }));
        f.write_str(&text)
    }
}

impl<'a> Add<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;
    /// Panics on a slot mismatch; see [`TensorPoly::try_add`].
    fn add(self, rhs: &'a TensorPoly) -> TensorPoly {
        self.try_add(rhs).expect("adding tensors with different slots")
    }
}

impl<'a> Sub<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &'a TensorPoly) -> TensorPoly {
        self.try_sub(rhs).expect("subtracting tensors with different slots")
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;
    fn neg(self) -> TensorPoly {
        self.scale(&CycScalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{mq2, plane};

    fn g(p: &Arc<Presentation>, n: &str) -> Poly {
        Poly::generator(p, n).unwrap()
    }

    #[test]
    fn braided_product_factor() {
        let m = mq2();
        let x = TensorPoly::from_polys(&[g(&m, "a"), g(&m, "beta")]);
        let y = TensorPoly::from_polys(&[g(&m, "gamma"), g(&m, "d")]);
        let ag = g(&m, "a").mul(&g(&m, "gamma")).unwrap();
        let bd = g(&m, "beta").mul(&g(&m, "d")).unwrap();
        let expect = TensorPoly::from_polys(&[ag.clone(), bd.clone()]);
        assert_eq!(x.mul(&y, Braiding::Graded).unwrap(), expect.scale(&CycScalar::q2()));
        assert_eq!(x.mul(&y, Braiding::Plain).unwrap(), expect);
        assert_eq!(x.mul(&y, Braiding::Inverse).unwrap(), expect.scale(&CycScalar::q()));
    }

    #[test]
    fn flip_and_merge() {
        let p = plane();
        let t = TensorPoly::from_polys(&[g(&p, "theta"), g(&p, "phi")]);
        let flipped = t.flip(Braiding::Graded).unwrap();
        assert_eq!(flipped, TensorPoly::from_polys(&[g(&p, "phi"), g(&p, "theta")]).scale(&CycScalar::q2()));
        assert_eq!(flipped.flip(Braiding::Inverse).unwrap(), t);
        let merged = t.multiply_slots(0).unwrap();
        assert_eq!(merged.to_poly().unwrap(), g(&p, "theta").mul(&g(&p, "phi")).unwrap());
        assert!(t.multiply_slots(1).is_err());
    }

    #[test]
    fn slot_mismatch_is_an_error() {
        let a = TensorPoly::one(&[mq2(), mq2()]);
        let b = TensorPoly::one(&[mq2(), plane()]);
        assert!(a.try_add(&b).is_err());
        assert!(a.mul(&b, Braiding::Graded).is_err());
    }
}
