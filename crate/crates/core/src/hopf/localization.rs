//! Elements `p * Dq^-m` of the algebra localized at the central quantum
//! determinant.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::poly::Poly;
use crate::algebra::word::Monomial;
use crate::error::Result;
use crate::linalg::{solve, SparseVec};
use crate::presets::quantum_determinant;
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};

#[derive(Clone, Debug)]
pub struct LocalizedElement {
    num: Poly,
    power: u32,
    det: Poly,
}

fn det_power(det: &Poly, k: u32) -> Result<Poly> {
    det.pow(k)
}

impl LocalizedElement {
    /// `num * Dq^-power`; the presentation must have generators `a, beta, gamma, d`.
    pub fn new(num: Poly, power: u32) -> Result<Self> {
        let det = quantum_determinant(num.presentation())?;
        Ok(LocalizedElement { num, power, det })
    }

    pub fn from_poly(p: Poly) -> Result<Self> {
        Self::new(p, 0)
    }

    /// `Dq^-k`
    pub fn det_inverse_power(pres: &std::sync::Arc<crate::Presentation>, k: u32) -> Result<Self> {
        Self::new(Poly::one(pres), k)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn determinant(&self) -> &Poly {
        &self.det
    }

    fn with(&self, num: Poly, power: u32) -> Self {
        LocalizedElement {
            num,
            power,
            det: self.det.clone(),
        }
    }

    /// Numerator over the denominator `Dq^k` with `k >= power`.
    fn numerator_at(&self, k: u32) -> Result<Poly> {
        if k == self.power {
            return Ok(self.num.clone());
        }
        self.num.mul(&det_power(&self.det, k - self.power)?)
    }

    pub fn mul(&self, other: &LocalizedElement) -> Result<Self> {
        Ok(self.with(self.num.mul(&other.num)?, self.power + other.power))
    }

    pub fn add(&self, other: &LocalizedElement) -> Result<Self> {
        let k = self.power.max(other.power);
        Ok(self.with(&self.numerator_at(k)? + &other.numerator_at(k)?, k))
    }

    pub fn sub(&self, other: &LocalizedElement) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.num, self.power)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        self.with(self.num.scale(c), self.power)
    }

    /// `(p1, m1) = (p2, m2)` iff `p1 * Dq^m2 = p2 * Dq^m1`.
    pub fn equals(&self, other: &LocalizedElement) -> Result<bool> {
        let k = self.power.max(other.power);
        Ok(self.numerator_at(k)? == other.numerator_at(k)?)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Same element with `Dq` stripped from the numerator as often as it
    /// divides exactly.
    pub fn normalized(&self) -> Result<Self> {
        let mut cur = self.clone();
        while cur.power > 0 {
            match divide_by_det(&cur.num, &cur.det)? {
                Some(q) => cur = cur.with(q, cur.power - 1),
                None => break,
            }
        }
        Ok(cur)
    }

    /// Counit: `eps(p * Dq^-m) = eps(p)` since `eps(Dq) = 1`.
    pub fn counit(&self, eps: &super::morphism::GradedMorphism) -> Result<CycScalar> {
        eps.apply_scalar(&self.num)
    }

    /// Coproduct `Delta(p) * (Dq ox Dq)^-m`, using that `Dq` is group-like.
    pub fn coproduct(&self, delta: &super::morphism::GradedMorphism) -> Result<LocalizedTensor> {
        Ok(LocalizedTensor {
            num: delta.apply(&self.num)?,
            power: self.power,
        })
    }
}

/// `num * (Dq ox Dq)^-power`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedTensor {
    pub num: TensorPoly,
    pub power: u32,
}

impl LocalizedTensor {
    /// Cross-multiplied equality, with `Dq ox Dq` built from `det`.
    pub fn equals(&self, other: &LocalizedTensor, det: &Poly) -> Result<bool> {
        let dd = TensorPoly::from_polys(&[det.clone(), det.clone()]);
        let k = self.power.max(other.power);
        let lift = |t: &LocalizedTensor| -> Result<TensorPoly> {
            let mut n = t.num.clone();
            for _ in t.power..k {
                n = n.mul(&dd, Braiding::Graded)?;
            }
            Ok(n)
        };
        Ok(lift(self)? == lift(other)?)
    }
}

impl fmt::Display for LocalizedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({}) * (Dq ox Dq)^-1", self.num),
            k => write!(f, "({}) * (Dq ox Dq)^-{k}", self.num),
        }
    }
}

/// `r` with `Dq * r = p`, if it exists. Solved degree by degree over normal
/// monomials; `Dq` is homogeneous of degree 2.
fn divide_by_det(p: &Poly, det: &Poly) -> Result<Option<Poly>> {
    if p.is_zero() {
        return Ok(Some(p.clone()));
    }
    let pres = p.presentation();
    let top = p.max_degree();
    if top < 2 {
        return Ok(None);
    }
    let candidates: Vec<Monomial> = pres.normal_words(top - 2).into_iter().flatten().map(Monomial).collect();
    let to_vec = |x: &Poly| -> SparseVec<Monomial> { x.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect() };
    let mut columns = Vec::with_capacity(candidates.len());
    for m in &candidates {
        columns.push(to_vec(&det.mul(&Poly::from_word(pres, &m.0)?)?));
    }
    let Some(x) = solve(&columns, &to_vec(p)) else {
        return Ok(None);
    };
    let terms: BTreeMap<Monomial, CycScalar> =
        candidates.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect();
    Ok(Some(Poly::from_terms(pres, terms)?))
}

impl PartialEq for LocalizedElement {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.num),
            k => {
                let num = self.num.to_string();
                let num = if self.num.len() > 1 { format!("({num})") } else { num };
                if k == 1 {
                    write!(f, "{num}*Dq^-1")
                } else {
                    write!(f, "{num}*Dq^-{k}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::mq2;

    #[test]
    fn cross_multiplication() {
        let m = mq2();
        let det = quantum_determinant(&m).unwrap();
        let a = Poly::generator(&m, "a").unwrap();
        let x = LocalizedElement::new(a.mul(&det).unwrap(), 1).unwrap();
        assert!(x.equals(&LocalizedElement::from_poly(a.clone()).unwrap()).unwrap());
        let n = x.normalized().unwrap();
        assert_eq!((n.numerator(), n.power()), (&a, 0));
        let inv = LocalizedElement::det_inverse_power(&m, 1).unwrap();
        let one = inv.mul(&LocalizedElement::from_poly(det).unwrap()).unwrap();
        assert!(one.equals(&LocalizedElement::from_poly(Poly::one(&m)).unwrap()).unwrap());
        assert!(inv.sub(&inv).unwrap().is_zero());
    }
}
