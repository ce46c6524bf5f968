use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::algebra::grade::{GradeOf, Z3};
use crate::algebra::presentation::Presentation;
use crate::algebra::word::{add_term, add_terms_scaled, Letter, Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::scalars::CycScalar;

/// Normal-form element of the algebra defined by a presentation.
///
/// Addition and subtraction panic if the operands live in different
/// presentations; multiplication reports it as an error.
#[derive(Clone, Debug)]
pub struct Poly {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl Poly {
    pub fn zero(pres: &Arc<Presentation>) -> Poly {
        Poly {
            pres: pres.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(pres: &Arc<Presentation>) -> Poly {
        Poly::scalar(pres, CycScalar::one())
    }

    pub fn scalar(pres: &Arc<Presentation>, c: CycScalar) -> Poly {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::one(), c);
        Poly {
            pres: pres.clone(),
            terms,
        }
    }

    pub fn generator(pres: &Arc<Presentation>, name: &str) -> Result<Poly> {
        let l = pres.letter(name)?;
        Poly::from_word(pres, &[l])
    }

    pub fn letter(pres: &Arc<Presentation>, l: Letter) -> Result<Poly> {
        Poly::from_word(pres, &[l])
    }

    /// Reduces a single word.
    pub fn from_word(pres: &Arc<Presentation>, w: &[Letter]) -> Result<Poly> {
        Ok(Poly {
            pres: pres.clone(),
            terms: pres.reduce_word(w)?,
        })
    }

    /// Reduces an arbitrary linear combination of words.
    pub fn from_terms(pres: &Arc<Presentation>, terms: Terms) -> Result<Poly> {
        Ok(Poly {
            pres: pres.clone(),
            terms: pres.reduce_terms(terms)?,
        })
    }

    /// Wraps terms that are already in normal form.
    pub(crate) fn from_normal_terms(pres: &Arc<Presentation>, terms: Terms) -> Poly {
        debug_assert!(terms.keys().all(|m| pres.is_normal(&m.0)));
        Poly {
            pres: pres.clone(),
            terms,
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> CycScalar {
        self.terms.get(m).cloned().unwrap_or_else(CycScalar::zero)
    }

    /// The constant term.
    pub fn constant(&self) -> CycScalar {
        self.coefficient(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is a scalar multiple of 1.
    pub fn as_scalar(&self) -> Option<CycScalar> {
        match self.terms.len() {
            0 => Some(CycScalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn grade(&self) -> GradeOf {
        self.pres.terms_grade(&self.terms)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.grade().homogeneous().is_some()
    }

    pub fn monomial_grade(&self, m: &Monomial) -> Z3 {
        self.pres.monomial_grade(m)
    }

    pub fn same_presentation(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) || *self.pres == *other.pres
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.same_presentation(other) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch {
                left: self.pres.name().to_string(),
                right: other.pres.name().to_string(),
            })
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Poly {
        let mut terms = Terms::new();
        add_terms_scaled(&mut terms, &self.terms, c);
        Poly {
            pres: self.pres.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut raw = Terms::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut raw, m1.concat(m2), c1 * c2);
            }
        }
        Poly::from_terms(&self.pres, raw)
    }

    pub fn pow(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.pres);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `xy - yx`
    pub fn commutator(&self, other: &Poly) -> Result<Poly> {
        Ok(&self.mul(other)? - &other.mul(self)?)
    }

    /// Same terms in another presentation with the same generators (e.g.
    /// the free version), re-reduced there.
    pub fn transfer(&self, target: &Arc<Presentation>) -> Result<Poly> {
        if self.pres.generators() != target.generators() {
            return Err(AlgebraError::PresentationMismatch {
                left: self.pres.name().to_string(),
                right: target.name().to_string(),
            });
        }
        Poly::from_terms(target, self.terms.clone())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&CycScalar) -> CycScalar) -> Poly {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), f(c));
        }
        Poly {
            pres: self.pres.clone(),
            terms,
        }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other) && self.terms == other.terms
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pres.render_terms(&self.terms))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        assert!(self.same_presentation(rhs), "adding polynomials from different presentations");
        let mut terms = self.terms.clone();
        add_terms_scaled(&mut terms, &rhs.terms, &CycScalar::one());
        Poly {
            pres: self.pres.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        assert!(self.same_presentation(rhs), "subtracting polynomials from different presentations");
        let mut terms = self.terms.clone();
        add_terms_scaled(&mut terms, &rhs.terms, &CycScalar::from_int(-1));
        Poly {
            pres: self.pres.clone(),
            terms,
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&CycScalar::from_int(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
