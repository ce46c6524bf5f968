use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::algebra::word::{Letter, Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::report::CheckReport;
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MorphismMode {
    /// `f(xy) = f(x) f(y)`
    Homomorphism,
    /// `f(xy) = f(y) f(x)`
    AntiHomomorphism,
    /// `f(xy) = q^(t(x)t(y)) f(y) f(x)`
    BraidedAntiHomomorphism,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CoefficientTwist {
    Identity,
    /// Coefficients are conjugated, `q -> q^2`.
    Conjugation,
}

/// A map defined on generators and extended to words according to `mode`.
/// Images live in a tensor product with `target` slots; zero slots means the
/// target is the scalars and one slot is an ordinary algebra.
#[derive(Clone, Debug)]
pub struct GradedMorphism {
    name: String,
    source: Arc<Presentation>,
    target: Vec<Arc<Presentation>>,
    images: HashMap<Letter, TensorPoly>,
    mode: MorphismMode,
    twist: CoefficientTwist,
    braiding: Braiding,
}

impl GradedMorphism {
    pub fn new(name: &str, source: &Arc<Presentation>, target: &[Arc<Presentation>], mode: MorphismMode) -> Self {
        GradedMorphism {
            name: name.to_string(),
            source: source.clone(),
            target: target.to_vec(),
            images: HashMap::new(),
            mode,
            twist: CoefficientTwist::Identity,
            braiding: Braiding::Graded,
        }
    }

    pub fn with_twist(mut self, twist: CoefficientTwist) -> Self {
        self.twist = twist;
        self
    }

    /// Product used in the target when extending to words.
    pub fn with_braiding(mut self, braiding: Braiding) -> Self {
        self.braiding = braiding;
        self
    }

    pub fn set_image(&mut self, letter: Letter, image: TensorPoly) -> Result<()> {
        if image.slots().len() != self.target.len()
            || image.slots().iter().zip(&self.target).any(|(a, b)| **a != **b)
        {
            return Err(AlgebraError::SlotMismatch(format!("image for `{}` has the wrong target", self.name)));
        }
        self.images.insert(letter, image);
        Ok(())
    }

    pub fn with_image(mut self, generator: &str, image: TensorPoly) -> Result<Self> {
        let l = self.source.letter(generator)?;
        self.set_image(l, image)?;
        Ok(self)
    }

    /// Image of the inverse of an invertible generator.
    pub fn with_inverse_image(mut self, generator: &str, image: TensorPoly) -> Result<Self> {
        let l = self.source.letter(generator)?.inverted();
        self.set_image(l, image)?;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &[Arc<Presentation>] {
        &self.target
    }

    pub fn mode(&self) -> MorphismMode {
        self.mode
    }

    pub fn braiding(&self) -> Braiding {
        self.braiding
    }

    pub fn image(&self, l: Letter) -> Result<&TensorPoly> {
        self.images.get(&l).ok_or_else(|| AlgebraError::MissingImage {
            morphism: self.name.clone(),
            generator: self.source.render_monomial(&Monomial(vec![l])),
        })
    }

    pub fn apply_word(&self, w: &[Letter]) -> Result<TensorPoly> {
        let mut acc = TensorPoly::one(&self.target);
        match self.mode {
            MorphismMode::Homomorphism => {
                for l in w {
                    acc = acc.mul(self.image(*l)?, self.braiding)?;
                }
            }
            MorphismMode::AntiHomomorphism | MorphismMode::BraidedAntiHomomorphism => {
                for l in w.iter().rev() {
                    acc = acc.mul(self.image(*l)?, self.braiding)?;
                }
                if self.mode == MorphismMode::BraidedAntiHomomorphism {
                    let mut e = 0;
                    for i in 0..w.len() {
                        for j in i + 1..w.len() {
                            e += self.source.letter_grade(w[i]).as_i64() * self.source.letter_grade(w[j]).as_i64();
                        }
                    }
                    acc = acc.scale(&CycScalar::q_power(e));
                }
            }
        }
        Ok(acc)
    }

    fn coefficient(&self, c: &CycScalar) -> CycScalar {
        match self.twist {
            CoefficientTwist::Identity => c.clone(),
            CoefficientTwist::Conjugation => c.conj(),
        }
    }

    /// Applies the map to a combination of (not necessarily reduced) words.
    pub fn apply_terms(&self, terms: &Terms) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(&self.target);
        for (m, c) in terms {
            out = out.try_add(&self.apply_word(&m.0)?.scale(&self.coefficient(c)))?;
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Poly) -> Result<TensorPoly> {
        if **x.presentation() != *self.source {
            return Err(AlgebraError::PresentationMismatch {
                left: x.presentation().name().to_string(),
                right: self.source.name().to_string(),
            });
        }
        self.apply_terms(x.terms())
    }

    /// For single-slot targets: the image as a polynomial.
    pub fn apply_poly(&self, x: &Poly) -> Result<Poly> {
        self.apply(x)?
            .to_poly()
            .ok_or_else(|| AlgebraError::SlotMismatch(format!("`{}` does not map into an algebra", self.name)))
    }

    /// For scalar targets.
    pub fn apply_scalar(&self, x: &Poly) -> Result<CycScalar> {
        self.apply(x)?
            .as_scalar()
            .ok_or_else(|| AlgebraError::SlotMismatch(format!("`{}` does not map into scalars", self.name)))
    }

    /// `f(lhs) - f(rhs)` for every defining rule of the source, labelled by
    /// the rule.
    pub fn relation_residues(&self) -> Result<Vec<(String, TensorPoly)>> {
        let mut out = Vec::new();
        for r in self.source.defining_rules() {
            let lhs = self.apply_word(&r.lhs)?;
            let rhs = self.apply_terms(&r.rhs)?;
            let label = format!(
                "{} = {}",
                self.source.render_monomial(&Monomial(r.lhs.clone())),
                self.source.render_terms(&r.rhs)
            );
            out.push((label, lhs.try_sub(&rhs)?));
        }
        Ok(out)
    }

    /// PASS iff every defining relation is mapped to zero.
    pub fn check_preserves_relations(&self, check_name: &str) -> CheckReport {
        match self.relation_residues() {
            Ok(res) => {
                let n = res.len();
                let residues = res
                    .into_iter()
                    .filter(|(_, r)| !r.is_zero())
                    .map(|(label, r)| format!("{label}: {r}"))
                    .collect();
                CheckReport::from_residues(check_name, residues)
                    .with_note(format!("{}: {} relations of {}", self.name, n, self.source.name()))
            }
            Err(e) => CheckReport::error(check_name, e),
        }
    }

    /// Generators whose image is not homogeneous of the generator's grade.
    pub fn grade_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, g) in self.source.generators().iter().enumerate() {
            let l = Letter::new(i);
            match self.images.get(&l) {
                None => out.push(format!("{}: no image", g.name)),
                Some(img) => {
                    if !img.is_zero() && img.grade().homogeneous() != Some(g.grade) {
                        out.push(format!("{}: image `{}` has grade {}", g.name, img, img.grade()));
                    }
                }
            }
        }
        out
    }
}
