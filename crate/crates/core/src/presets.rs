//! Catalog of the built-in algebras and named elements.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::error::{AlgebraError, Result};
use crate::frt::matrix::{graded_permutation, r_hat, CycMatrix, GradingConvention, PolyMatrix};
use crate::scalars::CycScalar;

const PLANE: &str = "\
presentation plane
theta 1 nilpotent 3
phi 2 nilpotent 3
phi*theta -> q*theta*phi
";

const DUAL_PLANE: &str = "\
presentation dual-plane
xi 2
x 0
x*xi -> xi*x
";

const FREE_PLANE: &str = "\
presentation free-plane
theta 1
phi 2
";

const MQ2: &str = "\
presentation Mq2
a 0
beta 2
gamma 1
d 0
beta*a -> a*beta
gamma*beta -> beta*gamma
d*beta -> beta*d
gamma*a -> q^2*a*gamma
d*gamma -> q^2*gamma*d
d*a -> a*d - (q - 1)*beta*gamma
";

const FREE_MQ2: &str = "\
presentation free-Mq2
a 0
beta 2
gamma 1
d 0
";

// beta < gamma < a < d: with a first, the two determinant rules leave
// a*beta*d irreducible in two different ways.
const SLQ2: &str = "\
presentation SLq2
beta 2
gamma 1
a 0
d 0
gamma*beta -> beta*gamma
a*beta -> beta*a
a*gamma -> q*gamma*a
d*beta -> beta*d
d*gamma -> q^2*gamma*d
a*d -> 1 + q*beta*gamma
d*a -> 1 + beta*gamma
";

const UQGL2: &str = "\
presentation Uqgl2
U 0 invertible
V 0 invertible
Xp 2
Xm 1
V*U -> U*V
Xp*U -> q*U*Xp
Xm*U -> q^2*U*Xm
Xp*V -> q^2*V*Xp
Xm*V -> q*V*Xm
Xm*Xp -> Xp*Xm - (U*V^-1 - V*U^-1)/(q^2 - q)
";

pub const PRESET_NAMES: &[&str] = &["Mq2", "SLq2", "Uqgl2", "dual-plane", "free-Mq2", "free-plane", "plane"];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "plane" => PLANE,
        "dual-plane" => DUAL_PLANE,
        "free-plane" => FREE_PLANE,
        "Mq2" => MQ2,
        "free-Mq2" => FREE_MQ2,
        "SLq2" => SLQ2,
        "Uqgl2" => UQGL2,
        _ => return None,
    })
}

/// Shared, immutable preset presentation.
pub fn preset(name: &str) -> Result<Arc<Presentation>> {
    static CACHE: OnceLock<Vec<(String, Arc<Presentation>)>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        PRESET_NAMES
            .iter()
            .map(|n| {
                let p = Presentation::from_text(source(n).expect("listed")).expect("built-in presets are valid");
                (n.to_string(), Arc::new(p))
            })
            .collect()
    });
    cache
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, p)| p.clone())
        .ok_or_else(|| AlgebraError::UnknownPreset {
            name: name.to_string(),
            available: PRESET_NAMES.join(", "),
        })
}

/// A fresh copy of a preset with a different rewrite-step guard.
pub fn preset_with_max_steps(name: &str, max_steps: usize) -> Result<Arc<Presentation>> {
    Ok(Arc::new(preset(name)?.with_max_steps(max_steps)))
}

/// Text form of a preset, as accepted by [`Presentation::from_text`].
pub fn preset_text(name: &str) -> Result<String> {
    Ok(preset(name)?.to_text())
}

pub fn mq2() -> Arc<Presentation> {
    preset("Mq2").expect("built-in")
}

pub fn slq2() -> Arc<Presentation> {
    preset("SLq2").expect("built-in")
}

pub fn uqgl2() -> Arc<Presentation> {
    preset("Uqgl2").expect("built-in")
}

pub fn plane() -> Arc<Presentation> {
    preset("plane").expect("built-in")
}

pub fn free_plane() -> Arc<Presentation> {
    preset("free-plane").expect("built-in")
}

pub fn dual_plane() -> Arc<Presentation> {
    preset("dual-plane").expect("built-in")
}

pub fn free_mq2() -> Arc<Presentation> {
    preset("free-Mq2").expect("built-in")
}

/// A named element of the catalog.
#[derive(Clone, Debug)]
pub enum Element {
    Scalar(CycScalar),
    Poly(Poly),
    Matrix(PolyMatrix),
    ScalarMatrix(CycMatrix),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(c) => write!(f, "{c}"),
            Element::Poly(p) => write!(f, "{p}"),
            Element::Matrix(m) => write!(f, "{m}"),
            Element::ScalarMatrix(m) => write!(f, "{m}"),
        }
    }
}

pub const ELEMENT_NAMES: &[&str] = &["Dq", "Lminus", "Lplus", "Pgraded", "Rhat", "T", "Ttilde", "lambda", "vartheta"];

/// `ad - q*beta*gamma` in any presentation with generators `a, beta, gamma, d`.
pub fn quantum_determinant(p: &Arc<Presentation>) -> Result<Poly> {
    let a = Poly::generator(p, "a")?;
    let b = Poly::generator(p, "beta")?;
    let g = Poly::generator(p, "gamma")?;
    let d = Poly::generator(p, "d")?;
    Ok(&a.mul(&d)? - &b.mul(&g)?.scale(&CycScalar::q()))
}

/// `theta*phi - q^2*phi*theta`.
pub fn vartheta(p: &Arc<Presentation>) -> Result<Poly> {
    let t = Poly::generator(p, "theta")?;
    let f = Poly::generator(p, "phi")?;
    Ok(&t.mul(&f)? - &f.mul(&t)?.scale(&CycScalar::q2()))
}

/// `T = (a beta; gamma d)`.
pub fn t_matrix(p: &Arc<Presentation>) -> Result<PolyMatrix> {
    PolyMatrix::of_generators(p, ["a", "beta", "gamma", "d"])
}

/// `T~ = (d, -beta; -q*gamma, a)`.
pub fn t_tilde(p: &Arc<Presentation>) -> Result<PolyMatrix> {
    let g = |n: &str| Poly::generator(p, n);
    PolyMatrix::from_rows(
        p,
        vec![
            vec![g("d")?, -&g("beta")?],
            vec![g("gamma")?.scale(&-CycScalar::q()), g("a")?],
        ],
    )
}

/// `L+ = (U, lambda*Xp; 0, V)`.
pub fn l_plus(p: &Arc<Presentation>) -> Result<PolyMatrix> {
    let g = |n: &str| Poly::generator(p, n);
    PolyMatrix::from_rows(
        p,
        vec![
            vec![g("U")?, g("Xp")?.scale(&CycScalar::lambda())],
            vec![Poly::zero(p), g("V")?],
        ],
    )
}

/// `L- = (U^-1, 0; lambda*Xm, V^-1)`.
pub fn l_minus(p: &Arc<Presentation>) -> Result<PolyMatrix> {
    let inv = |n: &str| -> Result<Poly> {
        let l = p.letter(n)?;
        Poly::letter(p, l.inverted())
    };
    PolyMatrix::from_rows(
        p,
        vec![
            vec![inv("U")?, Poly::zero(p)],
            vec![Poly::generator(p, "Xm")?.scale(&CycScalar::lambda()), inv("V")?],
        ],
    )
}

/// Looks up a named element; polynomial elements are built in `pres` when
/// given, otherwise in their home preset.
pub fn element(name: &str, pres: Option<&Arc<Presentation>>) -> Result<Element> {
    let home = |default: &str| -> Result<Arc<Presentation>> {
        match pres {
            Some(p) => Ok(p.clone()),
            None => preset(default),
        }
    };
    Ok(match name {
        "lambda" => Element::Scalar(CycScalar::lambda()),
        "Dq" => Element::Poly(quantum_determinant(&home("Mq2")?)?),
        "vartheta" => Element::Poly(vartheta(&home("free-plane")?)?),
        "T" => Element::Matrix(t_matrix(&home("Mq2")?)?),
        "Ttilde" => Element::Matrix(t_tilde(&home("Mq2")?)?),
        "Lplus" => Element::Matrix(l_plus(&home("Uqgl2")?)?),
        "Lminus" => Element::Matrix(l_minus(&home("Uqgl2")?)?),
        "Rhat" => Element::ScalarMatrix(r_hat()),
        "Pgraded" => {
            let c = GradingConvention::LITERAL;
            Element::ScalarMatrix(graded_permutation([c.grade(0), c.grade(1)], 1))
        }
        _ => {
            return Err(AlgebraError::UnknownElement {
                name: name.to_string(),
                available: ELEMENT_NAMES.join(", "),
            })
        }
    })
}
