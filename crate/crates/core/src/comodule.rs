//! Left and right coactions of the matrix bialgebra on the graded planes.

use std::sync::Arc;

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::error::Result;
use crate::hopf::{collapse_left, collapse_right, coproduct, counit, word_image, GradedMorphism, MorphismMode};
use crate::presets::{dual_plane, free_plane, mq2, plane, quantum_determinant, vartheta};
use crate::report::{CheckReport, Status};
use crate::tensor::{Braiding, TensorPoly};

fn run(name: &str, f: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    f().unwrap_or_else(|e| CheckReport::error(name, e))
}

fn gens(p: &Arc<Presentation>, names: [&str; 4]) -> Result<[Poly; 4]> {
    Ok([
        Poly::generator(p, names[0])?,
        Poly::generator(p, names[1])?,
        Poly::generator(p, names[2])?,
        Poly::generator(p, names[3])?,
    ])
}

/// `deltaL(theta) = a ox theta + beta ox phi`, `deltaL(phi) = gamma ox theta + d ox phi`.
///
/// `source` supplies the letters `theta, phi`; `target` is the right slot.
pub fn delta_l(source: &Arc<Presentation>, target: &Arc<Presentation>) -> Result<GradedMorphism> {
    let m = mq2();
    let [a, b, g, d] = gens(&m, ["a", "beta", "gamma", "d"])?;
    let th = Poly::generator(target, "theta")?;
    let ph = Poly::generator(target, "phi")?;
    let t = |x: &Poly, y: &Poly| TensorPoly::from_polys(&[x.clone(), y.clone()]);
    GradedMorphism::new("deltaL", source, &[m.clone(), target.clone()], MorphismMode::Homomorphism)
        .with_image("theta", &t(&a, &th) + &t(&b, &ph))?
        .with_image("phi", &t(&g, &th) + &t(&d, &ph))
}

/// `deltaR(theta) = theta ox a + phi ox gamma`, `deltaR(phi) = theta ox beta + phi ox d`.
///
/// These images are not homogeneous, and products in `plane ox Mq2` are
/// taken with the inverse braiding. This is the graded flip of the same map
/// into `Mq2 ox plane` with the ordinary braiding, see [`theta_double_prime`].
pub fn delta_r(source: &Arc<Presentation>, target: &Arc<Presentation>) -> Result<GradedMorphism> {
    let m = mq2();
    let [a, b, g, d] = gens(&m, ["a", "beta", "gamma", "d"])?;
    let th = Poly::generator(target, "theta")?;
    let ph = Poly::generator(target, "phi")?;
    let t = |x: &Poly, y: &Poly| TensorPoly::from_polys(&[x.clone(), y.clone()]);
    GradedMorphism::new("deltaR", source, &[target.clone(), m.clone()], MorphismMode::Homomorphism)
        .with_braiding(Braiding::Inverse)
        .with_image("theta", &t(&th, &a) + &t(&ph, &g))?
        .with_image("phi", &t(&th, &b) + &t(&ph, &d))
}

/// `theta'' = (theta phi) ox. T` moved into `Mq2 ox plane` by the graded
/// flip: `theta -> a ox theta + q^2 gamma ox phi`, `phi -> q^2 beta ox theta + d ox phi`.
pub fn theta_double_prime() -> Result<GradedMorphism> {
    let p = plane();
    let r = delta_r(&p, &p)?;
    let m = mq2();
    let mut out = GradedMorphism::new("Theta''", &p, &[m, p.clone()], MorphismMode::Homomorphism);
    for g in ["theta", "phi"] {
        let img = r.image(p.letter(g)?)?.flip(Braiding::Graded)?;
        out = out.with_image(g, img)?;
    }
    Ok(out)
}

pub fn plane_delta_l() -> Result<GradedMorphism> {
    delta_l(&plane(), &plane())
}

pub fn plane_delta_r() -> Result<GradedMorphism> {
    delta_r(&plane(), &plane())
}

/// The natural candidate `xi' = a ox xi + beta ox x`, `x' = gamma ox xi + d ox x`
/// on the dual plane.
pub fn dual_delta_l() -> Result<GradedMorphism> {
    let m = mq2();
    let p = dual_plane();
    let [a, b, g, d] = gens(&m, ["a", "beta", "gamma", "d"])?;
    let xi = Poly::generator(&p, "xi")?;
    let x = Poly::generator(&p, "x")?;
    let t = |u: &Poly, v: &Poly| TensorPoly::from_polys(&[u.clone(), v.clone()]);
    GradedMorphism::new("deltaL", &p, &[m.clone(), p.clone()], MorphismMode::Homomorphism)
        .with_image("xi", &t(&a, &xi) + &t(&b, &x))?
        .with_image("x", &t(&g, &xi) + &t(&d, &x))
}

/// Both coactions send the three plane relations to zero.
pub fn coaction_homomorphism() -> CheckReport {
    let name = "coaction-homomorphism";
    run(name, || {
        let mut residues = Vec::new();
        let mut notes = Vec::new();
        let dl = plane_delta_l()?;
        residues.extend(dl.grade_violations().into_iter().map(|v| format!("deltaL: {v}")));
        for delta in [dl, theta_double_prime()?, plane_delta_r()?] {
            let res = delta.relation_residues()?;
            notes.push(format!("{}: {} relations", delta.name(), res.len()));
            for (label, r) in res {
                if !r.is_zero() {
                    residues.push(format!("{}: {label}: {r}", delta.name()));
                }
            }
        }
        let direct = plane_delta_r()?.with_braiding(Braiding::Graded).relation_residues()?;
        let bad = direct.iter().filter(|(_, r)| !r.is_zero()).count();
        notes.push(format!("deltaR with the ordinary braiding in plane ox Mq2: {bad} of {} relations fail", direct.len()));
        let mut rep = CheckReport::from_residues(name, residues);
        rep.notes = notes;
        Ok(rep)
    })
}

/// Normal monomials of the plane of degree at most 3.
fn plane_sample(p: &Arc<Presentation>) -> Result<Vec<Poly>> {
    p.normal_words(3).into_iter().flatten().map(|w| Poly::from_word(p, &w)).collect()
}

/// `(Delta ox id) deltaL = (id ox deltaL) deltaL`, `(eps ox id) deltaL = id`
/// and the mirrored identities for `deltaR`, on every normal monomial of
/// degree at most 3.
pub fn comodule_axioms() -> CheckReport {
    let name = "comodule-axioms";
    run(name, || {
        let m = mq2();
        let p = plane();
        let (dl, dr) = (plane_delta_l()?, plane_delta_r()?);
        let (delta, eps) = (coproduct(&m)?, counit(&m)?);
        let mut residues = Vec::new();
        let sample = plane_sample(&p)?;
        for x in &sample {
            let l = dl.apply(x)?;
            let lhs = l.map_slot(0, &[m.clone(), m.clone()], word_image(&delta))?;
            let rhs = l.map_slot(1, &[m.clone(), p.clone()], word_image(&dl))?;
            if lhs != rhs {
                residues.push(format!("deltaL coassociativity on {x}: {}", lhs.try_sub(&rhs)?));
            }
            let c = collapse_left(&l, &eps)?;
            if &c != x {
                residues.push(format!("deltaL counit on {x}: {c}"));
            }
            let r = dr.apply(x)?;
            let lhs = r.map_slot(1, &[m.clone(), m.clone()], word_image(&delta))?;
            let rhs = r.map_slot(0, &[p.clone(), m.clone()], word_image(&dr))?;
            if lhs != rhs {
                residues.push(format!("deltaR coassociativity on {x}: {}", lhs.try_sub(&rhs)?));
            }
            let c = collapse_right(&r, &eps)?;
            if &c != x {
                residues.push(format!("deltaR counit on {x}: {c}"));
            }
        }
        let theta = Poly::generator(&p, "theta")?;
        let lhs = dl.apply(&theta)?.map_slot(0, &[m.clone(), m.clone()], word_image(&delta))?;
        Ok(CheckReport::from_residues(name, residues)
            .with_note(format!("{} monomials of degree <= 3", sample.len()))
            .with_note(format!("(Delta ox id) deltaL(theta) = {lhs}")))
    })
}

/// `deltaL(vartheta)` with `vartheta = theta*phi - q^2*phi*theta` in the free
/// algebra on `theta, phi`.
pub fn manin_image() -> Result<TensorPoly> {
    let f = free_plane();
    delta_l(&f, &f)?.apply(&vartheta(&f)?)
}

/// `deltaL(vartheta) = Dq ox vartheta` with the right slot free.
pub fn manin_subcomodule() -> CheckReport {
    let name = "manin-subcomodule";
    run(name, || {
        let f = free_plane();
        let m = mq2();
        let th = vartheta(&f)?;
        let image = manin_image()?;
        let expected = TensorPoly::from_polys(&[quantum_determinant(&m)?, th.clone()]);
        let mut residues = Vec::new();
        let diff = image.try_sub(&expected)?;
        if !diff.is_zero() {
            residues.push(format!("deltaL(vartheta) - Dq ox vartheta = {diff}"));
        }
        let collapsed = collapse_left(&image, &counit(&m)?)?;
        if collapsed != th {
            residues.push(format!("(eps ox id) deltaL(vartheta) = {collapsed}"));
        }
        let quotient = delta_l(&f, &plane())?.apply(&th)?;
        if !quotient.is_zero() {
            residues.push(format!("with plane relations on the right: {quotient}"));
        }
        Ok(CheckReport::from_residues(name, residues)
            .with_note(format!("vartheta = {th}"))
            .with_note(format!("deltaL(vartheta) = {image}")))
    })
}

/// Residue of `xi' x' - x' xi'` for the candidate dual-plane coaction.
/// Informational.
pub fn dual_plane_report() -> CheckReport {
    let name = "dual-plane";
    run(name, || {
        let p = dual_plane();
        let m = mq2();
        let d = dual_delta_l()?;
        let mut rep = CheckReport::new(name, Status::Report);
        for (label, r) in d.relation_residues()? {
            let verdict = if r.is_zero() { "0".to_string() } else { r.to_string() };
            rep.notes.push(format!("residue of {label}: {verdict}"));
        }
        let eps = counit(&m)?;
        for g in ["xi", "x"] {
            let x = Poly::generator(&p, g)?;
            let c = collapse_left(&d.apply(&x)?, &eps)?;
            rep.notes.push(format!("(eps ox id) deltaL({g}) = {c}"));
        }
        let xi = Poly::generator(&p, "xi")?;
        let x = Poly::generator(&p, "x")?;
        let comm = &xi.mul(&x)? - &x.mul(&xi)?;
        rep.notes.push(format!("xi*x - x*xi = {comm}"));
        Ok(rep)
    })
}
