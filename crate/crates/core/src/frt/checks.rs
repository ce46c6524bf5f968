use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::grade::Z3;
use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::algebra::word::{add_term, add_terms_scaled, Monomial};
use crate::error::Result;
use crate::hopf::{GradedMorphism, MorphismMode};
use crate::linalg::{Echelon, SparseVec};
use crate::presets::{free_mq2, l_minus, l_plus, mq2, t_matrix, uqgl2};
use crate::report::{CheckReport, Status};
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};

use super::matrix::{
    graded_kron, graded_kron_scalar, graded_permutation, permutation, r_hat, CycMatrix, GradingConvention, PolyMatrix,
};

fn run(name: &str, f: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    f().unwrap_or_else(|e| CheckReport::error(name, e))
}

fn label(i: usize) -> &'static str {
    ["11", "12", "21", "22"][i]
}

/// `T1 = T ox I`, `T2 = I ox T` under `conv`.
pub fn t1_t2(t: &PolyMatrix, conv: GradingConvention) -> Result<(PolyMatrix, PolyMatrix)> {
    let id = PolyMatrix::identity(t.presentation(), 2);
    Ok((graded_kron(t, &id, conv)?, graded_kron(&id, t, conv)?))
}

/// `R T1 T2 - T1 T2 R` for the generic matrix of `pres`, reduced there.
pub fn frt_residues(r: &CycMatrix, pres: &Arc<Presentation>, conv: GradingConvention) -> Result<PolyMatrix> {
    let t = t_matrix(pres)?;
    let (t1, t2) = t1_t2(&t, conv)?;
    let tt = t1.mul(&t2)?;
    Ok(tt.scalar_left(r).sub(&tt.scalar_right(r)))
}

fn render_residues(m: &PolyMatrix) -> Vec<String> {
    m.nonzero_entries()
        .into_iter()
        .map(|(i, j, p)| format!("[{},{}]: {p}", label(i), label(j)))
        .collect()
}

/// All sixteen RTT residues vanish over `Mq2` under the pinned convention.
pub fn frt_relations() -> CheckReport {
    let name = "frt-relations";
    run(name, || {
        let conv = GradingConvention::PINNED;
        let res = frt_residues(&r_hat(), &mq2(), conv)?;
        let mut rep = CheckReport::from_residues(name, render_residues(&res)).with_note(format!("convention: {conv}"));
        let literal = frt_residues(&r_hat(), &mq2(), GradingConvention::LITERAL)?;
        rep.notes.push(format!(
            "literal convention ({}) leaves {} nonzero entries",
            GradingConvention::LITERAL,
            literal.nonzero_entries().len()
        ));
        let trivial = frt_residues(&CycMatrix::identity(4), &mq2(), conv)?;
        if !trivial.is_zero() {
            rep.status = Status::Fail;
            rep.residues.push("identity in place of R leaves residues".into());
        }
        Ok(rep)
    })
}

/// Every grading convention, with the number of nonzero RTT residues over `Mq2`.
pub fn frt_sweep() -> Result<Vec<(GradingConvention, usize)>> {
    let p = mq2();
    GradingConvention::all()
        .into_iter()
        .map(|c| Ok((c, frt_residues(&r_hat(), &p, c)?.nonzero_entries().len())))
        .collect()
}

pub fn frt_convention_sweep() -> CheckReport {
    let name = "frt-convention-sweep";
    run(name, || {
        let mut rep = CheckReport::new(name, Status::Report);
        let sweep = frt_sweep()?;
        let passing: Vec<_> = sweep.iter().filter(|(_, n)| *n == 0).collect();
        for (c, n) in &sweep {
            rep.notes.push(format!("{c}: {n} nonzero residues"));
        }
        rep.notes.push(format!("{} of {} conventions give zero residues", passing.len(), sweep.len()));
        Ok(rep)
    })
}

fn poly_vector(p: &Poly) -> SparseVec<Monomial> {
    p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Over the free algebra the span of the RTT residues equals the span of
/// the six defining relations.
pub fn frt_free_span() -> CheckReport {
    let name = "frt-free-span";
    run(name, || {
        let free = free_mq2();
        let m = mq2();
        let res = frt_residues(&r_hat(), &free, GradingConvention::PINNED)?;
        let mut res_span: Echelon<Monomial> = Echelon::new();
        for p in res.entries() {
            res_span.insert(&poly_vector(p));
        }
        let mut rel_span: Echelon<Monomial> = Echelon::new();
        let mut relations = Vec::new();
        for r in m.defining_rules() {
            let mut v: SparseVec<Monomial> = BTreeMap::new();
            add_term(&mut v, Monomial(r.lhs.clone()), CycScalar::one());
            add_terms_scaled(&mut v, &r.rhs, &CycScalar::from_int(-1));
            rel_span.insert(&v);
            relations.push(v);
        }
        let mut both = res_span.clone();
        for v in &relations {
            both.insert(v);
        }
        let (r1, r2, r3) = (res_span.rank(), rel_span.rank(), both.rank());
        let ok = r1 == r2 && r2 == r3 && r2 == 6;
        let mut rep = CheckReport::new(name, if ok { Status::Pass } else { Status::Fail });
        rep.notes.push(format!("rank(residues) = {r1}, rank(relations) = {r2}, rank(both) = {r3}"));
        Ok(rep)
    })
}

/// `P^3 = P` and `P != P` for the graded permutation, and `P^-1` is the
/// same operator with `q -> q^2`.
pub fn p_cube() -> CheckReport {
    let name = "graded-permutation-cube";
    run(name, || {
        let mut residues = Vec::new();
        let mut rep_notes = Vec::new();
        for grades in [[Z3::ZERO, Z3::ONE], GradingConvention::PINNED.index_grade_vec().try_into().expect("two")] {
            let pg = graded_permutation(grades, 1);
            let cube = pg.mul(&pg).mul(&pg);
            let tag = format!("grades ({}, {})", grades[0], grades[1]);
            if cube != permutation() {
                residues.push(format!("{tag}: P^3 - P = {:?}", cube.differences(&permutation())));
            }
            if pg == permutation() {
                residues.push(format!("{tag}: graded permutation equals the flip"));
            }
            if pg.mul(&graded_permutation(grades, 2)) != CycMatrix::identity(4) {
                residues.push(format!("{tag}: q -> q^2 does not invert"));
            }
            rep_notes.push(format!("{tag}: P(e2 ox e2) = {} e2 ox e2", pg.get(3, 3)));
        }
        let mut rep = CheckReport::from_residues(name, residues);
        rep.notes = rep_notes;
        Ok(rep)
    })
}

/// `R^2 = (q - q^2) R + I`.
pub fn hecke() -> CheckReport {
    let name = "hecke";
    run(name, || {
        let r = r_hat();
        let lhs = r.mul(&r);
        let rhs = r.scale(&CycScalar::lambda()).add(&CycMatrix::identity(4));
        let residues = lhs
            .differences(&rhs)
            .into_iter()
            .map(|(i, j, d)| format!("[{},{}]: {d}", label(i), label(j)))
            .collect();
        Ok(CheckReport::from_residues(name, residues))
    })
}

fn braid_residues(r12: &CycMatrix, r23: &CycMatrix) -> Vec<String> {
    let lhs = r12.mul(r23).mul(r12);
    let rhs = r23.mul(r12).mul(r23);
    lhs.differences(&rhs).into_iter().map(|(i, j, d)| format!("[{i},{j}]: {d}")).collect()
}

/// `R12 R23 R12 = R23 R12 R23` with ordinary Kronecker embeddings.
pub fn braid_plain() -> CheckReport {
    let name = "braid-plain";
    run(name, || {
        let r = r_hat();
        let id = CycMatrix::identity(2);
        let mut residues = braid_residues(&r.kron(&id), &id.kron(&r));
        let i4 = CycMatrix::identity(4);
        residues.extend(braid_residues(&i4.kron(&id), &id.kron(&i4)).into_iter().map(|s| format!("identity: {s}")));
        Ok(CheckReport::from_residues(name, residues))
    })
}

/// Embeddings `R ox I` and `I ox R` built with the graded Kronecker rule,
/// composite indices carrying summed grades. Informational.
pub fn braid_graded() -> CheckReport {
    let name = "braid-graded";
    run(name, || {
        let r = r_hat();
        let id = CycMatrix::identity(2);
        let mut rep = CheckReport::new(name, Status::Report);
        for conv in [GradingConvention::LITERAL, GradingConvention::PINNED] {
            let g1 = conv.index_grade_vec();
            let g2 = conv.pair_grades();
            let r12 = graded_kron_scalar(&r, &g2, &id, &g1, conv);
            let r23 = graded_kron_scalar(&id, &g1, &r, &g2, conv);
            let res = braid_residues(&r12, &r23);
            rep.notes.push(format!(
                "{conv}: {}",
                if res.is_empty() { "braid relation holds".to_string() } else { format!("{} entries differ", res.len()) }
            ));
        }
        Ok(rep)
    })
}

/// `R+ = P R P` with `R = P^-1 R^`.
pub fn r_plus(conv: GradingConvention) -> CycMatrix {
    let g = [conv.grade(0), conv.grade(1)];
    let p = graded_permutation(g, 1);
    let p_inv = graded_permutation(g, 2);
    let r = p_inv.mul(&r_hat());
    p.mul(&r).mul(&p)
}

/// Residues of `R+ L1 L2 - L2' L1' R+` where `L1 = A ox I`, `L2 = I ox B`,
/// `L2' = I ox B`, `L1' = A ox I`.
pub fn rll_residues(rp: &CycMatrix, a: &PolyMatrix, b: &PolyMatrix, conv: GradingConvention) -> Result<PolyMatrix> {
    let pres = a.presentation().clone();
    let id = PolyMatrix::identity(&pres, 2);
    let l1 = graded_kron(a, &id, conv)?;
    let l2 = graded_kron(&id, b, conv)?;
    let lhs = l1.mul(&l2)?.scalar_left(rp);
    let rhs = l2.mul(&l1)?.scalar_right(rp);
    Ok(lhs.sub(&rhs))
}

/// `R+ L1 L2 = L2 L1 R+` for `(L+, L+)`, `(L-, L-)` and `(L-, L+)` modulo
/// the relations of `Uqgl2`, under the pinned convention.
pub fn rll_relations() -> CheckReport {
    let name = "rll-relations";
    run(name, || {
        let u = uqgl2();
        let conv = GradingConvention::PINNED;
        let rp = r_plus(conv);
        let (lp, lm) = (l_plus(&u)?, l_minus(&u)?);
        let mut residues = Vec::new();
        for (tag, a, b) in [("L+ L+", &lp, &lp), ("L- L-", &lm, &lm), ("L- L+", &lm, &lp)] {
            let res = rll_residues(&rp, a, b, conv)?;
            residues.extend(render_residues(&res).into_iter().map(|s| format!("{tag} {s}")));
        }
        Ok(CheckReport::from_residues(name, residues).with_note(format!("convention: {conv}")))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RllVariant {
    /// `P R P`
    PRP,
    RHat,
    R,
    RHatP,
    PRHat,
}

impl RllVariant {
    pub const ALL: [RllVariant; 5] = [RllVariant::PRP, RllVariant::RHat, RllVariant::R, RllVariant::RHatP, RllVariant::PRHat];

    pub fn matrix(self, conv: GradingConvention) -> CycMatrix {
        let g = [conv.grade(0), conv.grade(1)];
        let p = graded_permutation(g, 1);
        let r = graded_permutation(g, 2).mul(&r_hat());
        match self {
            RllVariant::PRP => p.mul(&r).mul(&p),
            RllVariant::RHat => r_hat(),
            RllVariant::R => r,
            RllVariant::RHatP => r_hat().mul(&p),
            RllVariant::PRHat => p.mul(&r_hat()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RllVariant::PRP => "P R P",
            RllVariant::RHat => "R^",
            RllVariant::R => "R",
            RllVariant::RHatP => "R^ P",
            RllVariant::PRHat => "P R^",
        }
    }
}

/// For each convention and choice of `R+`: nonzero residue counts of the
/// three RLL equations, in both orders `R L1 L2 = L2 L1 R` and
/// `R L2 L1 = L1 L2 R`.
/// Convention, variant, whether the factors were swapped, and the nonzero
/// entry counts for the three equations.
pub type RllSweepRow = (GradingConvention, RllVariant, bool, [usize; 3]);

pub fn rll_sweep() -> Result<Vec<RllSweepRow>> {
    let u = uqgl2();
    let (lp, lm) = (l_plus(&u)?, l_minus(&u)?);
    let id = PolyMatrix::identity(&u, 2);
    let mut out = Vec::new();
    for conv in GradingConvention::all() {
        for v in RllVariant::ALL {
            let rp = v.matrix(conv);
            for swapped in [false, true] {
                let mut counts = [0usize; 3];
                for (k, (a, b)) in [(&lp, &lp), (&lm, &lm), (&lm, &lp)].into_iter().enumerate() {
                    let l1 = graded_kron(a, &id, conv)?;
                    let l2 = graded_kron(&id, b, conv)?;
                    let (first, second) = if swapped { (&l2, &l1) } else { (&l1, &l2) };
                    let lhs = first.mul(second)?.scalar_left(&rp);
                    let rhs = second.mul(first)?.scalar_right(&rp);
                    counts[k] = lhs.sub(&rhs).nonzero_entries().len();
                }
                out.push((conv, v, swapped, counts));
            }
        }
    }
    Ok(out)
}

pub fn rll_convention_sweep() -> CheckReport {
    let name = "rll-convention-sweep";
    run(name, || {
        let mut rep = CheckReport::new(name, Status::Report);
        let mut sweep = rll_sweep()?;
        let total = sweep.len();
        sweep.sort_by_key(|(_, _, _, c)| c.iter().sum::<usize>());
        let full = sweep.iter().filter(|(_, _, _, c)| c.iter().all(|&n| n == 0)).count();
        rep.notes.push(format!("{full} of {total} combinations satisfy all three equations"));
        for (conv, v, swapped, c) in sweep.iter().take(8) {
            let order = if *swapped { "R L2 L1 = L1 L2 R" } else { "R L1 L2 = L2 L1 R" };
            rep.notes.push(format!(
                "{conv}, R+ = {}, {order}: nonzero entries (L+L+, L-L-, L-L+) = ({}, {}, {})",
                v.name(),
                c[0],
                c[1],
                c[2]
            ));
        }
        Ok(rep)
    })
}

/// Entry `(i, k)` of `A ox. B`: `sum_j A_ij ox B_jk`.
pub fn dot_tensor_entry(a: &PolyMatrix, b: &PolyMatrix, i: usize, k: usize) -> TensorPoly {
    let slots = [a.presentation().clone(), b.presentation().clone()];
    let mut acc = TensorPoly::zero(&slots);
    for j in 0..a.dim() {
        let (x, y) = (a.get(i, j), b.get(j, k));
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &TensorPoly::from_polys(&[x.clone(), y.clone()]);
        }
    }
    acc
}

/// Coproduct on `Uqgl2` read off from `L ox. L`.
pub fn l_coproduct(braiding: Braiding) -> Result<GradedMorphism> {
    let u = uqgl2();
    let (lp, lm) = (l_plus(&u)?, l_minus(&u)?);
    let inv_lambda = CycScalar::lambda().inv()?;
    GradedMorphism::new("delta", &u, &[u.clone(), u.clone()], MorphismMode::Homomorphism)
        .with_braiding(braiding)
        .with_image("U", dot_tensor_entry(&lp, &lp, 0, 0))?
        .with_image("V", dot_tensor_entry(&lp, &lp, 1, 1))?
        .with_image("Xp", dot_tensor_entry(&lp, &lp, 0, 1).scale(&inv_lambda))?
        .with_image("Xm", dot_tensor_entry(&lm, &lm, 1, 0).scale(&inv_lambda))?
        .with_inverse_image("U", dot_tensor_entry(&lm, &lm, 0, 0))?
        .with_inverse_image("V", dot_tensor_entry(&lm, &lm, 1, 1))
}

/// `eps(U) = eps(V) = 1`, `eps(Xp) = eps(Xm) = 0`.
pub fn l_counit() -> Result<GradedMorphism> {
    let u = uqgl2();
    let one = TensorPoly::one(&[]);
    let zero = TensorPoly::zero(&[]);
    GradedMorphism::new("epsilon", &u, &[], MorphismMode::Homomorphism)
        .with_image("U", one.clone())?
        .with_image("V", one.clone())?
        .with_image("Xp", zero.clone())?
        .with_image("Xm", zero)?
        .with_inverse_image("U", one.clone())?
        .with_inverse_image("V", one)
}

fn l_coproduct_report(name: &str, braiding: Braiding, status_if_ok: Status) -> CheckReport {
    run(name, || {
        let delta = l_coproduct(braiding)?;
        let mut rep = delta.check_preserves_relations(name);
        let u = delta.source().clone();
        for g in ["U", "V", "Xp", "Xm"] {
            rep.notes.push(format!("Delta({g}) = {}", delta.apply(&Poly::generator(&u, g)?)?));
        }
        for g in ["U", "V"] {
            let x = Poly::generator(&u, g)?;
            let xi = Poly::letter(&u, u.letter(g)?.inverted())?;
            let prod = delta.apply(&x)?.mul(&delta.apply(&xi)?, braiding)?;
            if prod != TensorPoly::one(&[u.clone(), u.clone()]) {
                rep.status = Status::Fail;
                rep.residues.push(format!("Delta({g}) Delta({g}^-1) = {prod}"));
            }
        }
        if status_if_ok == Status::Report {
            let verdict = if rep.failed() { "relations not preserved" } else { "all relations preserved" };
            rep.notes.insert(0, verdict.to_string());
            rep.status = Status::Report;
        }
        Ok(rep)
    })
}

/// `Delta(L) = L ox. L` preserves the relations of `Uqgl2` in the braided
/// tensor square.
pub fn l_coproduct_relations() -> CheckReport {
    l_coproduct_report("l-coproduct", Braiding::Graded, Status::Pass)
}

/// The same coproduct with the unbraided tensor product. Informational.
pub fn l_coproduct_plain() -> CheckReport {
    l_coproduct_report("l-coproduct-plain", Braiding::Plain, Status::Report)
}
