use z3hopf::algebra::check_local_confluence;
use z3hopf::expr::{evaluate, parse, Context, Value};
use z3hopf::frt::matrix::{graded_kron, graded_permutation, r_hat, CycMatrix, GradingConvention, PolyMatrix};
use z3hopf::hopf::LocalizedElement;
use z3hopf::presets::{self, element, mq2, plane, Element};
use z3hopf::{CycScalar, GradeOf, Letter, Poly, Presentation, TensorPoly, Z3};

fn ev(preset: &str, src: &str) -> Value {
    let ctx = Context::for_preset(preset).unwrap();
    evaluate(&parse(src).unwrap(), &ctx).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn same(preset: &str, a: &str, b: &str) {
    let diff = ev(preset, &format!("({a}) - ({b})"));
    assert_eq!(diff.to_string(), "0", "{a} vs {b} in {preset}");
}

fn grade(preset: &str, src: &str) -> GradeOf {
    ev(preset, src).grade().unwrap()
}

#[test]
fn rewriting_examples() {
    same("plane", "phi*theta", "q*theta*phi");
    same("plane", "theta*theta*theta", "0");
    same("plane", "phi^3", "0");
    same("Mq2", "d*a", "a*d - (q - 1)*beta*gamma");
    same("Mq2", "d*gamma", "q^2*gamma*d");
    assert_eq!(ev("Mq2", "d*a").to_string(), "a*d - (q - 1)*beta*gamma");
    assert_eq!(ev("plane", "q^2*phi*theta").to_string(), "theta*phi");
}

#[test]
fn multiplication_examples() {
    let m = mq2();
    let g = |n: &str| Poly::generator(&m, n).unwrap();
    let abg = g("a").mul(&g("beta").mul(&g("gamma")).unwrap()).unwrap();
    assert_eq!(abg.to_string(), "a*beta*gamma");
    let ad = g("a").mul(&g("d")).unwrap();
    let word: Vec<Letter> = ["a", "d", "a", "d"].iter().map(|n| m.letter(n).unwrap()).collect();
    assert_eq!(ad.mul(&ad).unwrap(), Poly::from_word(&m, &word).unwrap());
    assert_eq!(Poly::one(&m).mul(&ad).unwrap(), ad);
}

#[test]
fn grade_examples() {
    assert_eq!(grade("Mq2", "beta*gamma"), GradeOf::Homogeneous(Z3::ZERO));
    assert_eq!(grade("Mq2", "a + beta*gamma"), GradeOf::Homogeneous(Z3::ZERO));
    assert_eq!(grade("Mq2", "a + gamma"), GradeOf::Inhomogeneous);
    assert_eq!(grade("Mq2", "beta ox gamma"), GradeOf::Homogeneous(Z3::ZERO));
    assert_eq!(grade("Mq2", "a ox a"), GradeOf::Homogeneous(Z3::ZERO));
    assert_eq!(grade("Mq2", "a ox beta + beta ox d"), GradeOf::Homogeneous(Z3::new(2)));
}

#[test]
fn census_examples() {
    assert_eq!(plane().dimension_census(4), vec![1, 2, 3, 2, 1]);
    let c = mq2().dimension_census(2);
    assert_eq!((c[1], c[2]), (4, 10));
}

#[test]
fn confluence_examples() {
    for name in ["plane", "dual-plane", "Mq2", "SLq2", "Uqgl2"] {
        let p = presets::preset(name).unwrap();
        assert!(check_local_confluence(&p).passed(), "{name}");
    }
    let broken = "\
presentation broken
theta 1
phi 2
phi*theta -> theta*phi
theta*theta*theta -> 0
phi*theta -> q*theta*phi
";
    if let Ok(p) = Presentation::from_text(broken) {
        assert!(!check_local_confluence(&p).passed());
    }
    // Same inconsistency without the duplicate left side.
    let broken = "\
presentation broken2
theta 1
phi 2
phi*theta -> theta*phi
phi*theta*theta -> q*theta*phi*theta
";
    let p = Presentation::from_text(broken).unwrap();
    assert!(!check_local_confluence(&p).passed());
}

#[test]
fn braided_product_examples() {
    same("Mq2", "(a ox beta)*(gamma ox d)", "q^2*(a*gamma ox beta*d)");
    same("plane", "(1 ox theta)*(phi ox 1)", "q^2*(phi ox theta)");
    same("plane", "(theta ox 1)*(phi ox theta)", "theta*phi ox theta");
}

#[test]
fn slot_embedding_examples() {
    let p = plane();
    let m = mq2();
    let theta = Poly::generator(&p, "theta").unwrap();
    let e = TensorPoly::slot_embed(&theta, 0, &[p.clone(), p.clone()]).unwrap();
    assert_eq!(e, TensorPoly::from_polys(&[theta.clone(), Poly::one(&p)]));
    let gamma = Poly::generator(&m, "gamma").unwrap();
    let e = TensorPoly::slot_embed(&gamma, 1, &[m.clone(), m.clone(), m.clone()]).unwrap();
    assert_eq!(e, TensorPoly::from_polys(&[Poly::one(&m), gamma, Poly::one(&m)]));
}

#[test]
fn hopf_examples() {
    same("Mq2", "delta(a)", "a ox a + beta ox gamma");
    same("Mq2", "delta(beta)", "a ox beta + beta ox d");
    same("Mq2", "epsilon(beta)", "0");
    same("Mq2", "epsilon(a*d - d*a - (q - 1)*beta*gamma)", "0");
    same("Mq2", "antipode(gamma)", "-q*gamma*Dq^-1");
    same("Mq2", "delta(Dq)", "Dq ox Dq");
    same("Mq2", "epsilon(Dq)", "1");
    same("Mq2", "Dq*gamma - gamma*Dq", "0");
    same("Mq2", "Dq", "a*d - q*beta*gamma");
    same("Mq2", "Dq", "d*a - beta*gamma");
}

#[test]
fn localization_examples() {
    let m = mq2();
    let det = presets::quantum_determinant(&m).unwrap();
    let loc = |p: Poly, k: u32| LocalizedElement::new(p, k).unwrap();
    let one = Poly::one(&m);
    let a = Poly::generator(&m, "a").unwrap();
    let d = Poly::generator(&m, "d").unwrap();
    let x = loc(det.clone(), 1).mul(&loc(one.clone(), 0)).unwrap();
    assert!(x.equals(&loc(one.clone(), 0)).unwrap());
    let ad = loc(a.clone(), 0).mul(&loc(d.clone(), 1)).unwrap();
    assert!(ad.equals(&loc(a.mul(&d).unwrap(), 1)).unwrap());
    let sq = loc(one.clone(), 1).mul(&loc(one.clone(), 1)).unwrap();
    assert!(sq.equals(&loc(one, 2)).unwrap());
    same("Mq2", "Dq^-1*Dq", "1");
}

#[test]
fn antipode_matrix_examples() {
    let m = mq2();
    let t = presets::t_matrix(&m).unwrap();
    let tt = presets::t_tilde(&m).unwrap();
    let det = presets::quantum_determinant(&m).unwrap();
    let prod = t.mul(&tt).unwrap();
    assert_eq!(prod.get(0, 0), &det);
    assert!(prod.get(0, 1).is_zero());
    same("Mq2", "antipode(a)*a + antipode(beta)*gamma", "1");
}

#[test]
fn star_examples() {
    for p in ["Mq2", "SLq2"] {
        same(p, "star(gamma)", "q*gamma");
        same(p, "star(star(gamma))", "gamma");
        same(p, "star(a*gamma)", "a*gamma");
        same(p, "star(a*d - d*a - (q - 1)*beta*gamma)", "0");
    }
    same("SLq2", "star(Dq - 1)", "0");
}

#[test]
fn catalog_examples() {
    let m = mq2();
    assert_eq!(m.generators().len(), 4);
    assert_eq!(m.defining_rules().count(), 6);
    match element("Dq", None).unwrap() {
        Element::Poly(p) => assert_eq!(p.to_string(), "a*d - q*beta*gamma"),
        other => panic!("{other}"),
    }
    match element("Rhat", None).unwrap() {
        Element::ScalarMatrix(r) => assert_eq!(r, r_hat()),
        other => panic!("{other}"),
    }
    assert!(element("nope", None).is_err());
}

#[test]
fn kronecker_examples() {
    let m = mq2();
    let i = PolyMatrix::identity(&m, 2);
    let conv = GradingConvention::PINNED;
    assert_eq!(graded_kron(&i, &i, conv).unwrap(), PolyMatrix::identity(&m, 4));
    let t = presets::t_matrix(&m).unwrap();
    let t2 = graded_kron(&i, &t, conv).unwrap();
    for r in 0..4 {
        for c in 0..4 {
            let expect = if r / 2 == c / 2 { t.get(r % 2, c % 2).clone() } else { Poly::zero(&m) };
            assert_eq!(t2.get(r, c), &expect);
        }
    }
    // T1 = T ox I picks up q factors off the diagonal blocks
    let t1 = graded_kron(&t, &i, conv).unwrap();
    assert_ne!(t1.get(3, 1), t.get(1, 0));
    assert_eq!(t1.get(3, 1).to_string(), t.get(1, 0).scale(&CycScalar::q()).to_string());

    // With t(1) = 0, t(2) = 1 and the factor q^(t(j)(t(i) + t(k))) the
    // diagonal entry 22,22 of I ox I is q^2, not 1.
    let lit = graded_kron(&i, &i, GradingConvention::LITERAL).unwrap();
    assert_eq!(lit.get(3, 3), &Poly::scalar(&m, CycScalar::q2()));
}

#[test]
fn graded_permutation_examples() {
    let p = graded_permutation([Z3::ZERO, Z3::new(1)], 1);
    // columns are e_i ox e_j in order 11, 12, 21, 22
    assert_eq!(p.get(3, 3), &CycScalar::q());
    assert_eq!(p.get(2, 1), &CycScalar::one());
    assert_eq!(p.get(1, 2), &CycScalar::one());
    assert_eq!(p.get(0, 0), &CycScalar::one());
    match element("Pgraded", None).unwrap() {
        Element::ScalarMatrix(m) => assert_eq!(m, p),
        other => panic!("{other}"),
    }
}

#[test]
fn hecke_examples() {
    let r = r_hat();
    let lam = CycScalar::lambda();
    assert_eq!(CycScalar::q() * CycScalar::q(), &lam * &CycScalar::q() + CycScalar::one());
    let lhs = r.mul(&r);
    let rhs = r.scale(&lam).add(&CycMatrix::identity(4));
    assert_eq!(lhs, rhs);
}

#[test]
fn uqgl2_examples() {
    same("Uqgl2", "delta(U)", "U ox U");
    same("Uqgl2", "delta(lambda*Xp)", "U ox lambda*Xp + lambda*Xp ox V");
    same("Uqgl2", "U*V - V*U", "0");
    same("Uqgl2", "U*U^-1", "1");
    same("Uqgl2", "Xp*Xm - Xm*Xp", "(U*V^-1 - V*U^-1)/(q^2 - q)");
}

#[test]
fn coaction_examples() {
    same("plane", "deltaL(theta)", "a ox theta + beta ox phi");
    same("plane", "deltaR(phi)", "theta ox beta + phi ox d");
    assert_eq!(ev("plane", "deltaL(1)").to_string(), "1 ox 1");
    same("plane", "deltaL(theta*phi - q^2*phi*theta)", "0");
}

#[test]
fn manin_example() {
    let t = z3hopf::comodule::manin_image().unwrap();
    let fp = presets::free_plane();
    let expect = TensorPoly::from_polys(&[
        presets::quantum_determinant(&mq2()).unwrap(),
        presets::vartheta(&fp).unwrap(),
    ]);
    assert_eq!(t.to_string(), expect.to_string());
}

#[test]
fn dual_plane_examples() {
    same("dual-plane", "xi*x - x*xi", "0");
    assert_eq!(grade("dual-plane", "xi"), GradeOf::Homogeneous(Z3::new(2)));
}
