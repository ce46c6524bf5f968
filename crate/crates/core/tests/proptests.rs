use std::sync::Arc;

use proptest::prelude::*;

use z3hopf::expr::{evaluate, parse, Context, Value};
use z3hopf::hopf::{coproduct, counit};
use z3hopf::presets::{mq2, plane, slq2, uqgl2};
use z3hopf::{Braiding, CycScalar, GradeOf, Letter, Poly, Presentation, TensorPoly};

fn arb_scalar() -> impl Strategy<Value = CycScalar> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| CycScalar::from_ints(a, b) * CycScalar::ratio(1, d))
}

type Terms = Vec<(CycScalar, Vec<(usize, bool)>)>;

fn arb_terms(alphabet: usize, inverses: bool) -> impl Strategy<Value = Terms> {
    let letter = (0..alphabet, any::<bool>()).prop_map(move |(g, i)| (g, i && inverses));
    prop::collection::vec((arb_scalar(), prop::collection::vec(letter, 0..4)), 0..4)
}

fn build(p: &Arc<Presentation>, terms: &Terms) -> Poly {
    let mut acc = Poly::zero(p);
    for (c, w) in terms {
        let letters: Vec<Letter> = w
            .iter()
            .map(|&(g, inv)| if inv && p.is_invertible(g) { Letter::inv(g) } else { Letter::new(g) })
            .collect();
        acc = &acc + &Poly::from_word(p, &letters).unwrap().scale(c);
    }
    acc
}

fn presets() -> Vec<Arc<Presentation>> {
    vec![mq2(), slq2(), plane(), uqgl2()]
}

fn arb_in_preset() -> impl Strategy<Value = (usize, Terms, Terms, Terms)> {
    (0usize..4).prop_flat_map(|k| {
        let n = presets()[k].generators().len();
        (Just(k), arb_terms(n, true), arb_terms(n, true), arb_terms(n, true))
    })
}

fn homogeneous_words(p: &Arc<Presentation>, w: &Terms) -> Option<Poly> {
    let x = build(p, w);
    x.is_homogeneous().then_some(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative((k, x, y, z) in arb_in_preset()) {
        let p = &presets()[k];
        let (x, y, z) = (build(p, &x), build(p, &y), build(p, &z));
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn product_distributes((k, x, y, z) in arb_in_preset()) {
        let p = &presets()[k];
        let (x, y, z) = (build(p, &x), build(p, &y), build(p, &z));
        prop_assert_eq!(x.mul(&(&y + &z)).unwrap(), &x.mul(&y).unwrap() + &x.mul(&z).unwrap());
    }

    #[test]
    fn normal_forms_are_fixed((k, x, _, _) in arb_in_preset()) {
        let p = &presets()[k];
        let x = build(p, &x);
        for m in x.terms().keys() {
            prop_assert!(p.is_normal(&m.0));
        }
        let again = p.reduce_terms(x.terms().clone()).unwrap();
        prop_assert_eq!(&again, x.terms());
    }

    #[test]
    fn grades_add((k, x, y, _) in arb_in_preset()) {
        let p = &presets()[k];
        if let (Some(x), Some(y)) = (homogeneous_words(p, &x), homogeneous_words(p, &y)) {
            let xy = x.mul(&y).unwrap();
            if let (GradeOf::Homogeneous(gx), GradeOf::Homogeneous(gy)) = (x.grade(), y.grade()) {
                if !xy.is_zero() {
                    prop_assert_eq!(xy.grade(), GradeOf::Homogeneous(gx + gy));
                }
            }
        }
    }

    #[test]
    fn rendering_round_trips((k, x, _, _) in arb_in_preset()) {
        let p = &presets()[k];
        let x = build(p, &x);
        let back = evaluate(&parse(&x.to_string()).unwrap(), &Context::new(p.clone())).unwrap();
        let back = match back {
            Value::Poly(b) => b,
            Value::Scalar(c) => Poly::scalar(p, c),
            other => panic!("{other}"),
        };
        prop_assert_eq!(back, x);
    }

    #[test]
    fn tensor_product_is_associative(
        x in arb_terms(4, false), y in arb_terms(4, false), z in arb_terms(4, false),
        u in arb_terms(2, false), v in arb_terms(2, false), w in arb_terms(2, false),
    ) {
        let m = mq2();
        let pl = plane();
        let t = |a: &Terms, b: &Terms| {
            TensorPoly::from_polys(&[build(&m, a), build(&pl, b)])
        };
        let (a, b, c) = (t(&x, &u), t(&y, &v), t(&z, &w));
        for br in [Braiding::Graded, Braiding::Plain, Braiding::Inverse] {
            let left = a.mul(&b, br).unwrap().mul(&c, br).unwrap();
            let right = a.mul(&b.mul(&c, br).unwrap(), br).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn slot_embeddings_commute_up_to_grade_factor(x in arb_terms(2, false), y in arb_terms(2, false)) {
        let pl = plane();
        let slots = [pl.clone(), pl.clone()];
        if let (Some(x), Some(y)) = (homogeneous_words(&pl, &x), homogeneous_words(&pl, &y)) {
            let (gx, gy) = (x.grade().homogeneous().unwrap(), y.grade().homogeneous().unwrap());
            let one_x = TensorPoly::slot_embed(&x, 1, &slots).unwrap();
            let y_one = TensorPoly::slot_embed(&y, 0, &slots).unwrap();
            let lhs = one_x.mul(&y_one, Braiding::Graded).unwrap();
            let rhs = TensorPoly::from_polys(&[y.clone(), x.clone()])
                .scale(&CycScalar::q_power(gx.as_i64() * gy.as_i64()));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coproduct_is_multiplicative(x in arb_terms(4, false), y in arb_terms(4, false)) {
        let m = mq2();
        let delta = coproduct(&m).unwrap();
        let (x, y) = (build(&m, &x), build(&m, &y));
        let lhs = delta.apply(&x.mul(&y).unwrap()).unwrap();
        let rhs = delta.apply(&x).unwrap().mul(&delta.apply(&y).unwrap(), Braiding::Graded).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative(x in arb_terms(4, false), y in arb_terms(4, false)) {
        let m = mq2();
        let eps = counit(&m).unwrap();
        let (x, y) = (build(&m, &x), build(&m, &y));
        let lhs = eps.apply_scalar(&x.mul(&y).unwrap()).unwrap();
        let rhs = eps.apply_scalar(&x).unwrap() * eps.apply_scalar(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
