//! Cross-checks against a deliberately naive reimplementation: scalars kept
//! as unreduced coefficient triples over `1, w, w^2`, leftmost-first rewriting
//! with no ordering tricks, and hand-entered relation tables.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z3hopf::frt::matrix::r_hat;
use z3hopf::hopf::coproduct;
use z3hopf::presets::{mq2, plane, slq2};
use z3hopf::{CycScalar, Letter, Poly, Presentation, TensorPoly};

// ---------- Q(w) with w^3 = 1, w != 1 ----------

#[derive(Clone, Copy, Debug)]
struct W([Rational64; 3]);

impl W {
    fn int(n: i64) -> W {
        W([Rational64::from_integer(n), 0.into(), 0.into()])
    }
    fn root(k: usize) -> W {
        let mut c = [Rational64::from_integer(0); 3];
        c[k % 3] = 1.into();
        W(c)
    }
    fn add(self, o: W) -> W {
        W([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
    fn neg(self) -> W {
        W([-self.0[0], -self.0[1], -self.0[2]])
    }
    fn mul(self, o: W) -> W {
        let mut c = [Rational64::from_integer(0); 3];
        for i in 0..3 {
            for j in 0..3 {
                c[(i + j) % 3] += self.0[i] * o.0[j];
            }
        }
        W(c)
    }
    // 1 + w + w^2 = 0, so subtracting c2 from every coefficient is harmless.
    fn canon(self) -> (Rational64, Rational64) {
        (self.0[0] - self.0[2], self.0[1] - self.0[2])
    }
    fn is_zero(self) -> bool {
        self.canon() == (0.into(), 0.into())
    }
}

impl PartialEq for W {
    fn eq(&self, o: &W) -> bool {
        self.canon() == o.canon()
    }
}

fn from_engine(c: &CycScalar) -> W {
    let r = |x: String| -> Rational64 { x.parse().expect("small rational") };
    W([r(c.a0().to_string()), r(c.a1().to_string()), 0.into()])
}

// ---------- naive rewriting ----------

type Word = Vec<u8>;
type Lin = BTreeMap<Word, W>;

struct Oracle {
    rules: Vec<(Word, Vec<(W, Word)>)>,
}

fn push(out: &mut Lin, w: Word, c: W) {
    let e = out.entry(w).or_insert(W::int(0));
    *e = e.add(c);
}

impl Oracle {
    fn redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (k, (lhs, _)) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(lhs) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    fn reduce(&self, input: Lin) -> Lin {
        let mut todo: Vec<(Word, W)> = input.into_iter().collect();
        let mut done = Lin::new();
        while let Some((w, c)) = todo.pop() {
            if c.is_zero() {
                continue;
            }
            match self.redex(&w) {
                None => push(&mut done, w, c),
                Some((pos, k)) => {
                    let (lhs, rhs) = &self.rules[k];
                    for (rc, rw) in rhs {
                        let mut nw = w[..pos].to_vec();
                        nw.extend(rw);
                        nw.extend(&w[pos + lhs.len()..]);
                        todo.push((nw, c.mul(*rc)));
                    }
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        done
    }

    fn word(&self, w: &[u8]) -> Lin {
        self.reduce(BTreeMap::from([(w.to_vec(), W::int(1))]))
    }

    fn census(&self, alphabet: u8, max: usize) -> Vec<usize> {
        let mut level: Vec<Word> = vec![vec![]];
        let mut out = vec![1];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &level {
                for g in 0..alphabet {
                    let mut v = w.clone();
                    v.push(g);
                    if self.redex(&v).is_none() {
                        next.push(v);
                    }
                }
            }
            out.push(next.len());
            level = next;
        }
        out
    }
}

fn q() -> W {
    W::root(1)
}
fn q2() -> W {
    W::root(2)
}
fn one() -> W {
    W::int(1)
}

// Generators a=0, beta=1, gamma=2, d=3.
fn mq2_oracle() -> Oracle {
    Oracle {
        rules: vec![
            (vec![1, 0], vec![(one(), vec![0, 1])]),
            (vec![2, 1], vec![(one(), vec![1, 2])]),
            (vec![3, 1], vec![(one(), vec![1, 3])]),
            (vec![2, 0], vec![(q2(), vec![0, 2])]),
            (vec![3, 2], vec![(q2(), vec![2, 3])]),
            (vec![3, 0], vec![(one(), vec![0, 3]), (q().add(one().neg()).neg(), vec![1, 2])]),
        ],
    }
}

// Generators beta=0, gamma=1, a=2, d=3.
fn slq2_oracle() -> Oracle {
    Oracle {
        rules: vec![
            (vec![1, 0], vec![(one(), vec![0, 1])]),
            (vec![2, 0], vec![(one(), vec![0, 2])]),
            (vec![2, 1], vec![(q(), vec![1, 2])]),
            (vec![3, 0], vec![(one(), vec![0, 3])]),
            (vec![3, 1], vec![(q2(), vec![1, 3])]),
            (vec![2, 3], vec![(one(), vec![]), (q(), vec![0, 1])]),
            (vec![3, 2], vec![(one(), vec![]), (one(), vec![0, 1])]),
        ],
    }
}

// theta=0, phi=1.
fn plane_oracle() -> Oracle {
    Oracle {
        rules: vec![
            (vec![1, 0], vec![(q(), vec![0, 1])]),
            (vec![0, 0, 0], vec![]),
            (vec![1, 1, 1], vec![]),
        ],
    }
}

fn engine_lin(p: &Poly) -> Lin {
    p.terms()
        .iter()
        .map(|(m, c)| (m.0.iter().map(|l| l.index() as u8).collect(), from_engine(c)))
        .collect()
}

fn engine_word(p: &Arc<Presentation>, w: &[u8]) -> Poly {
    let letters: Vec<Letter> = w.iter().map(|&g| Letter::new(g as usize)).collect();
    Poly::from_word(p, &letters).expect("reduces")
}

fn same(a: &Lin, b: &Lin) -> bool {
    let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
    keys.into_iter()
        .all(|k| a.get(k).copied().unwrap_or(W::int(0)) == b.get(k).copied().unwrap_or(W::int(0)))
}

fn random_words(alphabet: u8, max_len: usize, n: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| rng.gen_range(0..alphabet)).collect()
        })
        .collect()
}

#[test]
fn scalar_conversion_agrees() {
    let lam = from_engine(&CycScalar::lambda());
    assert_eq!(lam, q().add(q2().neg()));
    assert_eq!(from_engine(&CycScalar::q2()), q2());
    assert_eq!(lam.mul(lam), W::int(-3));
}

#[test]
fn reduction_matches_oracle_mq2() {
    let m = mq2();
    let o = mq2_oracle();
    for w in random_words(4, 6, 300, 11) {
        assert!(same(&engine_lin(&engine_word(&m, &w)), &o.word(&w)), "word {w:?}");
    }
}

#[test]
fn reduction_matches_oracle_slq2() {
    let m = slq2();
    let o = slq2_oracle();
    for w in random_words(4, 6, 300, 12) {
        assert!(same(&engine_lin(&engine_word(&m, &w)), &o.word(&w)), "word {w:?}");
    }
}

#[test]
fn reduction_matches_oracle_plane() {
    let m = plane();
    let o = plane_oracle();
    for w in random_words(2, 7, 300, 13) {
        assert!(same(&engine_lin(&engine_word(&m, &w)), &o.word(&w)), "word {w:?}");
    }
}

#[test]
fn census_matches_brute_force() {
    assert_eq!(mq2().dimension_census(4), mq2_oracle().census(4, 4));
    assert_eq!(mq2_oracle().census(4, 3), vec![1, 4, 10, 20]);
    assert_eq!(slq2().dimension_census(4), slq2_oracle().census(4, 4));
    assert_eq!(plane().dimension_census(5), plane_oracle().census(2, 5));
    assert_eq!(plane_oracle().census(2, 5), vec![1, 2, 3, 2, 1, 0]);
}

fn mq2_det(o: &Oracle) -> Lin {
    let mut l = o.word(&[0, 3]);
    for (w, c) in o.word(&[1, 2]) {
        push(&mut l, w, c.mul(q()).neg());
    }
    o.reduce(l)
}

fn mul(o: &Oracle, x: &Lin, y: &Lin) -> Lin {
    let mut out = Lin::new();
    for (a, ca) in x {
        for (b, cb) in y {
            let mut w = a.clone();
            w.extend(b);
            push(&mut out, w, ca.mul(*cb));
        }
    }
    o.reduce(out)
}

#[test]
fn determinant_central_in_oracle() {
    let o = mq2_oracle();
    let det = mq2_det(&o);
    for g in 0..4u8 {
        let x = BTreeMap::from([(vec![g], one())]);
        let mut diff = mul(&o, &det, &x);
        for (w, c) in mul(&o, &x, &det) {
            push(&mut diff, w, c.neg());
        }
        assert!(o.reduce(diff).is_empty(), "generator {g}");
    }
    let engine = z3hopf::presets::quantum_determinant(&mq2()).unwrap();
    assert!(same(&engine_lin(&engine), &det));
}

// ---------- coproduct ----------

type Lin2 = BTreeMap<(Word, Word), W>;

fn grade_mq2(w: &[u8]) -> usize {
    w.iter().map(|&g| [0, 2, 1, 0][g as usize]).sum::<usize>() % 3
}

fn delta_gen(g: u8) -> Lin2 {
    // T ox. T with T = (a beta; gamma d)
    let t = [[0u8, 1], [2, 3]];
    let (i, k) = ([0, 0, 1, 1][g as usize], [0, 1, 0, 1][g as usize]);
    (0..2)
        .map(|j| ((vec![t[i][j]], vec![t[j][k]]), one()))
        .collect()
}

fn delta_word(o: &Oracle, w: &[u8]) -> Lin2 {
    let mut acc: Lin2 = BTreeMap::from([((vec![], vec![]), one())]);
    for &g in w {
        let mut next = Lin2::new();
        for ((x1, x2), c) in &acc {
            for ((y1, y2), d) in delta_gen(g) {
                let f = W::root(grade_mq2(x2) * grade_mq2(&y1));
                let (mut l, mut r) = (x1.clone(), x2.clone());
                l.extend(&y1);
                r.extend(&y2);
                let e = next.entry((l, r)).or_insert(W::int(0));
                *e = e.add(c.mul(d).mul(f));
            }
        }
        acc = next;
    }
    let mut out = Lin2::new();
    for ((l, r), c) in acc {
        for (lw, lc) in o.word(&l) {
            for (rw, rc) in o.word(&r) {
                let e = out.entry((lw.clone(), rw)).or_insert(W::int(0));
                *e = e.add(c.mul(lc).mul(rc));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn engine_lin2(t: &TensorPoly) -> Lin2 {
    t.terms()
        .iter()
        .map(|(m, c)| {
            let w = |i: usize| m[i].0.iter().map(|l| l.index() as u8).collect::<Word>();
            ((w(0), w(1)), from_engine(c))
        })
        .collect()
}

#[test]
fn coproduct_matches_oracle_on_words() {
    let m = mq2();
    let delta = coproduct(&m).unwrap();
    let o = mq2_oracle();
    for w in random_words(4, 4, 120, 14) {
        let engine = engine_lin2(&delta.apply_word(&w.iter().map(|&g| Letter::new(g as usize)).collect::<Vec<_>>()).unwrap());
        let oracle = delta_word(&o, &w);
        let keys: std::collections::BTreeSet<_> = engine.keys().chain(oracle.keys()).collect();
        for k in keys {
            let a = engine.get(k).copied().unwrap_or(W::int(0));
            let b = oracle.get(k).copied().unwrap_or(W::int(0));
            assert!(a == b, "word {w:?} at {k:?}");
        }
    }
}

#[test]
fn coproduct_preserves_da_relation_in_oracle() {
    let o = mq2_oracle();
    // d*a - a*d + (q - 1)*beta*gamma maps to zero
    let mut total = Lin2::new();
    let mut add = |w: &[u8], c: W| {
        for (k, v) in delta_word(&o, w) {
            let e = total.entry(k).or_insert(W::int(0));
            *e = e.add(v.mul(c));
        }
    };
    add(&[3, 0], one());
    add(&[0, 3], one().neg());
    add(&[1, 2], q().add(one().neg()));
    assert!(total.values().all(|c| c.is_zero()));
}

// ---------- R-hat ----------

type M = Vec<Vec<W>>;

fn mat_mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(W::int(0), |s, k| s.add(a[i][k].mul(b[k][j]))))
                .collect()
        })
        .collect()
}

fn ident(n: usize) -> M {
    (0..n)
        .map(|i| (0..n).map(|j| W::int((i == j) as i64)).collect())
        .collect()
}

fn kron(a: &M, b: &M) -> M {
    let (n, m) = (a.len(), b.len());
    (0..n * m)
        .map(|r| (0..n * m).map(|c| a[r / m][c / m].mul(b[r % m][c % m])).collect())
        .collect()
}

fn rhat_oracle() -> M {
    let z = W::int(0);
    let lam = q().add(q2().neg());
    vec![
        vec![q(), z, z, z],
        vec![z, z, one(), z],
        vec![z, one(), lam, z],
        vec![z, z, z, q()],
    ]
}

fn mat_eq(a: &M, b: &M) -> bool {
    a.iter().zip(b).all(|(x, y)| x.iter().zip(y).all(|(u, v)| u == v))
}

#[test]
fn rhat_matches_oracle() {
    let e = r_hat();
    let o = rhat_oracle();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(from_engine(e.get(i, j)), o[i][j], "entry {i},{j}");
        }
    }
}

#[test]
fn rhat_hecke_and_braid_in_oracle() {
    let r = rhat_oracle();
    let lam = q().add(q2().neg());
    let lhs = mat_mul(&r, &r);
    let rhs: M = r
        .iter()
        .zip(ident(4))
        .map(|(row, irow)| row.iter().zip(irow).map(|(x, i)| x.mul(lam).add(i)).collect())
        .collect();
    assert!(mat_eq(&lhs, &rhs));

    let r1 = kron(&r, &ident(2));
    let r2 = kron(&ident(2), &r);
    let left = mat_mul(&mat_mul(&r1, &r2), &r1);
    let right = mat_mul(&mat_mul(&r2, &r1), &r2);
    assert!(mat_eq(&left, &right));
}
