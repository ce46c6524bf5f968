use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::scalars::CycScalar;

/// A generator occurrence, possibly inverted (only for invertible generators).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: u16,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen: gen as u16,
            inverse: false,
        }
    }

    pub fn inv(gen: usize) -> Self {
        Letter {
            gen: gen as u16,
            inverse: true,
        }
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// `+1` for a plain letter, `-1` for an inverse.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators. Polynomials keep only irreducible words, so for
/// PBW-type presentations a monomial is an ordered product `g_1^e_1 ... g_n^e_n`.
///
/// Ordered by length first, then lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub Vec<Letter>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().copied().collect())
    }

    /// Exponent vector over `n` generators, summing plain and inverse
    /// occurrences with signs. Meaningful for ordered monomials.
    pub fn exponents(&self, n: usize) -> Vec<i64> {
        let mut e = vec![0; n];
        for l in &self.0 {
            e[l.index()] += l.sign();
        }
        e
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Monomial {
    fn from(v: Vec<Letter>) -> Self {
        Monomial(v)
    }
}

/// Linear combination of words; zero coefficients are never stored.
pub type Terms = BTreeMap<Monomial, CycScalar>;

pub(crate) fn add_term(terms: &mut Terms, m: Monomial, c: CycScalar) {
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

pub(crate) fn add_terms_scaled(acc: &mut Terms, other: &Terms, scale: &CycScalar) {
    for (m, c) in other {
        add_term(acc, m.clone(), c * scale);
    }
}
