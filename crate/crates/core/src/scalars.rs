//! Exact arithmetic in the cyclotomic field `Q(q)`, `q` a primitive cube root of unity.
//!
//! Elements are stored as `a0 + a1*q` with rational coordinates, reduced with
//! `q^2 = -1 - q`. The representation is canonical, so structural equality is
//! field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycScalar {
    a0: BigRational,
    a1: BigRational,
}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl CycScalar {
    pub fn new(a0: BigRational, a1: BigRational) -> Self {
        CycScalar { a0, a1 }
    }

    pub fn from_ints(a0: i64, a1: i64) -> Self {
        CycScalar {
            a0: BigRational::from_integer(BigInt::from(a0)),
            a1: BigRational::from_integer(BigInt::from(a1)),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycScalar {
            a0: r,
            a1: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ints(n, 0)
    }

    /// `num/den` embedded as a rational.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn q() -> Self {
        Self::from_ints(0, 1)
    }

    /// `q^2 = -1 - q`.
    pub fn q2() -> Self {
        Self::from_ints(-1, -1)
    }

    /// `lambda = q - q^2 = 1 + 2q`.
    pub fn lambda() -> Self {
        Self::from_ints(1, 2)
    }

    /// `q^k` with `k` taken mod 3.
    pub fn q_power(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::q(),
            _ => Self::q2(),
        }
    }

    pub fn a0(&self) -> &BigRational {
        &self.a0
    }

    pub fn a1(&self) -> &BigRational {
        &self.a1
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a0.is_one() && self.a1.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.a1.is_zero()
    }

    /// Galois conjugation `q -> q^2`, i.e. complex conjugation.
    pub fn conj(&self) -> Self {
        CycScalar {
            a0: &self.a0 - &self.a1,
            a1: -&self.a1,
        }
    }

    /// Field norm `x * conj(x) = a0^2 - a0*a1 + a1^2`.
    pub fn norm(&self) -> BigRational {
        &self.a0 * &self.a0 - &self.a0 * &self.a1 + &self.a1 * &self.a1
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycScalar {
            a0: c.a0 / &n,
            a1: c.a1 / n,
        })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Sign convention used when printing a coefficient in front of a monomial:
    /// the `q` coordinate decides when present, otherwise the rational part.
    pub(crate) fn leading_is_negative(&self) -> bool {
        if !self.a1.is_zero() {
            self.a1.is_negative()
        } else {
            self.a0.is_negative()
        }
    }

    /// Rendering with the `q` term first (`q - 1`, `2*q + 1/2`), used for
    /// coefficients inside polynomials. Assumes a non-negative leading part.
    pub(crate) fn render_q_first(&self) -> String {
        if self.a1.is_zero() {
            return render_rational(&self.a0);
        }
        let qpart = render_q_term(&self.a1);
        if self.a0.is_zero() {
            qpart
        } else if self.a0.is_negative() {
            format!("{} - {}", qpart, render_rational(&-&self.a0))
        } else {
            format!("{} + {}", qpart, render_rational(&self.a0))
        }
    }

    pub(crate) fn is_compound(&self) -> bool {
        !self.a0.is_zero() && !self.a1.is_zero()
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_q_term(c: &BigRational) -> String {
    if c.is_one() {
        "q".to_string()
    } else if (-c).is_one() {
        "-q".to_string()
    } else {
        format!("{}*q", render_rational(c))
    }
}

/// Renders as `a0 + a1*q`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a1.is_zero() {
            return write!(f, "{}", render_rational(&self.a0));
        }
        if self.a0.is_zero() {
            return write!(f, "{}", render_q_term(&self.a1));
        }
        let a0 = render_rational(&self.a0);
        if self.a1.is_negative() {
            write!(f, "{} - {}", a0, render_q_term(&-&self.a1))
        } else {
            write!(f, "{} + {}", a0, render_q_term(&self.a1))
        }
    }
}

/// Accepts sums of terms `r`, `r*q`, `q`, `q^k`, `r*q^k` with `r` an integer
/// or `p/r` fraction, e.g. `1/2 - 3*q` or `-1 - q`.
impl FromStr for CycScalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::Parse {
                pos: 0,
                message: "empty scalar".into(),
            });
        }
        let bytes = compact.as_bytes();
        let mut acc = CycScalar::zero();
        let mut start = 0;
        let mut i = 0;
        let mut terms = Vec::new();
        while i <= bytes.len() {
            let boundary = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^');
            if boundary {
                terms.push((start, &compact[start..i]));
                start = i;
            }
            i += 1;
        }
        for (pos, term) in terms {
            acc += &parse_scalar_term(term).map_err(|message| AlgebraError::Parse { pos, message })?;
        }
        Ok(acc)
    }
}

fn parse_scalar_term(term: &str) -> std::result::Result<CycScalar, String> {
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in `{term}`"));
    }
    let mut value = CycScalar::one();
    for factor in body.split('*') {
        let f = if let Some(rest) = factor.strip_prefix('q') {
            if rest.is_empty() {
                CycScalar::q()
            } else if let Some(exp) = rest.strip_prefix('^') {
                let k: i64 = exp.parse().map_err(|_| format!("bad exponent `{exp}`"))?;
                CycScalar::q_power(k)
            } else {
                return Err(format!("unexpected `{factor}`"));
            }
        } else {
            let r = parse_rational(factor).ok_or_else(|| format!("bad number `{factor}`"))?;
            CycScalar::from_rational(r)
        };
        value = &value * &f;
    }
    if sign < 0 {
        value = -value;
    }
    Ok(value)
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            a0: &self.a0 + &rhs.a0,
            a1: &self.a1 + &rhs.a1,
        }
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        &self + &rhs
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            a0: &self.a0 - &rhs.a0,
            a1: &self.a1 - &rhs.a1,
        }
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        &self - &rhs
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        // (a0 + a1 q)(b0 + b1 q) with q^2 = -1 - q
        let cross = &self.a1 * &rhs.a1;
        CycScalar {
            a0: &self.a0 * &rhs.a0 - &cross,
            a1: &self.a0 * &rhs.a1 + &self.a1 * &rhs.a0 - cross,
        }
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            a0: -self.a0,
            a1: -self.a1,
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            a0: -&self.a0,
            a1: -&self.a1,
        }
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        self.a0 += &rhs.a0;
        self.a1 += &rhs.a1;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        self.a0 -= &rhs.a0;
        self.a1 -= &rhs.a1;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(a0: i64, a1: i64) -> CycScalar {
        CycScalar::from_ints(a0, a1)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(CycScalar::q() + CycScalar::q2(), s(-1, 0));
        assert_eq!(CycScalar::zero() + s(3, -2), s(3, -2));
        assert_eq!(s(1, 1) + s(1, 1), s(2, 2));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(CycScalar::q() * CycScalar::q2(), CycScalar::one());
        assert_eq!(CycScalar::q() * CycScalar::q(), s(-1, -1));
        let lam = CycScalar::q() - CycScalar::q2();
        assert_eq!(&lam * &lam, s(-3, 0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycScalar::q().inv().unwrap(), CycScalar::q2());
        let lam = CycScalar::q() - CycScalar::q2();
        let expected = &(CycScalar::q2() - CycScalar::q()) * &CycScalar::ratio(1, 3);
        assert_eq!(lam.inv().unwrap(), expected);
        assert_eq!(CycScalar::from_int(2).inv().unwrap(), CycScalar::ratio(1, 2));
        assert!(matches!(CycScalar::zero().inv(), Err(AlgebraError::DivisionByZero)));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CycScalar::q().conj(), CycScalar::q2());
        let x = s(-1, 1);
        assert_eq!(x.conj(), CycScalar::q2() - CycScalar::one());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn q_power_examples() {
        assert_eq!(CycScalar::q_power(3), CycScalar::one());
        assert_eq!(CycScalar::q_power(-1), CycScalar::q2());
        assert_eq!(CycScalar::q_power(4), CycScalar::q());
        assert_eq!(CycScalar::q().pow(-2).unwrap(), CycScalar::q());
    }

    #[test]
    fn rendering() {
        assert_eq!(s(-1, 1).to_string(), "-1 + q");
        assert_eq!(CycScalar::q2().to_string(), "-1 - q");
        assert_eq!(CycScalar::ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(s(0, -2).to_string(), "-2*q");
        assert_eq!(s(-1, 1).render_q_first(), "q - 1");
    }

    #[test]
    fn parsing() {
        assert_eq!("-1 + q".parse::<CycScalar>().unwrap(), s(-1, 1));
        assert_eq!("q^2".parse::<CycScalar>().unwrap(), CycScalar::q2());
        assert_eq!("1/2 - 3*q".parse::<CycScalar>().unwrap(), &CycScalar::ratio(1, 2) - &s(0, 3));
        assert_eq!("q^-1".parse::<CycScalar>().unwrap(), CycScalar::q2());
        assert!("1 + ".parse::<CycScalar>().is_err());
        assert!("z".parse::<CycScalar>().is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = CycScalar> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(n0, d0, n1, d1)| {
            CycScalar::new(
                BigRational::new(n0.into(), d0.into()),
                BigRational::new(n1.into(), d1.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(x in arb_scalar()) {
            prop_assume!(!x.is_zero());
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }

        #[test]
        fn conjugation_is_a_ring_homomorphism(x in arb_scalar(), y in arb_scalar()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }

        #[test]
        fn norm_matches_product_with_conjugate(x in arb_scalar()) {
            let n = &x * &x.conj();
            prop_assert_eq!(n, CycScalar::from_rational(x.norm()));
            prop_assert_eq!(x.norm().is_zero(), x.is_zero());
        }

        #[test]
        fn q_powers_add(k in -50i64..50, m in -50i64..50) {
            prop_assert_eq!(&CycScalar::q_power(k) * &CycScalar::q_power(m), CycScalar::q_power(k + m));
        }

        #[test]
        fn display_round_trips(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<CycScalar>().unwrap(), x);
        }
    }
}
