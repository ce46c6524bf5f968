use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Element of the grading group Z/3.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Z3(u8);

impl Z3 {
    pub const ZERO: Z3 = Z3(0);
    pub const ONE: Z3 = Z3(1);
    pub const TWO: Z3 = Z3(2);

    pub fn new(k: i64) -> Self {
        Z3(k.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }
}

impl Add for Z3 {
    type Output = Z3;
    fn add(self, rhs: Z3) -> Z3 {
        Z3((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for Z3 {
    fn add_assign(&mut self, rhs: Z3) {
        *self = *self + rhs;
    }
}

impl Sub for Z3 {
    type Output = Z3;
    fn sub(self, rhs: Z3) -> Z3 {
        Z3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Z3 {
    type Output = Z3;
    fn neg(self) -> Z3 {
        Z3((3 - self.0) % 3)
    }
}

impl Mul for Z3 {
    type Output = Z3;
    fn mul(self, rhs: Z3) -> Z3 {
        Z3((self.0 * rhs.0) % 3)
    }
}

impl fmt::Display for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Result of asking for the grade of a (tensor) polynomial.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GradeOf {
    Homogeneous(Z3),
    Inhomogeneous,
}

impl GradeOf {
    pub(crate) fn combine(terms: impl IntoIterator<Item = Z3>) -> GradeOf {
        let mut it = terms.into_iter();
        let Some(first) = it.next() else {
            return GradeOf::Homogeneous(Z3::ZERO);
        };
        if it.all(|g| g == first) {
            GradeOf::Homogeneous(first)
        } else {
            GradeOf::Inhomogeneous
        }
    }

    pub fn homogeneous(self) -> Option<Z3> {
        match self {
            GradeOf::Homogeneous(g) => Some(g),
            GradeOf::Inhomogeneous => None,
        }
    }
}

impl fmt::Display for GradeOf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeOf::Homogeneous(g) => write!(f, "{g}"),
            GradeOf::Inhomogeneous => write!(f, "inhomogeneous"),
        }
    }
}
