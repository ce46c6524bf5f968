//! Small dense matrices over scalars and over a presented algebra, and the
//! graded Kronecker product.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::grade::Z3;
use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::error::{AlgebraError, Result};
use crate::scalars::CycScalar;

/// How index grades enter the Kronecker factor
/// `(A ox B)_{ij,kl} = q^(power * t(j) * (t(i) + sign * t(k))) A_ik B_jl`.
/// Entry `(i, j)` of a graded matrix has grade `t(i) - t(j)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GradingConvention {
    pub index_grades: [u8; 2],
    pub sign: i8,
    pub power: u8,
}

impl GradingConvention {
    /// `t(1) = 0`, `t(2) = 1`, factor `q^(t(j)(t(i) + t(k)))` read literally.
    pub const LITERAL: GradingConvention = GradingConvention {
        index_grades: [0, 1],
        sign: 1,
        power: 1,
    };

    /// The convention under which the RTT relation reproduces the six
    /// matrix relations: `t(1) = 1`, `t(2) = 2`, factor `q^(2 t(j)(t(i) - t(k)))`.
    /// Entry grades are unchanged (`a`, `d` grade 0, `beta` 2, `gamma` 1).
    pub const PINNED: GradingConvention = GradingConvention {
        index_grades: [1, 2],
        sign: -1,
        power: 2,
    };

    /// No grading at all.
    pub const UNGRADED: GradingConvention = GradingConvention {
        index_grades: [0, 0],
        sign: 1,
        power: 1,
    };

    /// Every combination of index grades, sign and power.
    pub fn all() -> Vec<GradingConvention> {
        let mut out = Vec::new();
        for g1 in 0..3 {
            for g2 in 0..3 {
                for sign in [1, -1] {
                    for power in [1, 2] {
                        out.push(GradingConvention {
                            index_grades: [g1, g2],
                            sign,
                            power,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn grade(&self, i: usize) -> Z3 {
        Z3::new(self.index_grades[i] as i64)
    }

    pub fn entry_grade(&self, i: usize, j: usize) -> Z3 {
        self.grade(i) - self.grade(j)
    }

    /// Exponent of `q` for given grades of the row/column indices.
    pub fn exponent(&self, ti: Z3, tj: Z3, tk: Z3) -> i64 {
        self.power as i64 * tj.as_i64() * (ti.as_i64() + self.sign as i64 * tk.as_i64())
    }

    pub fn factor(&self, ti: Z3, tj: Z3, tk: Z3) -> CycScalar {
        CycScalar::q_power(self.exponent(ti, tj, tk))
    }

    /// Grades of the composite basis `e_i ox e_j`, in order 11, 12, 21, 22.
    pub fn pair_grades(&self) -> Vec<Z3> {
        let mut v = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                v.push(self.grade(i) + self.grade(j));
            }
        }
        v
    }

    pub fn index_grade_vec(&self) -> Vec<Z3> {
        vec![self.grade(0), self.grade(1)]
    }
}

impl fmt::Display for GradingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "+" };
        write!(
            f,
            "index grades ({}, {}), factor q^({}*t(j)*(t(i) {} t(k)))",
            self.index_grades[0], self.index_grades[1], self.power, sign
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycMatrix {
    n: usize,
    data: Vec<CycScalar>,
}

impl CycMatrix {
    pub fn zeros(n: usize) -> Self {
        CycMatrix {
            n,
            data: vec![CycScalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, CycScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Unsupported("matrix rows must form a square".into()));
        }
        Ok(CycMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        CycMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CycMatrix) -> CycMatrix {
        CycMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> CycMatrix {
        CycMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    /// Ungraded Kronecker product.
    pub fn kron(&self, other: &CycMatrix) -> CycMatrix {
        graded_kron_scalar(self, &vec![Z3::ZERO; self.n], other, &vec![Z3::ZERO; other.n], GradingConvention::UNGRADED)
    }

    /// Positions `(i, j)` where the two matrices differ, with the difference.
    pub fn differences(&self, other: &CycMatrix) -> Vec<(usize, usize, CycScalar)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let d = self.get(i, j) - other.get(i, j);
                if !d.is_zero() {
                    out.push((i, j, d));
                }
            }
        }
        out
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|c| c.to_string()).collect();
        write_grid(f, self.n, &cells)
    }
}

fn write_grid(f: &mut fmt::Formatter<'_>, n: usize, cells: &[String]) -> fmt::Result {
    let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
    for i in 0..n {
        if i > 0 {
            writeln!(f)?;
        }
        let row: Vec<String> = (0..n).map(|j| format!("{:>width$}", cells[i * n + j])).collect();
        write!(f, "[ {} ]", row.join(" | "))?;
    }
    Ok(())
}

/// Graded Kronecker product of scalar matrices whose indices carry the
/// given grades.
pub fn graded_kron_scalar(a: &CycMatrix, ga: &[Z3], b: &CycMatrix, gb: &[Z3], conv: GradingConvention) -> CycMatrix {
    let (na, nb) = (a.n, b.n);
    let mut out = CycMatrix::zeros(na * nb);
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    let x = a.get(i, k);
                    let y = b.get(j, l);
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    let f = conv.factor(ga[i], gb[j], ga[k]);
                    out.set(i * nb + j, k * nb + l, &(x * y) * &f);
                }
            }
        }
    }
    out
}

/// Square matrix with entries in a presented algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    pres: Arc<Presentation>,
    n: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(pres: &Arc<Presentation>, n: usize) -> Self {
        PolyMatrix {
            pres: pres.clone(),
            n,
            data: vec![Poly::zero(pres); n * n],
        }
    }

    pub fn identity(pres: &Arc<Presentation>, n: usize) -> Self {
        Self::from_scalar(pres, &CycMatrix::identity(n))
    }

    pub fn from_scalar(pres: &Arc<Presentation>, m: &CycMatrix) -> Self {
        PolyMatrix {
            pres: pres.clone(),
            n: m.n,
            data: m.data.iter().map(|c| Poly::scalar(pres, c.clone())).collect(),
        }
    }

    pub fn from_rows(pres: &Arc<Presentation>, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Unsupported("matrix rows must form a square".into()));
        }
        Ok(PolyMatrix {
            pres: pres.clone(),
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// 2x2 matrix from four generator names (row-major).
    pub fn of_generators(pres: &Arc<Presentation>, names: [&str; 4]) -> Result<Self> {
        let data = names.iter().map(|n| Poly::generator(pres, n)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            pres: pres.clone(),
            n: 2,
            data,
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i * self.n + j] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n {
            return Err(AlgebraError::Unsupported("matrix dimension mismatch".into()));
        }
        let n = self.n;
        let mut out = Self::zeros(&self.pres, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Poly::zero(&self.pres);
                for k in 0..n {
                    let (x, y) = (self.get(i, k), other.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &x.mul(y)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `m * self` with a scalar matrix on the left.
    pub fn scalar_left(&self, m: &CycMatrix) -> PolyMatrix {
        let n = self.n;
        let mut out = Self::zeros(&self.pres, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Poly::zero(&self.pres);
                for k in 0..n {
                    let c = m.get(i, k);
                    if !c.is_zero() {
                        acc = &acc + &self.get(k, j).scale(c);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `self * m` with a scalar matrix on the right.
    pub fn scalar_right(&self, m: &CycMatrix) -> PolyMatrix {
        let n = self.n;
        let mut out = Self::zeros(&self.pres, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Poly::zero(&self.pres);
                for k in 0..n {
                    let c = m.get(k, j);
                    if !c.is_zero() {
                        acc = &acc + &self.get(i, k).scale(c);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            pres: self.pres.clone(),
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> PolyMatrix {
        PolyMatrix {
            pres: self.pres.clone(),
            n: self.n,
            data: self.data.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplies every entry by `p` on the left.
    pub fn left_times(&self, p: &Poly) -> Result<PolyMatrix> {
        Ok(PolyMatrix {
            pres: self.pres.clone(),
            n: self.n,
            data: self.data.iter().map(|a| p.mul(a)).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// Nonzero entries as `(row, col, entry)`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &Poly)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let p = self.get(i, j);
                if !p.is_zero() {
                    out.push((i, j, p));
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|c| c.to_string()).collect();
        write_grid(f, self.n, &cells)
    }
}

/// Graded Kronecker product of two 2x2 matrices over the same algebra.
pub fn graded_kron(a: &PolyMatrix, b: &PolyMatrix, conv: GradingConvention) -> Result<PolyMatrix> {
    if a.n != 2 || b.n != 2 {
        return Err(AlgebraError::Unsupported("graded Kronecker product is defined for 2x2 factors".into()));
    }
    let pres = a.pres.clone();
    let mut out = PolyMatrix::zeros(&pres, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let (x, y) = (a.get(i, k), b.get(j, l));
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    let f = conv.factor(conv.grade(i), conv.grade(j), conv.grade(k));
                    out.set(2 * i + j, 2 * k + l, x.mul(y)?.scale(&f));
                }
            }
        }
    }
    Ok(out)
}

/// Graded permutation `P(e_i ox e_j) = q^(e * t(i) t(j)) e_j ox e_i` on the
/// basis 11, 12, 21, 22. `e = 1` gives the operator itself, `e = 2` its inverse.
pub fn graded_permutation(grades: [Z3; 2], e: i64) -> CycMatrix {
    let mut p = CycMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            let col = 2 * i + j;
            let row = 2 * j + i;
            p.set(row, col, CycScalar::q_power(e * grades[i].as_i64() * grades[j].as_i64()));
        }
    }
    p
}

/// The ungraded flip.
pub fn permutation() -> CycMatrix {
    graded_permutation([Z3::ZERO, Z3::ZERO], 1)
}

/// The 4x4 braid matrix
/// ```text
/// q 0 0       0
/// 0 0 1       0
/// 0 1 q - q^2 0
/// 0 0 0       q
/// ```
pub fn r_hat() -> CycMatrix {
    let z = CycScalar::zero;
    let q = CycScalar::q;
    let one = CycScalar::one;
    CycMatrix::from_rows(vec![
        vec![q(), z(), z(), z()],
        vec![z(), z(), one(), z()],
        vec![z(), one(), CycScalar::lambda(), z()],
        vec![z(), z(), z(), q()],
    ])
    .expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_permutation_cube() {
        let p = graded_permutation([Z3::ZERO, Z3::new(1)], 1);
        assert_eq!(p.mul(&p).mul(&p), permutation());
        assert_ne!(p, permutation());
        let inv = graded_permutation([Z3::ZERO, Z3::new(1)], 2);
        assert_eq!(p.mul(&inv), CycMatrix::identity(4));
    }

    #[test]
    fn hecke() {
        let r = r_hat();
        assert_eq!(r.mul(&r), r.scale(&CycScalar::lambda()).add(&CycMatrix::identity(4)));
    }

    #[test]
    fn scalar_kron_identity() {
        let i = CycMatrix::identity(2);
        let g = GradingConvention::PINNED.index_grade_vec();
        assert_eq!(graded_kron_scalar(&i, &g, &i, &g, GradingConvention::PINNED), CycMatrix::identity(4));
        assert_eq!(i.kron(&i), CycMatrix::identity(4));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(CycMatrix::from_rows(vec![vec![CycScalar::one()], vec![]]).is_err());
    }
}
