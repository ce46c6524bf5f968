//! Gaussian elimination over `Q(q)` for sparse vectors keyed by anything ordered.

use std::collections::BTreeMap;

use crate::scalars::CycScalar;

pub type SparseVec<K> = BTreeMap<K, CycScalar>;

/// Incrementally maintained echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    /// (pivot key, row normalized so that the pivot entry is 1)
    rows: Vec<(K, SparseVec<K>)>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new() }
    }
}

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &CycScalar, w: &SparseVec<K>) {
    for (k, x) in w {
        let add = c * x;
        let e = v.entry(k.clone()).or_insert_with(CycScalar::zero);
        *e += &add;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating against the basis.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        let row: SparseVec<K> = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        for (_, other) in self.rows.iter_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                axpy(other, &-c, &row);
            }
        }
        self.rows.push((pivot, row));
        true
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Coefficients `x` with `sum x_i * columns[i] = target`, if any.
pub fn solve<K: Ord + Clone>(columns: &[SparseVec<K>], target: &SparseVec<K>) -> Option<Vec<CycScalar>> {
    // Track combinations by extending each column with a unique tag coordinate.
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    enum Key<K> {
        Coord(K),
        Tag(usize),
    }
    let mut e: Echelon<Key<K>> = Echelon::new();
    for (i, col) in columns.iter().enumerate() {
        let mut v: SparseVec<Key<K>> = col.iter().map(|(k, c)| (Key::Coord(k.clone()), c.clone())).collect();
        v.insert(Key::Tag(i), CycScalar::one());
        e.insert(&v);
    }
    let t: SparseVec<Key<K>> = target.iter().map(|(k, c)| (Key::Coord(k.clone()), c.clone())).collect();
    let r = e.reduce(&t);
    // Coord keys sort before tags, so any leftover coordinate means no solution.
    if r.keys().any(|k| matches!(k, Key::Coord(_))) {
        return None;
    }
    // t - sum(x_i * (col_i, e_i)) = (0, -x) => x_i = -r[Tag(i)]
    Some(
        (0..columns.len())
            .map(|i| r.get(&Key::Tag(i)).map(|c| -c).unwrap_or_else(CycScalar::zero))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, a, b)| (k, CycScalar::from_ints(a, b))).collect()
    }

    #[test]
    fn rank_detects_dependence_over_the_field() {
        let x = v(&[(0, 1, 0), (1, 0, 1)]);
        // q * x = q*e0 + q^2*e1
        let qx = v(&[(0, 0, 1), (1, -1, -1)]);
        let y = v(&[(2, 1, 0)]);
        assert_eq!(rank(&[x.clone(), qx.clone()]), 1);
        assert_eq!(rank(&[x, qx, y]), 2);
    }

    #[test]
    fn solve_finds_combination() {
        let a = v(&[(0, 1, 0), (1, 1, 0)]);
        let b = v(&[(1, 0, 1)]);
        let target = v(&[(0, 2, 0), (1, 2, 3)]);
        let x = solve(&[a, b], &target).unwrap();
        assert_eq!(x[0], CycScalar::from_int(2));
        assert_eq!(x[1], CycScalar::from_int(3));
        assert!(solve(&[v(&[(0, 1, 0)])], &v(&[(1, 1, 0)])).is_none());
    }
}
