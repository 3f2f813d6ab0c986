//! Dense exact linear algebra over the two scalar fields used in the crate.

use num_traits::{One, Zero};

use crate::scalars::{CycScalar, Rational};

pub trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    /// Caller guarantees `self` is nonzero.
    fn inv_elem(&self) -> Self;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn inv_elem(&self) -> Self {
        self.recip()
    }
}

impl Field for CycScalar {
    fn zero_like(&self) -> Self {
        CycScalar::zero(self.spec())
    }
    fn one_like(&self) -> Self {
        CycScalar::one(self.spec())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn inv_elem(&self) -> Self {
        self.inverse().expect("nonzero cyclotomic scalar is invertible")
    }
}

/// An incrementally maintained reduced row echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    zero: F,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(zero: F) -> Self {
        Self { zero, rows: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero_elem() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero_elem() {
                        *x = x.sub_elem(&c.mul_elem(r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero_elem())
    }

    /// Adds `v`; returns true when the span grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero_elem()) else {
            return false;
        };
        let inv = r[p].inv_elem();
        let r: Vec<F> = r.iter().map(|x| x.mul_elem(&inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero_elem() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = x.sub_elem(&c.mul_elem(y));
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn zero(&self) -> &F {
        &self.zero
    }
}

pub fn rank<F: Field>(zero: &F, rows: &[Vec<F>]) -> usize {
    let mut e = Echelon::new(zero.clone());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace<F: Field>(zero: &F, rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut e = Echelon::new(zero.clone());
    for r in rows {
        e.insert(r);
    }
    let pivots: Vec<usize> = e.rows.iter().map(|(p, _)| *p).collect();
    let one = zero.one_like();
    let mut out = vec![];
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![zero.clone(); ncols];
        x[free] = one.clone();
        for (p, row) in &e.rows {
            x[*p] = zero.sub_elem(&row[free]);
        }
        out.push(x);
    }
    out
}

/// Solves `A x = b` for one solution, if any.
pub fn solve<F: Field>(zero: &F, rows: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    let aug: Vec<Vec<F>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut e = Echelon::new(zero.clone());
    for r in &aug {
        e.insert(r);
    }
    let mut x = vec![zero.clone(); ncols];
    for (p, row) in &e.rows {
        if *p == ncols {
            return None;
        }
        x[*p] = row[ncols].clone();
    }
    Some(x)
}

pub fn mat_mul<F: Field>(zero: &F, a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(zero.clone(), |acc, k| {
                        if row[k].is_zero_elem() || b[k][j].is_zero_elem() {
                            acc
                        } else {
                            acc.add_elem(&row[k].mul_elem(&b[k][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(zero: &F, a: &[Vec<F>], v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(zero.clone(), |acc, (x, y)| {
                if x.is_zero_elem() || y.is_zero_elem() {
                    acc
                } else {
                    acc.add_elem(&x.mul_elem(y))
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn nullspace_and_solve() {
        let z = int(0);
        let a = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let ns = nullspace(&z, &a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&z, &a, v).iter().all(|x| x.is_zero()));
        }
        let x = solve(&z, &a, &[int(1), int(2)], 3).unwrap();
        assert_eq!(mat_vec(&z, &a, &x), vec![int(1), int(2)]);
        assert!(solve(&z, &a, &[int(1), int(3)], 3).is_none());
    }
}
