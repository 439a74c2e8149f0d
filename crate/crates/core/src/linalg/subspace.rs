//! Canonical subspaces of a coordinatized ambient space.
//!
//! A `Subspace` stores its basis in reduced row-echelon form, so two
//! subspaces are equal as sets exactly when the stored data is identical.
//! That makes saturation detection in the span samplers a plain equality
//! check, and set operations (sum, intersection, inclusion) exact.

use num_traits::Zero;

use super::matrix::RatMatrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    /// Nonzero rows in reduced echelon form, pivots strictly increasing.
    basis: Vec<Vec<Scalar>>,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Self::zero(ambient_dim);
        for i in 0..ambient_dim {
            let mut v = vec![Scalar::zero(); ambient_dim];
            v[i] = num_traits::One::one();
            s.basis.push(v);
            s.pivot_cols.push(i);
        }
        s
    }

    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut s = Self::zero(ambient_dim);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "ambient mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivot_cols) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *wj -= &c * rj;
                }
            }
        }
        w
    }

    /// Insert a vector, keeping the basis canonical. Returns `true` when the
    /// dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in &mut w {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Back-eliminate the new pivot column from existing rows.
        for row in &mut self.basis {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (rj, wj) in row.iter_mut().zip(&w) {
                if !wj.is_zero() {
                    *rj -= &c * wj;
                }
            }
        }
        let at = self.pivot_cols.partition_point(|&q| q < p);
        self.pivot_cols.insert(at, p);
        self.basis.insert(at, w);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch(v.len(), self.ambient_dim));
        }
        Ok(self.reduce(v).iter().all(Zero::is_zero))
    }

    pub fn is_subset(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        Ok(s)
    }

    /// Intersection via the kernel of the stacked constraint matrix
    /// `[Uᵀ | -Wᵀ]`: a kernel vector `(a, b)` gives the common point `aᵀU`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = RatMatrix::from_fn(self.ambient_dim, p + q, |i, j| {
            if j < p {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - p][i].clone()
            }
        });
        let mut out = Subspace::zero(self.ambient_dim);
        for coeff in stacked.kernel().basis() {
            let mut v = vec![Scalar::zero(); self.ambient_dim];
            for (j, row) in self.basis.iter().enumerate() {
                if coeff[j].is_zero() {
                    continue;
                }
                for (vi, ri) in v.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *vi += &coeff[j] * ri;
                    }
                }
            }
            out.insert(&v);
        }
        Ok(out)
    }

    /// Annihilator under the standard pairing: `{f : f(v) = 0 for v here}`.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        RatMatrix::from_rows(self.basis.clone()).kernel()
    }

    /// The rows as a matrix; empty subspaces give a 0-row matrix.
    pub fn basis_matrix(&self) -> RatMatrix {
        if self.basis.is_empty() {
            RatMatrix::zeros(0, self.ambient_dim)
        } else {
            RatMatrix::from_rows(self.basis.clone())
        }
    }
}

/// Dot product of coordinate vectors.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = num_traits::One::one();
        v
    }

    #[test]
    fn sum_of_axes() {
        let a = Subspace::from_spanning(3, vec![e(3, 0)]);
        let b = Subspace::from_spanning(3, vec![e(3, 1)]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[int(2), int(-3), int(0)]).unwrap());
    }

    #[test]
    fn intersect_planes() {
        let a = Subspace::from_spanning(3, vec![e(3, 0), e(3, 1)]);
        let b = Subspace::from_spanning(3, vec![e(3, 1), e(3, 2)]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&e(3, 1)).unwrap());
    }

    #[test]
    fn diagonal_inside_plane() {
        let diag = Subspace::from_spanning(3, vec![vec![int(1), int(1), int(0)]]);
        let plane = Subspace::from_spanning(3, vec![e(3, 0), e(3, 1)]);
        assert!(diag.is_subset(&plane).unwrap());
        assert!(!plane.is_subset(&diag).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(2, 3))));
        assert!(a.contains(&[int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_spanning(2, vec![vec![int(2), int(2)], vec![int(1), int(0)]]);
        let b = Subspace::from_spanning(2, vec![e(2, 0), e(2, 1)]);
        assert_eq!(a, b);
    }
}
