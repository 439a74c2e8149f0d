use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar};

/// A linear map between coordinate spaces; `matrix` is target × source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: RatMatrix,
}

impl LinearMap {
    pub fn new(matrix: RatMatrix) -> Self {
        LinearMap {
            source_dim: matrix.cols(),
            target_dim: matrix.rows(),
            matrix,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(RatMatrix::identity(dim))
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        Self::new(RatMatrix::zeros(target_dim, source_dim))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap::new(&self.matrix * &inner.matrix)
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(&self.matrix + &other.matrix)
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Column-major flattening matching the map-space convention.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.source_dim * self.target_dim);
        for k in 0..self.source_dim {
            for p in 0..self.target_dim {
                out.push(self.matrix[(p, k)].clone());
            }
        }
        out
    }

    pub fn from_flat(source_dim: usize, target_dim: usize, flat: &[Scalar]) -> Self {
        assert_eq!(flat.len(), source_dim * target_dim);
        Self::new(RatMatrix::from_fn(target_dim, source_dim, |p, k| {
            flat[k * target_dim + p].clone()
        }))
    }
}

/// A bimodule over an algebra, given by its action tensors: `left[i]` is
/// the matrix of `m ↦ b_i · m` and `right[i]` of `m ↦ m · b_i`. The module
/// axioms are checked exactly on basis triples at construction.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    left: Vec<RatMatrix>,
    right: Vec<RatMatrix>,
    pub unital_left: bool,
    pub unital_right: bool,
    pub separating: bool,
}

impl Bimodule {
    pub fn new(alg: &Algebra, left: Vec<RatMatrix>, right: Vec<RatMatrix>) -> Result<Bimodule> {
        let d = alg.dim();
        if left.len() != d || right.len() != d {
            return Err(Error::AmbientMismatch(left.len(), d));
        }
        let m = left.first().map_or(0, RatMatrix::rows);
        for a in left.iter().chain(&right) {
            if !a.is_square() || a.rows() != m {
                return Err(Error::AmbientMismatch(a.rows(), m));
            }
        }
        // (b_i b_j)·v = b_i·(b_j·v)
        for i in 0..d {
            for j in 0..d {
                let mut lhs = RatMatrix::zeros(m, m);
                for (k, c) in alg.product_parts(i, j) {
                    lhs = &lhs + &left[*k].scale(c);
                }
                if lhs != &left[i] * &left[j] {
                    return Err(Error::InvalidMap(format!(
                        "left action is not associative at basis pair ({i},{j})"
                    )));
                }
                // v·(b_i b_j) = (v·b_i)·b_j, i.e. R_{ij} = R_j ∘ R_i
                let mut rhs = RatMatrix::zeros(m, m);
                for (k, c) in alg.product_parts(i, j) {
                    rhs = &rhs + &right[*k].scale(c);
                }
                if rhs != &right[j] * &right[i] {
                    return Err(Error::InvalidMap(format!(
                        "right action is not associative at basis pair ({i},{j})"
                    )));
                }
                // (b_i·v)·b_j = b_i·(v·b_j)
                if &right[j] * &left[i] != &left[i] * &right[j] {
                    return Err(Error::InvalidMap(format!(
                        "left and right actions do not commute at ({i},{j})"
                    )));
                }
            }
        }
        let unital_left = match alg.unit() {
            None => false,
            Some(e) => {
                let mut act = RatMatrix::zeros(m, m);
                for (i, c) in e.iter().enumerate() {
                    if !c.is_zero() {
                        act = &act + &left[i].scale(c);
                    }
                }
                act == RatMatrix::identity(m)
            }
        };
        let unital_right = match alg.unit() {
            None => false,
            Some(e) => {
                let mut act = RatMatrix::zeros(m, m);
                for (i, c) in e.iter().enumerate() {
                    if !c.is_zero() {
                        act = &act + &right[i].scale(c);
                    }
                }
                act == RatMatrix::identity(m)
            }
        };
        let separating = {
            // A·v = 0 ⇒ v = 0 and v·A = 0 ⇒ v = 0, via stacked kernels.
            let stack = |mats: &[RatMatrix]| {
                if m == 0 {
                    return true;
                }
                let mut rows = Vec::with_capacity(d * m);
                for a in mats {
                    for r in 0..m {
                        rows.push(a.row(r).to_vec());
                    }
                }
                RatMatrix::from_rows(rows).kernel().is_zero()
            };
            d > 0 && stack(&left) && stack(&right)
        };
        Ok(Bimodule {
            dim: m,
            left,
            right,
            unital_left,
            unital_right,
            separating,
        })
    }

    /// The algebra acting on itself by left and right multiplication.
    pub fn regular(alg: &Algebra) -> Bimodule {
        let left = (0..alg.dim())
            .map(|i| alg.left_mult_matrix(&alg.basis_element(i)))
            .collect();
        let right = (0..alg.dim())
            .map(|i| alg.right_mult_matrix(&alg.basis_element(i)))
            .collect();
        Bimodule::new(alg, left, right).expect("regular actions satisfy the axioms")
    }

    /// The full ambient matrix space as a bimodule, with actions by matrix
    /// multiplication. Coordinates are row-major entries.
    pub fn ambient_matrices(alg: &Algebra) -> Bimodule {
        let n = alg.ambient_n();
        let id = RatMatrix::identity(n);
        let left = alg.basis().iter().map(|b| b.kron(&id)).collect();
        let right = alg
            .basis()
            .iter()
            .map(|b| id.kron(&b.transpose()))
            .collect();
        Bimodule::new(alg, left, right).expect("matrix actions satisfy the axioms")
    }

    /// The zero module.
    pub fn zero_module(alg: &Algebra) -> Bimodule {
        let d = alg.dim();
        Bimodule::new(alg, vec![RatMatrix::zeros(0, 0); d], vec![RatMatrix::zeros(0, 0); d])
            .expect("zero module is valid")
    }

    pub fn left_action(&self, i: usize) -> &RatMatrix {
        &self.left[i]
    }

    pub fn right_action(&self, i: usize) -> &RatMatrix {
        &self.right[i]
    }

    /// `x · v` for an algebra element in coordinates.
    pub fn act_left(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let av = self.left[i].mul_vec(v);
            for (o, a) in out.iter_mut().zip(&av) {
                *o += c * a;
            }
        }
        out
    }

    /// `v · x`.
    pub fn act_right(&self, v: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let va = self.right[i].mul_vec(v);
            for (o, a) in out.iter_mut().zip(&va) {
                *o += c * a;
            }
        }
        out
    }
}
