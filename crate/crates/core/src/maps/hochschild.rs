//! The Hochschild coboundary operator
//! `δⁿT(a₁,…,a_{n+1}) = a₁·T(a₂,…,a_{n+1})
//!   + Σ_{j=1}^{n} (-1)^j T(a₁,…,a_{j-1}, a_j a_{j+1}, …, a_{n+1})
//!   + (-1)^{n+1} T(a₁,…,a_n)·a_{n+1}`
//! evaluated exactly on basis tuples, and the cocycle spaces it cuts out.

use num_traits::Zero;

use super::bimodule::Bimodule;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar, Subspace};

/// An `n`-linear map `A^(n) → M` as a coordinate tensor. Multi-indices are
/// row-major over the algebra basis; `data[flat(multi) * m + p]` is target
/// coordinate `p` of the value on the basis tuple `multi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearMap {
    pub arity: usize,
    pub alg_dim: usize,
    pub module_dim: usize,
    pub data: Vec<Scalar>,
}

impl MultilinearMap {
    pub fn zero(arity: usize, alg_dim: usize, module_dim: usize) -> Self {
        let size = alg_dim.pow(arity as u32) * module_dim;
        MultilinearMap {
            arity,
            alg_dim,
            module_dim,
            data: vec![Scalar::zero(); size],
        }
    }

    pub fn from_data(
        arity: usize,
        alg_dim: usize,
        module_dim: usize,
        data: Vec<Scalar>,
    ) -> Result<Self> {
        let expect = alg_dim.pow(arity as u32) * module_dim;
        if data.len() != expect {
            return Err(Error::AmbientMismatch(data.len(), expect));
        }
        Ok(MultilinearMap {
            arity,
            alg_dim,
            module_dim,
            data,
        })
    }

    /// A 1-cochain from a linear map.
    pub fn from_linear_map(map: &super::bimodule::LinearMap) -> Self {
        MultilinearMap {
            arity: 1,
            alg_dim: map.source_dim,
            module_dim: map.target_dim,
            data: map.flatten(),
        }
    }

    fn flat(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.arity);
        multi.iter().fold(0, |acc, &i| acc * self.alg_dim + i)
    }

    /// Value on a basis tuple.
    pub fn value(&self, multi: &[usize]) -> &[Scalar] {
        let base = self.flat(multi) * self.module_dim;
        &self.data[base..base + self.module_dim]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// `δⁿT` for a given `n`-cochain, exactly.
pub fn hochschild_coboundary(
    alg: &Algebra,
    module: &Bimodule,
    t: &MultilinearMap,
) -> MultilinearMap {
    assert!(t.arity >= 1, "coboundary needs at least a 1-cochain");
    assert_eq!(t.alg_dim, alg.dim());
    assert_eq!(t.module_dim, module.dim);
    let n = t.arity;
    let d = alg.dim();
    let m = module.dim;
    let mut out = MultilinearMap::zero(n + 1, d, m);
    if m == 0 || d == 0 {
        return out;
    }
    let mut multi = vec![0usize; n + 1];
    loop {
        let base = out.flat(&multi) * m;
        // a₁ · T(a₂,…,a_{n+1})
        let head = module
            .left_action(multi[0])
            .mul_vec(t.value(&multi[1..]));
        for (p, v) in head.iter().enumerate() {
            out.data[base + p] += v;
        }
        // Σ (-1)^j T(…, a_j a_{j+1}, …)
        let mut inner = vec![0usize; n];
        for j in 1..=n {
            inner[..j - 1].copy_from_slice(&multi[..j - 1]);
            inner[j..].copy_from_slice(&multi[j + 1..]);
            let sign_neg = j % 2 == 1;
            for (k, c) in alg.product_parts(multi[j - 1], multi[j]) {
                inner[j - 1] = *k;
                let val = t.value(&inner);
                for (p, v) in val.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let term = c * v;
                    if sign_neg {
                        out.data[base + p] -= term;
                    } else {
                        out.data[base + p] += term;
                    }
                }
            }
        }
        // (-1)^{n+1} T(a₁,…,a_n) · a_{n+1}
        let tail = module
            .right_action(multi[n])
            .mul_vec(t.value(&multi[..n]));
        let tail_neg = (n + 1) % 2 == 1;
        for (p, v) in tail.iter().enumerate() {
            if tail_neg {
                out.data[base + p] -= v;
            } else {
                out.data[base + p] += v;
            }
        }
        // next multi-index
        let mut pos = n;
        loop {
            multi[pos] += 1;
            if multi[pos] < d {
                break;
            }
            multi[pos] = 0;
            if pos == 0 {
                return out;
            }
            pos -= 1;
        }
    }
}

/// Kernel of the linearized `δⁿ` for `n ∈ {1, 2}`, as a subspace of the
/// cochain coordinate space. The size guard keeps the dense system within
/// reason.
pub fn cocycle_space(
    alg: &Algebra,
    module: &Bimodule,
    n: usize,
    size_bound: usize,
) -> Result<Subspace> {
    if n == 0 || n > 2 {
        return Err(Error::Argument(format!(
            "cocycle spaces are computed for n = 1, 2 only (got {n})"
        )));
    }
    let d = alg.dim();
    let m = module.dim;
    let cols = d.pow(n as u32) * m;
    let rows = d.pow(n as u32 + 1) * m;
    if cols.saturating_mul(rows) > size_bound {
        return Err(Error::ResourceLimit(format!(
            "linearized coboundary would be {rows} x {cols}"
        )));
    }
    if cols == 0 {
        return Ok(Subspace::zero(0));
    }
    let mut op = RatMatrix::zeros(rows, cols);
    for col in 0..cols {
        let mut unit = MultilinearMap::zero(n, d, m);
        unit.data[col] = num_traits::One::one();
        let image = hochschild_coboundary(alg, module, &unit);
        for (r, v) in image.data.iter().enumerate() {
            if !v.is_zero() {
                op[(r, col)] = v.clone();
            }
        }
    }
    Ok(op.kernel())
}
