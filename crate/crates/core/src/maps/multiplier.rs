//! The multiplier algebra: pairs `(L, R)` with `L(ab) = L(a)b`,
//! `R(ab) = aR(b)` and `aL(b) = R(a)b`, under `(L,R)(L',R') = (LL', R'R)`.

use num_traits::Zero;

use super::bimodule::LinearMap;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar};

#[derive(Clone, Debug)]
pub struct MultiplierPair {
    pub l: LinearMap,
    pub r: LinearMap,
}

#[derive(Clone, Debug)]
pub struct MultiplierAlgebra {
    /// The multiplier algebra itself, realized on block matrices
    /// `diag(L, Rᵀ)` so that composition is plain matrix multiplication.
    pub algebra: Algebra,
    pub pairs: Vec<MultiplierPair>,
    /// The canonical map `a ↦ (L_a, R_a)` in multiplier-basis coordinates.
    pub embedding: LinearMap,
    /// True exactly when the embedding hits everything.
    pub onto: bool,
}

/// Solve the joint linear system for multiplier pairs and assemble the
/// algebra. Requires a faithful algebra, otherwise the canonical map is not
/// injective and the embedding statement is meaningless.
pub fn multiplier_algebra(alg: &Algebra) -> Result<MultiplierAlgebra> {
    if !alg.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let d = alg.dim();
    // Unknowns: L then R, column-major each: L[(p,k)] at k*d+p, R at d² + k*d+p.
    let unknowns = 2 * d * d;
    let mut rows = Vec::new();
    let lm: Vec<RatMatrix> = (0..d).map(|i| alg.left_mult_matrix(&alg.basis_element(i))).collect();
    let rm: Vec<RatMatrix> = (0..d).map(|i| alg.right_mult_matrix(&alg.basis_element(i))).collect();
    for i in 0..d {
        for j in 0..d {
            for p in 0..d {
                // L(b_i b_j) = L(b_i)·b_j  ⇒ Σ_k c_ijk L_{pk} = (Rm_j L)_{pi}
                let mut row = vec![Scalar::zero(); unknowns];
                for (k, c) in alg.product_parts(i, j) {
                    row[k * d + p] += c;
                }
                for q in 0..d {
                    row[i * d + q] -= &rm[j][(p, q)];
                }
                rows.push(row);

                // R(b_i b_j) = b_i·R(b_j)  ⇒ Σ_k c_ijk R_{pk} = (Lm_i R)_{pj}
                let mut row = vec![Scalar::zero(); unknowns];
                for (k, c) in alg.product_parts(i, j) {
                    row[d * d + k * d + p] += c;
                }
                for q in 0..d {
                    row[d * d + j * d + q] -= &lm[i][(p, q)];
                }
                rows.push(row);

                // b_i·L(b_j) = R(b_i)·b_j  ⇒ (Lm_i L)_{pj} = (Rm_j R)_{pi}
                let mut row = vec![Scalar::zero(); unknowns];
                for q in 0..d {
                    row[j * d + q] += &lm[i][(p, q)];
                    row[d * d + i * d + q] -= &rm[j][(p, q)];
                }
                rows.push(row);
            }
        }
    }
    let sol = RatMatrix::from_rows(rows).kernel();
    let pairs: Vec<MultiplierPair> = sol
        .basis()
        .iter()
        .map(|flat| MultiplierPair {
            l: LinearMap::from_flat(d, d, &flat[..d * d]),
            r: LinearMap::from_flat(d, d, &flat[d * d..]),
        })
        .collect();

    // Block realization diag(L, Rᵀ): (L,R)(L',R') = (LL', R'R) matches
    // diag(L,Rᵀ)·diag(L',R'ᵀ) = diag(LL', (R'R)ᵀ).
    let blocks: Vec<RatMatrix> = pairs
        .iter()
        .map(|p| {
            let rt = p.r.matrix.transpose();
            RatMatrix::from_fn(2 * d, 2 * d, |a, b| {
                if a < d && b < d {
                    p.l.matrix[(a, b)].clone()
                } else if a >= d && b >= d {
                    rt[(a - d, b - d)].clone()
                } else {
                    Scalar::zero()
                }
            })
        })
        .collect();
    let algebra = Algebra::new(format!("M({})", alg.name()), blocks)?;

    // Embedding a ↦ (L_a, R_a), expressed in the multiplier basis.
    let mdim = algebra.dim();
    let mut cols = Vec::with_capacity(d);
    for i in 0..d {
        let mut flat = Vec::with_capacity(2 * d * d);
        flat.extend(LinearMap::new(lm[i].clone()).flatten());
        flat.extend(LinearMap::new(rm[i].clone()).flatten());
        let coords = solve_in_basis(&sol_basis_matrix(&sol), &flat).ok_or_else(|| {
            Error::InvalidMap("canonical multiplier pair escaped the solution space".into())
        })?;
        cols.push(coords);
    }
    let embedding = LinearMap::new(RatMatrix::from_fn(mdim, d, |p, k| cols[k][p].clone()));
    let onto = embedding.rank() == mdim;
    Ok(MultiplierAlgebra {
        algebra,
        pairs,
        embedding,
        onto,
    })
}

fn sol_basis_matrix(sol: &crate::linalg::Subspace) -> RatMatrix {
    RatMatrix::from_fn(sol.ambient_dim(), sol.dim(), |i, j| sol.basis()[j][i].clone())
}

fn solve_in_basis(basis_cols: &RatMatrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    basis_cols.solve(v)
}
