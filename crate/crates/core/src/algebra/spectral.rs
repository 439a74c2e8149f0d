//! Minimal polynomials, the squarefree diagonalizability test, and primary
//! decomposition of singly generated algebras over a rational spectrum.

use num_traits::{One, Zero};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar, Subspace};
use crate::poly::Polynomial;

/// Monic polynomial of least degree annihilating `t`, found by the first
/// linear dependence among `I, T, T², …`.
pub fn minimal_polynomial(t: &RatMatrix) -> Polynomial {
    assert!(t.is_square(), "minimal polynomial needs a square matrix");
    let n2 = t.rows() * t.rows();
    let mut span = Subspace::zero(n2);
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = RatMatrix::identity(t.rows());
    loop {
        let flat = cur.flatten();
        if !span.insert(&flat) {
            let mat = RatMatrix::from_fn(n2, powers.len(), |i, j| powers[j][i].clone());
            let coeffs = mat.solve(&flat).expect("dependence detected");
            let mut poly = vec![Scalar::zero(); powers.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                poly[i] = -c.clone();
            }
            poly[powers.len()] = Scalar::one();
            return Polynomial::from_coeffs(poly);
        }
        powers.push(flat);
        cur = &cur * t;
    }
}

/// Squarefree test: `gcd(m, m') = 1` means diagonalizable over the splitting
/// field. The answer is unconditional for a rational spectrum; for a
/// non-split spectrum it refers to the splitting field.
pub fn is_diagonalizable(t: &RatMatrix) -> bool {
    minimal_polynomial(t).is_squarefree()
}

/// Whether the minimal polynomial factors into rational linear factors.
pub fn spectrum_splits(t: &RatMatrix) -> bool {
    minimal_polynomial(t).splits_over_q()
}

#[derive(Clone, Debug)]
pub struct PrimaryBlock {
    pub eigenvalue: Scalar,
    /// Nilpotency order of the block: the block algebra is the quotient of a
    /// polynomial ring by `(t - λ)^multiplicity`.
    pub multiplicity: usize,
    pub algebra: Algebra,
    /// Coordinates of the spectral idempotent inside the generated algebra.
    pub idempotent: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    /// The unital algebra generated by `t` (and the identity).
    pub generated: Algebra,
    pub blocks: Vec<PrimaryBlock>,
}

/// Split the algebra generated by `t` into its spectral blocks. The
/// idempotents come from Bezout coefficients of the coprime primary factors
/// of the minimal polynomial; non-rational spectra are refused with the
/// offending factor named rather than silently changing fields.
pub fn primary_decomposition(t: &RatMatrix) -> Result<PrimaryDecomposition> {
    let m = minimal_polynomial(t);
    let (roots, rest) = m.rational_roots();
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::UnsupportedField {
            factor: rest.to_string(),
        });
    }
    let generated = Algebra::from_generators(format!("gen({})", t.rows()), &[t.clone()], true)?;
    let n = t.rows();
    let mut blocks = Vec::with_capacity(roots.len());
    for (lambda, mult) in &roots {
        let f = Polynomial::x_minus(lambda).pow(*mult);
        let (g, _) = m.div_rem(&f)?;
        // a·f + b·g = 1, so e = b(T)·g(T) is the idempotent for this block.
        let (one, _a, b) = f.xgcd(&g);
        debug_assert!(one.degree() == Some(0) && one.leading().unwrap().is_one());
        let e = &b.eval_matrix(t) * &g.eval_matrix(t);
        let nilpotent = &e * &(t - &RatMatrix::identity(n).scale(lambda));
        let mut block_basis = vec![e.clone()];
        let mut power = e.clone();
        for _ in 1..*mult {
            power = &power * &nilpotent;
            block_basis.push(power.clone());
        }
        let algebra = Algebra::new(
            format!("block(λ={})", crate::linalg::scalar_to_string(lambda)),
            block_basis,
        )?;
        let idempotent = generated.coords_of(&e)?;
        blocks.push(PrimaryBlock {
            eigenvalue: lambda.clone(),
            multiplicity: *mult,
            algebra,
            idempotent,
        });
    }
    Ok(PrimaryDecomposition { generated, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn jordan(n: usize) -> RatMatrix {
        RatMatrix::from_fn(n, n, |i, j| {
            if j == i + 1 {
                int(1).clone()
            } else {
                num_traits::Zero::zero()
            }
        })
    }

    #[test]
    fn minpoly_of_nilpotent_jordan_block() {
        for n in 2..=5 {
            let m = minimal_polynomial(&jordan(n));
            let mut expect = vec![Scalar::from_integer(0.into()); n + 1];
            expect[n] = Scalar::one();
            assert_eq!(m, Polynomial::from_coeffs(expect));
        }
    }

    #[test]
    fn minpoly_of_identity() {
        let m = minimal_polynomial(&RatMatrix::identity(3));
        assert_eq!(m, Polynomial::from_coeffs(vec![int(-1), int(1)]));
    }

    #[test]
    fn minpoly_of_distinct_diagonal() {
        let t = RatMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        let m = minimal_polynomial(&t);
        // (t-1)(t-2): evaluate both claimed roots.
        assert!(m.eval(&int(1)).is_zero());
        assert!(m.eval(&int(2)).is_zero());
        assert_eq!(m.degree(), Some(2));
    }

    #[test]
    fn diagonalizability_cases() {
        assert!(!is_diagonalizable(&jordan(2)));
        assert!(is_diagonalizable(&RatMatrix::identity(4)));
        // Swap matrix: eigenvectors (1,1) and (1,-1).
        let swap = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(is_diagonalizable(&swap));
        let ones = vec![int(1), int(1)];
        assert_eq!(swap.mul_vec(&ones), ones);
        let alt = vec![int(1), int(-1)];
        assert_eq!(swap.mul_vec(&alt), vec![int(-1), int(1)]);
    }

    #[test]
    fn primary_decomposition_of_diagonal() {
        let t = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let d = primary_decomposition(&t).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.algebra.dim() == 1));
    }

    #[test]
    fn primary_decomposition_of_two_jordan_blocks() {
        // J_2(5) ⊕ J_3(7)
        let mut t = RatMatrix::zeros(5, 5);
        for i in 0..2 {
            t[(i, i)] = int(5);
        }
        t[(0, 1)] = int(1);
        for i in 2..5 {
            t[(i, i)] = int(7);
        }
        t[(2, 3)] = int(1);
        t[(3, 4)] = int(1);
        let d = primary_decomposition(&t).unwrap();
        assert_eq!(d.blocks.len(), 2);
        let dims: Vec<usize> = d.blocks.iter().map(|b| b.algebra.dim()).collect();
        assert_eq!(dims, vec![2, 3]);

        // Orthogonal idempotents summing to the unit of the generated algebra.
        let a = &d.generated;
        let e1 = &d.blocks[0].idempotent;
        let e2 = &d.blocks[1].idempotent;
        assert_eq!(a.mul_elements(e1, e1), *e1);
        assert_eq!(a.mul_elements(e2, e2), *e2);
        assert!(a.mul_elements(e1, e2).iter().all(num_traits::Zero::is_zero));
        let sum: Vec<Scalar> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
        assert_eq!(Some(&sum[..]), a.unit());
        let block_total: usize = d.blocks.iter().map(|b| b.algebra.dim()).sum();
        assert_eq!(block_total, a.dim());
    }

    #[test]
    fn single_jordan_block_is_one_point_spectrum() {
        let d = primary_decomposition(&jordan(4)).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].multiplicity, 4);
        assert_eq!(d.blocks[0].algebra.dim(), 4);
    }

    #[test]
    fn non_split_spectrum_is_refused() {
        let rot = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        match primary_decomposition(&rot) {
            Err(Error::UnsupportedField { factor }) => {
                assert!(factor.contains("t^2"), "factor was {factor}");
            }
            other => panic!("expected UnsupportedField, got {other:?}"),
        }
    }

    #[test]
    fn minpoly_divides_charpoly() {
        // Characteristic polynomial degree equals the matrix size; check the
        // division is exact for a non-trivial example.
        let t = RatMatrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        let m = minimal_polynomial(&t);
        assert_eq!(m.degree(), Some(2));
        // char poly of this matrix is (t-2)^3
        let charpoly = Polynomial::x_minus(&int(2)).pow(3);
        let (_, r) = charpoly.div_rem(&m).unwrap();
        assert!(r.is_zero());
    }
}
