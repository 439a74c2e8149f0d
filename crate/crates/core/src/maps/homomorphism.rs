//! Zero-product-preserving maps, weighted-homomorphism factorization, and
//! the left-multiplier criterion that characterizes zero product
//! determined algebras.

use num_traits::Zero;

use super::bimodule::{Bimodule, LinearMap};
use super::spaces::multiplier_space;
use crate::algebra::{Algebra, Side};
use crate::decision::{decide_zpd, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar, Subspace};
use crate::span::{sample_zero_product_pairs, SamplerConfig, SpanMethod};

/// Sample zero-product pairs of the source and check the images multiply to
/// zero. A true answer is sampling evidence, a false answer is exact.
pub fn zero_product_preserving_check(
    phi: &LinearMap,
    source: &Algebra,
    target: &Algebra,
    cfg: &SamplerConfig,
) -> bool {
    assert_eq!(phi.source_dim, source.dim());
    assert_eq!(phi.target_dim, target.dim());
    let pairs = sample_zero_product_pairs(source, cfg, 16 * source.dim().max(1));
    pairs.iter().all(|(x, y)| {
        target
            .mul_elements(&phi.apply(x), &phi.apply(y))
            .iter()
            .all(Zero::is_zero)
    })
}

#[derive(Clone, Debug)]
pub struct WeightedHom {
    /// Invertible centralizer: left multiplication by `φ(1)`.
    pub weight: LinearMap,
    /// The homomorphism `W⁻¹ ∘ φ`.
    pub hom: LinearMap,
}

/// Try to factor a surjective map as `W ∘ ψ` with `W` the multiplication by
/// `φ(1)` and `ψ` a homomorphism. Only that canonical candidate is tried;
/// failure returns `Ok(None)` with the reason in the diagnostic.
pub fn weighted_hom_factor(
    phi: &LinearMap,
    source: &Algebra,
    target: &Algebra,
) -> Result<std::result::Result<WeightedHom, String>> {
    let Some(unit) = source.unit() else {
        return Err(Error::Precondition(
            "weighted factorization needs a unital source".into(),
        ));
    };
    if phi.rank() != target.dim() {
        return Err(Error::Precondition(format!(
            "map is not surjective: rank {} < {}",
            phi.rank(),
            target.dim()
        )));
    }
    let phi_one = phi.apply(unit);
    let w = target.left_mult_matrix(&phi_one);
    let Some(w_inv) = w.inverse() else {
        return Ok(Err("phi(1) is not invertible in the target".into()));
    };
    // Centralizer: W(ab) = W(a)b = aW(b) on basis pairs.
    for i in 0..target.dim() {
        for j in 0..target.dim() {
            let a = target.basis_element(i);
            let b = target.basis_element(j);
            let wab = w.mul_vec(&target.mul_elements(&a, &b));
            let wa_b = target.mul_elements(&w.mul_vec(&a), &b);
            let a_wb = target.mul_elements(&a, &w.mul_vec(&b));
            if wab != wa_b || wab != a_wb {
                return Ok(Err(format!(
                    "multiplication by phi(1) is not a centralizer at basis pair ({i},{j})"
                )));
            }
        }
    }
    let psi = LinearMap::new(&w_inv * &phi.matrix);
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let a = source.basis_element(i);
            let b = source.basis_element(j);
            let lhs = psi.apply(&source.mul_elements(&a, &b));
            let rhs = target.mul_elements(&psi.apply(&a), &psi.apply(&b));
            if lhs != rhs {
                return Ok(Err(format!(
                    "weight-corrected map is not multiplicative at basis pair ({i},{j})"
                )));
            }
        }
    }
    Ok(Ok(WeightedHom {
        weight: LinearMap::new(w),
        hom: psi,
    }))
}

#[derive(Clone, Debug)]
pub struct MultiplierBReport {
    /// Maps `f : A → A*` with `f(a)·b = 0` on every spanning zero-product
    /// tensor.
    pub f_space: Subspace,
    /// Left multipliers `A → A*`.
    pub left_mult_space: Subspace,
    pub equal: bool,
    /// Whether the zero-product span behind `f_space` was structural.
    pub certified: bool,
    /// The zpd verdict the equality is expected to match.
    pub zpd_verdict: Verdict,
}

/// Compare `{f : ab = 0 ⇒ f(a)·b = 0}` with the left multipliers into the
/// dual bimodule. The condition is linear in `f` once quantified over a
/// spanning set of the zero-product span: for unital algebras the two
/// spaces agree exactly when the algebra is zero product determined.
pub fn check_theorem_multiplier_b(alg: &Algebra, cfg: &SamplerConfig) -> Result<MultiplierBReport> {
    if !alg.is_unital() {
        return Err(Error::Precondition(
            "the multiplier criterion is stated for unital algebras".into(),
        ));
    }
    let d = alg.dim();
    let dual = super::spaces::dual_bimodule(alg, &Bimodule::regular(alg));
    let cert = decide_zpd(alg, cfg);
    let z = &cert.span_report.span;

    // f(e_i)·e_j in dual coordinates is L_jᵀ F_col(i); one block of d rows
    // per spanning tensor w: Σ_{ij} w_ij L_jᵀ F_col(i) = 0.
    let lt: Vec<RatMatrix> = (0..d)
        .map(|j| alg.left_mult_matrix(&alg.basis_element(j)).transpose())
        .collect();
    let mut rows = Vec::new();
    for w in z.basis() {
        for p in 0..d {
            let mut row = vec![Scalar::zero(); d * d];
            for i in 0..d {
                for j in 0..d {
                    let c = &w[i * d + j];
                    if c.is_zero() {
                        continue;
                    }
                    for q in 0..d {
                        if !lt[j][(p, q)].is_zero() {
                            row[i * d + q] += c * &lt[j][(p, q)];
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    let f_space = if rows.is_empty() {
        Subspace::full(d * d)
    } else {
        RatMatrix::from_rows(rows).kernel()
    };
    let left_mult_space = multiplier_space(alg, &dual, Side::Left);
    debug_assert!(left_mult_space.is_subset(&f_space).unwrap());
    let equal = f_space == left_mult_space;
    Ok(MultiplierBReport {
        f_space,
        left_mult_space,
        equal,
        certified: cert.span_report.method == SpanMethod::Structural
            || cert.verdict == Verdict::Yes,
        zpd_verdict: cert.verdict,
    })
}
