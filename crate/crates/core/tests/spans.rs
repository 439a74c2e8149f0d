//! Span-engine behavior against independent oracles: small-grid
//! enumeration of actual zero-product pairs, hand-counted structural
//! dimensions, and the kernel inclusions that every sampled span must obey.

use num_traits::Zero;
use zpdlab_core::constructions::{
    jordan_block_algebra, matrix_algebra, upper_triangular_algebra,
};
use zpdlab_core::decision::{lie_kernel, mult_kernel, mult_kernel_op};
use zpdlab_core::linalg::{int, Scalar, Subspace};
use zpdlab_core::span::{
    commuting_span, square_zero_span, structural_zero_span_commutative_primary, tensor_of,
    two_sided_zero_span, zero_product_span, SamplerConfig,
};
use zpdlab_core::Algebra;

fn cfg() -> SamplerConfig {
    SamplerConfig::default()
}

/// Brute-force oracle: enumerate coordinate vectors over a small grid,
/// collect tensors of pairs whose product is exactly zero. Independent of
/// the slab sampler — products are evaluated directly.
fn grid_zero_span(alg: &Algebra, range: i64) -> Subspace {
    let d = alg.dim();
    let mut span = Subspace::zero(d * d);
    let mut x = vec![0i64; d];
    loop {
        let xs: Vec<Scalar> = x.iter().map(|&c| int(c)).collect();
        if xs.iter().any(|c| !c.is_zero()) {
            let mut y = vec![0i64; d];
            loop {
                let ys: Vec<Scalar> = y.iter().map(|&c| int(c)).collect();
                if ys.iter().any(|c| !c.is_zero())
                    && alg.mul_elements(&xs, &ys).iter().all(Zero::is_zero)
                {
                    span.insert(&tensor_of(&xs, &ys));
                }
                if !advance(&mut y, range) {
                    break;
                }
            }
        }
        if !advance(&mut x, range) {
            break;
        }
    }
    span
}

fn advance(v: &mut [i64], range: i64) -> bool {
    for c in v.iter_mut() {
        *c += 1;
        if *c <= range {
            return true;
        }
        *c = -range;
    }
    false
}

#[test]
fn jordan2_zero_span_matches_grid_enumeration() {
    let alg = jordan_block_algebra(2).unwrap();
    let oracle = grid_zero_span(&alg, 3);
    assert_eq!(oracle.dim(), 1);
    // The only zero products are multiples of t ⊗ t.
    assert!(oracle
        .contains(&[int(0), int(0), int(0), int(1)])
        .unwrap());
    let rep = zero_product_span(&alg, &cfg());
    assert_eq!(rep.span, oracle);
}

#[test]
fn t2_zero_span_matches_grid_enumeration() {
    let alg = upper_triangular_algebra(2).unwrap();
    let oracle = grid_zero_span(&alg, 2);
    let rep = zero_product_span(&alg, &cfg());
    assert!(oracle.is_subset(&rep.span).unwrap());
    assert_eq!(rep.span, mult_kernel(&alg));
    assert_eq!(oracle, rep.span);
}

#[test]
fn structural_block_span_dimension_formula() {
    // Count pairs i + j ≥ k in {0..k-1}² by enumeration and compare.
    for k in 1..=6 {
        let mut count = 0;
        for i in 0..k {
            for j in 0..k {
                if i + j >= k {
                    count += 1;
                }
            }
        }
        assert_eq!(count, k * (k - 1) / 2);
        let z = structural_zero_span_commutative_primary(k).unwrap();
        assert_eq!(z.dim(), count);
    }
}

#[test]
fn sampled_spans_stay_inside_their_kernels() {
    for alg in [
        matrix_algebra(2).unwrap(),
        upper_triangular_algebra(3).unwrap(),
        jordan_block_algebra(3).unwrap(),
        matrix_algebra(2)
            .unwrap()
            .direct_sum(&jordan_block_algebra(2).unwrap()),
    ] {
        let c = cfg();
        assert!(zero_product_span(&alg, &c)
            .span
            .is_subset(&mult_kernel(&alg))
            .unwrap());
        assert!(commuting_span(&alg, &c)
            .span
            .is_subset(&lie_kernel(&alg))
            .unwrap());
        let two = two_sided_zero_span(&alg, &c).span;
        let k2 = mult_kernel(&alg)
            .intersect(&mult_kernel_op(&alg))
            .unwrap();
        assert!(two.is_subset(&k2).unwrap());
    }
}

#[test]
fn m2_zero_span_reaches_the_kernel() {
    let alg = matrix_algebra(2).unwrap();
    let ker = mult_kernel(&alg);
    assert_eq!(ker.dim(), 12);
    let rep = zero_product_span(&alg, &cfg());
    assert_eq!(rep.span, ker);
}

#[test]
fn square_zero_span_of_triangulars_is_strict_uppers() {
    for n in 2..=5 {
        let alg = upper_triangular_algebra(n).unwrap();
        let rep = square_zero_span(&alg, &cfg());
        // Strict uppers: coordinates of E_ij with i < j.
        let mut expect = Subspace::zero(alg.dim());
        for (idx, b) in alg.basis().iter().enumerate() {
            let on_diagonal = (0..n).any(|i| !b[(i, i)].is_zero());
            if !on_diagonal {
                expect.insert(&alg.basis_element(idx));
            }
            let _ = idx;
        }
        assert_eq!(expect.dim(), n * (n - 1) / 2);
        assert_eq!(rep.span, expect, "T_{n}");
    }
}

#[test]
fn square_zero_span_of_m2_is_trace_zero() {
    // Oracle: nilpotent 2x2 matrices are v·wᵀ with wᵀv = 0; enumerate small
    // integer v, w and span them in basis coordinates.
    let alg = matrix_algebra(2).unwrap();
    let mut oracle = Subspace::zero(4);
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for c in -2i64..=2 {
                for d in -2i64..=2 {
                    // x = (a, b)ᵀ (c, d): square-zero iff trace ca + db = 0
                    if a * c + b * d != 0 {
                        continue;
                    }
                    let coords = vec![int(a * c), int(a * d), int(b * c), int(b * d)];
                    if coords.iter().any(|v| !v.is_zero()) {
                        oracle.insert(&coords);
                    }
                }
            }
        }
    }
    assert_eq!(oracle.dim(), 3);
    let rep = square_zero_span(&alg, &cfg());
    assert_eq!(rep.span, oracle);
    // Trace functional annihilates the span.
    for v in rep.span.basis() {
        let m = alg.element_matrix(v);
        assert!(m.trace().is_zero());
    }
}

#[test]
fn commuting_span_of_m2_and_t2_reach_their_kernels() {
    for alg in [matrix_algebra(2).unwrap(), upper_triangular_algebra(2).unwrap()] {
        let rep = commuting_span(&alg, &cfg());
        assert_eq!(rep.span, lie_kernel(&alg), "{}", alg.name());
    }
}

#[test]
fn two_sided_span_of_t2_reaches_the_two_sided_kernel() {
    let alg = upper_triangular_algebra(2).unwrap();
    let rep = two_sided_zero_span(&alg, &cfg());
    let k2 = mult_kernel(&alg)
        .intersect(&mult_kernel_op(&alg))
        .unwrap();
    assert_eq!(rep.span, k2);
}

#[test]
fn saturated_spans_agree_across_seeds() {
    for alg in [
        matrix_algebra(2).unwrap(),
        upper_triangular_algebra(3).unwrap(),
    ] {
        let a = zero_product_span(&alg, &SamplerConfig::with_seed(0));
        let b = zero_product_span(&alg, &SamplerConfig::with_seed(99));
        assert_eq!(a.span, b.span, "{}", alg.name());
    }
}

#[test]
fn sampling_on_primary_blocks_never_exceeds_structural() {
    for k in 2..=5 {
        let alg = jordan_block_algebra(k).unwrap();
        let rep = zero_product_span(&alg, &cfg());
        let z = structural_zero_span_commutative_primary(k).unwrap();
        assert!(rep.span.is_subset(&z).unwrap());
    }
}
