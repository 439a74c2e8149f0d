//! Factory behavior: dimensions, embeddings, verified preconditions, and
//! the determinedness verdicts the constructions are built to exhibit.

use num_traits::{One, Zero};
use zpdlab_core::constructions::*;
use zpdlab_core::decision::{decide_zlpd, decide_zpd, BilinearForm, LinearFunctional, Verdict};
use zpdlab_core::error::Error;
use zpdlab_core::linalg::{frac, int, RatMatrix, Scalar};
use zpdlab_core::maps::LinearMap;
use zpdlab_core::poly::Polynomial;
use zpdlab_core::span::SamplerConfig;

fn cfg() -> SamplerConfig {
    SamplerConfig::default()
}

#[test]
fn jordan_block_family() {
    let j2 = jordan_block_algebra(2).unwrap();
    assert_eq!(j2.dim(), 2);
    assert!(j2.is_commutative());

    let j4 = jordan_block_algebra(4).unwrap();
    assert_eq!(j4.dim(), 4);
    let d4 = nilpotent_generator(4).unwrap();
    assert!(d4.pow(4).is_zero());
    assert!(!d4.pow(3).is_zero());

    assert!(jordan_block_algebra(1).is_err());
    let d3 = nilpotent_generator(3).unwrap();
    assert!(d3.pow(3).is_zero());
    assert!(!d3.pow(2).is_zero());
}

#[test]
fn triangular_and_digraph_dimensions() {
    assert_eq!(upper_triangular_algebra(3).unwrap().dim(), 6);
    // Equality relation: the diagonal algebra.
    let diag = digraph_algebra(3, &[(0, 0), (1, 1), (2, 2)]).unwrap();
    assert_eq!(diag.dim(), 3);
    assert!(diag.is_commutative());

    let v = digraph_algebra(3, &[(0, 0), (1, 1), (2, 2), (0, 2), (1, 2)]).unwrap();
    assert_eq!(v.dim(), 5);
    assert_eq!(decide_zpd(&v, &cfg()).verdict, Verdict::Yes);
}

#[test]
fn digraph_rejects_bad_relations() {
    // Missing reflexive pair.
    assert!(matches!(
        digraph_algebra(2, &[(0, 0), (0, 1)]),
        Err(Error::NotAnAlgebra(_))
    ));
    // Not transitive: (0,1),(1,2) without (0,2).
    assert!(matches!(
        digraph_algebra(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
        Err(Error::NotAnAlgebra(_))
    ));
}

#[test]
fn uhf_tower_dimensions_and_embeddings() {
    let tower = uhf_tower(&[1, 2, 4]).unwrap();
    let dims: Vec<usize> = tower.iter().map(|l| l.algebra.dim()).collect();
    assert_eq!(dims, vec![1, 3, 10]);

    // E_11 in T_2 maps to E_11 + E_33 in T_4 under I_2 ⊗ x.
    let t2 = &tower[1].algebra;
    let t4 = &tower[2].algebra;
    let sigma = tower[2].embedding_from_prev.as_ref().unwrap();
    let e11 = t2.coords_of(&RatMatrix::unit(2, 0, 0)).unwrap();
    let image = sigma.apply(&e11);
    let expect = t4
        .coords_of(&(&RatMatrix::unit(4, 0, 0) + &RatMatrix::unit(4, 2, 2)))
        .unwrap();
    assert_eq!(image, expect);
}

#[test]
fn tower_embeddings_compose_functorially() {
    let tower = uhf_tower(&[1, 2, 4]).unwrap();
    let s21 = tower[1].embedding_from_prev.as_ref().unwrap();
    let s42 = tower[2].embedding_from_prev.as_ref().unwrap();
    let composed = s42.compose(s21);
    // Direct embedding T_1 -> T_4 with d = 4.
    let t1 = &tower[0].algebra;
    let t4 = &tower[2].algebra;
    for i in 0..t1.dim() {
        let x = t1.basis_element(i);
        let via_chain = composed.apply(&x);
        let direct = t4
            .coords_of(&RatMatrix::identity(4).kron(&t1.element_matrix(&x)))
            .unwrap();
        assert_eq!(via_chain, direct);
    }
}

#[test]
fn tower_rejects_broken_divisibility() {
    assert!(matches!(uhf_tower(&[2, 3]), Err(Error::Argument(_))));
    assert!(matches!(uhf_tower(&[]), Err(Error::Argument(_))));
}

#[test]
fn tower_consistency_for_factorable_forms() {
    let tower = uhf_tower(&[1, 2, 4]).unwrap();
    let top = &tower.last().unwrap().algebra;

    // A form built to factor: φ(x, y) = τ([x, y]).
    let tau = LinearFunctional::new((0..top.dim()).map(|i| int(i as i64 % 5 - 2)).collect());
    let phi = BilinearForm::from_functional_bracket(top, &tau);
    let report = tower_factor_consistency(&tower, &phi, &cfg()).unwrap();
    assert!(report.consistent);
    assert!(report.levels.iter().all(|l| l.factored));

    // Degenerate two-level tower passes trivially.
    let small = uhf_tower(&[1, 2]).unwrap();
    let top = &small.last().unwrap().algebra;
    let phi = random_factorable_top_form(top, 11);
    assert!(tower_factor_consistency(&small, &phi, &cfg()).unwrap().consistent);
}

#[test]
fn tower_consistency_rejects_non_vanishing_forms() {
    let tower = uhf_tower(&[1, 2]).unwrap();
    let top = &tower.last().unwrap().algebra;
    // φ(x, y) = first coordinate product: nonzero on commuting pairs.
    let phi = BilinearForm::new(RatMatrix::from_fn(top.dim(), top.dim(), |i, j| {
        if i == 0 && j == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }));
    assert!(matches!(
        tower_factor_consistency(&tower, &phi, &cfg()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn character_products_are_zpd() {
    let t2 = upper_triangular_algebra(2).unwrap();
    let chi = corner_character(&t2);
    let deformed = character_product_algebra(&t2, &chi).unwrap();
    assert_eq!(deformed.dim(), t2.dim());
    assert!(!deformed.is_unital());
    assert_eq!(decide_zpd(&deformed, &cfg()).verdict, Verdict::Yes);

    // Q²: first-coordinate character.
    let diag = digraph_algebra(2, &[(0, 0), (1, 1)]).unwrap();
    let chi = corner_character(&diag);
    let deformed = character_product_algebra(&diag, &chi).unwrap();
    assert_eq!(decide_zpd(&deformed, &cfg()).verdict, Verdict::Yes);
}

#[test]
fn trace_is_not_a_character() {
    let m2 = matrix_algebra(2).unwrap();
    let trace = LinearFunctional::new(m2.basis().iter().map(RatMatrix::trace).collect());
    assert!(matches!(
        character_product_algebra(&m2, &trace),
        Err(Error::NotACharacter(_))
    ));
}

#[test]
fn graph_of_identity_homomorphism() {
    let t2 = upper_triangular_algebra(2).unwrap();
    let (graph, projection) = graph_algebra_hom(&t2, &t2, &LinearMap::identity(3)).unwrap();
    assert_eq!(graph.dim(), t2.dim());
    assert_eq!(projection.matrix, RatMatrix::identity(3));
    assert_eq!(decide_zpd(&graph, &cfg()).verdict, Verdict::Yes);

    // Zero map: the graph is a plain copy of the source.
    let (graph, _) = graph_algebra_hom(&t2, &t2, &LinearMap::zero(3, 3)).unwrap();
    assert_eq!(graph.dim(), t2.dim());
}

#[test]
fn graph_of_derivation() {
    let t2 = upper_triangular_algebra(2).unwrap();
    // ad_{E_12} into the ambient matrix module.
    let e12 = RatMatrix::unit(2, 0, 1);
    let delta = LinearMap::new(RatMatrix::from_fn(4, 3, |pos, k| {
        let b = &t2.basis()[k];
        let img = &(&e12 * b) - &(b * &e12);
        img.flatten()[pos].clone()
    }));
    let (graph, _) = graph_algebra_der(&t2, &delta).unwrap();
    assert_eq!(graph.dim(), t2.dim());
    assert_eq!(decide_zpd(&graph, &cfg()).verdict, Verdict::Yes);
}

#[test]
fn graph_rejects_non_homomorphisms() {
    let t2 = upper_triangular_algebra(2).unwrap();
    // E_11 ↦ E_12 breaks multiplicativity: φ(E_11²) = E_12 but φ(E_11)² = 0.
    let mut bad = RatMatrix::identity(3);
    bad[(0, 0)] = Scalar::zero();
    bad[(1, 0)] = Scalar::one();
    assert!(matches!(
        graph_algebra_hom(&t2, &t2, &LinearMap::new(bad)),
        Err(Error::InvalidMap(_))
    ));
    let not_leibniz = LinearMap::new(RatMatrix::from_fn(4, 3, |pos, k| {
        if pos == 0 && k == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }));
    assert!(matches!(
        graph_algebra_der(&t2, &not_leibniz),
        Err(Error::InvalidMap(_))
    ));
}

#[test]
fn compression_identity_and_proper_cases() {
    let t3 = upper_triangular_algebra(3).unwrap();
    let id = RatMatrix::identity(3);
    let zero = RatMatrix::zeros(3, 3);
    let (b, phi) = compression_algebra(&t3, &id, &zero).unwrap();
    assert_eq!(b.dim(), t3.dim());
    assert_eq!(phi.rank(), t3.dim());

    // P = E_11 + E_22, Q = E_11: compression onto the middle coordinate.
    let p = &RatMatrix::unit(3, 0, 0) + &RatMatrix::unit(3, 1, 1);
    let q = RatMatrix::unit(3, 0, 0);
    let (b, phi) = compression_algebra(&t3, &p, &q).unwrap();
    assert_eq!(b.dim(), 1);
    // Φ is multiplicative; picks out the (2,2) diagonal coefficient.
    let e22 = t3.coords_of(&RatMatrix::unit(3, 1, 1)).unwrap();
    assert_eq!(phi.apply(&e22), vec![Scalar::one()]);
}

#[test]
fn compression_rejects_bad_projections() {
    let t3 = upper_triangular_algebra(3).unwrap();
    let not_idempotent = RatMatrix::identity(3).scale(&int(2));
    assert!(matches!(
        compression_algebra(&t3, &not_idempotent, &RatMatrix::zeros(3, 3)),
        Err(Error::Argument(_))
    ));
    // E_22's range is not invariant under T_3.
    let p = RatMatrix::unit(3, 1, 1);
    assert!(matches!(
        compression_algebra(&t3, &p, &RatMatrix::zeros(3, 3)),
        Err(Error::LatticeViolation { which: "P", .. })
    ));
}

#[test]
fn matrix_over_commutative_rings() {
    // f = t - 1: the ring is the rationals, so M_2 comes back.
    let f = Polynomial::from_coeffs(vec![int(-1), int(1)]);
    let m2 = matrix_over_commutative(2, &f).unwrap();
    assert_eq!(m2.dim(), 4);

    let f = Polynomial::from_coeffs(vec![int(-2), int(0), int(1)]);
    let alg = matrix_over_commutative(2, &f).unwrap();
    assert_eq!(alg.dim(), 8);
    assert_eq!(decide_zlpd(&alg, &cfg()).verdict, Verdict::Yes);

    // n = 1: commutative, trivially zero Lie product determined.
    let f = Polynomial::from_coeffs(vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()]);
    let ring = matrix_over_commutative(1, &f).unwrap();
    assert!(ring.is_commutative());
    assert_eq!(decide_zlpd(&ring, &cfg()).verdict, Verdict::Yes);
}

#[test]
fn fanli1_witness_scales_cover_non_integer_points() {
    // Spot check the case-split at a fractional point: λ2 = 1/2, λ3 = 1/3.
    let (alg, module, delta, _) = example_fanli1_delta(4).unwrap();
    let x = vec![int(2), frac(1, 2), frac(1, 3), int(-1)];
    let d2 = RatMatrix::unit(4, 1, 3);
    let expected_scale = (frac(1, 2) - frac(1, 3)) / frac(1, 2);
    let d2_map = |v: &[Scalar]| {
        let m = alg.element_matrix(v);
        (&(&d2 * &m) - &(&m * &d2)).flatten()
    };
    let mut expect = d2_map(&x);
    for e in expect.iter_mut() {
        *e *= &expected_scale;
    }
    assert_eq!(delta.apply(&x), expect);
    let _ = module;
}

#[test]
fn commutator_span_of_triangulars_is_strict_uppers() {
    for n in 2..=5 {
        let t = upper_triangular_algebra(n).unwrap();
        assert_eq!(t.commutator_span().dim(), n * (n - 1) / 2, "T_{n}");
    }
}
