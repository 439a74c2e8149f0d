//! Determinedness deciders and bilinear-functional factorization.
//!
//! Finite-dimensional criteria, with `Z` the span of zero-product tensors,
//! `μ` the multiplication map `A⊗A → A` and `β` its Lie analog:
//!
//! * zero product determined      ⟺ `Z = ker μ`
//! * zero Lie product determined  ⟺ `Z_Lie = ker β`
//! * two-sided zpd                ⟺ `Z₂ = ker μ ∩ ker μ^op`
//!
//! Sampled spans are lower bounds, so `ker ⊆ span` certifies a *yes*
//! (the reverse inclusion always holds and is asserted). A *no* is only
//! certified through a structural span, which exists for algebras
//! recognized as direct sums of commutative primary blocks; everything
//! else that fails the inclusion is reported `no_uncertified`.
//!
//! All computation runs over the rationals while the statements of record
//! are over the complex field. A *yes* transfers (inclusions of rationally
//! defined subspaces survive base change), and a structural *no* transfers
//! because the monomial description of the primary-block span does not
//! depend on the field; each certificate carries that note.

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, RatMatrix, Scalar, Subspace};
use crate::span::{
    self, tensor_of, ElementSampler, SamplerConfig, SpanMethod, SpanReport,
};

/// Bilinear functional in basis coordinates: `φ(x, y) = xᵀ M y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub dim: usize,
    pub matrix: RatMatrix,
}

impl BilinearForm {
    pub fn new(matrix: RatMatrix) -> Self {
        assert!(matrix.is_square());
        BilinearForm {
            dim: matrix.rows(),
            matrix,
        }
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.matrix.mul_vec(y))
    }

    /// The form as a covector on the tensor space, `w[(i,j)] = M[i][j]`.
    pub fn as_tensor_covector(&self) -> Vec<Scalar> {
        self.matrix.flatten()
    }

    pub fn from_tensor_covector(dim: usize, w: &[Scalar]) -> Self {
        assert_eq!(w.len(), dim * dim);
        BilinearForm::new(RatMatrix::from_fn(dim, dim, |i, j| w[i * dim + j].clone()))
    }

    pub fn eval_tensor(&self, w: &[Scalar]) -> Scalar {
        dot(&self.as_tensor_covector(), w)
    }

    /// `φ(x, y) = τ(x·y)`.
    pub fn from_functional_product(alg: &Algebra, tau: &LinearFunctional) -> Self {
        let d = alg.dim();
        BilinearForm::new(RatMatrix::from_fn(d, d, |i, j| {
            let mut acc = Scalar::zero();
            for (k, c) in alg.product_parts(i, j) {
                acc += c * &tau.covector[*k];
            }
            acc
        }))
    }

    /// `φ(x, y) = τ([x, y])`.
    pub fn from_functional_bracket(alg: &Algebra, tau: &LinearFunctional) -> Self {
        let d = alg.dim();
        BilinearForm::new(RatMatrix::from_fn(d, d, |i, j| {
            let mut acc = Scalar::zero();
            for (k, c) in alg.product_parts(i, j) {
                acc += c * &tau.covector[*k];
            }
            for (k, c) in alg.product_parts(j, i) {
                acc -= c * &tau.covector[*k];
            }
            acc
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    pub dim: usize,
    pub covector: Vec<Scalar>,
}

impl LinearFunctional {
    pub fn new(covector: Vec<Scalar>) -> Self {
        LinearFunctional {
            dim: covector.len(),
            covector,
        }
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        dot(&self.covector, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Zpd,
    Zlpd,
    TwoSidedZpd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    NoUncertified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldNote {
    RationalCertifiedForC,
    RationalOnly,
}

/// A functional that annihilates the whole span but not the kernel,
/// together with the kernel tensor it fails on.
#[derive(Clone, Debug)]
pub struct CounterexampleWitness {
    pub phi: BilinearForm,
    pub kernel_tensor: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub property: Property,
    pub verdict: Verdict,
    pub ker_dim: usize,
    pub span_dim: usize,
    pub witness: Option<CounterexampleWitness>,
    pub span_report: SpanReport,
    pub field_note: FieldNote,
}

impl Certificate {
    /// Soundness re-check from the stored canonical data. For a *yes*, the
    /// kernel must sit inside the span; for a certified *no*, the witness
    /// must annihilate the span basis while being nonzero on the stored
    /// kernel tensor.
    pub fn verify(&self, ker: &Subspace) -> bool {
        match self.verdict {
            Verdict::Yes => ker.is_subset(&self.span_report.span).unwrap_or(false),
            Verdict::No | Verdict::NoUncertified => match &self.witness {
                None => false,
                Some(w) => {
                    let phi = w.phi.as_tensor_covector();
                    self.span_report
                        .span
                        .basis()
                        .iter()
                        .all(|v| dot(&phi, v).is_zero())
                        && !w.phi.eval_tensor(&w.kernel_tensor).is_zero()
                        && ker.contains(&w.kernel_tensor).unwrap_or(false)
                }
            },
        }
    }
}

/// The multiplication map `μ : A⊗A → A` as a `d × d²` matrix.
pub fn mu_matrix(alg: &Algebra) -> RatMatrix {
    let d = alg.dim();
    let mut m = RatMatrix::zeros(d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in alg.product_parts(i, j) {
                m[(*k, i * d + j)] = c.clone();
            }
        }
    }
    m
}

/// Opposite-product multiplication `μ^op(x ⊗ y) = y·x`.
pub fn mu_op_matrix(alg: &Algebra) -> RatMatrix {
    let d = alg.dim();
    let mut m = RatMatrix::zeros(d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in alg.product_parts(j, i) {
                m[(*k, i * d + j)] = c.clone();
            }
        }
    }
    m
}

/// The bracket map `β(x ⊗ y) = [x, y]`.
pub fn beta_matrix(alg: &Algebra) -> RatMatrix {
    &mu_matrix(alg) - &mu_op_matrix(alg)
}

pub fn mult_kernel(alg: &Algebra) -> Subspace {
    mu_matrix(alg).kernel()
}

pub fn mult_kernel_op(alg: &Algebra) -> Subspace {
    mu_op_matrix(alg).kernel()
}

pub fn lie_kernel(alg: &Algebra) -> Subspace {
    beta_matrix(alg).kernel()
}

/// Structural zero-product span for algebras that decompose into
/// commutative primary blocks: the block spans are monomial and exact, and
/// all cross-block tensors are zero products. Returns `None` when the
/// algebra is not recognized (non-commutative, non-unital, not singly
/// generated, or non-rational spectrum).
fn structural_zero_span(alg: &Algebra, cfg: &SamplerConfig) -> Option<Subspace> {
    if !alg.is_unital() || !alg.is_commutative() {
        return None;
    }
    let blocks = primary_block_bases(alg, cfg)?;
    let d = alg.dim();
    let mut z = Subspace::zero(d * d);
    for (bi, basis_i) in blocks.iter().enumerate() {
        let k = basis_i.len();
        for (bj, basis_j) in blocks.iter().enumerate() {
            for (s, u) in basis_i.iter().enumerate() {
                for (t, v) in basis_j.iter().enumerate() {
                    if bi != bj || s + t >= k {
                        z.insert(&tensor_of(u, v));
                    }
                }
            }
        }
    }
    Some(z)
}

/// Coordinate bases `e_i, n_i, n_i², …` of the primary blocks of a cyclic
/// commutative algebra; `None` when no cyclic generator with a rational
/// split spectrum is found.
fn primary_block_bases(alg: &Algebra, cfg: &SamplerConfig) -> Option<Vec<Vec<Vec<Scalar>>>> {
    let d = alg.dim();
    let unit = alg.unit()?.to_vec();
    let mut candidates: Vec<Vec<Scalar>> = (0..d).map(|i| alg.basis_element(i)).collect();
    let mut sampler = ElementSampler::new(alg, cfg);
    for _ in 0..4 * d {
        candidates.push(sampler.element());
    }
    for x in candidates {
        let m = alg.element_min_poly(&x);
        if m.degree() != Some(d) {
            continue;
        }
        let (roots, rest) = m.rational_roots();
        if rest.degree().unwrap_or(0) > 0 {
            return None; // cyclic but non-split: refuse to certify
        }
        // Spectral idempotents via Bezout on the coprime primary factors.
        let mut blocks = Vec::with_capacity(roots.len());
        for (lambda, mult) in &roots {
            let f = crate::poly::Polynomial::x_minus(lambda).pow(*mult);
            let (g, _) = m.div_rem(&f).ok()?;
            let (_, _, b) = f.xgcd(&g);
            let bg = b.mul(&g);
            let e = eval_poly_element(alg, &bg, &x, &unit);
            let shifted: Vec<Scalar> = x
                .iter()
                .zip(&unit)
                .map(|(xi, ui)| xi - lambda * ui)
                .collect();
            let n = alg.mul_elements(&e, &shifted);
            let mut block = vec![e.clone()];
            let mut power = e.clone();
            for _ in 1..*mult {
                power = alg.mul_elements(&power, &n);
                block.push(power.clone());
            }
            blocks.push(block);
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        debug_assert_eq!(total, d);
        return Some(blocks);
    }
    None
}

/// Evaluate a polynomial at an element of a unital algebra.
fn eval_poly_element(
    alg: &Algebra,
    p: &crate::poly::Polynomial,
    x: &[Scalar],
    unit: &[Scalar],
) -> Vec<Scalar> {
    let mut acc = alg.zero_element();
    for c in p.coeffs().iter().rev() {
        acc = alg.mul_elements(&acc, x);
        for (ai, ui) in acc.iter_mut().zip(unit) {
            *ai += c * ui;
        }
    }
    acc
}

/// A functional in `span^⊥` that is nonzero on some kernel basis tensor,
/// with that tensor. Exists exactly when the kernel is not inside the span.
fn find_witness(span: &Subspace, ker: &Subspace, d: usize) -> Option<CounterexampleWitness> {
    let perp = span.orthogonal_complement();
    for phi in perp.basis() {
        for w in ker.basis() {
            if !dot(phi, w).is_zero() {
                return Some(CounterexampleWitness {
                    phi: BilinearForm::from_tensor_covector(d, phi),
                    kernel_tensor: w.clone(),
                });
            }
        }
    }
    None
}

fn certify(
    property: Property,
    ker: Subspace,
    report: SpanReport,
    structural: bool,
) -> Certificate {
    debug_assert!(
        report.span.is_subset(&ker).unwrap(),
        "span must be a lower bound for the kernel"
    );
    let d2 = ker.ambient_dim();
    let d = (d2 as f64).sqrt().round() as usize;
    let yes = ker.is_subset(&report.span).unwrap();
    let (verdict, witness, field_note) = if yes {
        (Verdict::Yes, None, FieldNote::RationalCertifiedForC)
    } else {
        let witness = find_witness(&report.span, &ker, d);
        if structural {
            (Verdict::No, witness, FieldNote::RationalCertifiedForC)
        } else {
            (Verdict::NoUncertified, witness, FieldNote::RationalOnly)
        }
    };
    Certificate {
        property,
        verdict,
        ker_dim: ker.dim(),
        span_dim: report.span.dim(),
        witness,
        span_report: report,
        field_note,
    }
}

pub fn decide_zpd(alg: &Algebra, cfg: &SamplerConfig) -> Certificate {
    let ker = mult_kernel(alg);
    if let Some(z) = structural_zero_span(alg, cfg) {
        return certify(
            Property::Zpd,
            ker,
            SpanReport::structural(z, cfg.seed),
            true,
        );
    }
    certify(Property::Zpd, ker, span::zero_product_span(alg, cfg), false)
}

pub fn decide_zlpd(alg: &Algebra, cfg: &SamplerConfig) -> Certificate {
    let ker = lie_kernel(alg);
    let report = span::commuting_span(alg, cfg);
    let structural = report.method == SpanMethod::Structural;
    certify(Property::Zlpd, ker, report, structural)
}

pub fn decide_two_sided_zpd(alg: &Algebra, cfg: &SamplerConfig) -> Certificate {
    let ker = mult_kernel(alg)
        .intersect(&mult_kernel_op(alg))
        .expect("same ambient");
    if alg.is_commutative() {
        // Products commute, so two-sided zero pairs are plain zero pairs.
        if let Some(z) = structural_zero_span(alg, cfg) {
            return certify(
                Property::TwoSidedZpd,
                ker,
                SpanReport::structural(z, cfg.seed),
                true,
            );
        }
    }
    certify(
        Property::TwoSidedZpd,
        ker,
        span::two_sided_zero_span(alg, cfg),
        false,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorMode {
    Product,
    Bracket,
    TwoSided,
}

#[derive(Clone, Debug)]
pub enum FactorResult {
    /// `φ(x,y) = τ(x·y)` (product) or `τ([x,y])` (bracket; only the
    /// restriction of `τ` to the commutator subspace is canonical, the
    /// extension off the image is zero on the non-pivot coordinates).
    Single(LinearFunctional),
    /// `φ(x,y) = τ₁(x·y) + τ₂(y·x)`.
    Pair(LinearFunctional, LinearFunctional),
    /// A tensor in the relevant kernel where `φ` does not vanish.
    Witness(Vec<Scalar>),
}

/// Solve `τ∘μ = φ` (or the bracket / two-sided variants) exactly. The form
/// factors precisely when it annihilates the corresponding kernel, so on
/// failure a kernel tensor with `φ ≠ 0` is returned.
pub fn factor_bilinear(alg: &Algebra, phi: &BilinearForm, mode: FactorMode) -> FactorResult {
    let d = alg.dim();
    assert_eq!(phi.dim, d);
    let rhs = phi.as_tensor_covector();
    let (coef, ker) = match mode {
        FactorMode::Product => (mu_matrix(alg).transpose(), mult_kernel(alg)),
        FactorMode::Bracket => (beta_matrix(alg).transpose(), lie_kernel(alg)),
        FactorMode::TwoSided => {
            let m = mu_matrix(alg).transpose();
            let mop = mu_op_matrix(alg).transpose();
            let stacked = RatMatrix::from_fn(d * d, 2 * d, |i, j| {
                if j < d {
                    m[(i, j)].clone()
                } else {
                    mop[(i, j - d)].clone()
                }
            });
            let ker = mult_kernel(alg)
                .intersect(&mult_kernel_op(alg))
                .expect("same ambient");
            (stacked, ker)
        }
    };
    match coef.solve(&rhs) {
        Some(tau) => match mode {
            FactorMode::TwoSided => FactorResult::Pair(
                LinearFunctional::new(tau[..d].to_vec()),
                LinearFunctional::new(tau[d..].to_vec()),
            ),
            _ => FactorResult::Single(LinearFunctional::new(tau)),
        },
        None => {
            let w = ker
                .basis()
                .iter()
                .find(|w| !phi.eval_tensor(w).is_zero())
                .cloned()
                .expect("unsolvable system must expose a kernel witness");
            FactorResult::Witness(w)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Eq3Report {
    pub holds: bool,
    /// The associativity identity characterizes factoring only for unital
    /// algebras; a false flag here is a warning, not an error.
    pub unital_precondition_met: bool,
}

/// Check `φ(xy, z) = φ(x, yz)` on all basis triples; by trilinearity that
/// settles the identity on the whole algebra.
pub fn verify_eq3(alg: &Algebra, phi: &BilinearForm) -> Eq3Report {
    let d = alg.dim();
    assert_eq!(phi.dim, d);
    let mut holds = true;
    'outer: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut lhs = Scalar::zero();
                for (m, c) in alg.product_parts(i, j) {
                    lhs += c * &phi.matrix[(*m, k)];
                }
                let mut rhs = Scalar::zero();
                for (m, c) in alg.product_parts(j, k) {
                    rhs += c * &phi.matrix[(i, *m)];
                }
                if lhs != rhs {
                    holds = false;
                    break 'outer;
                }
            }
        }
    }
    Eq3Report {
        holds,
        unital_precondition_met: alg.is_unital(),
    }
}

/// Random bilinear form annihilating the commuting span, built to factor
/// through the bracket; used by tower-consistency scenarios.
pub fn random_bracket_form(alg: &Algebra, seed: u64) -> BilinearForm {
    let mut sampler = ElementSampler::new(alg, &SamplerConfig::with_seed(seed));
    let covector: Vec<Scalar> = (0..alg.dim())
        .map(|_| crate::linalg::int(sampler.rng().random_range(-5..=5)))
        .collect();
    BilinearForm::from_functional_bracket(alg, &LinearFunctional::new(covector))
}

/// Constraint check used by errors and reports: `φ` must vanish where the
/// arguments commute.
pub fn check_vanishes_on_commuting_pairs(
    alg: &Algebra,
    phi: &BilinearForm,
    cfg: &SamplerConfig,
    trials: usize,
) -> Result<()> {
    let d = alg.dim();
    // Basis pairs that commute, exactly.
    for i in 0..d {
        for j in 0..d {
            let x = alg.basis_element(i);
            let y = alg.basis_element(j);
            if alg.lie_bracket(&x, &y).iter().all(Zero::is_zero) {
                let v = phi.eval(&x, &y);
                if !v.is_zero() {
                    return Err(Error::Precondition(format!(
                        "form is {v} on the commuting basis pair ({i}, {j})"
                    )));
                }
            }
        }
    }
    // Random commuting pairs (x, p(x)).
    let mut sampler = ElementSampler::new(alg, cfg);
    for _ in 0..trials {
        let x = sampler.element();
        let mut y = alg
            .unit()
            .map(<[Scalar]>::to_vec)
            .unwrap_or_else(|| x.clone());
        let deg = sampler.rng().random_range(1..=3);
        for _ in 0..deg {
            let c = sampler.nonzero_scalar();
            let mut next = alg.mul_elements(&y, &x);
            for (ni, xi) in next.iter_mut().zip(&x) {
                *ni += &c * xi;
            }
            y = next;
        }
        debug_assert!(alg.lie_bracket(&x, &y).iter().all(Zero::is_zero));
        if !phi.eval(&x, &y).is_zero() {
            return Err(Error::Precondition(
                "form does not vanish on a sampled commuting pair".into(),
            ));
        }
    }
    // Full span check when the tensor space is small enough to afford it.
    if d <= 12 {
        let rep = span::commuting_span(alg, cfg);
        let phi_vec = phi.as_tensor_covector();
        if let Some(bad) = rep.span.basis().iter().find(|w| !dot(&phi_vec, w).is_zero()) {
            let _ = bad;
            return Err(Error::Precondition(
                "form does not annihilate the commuting span".into(),
            ));
        }
    }
    Ok(())
}
