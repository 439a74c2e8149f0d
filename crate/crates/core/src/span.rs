//! Spans of elementary tensors attached to zero products, commuting pairs,
//! two-sided zero products, and the span of square-zero elements.
//!
//! Tensor convention, shared by every module: the tensor space of an
//! algebra of dimension `d` has ambient dimension `d²`, and the elementary
//! tensor `b_i ⊗ b_j` sits at coordinate `i·d + j`.
//!
//! Sampled spans are lower bounds that only ever grow during a run. A
//! sample draws a random element `x` and inserts the whole slab
//! `x ⊗ ann_r(x)` (and the mirrored `ann_l(y) ⊗ y`), so each useful sample
//! can contribute up to `d` dimensions at once. The run stops once the span
//! has been stable for `saturation_rounds` consecutive samples or the
//! sample budget is exhausted. To make low-height zero divisors common, the
//! element distribution is a mixture of dense uniform coordinates in
//! `[-h, h]` and sparse vectors supported on one to three coordinates, and
//! every run is seeded with the slabs of the basis elements themselves.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{int, RatMatrix, Scalar, Subspace};
use crate::poly::Polynomial;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default)]
pub struct SamplerConfig {
    pub seed: u64,
    pub saturation_rounds: usize,
    /// `None` means `64 · dim`.
    pub max_samples: Option<usize>,
    pub coefficient_height: i64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            saturation_rounds: 8,
            max_samples: None,
            coefficient_height: 10,
        }
    }
}

impl SamplerConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplerConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn budget(&self, dim: usize) -> usize {
        self.max_samples.unwrap_or(64 * dim.max(1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanMethod {
    /// Provably the exact span for the algebra class used.
    Structural,
    /// Saturation evidence only; a true lower bound.
    Sampled,
}

#[derive(Clone, Debug)]
pub struct SpanReport {
    pub span: Subspace,
    pub method: SpanMethod,
    pub samples_used: usize,
    pub rounds_stable: usize,
    pub seed: u64,
}

impl SpanReport {
    pub fn structural(span: Subspace, seed: u64) -> Self {
        SpanReport {
            span,
            method: SpanMethod::Structural,
            samples_used: 0,
            rounds_stable: 0,
            seed,
        }
    }
}

pub fn tensor_index(d: usize, i: usize, j: usize) -> usize {
    i * d + j
}

/// Coordinates of `x ⊗ y` in the tensor space.
pub fn tensor_of(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = x.len();
    debug_assert_eq!(d, y.len());
    let mut out = vec![Scalar::zero(); d * d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out[i * d + j] = xi * yj;
            }
        }
    }
    out
}

pub(crate) struct ElementSampler<'a> {
    alg: &'a Algebra,
    rng: ChaCha8Rng,
    height: i64,
}

impl<'a> ElementSampler<'a> {
    pub fn new(alg: &'a Algebra, cfg: &SamplerConfig) -> Self {
        ElementSampler {
            alg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            height: cfg.coefficient_height.max(1),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let n = self.rng.random_range(-self.height..=self.height);
            if n != 0 {
                return int(n);
            }
        }
    }

    /// Nonzero random element; dense and sparse supports are mixed so that
    /// zero divisors show up at useful rates.
    pub fn element(&mut self) -> Vec<Scalar> {
        let d = self.alg.dim();
        loop {
            let mut v = vec![Scalar::zero(); d];
            if self.rng.random_range(0..3) == 0 {
                for x in v.iter_mut() {
                    let n = self.rng.random_range(-self.height..=self.height);
                    *x = int(n);
                }
            } else {
                let support = self.rng.random_range(1..=3.min(d));
                for _ in 0..support {
                    let i = self.rng.random_range(0..d);
                    v[i] = self.nonzero_scalar();
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }
}

fn slab_into(span: &mut Subspace, x: &[Scalar], partners: &Subspace, x_first: bool) -> bool {
    let mut grew = false;
    for y in partners.basis() {
        let t = if x_first { tensor_of(x, y) } else { tensor_of(y, x) };
        grew |= span.insert(&t);
    }
    grew
}

/// Deterministic seed elements: basis vectors and pairwise sums and
/// differences. Low-height combinations like these carry the non-generic
/// annihilators that make slabs productive.
fn seed_elements(alg: &Algebra) -> Vec<Vec<Scalar>> {
    let d = alg.dim();
    let mut out = Vec::with_capacity(d + d * d);
    for i in 0..d {
        out.push(alg.basis_element(i));
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let mut sum = alg.basis_element(i);
            sum[j] = Scalar::one();
            out.push(sum);
            let mut diff = alg.basis_element(i);
            diff[j] = -Scalar::one();
            out.push(diff);
        }
    }
    out
}

/// Lower bound on `span{x ⊗ y : x·y = 0}`.
pub fn zero_product_span(alg: &Algebra, cfg: &SamplerConfig) -> SpanReport {
    let d = alg.dim();
    let mut span = Subspace::zero(d * d);
    for e in seed_elements(alg) {
        slab_into(&mut span, &e, &alg.annihilator(&e, Side::Right), true);
        slab_into(&mut span, &e, &alg.annihilator(&e, Side::Left), false);
    }
    let mut sampler = ElementSampler::new(alg, cfg);
    let budget = cfg.budget(d);
    let mut samples = 0;
    let mut stable = 0;
    while stable < cfg.saturation_rounds && samples < budget {
        let x = sampler.element();
        let mut grew = slab_into(&mut span, &x, &alg.annihilator(&x, Side::Right), true);
        let y = sampler.element();
        grew |= slab_into(&mut span, &y, &alg.annihilator(&y, Side::Left), false);
        samples += 1;
        stable = if grew { 0 } else { stable + 1 };
    }
    SpanReport {
        span,
        method: SpanMethod::Sampled,
        samples_used: samples,
        rounds_stable: stable,
        seed: cfg.seed,
    }
}

/// Exact zero-product span for the commutative primary block `ℚ[t]/(t^k)`
/// in the power basis `1, t, …, t^{k-1}`.
///
/// In that ring `x·y = 0` exactly when `val(x) + val(y) ≥ k`, and expanding
/// such a pair into monomials only produces tensors `t^i ⊗ t^j` with
/// `i + j ≥ k`; conversely each such monomial pair is itself a zero
/// product. So the span is `span{t^i ⊗ t^j : i + j ≥ k}`, of dimension
/// `k(k-1)/2`.
pub fn structural_zero_span_commutative_primary(k: usize) -> Result<Subspace> {
    if k < 1 {
        return Err(Error::Argument("block order must be at least 1".into()));
    }
    let mut span = Subspace::zero(k * k);
    for i in 0..k {
        for j in 0..k {
            if i + j >= k {
                let mut v = vec![Scalar::zero(); k * k];
                v[tensor_index(k, i, j)] = Scalar::one();
                span.insert(&v);
            }
        }
    }
    Ok(span)
}

/// Lower bound on `span{x ⊗ y : [x, y] = 0}`. All symmetric tensors are
/// included structurally (`x ⊗ x` commutes for every `x`, and polarization
/// keeps the span inside the commuting span); sampled slabs pair `x` with
/// its centralizer in both tensor orders.
pub fn commuting_span(alg: &Algebra, cfg: &SamplerConfig) -> SpanReport {
    let d = alg.dim();
    let mut span = Subspace::zero(d * d);
    for i in 0..d {
        for j in i..d {
            let mut v = vec![Scalar::zero(); d * d];
            if i == j {
                v[tensor_index(d, i, i)] = Scalar::one();
            } else {
                v[tensor_index(d, i, j)] = Scalar::one();
                v[tensor_index(d, j, i)] = Scalar::one();
            }
            span.insert(&v);
        }
    }
    if alg.is_commutative() {
        // Every pair commutes: the span is the whole tensor space.
        return SpanReport::structural(Subspace::full(d * d), cfg.seed);
    }
    for e in seed_elements(alg) {
        let c = alg.centralizer(&e);
        slab_into(&mut span, &e, &c, true);
        slab_into(&mut span, &e, &c, false);
    }
    let mut sampler = ElementSampler::new(alg, cfg);
    let budget = cfg.budget(d);
    let mut samples = 0;
    let mut stable = 0;
    while stable < cfg.saturation_rounds && samples < budget {
        let x = sampler.element();
        let c = alg.centralizer(&x);
        let mut grew = slab_into(&mut span, &x, &c, true);
        grew |= slab_into(&mut span, &x, &c, false);
        samples += 1;
        stable = if grew { 0 } else { stable + 1 };
    }
    SpanReport {
        span,
        method: SpanMethod::Sampled,
        samples_used: samples,
        rounds_stable: stable,
        seed: cfg.seed,
    }
}

/// Lower bound on `span{x ⊗ y : x·y = y·x = 0}` via slabs of two-sided
/// annihilators in both tensor orders.
pub fn two_sided_zero_span(alg: &Algebra, cfg: &SamplerConfig) -> SpanReport {
    let d = alg.dim();
    let mut span = Subspace::zero(d * d);
    for e in seed_elements(alg) {
        let ann = alg.two_sided_annihilator(&e);
        slab_into(&mut span, &e, &ann, true);
        slab_into(&mut span, &e, &ann, false);
    }
    let mut sampler = ElementSampler::new(alg, cfg);
    let budget = cfg.budget(d);
    let mut samples = 0;
    let mut stable = 0;
    while stable < cfg.saturation_rounds && samples < budget {
        let x = sampler.element();
        let ann = alg.two_sided_annihilator(&x);
        let mut grew = slab_into(&mut span, &x, &ann, true);
        grew |= slab_into(&mut span, &x, &ann, false);
        samples += 1;
        stable = if grew { 0 } else { stable + 1 };
    }
    SpanReport {
        span,
        method: SpanMethod::Sampled,
        samples_used: samples,
        rounds_stable: stable,
        seed: cfg.seed,
    }
}

/// Lower bound on `span{x : x² = 0}`, a subspace of the algebra itself.
///
/// Generation: square-zero basis elements; rational points of the
/// line-quadric intersection `(a + t·b)² = 0` for sampled `a, b`; and
/// conjugation `u s u⁻¹` with `u = 1 + λ s'` for already-found square-zero
/// `s, s'` (available once the algebra is unital). Irrational square-zero
/// elements are out of reach by design; the structural generators cover
/// the triangular families exactly.
pub fn square_zero_span(alg: &Algebra, cfg: &SamplerConfig) -> SpanReport {
    let d = alg.dim();
    let mut span = Subspace::zero(d);
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let record = |x: Vec<Scalar>, span: &mut Subspace, found: &mut Vec<Vec<Scalar>>| -> bool {
        debug_assert!(
            alg.mul_elements(&x, &x).iter().all(Zero::is_zero),
            "generator must square to zero"
        );
        let grew = span.insert(&x);
        if grew {
            found.push(x);
        }
        grew
    };
    for i in 0..d {
        let e = alg.basis_element(i);
        if alg.mul_elements(&e, &e).iter().all(Zero::is_zero) {
            record(e, &mut span, &mut found);
        }
    }
    let mut sampler = ElementSampler::new(alg, cfg);
    let budget = cfg.budget(d);
    let mut samples = 0;
    let mut stable = 0;
    while stable < cfg.saturation_rounds && samples < budget {
        let mut grew = false;
        let a = sampler.element();
        let b = sampler.element();
        for t in rational_line_quadric_roots(alg, &a, &b) {
            let x: Vec<Scalar> = a.iter().zip(&b).map(|(ai, bi)| ai + &t * bi).collect();
            if x.iter().any(|c| !c.is_zero()) {
                grew |= record(x, &mut span, &mut found);
            }
        }
        if alg.is_unital() && found.len() >= 2 {
            let s = found[sampler.rng().random_range(0..found.len())].clone();
            let s2 = found[sampler.rng().random_range(0..found.len())].clone();
            let lambda = sampler.nonzero_scalar();
            // u = 1 + λ s', u⁻¹ = 1 - λ s'; conjugation preserves x² = 0.
            let ss = alg.mul_elements(&s2, &s);
            let ss2 = alg.mul_elements(&s, &s2);
            let sss = alg.mul_elements(&s2, &alg.mul_elements(&s, &s2));
            let conj: Vec<Scalar> = (0..d)
                .map(|i| {
                    &s[i] + &lambda * (&ss[i] - &ss2[i]) - &lambda * &lambda * &sss[i]
                })
                .collect();
            if conj.iter().any(|c| !c.is_zero()) {
                grew |= record(conj, &mut span, &mut found);
            }
        }
        samples += 1;
        stable = if grew { 0 } else { stable + 1 };
    }
    SpanReport {
        span,
        method: SpanMethod::Sampled,
        samples_used: samples,
        rounds_stable: stable,
        seed: cfg.seed,
    }
}

/// Rational `t` with `(a + t b)² = 0`: the coordinates give one quadratic
/// each; common roots are roots of their gcd.
fn rational_line_quadric_roots(alg: &Algebra, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let aa = alg.mul_elements(a, a);
    let ab = alg.mul_elements(a, b);
    let ba = alg.mul_elements(b, a);
    let bb = alg.mul_elements(b, b);
    let mut common = Polynomial::zero();
    for k in 0..alg.dim() {
        let q = Polynomial::from_coeffs(vec![aa[k].clone(), &ab[k] + &ba[k], bb[k].clone()]);
        common = if common.is_zero() { q } else { common.gcd(&q) };
        if common.degree() == Some(0) {
            return Vec::new();
        }
    }
    if common.is_zero() {
        return Vec::new(); // a, b, and the whole line are square-zero: a itself was already usable
    }
    let (roots, _) = common.rational_roots();
    roots.into_iter().map(|(r, _)| r).collect()
}

/// Deterministic stream of zero-product pairs `(x, y)` with `x·y = 0`,
/// used by map-analysis checks that need concrete pairs rather than spans.
pub fn sample_zero_product_pairs(
    alg: &Algebra,
    cfg: &SamplerConfig,
    count: usize,
) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let mut out = Vec::new();
    for i in 0..alg.dim() {
        let e = alg.basis_element(i);
        for y in alg.annihilator(&e, Side::Right).basis() {
            out.push((e.clone(), y.clone()));
        }
    }
    let mut sampler = ElementSampler::new(alg, cfg);
    let mut guard = 0;
    while out.len() < count && guard < 50 * count.max(1) {
        guard += 1;
        let x = sampler.element();
        let ann = alg.annihilator(&x, Side::Right);
        if ann.is_zero() {
            continue;
        }
        // Random combination of the annihilator basis.
        let mut y = vec![Scalar::zero(); alg.dim()];
        for b in ann.basis() {
            let c = sampler.nonzero_scalar();
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi += &c * bi;
            }
        }
        if y.iter().any(|c| !c.is_zero()) {
            out.push((x, y));
        }
    }
    out.truncate(count.max(out.len().min(count)));
    out
}

/// Pseudo-random invertible rational matrix with entries of bounded height,
/// used by scenario generators.
pub fn random_invertible(n: usize, height: i64, seed: u64) -> RatMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = RatMatrix::from_fn(n, n, |_, _| int(rng.random_range(-height..=height)));
        if m.inverse().is_some() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn jordan_algebra(n: usize) -> Algebra {
        let d = RatMatrix::from_fn(n, n, |i, j| if j == i + 1 { int(1) } else { Scalar::zero() });
        Algebra::from_generators(format!("J_{n}"), &[d], true).unwrap()
    }

    #[test]
    fn structural_primary_dims() {
        assert_eq!(structural_zero_span_commutative_primary(1).unwrap().dim(), 0);
        let z2 = structural_zero_span_commutative_primary(2).unwrap();
        assert_eq!(z2.dim(), 1);
        assert!(z2
            .contains(&[int(0), int(0), int(0), int(1)])
            .unwrap());
        for k in 2..=6 {
            let z = structural_zero_span_commutative_primary(k).unwrap();
            assert_eq!(z.dim(), k * (k - 1) / 2);
        }
        assert!(structural_zero_span_commutative_primary(0).is_err());
    }

    #[test]
    fn sampled_span_of_primary_block_never_exceeds_structural() {
        for k in 2..=4 {
            let alg = jordan_algebra(k);
            let rep = zero_product_span(&alg, &SamplerConfig::default());
            let structural = structural_zero_span_commutative_primary(k).unwrap();
            assert!(rep.span.is_subset(&structural).unwrap());
            assert_eq!(rep.span, structural, "sampling should reach the exact span");
        }
    }

    #[test]
    fn zero_span_of_a_field_is_zero() {
        let alg = Algebra::new("Q", vec![RatMatrix::identity(1)]).unwrap();
        let rep = zero_product_span(&alg, &SamplerConfig::default());
        assert_eq!(rep.span.dim(), 0);
    }

    #[test]
    fn commuting_span_of_commutative_algebra_is_full() {
        let alg = jordan_algebra(3);
        let rep = commuting_span(&alg, &SamplerConfig::default());
        assert_eq!(rep.method, SpanMethod::Structural);
        assert_eq!(rep.span.dim(), 9);
    }

    #[test]
    fn square_zero_span_of_field_is_zero() {
        let alg = Algebra::new("Q", vec![RatMatrix::identity(1)]).unwrap();
        let rep = square_zero_span(&alg, &SamplerConfig::default());
        assert_eq!(rep.span.dim(), 0);
    }

    #[test]
    fn two_sided_span_of_commutative_equals_zero_span() {
        let alg = jordan_algebra(2);
        let two = two_sided_zero_span(&alg, &SamplerConfig::default());
        let one = zero_product_span(&alg, &SamplerConfig::default());
        assert_eq!(two.span, one.span);
    }
}
