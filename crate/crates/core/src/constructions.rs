//! Factories for the algebra families the regression suite exercises:
//! Jordan-block algebras, triangular and digraph algebras, refinement
//! towers, character products, graph algebras, compressions, and matrix
//! algebras over commutative quotient rings — plus the explicit
//! local-derivation and local-multiplier examples with their witnesses.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::decision::{BilinearForm, FactorMode, FactorResult, LinearFunctional};
use crate::error::{Error, Result};
use crate::linalg::{int, RatMatrix, Scalar};
use crate::maps::{Bimodule, LinearMap, Region, RegionWitness, ScaledPart};
use crate::poly::Polynomial;
use crate::span::SamplerConfig;

/// The nilpotent Jordan block `D_k` (ones on the first superdiagonal).
pub fn nilpotent_generator(k: usize) -> Result<RatMatrix> {
    if k < 1 {
        return Err(Error::Argument("Jordan block size must be at least 1".into()));
    }
    Ok(RatMatrix::from_fn(k, k, |i, j| {
        if j == i + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }))
}

/// `J_n = span{I, D_n, …, D_n^{n-1}}`, the unital algebra generated by a
/// nilpotent Jordan block. Commutative, dimension `n`.
pub fn jordan_block_algebra(n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::Argument(
            "Jordan block algebras need size at least 2".into(),
        ));
    }
    let d = nilpotent_generator(n)?;
    let mut basis = vec![RatMatrix::identity(n)];
    let mut power = RatMatrix::identity(n);
    for _ in 1..n {
        power = &power * &d;
        basis.push(power.clone());
    }
    Algebra::new(format!("J_{n}"), basis)
}

/// The non-unital algebra generated by `D_k` alone: `span{D, …, D^{k-1}}`.
pub fn nilpotent_block_algebra(k: usize) -> Result<Algebra> {
    let d = nilpotent_generator(k)?;
    Algebra::from_generators(format!("B_{k}"), &[d], false)
}

/// Full upper-triangular matrices `T_n`, the finite nest algebra on a
/// maximal chain; dimension `n(n+1)/2`.
pub fn upper_triangular_algebra(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::Argument("triangular size must be at least 1".into()));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i..n {
            basis.push(RatMatrix::unit(n, i, j));
        }
    }
    Algebra::new(format!("T_{n}"), basis)
}

/// Strictly upper-triangular matrices; the standard non-faithful example.
pub fn strictly_upper_triangular_algebra(n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::Argument("strict uppers need size at least 2".into()));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(RatMatrix::unit(n, i, j));
        }
    }
    Algebra::new(format!("N_{n}"), basis)
}

/// Full matrix algebra `M_n`.
pub fn matrix_algebra(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::Argument("matrix size must be at least 1".into()));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(RatMatrix::unit(n, i, j));
        }
    }
    Algebra::new(format!("M_{n}"), basis)
}

/// `span{E_ij : (i,j) ∈ ρ}` for a reflexive transitive relation on
/// `{0,…,n-1}`; the digraph (finite CSL) algebras. The chain order gives
/// `T_n`, equality gives the diagonal algebra.
pub fn digraph_algebra(n: usize, relation: &[(usize, usize)]) -> Result<Algebra> {
    let mut rel = relation.to_vec();
    rel.sort_unstable();
    rel.dedup();
    for &(i, j) in &rel {
        if i >= n || j >= n {
            return Err(Error::NotAnAlgebra(format!(
                "pair ({i},{j}) is outside 0..{n}"
            )));
        }
    }
    for i in 0..n {
        if !rel.contains(&(i, i)) {
            return Err(Error::NotAnAlgebra(format!("missing reflexive pair ({i},{i})")));
        }
    }
    for &(i, j) in &rel {
        for &(k, l) in &rel {
            if j == k && !rel.contains(&(i, l)) {
                return Err(Error::NotAnAlgebra(format!(
                    "({i},{j}) and ({k},{l}) require ({i},{l})"
                )));
            }
        }
    }
    let basis: Vec<RatMatrix> = rel.iter().map(|&(i, j)| RatMatrix::unit(n, i, j)).collect();
    Algebra::new(format!("digraph_{n}"), basis)
}

/// One stage of the refinement tower.
#[derive(Clone, Debug)]
pub struct TowerLevel {
    pub p: usize,
    pub algebra: Algebra,
    /// The unital embedding `x ↦ I_d ⊗ x` from the previous level, absent at
    /// the bottom. The identity sits in the left Kronecker factor; the
    /// convention matters because the two choices differ by a permutation.
    pub embedding_from_prev: Option<LinearMap>,
}

/// Triangular refinement tower `T_{p_1} ⊂ T_{p_2} ⊂ …` along a divisibility
/// chain, with verified unital injective homomorphism embeddings.
pub fn uhf_tower(ps: &[usize]) -> Result<Vec<TowerLevel>> {
    if ps.is_empty() {
        return Err(Error::Argument("tower needs at least one level".into()));
    }
    for w in ps.windows(2) {
        if w[0] == 0 || w[1] % w[0] != 0 {
            return Err(Error::Argument(format!(
                "divisibility chain broken: {} does not divide {}",
                w[0], w[1]
            )));
        }
    }
    let mut levels: Vec<TowerLevel> = Vec::with_capacity(ps.len());
    for (idx, &p) in ps.iter().enumerate() {
        let algebra = upper_triangular_algebra(p)?;
        let embedding_from_prev = if idx == 0 {
            None
        } else {
            let prev = &levels[idx - 1];
            let d = p / prev.p;
            let map = embedding_matrix(&prev.algebra, &algebra, d)?;
            verify_unital_embedding(&prev.algebra, &algebra, &map)?;
            Some(map)
        };
        levels.push(TowerLevel {
            p,
            algebra,
            embedding_from_prev,
        });
    }
    Ok(levels)
}

fn embedding_matrix(from: &Algebra, to: &Algebra, d: usize) -> Result<LinearMap> {
    let id = RatMatrix::identity(d);
    let mut cols = Vec::with_capacity(from.dim());
    for b in from.basis() {
        cols.push(to.coords_of(&id.kron(b))?);
    }
    Ok(LinearMap::new(RatMatrix::from_fn(
        to.dim(),
        from.dim(),
        |i, j| cols[j][i].clone(),
    )))
}

fn verify_unital_embedding(from: &Algebra, to: &Algebra, map: &LinearMap) -> Result<()> {
    if map.rank() != from.dim() {
        return Err(Error::InvalidMap("embedding is not injective".into()));
    }
    if let (Some(u), Some(v)) = (from.unit(), to.unit()) {
        if map.apply(u) != v {
            return Err(Error::InvalidMap("embedding does not preserve the unit".into()));
        }
    }
    for i in 0..from.dim() {
        for j in 0..from.dim() {
            let lhs = map.apply(&from.mul_elements(&from.basis_element(i), &from.basis_element(j)));
            let rhs = to.mul_elements(
                &map.apply(&from.basis_element(i)),
                &map.apply(&from.basis_element(j)),
            );
            if lhs != rhs {
                return Err(Error::InvalidMap(format!(
                    "embedding is not multiplicative at basis pair ({i},{j})"
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct TowerLevelReport {
    pub p: usize,
    pub commutator_dim: usize,
    pub factored: bool,
    pub consistent_with_next: bool,
}

#[derive(Clone, Debug)]
pub struct TowerConsistencyReport {
    pub consistent: bool,
    pub levels: Vec<TowerLevelReport>,
}

/// Factor a commuting-vanishing form on the top level through the bracket
/// at every level and check the factoring functionals agree along the
/// embeddings. Uniqueness of the functional on the commutator subspace
/// makes the comparison well-posed.
pub fn tower_factor_consistency(
    tower: &[TowerLevel],
    phi_top: &BilinearForm,
    cfg: &SamplerConfig,
) -> Result<TowerConsistencyReport> {
    let Some(top) = tower.last() else {
        return Err(Error::Argument("empty tower".into()));
    };
    crate::decision::check_vanishes_on_commuting_pairs(&top.algebra, phi_top, cfg, 64)?;

    // Composed embeddings into the top level.
    let mut to_top: Vec<LinearMap> = vec![LinearMap::identity(top.algebra.dim())];
    for idx in (0..tower.len() - 1).rev() {
        let step = tower[idx + 1]
            .embedding_from_prev
            .as_ref()
            .expect("non-bottom levels carry embeddings");
        to_top.insert(0, to_top[0].compose(step));
    }

    // Factor at each level.
    let mut taus: Vec<LinearFunctional> = Vec::with_capacity(tower.len());
    let mut reports: Vec<TowerLevelReport> = Vec::with_capacity(tower.len());
    for (level, emb) in tower.iter().zip(&to_top) {
        let e = &emb.matrix;
        let restricted = BilinearForm::new(&(&e.transpose() * &phi_top.matrix) * e);
        let factored = crate::decision::factor_bilinear(&level.algebra, &restricted, FactorMode::Bracket);
        match factored {
            FactorResult::Single(tau) => {
                taus.push(tau);
                reports.push(TowerLevelReport {
                    p: level.p,
                    commutator_dim: level.algebra.commutator_span().dim(),
                    factored: true,
                    consistent_with_next: true,
                });
            }
            _ => {
                reports.push(TowerLevelReport {
                    p: level.p,
                    commutator_dim: level.algebra.commutator_span().dim(),
                    factored: false,
                    consistent_with_next: false,
                });
                return Ok(TowerConsistencyReport {
                    consistent: false,
                    levels: reports,
                });
            }
        }
    }

    // τ_{m+1}∘σ must agree with τ_m on the commutator subspace of level m.
    let mut consistent = true;
    for idx in 0..tower.len() - 1 {
        let level = &tower[idx];
        let step = tower[idx + 1].embedding_from_prev.as_ref().unwrap();
        let mut ok = true;
        for i in 0..level.algebra.dim() {
            for j in 0..level.algebra.dim() {
                let v = level.algebra.lie_bracket(
                    &level.algebra.basis_element(i),
                    &level.algebra.basis_element(j),
                );
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                if taus[idx].eval(&v) != taus[idx + 1].eval(&step.apply(&v)) {
                    ok = false;
                }
            }
        }
        reports[idx].consistent_with_next = ok;
        consistent &= ok;
    }
    Ok(TowerConsistencyReport {
        consistent,
        levels: reports,
    })
}

/// New product `a ∘ b = χ(a)·b` on the same space, for a verified character
/// χ of a unital algebra. Realized through the left regular representation
/// of the unitization, since the deformed product is no longer the ambient
/// matrix product.
pub fn character_product_algebra(alg: &Algebra, chi: &LinearFunctional) -> Result<Algebra> {
    let Some(unit) = alg.unit() else {
        return Err(Error::NotACharacter("character products need a unital algebra".into()));
    };
    if chi.dim != alg.dim() {
        return Err(Error::AmbientMismatch(chi.dim, alg.dim()));
    }
    if !chi.eval(unit).is_one() {
        return Err(Error::NotACharacter("χ(1) ≠ 1".into()));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let prod = alg.mul_elements(&alg.basis_element(i), &alg.basis_element(j));
            if chi.eval(&prod) != chi.eval(&alg.basis_element(i)) * chi.eval(&alg.basis_element(j))
            {
                return Err(Error::NotACharacter(format!(
                    "χ is not multiplicative at basis pair ({i},{j})"
                )));
            }
        }
    }
    let d = alg.dim();
    let chis: Vec<Scalar> = (0..d).map(|i| chi.covector[i].clone()).collect();
    Algebra::from_structure_constants(format!("{}∘χ", alg.name()), d, |i, j, k| {
        if j == k {
            chis[i].clone()
        } else {
            Scalar::zero()
        }
    })
}

/// The character `x ↦ (ambient x)[0][0]`, multiplicative on triangular-type
/// algebras.
pub fn corner_character(alg: &Algebra) -> LinearFunctional {
    LinearFunctional::new(alg.basis().iter().map(|b| b[(0, 0)].clone()).collect())
}

/// Graph of a verified homomorphism: pairs `(a, φ(a))` in the block
/// diagonal of the two ambient spaces, with the first-projection
/// isomorphism back onto the source.
pub fn graph_algebra_hom(
    source: &Algebra,
    target: &Algebra,
    phi: &LinearMap,
) -> Result<(Algebra, LinearMap)> {
    if phi.source_dim != source.dim() || phi.target_dim != target.dim() {
        return Err(Error::AmbientMismatch(phi.source_dim, source.dim()));
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = phi.apply(&source.mul_elements(
                &source.basis_element(i),
                &source.basis_element(j),
            ));
            let rhs = target.mul_elements(
                &phi.apply(&source.basis_element(i)),
                &phi.apply(&source.basis_element(j)),
            );
            if lhs != rhs {
                return Err(Error::InvalidMap(format!(
                    "map is not multiplicative at basis pair ({i},{j})"
                )));
            }
        }
    }
    let (na, nb) = (source.ambient_n(), target.ambient_n());
    let n = na + nb;
    let mut basis = Vec::with_capacity(source.dim());
    for (i, a) in source.basis().iter().enumerate() {
        let img = target.element_matrix(&phi.apply(&source.basis_element(i)));
        basis.push(RatMatrix::from_fn(n, n, |r, c| {
            if r < na && c < na {
                a[(r, c)].clone()
            } else if r >= na && c >= na {
                img[(r - na, c - na)].clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    let graph = Algebra::new(format!("graph_hom({})", source.name()), basis)?;
    let projection = LinearMap::identity(source.dim());
    verify_projection_iso(&graph, source)?;
    Ok((graph, projection))
}

/// Graph of a verified derivation into the ambient matrix bimodule:
/// pairs `(a, δ(a))` realized as `[[a, δ(a)], [0, a]]`, which multiplies
/// exactly by the graph product `(ab, a·δ(b) + δ(a)·b)`.
pub fn graph_algebra_der(source: &Algebra, delta: &LinearMap) -> Result<(Algebra, LinearMap)> {
    let n = source.ambient_n();
    if delta.source_dim != source.dim() || delta.target_dim != n * n {
        return Err(Error::AmbientMismatch(delta.target_dim, n * n));
    }
    let module = Bimodule::ambient_matrices(source);
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let defect = crate::maps::leibniz_defect_at(
                source,
                &module,
                delta,
                &source.basis_element(i),
                &source.basis_element(j),
            );
            if defect.iter().any(|c| !c.is_zero()) {
                return Err(Error::InvalidMap(format!(
                    "map fails the Leibniz identity at basis pair ({i},{j})"
                )));
            }
        }
    }
    let mut basis = Vec::with_capacity(source.dim());
    for (i, a) in source.basis().iter().enumerate() {
        let img = delta.apply(&source.basis_element(i));
        basis.push(RatMatrix::from_fn(2 * n, 2 * n, |r, c| {
            if r < n && c < n {
                a[(r, c)].clone()
            } else if r >= n && c >= n {
                a[(r - n, c - n)].clone()
            } else if r < n && c >= n {
                img[r * n + (c - n)].clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    let graph = Algebra::new(format!("graph_der({})", source.name()), basis)?;
    let projection = LinearMap::identity(source.dim());
    verify_projection_iso(&graph, source)?;
    Ok((graph, projection))
}

fn verify_projection_iso(graph: &Algebra, source: &Algebra) -> Result<()> {
    if graph.dim() != source.dim() {
        return Err(Error::InvalidMap("graph dimension drifted".into()));
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            for k in 0..source.dim() {
                if graph.struct_const(i, j, k) != source.struct_const(i, j, k) {
                    return Err(Error::InvalidMap(
                        "first projection is not an isomorphism".into(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Compression `B = (P-Q)A(P-Q)` for idempotents with ranges invariant
/// under the algebra, together with the verified homomorphism
/// `Φ: a ↦ (P-Q)a(P-Q)`.
pub fn compression_algebra(
    alg: &Algebra,
    p: &RatMatrix,
    q: &RatMatrix,
) -> Result<(Algebra, LinearMap)> {
    let n = alg.ambient_n();
    for (label, m) in [("P", p), ("Q", q)] {
        if !m.is_square() || m.rows() != n {
            return Err(Error::AmbientMismatch(m.rows(), n));
        }
        if &(m * m) != m {
            return Err(Error::Argument(format!("{label} is not idempotent")));
        }
    }
    for (index, b) in alg.basis().iter().enumerate() {
        if b * p != &(p * b) * p {
            return Err(Error::LatticeViolation { which: "P", index });
        }
        if b * q != &(q * b) * q {
            return Err(Error::LatticeViolation { which: "Q", index });
        }
    }
    let pq = p - q;
    let images: Vec<RatMatrix> = alg.basis().iter().map(|b| &(&pq * b) * &pq).collect();
    let mut span = crate::linalg::Subspace::zero(n * n);
    let mut basis = Vec::new();
    for img in &images {
        if span.insert(&img.flatten()) {
            basis.push(img.clone());
        }
    }
    let compressed = Algebra::new(format!("(P-Q){}(P-Q)", alg.name()), basis)?;
    let mut cols = Vec::with_capacity(alg.dim());
    for img in &images {
        cols.push(compressed.coords_of(img)?);
    }
    let phi = LinearMap::new(RatMatrix::from_fn(compressed.dim(), alg.dim(), |i, j| {
        cols[j][i].clone()
    }));
    // Multiplicativity is re-verified rather than trusted; it needs the
    // invariance relations and is a good bug trap.
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = phi.apply(&alg.mul_elements(&alg.basis_element(i), &alg.basis_element(j)));
            let rhs = compressed.mul_elements(
                &phi.apply(&alg.basis_element(i)),
                &phi.apply(&alg.basis_element(j)),
            );
            if lhs != rhs {
                return Err(Error::InvalidMap(format!(
                    "compression map is not multiplicative at ({i},{j})"
                )));
            }
        }
    }
    Ok((compressed, phi))
}

/// `M_n` over the commutative quotient ring cut out by a polynomial,
/// realized as a Kronecker product with the companion-matrix algebra.
/// Dimension `n² · deg f`.
pub fn matrix_over_commutative(n: usize, f: &Polynomial) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::Argument("matrix size must be at least 1".into()));
    }
    let Some(deg) = f.degree().filter(|&d| d >= 1) else {
        return Err(Error::Argument("modulus must have degree at least 1".into()));
    };
    let monic = f.monic();
    let companion = RatMatrix::from_fn(deg, deg, |i, j| {
        if j + 1 == deg {
            -monic.coeffs()[i].clone()
        } else if i == j + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let ring = Algebra::from_generators(format!("Q[t]/({monic})"), &[companion], true)?;
    if ring.dim() != deg {
        return Err(Error::Argument(format!(
            "companion algebra dimension {} differs from degree {deg}",
            ring.dim()
        )));
    }
    Ok(matrix_algebra(n)?.tensor_product(&ring))
}

/// The non-unital bimodule over `J_2` with zero left action and the
/// right regular action, plus the local derivation on it that is not a
/// derivation. The module coordinates are the classes of `I` and `E_12`
/// under the right action, which fixes `δ(I)·E_12 ≠ 0`.
pub fn example_fanli1_j2() -> (Algebra, Bimodule, LinearMap, Vec<RegionWitness>) {
    let alg = jordan_block_algebra(2).expect("J_2 exists");
    let d = alg.dim();
    let zero_left = vec![RatMatrix::zeros(2, 2); d];
    let right: Vec<RatMatrix> = (0..d)
        .map(|i| alg.right_mult_matrix(&alg.basis_element(i)))
        .collect();
    let module = Bimodule::new(&alg, zero_left, right).expect("axioms hold");
    // δ(λ1 I + λ2 E_12) = λ1 m1 + 2 λ2 m2
    let delta = LinearMap::new(RatMatrix::from_i64(&[&[1, 0], &[0, 2]]));
    let m1_act = LinearMap::new(RatMatrix::identity(2)); // x ↦ m1·x
    let m2_act = LinearMap::new(RatMatrix::from_i64(&[&[0, 0], &[1, 0]])); // x ↦ m2·x
    let lambda1 = LinearFunctional::new(vec![int(1), int(0)]);
    let lambda2 = LinearFunctional::new(vec![int(0), int(1)]);
    let witnesses = vec![
        RegionWitness {
            region: Region::Nonzero(lambda1.clone()),
            fixed: m1_act.clone(),
            scaled: Some(ScaledPart {
                map: m2_act,
                num: lambda2,
                den: lambda1.clone(),
            }),
        },
        RegionWitness {
            region: Region::Zero(lambda1),
            fixed: m1_act.scale(&int(2)),
            scaled: None,
        },
    ];
    (alg, module, delta, witnesses)
}

/// The local derivation `A ↦ (λ₃ - λ₂) E_{1n}` on `J_n`, `n ≥ 3`, into the
/// ambient matrix bimodule, with its two case-split witnesses
/// `[E_{1,n-2}, ·]` on `{λ₂ = 0}` and `λ₂⁻¹(λ₂-λ₃)[E_{2,n}, ·]` elsewhere.
pub fn example_fanli1_delta(n: usize) -> Result<(Algebra, Bimodule, LinearMap, Vec<RegionWitness>)> {
    if n < 3 {
        return Err(Error::Argument(
            "the case-split example needs n at least 3".into(),
        ));
    }
    let alg = jordan_block_algebra(n)?;
    let module = Bimodule::ambient_matrices(&alg);
    let mut delta = RatMatrix::zeros(n * n, n);
    let corner = n - 1; // row-major index of the (1, n) entry
    delta[(corner, 1)] = -Scalar::one();
    delta[(corner, 2)] = Scalar::one();
    let delta = LinearMap::new(delta);

    let commutator_map = |e: &RatMatrix| {
        let mut m = RatMatrix::zeros(n * n, n);
        for (k, b) in alg.basis().iter().enumerate() {
            let img = &(e * b) - &(b * e);
            for (pos, v) in img.flatten().into_iter().enumerate() {
                m[(pos, k)] = v;
            }
        }
        LinearMap::new(m)
    };
    let delta1 = commutator_map(&RatMatrix::unit(n, 0, n - 3));
    let delta2 = commutator_map(&RatMatrix::unit(n, 1, n - 1));

    let mut lambda2 = vec![Scalar::zero(); n];
    lambda2[1] = Scalar::one();
    let lambda2 = LinearFunctional::new(lambda2);
    let mut num = vec![Scalar::zero(); n];
    num[1] = Scalar::one();
    num[2] = -Scalar::one();
    let num = LinearFunctional::new(num); // λ₂ - λ₃

    let witnesses = vec![
        RegionWitness {
            region: Region::Zero(lambda2.clone()),
            fixed: delta1,
            scaled: None,
        },
        RegionWitness {
            region: Region::Nonzero(lambda2.clone()),
            fixed: LinearMap::zero(n, n * n),
            scaled: Some(ScaledPart {
                map: delta2,
                num,
                den: lambda2,
            }),
        },
    ];
    Ok((alg, module, delta, witnesses))
}

/// The local left multiplier `A ↦ λ₁ D^{n-2} + 2 λ₂ D^{n-1}` on `J_n` into
/// itself, with witnesses `(D^{n-2} + (λ₂/λ₁) D^{n-1})·` on `{λ₁ ≠ 0}` and
/// `2 D^{n-2}·` on `{λ₁ = 0}`.
pub fn example_multiplier_delta(
    n: usize,
) -> Result<(Algebra, Bimodule, LinearMap, Vec<RegionWitness>)> {
    if n < 2 {
        return Err(Error::Argument("the multiplier example needs n at least 2".into()));
    }
    let alg = jordan_block_algebra(n)?;
    let module = Bimodule::regular(&alg);
    let mut delta = RatMatrix::zeros(n, n);
    delta[(n - 2, 0)] = Scalar::one();
    delta[(n - 1, 1)] = int(2);
    let delta = LinearMap::new(delta);

    let left_mult = |idx: usize| LinearMap::new(alg.left_mult_matrix(&alg.basis_element(idx)));
    let mut lambda1 = vec![Scalar::zero(); n];
    lambda1[0] = Scalar::one();
    let lambda1 = LinearFunctional::new(lambda1);
    let mut lambda2 = vec![Scalar::zero(); n];
    lambda2[1] = Scalar::one();
    let lambda2 = LinearFunctional::new(lambda2);

    let witnesses = vec![
        RegionWitness {
            region: Region::Nonzero(lambda1.clone()),
            fixed: left_mult(n - 2),
            scaled: Some(ScaledPart {
                map: left_mult(n - 1),
                num: lambda2,
                den: lambda1.clone(),
            }),
        },
        RegionWitness {
            region: Region::Zero(lambda1),
            fixed: left_mult(n - 2).scale(&int(2)),
            scaled: None,
        },
    ];
    Ok((alg, module, delta, witnesses))
}

/// A factorable commuting-vanishing form on the top tower level, for the
/// consistency scenarios.
pub fn random_factorable_top_form(top: &Algebra, seed: u64) -> BilinearForm {
    crate::decision::random_bracket_form(top, seed)
}

/// Shared sampler defaults for construction-level verification helpers.
pub fn default_config() -> SamplerConfig {
    SamplerConfig::default()
}
