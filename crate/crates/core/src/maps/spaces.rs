//! Solution spaces of the Leibniz and multiplier identities, dual modules,
//! and the weak-amenability index.

use num_traits::Zero;

use super::bimodule::{Bimodule, LinearMap};
use crate::algebra::{Algebra, Side};
use crate::linalg::{RatMatrix, Scalar, Subspace};

/// All `δ : A → M` with `δ(xy) = x·δ(y) + δ(x)·y`, as a subspace of the
/// map space (ambient `d·m`, column-major convention).
pub fn derivation_space(alg: &Algebra, module: &Bimodule) -> Subspace {
    let d = alg.dim();
    let m = module.dim;
    if m == 0 || d == 0 {
        return Subspace::zero(d * m);
    }
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            // δ(b_i b_j) - b_i·δ(b_j) - δ(b_i)·b_j = 0, one row per target
            // coordinate p; unknowns indexed (k, q) -> k*m + q.
            for p in 0..m {
                let mut row = vec![Scalar::zero(); d * m];
                for (k, c) in alg.product_parts(i, j) {
                    row[k * m + p] += c;
                }
                for q in 0..m {
                    row[j * m + q] -= &module.left_action(i)[(p, q)];
                    row[i * m + q] -= &module.right_action(j)[(p, q)];
                }
                rows.push(row);
            }
        }
    }
    RatMatrix::from_rows(rows).kernel()
}

/// Span of the inner derivations `x ↦ x·v - v·x` over a basis of the module.
pub fn inner_derivation_space(alg: &Algebra, module: &Bimodule) -> Subspace {
    let d = alg.dim();
    let m = module.dim;
    let mut span = Subspace::zero(d * m);
    for q in 0..m {
        let mut v = vec![Scalar::zero(); m];
        v[q] = num_traits::One::one();
        let mut flat = Vec::with_capacity(d * m);
        for i in 0..d {
            let e = alg.basis_element(i);
            let lv = module.act_left(&e, &v);
            let rv = module.act_right(&v, &e);
            flat.extend(lv.iter().zip(&rv).map(|(a, b)| a - b));
        }
        span.insert(&flat);
    }
    span
}

/// Dual of a bimodule: `(a·f)(v) = f(v·a)` and `(f·a)(v) = f(a·v)`, so the
/// action tensors transpose and swap sides.
pub fn dual_bimodule(alg: &Algebra, module: &Bimodule) -> Bimodule {
    let left = (0..alg.dim())
        .map(|i| module.right_action(i).transpose())
        .collect();
    let right = (0..alg.dim())
        .map(|i| module.left_action(i).transpose())
        .collect();
    Bimodule::new(alg, left, right).expect("dual actions satisfy the axioms")
}

/// `dim Der(A, A*) - dim Inner(A, A*)`; zero is the finite-dimensional
/// stand-in for weak amenability.
pub fn weak_amenability_index(alg: &Algebra) -> usize {
    let dual = dual_bimodule(alg, &Bimodule::regular(alg));
    let der = derivation_space(alg, &dual);
    let inner = inner_derivation_space(alg, &dual);
    debug_assert!(inner.is_subset(&der).unwrap());
    der.dim() - inner.dim()
}

/// Solution space of the one-sided multiplier identity `V(ab) = V(a)·b`
/// (left) or `V(ab) = a·V(b)` (right).
pub fn multiplier_space(alg: &Algebra, module: &Bimodule, side: Side) -> Subspace {
    let d = alg.dim();
    let m = module.dim;
    if m == 0 || d == 0 {
        return Subspace::zero(d * m);
    }
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for p in 0..m {
                let mut row = vec![Scalar::zero(); d * m];
                for (k, c) in alg.product_parts(i, j) {
                    row[k * m + p] += c;
                }
                match side {
                    Side::Left => {
                        for q in 0..m {
                            row[i * m + q] -= &module.right_action(j)[(p, q)];
                        }
                    }
                    Side::Right => {
                        for q in 0..m {
                            row[j * m + q] -= &module.left_action(i)[(p, q)];
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    RatMatrix::from_rows(rows).kernel()
}

/// Leibniz defect `δ(xy) - x·δ(y) - δ(x)·y` at a specific pair.
pub fn leibniz_defect_at(
    alg: &Algebra,
    module: &Bimodule,
    delta: &LinearMap,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let dxy = delta.apply(&alg.mul_elements(x, y));
    let xd = module.act_left(x, &delta.apply(y));
    let dy = module.act_right(&delta.apply(x), y);
    dxy.iter()
        .zip(xd.iter().zip(&dy))
        .map(|(a, (b, c))| a - b - c)
        .collect()
}

/// Multiplier defect `V(xy) - V(x)·y` (left) or `V(xy) - x·V(y)` (right).
pub fn multiplier_defect_at(
    alg: &Algebra,
    module: &Bimodule,
    v: &LinearMap,
    x: &[Scalar],
    y: &[Scalar],
    side: Side,
) -> Vec<Scalar> {
    let vxy = v.apply(&alg.mul_elements(x, y));
    let other = match side {
        Side::Left => module.act_right(&v.apply(x), y),
        Side::Right => module.act_left(x, &v.apply(y)),
    };
    vxy.iter().zip(&other).map(|(a, b)| a - b).collect()
}

#[derive(Clone, Debug)]
pub struct DefectReport {
    pub is_derivation: bool,
    /// First basis pair with a nonzero defect.
    pub worst_pair: Option<(usize, usize)>,
    pub defect: Option<Vec<Scalar>>,
}

/// Scan all basis pairs for the Leibniz defect; the first nonzero one is
/// reported.
pub fn derivation_defect(alg: &Algebra, module: &Bimodule, delta: &LinearMap) -> DefectReport {
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let defect = leibniz_defect_at(
                alg,
                module,
                delta,
                &alg.basis_element(i),
                &alg.basis_element(j),
            );
            if defect.iter().any(|c| !c.is_zero()) {
                return DefectReport {
                    is_derivation: false,
                    worst_pair: Some((i, j)),
                    defect: Some(defect),
                };
            }
        }
    }
    DefectReport {
        is_derivation: true,
        worst_pair: None,
        defect: None,
    }
}

pub fn is_left_multiplier(alg: &Algebra, module: &Bimodule, v: &LinearMap) -> bool {
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let defect = multiplier_defect_at(
                alg,
                module,
                v,
                &alg.basis_element(i),
                &alg.basis_element(j),
                Side::Left,
            );
            if defect.iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}
