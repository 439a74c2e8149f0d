use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar, Subspace};
use crate::poly::Polynomial;

/// A finite-dimensional associative algebra: an ordered, linearly
/// independent, multiplicatively closed family of ambient matrices together
/// with its structure constants `b_i b_j = Σ_k c[i,j,k] b_k`.
///
/// Closure is checked exactly at construction (residual zero, no tolerance)
/// and the structure constants are always recomputed from the matrices,
/// never trusted from a file. The unit, when one exists, is found by solving
/// the linear system `e·b_i = b_i·e = b_i` and cached, as is faithfulness.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    ambient_n: usize,
    basis: Vec<RatMatrix>,
    /// Dense structure constants, index `(i*d + j)*d + k`.
    struct_const: Vec<Scalar>,
    /// Sparse view: `products[i*d + j]` lists the nonzero `(k, c)`.
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Vec<Scalar>>,
    faithful: bool,
    solver: CoordSolver,
}

impl Algebra {
    pub fn new(name: impl Into<String>, basis: Vec<RatMatrix>) -> Result<Algebra> {
        let name = name.into();
        let ambient_n = basis.first().map_or(1, RatMatrix::rows);
        for m in &basis {
            if !m.is_square() || m.rows() != ambient_n {
                return Err(Error::AmbientMismatch(m.rows(), ambient_n));
            }
        }
        let dim = basis.len();
        let solver = CoordSolver::new(ambient_n * ambient_n, basis.iter().map(RatMatrix::flatten));
        if solver.rank() < dim {
            return Err(Error::DependentBasis {
                rank: solver.rank(),
                dim,
            });
        }

        let mut struct_const = vec![Scalar::zero(); dim * dim * dim];
        let mut products = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let p = &basis[i] * &basis[j];
                let coords = solver
                    .coords(&p.flatten())
                    .ok_or(Error::NotClosed { i, j })?;
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        struct_const[(i * dim + j) * dim + k] = c.clone();
                        products[i * dim + j].push((k, c.clone()));
                    }
                }
            }
        }

        let mut alg = Algebra {
            name,
            dim,
            ambient_n,
            basis,
            struct_const,
            products,
            unit: None,
            faithful: true,
            solver,
        };
        alg.unit = alg.find_unit();
        alg.faithful = alg.compute_faithful();
        Ok(alg)
    }

    /// Build an algebra from raw structure constants via the left regular
    /// representation on the unitization (always faithful). The input is
    /// checked for associativity first; the recomputed constants are then
    /// compared with the input as a belt-and-braces consistency check.
    pub fn from_structure_constants(
        name: impl Into<String>,
        dim: usize,
        sc: impl Fn(usize, usize, usize) -> Scalar,
    ) -> Result<Algebra> {
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        let lhs: Scalar = (0..dim).map(|m| sc(i, j, m) * sc(m, k, l)).sum();
                        let rhs: Scalar = (0..dim).map(|m| sc(j, k, m) * sc(i, m, l)).sum();
                        if lhs != rhs {
                            return Err(Error::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        }
        let n = dim + 1;
        let mut basis = Vec::with_capacity(dim);
        for i in 0..dim {
            // Column 0: action on the adjoined unit, giving b_i itself.
            // Column 1+j: coordinates of b_i * b_j.
            let mut m = RatMatrix::zeros(n, n);
            m[(1 + i, 0)] = Scalar::one();
            for j in 0..dim {
                for k in 0..dim {
                    m[(1 + k, 1 + j)] = sc(i, j, k);
                }
            }
            basis.push(m);
        }
        let alg = Algebra::new(name, basis)?;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if *alg.struct_const(i, j, k) != sc(i, j, k) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Smallest subalgebra of the ambient matrices containing the generators
    /// (and the identity when asked). Closure proceeds breadth-first, one
    /// full round of pairwise products at a time, in insertion order, so the
    /// resulting basis and structure constants are reproducible.
    pub fn from_generators(
        name: impl Into<String>,
        gens: &[RatMatrix],
        include_unit: bool,
    ) -> Result<Algebra> {
        let ambient_n = gens.first().map_or(1, RatMatrix::rows);
        for g in gens {
            if !g.is_square() || g.rows() != ambient_n {
                return Err(Error::AmbientMismatch(g.rows(), ambient_n));
            }
        }
        let mut span = Subspace::zero(ambient_n * ambient_n);
        let mut basis: Vec<RatMatrix> = Vec::new();
        let push = |m: RatMatrix, span: &mut Subspace, basis: &mut Vec<RatMatrix>| {
            if span.insert(&m.flatten()) {
                basis.push(m);
            }
        };
        if include_unit {
            push(RatMatrix::identity(ambient_n), &mut span, &mut basis);
        }
        for g in gens {
            push(g.clone(), &mut span, &mut basis);
        }
        let mut frontier_start = 0;
        loop {
            let len = basis.len();
            let mut added = Vec::new();
            for i in 0..len {
                for j in 0..len {
                    if i < frontier_start && j < frontier_start {
                        continue; // already multiplied in an earlier round
                    }
                    let p = &basis[i] * &basis[j];
                    if span.insert(&p.flatten()) {
                        added.push(p);
                    }
                }
            }
            frontier_start = len;
            if added.is_empty() {
                break;
            }
            basis.extend(added);
        }
        Algebra::new(name, basis)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    pub fn struct_const(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.struct_const[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero part of the product `b_i b_j` in basis coordinates.
    pub fn product_parts(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.products[i * self.dim + j] != self.products[j * self.dim + i] {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity of the recomputed structure constants on all index
    /// triples. Holds automatically for matrix-backed constructions; exposed
    /// so tests and loaders can re-verify it.
    pub fn verify_associativity(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut lhs = vec![Scalar::zero(); d];
                    for (m, c) in self.product_parts(i, j) {
                        for (l, c2) in self.product_parts(*m, k) {
                            lhs[*l] += c * c2;
                        }
                    }
                    let mut rhs = vec![Scalar::zero(); d];
                    for (m, c) in self.product_parts(j, k) {
                        for (l, c2) in self.product_parts(i, *m) {
                            rhs[*l] += c * c2;
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_element();
        v[i] = Scalar::one();
        v
    }

    /// Product of two coordinate vectors via the structure constants.
    pub fn mul_elements(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in self.product_parts(i, j) {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    pub fn lie_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = self.mul_elements(x, y);
        let yx = self.mul_elements(y, x);
        xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
    }

    /// Ambient matrix of a coordinate vector.
    pub fn element_matrix(&self, x: &[Scalar]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.ambient_n, self.ambient_n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.basis[i].scale(c);
            }
        }
        m
    }

    /// Coordinates of an ambient matrix, or an error when it leaves the span.
    pub fn coords_of(&self, m: &RatMatrix) -> Result<Vec<Scalar>> {
        if m.rows() != self.ambient_n || m.cols() != self.ambient_n {
            return Err(Error::AmbientMismatch(m.rows(), self.ambient_n));
        }
        self.solver.coords(&m.flatten()).ok_or(Error::NotInSpan)
    }

    /// Matrix of left multiplication by `x` on basis coordinates.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> RatMatrix {
        let d = self.dim;
        let mut m = RatMatrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in self.product_parts(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x` on basis coordinates.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> RatMatrix {
        let d = self.dim;
        let mut m = RatMatrix::zeros(d, d);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for i in 0..d {
                for (k, c) in self.product_parts(i, j) {
                    m[(*k, i)] += xj * c;
                }
            }
        }
        m
    }

    /// Right annihilator `{y : x·y = 0}` or left annihilator `{y : y·x = 0}`.
    pub fn annihilator(&self, x: &[Scalar], side: Side) -> Subspace {
        match side {
            Side::Right => self.left_mult_matrix(x).kernel(),
            Side::Left => self.right_mult_matrix(x).kernel(),
        }
    }

    pub fn two_sided_annihilator(&self, x: &[Scalar]) -> Subspace {
        self.annihilator(x, Side::Right)
            .intersect(&self.annihilator(x, Side::Left))
            .expect("same ambient")
    }

    /// `{y : [x, y] = 0}`.
    pub fn centralizer(&self, x: &[Scalar]) -> Subspace {
        (&self.left_mult_matrix(x) - &self.right_mult_matrix(x)).kernel()
    }

    pub fn center(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            let e = self.basis_element(i);
            let ad = &self.left_mult_matrix(&e) - &self.right_mult_matrix(&e);
            for r in 0..self.dim {
                rows.push(ad.row(r).to_vec());
            }
        }
        RatMatrix::from_rows(rows).kernel()
    }

    /// Span of all products `b_i b_j` as a subspace of the algebra.
    pub fn squared_span(&self) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for parts in &self.products {
            let mut v = self.zero_element();
            for (k, c) in parts {
                v[*k] = c.clone();
            }
            s.insert(&v);
        }
        s
    }

    /// Span of all commutators `[b_i, b_j]`.
    pub fn commutator_span(&self) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                s.insert(&self.lie_bracket(&self.basis_element(i), &self.basis_element(j)));
            }
        }
        s
    }

    /// Minimal polynomial of an element: the first linear dependence among
    /// `1, x, x², …`. The constant term acts through the algebra's own unit
    /// when there is one; non-unital algebras get the unitization's.
    pub fn element_min_poly(&self, x: &[Scalar]) -> Polynomial {
        match self.unit() {
            Some(unit) => {
                let unit = unit.to_vec();
                self.min_poly_from_powers(unit, |cur| self.mul_elements(cur, x))
            }
            None => {
                // Work in the unitization: coordinate 0 is the adjoined unit.
                let mut start = vec![Scalar::zero(); self.dim + 1];
                start[0] = Scalar::one();
                self.min_poly_from_powers(start, |cur| {
                    let scalar_part = cur[0].clone();
                    let prod = self.mul_elements(&cur[1..], x);
                    let mut next = vec![Scalar::zero(); self.dim + 1];
                    for (i, xi) in x.iter().enumerate() {
                        next[1 + i] = &scalar_part * xi + &prod[i];
                    }
                    next
                })
            }
        }
    }

    fn min_poly_from_powers(
        &self,
        start: Vec<Scalar>,
        mut step: impl FnMut(&[Scalar]) -> Vec<Scalar>,
    ) -> Polynomial {
        let ambient = start.len();
        let mut span = Subspace::zero(ambient);
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = start;
        loop {
            if !span.insert(&cur) {
                let mat =
                    RatMatrix::from_fn(ambient, powers.len(), |i, j| powers[j][i].clone());
                let coeffs = mat.solve(&cur).expect("dependence detected");
                let mut poly = vec![Scalar::zero(); powers.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    poly[i] = -c.clone();
                }
                poly[powers.len()] = Scalar::one();
                return Polynomial::from_coeffs(poly);
            }
            powers.push(cur.clone());
            cur = step(&cur);
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let n = self.ambient_n + other.ambient_n;
        let mut basis = Vec::with_capacity(self.dim + other.dim);
        for b in &self.basis {
            basis.push(RatMatrix::from_fn(n, n, |i, j| {
                if i < self.ambient_n && j < self.ambient_n {
                    b[(i, j)].clone()
                } else {
                    Scalar::zero()
                }
            }));
        }
        for b in &other.basis {
            basis.push(RatMatrix::from_fn(n, n, |i, j| {
                if i >= self.ambient_n && j >= self.ambient_n {
                    b[(i - self.ambient_n, j - self.ambient_n)].clone()
                } else {
                    Scalar::zero()
                }
            }));
        }
        Algebra::new(format!("{} (+) {}", self.name, other.name), basis)
            .expect("direct sum of valid algebras is valid")
    }

    /// Kronecker-product algebra; basis order is `(i, p) -> i*dim(other)+p`.
    pub fn tensor_product(&self, other: &Algebra) -> Algebra {
        let mut basis = Vec::with_capacity(self.dim * other.dim);
        for a in &self.basis {
            for b in &other.basis {
                basis.push(a.kron(b));
            }
        }
        Algebra::new(format!("{} (x) {}", self.name, other.name), basis)
            .expect("tensor product of valid algebras is valid")
    }

    /// Adjoin a two-sided unit: `(λ, a)` acts as `diag(λI + a, λ)` on an
    /// ambient space one dimension larger, so the copy of the original
    /// algebra is an ideal and the new element is a genuine unit even when
    /// the original algebra already had one.
    pub fn unitization(&self) -> Algebra {
        let n = self.ambient_n + 1;
        let mut basis = vec![RatMatrix::identity(n)];
        for b in &self.basis {
            basis.push(RatMatrix::from_fn(n, n, |i, j| {
                if i < self.ambient_n && j < self.ambient_n {
                    b[(i, j)].clone()
                } else {
                    Scalar::zero()
                }
            }));
        }
        Algebra::new(format!("{}~", self.name), basis)
            .expect("unitization of a valid algebra is valid")
    }

    fn find_unit(&self) -> Option<Vec<Scalar>> {
        let d = self.dim;
        if d == 0 {
            return None;
        }
        // e with e·b_j = b_j and b_j·e = b_j for all j.
        let mut rows = Vec::with_capacity(2 * d * d);
        let mut rhs = Vec::with_capacity(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                let left: Vec<Scalar> = (0..d).map(|i| self.struct_const(i, j, k).clone()).collect();
                rows.push(left);
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
                let right: Vec<Scalar> =
                    (0..d).map(|i| self.struct_const(j, i, k).clone()).collect();
                rows.push(right);
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
            }
        }
        RatMatrix::from_rows(rows).solve(&rhs)
    }

    fn compute_faithful(&self) -> bool {
        let d = self.dim;
        if d == 0 {
            return true;
        }
        // Kernel of a -> (a·b_1, …, a·b_d, b_1·a, …, b_d·a).
        let mut rows = Vec::with_capacity(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.struct_const(i, j, k).clone()).collect());
            }
        }
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.struct_const(j, i, k).clone()).collect());
            }
        }
        RatMatrix::from_rows(rows).kernel().is_zero()
    }
}

/// Which side an annihilator lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Echelonized span with a transform matrix, so that coordinates of a vector
/// in terms of the original spanning rows can be recovered.
#[derive(Clone, Debug)]
struct CoordSolver {
    ambient: usize,
    /// Reduced rows.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// `transform[r]` expresses reduced row r in the original rows.
    transform: Vec<Vec<Scalar>>,
    n_original: usize,
}

impl CoordSolver {
    fn new(ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> CoordSolver {
        let mut s = CoordSolver {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            transform: Vec::new(),
            n_original: 0,
        };
        let vectors: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        s.n_original = vectors.len();
        for (idx, v) in vectors.into_iter().enumerate() {
            let mut t = vec![Scalar::zero(); s.n_original];
            t[idx] = Scalar::one();
            s.insert(v, t);
        }
        s
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<Scalar>, mut t: Vec<Scalar>) {
        assert_eq!(v.len(), self.ambient);
        for (row, (trow, &p)) in self
            .rows
            .iter()
            .zip(self.transform.iter().zip(&self.pivots))
        {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (vj, rj) in v.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *vj -= &c * rj;
                }
            }
            for (tj, rj) in t.iter_mut().zip(trow) {
                if !rj.is_zero() {
                    *tj -= &c * rj;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().chain(t.iter_mut()) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(v);
        self.transform.push(t);
        self.pivots.push(p);
    }

    /// Coordinates of `v` in the original spanning rows, or `None` when `v`
    /// is outside the span. Requires the original rows independent.
    fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut w = v.to_vec();
        let mut coeff = vec![Scalar::zero(); self.n_original];
        for (row, (trow, &p)) in self
            .rows
            .iter()
            .zip(self.transform.iter().zip(&self.pivots))
        {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *wj -= &c * rj;
                }
            }
            for (cj, tj) in coeff.iter_mut().zip(trow) {
                if !tj.is_zero() {
                    *cj += &c * tj;
                }
            }
        }
        if w.iter().all(Zero::is_zero) {
            Some(coeff)
        } else {
            None
        }
    }
}
