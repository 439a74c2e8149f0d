//! Univariate polynomials over the rationals: division, gcd, Bezout
//! coefficients, and rational root extraction. Coefficients are stored
//! lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial { coeffs: vec![c] }.normalized()
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    /// `t - c`.
    pub fn x_minus(c: &Scalar) -> Self {
        Polynomial {
            coeffs: vec![-c.clone(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Polynomial { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial { coeffs }.normalized()
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial { coeffs }.normalized()
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::Argument("polynomial division by zero".into()));
        }
        let mut rem = self.clone();
        let d = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().recip();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let c = rem.leading().unwrap() * &lead_inv;
            let shift = r - d;
            quot[shift] = c.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem.coeffs[shift + i] -= &c * b;
                }
            }
            rem = rem.normalized();
        }
        Ok((Polynomial { coeffs: quot }.normalized(), rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` monic with `s*self + t*other = g`.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(l) = r0.leading().cloned() {
            let inv = Polynomial::constant(l.recip());
            (r0.monic(), s0.mul(&inv), t0.mul(&inv))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        }
        .normalized()
    }

    /// `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation on a square matrix.
    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &RatMatrix::identity(n).scale(c);
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Peel off rational linear factors: returns `(roots with multiplicity,
    /// non-split cofactor)`. The cofactor is constant exactly when the
    /// polynomial splits over the rationals.
    pub fn rational_roots(&self) -> (Vec<(Scalar, usize)>, Polynomial) {
        if self.is_zero() {
            return (Vec::new(), Self::zero());
        }
        let mut rest = self.monic();
        let mut roots: Vec<(Scalar, usize)> = Vec::new();

        // Factor out t^v first.
        let v = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if v > 0 {
            rest = Polynomial {
                coeffs: rest.coeffs[v..].to_vec(),
            };
            roots.push((Scalar::zero(), v));
        }

        while rest.degree().unwrap_or(0) >= 1 {
            let Some(root) = rational_root_of(&rest) else {
                break;
            };
            let mut mult = 0;
            let lin = Polynomial::x_minus(&root);
            loop {
                let (q, r) = rest.div_rem(&lin).unwrap();
                if r.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            roots.push((root, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    /// True when every irreducible factor is linear over the rationals.
    pub fn splits_over_q(&self) -> bool {
        let (_, rest) = self.rational_roots();
        rest.degree().unwrap_or(0) == 0
    }
}

/// One rational root of a nonconstant polynomial, if any, via the rational
/// root theorem on the cleared-denominator integer form.
fn rational_root_of(p: &Polynomial) -> Option<Scalar> {
    if p.eval(&Scalar::zero()).is_zero() {
        return Some(Scalar::zero());
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints.first()?.abs();
    let an = ints.last()?.abs();
    let nums = divisors(&a0)?;
    let dens = divisors(&an)?;
    for n in &nums {
        for d in &dens {
            for sign in [1i32, -1] {
                let cand = BigRational::new(n * BigInt::from(sign), d.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// All positive divisors via trial division; `None` when the input is too
/// large for that to be sensible.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n: u128 = n.abs().try_into().ok().filter(|&v: &u128| v <= 1u128 << 50)?;
    if n == 0 {
        return Some(vec![BigInt::one()]);
    }
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = crate::linalg::scalar_to_string(c);
            let term = match i {
                0 => s,
                1 if c.is_one() => "t".to_string(),
                1 => format!("{s}*t"),
                _ if c.is_one() => format!("t^{i}"),
                _ => format!("{s}*t^{i}"),
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if term.starts_with('-') {
                write!(f, " - {}", &term[1..])?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_identities() {
        let a = p(&[-2, 0, 1]); // t^2 - 2
        let b = p(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(b.mul(&q).add(&r), a);
        assert_eq!(r, p(&[-1]));
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = p(&[-1, 0, 1]); // (t-1)(t+1)
        let b = p(&[-1, 1]).mul(&p(&[3, 1])); // (t-1)(t+3)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let a = p(&[0, 0, 1]); // t^2
        let b = p(&[-1, 1]).pow(2); // (t-1)^2
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, Polynomial::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), Polynomial::one());
    }

    #[test]
    fn squarefree_detection() {
        assert!(p(&[-2, 0, 1]).is_squarefree()); // t^2 - 2
        assert!(!p(&[0, 0, 1]).is_squarefree()); // t^2
        assert!(!p(&[1, 2, 1]).is_squarefree()); // (t+1)^2
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // t^2 (t - 1/2)^3 (t^2 + 1)
        let q = p(&[0, 0, 1])
            .mul(&Polynomial::x_minus(&frac(1, 2)).pow(3))
            .mul(&p(&[1, 0, 1]));
        let (roots, rest) = q.rational_roots();
        assert_eq!(roots, vec![(int(0), 2), (frac(1, 2), 3)]);
        assert_eq!(rest, p(&[1, 0, 1]));
        assert!(!q.splits_over_q());
        assert!(p(&[2, -3, 1]).splits_over_q()); // (t-1)(t-2)
    }

    #[test]
    fn matrix_evaluation() {
        let d2 = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(p(&[0, 0, 1]).eval_matrix(&d2).is_zero());
        let shifted = p(&[-1, 1]); // t - 1
        assert_eq!(
            shifted.eval_matrix(&RatMatrix::identity(2)),
            RatMatrix::zeros(2, 2)
        );
    }
}
