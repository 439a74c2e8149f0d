//! Constructor mini-language, so the scenario suite and quick experiments
//! need no fixture files:
//!
//! ```text
//! jordan:N            unital algebra of a nilpotent Jordan block
//! nilpotent:K         non-unital algebra generated by the block alone
//! triangular:N        upper-triangular matrices T_N
//! strict_upper:N      strictly upper-triangular matrices
//! matrix:N            full matrix algebra M_N
//! diag:N              diagonal algebra Q^N
//! tensor:(A,B)        Kronecker product of two constructs
//! sum:(A,B)           block-diagonal direct sum
//! uhf:p1,p2,...       top level of the refinement tower
//! char_product:A      deformed product x∘y = χ(x)y, χ = corner entry
//! matrix_over:N:c0,c1,...   M_N over Q[t]/(f), f lowest-degree-first
//! unitize:A           adjoin a two-sided unit
//! ```

use zpdlab_core::constructions as cons;
use zpdlab_core::error::{Error, Result};
use zpdlab_core::linalg::parse_scalar;
use zpdlab_core::poly::Polynomial;
use zpdlab_core::Algebra;

pub fn build(spec: &str) -> Result<Algebra> {
    let spec = spec.trim();
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h.trim(), r.trim()),
        None => (spec, ""),
    };
    match head {
        "jordan" => cons::jordan_block_algebra(parse_count(rest)?),
        "nilpotent" => cons::nilpotent_block_algebra(parse_count(rest)?),
        "triangular" => cons::upper_triangular_algebra(parse_count(rest)?),
        "strict_upper" => cons::strictly_upper_triangular_algebra(parse_count(rest)?),
        "matrix" => cons::matrix_algebra(parse_count(rest)?),
        "diag" => {
            let n = parse_count(rest)?;
            let rel: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
            cons::digraph_algebra(n, &rel)
        }
        "tensor" => {
            let (a, b) = parse_pair(rest)?;
            Ok(build(&a)?.tensor_product(&build(&b)?))
        }
        "sum" => {
            let (a, b) = parse_pair(rest)?;
            Ok(build(&a)?.direct_sum(&build(&b)?))
        }
        "uhf" => {
            let ps: Result<Vec<usize>> = rest.split(',').map(parse_count).collect();
            let tower = cons::uhf_tower(&ps?)?;
            Ok(tower.into_iter().last().expect("nonempty tower").algebra)
        }
        "char_product" => {
            let inner = build(rest)?;
            let chi = cons::corner_character(&inner);
            cons::character_product_algebra(&inner, &chi)
        }
        "matrix_over" => {
            let (n, coeffs) = rest.split_once(':').ok_or_else(|| {
                Error::Argument("matrix_over needs a size and coefficients".into())
            })?;
            let coeffs: Result<Vec<_>> = coeffs.split(',').map(|c| parse_scalar(c.trim())).collect();
            let f = Polynomial::from_coeffs(coeffs?);
            cons::matrix_over_commutative(parse_count(n)?, &f)
        }
        "unitize" => Ok(build(rest)?.unitization()),
        other => Err(Error::Argument(format!("unknown constructor {other:?}"))),
    }
}

fn parse_count(text: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Argument(format!("expected a positive integer, got {text:?}")))
}

/// Split `( A , B )` at the top-level comma, respecting nested parentheses.
fn parse_pair(text: &str) -> Result<(String, String)> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Argument(format!("expected (A,B), got {text:?}")))?;
    let mut depth = 0usize;
    for (idx, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                return Ok((
                    inner[..idx].trim().to_string(),
                    inner[idx + 1..].trim().to_string(),
                ));
            }
            _ => {}
        }
    }
    Err(Error::Argument(format!("no top-level comma in {text:?}")))
}
