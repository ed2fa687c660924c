//! The point-count bound for nondegenerate irreducible curves in `P^r` and
//! its use through the Segre embedding.

use serde::Serialize;

use crate::analysis::{irreducible_method_a, is_abs_irreducible};
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::geom::count_points;

/// Exact pieces of `floor((q-1)(q^(r+1)-1) d / (q(q^r-1) - r(q-1)))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundParts {
    pub numerator: u128,
    pub denominator: u128,
    pub floor: u128,
}

pub fn bound_parts(q: u64, r: u32, d: u64) -> Result<BoundParts> {
    if q < 2 || r < 2 {
        return Err(Error::BadParameters(format!(
            "need q >= 2 and r >= 2, got q={q}, r={r}"
        )));
    }
    let overflow = || Error::BadParameters("parameters too large".into());
    let q = q as u128;
    let qr = q.checked_pow(r).ok_or_else(overflow)?;
    let qr1 = qr.checked_mul(q).ok_or_else(overflow)?;
    let numerator = (q - 1)
        .checked_mul(qr1 - 1)
        .and_then(|n| n.checked_mul(d as u128))
        .ok_or_else(overflow)?;
    let denominator = (q * (qr - 1))
        .checked_sub(r as u128 * (q - 1))
        .filter(|&x| x > 0)
        .ok_or_else(|| Error::BadParameters("denominator is not positive".into()))?;
    Ok(BoundParts {
        numerator,
        denominator,
        floor: numerator / denominator,
    })
}

/// Upper bound on the rational points of a nondegenerate irreducible curve of
/// degree `d` in `P^r` over `GF(q)`.
pub fn homma_bound(q: u64, r: u32, d: u64) -> Result<u128> {
    Ok(bound_parts(q, r, d)?.floor)
}

/// Degree of the Segre image in `P^3` of a bi-degree `(a, b)` curve.
pub fn segre_degree(a: usize, b: usize) -> usize {
    a + b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    pub r: u32,
    pub d: u64,
    pub bound: u128,
    pub observed: Option<u64>,
    pub attained: Option<bool>,
    /// Whether the curve is known to be absolutely irreducible with
    /// `a, b >= 1` (so its Segre image is nondegenerate); the bound only
    /// constrains such curves.
    pub hypotheses_met: bool,
}

/// Compares `count_points(F, 1)` with the bound at `r = 3` and the Segre
/// degree of `F`.
pub fn check_attainment(poly: &BiPoly) -> Result<BoundReport> {
    let q = poly
        .field()
        .order()
        .ok_or_else(|| Error::BadParameters("field too large".into()))?;
    let (a, b) = poly.bidegree();
    let d = segre_degree(a, b) as u64;
    let bound = homma_bound(q, 3, d)?;
    let observed = count_points(poly, 1)?;
    let irreducible = match is_abs_irreducible(poly) {
        Ok(v) => v.irreducible,
        Err(_) => irreducible_method_a(poly).is_some(),
    };
    Ok(BoundReport {
        q,
        r: 3,
        d,
        bound,
        observed: Some(observed),
        attained: Some(observed as u128 == bound),
        hypotheses_met: irreducible && a >= 1 && b >= 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_values() {
        assert_eq!(homma_bound(2, 3, 7).unwrap(), 9);
        assert_eq!(homma_bound(2, 3, 6).unwrap(), 8);
        assert_eq!(homma_bound(2, 3, 0).unwrap(), 0);
        let p = bound_parts(2, 3, 6).unwrap();
        assert_eq!((p.numerator, p.denominator), (90, 11));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(homma_bound(1, 3, 1), Err(Error::BadParameters(_))));
        assert!(matches!(homma_bound(2, 1, 1), Err(Error::BadParameters(_))));
    }

    #[test]
    fn segre() {
        assert_eq!(segre_degree(3, 3), 6);
        assert_eq!(segre_degree(4, 3), 7);
    }
}
