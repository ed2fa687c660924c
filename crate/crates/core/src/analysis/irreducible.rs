use serde::Serialize;

use super::smooth::{certify_smooth, Verdict};
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::gf::{Embedding, FieldSpec};
use crate::proj::{proj_count, proj_unrank};

/// Largest number of candidate factors the direct search may try.
pub const DEFAULT_FACTOR_BUDGET: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IrrMethod {
    /// Smooth with both degrees positive.
    A,
    /// Exhaustive factor search.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub method: IrrMethod,
    /// A proper factor, when method B found one (possibly over an extension).
    pub factor: Option<BiPoly>,
}

/// One representative bi-degree per complementary pair `{(i, j), (a-i, b-j)}`
/// of proper factor shapes, the side with fewer coefficients, smallest first.
fn factor_shapes(a: usize, b: usize) -> Vec<(usize, usize)> {
    let size = |(i, j): (usize, usize)| (i + 1) * (j + 1);
    let mut out = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            if (i, j) == (0, 0) || (i, j) == (a, b) {
                continue;
            }
            let other = (a - i, b - j);
            let pick = std::cmp::min((size((i, j)), (i, j)), (size(other), other)).1;
            if !out.contains(&pick) {
                out.push(pick);
            }
        }
    }
    out.sort_by_key(|&s| (size(s), s));
    out
}

fn extension_steps(a: usize, b: usize) -> Vec<usize> {
    let g = gcd(a, b);
    (2..=g).filter(|k| g % k == 0).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of candidates method B may need to try for `poly`.
pub fn method_b_cost(poly: &BiPoly) -> u128 {
    let q = poly.field().order().unwrap_or(u64::MAX);
    let (a, b) = poly.bidegree();
    let mut total: u128 = factor_shapes(a, b)
        .iter()
        .map(|&(i, j)| proj_count(q, (i + 1) * (j + 1)))
        .fold(0, u128::saturating_add);
    for k in extension_steps(a, b) {
        let qk = (q as u128)
            .checked_pow(k as u32)
            .filter(|&n| n <= u64::MAX as u128);
        let c = match qk {
            Some(n) => proj_count(n as u64, (a / k + 1) * (b / k + 1)),
            None => u128::MAX,
        };
        total = total.saturating_add(c);
    }
    total
}

fn search(poly: &BiPoly, field: &FieldSpec, shape: (usize, usize)) -> Option<BiPoly> {
    let (i, j) = shape;
    let n = (i + 1) * (j + 1);
    let total = proj_count(field.order()?, n);
    (0..total).find_map(|r| {
        let cand = BiPoly::from_coeffs(field, i, j, proj_unrank(field, n, r)).expect("shape");
        match poly.divide_by(&cand) {
            Ok(Some(_)) => Some(cand),
            _ => None,
        }
    })
}

/// A proper factor of `poly` over its own field, if one exists.
pub fn find_gf_factor(poly: &BiPoly) -> Option<BiPoly> {
    let (a, b) = poly.bidegree();
    factor_shapes(a, b)
        .into_iter()
        .find_map(|s| search(poly, poly.field(), s))
}

/// Direct test: a proper factor over `GF(q)`, or, for a `GF(q)`-irreducible
/// `poly`, a factor of bi-degree `(a/k, b/k)` over `GF(q^k)` for some
/// `k | gcd(a, b)`, `k > 1` (the Galois conjugates of an absolutely
/// irreducible factor then multiply back to `poly`).
pub fn irreducible_method_b(poly: &BiPoly, budget: u128) -> Result<Irreducibility> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let needed = method_b_cost(poly);
    if needed > budget {
        return Err(Error::Infeasible { needed, budget });
    }
    let (a, b) = poly.bidegree();
    let verdict = |irreducible, factor| Irreducibility {
        irreducible,
        method: IrrMethod::B,
        factor,
    };
    if (a, b) == (0, 0) {
        return Ok(verdict(false, None));
    }
    if let Some(f) = find_gf_factor(poly) {
        return Ok(verdict(false, Some(f)));
    }
    for k in extension_steps(a, b) {
        let big = poly.field().extension(k)?;
        let emb = Embedding::new(poly.field(), &big)?;
        let lifted = poly.map_field(&emb);
        if let Some(f) = search(&lifted, &big, (a / k, b / k)) {
            return Ok(verdict(false, Some(f)));
        }
    }
    Ok(verdict(true, None))
}

/// Shortcut: a smooth curve of bi-degree `(a, b)` with `a, b >= 1` is
/// irreducible, since two components would meet. `None` when the shortcut
/// does not apply.
pub fn irreducible_method_a(poly: &BiPoly) -> Option<Irreducibility> {
    let (a, b) = poly.bidegree();
    if a == 0 || b == 0 || poly.is_zero() {
        return None;
    }
    (certify_smooth(poly).verdict == Verdict::Smooth).then_some(Irreducibility {
        irreducible: true,
        method: IrrMethod::A,
        factor: None,
    })
}

/// Method B when its search fits [`DEFAULT_FACTOR_BUDGET`], else method A.
pub fn is_abs_irreducible(poly: &BiPoly) -> Result<Irreducibility> {
    match irreducible_method_b(poly, DEFAULT_FACTOR_BUDGET) {
        Err(Error::Infeasible { needed, budget }) => {
            irreducible_method_a(poly).ok_or(Error::Infeasible { needed, budget })
        }
        other => other,
    }
}
