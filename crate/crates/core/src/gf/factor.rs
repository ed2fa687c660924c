//! Factorization of univariate polynomials over finite fields: square-free
//! decomposition, distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting driven by a seeded ChaCha stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::embed::Embedding;
use super::field::{FieldElement, FieldSpec};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0;

/// `unit * prod(factor^multiplicity)`, factors monic irreducible, sorted by
/// degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn expand(&self, field: &FieldSpec) -> UniPoly {
        let mut acc = UniPoly::constant(field, self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

fn sort_key(p: &UniPoly) -> (usize, Vec<FieldElement>) {
    let mut c = p.coeffs().to_vec();
    c.reverse();
    (p.degree().unwrap_or(0), c)
}

/// Full factorization with the default seed.
pub fn factor(f: &UniPoly) -> Result<Factorization> {
    factor_with_seed(f, DEFAULT_SEED)
}

pub fn factor_with_seed(f: &UniPoly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    if field.order().is_none() {
        return Err(Error::BadParameters(
            "factoring needs a field of known order".into(),
        ));
    }
    let unit = f.lead().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| sort_key(&a.0).cmp(&sort_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Square-free decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i`, each `g_i` square-free and monic.
pub fn squarefree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = field.characteristic() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c);
        for (g, j) in squarefree(&root) {
            out.push((g, j * p));
        }
    }
    out
}

/// `g` with `g^p = f`, for `f` a polynomial in `t^p`.
fn pth_root(f: &UniPoly) -> UniPoly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let q = field.order().expect("finite order") as u128;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| field.pow(c, q / p as u128))
        .collect();
    UniPoly::new(field, coeffs)
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree.
pub fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let t = UniPoly::t(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.clone();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.rem(&rest).frobenius_mod(&rest);
        let g = rest.gcd(&h.sub(&t));
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct monic irreducibles of
/// degree `d`.
pub fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order().expect("finite order");
    loop {
        let a = UniPoly::new(
            field,
            (0..n)
                .map(|_| field.from_index(rng.random_range(0..q)))
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if field.characteristic() == 2 {
            // trace map from GF(q^d) to GF(2)
            let mut acc = a.rem(f);
            let mut term = acc.clone();
            for _ in 1..field.width() * d {
                term = term.mul_mod(&term, f);
                acc = acc.add(&term);
            }
            acc
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2)
            let mut norm = a.rem(f);
            let mut conj = norm.clone();
            for _ in 1..d {
                conj = conj.frobenius_mod(f);
                norm = norm.mul_mod(&conj, f);
            }
            norm.pow_mod(((q - 1) / 2) as u128, f)
                .sub(&UniPoly::one(field))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.exact_div(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Zeros of `f` in `field` (which must equal or extend the field of `f`),
/// in enumeration order.
pub fn roots(f: &UniPoly, field: &FieldSpec) -> Result<Vec<FieldElement>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let emb = Embedding::new(f.field(), field)?;
    let g = emb.map_poly(f).monic();
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let t = UniPoly::t(field);
    let split = g.gcd(&t.frobenius_mod(&g).sub(&t));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut out: Vec<FieldElement> = equal_degree(&split, 1, &mut rng)
        .into_iter()
        .map(|lin| field.neg(&lin.coeff(0)))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn irreducible_quadratic() {
        let f2 = gf(2);
        let p = UniPoly::from_ints(&f2, &[1, 1, 1]);
        let fac = factor(&p).unwrap();
        assert_eq!(fac.factors, vec![(p, 1)]);
    }

    #[test]
    fn split_cubic_gf3() {
        let f3 = gf(3);
        let p = UniPoly::from_ints(&f3, &[0, -1, 0, 1]);
        let fac = factor(&p).unwrap();
        let lin: Vec<UniPoly> = fac
            .factors
            .iter()
            .map(|(f, m)| {
                assert_eq!(*m, 1);
                f.clone()
            })
            .collect();
        assert_eq!(
            lin,
            vec![
                UniPoly::from_ints(&f3, &[0, 1]),
                UniPoly::from_ints(&f3, &[1, 1]),
                UniPoly::from_ints(&f3, &[2, 1]),
            ]
        );
    }

    #[test]
    fn t4_plus_t_gf2() {
        let f2 = gf(2);
        let p = UniPoly::from_ints(&f2, &[0, 1, 0, 0, 1]);
        let fac = factor(&p).unwrap();
        let got: Vec<UniPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
        assert_eq!(
            got,
            vec![
                UniPoly::from_ints(&f2, &[0, 1]),
                UniPoly::from_ints(&f2, &[1, 1]),
                UniPoly::from_ints(&f2, &[1, 1, 1]),
            ]
        );
        assert_eq!(fac.expand(&f2), p);
    }

    #[test]
    fn multiplicities_and_pth_powers() {
        let f3 = gf(3);
        // (t+1)^3 * (t^2+1)^2 * t
        let a = UniPoly::from_ints(&f3, &[1, 1]);
        let b = UniPoly::from_ints(&f3, &[1, 0, 1]);
        let p = a
            .mul(&a)
            .mul(&a)
            .mul(&b)
            .mul(&b)
            .mul(&UniPoly::t(&f3))
            .scale(&f3.from_int(2));
        let fac = factor(&p).unwrap();
        assert_eq!(fac.unit, f3.from_int(2));
        assert_eq!(fac.expand(&f3), p);
        let mults: Vec<(usize, usize)> = fac
            .factors
            .iter()
            .map(|(f, m)| (f.degree().unwrap(), *m))
            .collect();
        assert_eq!(mults, vec![(1, 1), (1, 3), (2, 2)]);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let f = gf(5);
        assert_eq!(
            factor(&UniPoly::zero(&f)).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(
            roots(&UniPoly::zero(&f), &f).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn roots_of_t2_plus_1() {
        let f3 = gf(3);
        let p = UniPoly::from_ints(&f3, &[1, 0, 1]);
        assert!(roots(&p, &f3).unwrap().is_empty());
        let f9 = gf(9);
        let r = roots(&p, &f9).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(f9.neg(&r[0]), r[1]);
        for x in &r {
            assert!(f9.is_zero(&f9.add(&f9.mul(x, x), &f9.one())));
        }
    }

    #[test]
    fn roots_of_field_polynomial() {
        for q in [2u64, 3, 4, 5, 9] {
            let f = gf(q);
            let mut c = vec![0i64; q as usize + 1];
            c[1] = -1;
            c[q as usize] = 1;
            let p = UniPoly::from_ints(&f, &c);
            let r = roots(&p, &f).unwrap();
            let all: Vec<FieldElement> = f.elements().collect();
            assert_eq!(r, all);
        }
    }

    #[test]
    fn seed_changes_nothing_observable() {
        let f = gf(7);
        let p = UniPoly::from_ints(&f, &[3, 1, 4, 1, 5, 2, 6, 5, 3, 1]);
        let a = factor_with_seed(&p, 0).unwrap();
        let b = factor_with_seed(&p, 12345).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.expand(&f), p);
    }
}
