use std::fmt::Write as _;

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// Univariate polynomial over a [`FieldSpec`], constant term first, with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &FieldSpec, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(field: &FieldSpec, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// The polynomial `t`.
    pub fn t(field: &FieldSpec) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// Polynomial from small integers, constant term first.
    pub fn from_ints(field: &FieldSpec, ints: &[i64]) -> Self {
        Self::new(field, ints.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lead(&self) -> &FieldElement {
        self.coeffs
            .last()
            .expect("leading coefficient of the zero polynomial")
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        )
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        Self::new(
            &self.field,
            self.coeffs.iter().map(|x| self.field.mul(x, c)).collect(),
        )
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Self::new(f, out)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero lead")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    /// Quotient and remainder.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.lead()).expect("nonzero lead");
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv_lead);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor)
            .expect("nonzero divisor in same field")
            .1
    }

    /// Quotient of an exact division; `None` if there is a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` monic (or zero).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.coeffs.last() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = f.inv(lc).expect("nonzero lead");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul_int(c, i as i64))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    /// `self^n mod modulus`.
    pub fn pow_mod(&self, mut n: u128, modulus: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(modulus);
        let mut sq = self.rem(modulus);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_mod(&sq, modulus);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul_mod(&sq, modulus);
            }
        }
        acc
    }

    /// `self^(|F|) mod modulus`, by repeated `p`-th powers.
    pub fn frobenius_mod(&self, modulus: &Self) -> Self {
        let p = self.field.characteristic() as u128;
        let mut h = self.rem(modulus);
        for _ in 0..self.field.width() {
            h = h.pow_mod(p, modulus);
        }
        h
    }

    /// Rabin's test: a degree-`n` polynomial is irreducible iff it has no
    /// common factor with `t^(Q^i) - t` for `i <= n/2`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let t = Self::t(&self.field);
        let mut h = t.clone();
        for _ in 1..=n / 2 {
            h = h.frobenius_mod(&f);
            if !f.gcd(&h.sub(&t)).is_one() {
                return false;
            }
        }
        true
    }

    /// Text such as `t^2 + 2*t + 1` (coefficients in field-element syntax).
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let cs = f.format(c);
            match (k, f.is_one(c)) {
                (0, _) => out.push_str(&cs),
                (_, true) => {}
                _ => {
                    let _ = write!(out, "{cs}*");
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    let _ = write!(out, "{var}^{k}");
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| self.field.to_json(c)).collect())
    }
}

/// Checked gcd: both inputs must share a field.
pub fn unipoly_gcd(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    f.check(g)?;
    Ok(f.gcd(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let f5 = gf(5);
        let a = UniPoly::from_ints(&f5, &[-1, 0, 1]);
        let b = UniPoly::from_ints(&f5, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let c = UniPoly::from_ints(&f5, &[0, 0, 2]);
        assert_eq!(c.gcd(&UniPoly::zero(&f5)), c.monic());
        let sq = UniPoly::from_ints(&f5, &[0, 0, 1]);
        assert_eq!(sq.gcd(&sq.derivative()), UniPoly::t(&f5));
        assert!(UniPoly::zero(&f5).gcd(&UniPoly::zero(&f5)).is_zero());
    }

    #[test]
    fn gcd_field_mismatch() {
        let a = UniPoly::t(&gf(3));
        let b = UniPoly::t(&gf(5));
        assert_eq!(unipoly_gcd(&a, &b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = gf(7);
        let a = UniPoly::from_ints(&f, &[1, 2, 3, 4, 5]);
        let b = UniPoly::from_ints(&f, &[6, 0, 1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert!(g.is_monic());
    }

    #[test]
    fn divrem_reconstructs() {
        let f = gf(9);
        let a = UniPoly::new(&f, (0..7).map(|i| f.from_index(i)).collect());
        let b = UniPoly::new(&f, (3..6).map(|i| f.from_index(i)).collect());
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
        assert_eq!(
            a.divrem(&UniPoly::zero(&f)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn irreducibility() {
        let f2 = gf(2);
        assert!(UniPoly::from_ints(&f2, &[1, 1, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&f2, &[1, 0, 1]).is_irreducible());
        let f3 = gf(3);
        assert!(UniPoly::from_ints(&f3, &[1, 0, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&f3, &[2, 0, 1]).is_irreducible());
        // degree 4 with no roots but two quadratic factors: (t^2+1)^2 over GF(3)
        let q = UniPoly::from_ints(&f3, &[1, 0, 1]);
        assert!(!q.mul(&q).is_irreducible());
    }

    #[test]
    fn display_text() {
        let f = gf(3);
        let p = UniPoly::from_ints(&f, &[1, 2, 0, 1]);
        assert_eq!(p.display("t"), "t^3 + 2*t + 1");
    }
}
