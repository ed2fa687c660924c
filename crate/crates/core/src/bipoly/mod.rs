//! Bi-homogeneous polynomials in `(X0, X1; Y0, Y1)`.
//!
//! A [`BiPoly`] of bi-degree `(a, b)` stores an `(a+1) x (b+1)` coefficient
//! matrix; entry `(i, j)` multiplies `X0^(a-i) X1^i Y0^(b-j) Y1^j`, so every
//! stored monomial has the exact bi-degree.

mod affine;
mod parse;
mod resultant;

pub use affine::{AffinePoly, AffineVar, Chart};
pub use parse::parse_bipoly;
pub use resultant::resultant_elim;

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Embedding, FieldElement, FieldSpec};

/// One of the four homogeneous coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X0,
    X1,
    Y0,
    Y1,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X0, Var::X1, Var::Y0, Var::Y1];

    pub fn name(self) -> &'static str {
        match self {
            Var::X0 => "X0",
            Var::X1 => "X1",
            Var::Y0 => "Y0",
            Var::Y1 => "Y1",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    field: FieldSpec,
    a: usize,
    b: usize,
    coeffs: Vec<FieldElement>,
}

impl BiPoly {
    pub fn zero(field: &FieldSpec, a: usize, b: usize) -> Self {
        Self {
            field: field.clone(),
            a,
            b,
            coeffs: vec![field.zero(); (a + 1) * (b + 1)],
        }
    }

    /// Builds from a row-major coefficient list of length `(a+1)(b+1)`.
    pub fn from_coeffs(
        field: &FieldSpec,
        a: usize,
        b: usize,
        coeffs: Vec<FieldElement>,
    ) -> Result<Self> {
        if coeffs.len() != (a + 1) * (b + 1) {
            return Err(Error::BadShape(format!(
                "{} coefficients for bi-degree ({a},{b})",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self {
            field: field.clone(),
            a,
            b,
            coeffs,
        })
    }

    pub fn from_fn(
        field: &FieldSpec,
        a: usize,
        b: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut coeffs = Vec::with_capacity((a + 1) * (b + 1));
        for i in 0..=a {
            for j in 0..=b {
                coeffs.push(f(i, j));
            }
        }
        Self {
            field: field.clone(),
            a,
            b,
            coeffs,
        }
    }

    /// `c * X0^(a-i) X1^i Y0^(b-j) Y1^j`.
    pub fn monomial(
        field: &FieldSpec,
        a: usize,
        b: usize,
        i: usize,
        j: usize,
        c: FieldElement,
    ) -> Self {
        let mut p = Self::zero(field, a, b);
        p.set(i, j, c);
        p
    }

    /// Binary form in `X` of degree `coeffs.len() - 1`; `coeffs[i]` multiplies
    /// `X0^(a-i) X1^i`.
    pub fn x_form(field: &FieldSpec, coeffs: Vec<FieldElement>) -> Self {
        let a = coeffs.len().saturating_sub(1);
        Self {
            field: field.clone(),
            a,
            b: 0,
            coeffs,
        }
    }

    /// Binary form in `Y`; `coeffs[j]` multiplies `Y0^(b-j) Y1^j`.
    pub fn y_form(field: &FieldSpec, coeffs: Vec<FieldElement>) -> Self {
        let b = coeffs.len().saturating_sub(1);
        Self {
            field: field.clone(),
            a: 0,
            b,
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// Row-major coefficients.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.coeffs[i * (self.b + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: FieldElement) {
        let b = self.b;
        self.coeffs[i * (b + 1) + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms as `(i, j, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &FieldElement)> + '_ {
        let w = self.b + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / w, k % w, c))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        self.same_field(other)?;
        if self.bidegree() != other.bidegree() {
            return Err(Error::BidegreeMismatch(self.a, self.b, other.a, other.b));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| f.add(x, y))
            .collect();
        Ok(Self {
            coeffs,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| f.sub(x, y))
            .collect();
        Ok(Self {
            coeffs,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self {
            coeffs: self.coeffs.iter().map(|x| f.neg(x)).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let f = &self.field;
        Self {
            coeffs: self.coeffs.iter().map(|x| f.mul(x, c)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let f = &self.field;
        let mut out = Self::zero(f, self.a + other.a, self.b + other.b);
        for (i, j, c) in self.terms() {
            for (k, l, d) in other.terms() {
                let slot = (i + k) * (out.b + 1) + j + l;
                out.coeffs[slot] = f.add(&out.coeffs[slot], &f.mul(c, d));
            }
        }
        Ok(out)
    }

    /// `self^n`.
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::monomial(&self.field, 0, 0, 0, 0, self.field.one());
        for _ in 0..n {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Swaps the `X` and `Y` blocks.
    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.b, self.a, |i, j| self.get(j, i).clone())
    }

    /// Value at `(x0, x1; y0, y1)`, all coordinates in the owner field.
    pub fn eval(
        &self,
        x0: &FieldElement,
        x1: &FieldElement,
        y0: &FieldElement,
        y1: &FieldElement,
    ) -> FieldElement {
        let f = &self.field;
        let powers = |base: &FieldElement, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            let mut acc = f.one();
            for k in 0..=n {
                if k > 0 {
                    acc = f.mul(&acc, base);
                }
                v.push(acc.clone());
            }
            v
        };
        let (px0, px1) = (powers(x0, self.a), powers(x1, self.a));
        let (py0, py1) = (powers(y0, self.b), powers(y1, self.b));
        let ymon: Vec<FieldElement> = (0..=self.b)
            .map(|j| f.mul(&py0[self.b - j], &py1[j]))
            .collect();
        let mut total = f.zero();
        for i in 0..=self.a {
            let mut row = f.zero();
            for (j, ym) in ymon.iter().enumerate() {
                let c = self.get(i, j);
                if !c.is_zero() {
                    row = f.add(&row, &f.mul(c, ym));
                }
            }
            if !row.is_zero() {
                total = f.add(&total, &f.mul(&row, &f.mul(&px0[self.a - i], &px1[i])));
            }
        }
        total
    }

    /// Formal partial derivative. A variable block of degree 0 yields the zero
    /// polynomial with the degree clamped at 0.
    pub fn partial(&self, var: Var) -> Self {
        let f = &self.field;
        let (a, b) = (self.a, self.b);
        match var {
            Var::X0 | Var::X1 if a == 0 => Self::zero(f, 0, b),
            Var::Y0 | Var::Y1 if b == 0 => Self::zero(f, a, 0),
            Var::X0 => Self::from_fn(f, a - 1, b, |i, j| {
                f.mul_int(self.get(i, j), (a - i) as i64)
            }),
            Var::X1 => Self::from_fn(f, a - 1, b, |i, j| {
                f.mul_int(self.get(i + 1, j), (i + 1) as i64)
            }),
            Var::Y0 => Self::from_fn(f, a, b - 1, |i, j| {
                f.mul_int(self.get(i, j), (b - j) as i64)
            }),
            Var::Y1 => Self::from_fn(f, a, b - 1, |i, j| {
                f.mul_int(self.get(i, j + 1), (j + 1) as i64)
            }),
        }
    }

    /// `[F, F_X0, F_X1, F_Y0, F_Y1]`.
    pub fn with_partials(&self) -> [BiPoly; 5] {
        [
            self.clone(),
            self.partial(Var::X0),
            self.partial(Var::X1),
            self.partial(Var::Y0),
            self.partial(Var::Y1),
        ]
    }

    /// Moves every coefficient into a larger field.
    pub fn map_field(&self, emb: &Embedding) -> Self {
        Self {
            field: emb.target().clone(),
            a: self.a,
            b: self.b,
            coeffs: self.coeffs.iter().map(|c| emb.apply(c)).collect(),
        }
    }

    /// Cofactor `H` with `G * H = self`, if one exists.
    ///
    /// Exact division with respect to the lexicographic order on
    /// `(X1-exponent, Y1-exponent)`; for a single divisor the remainder is
    /// zero exactly when the divisor divides.
    pub fn divide_by(&self, g: &BiPoly) -> Result<Option<BiPoly>> {
        self.same_field(g)?;
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if g.a > self.a || g.b > self.b {
            return Ok(None);
        }
        let f = &self.field;
        let (ha, hb) = (self.a - g.a, self.b - g.b);
        let (li, lj, lc) = g
            .terms()
            .last()
            .map(|(i, j, c)| (i, j, c.clone()))
            .expect("nonzero");
        let inv_lc = f.inv(&lc).expect("nonzero");
        let g_terms: Vec<(usize, usize, FieldElement)> =
            g.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
        let mut rem = self.clone();
        let mut h = BiPoly::zero(f, ha, hb);
        for k in (0..rem.coeffs.len()).rev() {
            if rem.coeffs[k].is_zero() {
                continue;
            }
            let (ri, rj) = (k / (self.b + 1), k % (self.b + 1));
            if ri < li || rj < lj || ri - li > ha || rj - lj > hb {
                return Ok(None);
            }
            let (si, sj) = (ri - li, rj - lj);
            let c = f.mul(&rem.coeffs[k], &inv_lc);
            for (gi, gj, gc) in &g_terms {
                let slot = (gi + si) * (self.b + 1) + gj + sj;
                rem.coeffs[slot] = f.sub(&rem.coeffs[slot], &f.mul(&c, gc));
            }
            h.set(si, sj, c);
        }
        Ok(Some(h))
    }

    /// Divides by `X0^k` (`Y0^k` when `y` is set) if possible.
    pub(crate) fn shrink_first(&self, k: usize, y: bool) -> Option<BiPoly> {
        let f = &self.field;
        if y {
            if k > self.b
                || (0..=self.a)
                    .any(|i| (self.b - k + 1..=self.b).any(|j| !self.get(i, j).is_zero()))
            {
                return None;
            }
            Some(Self::from_fn(f, self.a, self.b - k, |i, j| {
                self.get(i, j).clone()
            }))
        } else {
            if k > self.a
                || (self.a - k + 1..=self.a)
                    .any(|i| (0..=self.b).any(|j| !self.get(i, j).is_zero()))
            {
                return None;
            }
            Some(Self::from_fn(f, self.a - k, self.b, |i, j| {
                self.get(i, j).clone()
            }))
        }
    }

    /// Canonical text (see [`parse_bipoly`] for the grammar).
    pub fn to_text(&self) -> String {
        parse::print(self)
    }

    /// `{"bidegree":[a,b],"coeffs":[[...]...],"field":{...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..=self.a)
            .map(|i| {
                serde_json::Value::Array(
                    (0..=self.b)
                        .map(|j| self.field.to_json(self.get(i, j)))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "bidegree": [self.a, self.b],
            "coeffs": rows,
            "field": self.field.describe(),
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Checked exact division: `Some(H)` with `G * H = F`.
pub fn divides(g: &BiPoly, f: &BiPoly) -> Result<Option<BiPoly>> {
    f.divide_by(g)
}
