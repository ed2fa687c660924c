use std::fmt;

use serde::{Deserialize, Serialize};

use super::BiPoly;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec, UniPoly};

/// Which coordinate of each block is set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chart {
    X0Y0,
    X0Y1,
    X1Y0,
    X1Y1,
}

impl Chart {
    pub const ALL: [Chart; 4] = [Chart::X0Y0, Chart::X0Y1, Chart::X1Y0, Chart::X1Y1];

    /// True when `X1` (not `X0`) is set to 1.
    pub fn x_flipped(self) -> bool {
        matches!(self, Chart::X1Y0 | Chart::X1Y1)
    }

    pub fn y_flipped(self) -> bool {
        matches!(self, Chart::X0Y1 | Chart::X1Y1)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Chart::X0Y0 => "(X0,Y0)",
            Chart::X0Y1 => "(X0,Y1)",
            Chart::X1Y0 => "(X1,Y0)",
            Chart::X1Y1 => "(X1,Y1)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AffineVar {
    X,
    Y,
}

impl AffineVar {
    pub fn other(self) -> Self {
        match self {
            AffineVar::X => AffineVar::Y,
            AffineVar::Y => AffineVar::X,
        }
    }
}

/// Polynomial in chart variables `x, y`, stored as a `(dx+1) x (dy+1)`
/// matrix with explicit degree bounds; entry `(i, j)` multiplies `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffinePoly {
    field: FieldSpec,
    dx: usize,
    dy: usize,
    coeffs: Vec<FieldElement>,
}

impl AffinePoly {
    pub fn zero(field: &FieldSpec, dx: usize, dy: usize) -> Self {
        Self {
            field: field.clone(),
            dx,
            dy,
            coeffs: vec![field.zero(); (dx + 1) * (dy + 1)],
        }
    }

    /// From `(i, j, c)` triples meaning `c * x^i * y^j`; bounds grow to fit.
    pub fn from_terms(field: &FieldSpec, terms: &[(usize, usize, i64)]) -> Self {
        let dx = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let dy = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut p = Self::zero(field, dx, dy);
        for &(i, j, c) in terms {
            let v = field.add(p.get(i, j), &field.from_int(c));
            p.set(i, j, v);
        }
        p
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Declared degree bounds `(dx, dy)`.
    pub fn bounds(&self) -> (usize, usize) {
        (self.dx, self.dy)
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.coeffs[i * (self.dy + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: FieldElement) {
        let w = self.dy + 1;
        self.coeffs[i * w + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn terms(&self) -> impl Iterator<Item = (usize, usize, &FieldElement)> + '_ {
        let w = self.dy + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / w, k % w, c))
    }

    /// Actual degree in `var` (`None` for the zero polynomial).
    pub fn degree_in(&self, var: AffineVar) -> Option<usize> {
        self.terms()
            .map(|(i, j, _)| if var == AffineVar::X { i } else { j })
            .max()
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let f = &self.field;
        let mut total = f.zero();
        for i in (0..=self.dx).rev() {
            let mut row = f.zero();
            for j in (0..=self.dy).rev() {
                row = f.add(&f.mul(&row, y), self.get(i, j));
            }
            total = f.add(&f.mul(&total, x), &row);
        }
        total
    }

    /// Coefficients as a polynomial in `var`: entry `k` is the coefficient of
    /// `var^k`, a polynomial in the other variable. Trimmed to the actual
    /// degree in `var`.
    pub fn coefficients_in(&self, var: AffineVar) -> Vec<UniPoly> {
        let f = &self.field;
        let deg = match self.degree_in(var) {
            None => return Vec::new(),
            Some(d) => d,
        };
        (0..=deg)
            .map(|k| match var {
                AffineVar::Y => {
                    UniPoly::new(f, (0..=self.dx).map(|i| self.get(i, k).clone()).collect())
                }
                AffineVar::X => {
                    UniPoly::new(f, (0..=self.dy).map(|j| self.get(k, j).clone()).collect())
                }
            })
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(field: &FieldSpec, var: AffineVar, parts: &[UniPoly]) -> Self {
        let outer = parts.len().saturating_sub(1);
        let inner = parts.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        let (dx, dy) = match var {
            AffineVar::Y => (inner, outer),
            AffineVar::X => (outer, inner),
        };
        let mut out = Self::zero(field, dx, dy);
        for (k, part) in parts.iter().enumerate() {
            for (l, c) in part.coeffs().iter().enumerate() {
                match var {
                    AffineVar::Y => out.set(l, k, c.clone()),
                    AffineVar::X => out.set(k, l, c.clone()),
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut out = Self::zero(f, self.dx + other.dx, self.dy + other.dy);
        for (i, j, c) in self.terms() {
            for (k, l, d) in other.terms() {
                let v = f.add(out.get(i + k, j + l), &f.mul(c, d));
                out.set(i + k, j + l, v);
            }
        }
        Ok(out)
    }

    /// Exchanges `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero(&self.field, self.dy, self.dx);
        for (i, j, c) in self.terms() {
            out.set(j, i, c.clone());
        }
        out
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = Vec::new();
        for (i, j, c) in self.terms() {
            let mut vars = Vec::new();
            match i {
                0 => {}
                1 => vars.push("x".to_string()),
                _ => vars.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => vars.push("y".to_string()),
                _ => vars.push(format!("y^{j}")),
            }
            let term = match (vars.is_empty(), f.is_one(c)) {
                (true, _) => f.format(c),
                (false, true) => vars.join("*"),
                (false, false) => format!("{}*{}", f.format(c), vars.join("*")),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl BiPoly {
    /// Sets the chart's two coordinates to 1. Chart variable `x` is the other
    /// `X` coordinate, `y` the other `Y` coordinate.
    pub fn dehomogenize(&self, chart: Chart) -> AffinePoly {
        let mut out = AffinePoly::zero(self.field(), self.a(), self.b());
        for (i, j, c) in self.terms() {
            let xi = if chart.x_flipped() { self.a() - i } else { i };
            let yj = if chart.y_flipped() { self.b() - j } else { j };
            out.set(xi, yj, c.clone());
        }
        out
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) at bi-degree `(a, b)`.
    pub fn homogenize(p: &AffinePoly, chart: Chart, a: usize, b: usize) -> Result<BiPoly> {
        let mut out = BiPoly::zero(p.field(), a, b);
        for (i, j, c) in p.terms() {
            if i > a || j > b {
                return Err(Error::BadShape(format!(
                    "term x^{i} y^{j} does not fit bi-degree ({a},{b})"
                )));
            }
            let bi = if chart.x_flipped() { a - i } else { i };
            let bj = if chart.y_flipped() { b - j } else { j };
            out.set(bi, bj, c.clone());
        }
        Ok(out)
    }
}
