//! Filling tests and the decomposition `F = f*K_X + g*K_Y`.

use serde::Serialize;

use crate::bipoly::{BiPoly, Chart};
use crate::error::{Error, Result};
use crate::geom::enum_p1;
use crate::gf::{FieldElement, FieldSpec};

/// Order of `field` as a machine integer.
pub(crate) fn order_of(field: &FieldSpec) -> usize {
    field.order().expect("field small enough to enumerate") as usize
}

/// `K_X = X0^q X1 - X0 X1^q` and `K_Y = Y0^q Y1 - Y0 Y1^q`.
pub fn kx_ky(field: &FieldSpec) -> (BiPoly, BiPoly) {
    let q = order_of(field);
    let mut c = vec![field.zero(); q + 2];
    c[1] = field.one();
    c[q] = field.neg(&field.one());
    (BiPoly::x_form(field, c.clone()), BiPoly::y_form(field, c))
}

/// True when `poly` vanishes at every rational point of P¹×P¹.
pub fn is_filling(poly: &BiPoly) -> Result<bool> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let line = enum_p1(poly.field());
    Ok(line.iter().all(|u| {
        line.iter()
            .all(|v| poly.eval(&u.u0, &u.u1, &v.u0, &v.u1).is_zero())
    }))
}

/// The rational fibers `u1*X0 - u0*X1` (`first`) or their `Y` analogues,
/// one per point of P¹ over the polynomial field.
pub fn fiber_forms(field: &FieldSpec, first: bool) -> Vec<BiPoly> {
    enum_p1(field)
        .into_iter()
        .map(|p| {
            let c = vec![p.u1.clone(), field.neg(&p.u0)];
            if first {
                BiPoly::x_form(field, c)
            } else {
                BiPoly::y_form(field, c)
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub f: BiPoly,
    pub g: BiPoly,
    pub kx: BiPoly,
    pub ky: BiPoly,
}

impl Decomposition {
    /// `f*K_X + g*K_Y`.
    pub fn recombine(&self) -> BiPoly {
        let left = self.f.mul(&self.kx).expect("same field");
        let right = self.g.mul(&self.ky).expect("same field");
        left.add(&right).expect("bi-degrees agree")
    }

    pub fn to_json(&self, source: &BiPoly) -> serde_json::Value {
        serde_json::json!({
            "f": self.f.to_text(),
            "g": self.g.to_text(),
            "f_bidegree": [self.f.a(), self.f.b()],
            "g_bidegree": [self.g.a(), self.g.b()],
            "verified": self.recombine() == *source,
        })
    }
}

/// Divides `x^q - x` (or `y^q - y`) out of an affine coefficient table,
/// returning `(quotient, remainder)` tables of the same shape.
fn reduce_fermat(
    c: &[Vec<FieldElement>],
    q: usize,
    in_x: bool,
    field: &FieldSpec,
) -> (Vec<Vec<FieldElement>>, Vec<Vec<FieldElement>>) {
    let (nx, ny) = (c.len(), c[0].len());
    let mut rem = c.to_vec();
    let mut quo = vec![vec![field.zero(); ny]; nx];
    if in_x {
        for i in (q..nx).rev() {
            for j in 0..ny {
                let t = std::mem::replace(&mut rem[i][j], field.zero());
                if t.is_zero() {
                    continue;
                }
                quo[i - q][j] = field.add(&quo[i - q][j], &t);
                rem[i - q + 1][j] = field.add(&rem[i - q + 1][j], &t);
            }
        }
    } else {
        for j in (q..ny).rev() {
            for row in 0..nx {
                let t = std::mem::replace(&mut rem[row][j], field.zero());
                if t.is_zero() {
                    continue;
                }
                quo[row][j - q] = field.add(&quo[row][j - q], &t);
                rem[row][j - q + 1] = field.add(&rem[row][j - q + 1], &t);
            }
        }
    }
    (quo, rem)
}

/// Writes a filling `poly` of bi-degree `(a, b)`, `a, b >= q+1`, as
/// `f*K_X + g*K_Y` with `f` of bi-degree `(a-q-1, b)` and `g` of bi-degree
/// `(a, b-q-1)`.
///
/// The affine part is reduced modulo `x^q - x` and then `y^q - y`; the two
/// boundary rows are then pushed across using the divisibility of the
/// leftover pieces by the rational-point forms. The pair `(f, g)` is not
/// unique; this routine returns one deterministic choice.
pub fn decompose(poly: &BiPoly) -> Result<Decomposition> {
    let field = poly.field();
    let q = order_of(field);
    let (a, b) = poly.bidegree();
    if a < q + 1 || b < q + 1 {
        return Err(Error::BidegreeTooSmall { a, b, min: q + 1 });
    }
    if !is_filling(poly)? {
        return Err(Error::NotFilling);
    }
    let aff = poly.dehomogenize(Chart::X0Y0);
    let table: Vec<Vec<_>> = (0..=a)
        .map(|i| (0..=b).map(|j| aff.get(i, j).clone()).collect())
        .collect();
    let (u, r) = reduce_fermat(&table, q, true, field);
    let (v, r2) = reduce_fermat(&r, q, false, field);
    if r2.iter().flatten().any(|c| !c.is_zero()) {
        return Err(Error::NotFilling);
    }
    // poly = U*A + V*B with A = X1^q - X0^(q-1) X1 and B = Y1^q - Y0^(q-1) Y1.
    let big_u = BiPoly::from_fn(field, a - q, b, |i, j| u[i][j].clone());
    let big_v = BiPoly::from_fn(field, a, b - q, |i, j| v[i][j].clone());
    let mut ab = vec![field.zero(); q + 1];
    ab[q] = field.one();
    ab[1] = field.sub(&ab[1], &field.one());
    let form_a = BiPoly::x_form(field, ab.clone());
    let form_b = BiPoly::y_form(field, ab);
    let x1_pow = |k: usize| BiPoly::monomial(field, k, 0, k, 0, field.one());
    let y1_pow = |k: usize| BiPoly::monomial(field, 0, k, 0, k, field.one());

    // Part of U free of X0; it vanishes at the affine rational Y points.
    let f1 = BiPoly::from_fn(field, 0, b, |_, j| big_u.get(a - q, j).clone());
    let f2 = f1.divide_by(&form_b)?.ok_or(Error::NotFilling)?;
    let u0 = big_u
        .sub(&x1_pow(a - q).mul(&f1)?)?
        .shrink_first(1, false)
        .expect("top row removed");
    let v0 = big_v.add(&x1_pow(a - q).mul(&f2)?.mul(&form_a)?)?;

    // Part of V0 free of Y0; it vanishes at every rational X point.
    let g1 = BiPoly::from_fn(field, a, 0, |i, _| v0.get(i, b - q).clone());
    let (kx, ky) = kx_ky(field);
    let f3 = g1.divide_by(&kx)?.ok_or(Error::NotFilling)?;
    let v1 = v0
        .sub(&g1.mul(&y1_pow(b - q))?)?
        .shrink_first(1, true)
        .expect("last column removed");

    let f = f3.mul(&y1_pow(b - q))?.mul(&form_b)?.sub(&u0)?;
    let g = v1.neg();
    let dec = Decomposition { f, g, kx, ky };
    debug_assert_eq!(dec.recombine(), *poly);
    Ok(dec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Diagnostic {
    Consistent,
    Contradiction,
}

/// Flags an irreducible filling polynomial whose bi-degree is below
/// `(q+1, q+1)`, which cannot exist.
pub fn min_bidegree_check(poly: &BiPoly, irreducible: bool) -> Diagnostic {
    let q = order_of(poly.field());
    if irreducible && (poly.a() < q + 1 || poly.b() < q + 1) {
        Diagnostic::Contradiction
    } else {
        Diagnostic::Consistent
    }
}
