//! Singular points, the reduced system for `f*K_X + g*K_Y`, and absolute
//! irreducibility.

mod irreducible;
mod smooth;

pub use irreducible::{
    find_gf_factor, irreducible_method_a, irreducible_method_b, is_abs_irreducible, method_b_cost,
    IrrMethod, Irreducibility, DEFAULT_FACTOR_BUDGET,
};
pub use smooth::{certify_smooth, SmoothCertificate, TraceEntry, Verdict, Witness, MEMBER_NAMES};

use crate::bipoly::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::filling::order_of;
use crate::geom::{enum_p1, extend, lift, points_where, PointPair, DEFAULT_POINT_BUDGET};
use crate::gf::{FieldSpec, UniPoly};

/// Singular points found over one extension `GF(q^m)`.
#[derive(Clone, Debug)]
pub struct SingularLevel {
    pub degree: usize,
    pub field: FieldSpec,
    pub points: Vec<PointPair>,
}

/// Brute-force common zeros of `F` and its four partials over
/// `GF(q^m)` for `m = 1..=m_max`.
pub fn singular_points(poly: &BiPoly, m_max: usize) -> Result<Vec<SingularLevel>> {
    singular_points_with_budget(poly, m_max, DEFAULT_POINT_BUDGET)
}

pub fn singular_points_with_budget(
    poly: &BiPoly,
    m_max: usize,
    budget: u128,
) -> Result<Vec<SingularLevel>> {
    if m_max == 0 {
        return Err(Error::ZeroDegree);
    }
    (1..=m_max)
        .map(|m| {
            let big = extend(poly.field(), m)?;
            let system: Vec<BiPoly> = poly
                .with_partials()
                .iter()
                .map(|p| lift(p, &big))
                .collect::<Result<_>>()?;
            let points = points_where(&big, budget, |u, v| {
                system
                    .iter()
                    .all(|p| p.eval(&u.u0, &u.u1, &v.u0, &v.u1).is_zero())
            })?;
            Ok(SingularLevel {
                degree: m,
                field: big,
                points,
            })
        })
        .collect()
}

/// Common zeros over `GF(q^m)` of every polynomial in `system` (all over the
/// same field as `system[0]`).
pub fn common_zeros(system: &[BiPoly], m: usize) -> Result<Vec<PointPair>> {
    let big = extend(system[0].field(), m)?;
    let lifted: Vec<BiPoly> = system
        .iter()
        .map(|p| lift(p, &big))
        .collect::<Result<_>>()?;
    points_where(&big, DEFAULT_POINT_BUDGET, |u, v| {
        lifted
            .iter()
            .all(|p| p.eval(&u.u0, &u.u1, &v.u0, &v.u1).is_zero())
    })
}

/// The four equations `E1..E4` obtained by clearing denominators in the
/// ratio form of the singular-point system for `f*K_X + g*K_Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSystem {
    pub equations: [BiPoly; 4],
}

fn check_shapes(f: &BiPoly, g: &BiPoly) -> Result<usize> {
    let q = order_of(f.field());
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    if f.bidegree() != (0, q + 1) {
        return Err(Error::BadShape(format!(
            "f must have bi-degree (0,{}), got ({},{})",
            q + 1,
            f.a(),
            f.b()
        )));
    }
    if g.bidegree() != (q + 1, 0) {
        return Err(Error::BadShape(format!(
            "g must have bi-degree ({},0), got ({},{})",
            q + 1,
            g.a(),
            g.b()
        )));
    }
    Ok(q)
}

pub fn reduced_system(f: &BiPoly, g: &BiPoly) -> Result<ReducedSystem> {
    let q = check_shapes(f, g)?;
    let field = f.field();
    let one = field.one();
    let xpow = |i| BiPoly::monomial(field, q, 0, i, 0, one.clone());
    let ypow = |j| BiPoly::monomial(field, 0, q, 0, j, one.clone());
    let (x0q, x1q, y0q, y1q) = (xpow(0), xpow(q), ypow(0), ypow(q));
    let (fy0, fy1) = (f.partial(Var::Y0), f.partial(Var::Y1));
    let (gx0, gx1) = (g.partial(Var::X0), g.partial(Var::X1));
    let e1 = x0q.mul(&fy1)?.add(&y0q.mul(&gx1)?)?;
    let e2 = x0q.mul(&fy0)?.sub(&y1q.mul(&gx1)?)?;
    let e3 = x1q.mul(&fy1)?.sub(&y0q.mul(&gx0)?)?;
    let e4 = x1q.mul(&fy0)?.add(&y1q.mul(&gx0)?)?;
    Ok(ReducedSystem {
        equations: [e1, e2, e3, e4],
    })
}

/// Binary form of degree `n` as `(affine part, coefficient of the last
/// variable's top power)`; `coeffs[k]` multiplies `Z0^(n-k) Z1^k`.
fn form_problems(
    coeffs: &[crate::gf::FieldElement],
    field: &FieldSpec,
    name: &str,
) -> Option<String> {
    let n = coeffs.len() - 1;
    let affine = UniPoly::new(field, coeffs.to_vec());
    if affine.is_zero() {
        return Some(format!("{name} is zero"));
    }
    let deg = affine.degree().unwrap_or(0);
    // multiplicity of the zero at (0:1) is n - deg
    if n - deg >= 2 {
        return Some(format!("{name} has a multiple zero at (0:1)"));
    }
    if !affine.gcd(&affine.derivative()).is_constant() {
        return Some(format!("{name} has a multiple zero"));
    }
    for p in enum_p1(field) {
        let v = if p.is_infinity() {
            coeffs[n].clone()
        } else {
            affine.eval(&p.u1)
        };
        if v.is_zero() {
            return Some(format!("{name} vanishes at a rational point"));
        }
    }
    None
}

/// The first violated condition on `(f, g)`, if any: both must be squarefree
/// on P¹ and free of rational zeros.
pub fn setup_problem(f: &BiPoly, g: &BiPoly) -> Result<Option<String>> {
    let q = check_shapes(f, g)?;
    let field = f.field();
    let fc: Vec<_> = (0..=q + 1).map(|j| f.get(0, j).clone()).collect();
    let gc: Vec<_> = (0..=q + 1).map(|i| g.get(i, 0).clone()).collect();
    Ok(form_problems(&fc, field, "f").or_else(|| form_problems(&gc, field, "g")))
}

pub fn validate_setup(f: &BiPoly, g: &BiPoly) -> Result<bool> {
    Ok(setup_problem(f, g)?.is_none())
}
