//! Rational points of P¹ and P¹×P¹, the Segre map, and point counts.

use std::fmt;

use rayon::prelude::*;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Default cap on the number of points a single enumeration may visit.
pub const DEFAULT_POINT_BUDGET: u128 = 100_000_000;

/// A point of P¹, normalized to `(1, t)` or `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    pub u0: FieldElement,
    pub u1: FieldElement,
}

impl ProjPoint {
    /// Normalizes `(u0, u1)`; `None` for `(0, 0)`.
    pub fn new(field: &FieldSpec, u0: FieldElement, u1: FieldElement) -> Option<Self> {
        if u0.is_zero() {
            if u1.is_zero() {
                return None;
            }
            return Some(Self {
                u0,
                u1: field.one(),
            });
        }
        let inv = field.inv(&u0)?;
        Some(Self {
            u0: field.one(),
            u1: field.mul(&u1, &inv),
        })
    }

    pub fn affine(field: &FieldSpec, t: FieldElement) -> Self {
        Self {
            u0: field.one(),
            u1: t,
        }
    }

    pub fn infinity(field: &FieldSpec) -> Self {
        Self {
            u0: field.zero(),
            u1: field.one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.u0.is_zero()
    }
}

/// A point of P¹×P¹ over its owner field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointPair {
    pub first: ProjPoint,
    pub second: ProjPoint,
    pub field: FieldSpec,
}

impl PointPair {
    pub fn new(field: &FieldSpec, first: ProjPoint, second: ProjPoint) -> Self {
        Self {
            first,
            second,
            field: field.clone(),
        }
    }

    /// Value of `poly` here; `poly` must live over the same field.
    pub fn eval(&self, poly: &BiPoly) -> FieldElement {
        poly.eval(
            &self.first.u0,
            &self.first.u1,
            &self.second.u0,
            &self.second.u1,
        )
    }
}

impl fmt::Display for PointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        write!(
            f,
            "({}:{})x({}:{})",
            k.format(&self.first.u0),
            k.format(&self.first.u1),
            k.format(&self.second.u0),
            k.format(&self.second.u1)
        )
    }
}

/// A point of P³ with its first nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct P3Point(pub [FieldElement; 4]);

/// All points of P¹ over `field`: `(1, t)` in enumeration order, then `(0, 1)`.
pub fn enum_p1(field: &FieldSpec) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = field
        .elements()
        .map(|t| ProjPoint::affine(field, t))
        .collect();
    pts.push(ProjPoint::infinity(field));
    pts
}

/// `(u0 v0, u0 v1, u1 v0, u1 v1)`, normalized.
pub fn segre(p: &PointPair) -> P3Point {
    let f = &p.field;
    let (u, v) = (&p.first, &p.second);
    let mut t = [
        f.mul(&u.u0, &v.u0),
        f.mul(&u.u0, &v.u1),
        f.mul(&u.u1, &v.u0),
        f.mul(&u.u1, &v.u1),
    ];
    let lead = t
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("normalized points are nonzero");
    let inv = f.inv(&lead).expect("nonzero");
    for c in t.iter_mut() {
        *c = f.mul(c, &inv);
    }
    P3Point(t)
}

/// The field `GF(q^m)` over `field`.
pub fn extend(field: &FieldSpec, m: usize) -> Result<FieldSpec> {
    field.extension(m)
}

fn check_budget(points: u128, budget: u128) -> Result<()> {
    if points > budget {
        return Err(Error::Infeasible {
            needed: points,
            budget,
        });
    }
    Ok(())
}

/// Number of points of P¹×P¹ over `GF(q^m)` where `poly` vanishes.
pub fn count_points(poly: &BiPoly, m: usize) -> Result<u64> {
    count_points_with_budget(poly, m, DEFAULT_POINT_BUDGET)
}

pub fn count_points_with_budget(poly: &BiPoly, m: usize, budget: u128) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let big = extend(poly.field(), m)?;
    let side = match big.order() {
        Some(n) => n as u128 + 1,
        None => u128::MAX,
    };
    check_budget(side.saturating_mul(side), budget)?;
    let lifted = lift(poly, &big)?;
    let line = enum_p1(&big);
    let count = line
        .par_iter()
        .map(|u| {
            line.iter()
                .filter(|v| lifted.eval(&u.u0, &u.u1, &v.u0, &v.u1).is_zero())
                .count() as u64
        })
        .sum();
    Ok(count)
}

/// Moves `poly` into `big`, which must contain its field.
pub(crate) fn lift(poly: &BiPoly, big: &FieldSpec) -> Result<BiPoly> {
    if poly.field() == big {
        return Ok(poly.clone());
    }
    let emb = crate::gf::Embedding::new(poly.field(), big)?;
    Ok(poly.map_field(&emb))
}

/// Every point of P¹×P¹ over `GF(q^m)` satisfying `pred`, in enumeration order.
pub(crate) fn points_where(
    field: &FieldSpec,
    budget: u128,
    pred: impl Fn(&ProjPoint, &ProjPoint) -> bool + Sync,
) -> Result<Vec<PointPair>> {
    let side = field.order().map_or(u128::MAX, |n| n as u128 + 1);
    check_budget(side.saturating_mul(side), budget)?;
    let line = enum_p1(field);
    let hits: Vec<Vec<PointPair>> = line
        .par_iter()
        .map(|u| {
            line.iter()
                .filter(|v| pred(u, v))
                .map(|v| PointPair::new(field, u.clone(), v.clone()))
                .collect()
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;
    use std::collections::HashSet;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn p1_sizes_and_order() {
        let f = gf(2);
        let pts = enum_p1(&f);
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0], ProjPoint::affine(&f, f.zero()));
        assert_eq!(pts[1], ProjPoint::affine(&f, f.one()));
        assert!(pts[2].is_infinity());
        assert_eq!(enum_p1(&gf(4)).len(), 5);
        assert_eq!(enum_p1(&gf(3).extension(2).unwrap()).len(), 10);
    }

    #[test]
    fn normalization() {
        let f = gf(5);
        let p = ProjPoint::new(&f, f.from_int(2), f.from_int(4)).unwrap();
        assert_eq!(p, ProjPoint::affine(&f, f.from_int(2)));
        let p = ProjPoint::new(&f, f.zero(), f.from_int(3)).unwrap();
        assert!(p.is_infinity());
        assert!(ProjPoint::new(&f, f.zero(), f.zero()).is_none());
    }

    #[test]
    fn segre_images() {
        let f = gf(2);
        let line = enum_p1(&f);
        let mut seen = HashSet::new();
        for u in &line {
            for v in &line {
                let P3Point(t) = segre(&PointPair::new(&f, u.clone(), v.clone()));
                assert_eq!(f.mul(&t[0], &t[3]), f.mul(&t[1], &t[2]));
                seen.insert(t);
            }
        }
        assert_eq!(seen.len(), 9);
        let inf = PointPair::new(&f, ProjPoint::infinity(&f), ProjPoint::infinity(&f));
        assert_eq!(segre(&inf).0, [f.zero(), f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn display() {
        let f = gf(3);
        let p = PointPair::new(
            &f,
            ProjPoint::affine(&f, f.from_int(2)),
            ProjPoint::infinity(&f),
        );
        assert_eq!(p.to_string(), "(1:2)x(0:1)");
    }

    #[test]
    fn counts() {
        let f = gf(3);
        let kx = parse_bipoly("X0^3*X1 - X0*X1^3", &f).unwrap();
        assert_eq!(count_points(&kx, 1).unwrap(), 16);
        // Over GF(9) the curve is still the union of the 4 rational X-fibers.
        assert_eq!(count_points(&kx, 2).unwrap(), 40);
        let x0 = parse_bipoly("X0*Y0", &f).unwrap();
        assert_eq!(count_points(&x0, 1).unwrap(), 7);
    }

    #[test]
    fn budget_guard() {
        let f = gf(3);
        let p = parse_bipoly("X0*Y0", &f).unwrap();
        assert!(matches!(
            count_points_with_budget(&p, 1, 10),
            Err(Error::Infeasible {
                needed: 16,
                budget: 10
            })
        ));
    }
}
