//! The explicit filling curves: the `f*K_X + g*K_Y` families, the curve for
//! `q = 2`, and the union of rational fibers.

use serde::Serialize;

use crate::analysis::setup_problem;
use crate::bipoly::{parse_bipoly, BiPoly};
use crate::error::{Error, Result};
use crate::filling::kx_ky;
use crate::gf::{prime_power, FieldElement, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// `q` odd, `q >= 5`.
    I,
    /// `q = 2^e`, `e >= 2`.
    II,
    /// `q = 3`.
    III,
    /// `q = 2`, bi-degree `(4, 3)`.
    Q2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Standard,
    Transposed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub q: u64,
    pub case: Case,
    pub delta: Option<FieldElement>,
    pub gamma: Option<FieldElement>,
}

fn case_of(q: u64) -> Result<Case> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(match (p, e, q) {
        (_, _, 2) => Case::Q2,
        (_, _, 3) => Case::III,
        (2, _, _) => Case::II,
        _ => Case::I,
    })
}

/// The first two admissible `(delta, gamma)` in enumeration order.
pub fn pick_params(q: u64) -> Result<FamilyParams> {
    let case = case_of(q)?;
    let field = FieldSpec::from_order(q)?;
    let elems: Vec<FieldElement> = field.elements().collect();
    let admissible: Vec<FieldElement> = match case {
        Case::I => {
            let squares: Vec<FieldElement> = elems.iter().map(|u| field.square(u)).collect();
            elems
                .iter()
                .filter(|d| {
                    let m = field.neg(d);
                    !m.is_zero() && !squares.contains(&m)
                })
                .cloned()
                .collect()
        }
        Case::II => {
            let image: Vec<FieldElement> = elems
                .iter()
                .map(|u| field.add(u, &field.square(u)))
                .collect();
            elems
                .iter()
                .filter(|d| !image.contains(d))
                .cloned()
                .collect()
        }
        Case::III | Case::Q2 => return Err(Error::UnsupportedQ(q)),
    };
    Ok(FamilyParams {
        q,
        case,
        delta: Some(admissible[0].clone()),
        gamma: Some(admissible[1].clone()),
    })
}

/// `f(Y)*K_X + g(X)*K_Y`, after checking that `f` and `g` are squarefree
/// binary forms of degree `q+1` without rational zeros (skipped when
/// `bypass` is set).
pub fn setup31(f: &BiPoly, g: &BiPoly, bypass: bool) -> Result<BiPoly> {
    if let Some(problem) = setup_problem(f, g)? {
        if !bypass {
            return Err(Error::SetupViolation(problem));
        }
    }
    let (kx, ky) = kx_ky(f.field());
    f.mul(&kx)?.add(&g.mul(&ky)?)
}

/// The forms `(f, g)` used for `q >= 3`.
pub fn family_forms(q: u64) -> Result<(BiPoly, BiPoly)> {
    let field = FieldSpec::from_order(q)?;
    let n = q as usize + 1;
    let binary = |c0: FieldElement, c1: Option<FieldElement>, top: FieldElement| {
        let mut c = vec![field.zero(); n + 1];
        c[0] = c0;
        if let Some(c1) = c1 {
            c[n - 1] = c1;
        }
        c[n] = top;
        c
    };
    match case_of(q)? {
        Case::I => {
            let p = pick_params(q)?;
            let f = binary(field.one(), None, p.delta.unwrap());
            let g = binary(field.one(), None, p.gamma.unwrap());
            Ok((BiPoly::y_form(&field, f), BiPoly::x_form(&field, g)))
        }
        Case::II => {
            let p = pick_params(q)?;
            let f = binary(field.one(), Some(field.one()), p.delta.unwrap());
            let g = binary(field.one(), Some(field.one()), p.gamma.unwrap());
            Ok((BiPoly::y_form(&field, f), BiPoly::x_form(&field, g)))
        }
        Case::III => Ok((
            parse_bipoly("Y0^4 + Y1^4", &field)?,
            parse_bipoly("X0^4 + X0*X1^3 + 2*X1^4", &field)?,
        )),
        Case::Q2 => Err(Error::UnsupportedQ(q)),
    }
}

/// `(X0 Y0^3 + X1 Y1^3) K_X + (X0^2 + X0 X1 + X1^2)^2 K_Y` over `GF(2)`.
fn q2_curve() -> BiPoly {
    let f2 = FieldSpec::prime(2).expect("2 is prime");
    let p = |s| parse_bipoly(s, &f2).expect("fixed text");
    let a = p("X0*Y0^3 + X1*Y1^3");
    let (kx, ky) = kx_ky(&f2);
    let c = p("X0^2 + X0*X1 + X1^2").pow(2);
    a.mul(&kx).unwrap().add(&c.mul(&ky).unwrap()).unwrap()
}

/// The filling curve of minimal bi-degree for `q`: `(q+1, q+1)` for `q >= 3`,
/// `(4, 3)` for `q = 2` (`(3, 4)` when transposed).
pub fn construct(q: u64, orientation: Orientation) -> Result<BiPoly> {
    let poly = match case_of(q)? {
        Case::Q2 => q2_curve(),
        _ => {
            let (f, g) = family_forms(q)?;
            setup31(&f, &g, false)?
        }
    };
    Ok(match orientation {
        Orientation::Standard => poly,
        Orientation::Transposed => poly.transpose(),
    })
}

/// `K_Y`: the union of the `q+1` fibers `P¹ x {P}` over rational `P`.
pub fn fiber_union(q: u64) -> Result<BiPoly> {
    let field = FieldSpec::from_order(q)?;
    Ok(kx_ky(&field).1)
}
