use super::{AffinePoly, AffineVar};
use crate::gf::{FieldSpec, UniPoly};

/// Resultant of `a` and `b` with respect to `var`, as a polynomial in the
/// other chart variable.
///
/// Determinant of the Sylvester matrix built from the actual `var`-degrees,
/// computed by fraction-free (Bareiss) elimination over `GF(q)[u]`. If either
/// input is zero the result is zero; if both have `var`-degree 0 it is 1.
pub fn resultant_elim(a: &AffinePoly, b: &AffinePoly, var: AffineVar) -> UniPoly {
    let field = a.field();
    let ca = a.coefficients_in(var);
    let cb = b.coefficients_in(var);
    if ca.is_empty() || cb.is_empty() {
        return UniPoly::zero(field);
    }
    sylvester_det(field, &ca, &cb)
}

/// Sylvester determinant for coefficient lists (constant term first).
pub(crate) fn sylvester_det(field: &FieldSpec, ca: &[UniPoly], cb: &[UniPoly]) -> UniPoly {
    let m = ca.len() - 1;
    let n = cb.len() - 1;
    let size = m + n;
    if size == 0 {
        return UniPoly::one(field);
    }
    let zero = UniPoly::zero(field);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + k] = ca[m - k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + k] = cb[n - k].clone();
        }
    }
    bareiss_det(field, mat)
}

/// Determinant of a square matrix over `GF(q)[u]` by fraction-free
/// elimination with row pivoting.
pub(crate) fn bareiss_det(field: &FieldSpec, mut mat: Vec<Vec<UniPoly>>) -> UniPoly {
    let size = mat.len();
    let mut negate = false;
    let mut prev = UniPoly::one(field);
    for k in 0..size {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                None => return UniPoly::zero(field),
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
            }
        }
        if k + 1 == size {
            break;
        }
        let pivot = mat[k][k].clone();
        for i in k + 1..size {
            let lead = mat[i][k].clone();
            for j in k + 1..size {
                let mut v = pivot.mul(&mat[i][j]);
                if !lead.is_zero() && !mat[k][j].is_zero() {
                    v = v.sub(&lead.mul(&mat[k][j]));
                }
                mat[i][j] = if prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            mat[i][k] = UniPoly::zero(field);
        }
        prev = pivot;
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
