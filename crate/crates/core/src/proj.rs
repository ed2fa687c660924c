//! Enumeration of coefficient vectors up to scalars.
//!
//! Vectors of length `n` over a field of order `Q` whose first nonzero entry
//! is 1. Rank `r` lists the vectors with the leading 1 furthest right first,
//! then counts through the free tail in base `Q` (entry `p+1` fastest).

use crate::gf::{FieldElement, FieldSpec};

/// `(Q^n - 1) / (Q - 1)`, saturating.
pub fn proj_count(order: u64, n: usize) -> u128 {
    let q = order as u128;
    let mut total: u128 = 0;
    let mut block: u128 = 1;
    for _ in 0..n {
        total = total.saturating_add(block);
        block = block.saturating_mul(q);
    }
    total
}

/// The vector of rank `r`, `0 <= r < proj_count(|field|, n)`.
pub fn proj_unrank(field: &FieldSpec, n: usize, mut r: u128) -> Vec<FieldElement> {
    let q = field.order().expect("enumerable field") as u128;
    let mut out = vec![field.zero(); n];
    let mut block: u128 = 1;
    for lead in (0..n).rev() {
        if r < block {
            out[lead] = field.one();
            for slot in out.iter_mut().skip(lead + 1).rev() {
                *slot = field.from_index((r % q) as u64);
                r /= q;
            }
            return out;
        }
        r -= block;
        block *= q;
    }
    panic!("rank out of range");
}

/// Inverse of [`proj_unrank`]; `None` for the zero vector or a vector
/// whose first nonzero entry is not 1.
pub fn proj_rank(field: &FieldSpec, v: &[FieldElement]) -> Option<u128> {
    let q = field.order()? as u128;
    let lead = v.iter().position(|c| !c.is_zero())?;
    if !field.is_one(&v[lead]) {
        return None;
    }
    let n = v.len();
    let mut offset: u128 = 0;
    let mut block: u128 = 1;
    for _ in (lead + 1..n).rev() {
        offset += block;
        block *= q;
    }
    let tail = v[lead + 1..]
        .iter()
        .fold(0u128, |acc, c| acc * q + field.index(c) as u128);
    Some(offset + tail)
}
