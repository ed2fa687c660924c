//! Finite fields GF(p^e), one further extension layer, and univariate
//! polynomials over them.

mod embed;
mod factor;
mod field;
mod unipoly;

pub use embed::{embed, Embedding};
pub use factor::{
    distinct_degree, equal_degree, factor, factor_with_seed, roots, squarefree, Factorization,
    DEFAULT_SEED,
};
pub use field::{elem_arith, is_prime, prime_power, ElemOp, FieldElement, FieldSpec};
pub use unipoly::{unipoly_gcd, UniPoly};
