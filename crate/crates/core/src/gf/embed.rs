use super::field::{FieldElement, FieldSpec};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// A fixed ring embedding of a subfield into a larger field.
///
/// When the target is built as a tower over the source the embedding is the
/// constant lift. Otherwise the source generator goes to the
/// enumeration-smallest root of the source modulus in the target; for towers
/// the two rules coincide.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: FieldSpec,
    sup: FieldSpec,
    route: Route,
}

#[derive(Clone, Debug)]
enum Route {
    Identity,
    Prime,
    /// Constant lift through `levels` tower layers.
    Lift(usize),
    /// Base embedding plus images of `1, r, r^2, ...`.
    Root {
        base: Box<Embedding>,
        powers: Vec<FieldElement>,
    },
}

impl Embedding {
    pub fn new(sub: &FieldSpec, sup: &FieldSpec) -> Result<Self> {
        if sub.characteristic() != sup.characteristic() || sup.width() % sub.width() != 0 {
            return Err(Error::NotASubfield);
        }
        let mk = |route| Self {
            sub: sub.clone(),
            sup: sup.clone(),
            route,
        };
        if sub == sup {
            return Ok(mk(Route::Identity));
        }
        if sub.is_prime_field() {
            return Ok(mk(Route::Prime));
        }
        let mut levels = 0;
        let mut cur = Some(sup);
        while let Some(f) = cur {
            if f == sub {
                return Ok(mk(Route::Lift(levels)));
            }
            levels += 1;
            cur = f.base();
        }
        let sub_base = sub.base().expect("non-prime field has a base");
        let base = Embedding::new(sub_base, sup)?;
        let mapped: Vec<FieldElement> = sub.modulus().iter().map(|c| base.apply(c)).collect();
        let m = UniPoly::new(sup, mapped);
        let roots = super::factor::roots(&m, sup)?;
        let r = roots.into_iter().next().ok_or(Error::NotASubfield)?;
        let mut powers = Vec::with_capacity(sub.degree());
        let mut acc = sup.one();
        for _ in 0..sub.degree() {
            powers.push(acc.clone());
            acc = sup.mul(&acc, &r);
        }
        Ok(mk(Route::Root {
            base: Box::new(base),
            powers,
        }))
    }

    pub fn source(&self) -> &FieldSpec {
        &self.sub
    }

    pub fn target(&self) -> &FieldSpec {
        &self.sup
    }

    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        match &self.route {
            Route::Identity => x.clone(),
            Route::Prime => self.sup.from_int(x.digits()[0] as i64),
            Route::Lift(levels) => {
                let mut chain = Vec::with_capacity(*levels);
                let mut f = self.sup.clone();
                for _ in 0..*levels {
                    chain.push(f.clone());
                    f = f.base().expect("tower layer").clone();
                }
                let mut v = x.clone();
                for layer in chain.iter().rev() {
                    v = layer.lift(&v);
                }
                v
            }
            Route::Root { base, powers } => {
                let mut acc = self.sup.zero();
                for (j, pw) in powers.iter().enumerate() {
                    let c = self.sub.base_coeff(x, j);
                    if !c.is_zero() {
                        acc = self.sup.add(&acc, &self.sup.mul(&base.apply(&c), pw));
                    }
                }
                acc
            }
        }
    }

    pub fn map_poly(&self, f: &UniPoly) -> UniPoly {
        UniPoly::new(
            &self.sup,
            f.coeffs().iter().map(|c| self.apply(c)).collect(),
        )
    }
}

/// One-shot embedding of a single element.
pub fn embed(sub: &FieldSpec, sup: &FieldSpec, x: &FieldElement) -> Result<FieldElement> {
    Ok(Embedding::new(sub, sup)?.apply(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_subfield() {
        let f2 = FieldSpec::from_order(2).unwrap();
        let f4 = FieldSpec::from_order(4).unwrap();
        assert_eq!(embed(&f2, &f4, &f2.one()).unwrap(), f4.one());
    }

    #[test]
    fn gf4_into_flat_gf16_hits_smallest_root() {
        let f4 = FieldSpec::from_order(4).unwrap();
        let f16 = FieldSpec::from_order(16).unwrap();
        let w = f4.generator();
        let img = embed(&f4, &f16, &w).unwrap();
        // scan oracle: first element of GF(16) with x^2 + x + 1 = 0
        let first = f16
            .elements()
            .find(|x| f16.is_zero(&f16.add(&f16.add(&f16.mul(x, x), x), &f16.one())))
            .unwrap();
        assert_eq!(img, first);
        let e = Embedding::new(&f4, &f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(
                    e.apply(&f4.mul(&a, &b)),
                    f16.mul(&e.apply(&a), &e.apply(&b))
                );
                assert_eq!(
                    e.apply(&f4.add(&a, &b)),
                    f16.add(&e.apply(&a), &e.apply(&b))
                );
            }
            assert_eq!(f16.frobenius(&e.apply(&a), 4), e.apply(&a));
        }
    }

    #[test]
    fn tower_lift() {
        let f9 = FieldSpec::from_order(9).unwrap();
        let f81 = f9.extension(2).unwrap();
        let e = Embedding::new(&f9, &f81).unwrap();
        let images: std::collections::BTreeSet<_> = f9.elements().map(|x| e.apply(&x)).collect();
        assert_eq!(images.len(), 9);
        let f3 = FieldSpec::from_order(3).unwrap();
        assert_eq!(embed(&f3, &f81, &f3.from_int(2)).unwrap(), f81.from_int(2));
    }

    #[test]
    fn not_a_subfield() {
        let f4 = FieldSpec::from_order(4).unwrap();
        let f8 = FieldSpec::from_order(8).unwrap();
        assert_eq!(Embedding::new(&f4, &f8).unwrap_err(), Error::NotASubfield);
        let f9 = FieldSpec::from_order(9).unwrap();
        assert_eq!(Embedding::new(&f4, &f9).unwrap_err(), Error::NotASubfield);
    }
}
