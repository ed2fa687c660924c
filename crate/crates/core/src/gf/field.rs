use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Fields up to this order get log/exp tables.
const TABLE_LIMIT: u64 = 1 << 16;

pub(crate) type Digits = SmallVec<[u32; 4]>;

/// An element of a finite field, stored as its coordinates over the prime
/// field.
///
/// For an extension of degree `e` over a base of width `k` the digit vector
/// has length `e * k`; digits `j*k .. (j+1)*k` hold the base-field coefficient
/// of `t^j`. Elements do not carry their field: operations go through the
/// owning [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    digits: Digits,
}

impl FieldElement {
    pub(crate) fn from_digits(digits: Digits) -> Self {
        Self { digits }
    }

    /// Prime-field coordinates, constant term first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }
}

/// Enumeration order: the digit of the constant term is least significant.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.digits
            .len()
            .cmp(&other.digits.len())
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    p: u32,
    degree: usize,
    modulus: Vec<FieldElement>,
    base: Option<FieldSpec>,
    width: usize,
    order: Option<u64>,
    height: usize,
    tables: Option<Tables>,
}

/// A finite field: a prime field, an extension of one, or an extension of
/// such an extension (tower height at most two).
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.base == other.0.base
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.base {
            None => write!(f, "GF({})", self.0.p),
            Some(base) => {
                let m = UniPoly::new(base, self.0.modulus.clone());
                match self.0.order {
                    Some(n) => write!(f, "GF({n}) = {base}[t]/({})", m.display("t")),
                    None => write!(f, "{base}[t]/({})", m.display("t")),
                }
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e`; `None` unless `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, e))
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        let p32 = p as u32;
        let elem = |v: u32| FieldElement::from_digits(smallvec::smallvec![v]);
        Ok(FieldSpec(Arc::new(FieldInner {
            p: p32,
            degree: 1,
            modulus: vec![elem(0), elem(1)],
            base: None,
            width: 1,
            order: Some(p),
            height: 0,
            tables: None,
        })))
    }

    /// GF(p^e) over the prime field, or a degree-`e` extension of `base`, with
    /// the canonical (lexicographically smallest irreducible) modulus.
    pub fn make(p: u64, e: usize, base: Option<&FieldSpec>) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        match base {
            None => {
                let prime = Self::prime(p)?;
                if e == 1 {
                    Ok(prime)
                } else {
                    prime.extension(e)
                }
            }
            Some(base) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if base.characteristic() as u64 != p {
                    return Err(Error::CharacteristicMismatch {
                        base: base.characteristic(),
                        requested: p as u32,
                    });
                }
                base.extension(e)
            }
        }
    }

    /// GF(q) with its canonical modulus.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::make(p as u64, e, None)
    }

    /// Degree-`e` extension of `self` by the smallest monic irreducible.
    ///
    /// Candidates `t^e + c_{e-1} t^{e-1} + ... + c_0` are scanned with `c_0`
    /// most significant and each coefficient in enumeration order. A degree-1
    /// extension is `self`.
    pub fn extension(&self, e: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if e == 1 {
            return Ok(self.clone());
        }
        if self.height() >= 2 {
            return Err(Error::TowerTooDeep);
        }
        let q = self.order().ok_or(Error::TowerTooDeep)?;
        let elems: Vec<FieldElement> = self.elements().collect();
        let mut digits = vec![0u64; e];
        // c_0 = 0 gives a factor t, so start at c_0 = 1.
        digits[0] = 1;
        loop {
            let mut coeffs: Vec<FieldElement> =
                digits.iter().map(|&d| elems[d as usize].clone()).collect();
            coeffs.push(self.one());
            let f = UniPoly::new(self, coeffs.clone());
            if f.is_irreducible() {
                return Self::with_modulus_unchecked(self, coeffs);
            }
            // increment with the last coefficient varying fastest
            let mut pos = e;
            loop {
                assert!(pos > 0, "monic irreducible of every degree exists");
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    /// Extension of `base` by an explicit monic irreducible modulus
    /// (constant term first).
    pub fn with_modulus(base: &FieldSpec, modulus: Vec<FieldElement>) -> Result<Self> {
        if modulus.len() < 2 || !base.is_one(modulus.last().unwrap()) {
            return Err(Error::BadModulus);
        }
        if modulus.iter().any(|c| !base.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        if !UniPoly::new(base, modulus.clone()).is_irreducible() {
            return Err(Error::ReducibleModulus);
        }
        Self::with_modulus_unchecked(base, modulus)
    }

    /// Like [`with_modulus`](Self::with_modulus) but trusts the caller on
    /// irreducibility (used for factors produced by the factorizer).
    pub(crate) fn with_modulus_unchecked(
        base: &FieldSpec,
        modulus: Vec<FieldElement>,
    ) -> Result<Self> {
        if base.height() >= 2 {
            return Err(Error::TowerTooDeep);
        }
        let degree = modulus.len() - 1;
        if degree == 0 || !base.is_one(&modulus[degree]) {
            return Err(Error::BadModulus);
        }
        let width = degree * base.width();
        let order = base
            .order()
            .and_then(|q| q.checked_pow(u32::try_from(degree).ok()?));
        let mut inner = FieldInner {
            p: base.characteristic(),
            degree,
            modulus,
            base: Some(base.clone()),
            width,
            order,
            height: base.height() + 1,
            tables: None,
        };
        if let Some(n) = order.filter(|&n| n <= TABLE_LIMIT) {
            let plain = FieldSpec(Arc::new(inner));
            let tables = plain.build_tables(n);
            inner = Arc::try_unwrap(plain.0).ok().expect("sole owner");
            inner.tables = Some(tables);
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    fn build_tables(&self, n: u64) -> Tables {
        let n = n as usize;
        let group = n - 1;
        let mut log = vec![u32::MAX; n];
        let mut exp = vec![0u32; group];
        for cand in 2..n as u64 {
            let g = self.from_index(cand);
            let mut x = self.one();
            let mut ok = true;
            for (k, slot) in exp.iter_mut().enumerate() {
                let ix = self.index(&x) as usize;
                if k > 0 && ix == 1 {
                    ok = false;
                    break;
                }
                *slot = ix as u32;
                x = self.mul_plain(&x, &g);
            }
            if ok {
                for (k, &ix) in exp.iter().enumerate() {
                    log[ix as usize] = k as u32;
                }
                return Tables { exp, log };
            }
        }
        if n == 2 {
            log[1] = 0;
            exp[0] = 1;
            return Tables { exp, log };
        }
        unreachable!("finite multiplicative groups are cyclic")
    }

    /// Parses `q=9` or `p=3,e=2,mod=[1,0,1]`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::BadParameters(format!("field spec {text:?}: {m}"));
        let text = text.trim();
        if let Some(q) = text.strip_prefix("q=") {
            let q: u64 = q.trim().parse().map_err(|_| bad("q is not an integer"))?;
            return Self::from_order(q);
        }
        let mut p = None;
        let mut e = None;
        let mut modulus = None;
        let mut rest = text;
        while !rest.is_empty() {
            let (key, after) = rest
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let key = key.trim().trim_start_matches(',').trim();
            let after = after.trim_start();
            let (value, tail) = if after.starts_with('[') {
                let close = after.find(']').ok_or_else(|| bad("unclosed ["))?;
                (&after[..=close], &after[close + 1..])
            } else {
                match after.find(',') {
                    Some(i) => (&after[..i], &after[i..]),
                    None => (after, ""),
                }
            };
            match key {
                "p" => p = Some(value.trim().parse::<u64>().map_err(|_| bad("bad p"))?),
                "e" => e = Some(value.trim().parse::<usize>().map_err(|_| bad("bad e"))?),
                "mod" => {
                    let inner = value.trim().trim_start_matches('[').trim_end_matches(']');
                    let coeffs: std::result::Result<Vec<i64>, _> =
                        inner.split(',').map(|s| s.trim().parse::<i64>()).collect();
                    modulus = Some(coeffs.map_err(|_| bad("bad modulus coefficient"))?);
                }
                _ => return Err(bad("unknown key")),
            }
            rest = tail.trim_start_matches(',').trim();
        }
        let p = p.ok_or_else(|| bad("missing p"))?;
        let e = e.unwrap_or(1);
        match modulus {
            None => Self::make(p, e, None),
            Some(coeffs) => {
                let prime = Self::prime(p)?;
                if coeffs.len() != e + 1 {
                    return Err(Error::BadModulus);
                }
                if e == 1 {
                    if coeffs != [0, 1] {
                        return Err(Error::BadModulus);
                    }
                    return Ok(prime);
                }
                let modulus = coeffs.iter().map(|&c| prime.from_int(c)).collect();
                Self::with_modulus(&prime, modulus)
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Degree over the immediate base (1 for a prime field).
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn width(&self) -> usize {
        self.0.width
    }

    /// Cardinality, if it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.0.order
    }

    /// Number of extension layers above the prime field.
    pub fn height(&self) -> usize {
        self.0.height
    }

    pub fn base(&self) -> Option<&FieldSpec> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// Defining polynomial over the base, constant term first.
    pub fn modulus(&self) -> &[FieldElement] {
        &self.0.modulus
    }

    /// The prime field at the bottom of the tower.
    pub fn prime_field(&self) -> FieldSpec {
        let mut f = self.clone();
        while let Some(b) = f.base().cloned() {
            f = b;
        }
        f
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_digits(smallvec::smallvec![0; self.width()])
    }

    pub fn one(&self) -> FieldElement {
        let mut d: Digits = smallvec::smallvec![0; self.width()];
        d[0] = 1;
        FieldElement::from_digits(d)
    }

    /// The class of `t` (the adjoined root); `1` in a prime field.
    pub fn generator(&self) -> FieldElement {
        match self.base() {
            None => self.one(),
            Some(base) => {
                let mut coeffs = vec![base.zero(); self.degree()];
                if self.degree() > 1 {
                    coeffs[1] = base.one();
                } else {
                    // degree-1 extension: t is the root of the modulus
                    coeffs[0] = base.neg(&self.0.modulus[0]);
                }
                self.from_base_coeffs(&coeffs)
            }
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.characteristic() as i64;
        let v = n.rem_euclid(p) as u32;
        let mut d: Digits = smallvec::smallvec![0; self.width()];
        d[0] = v;
        FieldElement::from_digits(d)
    }

    /// Element at position `n` of the enumeration order.
    pub fn from_index(&self, mut n: u64) -> FieldElement {
        let p = self.characteristic() as u64;
        let mut d: Digits = smallvec::smallvec![0; self.width()];
        for slot in d.iter_mut() {
            *slot = (n % p) as u32;
            n /= p;
        }
        FieldElement::from_digits(d)
    }

    /// Position of `x` in the enumeration order; meaningful when the order fits
    /// in a `u64`.
    pub fn index(&self, x: &FieldElement) -> u64 {
        let p = self.characteristic() as u64;
        x.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc.wrapping_mul(p).wrapping_add(d as u64))
    }

    /// All elements in enumeration order, starting at 0.
    ///
    /// Panics if the order does not fit in a `u64`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let n = self.order().expect("field too large to enumerate");
        (0..n).map(move |i| self.from_index(i))
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.digits.len() == self.width() && x.digits.iter().all(|&d| d < self.characteristic())
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        x.is_zero()
    }

    pub fn is_one(&self, x: &FieldElement) -> bool {
        x.digits[0] == 1 && x.digits[1..].iter().all(|&d| d == 0)
    }

    /// Coefficient of `t^j` over the base.
    pub fn base_coeff(&self, x: &FieldElement, j: usize) -> FieldElement {
        let k = self.base().map_or(1, |b| b.width());
        FieldElement::from_digits(x.digits[j * k..(j + 1) * k].iter().copied().collect())
    }

    pub fn base_coeffs(&self, x: &FieldElement) -> Vec<FieldElement> {
        (0..self.degree()).map(|j| self.base_coeff(x, j)).collect()
    }

    /// Assembles an element from base coefficients (missing ones are zero).
    pub fn from_base_coeffs(&self, coeffs: &[FieldElement]) -> FieldElement {
        let k = self.base().map_or(1, |b| b.width());
        let mut d: Digits = smallvec::smallvec![0; self.width()];
        for (j, c) in coeffs.iter().enumerate().take(self.degree()) {
            d[j * k..(j + 1) * k].copy_from_slice(&c.digits);
        }
        FieldElement::from_digits(d)
    }

    /// The base element `c` viewed as a constant of this field.
    pub fn lift(&self, c: &FieldElement) -> FieldElement {
        self.from_base_coeffs(std::slice::from_ref(c))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        FieldElement::from_digits(
            a.digits
                .iter()
                .zip(&b.digits)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        FieldElement::from_digits(
            a.digits
                .iter()
                .zip(&b.digits)
                .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        FieldElement::from_digits(
            a.digits
                .iter()
                .map(|&x| if x == 0 { 0 } else { p - x })
                .collect(),
        )
    }

    /// `n * a` for an integer `n`.
    pub fn mul_int(&self, a: &FieldElement, n: i64) -> FieldElement {
        let p = self.characteristic() as u64;
        let k = n.rem_euclid(p as i64) as u64;
        FieldElement::from_digits(
            a.digits
                .iter()
                .map(|&x| ((x as u64 * k) % p) as u32)
                .collect(),
        )
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if let Some(t) = &self.0.tables {
            let ia = self.index(a) as usize;
            let ib = self.index(b) as usize;
            if ia == 0 || ib == 0 {
                return self.zero();
            }
            let group = t.exp.len();
            let s = (t.log[ia] as usize + t.log[ib] as usize) % group;
            return self.from_index(t.exp[s] as u64);
        }
        self.mul_plain(a, b)
    }

    fn mul_plain(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.characteristic() as u64;
        let base = match self.base() {
            None => {
                let v = (a.digits[0] as u64 * b.digits[0] as u64) % p;
                return FieldElement::from_digits(smallvec::smallvec![v as u32]);
            }
            Some(base) => base,
        };
        let d = self.degree();
        if base.is_prime_field() {
            let mut prod = vec![0u64; 2 * d - 1];
            for (i, &x) in a.digits.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.digits.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
                }
            }
            for t in (d..2 * d - 1).rev() {
                let c = prod[t];
                if c == 0 {
                    continue;
                }
                let neg = p - c;
                for (l, m) in self.0.modulus[..d].iter().enumerate() {
                    let ml = m.digits[0] as u64;
                    if ml != 0 {
                        prod[t - d + l] = (prod[t - d + l] + neg * ml) % p;
                    }
                }
            }
            return FieldElement::from_digits(prod[..d].iter().map(|&v| v as u32).collect());
        }
        let ac = self.base_coeffs(a);
        let bc = self.base_coeffs(b);
        let mut prod = vec![base.zero(); 2 * d - 1];
        for (i, x) in ac.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bc.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = base.add(&prod[i + j], &base.mul(x, y));
                }
            }
        }
        for t in (d..2 * d - 1).rev() {
            let c = prod[t].clone();
            if c.is_zero() {
                continue;
            }
            for l in 0..d {
                let m = &self.0.modulus[l];
                if !m.is_zero() {
                    prod[t - d + l] = base.sub(&prod[t - d + l], &base.mul(&c, m));
                }
            }
        }
        self.from_base_coeffs(&prod[..d])
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let group = t.exp.len();
            let l = t.log[self.index(a) as usize] as usize;
            return Some(self.from_index(t.exp[(group - l) % group] as u64));
        }
        match self.base() {
            None => {
                let p = self.characteristic() as i64;
                let (mut r0, mut r1) = (p, a.digits[0] as i64);
                let (mut s0, mut s1) = (0i64, 1i64);
                while r1 != 0 {
                    let k = r0 / r1;
                    (r0, r1) = (r1, r0 - k * r1);
                    (s0, s1) = (s1, s0 - k * s1);
                }
                Some(self.from_int(s0))
            }
            Some(base) => {
                let m = UniPoly::new(base, self.0.modulus.clone());
                let x = UniPoly::new(base, self.base_coeffs(a));
                let (g, s, _) = x.ext_gcd(&m);
                debug_assert_eq!(g.degree(), Some(0));
                let s = s.scale(&base.inv(g.lead()).expect("gcd is a unit"));
                Some(self.from_base_coeffs(s.coeffs()))
            }
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    pub fn pow(&self, a: &FieldElement, mut n: u128) -> FieldElement {
        let mut acc = self.one();
        let mut sq = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            n >>= 1;
            if n > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// `a^q`, the Frobenius of the subfield of order `q`.
    pub fn frobenius(&self, a: &FieldElement, q: u64) -> FieldElement {
        self.pow(a, q as u128)
    }

    /// Element text: an integer in a prime field, `[c0,c1,...]` otherwise.
    pub fn format(&self, x: &FieldElement) -> String {
        match self.base() {
            None => x.digits[0].to_string(),
            Some(base) => {
                let parts: Vec<String> =
                    self.base_coeffs(x).iter().map(|c| base.format(c)).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    pub fn to_json(&self, x: &FieldElement) -> serde_json::Value {
        match self.base() {
            None => serde_json::Value::from(x.digits[0]),
            Some(base) => serde_json::Value::Array(
                self.base_coeffs(x)
                    .iter()
                    .map(|c| base.to_json(c))
                    .collect(),
            ),
        }
    }

    /// Reads an integer (reduced mod p) or a bracketed coefficient list; a
    /// flat list of prime-field digits is accepted for tower fields too.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let bad = || Error::BadCoefficient(text.to_string());
        let t = text.trim();
        if !t.starts_with('[') {
            let n: i64 = t.parse().map_err(|_| bad())?;
            return Ok(self.from_int(n));
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts = split_top_level(inner);
        let base = self.base().ok_or_else(bad)?;
        if parts.len() == self.width() && parts.iter().all(|s| !s.trim().starts_with('[')) {
            let mut d: Digits = Digits::new();
            for s in &parts {
                let v: u32 = s.trim().parse().map_err(|_| bad())?;
                if v >= self.characteristic() {
                    return Err(bad());
                }
                d.push(v);
            }
            return Ok(FieldElement::from_digits(d));
        }
        if parts.len() > self.degree() {
            return Err(bad());
        }
        let coeffs = parts
            .iter()
            .map(|s| base.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_base_coeffs(&coeffs))
    }

    /// JSON description: characteristic, degree, modulus and base.
    pub fn describe(&self) -> serde_json::Value {
        let modulus = match self.base() {
            None => serde_json::json!([0, 1]),
            Some(base) => {
                serde_json::Value::Array(self.0.modulus.iter().map(|c| base.to_json(c)).collect())
            }
        };
        let mut v = serde_json::json!({
            "p": self.characteristic(),
            "e": self.degree(),
            "order": self.order(),
            "modulus": modulus,
        });
        if let Some(base) = self.base().filter(|b| !b.is_prime_field()) {
            v["base"] = base.describe();
        }
        v
    }
}

pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() || !out.is_empty() {
        out.push(&s[start..]);
    }
    out
}

/// The arithmetic operations of a single checked call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: both operands must belong to `field`.
pub fn elem_arith(
    field: &FieldSpec,
    op: ElemOp,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<FieldElement> {
    if !field.contains(a) || !field.contains(b) {
        return Err(Error::FieldMismatch);
    }
    Ok(match op {
        ElemOp::Add => field.add(a, b),
        ElemOp::Sub => field.sub(a, b),
        ElemOp::Mul => field.mul(a, b),
        ElemOp::Div => field.div(a, b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        let f = FieldSpec::make(3, 1, None).unwrap();
        assert!(f.is_prime_field());
        assert_eq!(f.modulus().len(), 2);

        let f4 = FieldSpec::make(2, 2, None).unwrap();
        let m: Vec<u32> = f4.modulus().iter().map(|c| c.digits()[0]).collect();
        assert_eq!(m, vec![1, 1, 1]);

        let f9 = FieldSpec::make(3, 2, None).unwrap();
        let m: Vec<u32> = f9.modulus().iter().map(|c| c.digits()[0]).collect();
        assert_eq!(m, vec![1, 0, 1]);
    }

    #[test]
    fn omega_squared() {
        let f4 = FieldSpec::from_order(4).unwrap();
        let w = f4.generator();
        let w2 = f4.mul(&w, &w);
        assert_eq!(w2, f4.add(&w, &f4.one()));
    }

    #[test]
    fn enumeration_order_gf4() {
        let f4 = FieldSpec::from_order(4).unwrap();
        let all: Vec<String> = f4.elements().map(|x| f4.format(&x)).collect();
        assert_eq!(all, ["[0,0]", "[1,0]", "[0,1]", "[1,1]"]);
    }

    #[test]
    fn not_prime() {
        assert_eq!(FieldSpec::make(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::from_order(6).unwrap_err(),
            Error::NotPrimePower(6)
        );
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::from_order(9).unwrap();
        let err = elem_arith(&f, ElemOp::Div, &f.one(), &f.zero()).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
        let g = FieldSpec::from_order(3).unwrap();
        let err = elem_arith(&f, ElemOp::Add, &f.one(), &g.one()).unwrap_err();
        assert_eq!(err, Error::FieldMismatch);
    }

    #[test]
    fn tables_agree_with_plain_multiplication() {
        for q in [4u64, 8, 9, 16, 25, 27] {
            let f = FieldSpec::from_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(&a, &b), f.mul_plain(&a, &b));
                }
            }
        }
    }

    #[test]
    fn inverse_in_every_small_field() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 16, 27, 81] {
            let f = FieldSpec::from_order(q).unwrap();
            for a in f.elements().skip(1) {
                let inv = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &inv)), "q={q}");
                assert!(f.is_one(&f.pow(&a, (q - 1) as u128)));
            }
        }
    }

    #[test]
    fn tower_field() {
        let f9 = FieldSpec::from_order(9).unwrap();
        let f81 = FieldSpec::make(3, 2, Some(&f9)).unwrap();
        assert_eq!(f81.order(), Some(81));
        assert_eq!(f81.height(), 2);
        assert_eq!(f81.width(), 4);
        assert_eq!(f81.extension(2).unwrap_err(), Error::TowerTooDeep);
        let fixed = f81.elements().filter(|x| &f81.frobenius(x, 9) == x).count();
        assert_eq!(fixed, 9);
        let s = f81.format(&f81.generator());
        assert_eq!(s, "[[0,0],[1,0]]");
        assert_eq!(f81.parse_element(&s).unwrap(), f81.generator());
        assert_eq!(f81.parse_element("[0,0,1,0]").unwrap(), f81.generator());
    }

    #[test]
    fn parse_field_text() {
        let f = FieldSpec::parse("q=9").unwrap();
        let g = FieldSpec::parse("p=3,e=2,mod=[1,0,1]").unwrap();
        assert_eq!(f, g);
        assert_eq!(
            FieldSpec::parse("p=3,e=2,mod=[0,0,1]").unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(FieldSpec::parse("q=10").is_err());
    }

    #[test]
    fn make_is_deterministic() {
        for (p, e) in [(2u64, 3usize), (2, 4), (3, 3), (5, 2), (7, 2)] {
            let a = FieldSpec::make(p, e, None).unwrap();
            let b = FieldSpec::make(p, e, None).unwrap();
            assert_eq!(a.modulus(), b.modulus());
        }
    }
}
