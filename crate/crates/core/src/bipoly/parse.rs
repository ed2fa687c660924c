//! Text form of bi-homogeneous polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff | [coeff '*'] factor ('*' factor)*
//! factor := var ['^' nat]
//! var    := "X0" | "X1" | "Y0" | "Y1"
//! coeff  := nat | '[' coeff (',' coeff)* ']'
//! ```
//!
//! Whitespace is ignored. The printer emits terms by ascending `X1` then
//! ascending `Y1` exponent with coefficients in `0..p`.

use super::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

struct Term {
    coeff: FieldElement,
    exps: [usize; 4],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match s.parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.err("number too large")
            }
        }
    }

    /// Raw text of a coefficient (number or bracketed list).
    fn coeff_text(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'[') {
            let mut depth = 0i32;
            while self.pos < self.src.len() {
                match self.src[self.pos] {
                    b'[' => depth += 1,
                    b']' => {
                        depth -= 1;
                        if depth == 0 {
                            self.pos += 1;
                            return Ok(
                                std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
                            );
                        }
                    }
                    b'0'..=b'9' | b',' => {}
                    c if c.is_ascii_whitespace() => {}
                    _ => return self.err("unexpected character in coefficient"),
                }
                self.pos += 1;
            }
            self.pos = start;
            return self.err("unclosed '['");
        }
        self.nat()?;
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn var(&mut self) -> Result<Option<usize>> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let idx = match rest {
            [b'X', b'0', ..] => 0,
            [b'X', b'1', ..] => 1,
            [b'Y', b'0', ..] => 2,
            [b'Y', b'1', ..] => 3,
            _ => return Ok(None),
        };
        self.pos += 2;
        Ok(Some(idx))
    }

    fn factor(&mut self, exps: &mut [usize; 4]) -> Result<()> {
        let v = match self.var()? {
            Some(v) => v,
            None => return self.err("expected X0, X1, Y0 or Y1"),
        };
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.nat()? as usize;
        }
        exps[v] += e;
        Ok(())
    }

    fn term(&mut self, field: &FieldSpec, negate: bool) -> Result<Term> {
        let mut exps = [0usize; 4];
        let mut coeff = field.one();
        let c = self.peek();
        let has_coeff = matches!(c, Some(b'0'..=b'9') | Some(b'['));
        if has_coeff {
            let start = self.pos;
            let text = self.coeff_text()?;
            coeff = field.parse_element(text).map_err(|e| match e {
                Error::BadCoefficient(_) => {
                    Error::BadCoefficient(format!("{text:?} at byte {start}"))
                }
                other => other,
            })?;
            if self.peek() != Some(b'*') {
                return Ok(Term {
                    coeff: if negate { field.neg(&coeff) } else { coeff },
                    exps,
                });
            }
            self.pos += 1;
        }
        self.factor(&mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok(Term {
            coeff: if negate { field.neg(&coeff) } else { coeff },
            exps,
        })
    }
}

/// Parses a bi-homogeneous polynomial; all terms must share one bi-degree.
pub fn parse_bipoly(text: &str, field: &FieldSpec) -> Result<BiPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negate = false;
    if p.peek() == Some(b'-') {
        p.pos += 1;
        negate = true;
    }
    loop {
        if p.peek().is_none() {
            return p.err("expected a term");
        }
        terms.push(p.term(field, negate)?);
        match p.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return p.err("expected '+', '-' or end of input"),
        }
        p.pos += 1;
    }
    let bideg = |t: &Term| (t.exps[0] + t.exps[1], t.exps[2] + t.exps[3]);
    let (a, b) = bideg(&terms[0]);
    let mut out = BiPoly::zero(field, a, b);
    for t in &terms {
        let (ta, tb) = bideg(t);
        if (ta, tb) != (a, b) {
            return Err(Error::MixedBidegree(a, b, ta, tb));
        }
        let (i, j) = (t.exps[1], t.exps[3]);
        let v = field.add(out.get(i, j), &t.coeff);
        out.set(i, j, v);
    }
    Ok(out)
}

pub(super) fn print(poly: &BiPoly) -> String {
    let f = poly.field();
    let (a, b) = poly.bidegree();
    let mut parts = Vec::new();
    for (i, j, c) in poly.terms() {
        let exps = [
            (Var::X0, a - i),
            (Var::X1, i),
            (Var::Y0, b - j),
            (Var::Y1, j),
        ];
        let vars: Vec<String> = exps
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| {
                if *e == 1 {
                    v.name().to_string()
                } else {
                    format!("{}^{e}", v.name())
                }
            })
            .collect();
        let term = match (vars.is_empty(), f.is_one(c)) {
            (true, _) => f.format(c),
            (false, true) => vars.join("*"),
            (false, false) => format!("{}*{}", f.format(c), vars.join("*")),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn element_from_json(field: &FieldSpec, v: &serde_json::Value) -> Result<FieldElement> {
    let bad = || Error::BadCoefficient(v.to_string());
    match (field.base(), v) {
        (None, serde_json::Value::Number(n)) => {
            let n = n.as_u64().ok_or_else(bad)?;
            if n >= field.characteristic() as u64 {
                return Err(bad());
            }
            Ok(field.from_int(n as i64))
        }
        (Some(base), serde_json::Value::Array(items)) if items.len() == field.degree() => {
            let coeffs = items
                .iter()
                .map(|x| element_from_json(base, x))
                .collect::<Result<Vec<_>>>()?;
            Ok(field.from_base_coeffs(&coeffs))
        }
        _ => Err(bad()),
    }
}

fn field_from_json(v: &serde_json::Value) -> Result<FieldSpec> {
    let bad = |m: &str| Error::BadParameters(format!("field description: {m}"));
    let p = v["p"].as_u64().ok_or_else(|| bad("missing p"))?;
    let e = v["e"].as_u64().ok_or_else(|| bad("missing e"))? as usize;
    let base = match v.get("base") {
        Some(b) => field_from_json(b)?,
        None => FieldSpec::prime(p)?,
    };
    if e == 1 && base.is_prime_field() {
        return Ok(base);
    }
    let modulus = v["modulus"]
        .as_array()
        .ok_or_else(|| bad("missing modulus"))?
        .iter()
        .map(|c| element_from_json(&base, c))
        .collect::<Result<Vec<_>>>()?;
    if modulus.len() != e + 1 {
        return Err(Error::BadModulus);
    }
    FieldSpec::with_modulus(&base, modulus)
}

impl BiPoly {
    /// Reads the canonical JSON form written by [`BiPoly::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<BiPoly> {
        let bad = |m: &str| Error::BadParameters(format!("polynomial JSON: {m}"));
        let field = field_from_json(&v["field"])?;
        let bd = v["bidegree"]
            .as_array()
            .ok_or_else(|| bad("missing bidegree"))?;
        if bd.len() != 2 {
            return Err(bad("bidegree needs two entries"));
        }
        let a = bd[0].as_u64().ok_or_else(|| bad("bad bidegree"))? as usize;
        let b = bd[1].as_u64().ok_or_else(|| bad("bad bidegree"))? as usize;
        let rows = v["coeffs"]
            .as_array()
            .ok_or_else(|| bad("missing coeffs"))?;
        if rows.len() != a + 1 {
            return Err(Error::BadShape("row count".into()));
        }
        let mut coeffs = Vec::with_capacity((a + 1) * (b + 1));
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            if row.len() != b + 1 {
                return Err(Error::BadShape("column count".into()));
            }
            for c in row {
                coeffs.push(element_from_json(&field, c)?);
            }
        }
        BiPoly::from_coeffs(&field, a, b, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn two_terms() {
        let f = gf(3);
        let p = parse_bipoly("X0^3*X1 + 2*X0*X1^3", &f).unwrap();
        assert_eq!(p.bidegree(), (4, 0));
        assert_eq!(p.terms().count(), 2);
        assert_eq!(p.to_text(), "X0^3*X1 + 2*X0*X1^3");
    }

    #[test]
    fn y_form() {
        let f = gf(3);
        let p = parse_bipoly("Y0^4 + Y1^4", &f).unwrap();
        assert_eq!(p.bidegree(), (0, 4));
        assert_eq!(p.get(0, 0), &f.one());
        assert_eq!(p.get(0, 4), &f.one());
    }

    #[test]
    fn mixed_bidegree() {
        let f = gf(3);
        assert_eq!(
            parse_bipoly("X0*Y0 + X0^2", &f).unwrap_err(),
            Error::MixedBidegree(1, 1, 2, 0)
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let f = gf(3);
        match parse_bipoly("X0 + Z1", &f).unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 5),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_bipoly("", &f), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_bipoly("X0 +", &f),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_bipoly("X0^", &f), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_bipoly("[1,2*X0", &f),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn bad_coefficient() {
        let f = gf(3);
        assert!(matches!(
            parse_bipoly("[1,2]*X0", &f),
            Err(Error::BadCoefficient(_))
        ));
        let f4 = gf(4);
        assert!(matches!(
            parse_bipoly("[1,2]*X0", &f4),
            Err(Error::BadCoefficient(_))
        ));
        let p = parse_bipoly("[0,1]*X0 + [1,1]*X1", &f4).unwrap();
        assert_eq!(p.to_text(), "[0,1]*X0 + [1,1]*X1");
    }

    #[test]
    fn like_terms_combine_and_minus() {
        let f = gf(5);
        let p = parse_bipoly("X0*Y1 + X0*Y1 - X1*Y0 + 3 * X0 * Y1", &f).unwrap();
        assert_eq!(p.to_text(), "4*X1*Y0");
        let z = parse_bipoly("X0 - X0", &f).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.bidegree(), (1, 0));
        assert_eq!(z.to_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        for q in [2u64, 9] {
            let f = gf(q);
            let p = parse_bipoly("2*X0^2*Y1 + X0*X1*Y0 + X1^2*Y1", &f).unwrap();
            let back = BiPoly::from_json(&p.to_json()).unwrap();
            assert_eq!(back, p);
        }
        let f81 = gf(9).extension(2).unwrap();
        let p = parse_bipoly("[[1,2],[0,1]]*X0*Y1 + X1*Y0", &f81).unwrap();
        assert_eq!(BiPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
