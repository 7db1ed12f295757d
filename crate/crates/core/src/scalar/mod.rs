//! Exact coefficient arithmetic: rationals, rational functions in q, and
//! cyclotomic fields Q(ε) with ε^l = 1. No floating point anywhere.

pub mod cyclotomic;
pub mod qcomb;
pub mod qpoly;
pub mod ratfunc;
pub mod zpoly;

pub use cyclotomic::{cyclotomic_poly, Cyclo};
pub use qcomb::{primitive_root, quantum_binomial, quantum_integer, LaurentInt};
pub use ratfunc::RatFunc;
pub use zpoly::ZPoly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands from different coefficient fields: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("cannot parse scalar {text:?} in field {field}: {reason}")]
    Parse {
        field: Field,
        text: String,
        reason: String,
    },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// Descriptor of an exact coefficient field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Field {
    Rationals,
    /// Rational functions in the indeterminate q over the rationals.
    RationalFunctions,
    /// Q(ε) with ε a primitive l-th root of unity.
    Cyclotomic { l: u32 },
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::RationalFunctions => write!(f, "Q(q)"),
            Field::Cyclotomic { l } => write!(f, "Q(e_{})", l),
        }
    }
}

/// An element of one of the supported exact fields, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    RatFn(RatFunc),
    Cyc(Cyclo),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::RatFn(_) => Field::RationalFunctions,
            Scalar::Cyc(c) => Field::Cyclotomic { l: c.order() },
        }
    }

    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::RationalFunctions => Scalar::RatFn(RatFunc::zero()),
            Field::Cyclotomic { l } => Scalar::Cyc(Cyclo::zero(l)),
        }
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::int(1, field)
    }

    pub fn int(n: i64, field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::RationalFunctions => Scalar::RatFn(RatFunc::from_i64(n)),
            Field::Cyclotomic { l } => Scalar::Cyc(Cyclo::from_i64(l, n)),
        }
    }

    pub fn from_bigint(n: &BigInt, field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::RationalFunctions => Scalar::RatFn(RatFunc::from_poly(ZPoly::constant(n.clone()))),
            Field::Cyclotomic { l } => {
                Scalar::Cyc(Cyclo::from_rational(l, &BigRational::from_integer(n.clone())))
            }
        }
    }

    pub fn rational(num: i64, den: i64, field: Field) -> Scalar {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        match field {
            Field::Rationals => Scalar::Rat(r),
            Field::RationalFunctions => {
                let n = RatFunc::from_poly(ZPoly::constant(r.numer().clone()));
                let d = RatFunc::from_poly(ZPoly::constant(r.denom().clone()));
                Scalar::RatFn(n.mul(&d.inv().unwrap()))
            }
            Field::Cyclotomic { l } => Scalar::Cyc(Cyclo::from_rational(l, &r)),
        }
    }

    /// The generator q of the rational-function field.
    pub fn q() -> Scalar {
        Scalar::RatFn(RatFunc::q())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::RatFn(r) => r.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::RatFn(r) => r.is_one(),
            Scalar::Cyc(c) => c.is_one(),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "scalar field mismatch: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(a.add(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.add(b)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::RatFn(a) => Scalar::RatFn(a.neg()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(a.mul(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.mul(b)),
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(a.recip()))
                }
            }
            Scalar::RatFn(a) => a.inv().map(Scalar::RatFn).ok_or(ScalarError::DivisionByZero),
            Scalar::Cyc(a) => a.inv().map(Scalar::Cyc).ok_or(ScalarError::DivisionByZero),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        if e == 0 {
            return Ok(Scalar::one(self.field()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(self.field());
        let mut cur = base;
        let mut exp = e.unsigned_abs();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&cur);
            }
            cur = cur.mul(&cur);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Canonical text form; see the field-specific formats in `parse`.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::RatFn(r) => r.to_text(),
            Scalar::Cyc(c) => {
                let coords = c.rational_coords();
                let body: Vec<String> = coords
                    .iter()
                    .map(|r| {
                        if r.denom().is_one() {
                            format!("{}", r.numer())
                        } else {
                            format!("{}/{}", r.numer(), r.denom())
                        }
                    })
                    .collect();
                format!("[{}]", body.join(","))
            }
        }
    }

    /// Parse the canonical text form in the given field.
    pub fn parse(text: &str, field: Field) -> Result<Scalar, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            field,
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let text = text.trim();
        match field {
            Field::Rationals => {
                let r = parse_big_rational(text).ok_or_else(|| err("expected a/b"))?;
                Ok(Scalar::Rat(r))
            }
            Field::RationalFunctions => {
                let rf = parse_ratfunc(text).ok_or_else(|| err("expected polynomial fraction in q"))?;
                Ok(Scalar::RatFn(rf))
            }
            Field::Cyclotomic { l } => {
                let inner = text
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| err("expected [c0,c1,...]"))?;
                let mut coords = Vec::new();
                if !inner.trim().is_empty() {
                    for part in inner.split(',') {
                        coords.push(
                            parse_big_rational(part.trim()).ok_or_else(|| err("bad coordinate"))?,
                        );
                    }
                }
                if coords.len() > Cyclo::degree_of_field(l) {
                    return Err(err("too many coordinates for the field degree"));
                }
                Ok(Scalar::Cyc(Cyclo::from_rational_coords(l, &coords)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn parse_big_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s).ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Parse `(num)/(den)` or a bare integer polynomial in q.
fn parse_ratfunc(s: &str) -> Option<RatFunc> {
    let s = s.trim();
    if let Some(stripped) = s.strip_prefix('(') {
        // (num)/(den)
        let close = find_matching_paren(stripped)?;
        let num_text = &stripped[..close];
        let rest = stripped[close + 1..].trim_start();
        let rest = rest.strip_prefix('/')?;
        let rest = rest.trim_start();
        let den_text = rest.strip_prefix('(')?.strip_suffix(')')?;
        let num = parse_zpoly(num_text)?;
        let den = parse_zpoly(den_text)?;
        RatFunc::new(num, den)
    } else {
        parse_zpoly(s).map(RatFunc::from_poly)
    }
}

fn find_matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Parse sums of terms `c`, `q`, `c*q^k`, `-q^k`, ...
fn parse_zpoly(s: &str) -> Option<ZPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut acc = ZPoly::zero();
    let mut rest = compact.as_str();
    let mut sign = BigInt::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest
            .char_indices()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        acc = acc.add(&parse_zterm(term, &sign)?);
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        rest = &rest[end + 1..];
    }
    Some(acc)
}

fn parse_zterm(term: &str, sign: &BigInt) -> Option<ZPoly> {
    if term.is_empty() {
        return None;
    }
    let (coef_text, var_text) = match term.find('q') {
        Some(i) => (&term[..i], &term[i..]),
        None => (term, ""),
    };
    let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
    let coef = if coef_text.is_empty() {
        BigInt::one()
    } else {
        BigInt::from_str(coef_text).ok()?
    };
    let deg = if var_text.is_empty() {
        0usize
    } else if var_text == "q" {
        1
    } else {
        let e = var_text.strip_prefix("q^")?;
        e.parse::<usize>().ok()?
    };
    Some(ZPoly::monomial(sign * coef, deg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip_rationals() {
        for s in ["0", "5", "-7/3"] {
            let v = Scalar::parse(s, Field::Rationals).unwrap();
            assert_eq!(v.to_text(), *s);
        }
    }

    #[test]
    fn text_roundtrip_ratfunc() {
        let q = Scalar::q();
        let v = q.add(&q.pow(-1).unwrap()); // (q^2 + 1)/(q)
        let text = v.to_text();
        let back = Scalar::parse(&text, Field::RationalFunctions).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn text_roundtrip_cyclotomic() {
        let f = Field::Cyclotomic { l: 5 };
        let eps = primitive_root(5);
        let v = eps.pow(-1).unwrap().sub(&Scalar::rational(1, 3, f));
        let back = Scalar::parse(&v.to_text(), f).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn mixed_field_panics() {
        let a = Scalar::int(1, Field::Rationals);
        let b = Scalar::q();
        assert!(std::panic::catch_unwind(|| a.add(&b)).is_err());
    }

    #[test]
    fn canonical_zero_after_cancellation() {
        let q = Scalar::q();
        let a = q.add(&q.pow(-3).unwrap());
        let z = a.sub(&a);
        assert_eq!(z, Scalar::zero(Field::RationalFunctions));
    }
}
