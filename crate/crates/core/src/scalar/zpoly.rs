//! Dense univariate polynomials with `BigInt` coefficients.
//!
//! Coefficients are stored in ascending degree order. Invariant: the vector
//! is empty (zero polynomial) or its last entry is nonzero.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = ZPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        ZPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        ZPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        ZPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// gcd of all coefficients, non-negative; zero polynomial has content 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; returns `None` when `other` does not divide `self`
    /// over the rationals or the quotient is not integral.
    pub fn exact_div(&self, other: &ZPoly) -> Option<ZPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dn = self.degree()?;
        let dd = other.degree().unwrap();
        if dn < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        let lead = other.leading().unwrap();
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[k + j] -= t;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(quo))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
    fn pseudo_rem(&self, other: &ZPoly) -> ZPoly {
        let db = other.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lead = other.leading().unwrap().clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.leading().unwrap().clone();
            // r := lead * r - c * x^(dr-db) * other
            r = r.mul_scalar(&lead).sub(&other.mul_scalar(&c).shift_up(dr - db));
        }
        r
    }

    /// Primitive gcd (positive leading coefficient); gcd(0, b) = primitive(b).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive();
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Render with the given variable name, e.g. `q^2 - 2*q + 1`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                format!("{}", mag)
            } else {
                let pow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{}^{}", var, i)
                };
                if mag.is_one() {
                    pow
                } else {
                    format!("{}*{}", mag, pow)
                }
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{}", body));
                } else {
                    parts.push(body);
                }
            } else if c.is_negative() {
                parts.push(format!(" - {}", body));
            } else {
                parts.push(format!(" + {}", body));
            }
        }
        parts.concat()
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_roundtrip() {
        let a = ZPoly::from_i64s(&[-1, 0, 0, 0, 0, 1]); // x^5 - 1
        let b = ZPoly::from_i64s(&[-1, 1]); // x - 1
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, ZPoly::from_i64s(&[1, 1, 1, 1, 1]));
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn inexact_division_detected() {
        let a = ZPoly::from_i64s(&[1, 1]); // x + 1
        let b = ZPoly::from_i64s(&[0, 2]); // 2x
        assert!(a.exact_div(&b).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let a = ZPoly::from_i64s(&[-1, 1]); // x-1
        let b = ZPoly::from_i64s(&[1, 1]); // x+1
        let c = ZPoly::from_i64s(&[0, 3]); // 3x
        let p = a.mul(&b);
        let q = a.mul(&c);
        assert_eq!(p.gcd(&q), a);
    }

    #[test]
    fn text_rendering() {
        let p = ZPoly::from_i64s(&[1, -2, 1]);
        assert_eq!(p.to_text("q"), "q^2 - 2*q + 1");
    }
}
