//! The field of rational functions in the indeterminate q, as reduced
//! fractions of integer-coefficient polynomials.
//!
//! Canonical form: denominator nonzero with positive leading coefficient,
//! primitive parts coprime, and integer contents coprime. Two values are
//! equal iff their representations are identical.

use super::zpoly::ZPoly;
use num::bigint::BigInt;
use num::{Integer, One, Signed};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub fn new(num: ZPoly, den: ZPoly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        let mut r = RatFunc { num, den };
        r.normalize();
        Some(r)
    }

    pub fn zero() -> Self {
        RatFunc {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatFunc {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(ZPoly::constant(BigInt::from(n)))
    }

    /// The generator q.
    pub fn q() -> Self {
        Self::from_poly(ZPoly::x())
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == ZPoly::one() && self.den == ZPoly::one()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = ZPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) || !g.leading().unwrap().is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let mut cn = self.num.content();
        let cd = self.den.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            self.num = ZPoly::from_coeffs(self.num.coeffs().iter().map(|x| x / &c).collect());
            self.den = ZPoly::from_coeffs(self.den.coeffs().iter().map(|x| x / &c).collect());
        }
        if self.den.leading().unwrap().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        cn = self.num.content();
        debug_assert!(cn.gcd(&self.den.content()).is_one());
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).unwrap()
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Option<RatFunc> {
        if e == 0 {
            return Some(RatFunc::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut cur = base;
        let mut exp = e.unsigned_abs();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&cur);
            }
            cur = cur.mul(&cur);
            exp >>= 1;
        }
        Some(acc)
    }

    pub fn to_text(&self) -> String {
        if self.den == ZPoly::one() {
            self.num.to_text("q")
        } else {
            format!("({})/({})", self.num.to_text("q"), self.den.to_text("q"))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        // (2q^2 - 2) / (4q - 4) = (q + 1) / 2
        let num = ZPoly::from_i64s(&[-2, 0, 2]);
        let den = ZPoly::from_i64s(&[-4, 4]);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.numerator(), &ZPoly::from_i64s(&[1, 1]));
        assert_eq!(r.denominator(), &ZPoly::from_i64s(&[2]));
    }

    #[test]
    fn sign_normalization() {
        let r = RatFunc::new(ZPoly::from_i64s(&[1]), ZPoly::from_i64s(&[0, -1])).unwrap();
        assert_eq!(r.denominator().leading().unwrap(), &BigInt::from(1));
        assert_eq!(r.numerator(), &ZPoly::from_i64s(&[-1]));
    }

    #[test]
    fn subtraction_cancels_to_canonical_zero() {
        let q = RatFunc::q();
        let a = q.add(&q.inv().unwrap()); // q + 1/q
        let diff = a.sub(&a);
        assert!(diff.is_zero());
        assert_eq!(diff, RatFunc::zero());
    }

    #[test]
    fn balanced_quantum_two() {
        // q + q^{-1} = (q^2 + 1)/q
        let q = RatFunc::q();
        let v = q.add(&q.pow(-1).unwrap());
        assert_eq!(v.numerator(), &ZPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(v.denominator(), &ZPoly::from_i64s(&[0, 1]));
    }
}
