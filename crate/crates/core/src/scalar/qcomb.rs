//! Quantum integers, factorials and Gaussian binomials in the balanced
//! convention [n]_q = (q^n - q^{-n})/(q - q^{-1}).

use super::cyclotomic::Cyclo;
use super::zpoly::ZPoly;
use super::{Scalar, ScalarError};
use num::bigint::BigInt;
use num::One;

/// A Laurent polynomial with integer coefficients: `poly(q) * q^shift`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentInt {
    pub poly: ZPoly,
    pub shift: i64,
}

impl LaurentInt {
    pub fn one() -> Self {
        LaurentInt {
            poly: ZPoly::one(),
            shift: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Balanced quantum integer as a Laurent polynomial:
    /// q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0; [-n] = -[n]; [0] = 0.
    pub fn quantum_integer(n: i64) -> Self {
        if n == 0 {
            return LaurentInt {
                poly: ZPoly::zero(),
                shift: 0,
            };
        }
        let m = n.unsigned_abs() as usize;
        // Σ_{i=0}^{m-1} q^{2i} shifted by 1-m.
        let mut coeffs = vec![BigInt::from(0); 2 * m - 1];
        for i in 0..m {
            coeffs[2 * i] = BigInt::one();
        }
        let poly = ZPoly::from_coeffs(coeffs);
        let poly = if n < 0 { poly.neg() } else { poly };
        LaurentInt {
            poly,
            shift: 1 - m as i64,
        }
    }

    pub fn mul(&self, other: &LaurentInt) -> LaurentInt {
        LaurentInt {
            poly: self.poly.mul(&other.poly),
            shift: self.shift + other.shift,
        }
    }

    /// Exact division by another Laurent polynomial; `None` if not exact.
    pub fn exact_div(&self, other: &LaurentInt) -> Option<LaurentInt> {
        if self.is_zero() {
            return Some(LaurentInt {
                poly: ZPoly::zero(),
                shift: 0,
            });
        }
        let q = self.poly.exact_div(&other.poly)?;
        Some(LaurentInt {
            poly: q,
            shift: self.shift - other.shift,
        })
    }

    /// Evaluate at an invertible scalar.
    pub fn eval(&self, q: &Scalar) -> Result<Scalar, ScalarError> {
        let field = q.field();
        let mut acc = Scalar::zero(field);
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            if num::Zero::is_zero(c) {
                continue;
            }
            let term = q
                .pow(self.shift + i as i64)?
                .mul(&Scalar::from_bigint(c, field));
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// The balanced quantum integer [n]_q = (q^n - q^{-n})/(q - q^{-1}).
///
/// Errors with `DivisionByZero` when q - q^{-1} is not invertible (q = ±1).
pub fn quantum_integer(n: i64, q: &Scalar) -> Result<Scalar, ScalarError> {
    let denom = q.sub(&q.inv()?);
    if denom.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    LaurentInt::quantum_integer(n).eval(q)
}

/// The Gaussian binomial [n m]_q = [n]!/([m]![n-m]!), computed through the
/// telescoped product Π_{k=1..m} [n-m+k]/[k] with exact Laurent cancellation
/// before any evaluation, so roots of unity never hit 0/0.
pub fn quantum_binomial(n: i64, m: i64, q: &Scalar) -> Result<Scalar, ScalarError> {
    let lp = quantum_binomial_laurent(n, m)?;
    lp.eval(q)
}

/// The Gaussian binomial as an exact integer Laurent polynomial.
pub fn quantum_binomial_laurent(n: i64, m: i64) -> Result<LaurentInt, ScalarError> {
    if n < 0 || m < 0 || m > n {
        return Err(ScalarError::OutOfRange(format!(
            "quantum binomial needs 0 <= m <= n, got n={} m={}",
            n, m
        )));
    }
    let mut acc = LaurentInt::one();
    for k in 1..=m {
        acc = acc.mul(&LaurentInt::quantum_integer(n - m + k));
        acc = acc
            .exact_div(&LaurentInt::quantum_integer(k))
            .expect("Gaussian binomial telescoping divides exactly");
    }
    Ok(acc)
}

/// The canonical primitive l-th root of unity ε as a cyclotomic scalar.
pub fn primitive_root(l: u32) -> Scalar {
    Scalar::Cyc(Cyclo::root(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn quantum_integer_basics() {
        let q = Scalar::q();
        assert_eq!(quantum_integer(1, &q).unwrap(), Scalar::int(1, Field::RationalFunctions));
        assert_eq!(quantum_integer(0, &q).unwrap(), Scalar::zero(Field::RationalFunctions));
        // [2]_q = q + q^{-1}, evaluated by hand from the defining formula
        let expect = q.add(&q.pow(-1).unwrap());
        assert_eq!(quantum_integer(2, &q).unwrap(), expect);
        // balanced: [-2] = -[2]
        assert_eq!(quantum_integer(-2, &q).unwrap(), expect.neg());
    }

    #[test]
    fn quantum_integer_at_root_of_unity() {
        let eps = primitive_root(3);
        assert!(quantum_integer(3, &eps).unwrap().is_zero());
        assert!(!quantum_integer(2, &eps).unwrap().is_zero());
    }

    #[test]
    fn quantum_integer_rejects_q_pm1() {
        let one = Scalar::int(1, Field::Rationals);
        assert_eq!(quantum_integer(2, &one), Err(ScalarError::DivisionByZero));
        let minus_one = primitive_root(2);
        assert_eq!(quantum_integer(2, &minus_one), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn binomial_examples() {
        let q = Scalar::q();
        // [n 0] = 1
        assert!(quantum_binomial(5, 0, &q).unwrap().is_one());
        // [2 1] = q + q^{-1}
        assert_eq!(
            quantum_binomial(2, 1, &q).unwrap(),
            q.add(&q.pow(-1).unwrap())
        );
        // [3 1] = q^2 + 1 + q^{-2}
        let expect = q
            .pow(2)
            .unwrap()
            .add(&Scalar::one(Field::RationalFunctions))
            .add(&q.pow(-2).unwrap());
        assert_eq!(quantum_binomial(3, 1, &q).unwrap(), expect);
    }

    #[test]
    fn binomial_out_of_range() {
        let q = Scalar::q();
        assert!(matches!(
            quantum_binomial(2, 3, &q),
            Err(ScalarError::OutOfRange(_))
        ));
        assert!(matches!(
            quantum_binomial(2, -1, &q),
            Err(ScalarError::OutOfRange(_))
        ));
    }

    #[test]
    fn binomial_no_division_by_zero_at_roots() {
        // [3 1] at l = 3 evaluates cleanly to [3]_ε = 0 via telescoping.
        let eps = primitive_root(3);
        assert!(quantum_binomial(3, 1, &eps).unwrap().is_zero());
        // [6 3] at l = 3 is also well defined.
        let v = quantum_binomial(6, 3, &eps).unwrap();
        assert!(!v.is_zero());
    }

    #[test]
    fn zero_iff_divides() {
        // Balanced convention: [n]_ε = 0 iff ε^{2n} = 1. For odd l that is
        // exactly l | n; for even l >= 4 it is l | 2n.
        for l in 3..=12u32 {
            let eps = primitive_root(l);
            for n in 0..=(3 * l as i64) {
                let v = quantum_integer(n, &eps).unwrap();
                let expect = if l % 2 == 1 {
                    n % (l as i64) == 0
                } else {
                    (2 * n) % (l as i64) == 0
                };
                assert_eq!(v.is_zero(), expect, "l={} n={}", l, n);
            }
        }
    }

    #[test]
    fn primitive_root_examples() {
        assert!(primitive_root(1).is_one());
        let e3 = primitive_root(3);
        let sum = e3.mul(&e3).add(&e3).add(&Scalar::one(e3.field()));
        assert!(sum.is_zero(), "Φ_3(ε) = ε^2 + ε + 1 = 0");
        let e4 = primitive_root(4);
        assert_eq!(e4.mul(&e4), Scalar::int(-1, e4.field()));
    }
}
