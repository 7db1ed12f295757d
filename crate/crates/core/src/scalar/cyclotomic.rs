//! Arithmetic in the cyclotomic field Q(ε) with ε a primitive l-th root of
//! unity, represented as residues modulo the l-th cyclotomic polynomial.
//!
//! Elements are stored as an integer coefficient vector in the power basis
//! 1, ε, ..., ε^(d-1) (d = deg Φ_l) over a single positive denominator, with
//! gcd(content(num), den) = 1. The representation is canonical, so equality
//! is coefficient-wise.

use super::qpoly::QPoly;
use super::zpoly::ZPoly;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::sync::Mutex;

static CYCLO_CACHE: Lazy<Mutex<BTreeMap<u32, ZPoly>>> = Lazy::new(|| Mutex::new(BTreeMap::new()));

/// The l-th cyclotomic polynomial Φ_l, computed by exact division of x^l - 1
/// by the product of Φ_d over proper divisors d of l.
pub fn cyclotomic_poly(l: u32) -> ZPoly {
    assert!(l >= 1, "cyclotomic index must be positive");
    if let Some(p) = CYCLO_CACHE.lock().unwrap().get(&l) {
        return p.clone();
    }
    let p = if l == 1 {
        ZPoly::from_i64s(&[-1, 1])
    } else {
        let mut num = ZPoly::monomial(BigInt::one(), l as usize).sub(&ZPoly::one());
        for d in 1..l {
            if l % d == 0 {
                let phi_d = cyclotomic_poly(d);
                num = num
                    .exact_div(&phi_d)
                    .expect("x^l - 1 is divisible by lower cyclotomics");
            }
        }
        num
    };
    CYCLO_CACHE.lock().unwrap().insert(l, p.clone());
    p
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclo {
    l: u32,
    /// Coefficients of the numerator in the power basis, length deg Φ_l.
    num: Vec<BigInt>,
    /// Positive common denominator.
    den: BigInt,
}

impl Cyclo {
    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn degree_of_field(l: u32) -> usize {
        cyclotomic_poly(l).degree().unwrap()
    }

    pub fn zero(l: u32) -> Self {
        let d = Self::degree_of_field(l);
        Cyclo {
            l,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(l: u32, r: &BigRational) -> Self {
        let d = Self::degree_of_field(l);
        let mut num = vec![BigInt::zero(); d];
        num[0] = r.numer().clone();
        let mut c = Cyclo {
            l,
            num,
            den: r.denom().clone(),
        };
        c.normalize();
        c
    }

    pub fn from_i64(l: u32, n: i64) -> Self {
        Self::from_rational(l, &BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one(l: u32) -> Self {
        Self::from_i64(l, 1)
    }

    /// The canonical generator ε (the class of x).
    pub fn root(l: u32) -> Self {
        let d = Self::degree_of_field(l);
        if d == 1 {
            // Φ_1 = x - 1, Φ_2 = x + 1: the class of x is ±1.
            return if l == 1 {
                Self::from_i64(1, 1)
            } else {
                Self::from_i64(2, -1)
            };
        }
        let mut num = vec![BigInt::zero(); d];
        num[1] = BigInt::one();
        Cyclo {
            l,
            num,
            den: BigInt::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Coefficient vector as rationals in the power basis.
    pub fn rational_coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn from_rational_coords(l: u32, coords: &[BigRational]) -> Self {
        let d = Self::degree_of_field(l);
        assert!(coords.len() <= d, "coordinate vector too long for Q(e_{})", l);
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let mut num = vec![BigInt::zero(); d];
        for (i, c) in coords.iter().enumerate() {
            num[i] = c.numer() * (&den / c.denom());
        }
        let mut out = Cyclo { l, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if g.is_one() || g.is_zero() {
            if self.is_zero() {
                self.den = BigInt::one();
            }
            return;
        }
        self.den = &self.den / &g;
        for c in self.num.iter_mut() {
            *c = &*c / &g;
        }
    }

    fn check_same(&self, other: &Cyclo) {
        assert_eq!(
            self.l, other.l,
            "cyclotomic operands from different fields (l={} vs l={})",
            self.l, other.l
        );
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.check_same(other);
        let den = self.den.lcm(&other.den);
        let a = &den / &self.den;
        let b = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| x * &a + y * &b)
            .collect();
        let mut out = Cyclo { l: self.l, num, den };
        out.normalize();
        out
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            l: self.l,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        self.check_same(other);
        let d = self.num.len();
        if d == 0 {
            return self.clone();
        }
        let mut conv = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let phi = cyclotomic_poly(self.l);
        let num = reduce_mod_monic(conv, &phi, d);
        let mut out = Cyclo {
            l: self.l,
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let phi = QPoly::from_zpoly(&cyclotomic_poly(self.l));
        let me = QPoly::from_coeffs(self.rational_coords());
        let (g, s, _t) = me.ext_gcd(&phi);
        // Φ_l is irreducible over Q, so the gcd with a nonzero residue is 1.
        assert!(
            g == QPoly::one(),
            "cyclotomic inverse: unexpected gcd (Φ_l not coprime to element)"
        );
        let (_, rem) = s.divrem(&phi);
        let d = self.num.len();
        let mut coords = vec![BigRational::zero(); d];
        for i in 0..d {
            coords[i] = rem.coeff(i);
        }
        Some(Cyclo::from_rational_coords(self.l, &coords))
    }

    pub fn pow(&self, e: i64) -> Option<Cyclo> {
        if e == 0 {
            return Some(Cyclo::one(self.l));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Cyclo::one(self.l);
        let mut cur = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&cur);
            }
            cur = cur.mul(&cur);
            exp >>= 1;
        }
        Some(acc)
    }
}

/// Reduce an integer coefficient vector modulo a monic polynomial, returning
/// exactly `width` coefficients.
fn reduce_mod_monic(mut v: Vec<BigInt>, m: &ZPoly, width: usize) -> Vec<BigInt> {
    let dm = m.degree().unwrap();
    let mut k = v.len();
    while k > dm {
        k -= 1;
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[k], BigInt::zero());
        for j in 0..dm {
            let t = &c * &m.coeff(j);
            v[k - dm + j] -= t;
        }
    }
    v.truncate(dm);
    v.resize(width, BigInt::zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), ZPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ZPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ZPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ZPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ZPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ZPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_satisfies_minimal_polynomial() {
        for l in [3u32, 4, 5, 7, 12] {
            let eps = Cyclo::root(l);
            let phi = cyclotomic_poly(l);
            let mut acc = Cyclo::zero(l);
            for (i, c) in phi.coeffs().iter().enumerate() {
                let term = eps
                    .pow(i as i64)
                    .unwrap()
                    .mul(&Cyclo::from_rational(l, &BigRational::from_integer(c.clone())));
                acc = acc.add(&term);
            }
            assert!(acc.is_zero(), "Φ_{}(ε) != 0", l);
        }
    }

    #[test]
    fn root_order_is_exact() {
        for l in [1u32, 2, 3, 4, 5, 6, 12] {
            let eps = Cyclo::root(l);
            assert!(eps.pow(l as i64).unwrap().is_one());
            for m in 1..l {
                assert!(!eps.pow(m as i64).unwrap().is_one(), "ε^{} = 1 for l={}", m, l);
            }
        }
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let l = 5;
        let eps = Cyclo::root(l);
        let x = eps.add(&Cyclo::from_i64(l, 2)); // 2 + ε
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn power_basis_inverse_example() {
        // (ε - ε^{-1})^{-1} for l = 3 lives in Q(ε) with rational coordinates.
        let l = 3;
        let eps = Cyclo::root(l);
        let x = eps.sub(&eps.pow(-1).unwrap());
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }
}
