//! Bicharacters χ(g, h) = base^(g·h) on a grading group, where g·h is the
//! Cartan form extended bilinearly. These induce the diagonal braidings
//! Ψ(v ⊗ w) = χ(|v|, |w|) (w ⊗ v) of the ambient category.

use crate::cartan::CartanDatum;
use crate::grading::{GradingGroup, GroupElem};
use crate::scalar::{Field, Scalar};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum BicharError {
    #[error("base must be invertible (nonzero)")]
    BaseNotInvertible,
    #[error("base^l != 1: {0} is not an l-th root of unity for l = {1}")]
    BaseNotRootOfUnity(String, u32),
    #[error("group rank {0} != Cartan rank {1}")]
    RankMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicharacter {
    pub group: GradingGroup,
    pub datum: CartanDatum,
    pub base: Scalar,
}

impl Bicharacter {
    /// χ with χ(g_i, g_j) = base^(i·j); when the group is (Z/l)^n the base
    /// must satisfy base^l = 1 so that χ is well defined on residues.
    pub fn new(datum: CartanDatum, base: Scalar, group: GradingGroup) -> Result<Self, BicharError> {
        if group.rank != datum.rank() {
            return Err(BicharError::RankMismatch(group.rank, datum.rank()));
        }
        if base.is_zero() {
            return Err(BicharError::BaseNotInvertible);
        }
        if let Some(l) = group.modulus {
            let p = base.pow(l as i64).map_err(|_| BicharError::BaseNotInvertible)?;
            if !p.is_one() {
                return Err(BicharError::BaseNotRootOfUnity(base.to_text(), l));
            }
        }
        Ok(Bicharacter { group, datum, base })
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn chi(&self, g: &GroupElem, h: &GroupElem) -> Scalar {
        let e = self.datum.pair(g, h);
        self.base
            .pow(e)
            .expect("bicharacter base is invertible by construction")
    }

    pub fn chi_inv(&self, g: &GroupElem, h: &GroupElem) -> Scalar {
        let e = self.datum.pair(g, h);
        self.base
            .pow(-e)
            .expect("bicharacter base is invertible by construction")
    }

    /// A trivial bicharacter over the given field: χ ≡ 1 on a rank-1 group.
    /// Used to host ungraded (ordinary, vector-space) data.
    pub fn trivial(field: Field) -> Bicharacter {
        Bicharacter {
            group: GradingGroup::finite(1, 1),
            datum: CartanDatum::new(vec![vec![2]]).unwrap(),
            base: Scalar::one(field),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qcomb::primitive_root;

    #[test]
    fn a1_generic_value() {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap();
        let q = Scalar::q();
        assert_eq!(chi.chi(&vec![1], &vec![1]), q.pow(2).unwrap());
    }

    #[test]
    fn a2_offdiagonal_value() {
        let d = CartanDatum::named("A2").unwrap();
        let chi = Bicharacter::new(d, Scalar::q(), GradingGroup::free(2)).unwrap();
        let q = Scalar::q();
        assert_eq!(chi.chi(&vec![1, 0], &vec![0, 1]), q.pow(-1).unwrap());
        assert!(chi.chi(&vec![0, 0], &vec![0, 1]).is_one());
    }

    #[test]
    fn biadditivity() {
        let d = CartanDatum::named("B2").unwrap();
        let chi = Bicharacter::new(d, Scalar::q(), GradingGroup::free(2)).unwrap();
        let g = vec![1i64, -2];
        let g2 = vec![0i64, 3];
        let h = vec![2i64, 1];
        let lhs = chi.chi(&chi.group.add(&g, &g2), &h);
        let rhs = chi.chi(&g, &h).mul(&chi.chi(&g2, &h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn root_of_unity_base_required_mod_l() {
        let d = CartanDatum::named("A1").unwrap();
        let bad = Bicharacter::new(
            d.clone(),
            Scalar::int(2, Field::Rationals),
            GradingGroup::finite(1, 3),
        );
        assert!(matches!(bad, Err(BicharError::BaseNotRootOfUnity(_, 3))));
        let ok = Bicharacter::new(d, primitive_root(3), GradingGroup::finite(1, 3));
        assert!(ok.is_ok());
    }

    #[test]
    fn well_defined_on_residues() {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Bicharacter::new(d, primitive_root(3), GradingGroup::finite(1, 3)).unwrap();
        // χ(g, h) must agree on representatives congruent mod 3
        let a = chi.chi(&vec![1], &vec![2]);
        let b = chi.chi(&vec![1], &chi.group.reduce(&[5]));
        assert_eq!(a, b);
    }
}
