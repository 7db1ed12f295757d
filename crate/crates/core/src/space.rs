//! Finite-dimensional vector spaces graded by an abelian group, carrying a
//! bicharacter braiding. Tensor products use lexicographic basis order in
//! factor order throughout.

use crate::bichar::Bicharacter;
use crate::grading::GroupElem;
use crate::scalar::Field;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("basis degree has wrong length (expected rank {0})")]
    BadDegree(usize),
    #[error("spaces carry different bicharacters")]
    BicharMismatch,
}

#[derive(Debug)]
pub struct SpaceData {
    pub bichar: Arc<Bicharacter>,
    pub labels: Vec<String>,
    pub degrees: Vec<GroupElem>,
}

/// A braided space: cheap to clone, compared by content.
#[derive(Clone, Debug)]
pub struct Space(Arc<SpaceData>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.bichar == other.0.bichar
                && self.0.labels == other.0.labels
                && self.0.degrees == other.0.degrees)
    }
}
impl Eq for Space {}

impl Space {
    pub fn new(
        bichar: Arc<Bicharacter>,
        basis: Vec<(String, GroupElem)>,
    ) -> Result<Space, SpaceError> {
        let mut labels = Vec::with_capacity(basis.len());
        let mut degrees = Vec::with_capacity(basis.len());
        for (name, deg) in basis {
            if labels.contains(&name) {
                return Err(SpaceError::DuplicateName(name));
            }
            if deg.len() != bichar.group.rank {
                return Err(SpaceError::BadDegree(bichar.group.rank));
            }
            degrees.push(bichar.group.reduce(&deg));
            labels.push(name);
        }
        Ok(Space(Arc::new(SpaceData {
            bichar,
            labels,
            degrees,
        })))
    }

    /// The unit object: one basis vector "1" in degree zero.
    pub fn unit(bichar: Arc<Bicharacter>) -> Space {
        let zero = bichar.group.zero();
        Space::new(bichar, vec![("1".to_string(), zero)]).unwrap()
    }

    pub fn bichar(&self) -> &Arc<Bicharacter> {
        &self.0.bichar
    }

    pub fn field(&self) -> Field {
        self.0.bichar.field()
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn degree(&self, i: usize) -> &GroupElem {
        &self.0.degrees[i]
    }

    pub fn degrees(&self) -> &[GroupElem] {
        &self.0.degrees
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Tensor product; basis ordered lexicographically in factor order.
    pub fn tensor(&self, other: &Space) -> Result<Space, SpaceError> {
        if self.0.bichar != other.0.bichar {
            return Err(SpaceError::BicharMismatch);
        }
        let group = &self.0.bichar.group;
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                basis.push((
                    format!("{}*{}", self.label(i), other.label(j)),
                    group.add(self.degree(i), other.degree(j)),
                ));
            }
        }
        // Tensor labels may collide only if factor labels contain '*'; keep
        // uniqueness by falling back to positional names in that case.
        let mut seen = std::collections::BTreeSet::new();
        let ok = basis.iter().all(|(n, _)| seen.insert(n.clone()));
        if !ok {
            for (k, b) in basis.iter_mut().enumerate() {
                b.0 = format!("t{}", k);
            }
        }
        Space::new(self.0.bichar.clone(), basis)
    }

    pub fn tensor_many(factors: &[&Space]) -> Result<Space, SpaceError> {
        assert!(!factors.is_empty());
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = acc.tensor(f)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space[dim {}]", self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::grading::GradingGroup;
    use crate::scalar::Scalar;

    fn a1_space() -> Space {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        Space::new(chi, vec![("e1".into(), vec![1])]).unwrap()
    }

    #[test]
    fn tensor_indexing_is_lexicographic() {
        let v = a1_space();
        let vv = v.tensor(&v).unwrap();
        assert_eq!(vv.dim(), 1);
        assert_eq!(vv.label(0), "e1*e1");
        assert_eq!(vv.degree(0), &vec![2]);
    }

    #[test]
    fn duplicate_names_rejected() {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        let bad = Space::new(
            chi,
            vec![("x".into(), vec![0]), ("x".into(), vec![1])],
        );
        assert!(matches!(bad, Err(SpaceError::DuplicateName(_))));
    }
}
