//! Abelian grading groups: the free group Z^n or the finite group (Z/l)^n.

use serde::{Deserialize, Serialize};

pub type GroupElem = Vec<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub struct GradingGroup {
    pub rank: usize,
    /// `None` for Z^n, `Some(l)` for (Z/l)^n.
    pub modulus: Option<u32>,
}

impl GradingGroup {
    pub fn free(rank: usize) -> Self {
        GradingGroup {
            rank,
            modulus: None,
        }
    }

    pub fn finite(rank: usize, l: u32) -> Self {
        assert!(l >= 1);
        GradingGroup {
            rank,
            modulus: Some(l),
        }
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.rank]
    }

    /// Reduce to the canonical representative (entries in 0..l when finite).
    pub fn reduce(&self, v: &[i64]) -> GroupElem {
        assert_eq!(v.len(), self.rank, "group element length != rank");
        match self.modulus {
            None => v.to_vec(),
            Some(l) => v.iter().map(|&x| x.rem_euclid(l as i64)).collect(),
        }
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> GroupElem {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> GroupElem {
        self.reduce(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> GroupElem {
        self.add(a, &self.neg(b))
    }

    /// Unit vector e_i as a group element.
    pub fn unit(&self, i: usize) -> GroupElem {
        let mut v = self.zero();
        v[i] = 1;
        self.reduce(&v)
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn order(&self) -> Option<u64> {
        self.modulus.map(|l| (l as u64).pow(self.rank as u32))
    }

    /// All elements in lexicographic order (finite groups only).
    pub fn elements(&self) -> Vec<GroupElem> {
        let l = self.modulus.expect("elements() needs a finite group") as i64;
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        loop {
            out.push(cur.clone());
            let mut i = self.rank;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < l {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_mod_l() {
        let g = GradingGroup::finite(2, 3);
        assert_eq!(g.reduce(&[-1, 4]), vec![2, 1]);
        assert_eq!(g.add(&[2, 2], &[2, 2]), vec![1, 1]);
    }

    #[test]
    fn free_group_untouched() {
        let g = GradingGroup::free(2);
        assert_eq!(g.add(&[-3, 5], &[1, 1]), vec![-2, 6]);
    }

    #[test]
    fn element_enumeration_is_lexicographic() {
        let g = GradingGroup::finite(2, 2);
        assert_eq!(
            g.elements(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }
}
