//! The triangular straightening engine: products on the normal-form basis
//! lower-block × group algebra × upper-block, where upper letters pass lower
//! letters through a scalar twist plus an optional group-algebra correction.
//!
//! Multiplication of two monomials folds the right factor's letters into the
//! left operand one at a time. Termination is by (upper length, position)
//! induction; confluence is not assumed — associativity is verified after
//! construction by the axiom checker.

use super::elem::{Elem, Mono};
use crate::bichar::Bicharacter;
use crate::grading::{GradingGroup, GroupElem};
use crate::nichols::{NicholsError, WordBialgebra};
use crate::scalar::{Field, Scalar, ScalarError};
use crate::words::Word;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("product exceeds the block cutoff (total degree {0}); raise --cutoff")]
    Truncated(u32),
    #[error("straightening guard exceeded ({0} terms); the relation set looks inconsistent")]
    DepthGuard(u64),
    #[error("scalar error during straightening: {0}")]
    Scalar(#[from] ScalarError),
    #[error("no group block but a nonzero group element was multiplied")]
    NoGroupBlock,
}

impl From<NicholsError> for EngineError {
    fn from(e: NicholsError) -> Self {
        match e {
            NicholsError::Truncated(l) => EngineError::Truncated(l),
            other => panic!("block algebra failure during straightening: {}", other),
        }
    }
}

/// One letter block of the triangular decomposition.
pub struct BlockData {
    pub alg: Arc<WordBialgebra>,
}

impl BlockData {
    fn reduce(&self, w: &Word) -> Result<Vec<(Word, Scalar)>, EngineError> {
        let terms = self.alg.reduce_word(w)?;
        Ok(terms
            .into_iter()
            .map(|(idx, c)| (self.alg.basis_word(idx).clone(), c))
            .collect())
    }

    fn letter_degree(&self, j: u8) -> &GroupElem {
        &self.alg.letters.letter_degrees[j as usize]
    }

    fn word_degree(&self, w: &Word) -> GroupElem {
        self.alg.letters.word_degree(w)
    }
}

/// Cross rule: upper_i · lower_j = scalar[i][j] · lower_j · upper_i
///             + δ_ij · Σ (group element, coefficient).
pub struct CrossRule {
    pub scalar: Vec<Vec<Scalar>>,
    pub correction: Vec<Vec<(GroupElem, Scalar)>>,
}

pub struct TriangularAlgebra {
    pub field: Field,
    pub bichar: Arc<Bicharacter>,
    pub lower: Option<BlockData>,
    pub kgroup: Option<GradingGroup>,
    pub upper: Option<BlockData>,
    pub cross: Option<CrossRule>,
    /// term-count guard for a single product
    pub guard: u64,
}

impl TriangularAlgebra {
    pub fn group_rank(&self) -> usize {
        self.kgroup.map(|g| g.rank).unwrap_or(0)
    }

    pub fn unit_mono(&self) -> Mono {
        Mono::unit(self.group_rank())
    }

    pub fn unit_elem(&self) -> Elem {
        Elem::unit(self.group_rank(), self.field)
    }

    fn kgroup(&self) -> Result<&GradingGroup, EngineError> {
        self.kgroup.as_ref().ok_or(EngineError::NoGroupBlock)
    }

    /// χ(λ, degree) for K-commutation.
    fn kchi(&self, lambda: &GroupElem, degree: &GroupElem) -> Scalar {
        self.bichar.chi(lambda, degree)
    }

    /// elem · (upper letter j)
    pub fn mul_upper_letter(&self, e: &Elem, j: u8) -> Result<Elem, EngineError> {
        let upper = self.upper.as_ref().expect("algebra has no upper block");
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            let mut w = m.hi.clone();
            w.push(j);
            for (word, s) in upper.reduce(&w)? {
                out.add_term(
                    Mono {
                        lo: m.lo.clone(),
                        grp: m.grp.clone(),
                        hi: word,
                    },
                    c.mul(&s),
                );
            }
        }
        Ok(out)
    }

    /// elem · K^mu
    pub fn mul_group(&self, e: &Elem, mu: &GroupElem) -> Result<Elem, EngineError> {
        if mu.iter().all(|&x| x == 0) {
            return Ok(e.clone());
        }
        let group = self.kgroup()?;
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            // E^hi · K^mu = χ(mu, |hi|)^{-1} · K^mu · E^hi
            let scal = match &self.upper {
                Some(up) if !m.hi.is_empty() => {
                    let deg = up.word_degree(&m.hi);
                    self.kchi(mu, &deg).inv()?
                }
                _ => Scalar::one(self.field),
            };
            out.add_term(
                Mono {
                    lo: m.lo.clone(),
                    grp: group.add(&m.grp, mu),
                    hi: m.hi.clone(),
                },
                c.mul(&scal),
            );
        }
        Ok(out)
    }

    /// elem · (lower letter j): the letter travels left through the upper
    /// block (cross rule) and the group block, then multiplies in the lower
    /// block.
    pub fn mul_lower_letter(&self, e: &Elem, j: u8) -> Result<Elem, EngineError> {
        let lower = self.lower.as_ref().expect("algebra has no lower block");
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            // main branch: the letter hops over every upper letter
            let mut s_main = c.clone();
            if let Some(cross) = &self.cross {
                for &u in &m.hi {
                    s_main = s_main.mul(&cross.scalar[u as usize][j as usize]);
                }
            } else {
                assert!(
                    m.hi.is_empty() || self.upper.is_none(),
                    "upper letters present but no cross rule"
                );
            }
            // ... then over K^grp
            if self.kgroup.is_some() && m.grp.iter().any(|&x| x != 0) {
                s_main = s_main.mul(&self.kchi(&m.grp, lower.letter_degree(j)));
            }
            let mut w = m.lo.clone();
            w.push(j);
            for (word, s) in lower.reduce(&w)? {
                out.add_term(
                    Mono {
                        lo: word,
                        grp: m.grp.clone(),
                        hi: m.hi.clone(),
                    },
                    s_main.mul(&s),
                );
            }
            // correction branches: the letter annihilates an equal upper
            // letter at position k, emitting group-algebra terms
            if let Some(cross) = &self.cross {
                for k in 0..m.hi.len() {
                    if m.hi[k] != j || cross.correction[j as usize].is_empty() {
                        continue;
                    }
                    let mut s_corr = c.clone();
                    for &u in &m.hi[k + 1..] {
                        s_corr = s_corr.mul(&cross.scalar[u as usize][j as usize]);
                    }
                    let group = self.kgroup()?;
                    let upper = self.upper.as_ref().unwrap();
                    let prefix: Word = m.hi[..k].to_vec();
                    let mut rest: Word = prefix.clone();
                    rest.extend_from_slice(&m.hi[k + 1..]);
                    let prefix_deg = upper.word_degree(&prefix);
                    for (mu, coef) in &cross.correction[j as usize] {
                        // K^mu moves left past the prefix letters
                        let cross_k = if prefix.is_empty() {
                            Scalar::one(self.field)
                        } else {
                            self.kchi(mu, &prefix_deg).inv()?
                        };
                        let total = s_corr.mul(coef).mul(&cross_k);
                        for (word, s) in upper.reduce(&rest)? {
                            out.add_term(
                                Mono {
                                    lo: m.lo.clone(),
                                    grp: group.add(&m.grp, mu),
                                    hi: word,
                                },
                                total.mul(&s),
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of two monomials: fold the right factor's letters into the
    /// left element in normal order.
    pub fn mul_monos(&self, a: &Mono, b: &Mono) -> Result<Elem, EngineError> {
        let mut acc = Elem::single(a.clone(), Scalar::one(self.field));
        let mut steps: u64 = 0;
        for &j in &b.lo {
            acc = self.mul_lower_letter(&acc, j)?;
            steps += acc.len() as u64;
            if steps > self.guard {
                return Err(EngineError::DepthGuard(steps));
            }
        }
        if b.grp.iter().any(|&x| x != 0) {
            acc = self.mul_group(&acc, &b.grp)?;
        }
        for &j in &b.hi {
            acc = self.mul_upper_letter(&acc, j)?;
            steps += acc.len() as u64;
            if steps > self.guard {
                return Err(EngineError::DepthGuard(steps));
            }
        }
        Ok(acc)
    }

    pub fn mul_elems(&self, a: &Elem, b: &Elem) -> Result<Elem, EngineError> {
        let mut out = Elem::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let p = self.mul_monos(ma, mb)?;
                let c = ca.mul(cb);
                for (m, s) in p.terms {
                    out.add_term(m, s.mul(&c));
                }
            }
        }
        Ok(out)
    }

    /// Enumerate the finite basis in (lower, group, upper) lexicographic
    /// order; `None` when any block is infinite.
    pub fn enumerate_basis(&self) -> Option<Vec<Mono>> {
        let lower: Vec<Word> = match &self.lower {
            Some(b) => {
                if !b.alg.is_finite() {
                    return None;
                }
                (0..b.alg.dim()).map(|i| b.alg.basis_word(i).clone()).collect()
            }
            None => vec![Vec::new()],
        };
        let upper: Vec<Word> = match &self.upper {
            Some(b) => {
                if !b.alg.is_finite() {
                    return None;
                }
                (0..b.alg.dim()).map(|i| b.alg.basis_word(i).clone()).collect()
            }
            None => vec![Vec::new()],
        };
        let grps: Vec<GroupElem> = match &self.kgroup {
            Some(g) => {
                g.modulus?;
                g.elements()
            }
            None => vec![Vec::new()],
        };
        let mut out = Vec::with_capacity(lower.len() * grps.len() * upper.len());
        for lo in &lower {
            for grp in &grps {
                for hi in &upper {
                    out.push(Mono {
                        lo: lo.clone(),
                        grp: grp.clone(),
                        hi: hi.clone(),
                    });
                }
            }
        }
        Some(out)
    }
}
