//! Elements of triangular structure-constant algebras: linear combinations
//! of normal-form monomials (lower word, group element, upper word).

use crate::grading::GroupElem;
use crate::scalar::{Field, Scalar};
use crate::words::Word;
use std::collections::BTreeMap;

/// A normal-form basis monomial: lower-block pivot word, group element,
/// upper-block pivot word. Blocks an algebra lacks stay empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Mono {
    pub lo: Word,
    pub grp: GroupElem,
    pub hi: Word,
}

impl Mono {
    pub fn unit(group_rank: usize) -> Mono {
        Mono {
            lo: Vec::new(),
            grp: vec![0; group_rank],
            hi: Vec::new(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.lo.is_empty() && self.hi.is_empty() && self.grp.iter().all(|&x| x == 0)
    }
}

/// A finite linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem {
    pub terms: BTreeMap<Mono, Scalar>,
}

impl Elem {
    pub fn zero() -> Elem {
        Elem {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(m: Mono, c: Scalar) -> Elem {
        let mut e = Elem::zero();
        e.add_term(m, c);
        e
    }

    pub fn unit(group_rank: usize, field: Field) -> Elem {
        Elem::single(Mono::unit(group_rank), Scalar::one(field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let v = old.add(&c);
                if !v.is_zero() {
                    self.terms.insert(m, v);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Elem {
        if s.is_zero() {
            return Elem::zero();
        }
        Elem {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Elem {
        Elem {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// An element of the tensor square, used for coproducts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem2 {
    pub terms: BTreeMap<(Mono, Mono), Scalar>,
}

impl Elem2 {
    pub fn zero() -> Elem2 {
        Elem2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(a: Mono, b: Mono, c: Scalar) -> Elem2 {
        let mut e = Elem2::zero();
        e.add_term(a, b, c);
        e
    }

    pub fn add_term(&mut self, a: Mono, b: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.remove(&key) {
            Some(old) => {
                let v = old.add(&c);
                if !v.is_zero() {
                    self.terms.insert(key, v);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Elem2) -> Elem2 {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Elem2) -> Elem2 {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Elem2 {
        if s.is_zero() {
            return Elem2::zero();
        }
        Elem2 {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// An element of the triple tensor power, for coassociativity checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem3 {
    pub terms: BTreeMap<(Mono, Mono, Mono), Scalar>,
}

impl Elem3 {
    pub fn zero() -> Elem3 {
        Elem3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, a: Mono, b: Mono, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b, m);
        match self.terms.remove(&key) {
            Some(old) => {
                let v = old.add(&c);
                if !v.is_zero() {
                    self.terms.insert(key, v);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn sub(&self, other: &Elem3) -> Elem3 {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0.clone(), k.1.clone(), k.2.clone(), c.neg());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Words in the free algebra on named generators, as coefficient lists.
pub type FreeWord = Vec<usize>;

/// A linear combination of free generator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElem(pub Vec<(FreeWord, Scalar)>);

impl FreeElem {
    pub fn zero() -> FreeElem {
        FreeElem(Vec::new())
    }

    pub fn word(w: FreeWord, field: Field) -> FreeElem {
        FreeElem(vec![(w, Scalar::one(field))])
    }

    pub fn term(w: FreeWord, c: Scalar) -> FreeElem {
        FreeElem(vec![(w, c)])
    }

    pub fn push(&mut self, w: FreeWord, c: Scalar) {
        if !c.is_zero() {
            self.0.push((w, c));
        }
    }
}
