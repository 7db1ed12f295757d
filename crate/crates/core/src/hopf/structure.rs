//! Structure-constant Hopf algebras on triangular normal-form bases, with
//! generator coproduct/counit/antipode data and a defining relation list.

use super::elem::{Elem, Elem2, Elem3, FreeElem, Mono};
use super::engine::{EngineError, TriangularAlgebra};
use crate::grading::GroupElem;
use crate::scalar::{Field, Scalar};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    Lower(u8),
    Upper(u8),
    Group { index: usize, inverse: bool },
}

pub struct Generator {
    pub name: String,
    pub kind: GenKind,
    pub mono: Mono,
    pub coproduct: Elem2,
    pub counit: Scalar,
    pub antipode: Elem,
}

pub struct Relation {
    pub name: String,
    pub lhs: FreeElem,
    pub rhs: FreeElem,
}

struct FiniteData {
    basis: Vec<Mono>,
    index: BTreeMap<Mono, usize>,
    cache: Mutex<HashMap<(u32, u32), Arc<Vec<(u32, Scalar)>>>>,
}

pub struct StructureHopfAlgebra {
    pub name: String,
    pub family: String,
    pub engine: TriangularAlgebra,
    pub gens: Vec<Generator>,
    pub relations: Vec<Relation>,
    /// generator indices per lower/upper letter and group direction
    pub lower_gens: Vec<usize>,
    pub upper_gens: Vec<usize>,
    pub group_gens: Vec<(usize, usize)>,
    pub kname: String,
    finite: Option<FiniteData>,
}

impl StructureHopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: String,
        family: String,
        engine: TriangularAlgebra,
        gens: Vec<Generator>,
        relations: Vec<Relation>,
        lower_gens: Vec<usize>,
        upper_gens: Vec<usize>,
        group_gens: Vec<(usize, usize)>,
        kname: String,
    ) -> StructureHopfAlgebra {
        let finite = engine.enumerate_basis().map(|basis| {
            let index = basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            FiniteData {
                basis,
                index,
                cache: Mutex::new(HashMap::new()),
            }
        });
        StructureHopfAlgebra {
            name,
            family,
            engine,
            gens,
            relations,
            lower_gens,
            upper_gens,
            group_gens,
            kname,
            finite,
        }
    }

    pub fn field(&self) -> Field {
        self.engine.field
    }

    pub fn dim(&self) -> Option<usize> {
        self.finite.as_ref().map(|f| f.basis.len())
    }

    pub fn basis(&self) -> Option<&[Mono]> {
        self.finite.as_ref().map(|f| f.basis.as_slice())
    }

    pub fn basis_index(&self, m: &Mono) -> Option<usize> {
        self.finite.as_ref().and_then(|f| f.index.get(m).copied())
    }

    pub fn basis_mono(&self, i: usize) -> &Mono {
        &self.finite.as_ref().expect("finite basis required").basis[i]
    }

    pub fn unit_elem(&self) -> Elem {
        self.engine.unit_elem()
    }

    pub fn gen_elem(&self, i: usize) -> Elem {
        Elem::single(self.gens[i].mono.clone(), Scalar::one(self.field()))
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn mono_label(&self, m: &Mono) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !m.lo.is_empty() {
            let names = &self.engine.lower.as_ref().unwrap().alg.letter_names;
            parts.push(
                m.lo.iter()
                    .map(|&c| names[c as usize].clone())
                    .collect::<Vec<_>>()
                    .join("*"),
            );
        }
        if m.grp.iter().any(|&x| x != 0) {
            parts.push(format!(
                "{}[{}]",
                self.kname,
                m.grp
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }
        if !m.hi.is_empty() {
            let names = &self.engine.upper.as_ref().unwrap().alg.letter_names;
            parts.push(
                m.hi.iter()
                    .map(|&c| names[c as usize].clone())
                    .collect::<Vec<_>>()
                    .join("*"),
            );
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("·")
        }
    }

    pub fn elem_label(&self, e: &Elem) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        e.terms
            .iter()
            .map(|(m, c)| format!("({})·{}", c.to_text(), self.mono_label(m)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn elem2_label(&self, e: &Elem2) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        e.terms
            .iter()
            .map(|((a, b), c)| {
                format!(
                    "({})·{}⊗{}",
                    c.to_text(),
                    self.mono_label(a),
                    self.mono_label(b)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn product(&self, a: &Elem, b: &Elem) -> Result<Elem, EngineError> {
        self.engine.mul_elems(a, b)
    }

    /// Cached product of two basis monomials by index (finite algebras).
    pub fn product_basis(&self, i: usize, j: usize) -> Result<Arc<Vec<(u32, Scalar)>>, EngineError> {
        let fin = self.finite.as_ref().expect("finite basis required");
        let key = (i as u32, j as u32);
        if let Some(v) = fin.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let e = self.engine.mul_monos(&fin.basis[i], &fin.basis[j])?;
        let v: Arc<Vec<(u32, Scalar)>> = Arc::new(
            e.terms
                .into_iter()
                .map(|(m, c)| {
                    let idx = *fin
                        .index
                        .get(&m)
                        .expect("product term lies outside the enumerated basis");
                    (idx as u32, c)
                })
                .collect(),
        );
        fin.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    /// Evaluate a free-algebra element through generator images in this
    /// algebra (or any images, via the supplied table).
    pub fn eval_free(&self, fe: &FreeElem) -> Result<Elem, EngineError> {
        let images: Vec<Elem> = (0..self.gens.len()).map(|i| self.gen_elem(i)).collect();
        self.eval_free_with(fe, &images)
    }

    pub fn eval_free_with(&self, fe: &FreeElem, images: &[Elem]) -> Result<Elem, EngineError> {
        let mut out = Elem::zero();
        for (word, coef) in &fe.0 {
            let mut acc = self.unit_elem();
            for &g in word {
                acc = self.product(&acc, &images[g])?;
            }
            for (m, c) in acc.terms {
                out.add_term(m, c.mul(coef));
            }
        }
        Ok(out)
    }

    /// Componentwise product on the tensor square.
    pub fn mul_elem2(&self, a: &Elem2, b: &Elem2) -> Result<Elem2, EngineError> {
        let mut out = Elem2::zero();
        for ((a1, a2), ca) in &a.terms {
            for ((b1, b2), cb) in &b.terms {
                let p1 = self.engine.mul_monos(a1, b1)?;
                let p2 = self.engine.mul_monos(a2, b2)?;
                let c = ca.mul(cb);
                for (m1, s1) in &p1.terms {
                    for (m2, s2) in &p2.terms {
                        out.add_term(m1.clone(), m2.clone(), c.mul(s1).mul(s2));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn eval_free_in_square(&self, fe: &FreeElem, images: &[Elem2]) -> Result<Elem2, EngineError> {
        let unit = Mono::unit(self.engine.group_rank());
        let mut out = Elem2::zero();
        for (word, coef) in &fe.0 {
            let mut acc = Elem2::single(unit.clone(), unit.clone(), Scalar::one(self.field()));
            for &g in word {
                acc = self.mul_elem2(&acc, &images[g])?;
            }
            for ((m1, m2), c) in acc.terms {
                out.add_term(m1, m2, c.mul(coef));
            }
        }
        Ok(out)
    }

    pub fn eval_free_scalar(&self, fe: &FreeElem, images: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero(self.field());
        for (word, coef) in &fe.0 {
            let mut acc = Scalar::one(self.field());
            for &g in word {
                acc = acc.mul(&images[g]);
            }
            out = out.add(&acc.mul(coef));
        }
        out
    }

    /// Coproduct of a monomial: multiplicative over its letters, with
    /// group-like group part.
    pub fn coproduct_mono(&self, m: &Mono) -> Result<Elem2, EngineError> {
        let unit = Mono::unit(self.engine.group_rank());
        let mut acc = Elem2::single(unit.clone(), unit, Scalar::one(self.field()));
        for &j in &m.lo {
            let g = &self.gens[self.lower_gens[j as usize]];
            acc = self.mul_elem2(&acc, &g.coproduct)?;
        }
        if m.grp.iter().any(|&x| x != 0) {
            let k = Mono {
                lo: Vec::new(),
                grp: m.grp.clone(),
                hi: Vec::new(),
            };
            let kk = Elem2::single(k.clone(), k, Scalar::one(self.field()));
            acc = self.mul_elem2(&acc, &kk)?;
        }
        for &j in &m.hi {
            let g = &self.gens[self.upper_gens[j as usize]];
            acc = self.mul_elem2(&acc, &g.coproduct)?;
        }
        Ok(acc)
    }

    pub fn coproduct_elem(&self, e: &Elem) -> Result<Elem2, EngineError> {
        let mut out = Elem2::zero();
        for (m, c) in &e.terms {
            let d = self.coproduct_mono(m)?;
            for ((a, b), s) in d.terms {
                out.add_term(a, b, s.mul(c));
            }
        }
        Ok(out)
    }

    pub fn counit_mono(&self, m: &Mono) -> Scalar {
        let mut acc = Scalar::one(self.field());
        for &j in &m.lo {
            acc = acc.mul(&self.gens[self.lower_gens[j as usize]].counit);
        }
        for &j in &m.hi {
            acc = acc.mul(&self.gens[self.upper_gens[j as usize]].counit);
        }
        acc
    }

    pub fn counit_elem(&self, e: &Elem) -> Scalar {
        let mut acc = Scalar::zero(self.field());
        for (m, c) in &e.terms {
            acc = acc.add(&self.counit_mono(m).mul(c));
        }
        acc
    }

    /// Antipode: anti-multiplicative over the monomial's letters.
    pub fn antipode_mono(&self, m: &Mono) -> Result<Elem, EngineError> {
        let mut acc = self.unit_elem();
        for &j in m.hi.iter().rev() {
            let g = &self.gens[self.upper_gens[j as usize]];
            acc = self.product(&acc, &g.antipode)?;
        }
        if m.grp.iter().any(|&x| x != 0) {
            let group = self
                .engine
                .kgroup
                .as_ref()
                .expect("group part without group block");
            let inv = Mono {
                lo: Vec::new(),
                grp: group.neg(&m.grp),
                hi: Vec::new(),
            };
            acc = self.product(&acc, &Elem::single(inv, Scalar::one(self.field())))?;
        }
        for &j in m.lo.iter().rev() {
            let g = &self.gens[self.lower_gens[j as usize]];
            acc = self.product(&acc, &g.antipode)?;
        }
        Ok(acc)
    }

    pub fn antipode_elem(&self, e: &Elem) -> Result<Elem, EngineError> {
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            for (mm, s) in self.antipode_mono(m)?.terms {
                out.add_term(mm, s.mul(c));
            }
        }
        Ok(out)
    }

    /// (Δ ⊗ Id)Δ and (Id ⊗ Δ)Δ of an element, for coassociativity checks.
    pub fn coassoc_sides(&self, e: &Elem) -> Result<(Elem3, Elem3), EngineError> {
        let d = self.coproduct_elem(e)?;
        let mut left = Elem3::zero();
        let mut right = Elem3::zero();
        for ((a, b), c) in &d.terms {
            for ((x, y), s) in self.coproduct_mono(a)?.terms {
                left.add_term(x, y, b.clone(), s.mul(c));
            }
            for ((x, y), s) in self.coproduct_mono(b)?.terms {
                right.add_term(a.clone(), x, y, s.mul(c));
            }
        }
        Ok((left, right))
    }

    /// Group element monomial K^mu as an element.
    pub fn group_elem(&self, mu: &GroupElem) -> Elem {
        Elem::single(
            Mono {
                lo: Vec::new(),
                grp: mu.clone(),
                hi: Vec::new(),
            },
            Scalar::one(self.field()),
        )
    }
}
