//! Sparse linear maps between braided spaces, with composition, tensor
//! (Kronecker) products and the diagonal braiding.

use crate::scalar::{Field, Scalar};
use crate::space::Space;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GmapError {
    #[error("composition mismatch: codomain of first map != domain of second")]
    ComposeMismatch,
    #[error("maps have different domains/codomains")]
    ShapeMismatch,
    #[error("spaces carry different bicharacters")]
    BicharMismatch,
    #[error("entry index out of range")]
    IndexOutOfRange,
}

/// A linear map `dom -> cod` stored as sorted coordinate triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    dom: Space,
    cod: Space,
    entries: BTreeMap<(u32, u32), Scalar>,
}

impl GradedMap {
    pub fn zero(dom: Space, cod: Space) -> GradedMap {
        GradedMap {
            dom,
            cod,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(space: &Space) -> GradedMap {
        let one = Scalar::one(space.field());
        let entries = (0..space.dim() as u32)
            .map(|i| ((i, i), one.clone()))
            .collect();
        GradedMap {
            dom: space.clone(),
            cod: space.clone(),
            entries,
        }
    }

    pub fn from_entries(
        dom: Space,
        cod: Space,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<GradedMap, GmapError> {
        let mut map = GradedMap::zero(dom, cod);
        for (r, c, s) in entries {
            map.add_entry(r, c, s)?;
        }
        Ok(map)
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }

    pub fn cod(&self) -> &Space {
        &self.cod
    }

    pub fn field(&self) -> Field {
        self.dom.field()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries
            .iter()
            .map(|(&(r, c), s)| (r as usize, c as usize, s))
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r as u32, c as u32))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field()))
    }

    pub fn add_entry(&mut self, r: usize, c: usize, s: Scalar) -> Result<(), GmapError> {
        if r >= self.cod.dim() || c >= self.dom.dim() {
            return Err(GmapError::IndexOutOfRange);
        }
        if s.is_zero() {
            return Ok(());
        }
        let key = (r as u32, c as u32);
        let cur = self.entries.remove(&key);
        let v = match cur {
            Some(old) => old.add(&s),
            None => s,
        };
        if !v.is_zero() {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// `self.then(g)` is the composite g ∘ self (apply self first).
    pub fn then(&self, g: &GradedMap) -> Result<GradedMap, GmapError> {
        if self.cod != g.dom {
            return Err(GmapError::ComposeMismatch);
        }
        // group g's entries by column for sparse accumulation
        let mut by_col: BTreeMap<u32, Vec<(u32, &Scalar)>> = BTreeMap::new();
        for (&(r, c), s) in &g.entries {
            by_col.entry(c).or_default().push((r, s));
        }
        let mut out = GradedMap::zero(self.dom.clone(), g.cod.clone());
        for (&(mid, c), s) in &self.entries {
            if let Some(rows) = by_col.get(&mid) {
                for (r, t) in rows {
                    let key = (*r, c);
                    let add = s.mul(t);
                    if add.is_zero() {
                        continue;
                    }
                    match out.entries.remove(&key) {
                        Some(old) => {
                            let v = old.add(&add);
                            if !v.is_zero() {
                                out.entries.insert(key, v);
                            }
                        }
                        None => {
                            out.entries.insert(key, add);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Compose a chain left to right: `compose_chain(&[f, g, h]) = h∘g∘f`.
    pub fn compose_chain(maps: &[&GradedMap]) -> Result<GradedMap, GmapError> {
        assert!(!maps.is_empty());
        let mut acc = maps[0].clone();
        for m in &maps[1..] {
            acc = acc.then(m)?;
        }
        Ok(acc)
    }

    /// Kronecker product on the lexicographic tensor bases.
    pub fn tensor(&self, other: &GradedMap) -> Result<GradedMap, GmapError> {
        let dom = self
            .dom
            .tensor(&other.dom)
            .map_err(|_| GmapError::BicharMismatch)?;
        let cod = self
            .cod
            .tensor(&other.cod)
            .map_err(|_| GmapError::BicharMismatch)?;
        let od = other.dom.dim() as u32;
        let oc = other.cod.dim() as u32;
        let mut entries = BTreeMap::new();
        for (&(r1, c1), s1) in &self.entries {
            for (&(r2, c2), s2) in &other.entries {
                let v = s1.mul(s2);
                if v.is_zero() {
                    continue;
                }
                entries.insert((r1 * oc + r2, c1 * od + c2), v);
            }
        }
        Ok(GradedMap { dom, cod, entries })
    }

    pub fn tensor_chain(maps: &[&GradedMap]) -> Result<GradedMap, GmapError> {
        assert!(!maps.is_empty());
        let mut acc = maps[0].clone();
        for m in &maps[1..] {
            acc = acc.tensor(m)?;
        }
        Ok(acc)
    }

    /// The braiding Ψ: V⊗W → W⊗V with Ψ(v⊗w) = χ(|v|,|w|)·(w⊗v).
    pub fn braiding(v: &Space, w: &Space) -> Result<GradedMap, GmapError> {
        if v.bichar() != w.bichar() {
            return Err(GmapError::BicharMismatch);
        }
        let dom = v.tensor(w).map_err(|_| GmapError::BicharMismatch)?;
        let cod = w.tensor(v).map_err(|_| GmapError::BicharMismatch)?;
        let chi = v.bichar();
        let wd = w.dim() as u32;
        let vd = v.dim() as u32;
        let mut entries = BTreeMap::new();
        for i in 0..vd {
            for j in 0..wd {
                let s = chi.chi(v.degree(i as usize), w.degree(j as usize));
                if !s.is_zero() {
                    entries.insert((j * vd + i, i * wd + j), s);
                }
            }
        }
        Ok(GradedMap { dom, cod, entries })
    }

    /// Inverse braiding: (w⊗v) ↦ χ(|v|,|w|)^{-1}·(v⊗w), i.e. Ψ^{-1}_{V,W}: W⊗V → V⊗W.
    pub fn braiding_inv(v: &Space, w: &Space) -> Result<GradedMap, GmapError> {
        if v.bichar() != w.bichar() {
            return Err(GmapError::BicharMismatch);
        }
        let dom = w.tensor(v).map_err(|_| GmapError::BicharMismatch)?;
        let cod = v.tensor(w).map_err(|_| GmapError::BicharMismatch)?;
        let chi = v.bichar();
        let wd = w.dim() as u32;
        let vd = v.dim() as u32;
        let mut entries = BTreeMap::new();
        for i in 0..vd {
            for j in 0..wd {
                let s = chi.chi_inv(v.degree(i as usize), w.degree(j as usize));
                entries.insert((i * wd + j, j * vd + i), s);
            }
        }
        Ok(GradedMap { dom, cod, entries })
    }

    /// Plain transposition v⊗w ↦ w⊗v, ignoring the bicharacter.
    pub fn transposition(v: &Space, w: &Space) -> Result<GradedMap, GmapError> {
        if v.bichar() != w.bichar() {
            return Err(GmapError::BicharMismatch);
        }
        let dom = v.tensor(w).map_err(|_| GmapError::BicharMismatch)?;
        let cod = w.tensor(v).map_err(|_| GmapError::BicharMismatch)?;
        let one = Scalar::one(v.field());
        let wd = w.dim() as u32;
        let vd = v.dim() as u32;
        let mut entries = BTreeMap::new();
        for i in 0..vd {
            for j in 0..wd {
                entries.insert((j * vd + i, i * wd + j), one.clone());
            }
        }
        Ok(GradedMap { dom, cod, entries })
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap, GmapError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(GmapError::ShapeMismatch);
        }
        let mut out = self.clone();
        for (&(r, c), s) in &other.entries {
            out.add_entry(r as usize, c as usize, s.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap, GmapError> {
        self.add(&other.scale(&Scalar::int(-1, self.field())))
    }

    pub fn scale(&self, s: &Scalar) -> GradedMap {
        if s.is_zero() {
            return GradedMap::zero(self.dom.clone(), self.cod.clone());
        }
        GradedMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v.mul(s)))
                .collect(),
        }
    }

    /// Apply to a sparse column vector given as (index, coeff) pairs.
    pub fn apply(&self, vec: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (c, coef) in vec {
            for (&(r, cc), s) in &self.entries {
                if cc as usize != *c {
                    continue;
                }
                let add = s.mul(coef);
                match acc.remove(&r) {
                    Some(old) => {
                        let v = old.add(&add);
                        if !v.is_zero() {
                            acc.insert(r, v);
                        }
                    }
                    None => {
                        if !add.is_zero() {
                            acc.insert(r, add);
                        }
                    }
                }
            }
        }
        acc.into_iter().map(|(r, s)| (r as usize, s)).collect()
    }

    /// First domain basis vector on which the two maps differ, with rendered
    /// images; `None` when the maps are equal.
    pub fn first_difference(&self, other: &GradedMap) -> Option<DiffWitness> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some(DiffWitness {
                basis_vector: "(shape mismatch)".to_string(),
                lhs: format!("dom {} cod {}", self.dom.dim(), self.cod.dim()),
                rhs: format!("dom {} cod {}", other.dom.dim(), other.cod.dim()),
            });
        }
        if self.entries == other.entries {
            return None;
        }
        let cols: std::collections::BTreeSet<u32> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .map(|&(_, c)| c)
            .collect();
        for c in cols {
            let col_a = self.column_string(c);
            let col_b = other.column_string(c);
            if col_a != col_b {
                return Some(DiffWitness {
                    basis_vector: self.dom.label(c as usize).to_string(),
                    lhs: col_a,
                    rhs: col_b,
                });
            }
        }
        None
    }

    fn column_string(&self, c: u32) -> String {
        let mut parts = Vec::new();
        for (&(r, cc), s) in &self.entries {
            if cc == c {
                parts.push(format!("({})·{}", s.to_text(), self.cod.label(r as usize)));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DiffWitness {
    pub basis_vector: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedMap[{}x{}, {} entries]",
            self.cod.dim(),
            self.dom.dim(),
            self.entries.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bichar::Bicharacter;
    use crate::cartan::CartanDatum;
    use crate::grading::GradingGroup;
    use std::sync::Arc;

    fn setup_a1() -> (Arc<Bicharacter>, Space, Space) {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        let e = Space::new(chi.clone(), vec![("e1".into(), vec![1])]).unwrap();
        let f = Space::new(chi.clone(), vec![("f1".into(), vec![-1])]).unwrap();
        (chi, e, f)
    }

    #[test]
    fn braiding_on_a1_is_q_squared() {
        let (_, e, _) = setup_a1();
        let psi = GradedMap::braiding(&e, &e).unwrap();
        assert_eq!(psi.entry(0, 0), Scalar::q().pow(2).unwrap());
    }

    #[test]
    fn braiding_inverse_composes_to_identity() {
        let (_, e, f) = setup_a1();
        let psi = GradedMap::braiding(&e, &f).unwrap();
        let inv = GradedMap::braiding_inv(&e, &f).unwrap();
        let id = psi.then(&inv).unwrap();
        assert_eq!(id, GradedMap::identity(&e.tensor(&f).unwrap()));
    }

    #[test]
    fn degree_zero_braiding_is_transposition() {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        let v = Space::new(
            chi.clone(),
            vec![("a".into(), vec![0]), ("b".into(), vec![0])],
        )
        .unwrap();
        let psi = GradedMap::braiding(&v, &v).unwrap();
        let tau = GradedMap::transposition(&v, &v).unwrap();
        assert_eq!(psi, tau);
    }

    #[test]
    fn interchange_law() {
        // (f'∘f) ⊗ (g'∘g) = (f'⊗g') ∘ (f⊗g) on small random-ish maps
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        let v = Space::new(
            chi.clone(),
            vec![("a".into(), vec![0]), ("b".into(), vec![1])],
        )
        .unwrap();
        let mk = |vals: [[i64; 2]; 2]| {
            GradedMap::from_entries(
                v.clone(),
                v.clone(),
                (0..2).flat_map(move |r| {
                    (0..2).map(move |c| (r, c, Scalar::int(vals[r][c], Field::RationalFunctions)))
                }),
            )
            .unwrap()
        };
        let f = mk([[1, 2], [0, 1]]);
        let fp = mk([[3, 1], [1, 0]]);
        let g = mk([[0, 1], [2, 2]]);
        let gp = mk([[1, 1], [4, 0]]);
        let lhs = f.then(&fp).unwrap().tensor(&g.then(&gp).unwrap()).unwrap();
        let rhs = f.tensor(&g).unwrap().then(&fp.tensor(&gp).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let (_, e, f) = setup_a1();
        let id = GradedMap::identity(&e)
            .tensor(&GradedMap::identity(&f))
            .unwrap();
        assert_eq!(id, GradedMap::identity(&e.tensor(&f).unwrap()));
    }
}
