//! Free braided bialgebras on primitive generators, and their Nichols
//! quotients by the radical of the duality pairing, computed degree by
//! degree with exact linear algebra.

use crate::bichar::Bicharacter;
use crate::cartan::CartanDatum;
use crate::grading::{GradingGroup, GroupElem};
use crate::linalg::{InsertOutcome, SpanReducer};
use crate::pairing::{GramBlock, LusztigPairing, PairingError, PairingTable};
use crate::scalar::{quantum_binomial, Field, Scalar, ScalarError};
use crate::words::{
    multidegree, multidegrees_of_level, total_degree, words_of_multidegree, LetterBraiding, Word,
};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("product exceeds the computed cutoff (needs total degree {0})")]
    Truncated(u32),
    #[error("coproduct does not descend to the quotient at multidegree {0:?}: {1}")]
    CoproductNotDescending(Vec<u32>, String),
    #[error("pairing error: {0}")]
    Pairing(String),
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
    #[error("the quotient is not finite dimensional within the probed range (max level {0})")]
    NoZeroLevel(u32),
}

impl From<PairingError> for NicholsError {
    fn from(e: PairingError) -> Self {
        NicholsError::Pairing(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    E,
    F,
}

/// Quotient data for one multidegree: the chosen pivot words, the expansion
/// of every word over the pivot words, and a basis of the radical piece.
#[derive(Debug, Clone)]
pub struct QuotientBlock {
    pub words: Vec<Word>,
    pub pivots: Vec<usize>,
    /// expand[w] = coefficients over pivot positions such that
    /// [word_w] = Σ expand[w][k] · [word_{pivots[k]}]
    pub expand: Vec<Vec<(usize, Scalar)>>,
    /// radical basis vectors as (word index, coefficient) lists
    pub kernel: Vec<Vec<(usize, Scalar)>>,
}

/// A graded bialgebra on a word basis: either the free braided bialgebra
/// (every word is a pivot) or a Nichols quotient (pivots chosen per Gram
/// rank). Multiplication is concatenation followed by expansion; the
/// coproduct is the braided shuffle deconcatenation, projected.
pub struct WordBialgebra {
    pub side: Side,
    pub letters: LetterBraiding,
    pub letter_names: Vec<String>,
    pub cutoff: u32,
    pub blocks: BTreeMap<Vec<u32>, QuotientBlock>,
    /// global index -> (multidegree, position in that block's pivot list)
    pub basis: Vec<(Vec<u32>, usize)>,
    index: BTreeMap<Vec<u32>, Vec<usize>>, // multidegree -> global indices in pivot order
    pub hilbert: Vec<usize>,
    pub radical_dims: BTreeMap<Vec<u32>, usize>,
    /// lowest total degree at which the quotient vanishes entirely; all
    /// higher levels vanish too since the algebra is generated in degree 1
    pub first_zero_level: Option<u32>,
    antipode_memo: Mutex<HashMap<usize, Vec<(usize, Scalar)>>>,
}

pub type FreeBialgebra = WordBialgebra;
pub type NicholsAlgebra = WordBialgebra;

impl WordBialgebra {
    /// The free braided bialgebra on the given letters, truncated at total
    /// degree `cutoff`.
    pub fn free(
        letters: LetterBraiding,
        letter_names: Vec<String>,
        side: Side,
        cutoff: u32,
    ) -> WordBialgebra {
        let rank = letters.rank();
        let field = letters.bichar.field();
        let mut blocks = BTreeMap::new();
        for level in 0..=cutoff {
            for mu in multidegrees_of_level(rank, level) {
                let words = words_of_multidegree(&mu);
                let n = words.len();
                let one = Scalar::one(field);
                let expand = (0..n).map(|i| vec![(i, one.clone())]).collect();
                blocks.insert(
                    mu,
                    QuotientBlock {
                        words,
                        pivots: (0..n).collect(),
                        expand,
                        kernel: Vec::new(),
                    },
                );
            }
        }
        Self::assemble(side, letters, letter_names, cutoff, blocks, None)
    }

    fn assemble(
        side: Side,
        letters: LetterBraiding,
        letter_names: Vec<String>,
        cutoff: u32,
        blocks: BTreeMap<Vec<u32>, QuotientBlock>,
        first_zero_level: Option<u32>,
    ) -> WordBialgebra {
        let rank = letters.rank();
        let mut basis = Vec::new();
        let mut index = BTreeMap::new();
        let mut hilbert = vec![0usize; cutoff as usize + 1];
        let mut radical_dims = BTreeMap::new();
        for level in 0..=cutoff {
            for mu in multidegrees_of_level(rank, level) {
                let Some(block) = blocks.get(&mu) else { continue };
                let mut ids = Vec::new();
                for pos in 0..block.pivots.len() {
                    ids.push(basis.len());
                    basis.push((mu.clone(), pos));
                }
                hilbert[level as usize] += block.pivots.len();
                if !block.kernel.is_empty() {
                    radical_dims.insert(mu.clone(), block.kernel.len());
                }
                index.insert(mu, ids);
            }
        }
        WordBialgebra {
            side,
            letters,
            letter_names,
            cutoff,
            blocks,
            basis,
            index,
            hilbert,
            radical_dims,
            first_zero_level,
            antipode_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> Field {
        self.letters.bichar.field()
    }

    pub fn rank(&self) -> usize {
        self.letters.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_finite(&self) -> bool {
        self.first_zero_level.is_some()
    }

    /// Dimensions per total degree, up to the cutoff.
    pub fn hilbert_series(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn basis_word(&self, idx: usize) -> &Word {
        let (mu, pos) = &self.basis[idx];
        let block = &self.blocks[mu];
        &block.words[block.pivots[*pos]]
    }

    pub fn basis_degree(&self, idx: usize) -> GroupElem {
        self.letters.word_degree(self.basis_word(idx))
    }

    pub fn basis_level(&self, idx: usize) -> u32 {
        total_degree(&self.basis[idx].0)
    }

    pub fn basis_label(&self, idx: usize) -> String {
        let w = self.basis_word(idx);
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter()
                .map(|&c| self.letter_names[c as usize].clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    /// The same algebra with renamed letters (shares all quotient data).
    pub fn with_letter_names(&self, letter_names: Vec<String>) -> WordBialgebra {
        assert_eq!(letter_names.len(), self.rank());
        WordBialgebra {
            side: self.side,
            letters: self.letters.clone(),
            letter_names,
            cutoff: self.cutoff,
            blocks: self.blocks.clone(),
            basis: self.basis.clone(),
            index: self.index.clone(),
            hilbert: self.hilbert.clone(),
            radical_dims: self.radical_dims.clone(),
            first_zero_level: self.first_zero_level,
            antipode_memo: Mutex::new(HashMap::new()),
        }
    }

    /// Global index of a generator letter.
    pub fn letter_index(&self, i: usize) -> Option<usize> {
        let mu = multidegree(&[i as u8], self.rank());
        let ids = self.index.get(&mu)?;
        let block = &self.blocks[&mu];
        // the letter word is a pivot iff the quotient keeps it
        let widx = block.words.iter().position(|w| w == &vec![i as u8])?;
        let pos = block.pivots.iter().position(|&p| p == widx)?;
        ids.get(pos).copied()
    }

    /// Express a free word as a combination of quotient basis elements.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Vec<(usize, Scalar)>, NicholsError> {
        let mu = multidegree(w, self.rank());
        let level = total_degree(&mu);
        match self.blocks.get(&mu) {
            Some(block) => {
                let widx = block
                    .words
                    .binary_search(&w.to_vec())
                    .expect("word enumeration covers all words of the multidegree");
                let ids = &self.index[&mu];
                Ok(block.expand[widx]
                    .iter()
                    .map(|(pos, c)| (ids[*pos], c.clone()))
                    .collect())
            }
            None => {
                if self.first_zero_level.map_or(false, |z| level >= z) {
                    Ok(Vec::new())
                } else {
                    Err(NicholsError::Truncated(level))
                }
            }
        }
    }

    /// Express a combination of free words in the quotient basis.
    pub fn reduce_elem(
        &self,
        elem: &[(Word, Scalar)],
    ) -> Result<Vec<(usize, Scalar)>, NicholsError> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (w, c) in elem {
            for (idx, e) in self.reduce_word(w)? {
                add_term(&mut acc, idx, e.mul(c));
            }
        }
        Ok(acc.into_iter().collect())
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, a: usize, b: usize) -> Result<Vec<(usize, Scalar)>, NicholsError> {
        let mut w = self.basis_word(a).clone();
        w.extend_from_slice(self.basis_word(b));
        self.reduce_word(&w)
    }

    /// Right-multiply a combination by a single letter.
    pub fn mul_letter(
        &self,
        elem: &[(usize, Scalar)],
        letter: u8,
    ) -> Result<Vec<(usize, Scalar)>, NicholsError> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (idx, c) in elem {
            let mut w = self.basis_word(*idx).clone();
            w.push(letter);
            for (j, e) in self.reduce_word(&w)? {
                add_term(&mut acc, j, e.mul(c));
            }
        }
        Ok(acc.into_iter().collect())
    }

    /// Coproduct of a basis element, with both legs in the quotient basis.
    pub fn coproduct_basis(
        &self,
        idx: usize,
    ) -> Result<Vec<((usize, usize), Scalar)>, NicholsError> {
        let w = self.basis_word(idx).clone();
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((l, r), s) in self.letters.coproduct_collected(&w) {
            let lc = self.reduce_word(&l)?;
            let rc = self.reduce_word(&r)?;
            for (li, lv) in &lc {
                for (ri, rv) in &rc {
                    let v = s.mul(lv).mul(rv);
                    if v.is_zero() {
                        continue;
                    }
                    let key = (*li, *ri);
                    match acc.remove(&key) {
                        Some(old) => {
                            let nv = old.add(&v);
                            if !nv.is_zero() {
                                acc.insert(key, nv);
                            }
                        }
                        None => {
                            acc.insert(key, v);
                        }
                    }
                }
            }
        }
        Ok(acc.into_iter().collect())
    }

    pub fn counit_basis(&self, idx: usize) -> Scalar {
        if self.basis_word(idx).is_empty() {
            Scalar::one(self.field())
        } else {
            Scalar::zero(self.field())
        }
    }

    /// Antipode on a basis element, by the convolution recursion
    /// S(x) = -x - Σ S(x') x'' over proper coproduct legs.
    pub fn antipode_basis(&self, idx: usize) -> Result<Vec<(usize, Scalar)>, NicholsError> {
        if let Some(v) = self.antipode_memo.lock().unwrap().get(&idx) {
            return Ok(v.clone());
        }
        let level = self.basis_level(idx);
        let result = if level == 0 {
            vec![(idx, Scalar::one(self.field()))]
        } else {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            add_term(&mut acc, idx, Scalar::int(-1, self.field()));
            for ((l, r), s) in self.coproduct_basis(idx)? {
                if self.basis_level(l) == 0 || self.basis_level(r) == 0 {
                    continue;
                }
                let sl = self.antipode_basis(l)?;
                for (li, lv) in sl {
                    for (pi, pv) in self.mul_basis(li, r)? {
                        add_term(&mut acc, pi, s.mul(&lv).mul(&pv).neg());
                    }
                }
            }
            acc.into_iter().collect()
        };
        self.antipode_memo
            .lock()
            .unwrap()
            .insert(idx, result.clone());
        Ok(result)
    }
}

fn add_term(acc: &mut BTreeMap<usize, Scalar>, idx: usize, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match acc.remove(&idx) {
        Some(old) => {
            let nv = old.add(&v);
            if !nv.is_zero() {
                acc.insert(idx, nv);
            }
        }
        None => {
            acc.insert(idx, v);
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CutoffSpec {
    /// Compute all multidegrees of total degree <= the given bound.
    Fixed(u32),
    /// Grow level by level until an entire level vanishes (finite quotient),
    /// failing after `max` levels.
    UntilZeroLevel { max: u32 },
}

/// Both Nichols quotients together with their Gram data.
pub struct NicholsPair {
    pub eside: Arc<NicholsAlgebra>,
    pub fside: Arc<NicholsAlgebra>,
    pub table: PairingTable,
}

/// The free braided bialgebra on the E-side (degrees +g_i) or F-side
/// (degrees -g_i) generators of a Cartan datum.
pub fn free_bialgebra(
    datum: &CartanDatum,
    base: Scalar,
    group: GradingGroup,
    side: Side,
    cutoff: u32,
) -> Result<FreeBialgebra, NicholsError> {
    let bichar = Arc::new(
        Bicharacter::new(datum.clone(), base, group)
            .map_err(|e| NicholsError::Pairing(e.to_string()))?,
    );
    let (letters, names) = side_letters(&bichar, side, None);
    Ok(WordBialgebra::free(letters, names, side, cutoff))
}

fn side_letters(
    bichar: &Arc<Bicharacter>,
    side: Side,
    prefix: Option<&str>,
) -> (LetterBraiding, Vec<String>) {
    let n = bichar.group.rank;
    let degrees: Vec<GroupElem> = (0..n)
        .map(|i| {
            let u = bichar.group.unit(i);
            match side {
                Side::E => u,
                Side::F => bichar.group.neg(&u),
            }
        })
        .collect();
    let pfx = prefix.unwrap_or(match side {
        Side::E => "e",
        Side::F => "f",
    });
    let names = (0..n).map(|i| format!("{}{}", pfx, i + 1)).collect();
    (LetterBraiding::new(bichar.clone(), degrees), names)
}

/// Build the E- and F-side Nichols quotients of the standard pairing.
pub fn nichols_quotient(
    datum: &CartanDatum,
    base: Scalar,
    group: GradingGroup,
    cutoff: CutoffSpec,
) -> Result<NicholsPair, NicholsError> {
    nichols_quotient_named(datum, base, group, cutoff, "e", "f")
}

/// Same as `nichols_quotient` with custom letter name prefixes.
pub fn nichols_quotient_named(
    datum: &CartanDatum,
    base: Scalar,
    group: GradingGroup,
    cutoff: CutoffSpec,
    e_prefix: &str,
    f_prefix: &str,
) -> Result<NicholsPair, NicholsError> {
    let bichar = Arc::new(
        Bicharacter::new(datum.clone(), base.clone(), group)
            .map_err(|e| NicholsError::Pairing(e.to_string()))?,
    );
    let pairing = Arc::new(LusztigPairing::standard(datum, bichar.clone())?);
    let mut table = PairingTable {
        pairing: pairing.clone(),
        cutoff: 0,
        blocks: BTreeMap::new(),
    };
    let rank = datum.rank();
    let field = base.field();
    let (max_level, until_zero) = match cutoff {
        CutoffSpec::Fixed(c) => (c, false),
        CutoffSpec::UntilZeroLevel { max } => (max, true),
    };

    let mut e_blocks: BTreeMap<Vec<u32>, QuotientBlock> = BTreeMap::new();
    let mut f_blocks: BTreeMap<Vec<u32>, QuotientBlock> = BTreeMap::new();
    let mut first_zero: Option<u32> = None;
    let mut reached = 0u32;
    for level in 0..=max_level {
        reached = level;
        let mut level_dim = 0usize;
        for mu in multidegrees_of_level(rank, level) {
            let gram = table.gram_for(&mu).clone();
            let (eb, fb) = split_block(field, &gram);
            level_dim += eb.pivots.len();
            e_blocks.insert(mu.clone(), eb);
            f_blocks.insert(mu.clone(), fb);
        }
        if level > 0 && level_dim == 0 && first_zero.is_none() {
            first_zero = Some(level);
            if until_zero {
                break;
            }
        }
    }
    if until_zero && first_zero.is_none() {
        return Err(NicholsError::NoZeroLevel(max_level));
    }
    table.cutoff = reached;

    let (e_letters, e_names) = side_letters(&bichar, Side::E, Some(e_prefix));
    let (f_letters, f_names) = side_letters(&bichar, Side::F, Some(f_prefix));
    let eside = WordBialgebra::assemble(Side::E, e_letters, e_names, reached, e_blocks, first_zero);
    let fside = WordBialgebra::assemble(Side::F, f_letters, f_names, reached, f_blocks, first_zero);

    verify_coproduct_descends(&eside)?;
    verify_coproduct_descends(&fside)?;

    Ok(NicholsPair {
        eside: Arc::new(eside),
        fside: Arc::new(fside),
        table,
    })
}

/// Row-reduce a Gram block for the F-side (rows) and column-reduce for the
/// E-side (columns): pivot words are the lowest-index independent rows/cols.
fn split_block(field: Field, gram: &GramBlock) -> (QuotientBlock, QuotientBlock) {
    let n = gram.words.len();
    let mk = |rows: Vec<Vec<Scalar>>| -> QuotientBlock {
        let mut red = SpanReducer::new(field, n);
        let mut expand: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(n);
        let mut kernel: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for (w, row) in rows.into_iter().enumerate() {
            match red.insert(row) {
                InsertOutcome::Pivot(k) => expand.push(vec![(k, Scalar::one(field))]),
                InsertOutcome::Dependent(combo) => {
                    let exp: Vec<(usize, Scalar)> = combo
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect();
                    // kernel vector: word_w - Σ combo_k · pivot_k
                    let mut kv = vec![(w, Scalar::one(field))];
                    for (k, c) in &exp {
                        kv.push((red.pivot_rows()[*k], c.neg()));
                    }
                    kernel.push(kv);
                    expand.push(exp);
                }
            }
        }
        QuotientBlock {
            words: gram.words.clone(),
            pivots: red.pivot_rows().to_vec(),
            expand,
            kernel,
        }
    };
    // F-side reduces the rows as given; E-side the transpose.
    let frows: Vec<Vec<Scalar>> = gram.gram.clone();
    let erows: Vec<Vec<Scalar>> = (0..n)
        .map(|c| (0..n).map(|r| gram.gram[r][c].clone()).collect())
        .collect();
    (mk(erows), mk(frows))
}

/// Check that the coproduct maps every radical element into
/// radical⊗T + T⊗radical, i.e. projecting both legs kills it.
fn verify_coproduct_descends(alg: &WordBialgebra) -> Result<(), NicholsError> {
    for (mu, block) in &alg.blocks {
        for kv in &block.kernel {
            let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (widx, coef) in kv {
                let w = &block.words[*widx];
                for ((l, r), s) in alg.letters.coproduct_collected(w) {
                    let lc = alg.reduce_word(&l)?;
                    let rc = alg.reduce_word(&r)?;
                    for (li, lv) in &lc {
                        for (ri, rv) in &rc {
                            let v = coef.mul(&s).mul(lv).mul(rv);
                            if v.is_zero() {
                                continue;
                            }
                            let key = (*li, *ri);
                            match acc.remove(&key) {
                                Some(old) => {
                                    let nv = old.add(&v);
                                    if !nv.is_zero() {
                                        acc.insert(key, nv);
                                    }
                                }
                                None => {
                                    acc.insert(key, v);
                                }
                            }
                        }
                    }
                }
            }
            if !acc.is_empty() {
                let ((l, r), s) = acc.iter().next().unwrap();
                return Err(NicholsError::CoproductNotDescending(
                    mu.clone(),
                    format!(
                        "leg {}⊗{} survives with coefficient {}",
                        alg.basis_label(*l),
                        alg.basis_label(*r),
                        s.to_text()
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// The quantum Serre element Σ_k (-1)^k [1-a_ij; k]_{q_i} X_i^{1-a_ij-k} X_j X_i^k
/// in the free algebra, as (word, coefficient) pairs.
pub fn serre_element(
    datum: &CartanDatum,
    base: &Scalar,
    i: usize,
    j: usize,
) -> Result<Vec<(Word, Scalar)>, ScalarError> {
    assert!(i != j);
    let n = 1 - datum.cartan_integer(i, j);
    let qi = base.pow(datum.half_diagonal(i))?;
    let mut out = Vec::new();
    for k in 0..=n {
        let mut coef = quantum_binomial(n, k, &qi)?;
        if k % 2 == 1 {
            coef = coef.neg();
        }
        let mut w: Word = Vec::new();
        for _ in 0..(n - k) {
            w.push(i as u8);
        }
        w.push(j as u8);
        for _ in 0..k {
            w.push(i as u8);
        }
        out.push((w, coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qcomb::primitive_root;

    fn a1_free(cutoff: u32) -> FreeBialgebra {
        let d = CartanDatum::named("A1").unwrap();
        free_bialgebra(&d, Scalar::q(), GradingGroup::free(1), Side::E, cutoff).unwrap()
    }

    #[test]
    fn free_rank1_basis() {
        let b = a1_free(3);
        assert_eq!(b.dim(), 4); // 1, e, e², e³
        assert_eq!(b.hilbert_series(), &[1, 1, 1, 1]);
        assert_eq!(b.basis_label(0), "1");
        assert_eq!(b.basis_label(2), "e1*e1");
    }

    #[test]
    fn free_coproduct_of_square() {
        let b = a1_free(3);
        let dd = b.coproduct_basis(2).unwrap(); // e²
        let q2 = Scalar::q().pow(2).unwrap();
        let one = Scalar::one(Field::RationalFunctions);
        let expected: BTreeMap<(usize, usize), Scalar> = vec![
            ((2, 0), one.clone()),
            ((1, 1), one.add(&q2)),
            ((0, 2), one),
        ]
        .into_iter()
        .collect();
        let got: BTreeMap<(usize, usize), Scalar> = dd.into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn free_counit_and_unit() {
        let b = a1_free(2);
        assert!(b.counit_basis(0).is_one());
        assert!(b.counit_basis(1).is_zero()); // ε(e) = 0, primitivity
        let d1 = b.coproduct_basis(0).unwrap();
        assert_eq!(d1, vec![((0, 0), Scalar::one(Field::RationalFunctions))]);
    }

    #[test]
    fn free_truncation_is_flagged() {
        let b = a1_free(2);
        assert!(matches!(
            b.mul_basis(2, 1),
            Err(NicholsError::Truncated(3))
        ));
    }

    #[test]
    fn a1_generic_hilbert_all_ones() {
        let d = CartanDatum::named("A1").unwrap();
        let pair = nichols_quotient(&d, Scalar::q(), GradingGroup::free(1), CutoffSpec::Fixed(6))
            .unwrap();
        assert_eq!(pair.eside.hilbert_series(), &[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(pair.fside.hilbert_series(), &[1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn a1_l3_hilbert_and_nilpotency() {
        let d = CartanDatum::named("A1").unwrap();
        let pair = nichols_quotient(
            &d,
            primitive_root(3),
            GradingGroup::finite(1, 3),
            CutoffSpec::Fixed(5),
        )
        .unwrap();
        assert_eq!(pair.eside.hilbert_series(), &[1, 1, 1, 0, 0, 0]);
        assert_eq!(pair.eside.first_zero_level, Some(3));
        // e³ = 0 in the quotient
        assert!(pair.eside.reduce_word(&[0, 0, 0]).unwrap().is_empty());
        // e·e² lands at level 3 hence vanishes
        assert!(pair.eside.mul_basis(1, 2).unwrap().is_empty());
    }

    #[test]
    fn a2_serre_element_is_radical() {
        let d = CartanDatum::named("A2").unwrap();
        let pair = nichols_quotient(&d, Scalar::q(), GradingGroup::free(2), CutoffSpec::Fixed(4))
            .unwrap();
        let serre = serre_element(&d, &Scalar::q(), 0, 1).unwrap();
        // coefficient check: e1²e2 - (q+q^{-1}) e1e2e1 + e2e1²
        let q = Scalar::q();
        let two_q = q.add(&q.inv().unwrap());
        let coef_mid = serre
            .iter()
            .find(|(w, _)| w == &vec![0u8, 1, 0])
            .unwrap()
            .1
            .clone();
        assert_eq!(coef_mid, two_q.neg());
        assert!(pair.table.eside_in_radical(&serre));
        // and its projection to the quotient vanishes
        let proj = pair.eside.reduce_elem(&serre).unwrap();
        assert!(proj.is_empty());
    }

    #[test]
    fn a2_l3_until_zero_level() {
        let d = CartanDatum::named("A2").unwrap();
        let pair = nichols_quotient(
            &d,
            primitive_root(3),
            GradingGroup::finite(2, 3),
            CutoffSpec::UntilZeroLevel { max: 16 },
        )
        .unwrap();
        assert_eq!(pair.eside.first_zero_level, Some(9));
        assert_eq!(pair.eside.dim(), 27);
        assert_eq!(pair.fside.dim(), 27);
        assert_eq!(pair.eside.hilbert_series(), &[1, 2, 4, 4, 5, 4, 4, 2, 1, 0]);
    }

    #[test]
    fn antipode_on_generators_and_squares() {
        let b = a1_free(3);
        // S(e) = -e
        assert_eq!(
            b.antipode_basis(1).unwrap(),
            vec![(1, Scalar::int(-1, Field::RationalFunctions))]
        );
        // S(e²) = -e² - S(e)·e·(1+q²)... computed by the recursion; check
        // the convolution identity m(S⊗Id)Δ(e²) = 0 instead.
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for ((l, r), s) in b.coproduct_basis(2).unwrap() {
            for (si, sv) in b.antipode_basis(l).unwrap() {
                for (pi, pv) in b.mul_basis(si, r).unwrap() {
                    super::add_term(&mut acc, pi, s.mul(&sv).mul(&pv));
                }
            }
        }
        assert!(acc.is_empty());
    }
}
