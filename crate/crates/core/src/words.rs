//! Words in the free algebra on the generators of a braided space, and the
//! braided deconcatenation (shuffle) coproduct.

use crate::bichar::Bicharacter;
use crate::grading::GroupElem;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type Word = Vec<u8>;

/// Multidegree of a word: letter counts per generator.
pub fn multidegree(word: &[u8], rank: usize) -> Vec<u32> {
    let mut mu = vec![0u32; rank];
    for &c in word {
        mu[c as usize] += 1;
    }
    mu
}

pub fn total_degree(mu: &[u32]) -> u32 {
    mu.iter().sum()
}

/// All words over `rank` letters with length `len`, in lexicographic order.
pub fn words_of_length(rank: usize, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; len];
    if len == 0 {
        return vec![Vec::new()];
    }
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if (cur[i] as usize) < rank {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Words of a fixed multidegree, in lexicographic order.
pub fn words_of_multidegree(mu: &[u32]) -> Vec<Word> {
    let rank = mu.len();
    let len: u32 = mu.iter().sum();
    fn rec(rank: usize, remaining: &mut [u32], len: u32, cur: &mut Word, out: &mut Vec<Word>) {
        if len == 0 {
            out.push(cur.clone());
            return;
        }
        for c in 0..rank {
            if remaining[c] > 0 {
                remaining[c] -= 1;
                cur.push(c as u8);
                rec(rank, remaining, len - 1, cur, out);
                cur.pop();
                remaining[c] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut rem = mu.to_vec();
    rec(rank, &mut rem, len, &mut Vec::new(), &mut out);
    out
}

/// All multidegrees with total degree exactly `level`.
pub fn multidegrees_of_level(rank: usize, level: u32) -> Vec<Vec<u32>> {
    fn rec(rank: usize, level: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == rank - 1 {
            prefix.push(level);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=level {
            prefix.push(k);
            rec(rank, level - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, level, &mut Vec::new(), &mut out);
    out
}

/// Shared braiding data for letters of one side (E-like or F-like): letter
/// degrees in the grading group and the χ-values between letters.
#[derive(Clone, Debug)]
pub struct LetterBraiding {
    pub bichar: Arc<Bicharacter>,
    pub letter_degrees: Vec<GroupElem>,
    /// chi[i][j] = χ(|letter_i|, |letter_j|)
    chi: Vec<Vec<Scalar>>,
}

impl LetterBraiding {
    pub fn new(bichar: Arc<Bicharacter>, letter_degrees: Vec<GroupElem>) -> Self {
        let n = letter_degrees.len();
        let mut chi = vec![Vec::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                let v = bichar.chi(&letter_degrees[i], &letter_degrees[j]);
                chi[i].push(v);
            }
        }
        LetterBraiding {
            bichar,
            letter_degrees,
            chi,
        }
    }

    pub fn rank(&self) -> usize {
        self.letter_degrees.len()
    }

    pub fn chi_letters(&self, i: u8, j: u8) -> &Scalar {
        &self.chi[i as usize][j as usize]
    }

    pub fn word_degree(&self, w: &[u8]) -> GroupElem {
        let mut d = self.bichar.group.zero();
        for &c in w {
            d = self.bichar.group.add(&d, &self.letter_degrees[c as usize]);
        }
        d
    }

    /// Braided deconcatenation coproduct of a word: all (left, right, scalar)
    /// splittings. A letter sent to the left leg past an earlier letter that
    /// stays right picks up χ(|stayer|, |mover|).
    pub fn coproduct_terms(&self, w: &[u8]) -> Vec<(Word, Word, Scalar)> {
        let n = w.len();
        let field = self.bichar.field();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0..(1u32 << n) {
            let mut left = Word::new();
            let mut right = Word::new();
            let mut scalar = Scalar::one(field);
            for k in 0..n {
                if mask & (1 << k) != 0 {
                    // letter k goes to the left leg; it crosses every earlier
                    // letter that stays in the right leg
                    for m in 0..k {
                        if mask & (1 << m) == 0 {
                            scalar = scalar.mul(self.chi_letters(w[m], w[k]));
                        }
                    }
                    left.push(w[k]);
                } else {
                    right.push(w[k]);
                }
            }
            out.push((left, right, scalar));
        }
        out
    }

    /// Coproduct grouped by identical (left, right) pairs.
    pub fn coproduct_collected(&self, w: &[u8]) -> BTreeMap<(Word, Word), Scalar> {
        let mut acc: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        for (l, r, s) in self.coproduct_terms(w) {
            match acc.remove(&(l.clone(), r.clone())) {
                Some(old) => {
                    let v = old.add(&s);
                    if !v.is_zero() {
                        acc.insert((l, r), v);
                    }
                }
                None => {
                    if !s.is_zero() {
                        acc.insert((l, r), s);
                    }
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::grading::GradingGroup;
    use crate::scalar::Field;

    fn a1_letters() -> LetterBraiding {
        let d = CartanDatum::named("A1").unwrap();
        let chi = Arc::new(Bicharacter::new(d, Scalar::q(), GradingGroup::free(1)).unwrap());
        LetterBraiding::new(chi, vec![vec![1]])
    }

    #[test]
    fn multidegree_counts() {
        assert_eq!(multidegree(&[0, 1, 0], 2), vec![2, 1]);
        assert_eq!(words_of_multidegree(&[1, 1]), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(words_of_length(2, 2).len(), 4);
    }

    #[test]
    fn shuffle_coproduct_of_square() {
        // Δ(e²) = e²⊗1 + (1+q²)·e⊗e + 1⊗e² for the A1 braiding χ(g,g) = q².
        let lb = a1_letters();
        let acc = lb.coproduct_collected(&[0, 0]);
        let q = Scalar::q();
        let one = Scalar::one(Field::RationalFunctions);
        assert_eq!(acc[&(vec![0, 0], vec![])], one);
        assert_eq!(acc[&(vec![], vec![0, 0])], one);
        assert_eq!(acc[&(vec![0], vec![0])], one.add(&q.pow(2).unwrap()));
    }

    #[test]
    fn coproduct_counit_legs() {
        // the (∅, w) and (w, ∅) terms always carry scalar 1
        let lb = a1_letters();
        let acc = lb.coproduct_collected(&[0, 0, 0]);
        assert!(acc[&(vec![], vec![0, 0, 0])].is_one());
        assert!(acc[&(vec![0, 0, 0], vec![])].is_one());
    }
}
