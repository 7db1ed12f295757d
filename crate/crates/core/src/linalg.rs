//! Exact dense linear algebra over a coefficient field: span reduction with
//! pivot tracking (for radical bases), rank, and linear solving.

use crate::scalar::{Field, Scalar};

/// Incremental row-space reducer. Rows are inserted in order; each row either
/// becomes a pivot (joins the basis) or is reported as a combination of the
/// pivot rows inserted before it. Pivoting prefers the lowest column, and
/// pivot rows are the earliest independent rows, which makes quotient bases
/// deterministic.
pub struct SpanReducer {
    field: Field,
    ncols: usize,
    /// (leading column, reduced vector, expansion of the reduced vector over
    /// inserted pivot rows)
    basis: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    pivot_rows: Vec<usize>,
    inserted: usize,
}

pub enum InsertOutcome {
    /// The row is independent; it becomes pivot number `.0`.
    Pivot(usize),
    /// The row equals the returned combination of the pivot rows.
    Dependent(Vec<Scalar>),
}

impl SpanReducer {
    pub fn new(field: Field, ncols: usize) -> Self {
        SpanReducer {
            field,
            ncols,
            basis: Vec::new(),
            pivot_rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivot_rows
    }

    fn leading(v: &[Scalar]) -> Option<usize> {
        v.iter().position(|s| !s.is_zero())
    }

    pub fn insert(&mut self, mut v: Vec<Scalar>) -> InsertOutcome {
        assert_eq!(v.len(), self.ncols);
        let row_index = self.inserted;
        self.inserted += 1;
        let npiv = self.basis.len();
        let mut combo = vec![Scalar::zero(self.field); npiv];
        loop {
            let lead = match Self::leading(&v) {
                None => return InsertOutcome::Dependent(combo),
                Some(l) => l,
            };
            match self.basis.iter().position(|(bl, _, _)| *bl == lead) {
                Some(bi) => {
                    let factor = v[lead].clone();
                    let (_, bv, bc) = &self.basis[bi];
                    for (x, y) in v.iter_mut().zip(bv.iter()) {
                        *x = x.sub(&factor.mul(y));
                    }
                    for (x, y) in combo.iter_mut().zip(bc.iter()) {
                        *x = x.add(&factor.mul(y));
                    }
                }
                None => {
                    // normalize to a monic leading entry
                    let inv = v[lead].inv().expect("nonzero leading entry");
                    let vn: Vec<Scalar> = v.iter().map(|x| x.mul(&inv)).collect();
                    // expansion of the normalized vector over pivots:
                    // vn = inv·(row - Σ combo·pivots), so as a new pivot its
                    // own expansion is e_{npiv}; record bookkeeping so later
                    // dependents express rows over ORIGINAL pivot rows.
                    let mut cn: Vec<Scalar> = combo.iter().map(|c| c.mul(&inv).neg()).collect();
                    cn.push(inv);
                    // pad earlier basis expansions
                    for (_, _, bc) in self.basis.iter_mut() {
                        bc.push(Scalar::zero(self.field));
                    }
                    self.basis.push((lead, vn, cn));
                    self.pivot_rows.push(row_index);
                    return InsertOutcome::Pivot(self.basis.len() - 1);
                }
            }
        }
    }
}

/// Rank of a sparse matrix given as rows of sorted (column, value) pairs.
pub fn sparse_rank(rows: Vec<Vec<(u32, Scalar)>>) -> usize {
    use std::collections::BTreeMap;
    // pivot rows normalized to leading 1, keyed by leading column
    let mut pivots: BTreeMap<u32, Vec<(u32, Scalar)>> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|(_, v)| !v.is_zero());
            row.sort_by_key(|&(c, _)| c);
            let Some(&(lead, ref lv)) = row.first() else { break };
            match pivots.get(&lead) {
                Some(p) => {
                    let f = lv.clone();
                    // row -= f * p
                    let mut merged: BTreeMap<u32, Scalar> = row.iter().cloned().collect();
                    for (c, v) in p {
                        let sub = f.mul(v);
                        match merged.remove(c) {
                            Some(old) => {
                                let nv = old.sub(&sub);
                                if !nv.is_zero() {
                                    merged.insert(*c, nv);
                                }
                            }
                            None => {
                                merged.insert(*c, sub.neg());
                            }
                        }
                    }
                    row = merged.into_iter().collect();
                }
                None => {
                    let inv = lv.inv().expect("nonzero leading entry");
                    let norm: Vec<(u32, Scalar)> =
                        row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
                    pivots.insert(lead, norm);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of a dense matrix.
pub fn rank(field: Field, rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut red = SpanReducer::new(field, rows[0].len());
    for r in rows {
        red.insert(r.clone());
    }
    red.rank()
}

/// Solve A·x = b exactly (A given by rows). Returns `None` when inconsistent;
/// picks the unique solution when A has full column rank, otherwise returns
/// one solution with free variables set to zero.
pub fn solve(field: Field, a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Some(Vec::new());
    }
    let ncols = a[0].len();
    // Gaussian elimination on the augmented matrix.
    let mut rows: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut v = r.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0usize;
    for col in 0..ncols {
        let piv = (row..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(piv) = piv else { continue };
        rows.swap(row, piv);
        let inv = rows[row][col].inv().unwrap();
        for x in rows[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let (head, tail) = if r < row {
                    let (h, t) = rows.split_at_mut(row);
                    (&mut h[r], &t[0])
                } else {
                    let (h, t) = rows.split_at_mut(r);
                    (&mut t[0], &h[row])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    // inconsistency: zero row with nonzero rhs
    for r in row..rows.len() {
        if rows[r][..ncols].iter().all(|s| s.is_zero()) && !rows[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Scalar::zero(field); ncols];
    for (r, c) in pivots {
        x[c] = rows[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n, Field::Rationals)
    }

    #[test]
    fn reducer_tracks_combinations() {
        let mut red = SpanReducer::new(Field::Rationals, 3);
        assert!(matches!(red.insert(vec![s(1), s(2), s(0)]), InsertOutcome::Pivot(0)));
        assert!(matches!(red.insert(vec![s(0), s(1), s(1)]), InsertOutcome::Pivot(1)));
        // row3 = 2·row1 + 3·row2
        let v = vec![s(2), s(7), s(3)];
        match red.insert(v) {
            InsertOutcome::Dependent(c) => {
                assert_eq!(c, vec![s(2), s(3)]);
            }
            _ => panic!("expected dependent row"),
        }
        assert_eq!(red.pivot_rows(), &[0, 1]);
    }

    #[test]
    fn solve_unique() {
        let a = vec![vec![s(1), s(1)], vec![s(1), s(-1)]];
        let b = vec![s(3), s(1)];
        let x = solve(Field::Rationals, &a, &b).unwrap();
        assert_eq!(x, vec![s(2), s(1)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        let b = vec![s(1), s(3)];
        assert!(solve(Field::Rationals, &a, &b).is_none());
    }

    #[test]
    fn rank_counts_independent_rows() {
        let rows = vec![
            vec![s(1), s(0), s(1)],
            vec![s(0), s(1), s(1)],
            vec![s(1), s(1), s(2)],
        ];
        assert_eq!(rank(Field::Rationals, &rows), 2);
    }
}
