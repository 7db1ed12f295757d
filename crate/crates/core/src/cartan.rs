//! Cartan data: a finite index set with a symmetric integral bilinear form
//! i·j such that i·i is even and positive and the Cartan integers
//! a_ij = 2(i·j)/(i·i) are non-positive for i != j.

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("form matrix must be square and nonempty")]
    BadShape,
    #[error("form must be symmetric: entry ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry {0}·{0} = {1} must be even and positive")]
    BadDiagonal(usize, i64),
    #[error("Cartan integer a_{0}{1} = 2({0}·{1})/({0}·{0}) must be a non-positive integer")]
    BadCartanInteger(usize, usize),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CartanDatum {
    form: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(form: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let d = CartanDatum { form };
        d.validate()?;
        Ok(d)
    }

    /// Named finite types with the standard normalization (minimal i·i = 2).
    pub fn named(name: &str) -> Result<Self, CartanError> {
        let name = name.trim();
        let lower = name.to_ascii_lowercase();
        if lower == "a1xa1" || lower == "a1+a1" {
            return CartanDatum::new(vec![vec![2, 0], vec![0, 2]]);
        }
        let (fam, n) = split_type(&lower).ok_or_else(|| CartanError::UnknownType(name.into()))?;
        let mk = |d: Vec<i64>, a: &dyn Fn(usize, usize) -> i64| -> Vec<Vec<i64>> {
            let n = d.len();
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    m[i][j] = if i == j { d[i] } else { a(i.min(j), i.max(j)) };
                }
            }
            m
        };
        let form = match (fam, n) {
            ('a', n) if n >= 1 => {
                let d = vec![2i64; n];
                mk(d, &|i, j| if j == i + 1 { -1 } else { 0 })
            }
            ('b', n) if n >= 2 => {
                // one short root at the end: i·i = 4 for long, 2 for short
                let mut d = vec![4i64; n];
                d[n - 1] = 2;
                mk(d, &|i, j| if j == i + 1 { -2 } else { 0 })
            }
            ('c', n) if n >= 2 => {
                // one long root at the end
                let mut d = vec![2i64; n];
                d[n - 1] = 4;
                mk(d, &|i, j| {
                    if j == i + 1 {
                        if j == n - 1 {
                            -2
                        } else {
                            -1
                        }
                    } else {
                        0
                    }
                })
            }
            ('d', n) if n >= 3 => {
                let d = vec![2i64; n];
                let mut m = mk(d, &|i, j| if j == i + 1 { -1 } else { 0 });
                // fork: node n-1 attaches to n-3 instead of n-2
                m[n - 1][n - 2] = 0;
                m[n - 2][n - 1] = 0;
                m[n - 1][n - 3] = -1;
                m[n - 3][n - 1] = -1;
                m
            }
            ('g', 2) => vec![vec![2, -3], vec![-3, 6]],
            _ => return Err(CartanError::UnknownType(name.into())),
        };
        CartanDatum::new(form)
    }

    pub fn validate(&self) -> Result<(), CartanError> {
        let n = self.form.len();
        if n == 0 || self.form.iter().any(|r| r.len() != n) {
            return Err(CartanError::BadShape);
        }
        for i in 0..n {
            if self.form[i][i] <= 0 || self.form[i][i] % 2 != 0 {
                return Err(CartanError::BadDiagonal(i, self.form[i][i]));
            }
            for j in 0..n {
                if self.form[i][j] != self.form[j][i] {
                    return Err(CartanError::NotSymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let num = 2 * self.form[i][j];
                    let den = self.form[i][i];
                    if num % den != 0 || num / den > 0 {
                        return Err(CartanError::BadCartanInteger(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.form[i][j]
    }

    /// Cartan integer a_ij = 2(i·j)/(i·i); a_ii = 2.
    pub fn cartan_integer(&self, i: usize, j: usize) -> i64 {
        2 * self.form[i][j] / self.form[i][i]
    }

    /// d_i = (i·i)/2, the exponent of q in q_i = q^{i·i/2}.
    pub fn half_diagonal(&self, i: usize) -> i64 {
        self.form[i][i] / 2
    }

    pub fn form(&self) -> &Vec<Vec<i64>> {
        &self.form
    }

    /// Evaluate the form on two group elements (integer vectors).
    pub fn pair(&self, g: &[i64], h: &[i64]) -> i64 {
        let n = self.rank();
        assert!(g.len() == n && h.len() == n, "vector length != rank");
        let mut acc = 0i64;
        for i in 0..n {
            if g[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += g[i] * self.form[i][j] * h[j];
            }
        }
        acc
    }

    /// Requires l coprime to 3 when a G2 factor is present (i·i = 6 occurs).
    pub fn has_g2_factor(&self) -> bool {
        (0..self.rank()).any(|i| self.form[i][i] == 6)
    }
}

fn split_type(s: &str) -> Option<(char, usize)> {
    let mut chars = s.chars();
    let fam = chars.next()?;
    let rest: String = chars.collect();
    let n = rest.parse::<usize>().ok()?;
    Some((fam, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_types_validate() {
        for t in ["A1", "A2", "A3", "A1xA1", "B2", "C2", "D4", "G2", "B3"] {
            let d = CartanDatum::named(t).unwrap();
            d.validate().unwrap();
        }
    }

    #[test]
    fn a2_cartan_integers() {
        let d = CartanDatum::named("A2").unwrap();
        assert_eq!(d.cartan_integer(0, 1), -1);
        assert_eq!(d.cartan_integer(1, 0), -1);
        assert_eq!(d.dot(0, 0), 2);
    }

    #[test]
    fn b2_cartan_integers() {
        let d = CartanDatum::named("B2").unwrap();
        // short root last: a_{01} = -1, a_{10} = -2
        assert_eq!(d.cartan_integer(0, 1), -1);
        assert_eq!(d.cartan_integer(1, 0), -2);
    }

    #[test]
    fn invalid_rejected() {
        assert!(CartanDatum::new(vec![vec![3]]).is_err()); // odd diagonal
        assert!(CartanDatum::new(vec![vec![2, 1], vec![1, 2]]).is_err()); // positive off-diag
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]]).is_err()); // asymmetric
    }
}
