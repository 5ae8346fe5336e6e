use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cardinality::graph::MultiGraph;
use crate::error::{Error, Result};
use crate::word::Word;

/// Square matrix of arbitrary-precision integers with labelled rows and
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    labels: Vec<Word>,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(labels: Vec<Word>, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == labels.len()) && rows.len() == labels.len());
        IntMatrix { labels, rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entries as `i64`, for display and tests.
    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).expect("entry fits i64")).collect())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.rows.clone())
    }

    /// `det(Δ(v))`: determinant after deleting row and column `v`. The
    /// empty minor has determinant 1.
    pub fn minor_determinant_at(&self, v: usize) -> Result<BigInt> {
        if v >= self.size() {
            return Err(Error::MatrixIndex {
                vertex: v,
                size: self.size(),
            });
        }
        let minor: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != v)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != v)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        Ok(bareiss_determinant(minor))
    }

    pub fn minor_determinant(&self, v: &Word) -> Result<BigInt> {
        let idx = self
            .labels
            .iter()
            .position(|l| l == v)
            .ok_or_else(|| Error::NotAVertex(v.to_string()))?;
        self.minor_determinant_at(idx)
    }
}

/// Fraction-free Gaussian elimination. Every intermediate division is
/// exact, so the result is the exact determinant.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `Δ_{uv} = -m(u,v)` for `u != v` and `Δ_{uu} = d⁺(u) - m(u,u)`.
pub fn laplacian(g: &MultiGraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (a, b, m) in g.edges() {
        if a != b {
            rows[a][b] -= BigInt::from(m);
            rows[a][a] += BigInt::from(m);
        }
    }
    IntMatrix::new(g.vertices().to_vec(), rows)
}
