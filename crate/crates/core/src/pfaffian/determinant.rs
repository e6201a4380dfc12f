use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::{first_violation, Orientation};
use crate::error::{Error, Result};

/// The skew adjacency matrix: `+1` at `(u, v)` for an arc `u -> v`, `-1`
/// at `(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewIntMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SkewIntMatrix {
    pub fn new(d: &Orientation) -> Self {
        let n = d.host().n();
        let mut entries = vec![0i8; n * n];
        for (tail, head) in d.pairs() {
            entries[tail * n + head] = 1;
            entries[head * n + tail] = -1;
        }
        SkewIntMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let value = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = value;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

pub fn skew_determinant(d: &Orientation) -> BigInt {
    SkewIntMatrix::new(d).determinant()
}

/// Number of perfect matchings as `sqrt(det A)` for a Pfaffian orientation.
pub fn matching_count_by_determinant(d: &Orientation) -> Result<BigUint> {
    if let Some(c) = first_violation(d)? {
        return Err(Error::NotPfaffian(c.vertices().to_vec()));
    }
    let det = skew_determinant(d);
    if det.is_negative() {
        return Err(Error::NotPerfectSquare(det.to_string()));
    }
    let root = det.sqrt();
    if &root * &root != det {
        return Err(Error::NotPerfectSquare(det.to_string()));
    }
    Ok(root.magnitude().clone())
}
