use super::GroupError;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Total order on `Z^n`: compare the images under an invertible integer
/// matrix lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrderSpec {
    rows: Vec<Vec<i64>>,
}

impl WeightOrderSpec {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::InvalidSpec(
                "weight matrix must be square and nonempty".into(),
            ));
        }
        if determinant(&rows).is_zero() {
            return Err(GroupError::InvalidSpec("weight matrix is singular".into()));
        }
        Ok(WeightOrderSpec { rows })
    }

    /// The usual order on `Z` (n = 1) or the coordinate-lexicographic order.
    pub fn natural(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeightOrderSpec { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn image(&self, x: &[i64]) -> Vec<i128> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum())
            .collect()
    }

    /// Index of the first nonzero image coordinate, or `None` for zero.
    pub fn leading_index(&self, x: &[i64]) -> Option<usize> {
        self.image(x).iter().position(|&v| v != 0)
    }

    pub fn sign(&self, x: &[i64]) -> Ordering {
        for r in &self.rows {
            let d: i128 = r.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum();
            match d.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, x: &[i64], y: &[i64]) -> Ordering {
        let d: Vec<i64> = y.iter().zip(x).map(|(a, b)| a - b).collect();
        self.sign(&d).reverse()
    }

    /// Primitive integer basis of the kernel of the first `rows` rows.
    pub fn kernel_basis(&self, rows: usize) -> Vec<Vec<i64>> {
        kernel_basis(&self.rows[..rows], self.n())
    }
}

pub fn compare_total(spec: &WeightOrderSpec, x: &[i64], y: &[i64]) -> Result<Ordering, GroupError> {
    for v in [x, y] {
        if v.len() != spec.n() {
            return Err(GroupError::Dimension {
                expected: spec.n(),
                got: v.len(),
            });
        }
    }
    Ok(spec.compare(x, y))
}

/// Fraction-free Gaussian elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

fn kernel_basis(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let r = m[row].clone();
                for (a, b) in m[i].iter_mut().zip(&r) {
                    *a = &*a - &f * b;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

fn primitive(v: &[Rational]) -> Vec<i64> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    // First nonzero coordinate positive.
    if out
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        out = out.into_iter().map(|x| -x).collect();
    }
    out.iter()
        .map(|x| x.to_i64().expect("kernel vector overflow"))
        .collect()
}
