//! Exact integer and rational arithmetic: binomials, Pfaffians, determinants
//! and small dense linear algebra over `BigRational`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// `C(a, b)`, with the convention that it is zero outside `0 <= b <= a`.
pub fn binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// Square antisymmetric matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl SkewMatrix {
    /// Validates that `rows` is square with `A[i][j] = -A[j][i]`.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let k = rows.len();
        for row in &rows {
            if row.len() != k {
                return Err(Error::SizeMismatch(k, row.len()));
            }
        }
        for i in 0..k {
            for j in i..k {
                if rows[i][j] != -&rows[j][i] {
                    return Err(Error::NotAntisymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { rows })
    }

    /// Builds the matrix from its strict upper triangle, `upper(i, j)` for `i < j`.
    pub fn from_upper<F>(size: usize, mut upper: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in i + 1..size {
                let v = upper(i, j);
                rows[j][i] = -&v;
                rows[i][j] = v;
            }
        }
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Applies the congruence `P A Pᵀ` for the permutation with `new[i] = old[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let k = self.size();
        assert_eq!(perm.len(), k, "permutation length must match matrix size");
        let rows = (0..k)
            .map(|i| (0..k).map(|j| self.rows[perm[i]][perm[j]].clone()).collect())
            .collect();
        Self { rows }
    }
}

/// Pfaffian by skew-symmetric elimination over the rationals.
///
/// Each step pivots a nonzero entry into position `(s, s+1)` and takes the
/// Schur complement of the leading 2×2 block, so `Pf(A) = a·Pf(D')` with
/// `D'[i][j] = D[i][j] + (A[s+1][i]·A[s][j] − A[s][i]·A[s+1][j]) / a`.
pub fn pfaffian(a: &SkewMatrix) -> Result<BigInt> {
    let k = a.size();
    if k % 2 == 1 {
        return Err(Error::OddDimension(k));
    }
    let mut m: Vec<Vec<BigRational>> = a
        .rows()
        .iter()
        .map(|row| row.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut pf = BigRational::one();

    for s in (0..k).step_by(2) {
        let Some(pivot) = (s + 1..k).find(|&j| !m[s][j].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if pivot != s + 1 {
            // Simultaneous row/column transposition flips the sign.
            m.swap(pivot, s + 1);
            for row in m.iter_mut() {
                row.swap(pivot, s + 1);
            }
            pf = -pf;
        }
        let p = m[s][s + 1].clone();
        pf *= &p;
        for i in s + 2..k {
            for j in i + 1..k {
                let update = (&m[s + 1][i] * &m[s][j] - &m[s][i] * &m[s + 1][j]) / &p;
                if !update.is_zero() {
                    let v = &m[i][j] + update;
                    m[j][i] = -&v;
                    m[i][j] = v;
                }
            }
        }
    }
    debug_assert!(pf.is_integer(), "pfaffian of an integer matrix must be integral");
    Ok(pf.to_integer())
}

/// Pfaffian by recursive expansion along the first row. Exponential; kept as
/// an independent oracle for [`pfaffian`].
pub fn pfaffian_reference(a: &SkewMatrix) -> Result<BigInt> {
    let k = a.size();
    if k % 2 == 1 {
        return Err(Error::OddDimension(k));
    }
    let idx: Vec<usize> = (0..k).collect();
    Ok(expand_first_row(a, &idx))
}

fn expand_first_row(a: &SkewMatrix, idx: &[usize]) -> BigInt {
    let Some((&first, rest)) = idx.split_first() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for (pos, &j) in rest.iter().enumerate() {
        let entry = a.get(first, j);
        if entry.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, &x)| x)
            .collect();
        let term = entry * expand_first_row(a, &remaining);
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank of a rational matrix (rows may be empty).
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            for j in col..ncols {
                let delta = &factor * &m[rank][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Inverse of a square rational matrix by Gauss–Jordan; `None` if singular.
pub fn inverse(rows: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, p);
        let pivot = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..n {
            if i == col || aug[i][col].is_zero() {
                continue;
            }
            let factor = aug[i][col].clone();
            for j in 0..2 * n {
                let delta = &factor * &aug[col][j];
                aug[i][j] -= delta;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Iterated forward differences `Δ^order` of a sequence of integers.
pub fn forward_differences(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        if cur.len() < 2 {
            return Vec::new();
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

pub(crate) fn is_positive(x: &BigInt) -> bool {
    x.is_positive()
}
