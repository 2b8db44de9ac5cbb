use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{self, BigInt, BigRational};

use super::poly::{Side, SparsePoly, VarId};

/// Square matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    entries: Vec<SparsePoly>,
}

impl SymbolicMatrix {
    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> SparsePoly,
    {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &SparsePoly::one())
    }

    /// `p · Id_n`.
    pub fn scalar(n: usize, p: &SparsePoly) -> Self {
        Self::from_fn(n, |i, j| if i == j { p.clone() } else { SparsePoly::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn swap_sides(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(SparsePoly::swap_sides).collect(),
        }
    }
}

/// The generic symmetric matrix with entries `X_{i,j}` (or `Y_{i,j}`).
pub fn generic_sym_matrix(n: usize, side: Side) -> SymbolicMatrix {
    SymbolicMatrix::from_fn(n, |i, j| SparsePoly::var(VarId::new(side, i + 1, j + 1)))
}

pub fn mat_mul(a: &SymbolicMatrix, b: &SymbolicMatrix) -> Result<SymbolicMatrix> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    let n = a.n;
    Ok(SymbolicMatrix::from_fn(n, |i, j| {
        (0..n).fold(SparsePoly::zero(), |acc, k| acc + a.get(i, k) * b.get(k, j))
    }))
}

/// Determinant by dynamic programming over column subsets.
///
/// `minor[S]` is the determinant of the first `|S|` rows restricted to the
/// columns in `S`, expanded along its last row. Division-free, `O(2^k·k)`
/// polynomial products.
fn det_column_subsets(rows: &[Vec<&SparsePoly>]) -> SparsePoly {
    let k = rows.len();
    let mut minor = vec![SparsePoly::zero(); 1 << k];
    minor[0] = SparsePoly::one();
    for mask in 1usize..1 << k {
        let row = mask.count_ones() as usize - 1;
        let mut acc = SparsePoly::zero();
        let mut pos = 0;
        for c in 0..k {
            if mask >> c & 1 == 0 {
                continue;
            }
            let entry = rows[row][c];
            let sub = &minor[mask & !(1 << c)];
            if !entry.is_zero() && !sub.is_zero() {
                let term = entry * sub;
                acc = if (row + pos) % 2 == 0 { acc + term } else { acc - term };
            }
            pos += 1;
        }
        minor[mask] = acc;
    }
    minor.pop().expect("table has at least one entry")
}

pub fn det_sym(a: &SymbolicMatrix) -> SparsePoly {
    let rows: Vec<Vec<&SparsePoly>> = (0..a.n)
        .map(|i| (0..a.n).map(|j| a.get(i, j)).collect())
        .collect();
    det_column_subsets(&rows)
}

/// Classical adjugate: entry `(i, j)` is `(−1)^{i+j}` times the minor with
/// row `j` and column `i` deleted, so that `A · adj(A) = det(A) · Id`.
pub fn adjugate_sym(a: &SymbolicMatrix) -> SymbolicMatrix {
    let n = a.n;
    SymbolicMatrix::from_fn(n, |i, j| {
        let rows: Vec<Vec<&SparsePoly>> = (0..n)
            .filter(|&r| r != j)
            .map(|r| (0..n).filter(|&c| c != i).map(|c| a.get(r, c)).collect())
            .collect();
        let minor = det_column_subsets(&rows);
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

/// Symmetric matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSymMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RationalSymMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::SizeMismatch(n, row.len()));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn from_integers(rows: &[Vec<BigInt>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        Self {
            rows: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        exact::rank(&self.rows)
    }

    pub fn mul(&self, other: &Self) -> Vec<Vec<BigRational>> {
        mat_mul_rational(&self.rows, &other.rows)
    }

    /// True when every `size × size` minor vanishes.
    pub fn minors_vanish(&self, size: usize) -> bool {
        let n = self.n();
        if size > n {
            return true;
        }
        let subsets = k_subsets(n, size);
        subsets.iter().all(|rs| {
            subsets.iter().all(|cs| {
                let sub: Vec<Vec<BigRational>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| self.rows[r][c].clone()).collect())
                    .collect();
                exact::rank(&sub) < size
            })
        })
    }

    /// Assigns `side_{i,j} ↦ self[i][j]` for all `i <= j`.
    pub fn assignment(&self, side: Side) -> HashMap<VarId, BigRational> {
        let n = self.n();
        let mut out = HashMap::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                out.insert(VarId::new(side, i + 1, j + 1), self.rows[i][j].clone());
            }
        }
        out
    }
}

pub(crate) fn mat_mul_rational(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    a[i].iter()
                        .zip(b)
                        .fold(BigRational::zero(), |acc, (x, row)| acc + x * &row[j])
                })
                .collect()
        })
        .collect()
}

pub(crate) fn transpose(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let p = a.first().map_or(0, Vec::len);
    (0..p).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub(crate) fn is_scalar_identity(a: &[Vec<BigRational>], s: &BigRational) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x == s } else { x.is_zero() })
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(side: Side, i: usize, j: usize) -> SparsePoly {
        SparsePoly::var(VarId::new(side, i, j))
    }

    #[test]
    fn generic_layout() {
        let x = generic_sym_matrix(2, Side::X);
        assert_eq!(x.get(0, 1), &v(Side::X, 1, 2));
        assert_eq!(x.get(1, 0), &v(Side::X, 1, 2));
        assert_eq!(generic_sym_matrix(1, Side::X).get(0, 0), &v(Side::X, 1, 1));
        let x3 = generic_sym_matrix(3, Side::X);
        let mut distinct: Vec<_> = (0..9).map(|k| x3.get(k / 3, k % 3).clone()).collect();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn products() {
        let x = generic_sym_matrix(2, Side::X);
        let y = generic_sym_matrix(2, Side::Y);
        assert_eq!(mat_mul(&SymbolicMatrix::identity(2), &x).unwrap(), x);
        let xy = mat_mul(&x, &y).unwrap();
        let expected = &(&v(Side::X, 1, 1) * &v(Side::Y, 1, 2)) + &(&v(Side::X, 1, 2) * &v(Side::Y, 2, 2));
        assert_eq!(xy.get(0, 1), &expected);
        let one = mat_mul(&generic_sym_matrix(1, Side::X), &generic_sym_matrix(1, Side::Y)).unwrap();
        assert_eq!(one.get(0, 0), &(&v(Side::X, 1, 1) * &v(Side::Y, 1, 1)));
        assert_eq!(mat_mul(&x, &generic_sym_matrix(3, Side::Y)), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn small_determinants_and_adjugates() {
        let x1 = generic_sym_matrix(1, Side::X);
        assert_eq!(det_sym(&x1), v(Side::X, 1, 1));
        assert_eq!(adjugate_sym(&x1).get(0, 0), &SparsePoly::one());

        let x2 = generic_sym_matrix(2, Side::X);
        assert_eq!(det_sym(&x2), &(&v(Side::X, 1, 1) * &v(Side::X, 2, 2)) - &v(Side::X, 1, 2).pow(2));
        let adj = adjugate_sym(&x2);
        assert_eq!(adj.get(0, 0), &v(Side::X, 2, 2));
        assert_eq!(adj.get(0, 1), &-v(Side::X, 1, 2));
        assert_eq!(adj.get(1, 0), &-v(Side::X, 1, 2));
        assert_eq!(adj.get(1, 1), &v(Side::X, 1, 1));
    }

    #[test]
    fn adjugate_identity_holds_symbolically() {
        for n in 1..=4 {
            let x = generic_sym_matrix(n, Side::X);
            let adj = adjugate_sym(&x);
            assert!(adj.is_symmetric(), "n = {n}");
            let prod = mat_mul(&x, &adj).unwrap();
            assert_eq!(prod, SymbolicMatrix::scalar(n, &det_sym(&x)), "n = {n}");
        }
    }

    #[test]
    fn symbolic_determinant_evaluates_like_bareiss() {
        let samples: [[i64; 6]; 3] = [[3, -1, 4, 1, -5, 9], [2, 7, 1, -8, 2, 8], [0, 0, 1, 1, 0, 0]];
        let det = det_sym(&generic_sym_matrix(3, Side::X));
        for s in samples {
            let [a, b, c, d, e, f] = s.map(BigInt::from);
            let rows = vec![
                vec![a.clone(), b.clone(), c.clone()],
                vec![b, d.clone(), e.clone()],
                vec![c, e, f],
            ];
            let m = RationalSymMatrix::from_integers(&rows).unwrap();
            let value = det.evaluate(&m.assignment(Side::X)).unwrap();
            assert_eq!(value, BigRational::from_integer(exact::determinant(&rows)));
        }
    }

    #[test]
    fn rational_matrix_helpers() {
        let q = |x: i64| BigRational::from_integer(x.into());
        assert!(RationalSymMatrix::new(vec![vec![q(1), q(2)], vec![q(3), q(1)]]).is_err());
        let m = RationalSymMatrix::new(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.minors_vanish(2));
        assert!(!m.minors_vanish(1));
        assert!(RationalSymMatrix::zero(3).is_zero());
    }
}
