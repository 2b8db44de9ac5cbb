//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the optimized subset table or the elimination Pfaffian.

#![allow(dead_code)]

use invdeg_core::exact::{pfaffian_reference, BigInt, SkewMatrix};
use num_traits::{One, Zero};

/// Pascal's triangle up to row `rows`.
pub fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=rows {
        let prev = &t[r - 1];
        let mut row = vec![BigInt::one(); r + 1];
        for k in 1..r {
            row[k] = &prev[k - 1] + &prev[k];
        }
        t.push(row);
    }
    t
}

/// ψ_i and ψ_{i,j} tabulated independently of the library (1-based).
pub struct OraclePsi {
    singles: Vec<BigInt>,
    pairs: Vec<Vec<BigInt>>,
}

impl OraclePsi {
    pub fn new(n: usize) -> Self {
        let tri = pascal(2 * n);
        let singles = (0..=n)
            .map(|i| if i == 0 { BigInt::zero() } else { BigInt::from(2u32).pow(i as u32 - 1) })
            .collect();
        let mut pairs = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for i in 1..=n {
            for j in i + 1..=n {
                pairs[i][j] = (i..j).map(|k| tri[i + j - 2][k].clone()).sum();
            }
        }
        Self { singles, pairs }
    }

    /// ψ_α by recursive first-row expansion of the (possibly bordered) matrix.
    pub fn psi(&self, alpha: &[usize]) -> BigInt {
        if alpha.is_empty() {
            return BigInt::one();
        }
        let odd = alpha.len() % 2 == 1;
        let size = alpha.len() + odd as usize;
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for a in 0..size {
            for b in a + 1..size {
                let v = if odd && a == 0 {
                    self.singles[alpha[b - 1]].clone()
                } else if odd {
                    self.pairs[alpha[a - 1]][alpha[b - 1]].clone()
                } else {
                    self.pairs[alpha[a]][alpha[b]].clone()
                };
                rows[b][a] = -&v;
                rows[a][b] = v;
            }
        }
        pfaffian_reference(&SkewMatrix::new(rows).unwrap()).unwrap()
    }
}

/// Naive β(n,·) and δ(·,n,r) by sequential enumeration of all 2ⁿ bitmasks.
/// Returns `(beta, grid)` with `grid[len][weight]`.
pub fn naive_beta_grid(n: usize) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let m = n * (n + 1) / 2;
    let psi = OraclePsi::new(n);
    let mut beta = vec![BigInt::zero(); m + 1];
    let mut grid = vec![vec![BigInt::zero(); m + 1]; n + 1];
    for mask in 0u32..1 << n {
        let alpha: Vec<usize> = (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
        let comp: Vec<usize> = (1..=n).filter(|&e| mask >> (e - 1) & 1 == 0).collect();
        let w: usize = alpha.iter().sum();
        let v = psi.psi(&alpha) * psi.psi(&comp);
        beta[w] += &v;
        grid[alpha.len()][w] += v;
    }
    (beta, grid)
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
