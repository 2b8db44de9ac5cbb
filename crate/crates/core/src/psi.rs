//! The integers ψ_i = 2^{i−1}, ψ_{i,j} = Σ_{k=i}^{j−1} C(i+j−2, k) and the
//! Pfaffians ψ_α built from them.
//!
//! For a subsequence α = (α_1 < … < α_r) of even length, ψ_α is the Pfaffian
//! of the r×r skew matrix with upper entries ψ_{α_k,α_l}. For odd length the
//! matrix is bordered by an extra leading row/column carrying ψ_{α_k}.
//! The empty subsequence has ψ_∅ = 1.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial, pfaffian, BigInt, SkewMatrix};

/// `ψ_i = 2^{i−1}`.
pub fn psi_single(i: usize) -> Result<BigInt> {
    if i == 0 {
        return Err(Error::PsiIndex);
    }
    Ok(BigInt::one() << (i - 1))
}

/// `ψ_{i,j} = Σ_{k=i}^{j−1} C(i+j−2, k)` for `1 <= i < j`.
pub fn psi_pair(i: usize, j: usize) -> Result<BigInt> {
    if i == 0 || i >= j {
        return Err(Error::PsiPairOrder { i, j });
    }
    let top = (i + j - 2) as u64;
    Ok((i..j).map(|k| binomial(top, k as i64)).sum())
}

/// A strictly increasing subsequence of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subsequence {
    entries: Vec<usize>,
    n: usize,
}

impl Subsequence {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidSubsequence {
            entries: entries.clone(),
            n,
            reason,
        };
        if entries.iter().any(|&e| e == 0) {
            return Err(invalid("entries must be positive"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("entries must be strictly increasing"));
        }
        if entries.last().is_some_and(|&e| e > n) {
            return Err(invalid("entry exceeds ambient bound"));
        }
        Ok(Self { entries, n })
    }

    /// Bit `i` of `mask` selects element `i + 1`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        debug_assert!(n >= 64 || mask >> n == 0);
        let entries = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        Self { entries, n }
    }

    /// The whole sequence `(1, …, n)`.
    pub fn full(n: usize) -> Self {
        Self {
            entries: (1..=n).collect(),
            n,
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// ‖α‖, the sum of the entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn mask(&self) -> u64 {
        self.entries.iter().fold(0, |m, &e| m | 1 << (e - 1))
    }

    /// `{1, …, n} ∖ α`.
    pub fn complement(&self) -> Self {
        let mut it = self.entries.iter().peekable();
        let entries = (1..=self.n)
            .filter(|&x| {
                if it.peek() == Some(&&x) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        Self { entries, n: self.n }
    }
}

/// Memoized ψ_i and ψ_{i,j} for `1 <= i < j <= n`.
#[derive(Debug, Clone)]
pub struct PsiTable {
    n: usize,
    singles: Vec<BigInt>,
    // row-major n×n, only the strict upper triangle is populated
    pairs: Vec<BigInt>,
}

impl PsiTable {
    pub fn new(n: usize) -> Self {
        let singles = (1..=n).map(|i| psi_single(i).expect("i >= 1")).collect();
        let mut pairs = vec![BigInt::zero(); n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                pairs[(i - 1) * n + (j - 1)] = psi_pair(i, j).expect("i < j");
            }
        }
        Self { n, singles, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// ψ_i, 1-based.
    pub fn single(&self, i: usize) -> &BigInt {
        &self.singles[i - 1]
    }

    /// ψ_{i,j}, 1-based with `i < j`.
    pub fn pair(&self, i: usize, j: usize) -> &BigInt {
        debug_assert!(i < j);
        &self.pairs[(i - 1) * self.n + (j - 1)]
    }

    /// The skew matrix whose Pfaffian is ψ_α (bordered when `|α|` is odd).
    pub fn skew_matrix(&self, alpha: &Subsequence) -> Result<SkewMatrix> {
        self.check(alpha)?;
        let e = alpha.entries();
        if e.len() % 2 == 0 {
            Ok(SkewMatrix::from_upper(e.len(), |k, l| self.pair(e[k], e[l]).clone()))
        } else {
            Ok(SkewMatrix::from_upper(e.len() + 1, |k, l| {
                if k == 0 {
                    self.single(e[l - 1]).clone()
                } else {
                    self.pair(e[k - 1], e[l - 1]).clone()
                }
            }))
        }
    }

    /// ψ_α via the elimination Pfaffian.
    pub fn psi(&self, alpha: &Subsequence) -> Result<BigInt> {
        if alpha.is_empty() {
            return Ok(BigInt::one());
        }
        pfaffian(&self.skew_matrix(alpha)?)
    }

    fn check(&self, alpha: &Subsequence) -> Result<()> {
        match alpha.entries().last() {
            Some(&e) if e > self.n => Err(Error::EntryOutOfRange { entry: e, n: self.n }),
            _ => Ok(()),
        }
    }
}

/// ψ_α read from `table`.
pub fn psi_seq(alpha: &Subsequence, table: &PsiTable) -> Result<BigInt> {
    table.psi(alpha)
}

/// `P_α(n) = ψ_{{1,…,n} ∖ α}` when α ⊆ {1,…,n}, and 0 otherwise.
pub fn p_alpha(alpha: &Subsequence, n: usize) -> BigInt {
    if alpha.entries().last().is_some_and(|&e| e > n) {
        return BigInt::zero();
    }
    let inside = Subsequence::new(alpha.entries().to_vec(), n).expect("validated subsequence");
    PsiTable::new(n)
        .psi(&inside.complement())
        .expect("complement fits the table")
}

/// ψ_S for every subset S of `{1, …, n}`, indexed by bitmask.
///
/// Filled by Pfaffian expansion along the first row of each matrix, reusing
/// the values of smaller subsets:
///
/// * even |S| with smallest element s: `ψ_S = Σ_q (−1)^q ψ_{s,t_q} ψ_{S∖{s,t_q}}`
///   over the remaining elements `t_0 < t_1 < …`;
/// * odd |S| = (s_0 < s_1 < …): `ψ_S = Σ_q (−1)^q ψ_{s_q} ψ_{S∖{s_q}}`.
///
/// Layers of equal popcount are computed in parallel; each value is an exact
/// function of lower layers, so the table does not depend on scheduling.
#[derive(Debug, Clone)]
pub struct SubsetPsi {
    n: usize,
    values: Vec<BigInt>,
}

impl SubsetPsi {
    /// Largest supported `n`; the table holds `2^n` big integers.
    pub const MAX_N: usize = 30;

    pub fn compute(table: &PsiTable) -> Self {
        let n = table.n();
        assert!(n <= Self::MAX_N, "subset table limited to n <= {}", Self::MAX_N);
        let size = 1usize << n;
        let mut values = vec![BigInt::zero(); size];
        values[0] = BigInt::one();

        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for mask in 1..size as u32 {
            layers[mask.count_ones() as usize].push(mask);
        }

        for layer in layers.iter().skip(1) {
            let computed: Vec<BigInt> = layer
                .par_iter()
                .map(|&mask| expand_subset(table, &values, mask))
                .collect();
            for (&mask, v) in layer.iter().zip(computed) {
                values[mask as usize] = v;
            }
        }
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: u64) -> &BigInt {
        &self.values[mask as usize]
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }
}

fn expand_subset(table: &PsiTable, values: &[BigInt], mask: u32) -> BigInt {
    let mut total = BigInt::zero();
    if mask.count_ones() % 2 == 0 {
        let low = mask.trailing_zeros();
        let rest = mask & !(1 << low);
        for (q, t) in bits(rest).enumerate() {
            let sub = &values[(rest & !(1 << t)) as usize];
            if sub.is_zero() {
                continue;
            }
            let term = table.pair(low as usize + 1, t as usize + 1) * sub;
            if q % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    } else {
        for (q, s) in bits(mask).enumerate() {
            let sub = &values[(mask & !(1 << s)) as usize];
            if sub.is_zero() {
                continue;
            }
            let term = table.single(s as usize + 1) * sub;
            if q % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

fn bits(mut mask: u32) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros();
            mask &= mask - 1;
            Some(b)
        }
    })
}
