//! Multidegrees of the inverse graph Γ and of the product-zero variety Σ.
//!
//! Everything is derived from one pass over the subsets α ⊆ {1,…,n}, grouping
//! the products ψ_α·ψ_{α^c} by length |α| and weight ‖α‖:
//!
//! * δ(d,n,r) is the group of length `n − r` and weight `d`, for `0 < r < n`;
//! * β(n,d) is the sum over all lengths of weight `d`;
//! * deg^{m−1−d,d}(Γ) = Σ_{j=0}^{d} (−1)^j β(n, d−j).

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{is_positive, BigInt};
use crate::psi::{PsiTable, SubsetPsi};
use crate::sym_dim;

/// Number of mask chunks reduced in fixed order; independent of thread count.
const CHUNKS: usize = 64;

/// Sums of ψ_α·ψ_{α^c} keyed by `(|α|, ‖α‖)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightGrid {
    n: usize,
    cells: Vec<Vec<BigInt>>,
}

impl WeightGrid {
    pub fn compute(n: usize) -> Self {
        let table = PsiTable::new(n);
        let psi = SubsetPsi::compute(&table);
        Self::from_subsets(&psi)
    }

    pub fn from_subsets(psi: &SubsetPsi) -> Self {
        let n = psi.n();
        let m = sym_dim(n);
        let full = psi.full_mask();
        let total = 1u64 << n;
        let chunk = total.div_ceil(CHUNKS as u64).max(1);
        let empty = || vec![vec![BigInt::zero(); m + 1]; n + 1];

        let partials: Vec<Vec<Vec<BigInt>>> = (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut cells = empty();
                for mask in c * chunk..((c + 1) * chunk).min(total) {
                    let a = psi.get(mask);
                    let b = psi.get(full & !mask);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let len = mask.count_ones() as usize;
                    cells[len][mask_weight(mask)] += a * b;
                }
                cells
            })
            .collect();

        let mut cells = empty();
        for part in partials {
            for (row, prow) in cells.iter_mut().zip(part) {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x += y;
                }
            }
        }
        Self { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Σ ψ_α ψ_{α^c} over α with `|α| = len`, `‖α‖ = weight`.
    pub fn cell(&self, len: usize, weight: usize) -> &BigInt {
        &self.cells[len][weight]
    }

    /// δ(d,n,r); zero outside `0 < r < n` or `0 <= d <= m`.
    pub fn delta(&self, d: i64, r: i64) -> BigInt {
        let n = self.n as i64;
        if r <= 0 || r >= n || d < 0 || d as usize > sym_dim(self.n) {
            return BigInt::zero();
        }
        self.cells[(n - r) as usize][d as usize].clone()
    }

    /// The vector β(n,0), …, β(n,m).
    pub fn beta_vector(&self) -> Vec<BigInt> {
        let m = sym_dim(self.n);
        (0..=m)
            .map(|d| self.cells.iter().map(|row| &row[d]).sum())
            .collect()
    }
}

/// Sum of the elements selected by `mask` (bit `i` ↔ element `i + 1`).
pub fn mask_weight(mask: u64) -> usize {
    let mut w = 0;
    let mut rest = mask;
    while rest != 0 {
        w += rest.trailing_zeros() as usize + 1;
        rest &= rest - 1;
    }
    w
}

/// All multidegree data for one matrix size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeTable {
    pub n: usize,
    pub m: usize,
    /// β(n,0), …, β(n,m).
    pub beta: Vec<BigInt>,
    /// deg^{m−1−d,d}(Γ) for d = 0, …, m−1.
    pub gamma_degs: Vec<BigInt>,
    /// Coefficients of C(Σ) at t₁^{m−d}t₂^d for d = 1, …, m−1.
    pub sigma_coeffs: Vec<BigInt>,
    pub grid: WeightGrid,
}

impl MultidegreeTable {
    pub fn compute(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix size n must be at least 1".into()));
        }
        let grid = WeightGrid::compute(n);
        let m = sym_dim(n);
        let beta = grid.beta_vector();
        let sigma_coeffs = beta[1..m].to_vec();
        let gamma_degs = alternating_sums(n, &beta[..m])?;
        Ok(Self {
            n,
            m,
            beta,
            gamma_degs,
            sigma_coeffs,
            grid,
        })
    }

    pub fn beta_at(&self, d: i64) -> BigInt {
        if d < 0 || d as usize > self.m {
            BigInt::zero()
        } else {
            self.beta[d as usize].clone()
        }
    }

    pub fn delta(&self, d: i64, r: i64) -> BigInt {
        self.grid.delta(d, r)
    }

    /// Coefficients of C(Γ; t₁, t₂) indexed by the exponent of t₂.
    pub fn gamma_poly(&self) -> Vec<BigInt> {
        // deg^{i,j} multiplies t₁^{m−1−i} t₂^{m−1−j}; with j = d the t₂ exponent is m−1−d.
        (0..self.m).map(|k| self.gamma_degs[self.m - 1 - k].clone()).collect()
    }

    /// Coefficients of t₁^m + t₂^m + C(Σ) indexed by the exponent of t₂.
    pub fn sigma_closure_poly(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.m + 1);
        out.push(BigInt::from(1));
        out.extend(self.sigma_coeffs.iter().cloned());
        if self.m > 0 {
            out.push(BigInt::from(1));
        }
        out
    }

    /// Coefficientwise check of (t₁+t₂)·C(Γ) = t₁^m + t₂^m + C(Σ).
    pub fn verify_identity(&self) -> IdentityReport {
        let gamma = self.gamma_poly();
        let lhs = times_t1_plus_t2(&gamma);
        let rhs = self.sigma_closure_poly();
        IdentityReport { n: self.n, lhs, rhs }
    }
}

fn alternating_sums(n: usize, beta: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut out: Vec<BigInt> = Vec::with_capacity(beta.len());
    for (d, b) in beta.iter().enumerate() {
        let v = match out.last() {
            Some(prev) => b - prev,
            None => b.clone(),
        };
        if !is_positive(&v) {
            return Err(Error::PositivityViolated {
                n,
                d,
                value: v.to_string(),
            });
        }
        out.push(v);
    }
    Ok(out)
}

/// Multiplies a homogeneous bivariate polynomial (indexed by t₂ exponent) by t₁ + t₂.
pub fn times_t1_plus_t2(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); coeffs.len() + 1];
    for (k, c) in coeffs.iter().enumerate() {
        out[k] += c;
        out[k + 1] += c;
    }
    out
}

/// Result of comparing both sides of the multidegree identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    /// (t₁+t₂)·C(Γ), indexed by t₂ exponent.
    pub lhs: Vec<BigInt>,
    /// t₁^m + t₂^m + C(Σ), indexed by t₂ exponent.
    pub rhs: Vec<BigInt>,
}

impl IdentityReport {
    pub fn coefficient_matches(&self) -> Vec<bool> {
        let len = self.lhs.len().max(self.rhs.len());
        let zero = BigInt::zero();
        (0..len)
            .map(|k| self.lhs.get(k).unwrap_or(&zero) == self.rhs.get(k).unwrap_or(&zero))
            .collect()
    }

    pub fn all_match(&self) -> bool {
        self.coefficient_matches().into_iter().all(|b| b)
    }
}

/// δ(d,n,r), the algebraic degree of semidefinite programming.
pub fn delta(d: i64, n: usize, r: i64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    WeightGrid::compute(n).delta(d, r)
}

/// β(n,d); zero for `d < 0` or `d > m`.
pub fn beta(n: usize, d: i64) -> BigInt {
    if n == 0 || d < 0 || d as usize > sym_dim(n) {
        return BigInt::zero();
    }
    WeightGrid::compute(n).beta_vector().swap_remove(d as usize)
}

/// Coefficients of C(Σ) for d = 1, …, m−1.
pub fn c_sigma(n: usize) -> Result<Vec<BigInt>> {
    Ok(MultidegreeTable::compute(n)?.sigma_coeffs)
}

/// deg^{m−1−d,d}(Γ) for d = 0, …, m−1.
pub fn c_gamma(n: usize) -> Result<Vec<BigInt>> {
    Ok(MultidegreeTable::compute(n)?.gamma_degs)
}

/// Runs [`MultidegreeTable::verify_identity`] for size `n`.
pub fn verify_identity(n: usize) -> Result<IdentityReport> {
    Ok(MultidegreeTable::compute(n)?.verify_identity())
}
