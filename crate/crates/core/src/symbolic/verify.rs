use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{self, BigInt, BigRational};

use super::ideal::{generators_i1xy, generators_j};
use super::matrix::{
    adjugate_sym, generic_sym_matrix, is_scalar_identity, mat_mul_rational, transpose, RationalSymMatrix,
};
use super::poly::{Side, SparsePoly, VarId};

/// Largest `n` for which symbolic mode runs unless the caller raises the cap.
pub const DEFAULT_SYMBOLIC_CAP: usize = 4;

/// Entries of sampled matrices are drawn uniformly from `-ENTRY_BOUND..=ENTRY_BOUND`.
pub const ENTRY_BOUND: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Symbolic,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: usize,
    pub mode: VerifyMode,
    pub generators: usize,
    /// Sampled points checked (1 for symbolic mode).
    pub trials: usize,
}

/// Checks that every generator of the inverse-graph ideal vanishes on
/// `(M, adj M)`: identically after substituting `Y ↦ adj(X)` in symbolic
/// mode, or exactly at `trials` random integer matrices in numeric mode.
pub fn verify_graph_vanishing(
    n: usize,
    mode: VerifyMode,
    trials: usize,
    seed: u64,
    symbolic_cap: usize,
) -> Result<VanishingReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size n must be at least 1".into()));
    }
    let gens = generators_j(n);
    match mode {
        VerifyMode::Symbolic => {
            if n > symbolic_cap {
                return Err(Error::InvalidArgument(format!(
                    "symbolic mode is capped at n = {symbolic_cap}"
                )));
            }
            let adj = adjugate_sym(&generic_sym_matrix(n, Side::X));
            let mut assignment = HashMap::new();
            for i in 0..n {
                for j in i..n {
                    assignment.insert(VarId::new(Side::Y, i + 1, j + 1), adj.get(i, j).clone());
                }
            }
            let residuals: Vec<SparsePoly> =
                gens.par_iter().map(|g| g.substitute(&assignment)).collect();
            for (g, r) in gens.iter().zip(residuals) {
                if !r.is_zero() {
                    return Err(Error::NonzeroResidual {
                        generator: g.to_string(),
                        residual: r.to_string(),
                    });
                }
            }
            Ok(VanishingReport {
                n,
                mode,
                generators: gens.len(),
                trials: 1,
            })
        }
        VerifyMode::Numeric => {
            if trials == 0 {
                return Err(Error::InvalidArgument("numeric mode needs at least one trial".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let (m, adj) = random_graph_point(n, &mut rng);
                let mut assignment = m.assignment(Side::X);
                assignment.extend(adj.assignment(Side::Y));
                for g in &gens {
                    let value = g.evaluate(&assignment)?;
                    if !value.is_zero() {
                        return Err(Error::NonzeroResidual {
                            generator: g.to_string(),
                            residual: value.to_string(),
                        });
                    }
                }
            }
            Ok(VanishingReport {
                n,
                mode,
                generators: gens.len(),
                trials,
            })
        }
    }
}

fn random_entry(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let v = rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND);
        if v != 0 {
            return BigRational::from_integer(v.into());
        }
    }
}

/// Random integer symmetric matrix with nonzero determinant.
pub fn random_invertible_sym(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    loop {
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = random_entry(rng);
                rows[j][i] = v.clone();
                rows[i][j] = v;
            }
        }
        if !exact::determinant(&rows).is_zero() {
            return rows;
        }
    }
}

/// `det(M) · M⁻¹` for an invertible integer matrix.
pub fn numeric_adjugate(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let det = BigRational::from_integer(exact::determinant(rows));
    let q: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let inv = exact::inverse(&q).expect("matrix is invertible");
    inv.into_iter()
        .map(|r| r.into_iter().map(|x| x * &det).collect())
        .collect()
}

fn random_graph_point(n: usize, rng: &mut ChaCha8Rng) -> (RationalSymMatrix, RationalSymMatrix) {
    let rows = random_invertible_sym(n, rng);
    let adj = RationalSymMatrix::new(numeric_adjugate(&rows)).expect("adjugate of symmetric is symmetric");
    let m = RationalSymMatrix::from_integers(&rows).expect("symmetric by construction");
    (m, adj)
}

/// Numeric form of `M · adj(M) = det(M) · Id` over `trials` random points.
pub fn verify_adjugate_numeric(n: usize, trials: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).all(|_| {
        let rows = random_invertible_sym(n, &mut rng);
        let det = BigRational::from_integer(exact::determinant(&rows));
        let adj = numeric_adjugate(&rows);
        let m = RationalSymMatrix::from_integers(&rows).expect("symmetric");
        adj.iter().flatten().all(BigRational::is_integer)
            && is_scalar_identity(&mat_mul_rational(m.rows(), &adj), &det)
    })
}

/// A point `(M, N)` of the component of `{MN = 0}` with `rank M = r`,
/// `rank N = n − r`:
/// `M = A·diag(d₁…d_r, 0…0)·Aᵀ`, `N = A⁻ᵀ·diag(0…0, e₁…e_{n−r})·A⁻¹`.
pub fn witness_rank_pair(n: usize, r: usize, seed: u64) -> Result<(RationalSymMatrix, RationalSymMatrix)> {
    if r > n {
        return Err(Error::InvalidArgument(format!("rank {r} exceeds n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, a_inv) = loop {
        let a: Vec<Vec<BigRational>> = (0..n)
            .map(|_| (0..n).map(|_| BigRational::from_integer(random_entry(&mut rng))).collect())
            .collect();
        if let Some(inv) = exact::inverse(&a) {
            break (a, inv);
        }
    };
    let mut left = vec![vec![BigRational::zero(); n]; n];
    let mut right = vec![vec![BigRational::zero(); n]; n];
    for (i, (lrow, rrow)) in left.iter_mut().zip(right.iter_mut()).enumerate() {
        if i < r {
            lrow[i] = random_nonzero(&mut rng);
        } else {
            rrow[i] = random_nonzero(&mut rng);
        }
    }
    let m = mat_mul_rational(&mat_mul_rational(&a, &left), &transpose(&a));
    let nn = mat_mul_rational(&mat_mul_rational(&transpose(&a_inv), &right), &a_inv);
    Ok((RationalSymMatrix::new(m)?, RationalSymMatrix::new(nn)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub n: usize,
    pub r: usize,
    pub seed: u64,
    /// Every entry of `XY` vanishes at `(M, N)`.
    pub generators_vanish: bool,
    pub rank_m: usize,
    pub rank_n: usize,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.generators_vanish && self.rank_m == self.r && self.rank_n == self.n - self.r
    }
}

pub fn check_witness(n: usize, r: usize, seed: u64) -> Result<WitnessReport> {
    let (m, nn) = witness_rank_pair(n, r, seed)?;
    let mut assignment = m.assignment(Side::X);
    assignment.extend(nn.assignment(Side::Y));
    let mut generators_vanish = true;
    for g in generators_i1xy(n) {
        generators_vanish &= g.evaluate(&assignment)?.is_zero();
    }
    Ok(WitnessReport {
        n,
        r,
        seed,
        generators_vanish,
        rank_m: m.rank(),
        rank_n: nn.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_vanishing_small_sizes() {
        for (n, count) in [(1, 0), (2, 3), (3, 8)] {
            let r = verify_graph_vanishing(n, VerifyMode::Symbolic, 1, 0, DEFAULT_SYMBOLIC_CAP).unwrap();
            assert_eq!(r.generators, count);
        }
        assert!(verify_graph_vanishing(5, VerifyMode::Symbolic, 1, 0, DEFAULT_SYMBOLIC_CAP).is_err());
    }

    #[test]
    fn numeric_vanishing() {
        let r = verify_graph_vanishing(5, VerifyMode::Numeric, 20, 7, DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(r.trials, 20);
        assert!(verify_graph_vanishing(3, VerifyMode::Numeric, 0, 7, 4).is_err());
    }

    #[test]
    fn adjugate_numeric_identity() {
        assert!(verify_adjugate_numeric(4, 10, 3));
    }

    #[test]
    fn witness_boundaries() {
        let (m, n) = witness_rank_pair(3, 0, 5).unwrap();
        assert!(m.is_zero());
        assert_eq!(n.rank(), 3);
        let (m, n) = witness_rank_pair(3, 3, 5).unwrap();
        assert!(n.is_zero());
        assert_eq!(m.rank(), 3);
        assert!(witness_rank_pair(3, 4, 5).is_err());
    }

    #[test]
    fn witness_rank_one_in_size_three() {
        for seed in 0..5 {
            let (m, n) = witness_rank_pair(3, 1, seed).unwrap();
            assert!(m.minors_vanish(2));
            assert!(n.minors_vanish(3));
            assert!(check_witness(3, 1, seed).unwrap().passed());
        }
    }

    #[test]
    fn witnesses_are_reproducible() {
        assert_eq!(witness_rank_pair(4, 2, 11).unwrap(), witness_rank_pair(4, 2, 11).unwrap());
    }
}
