//! Exact computation of the multidegrees of the variety of pairs of inverse
//! symmetric matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: big-integer helpers, binomials, Pfaffians, exact linear algebra.
//! * [`psi`]: the Pfaffian-defined integers ψ_α attached to increasing
//!   subsequences of `{1, …, n}`.
//! * [`multidegree`]: algebraic degrees of semidefinite programming δ(d,n,r),
//!   the coefficients β(n,d), and the multidegrees of the inverse graph Γ and
//!   of the product-zero variety Σ.
//! * [`mldegree`]: maximum-likelihood degrees φ(n,d) of the general linear
//!   concentration model, with exact interpolation in `n`.
//! * [`symbolic`]: sparse integer polynomials over the entries of two generic
//!   symmetric matrices, used to check the defining equations of Γ.

pub mod error;
pub mod exact;
pub mod mldegree;
pub mod multidegree;
pub mod psi;
pub mod symbolic;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, SkewMatrix};
pub use mldegree::{FiniteDifferenceReport, MlPolynomial};
pub use multidegree::{IdentityReport, MultidegreeTable, WeightGrid};
pub use psi::{PsiTable, Subsequence, SubsetPsi};
pub use symbolic::{RationalSymMatrix, Side, SparsePoly, SymbolicMatrix, VarId};

/// Dimension `m = n(n+1)/2` of the space of symmetric `n × n` matrices.
pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}
