use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pfaffian requires even dimension (got {0})")]
    OddDimension(usize),

    #[error("matrix is not antisymmetric at ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("psi_single requires i >= 1")]
    PsiIndex,

    #[error("psi_pair requires i < j (got i = {i}, j = {j})")]
    PsiPairOrder { i: usize, j: usize },

    #[error("invalid subsequence {entries:?} of 1..={n}: {reason}")]
    InvalidSubsequence {
        entries: Vec<usize>,
        n: usize,
        reason: &'static str,
    },

    #[error("subsequence entry {entry} exceeds table bound {n}")]
    EntryOutOfRange { entry: usize, n: usize },

    #[error("multidegree positivity violated: deg index {d} for n = {n} is {value}")]
    PositivityViolated { n: usize, d: usize, value: String },

    #[error("dimension d out of range for n (d = {d}, n = {n}, m = {m})")]
    DimensionOutOfRange { n: usize, d: i64, m: usize },

    #[error("polynomiality violated for d = {d} at n = {n}: expected {expected}, interpolant gives {got}")]
    PolynomialityViolated {
        d: usize,
        n: usize,
        expected: String,
        got: String,
    },

    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("no value assigned to variable {0}")]
    MissingVariable(String),

    #[error("generator {generator} does not vanish: residual {residual}")]
    NonzeroResidual { generator: String, residual: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
