//! Sparse polynomial arithmetic over the entries of two generic symmetric
//! matrices X and Y, and exact checks of the equations of the inverse graph.

mod ideal;
mod matrix;
mod poly;
mod verify;

pub use ideal::{
    all_diagonal_differences, generators_i1xy, generators_j, generators_swap_symmetric,
    j_plus_b_spans_i1xy, same_span, span_rank, trace_entry,
};
pub use matrix::{adjugate_sym, det_sym, generic_sym_matrix, mat_mul, RationalSymMatrix, SymbolicMatrix};
pub use poly::{Monomial, Side, SparsePoly, VarId};
pub use verify::{
    check_witness, numeric_adjugate, random_invertible_sym, verify_adjugate_numeric,
    verify_graph_vanishing, witness_rank_pair, VanishingReport, VerifyMode, WitnessReport,
    DEFAULT_SYMBOLIC_CAP, ENTRY_BOUND,
};
