use std::collections::{BTreeMap, BTreeSet};

use crate::exact::{self, BigRational};

use super::matrix::{generic_sym_matrix, mat_mul, SymbolicMatrix};
use super::poly::{Monomial, Side, SparsePoly};

fn product_xy(n: usize) -> SymbolicMatrix {
    mat_mul(&generic_sym_matrix(n, Side::X), &generic_sym_matrix(n, Side::Y))
        .expect("equal sizes")
}

/// Generators of the ideal of the inverse graph: the off-diagonal entries of
/// `XY` (all ordered pairs `i ≠ j`), followed by the consecutive diagonal
/// differences `(XY)_{i,i} − (XY)_{i+1,i+1}`.
pub fn generators_j(n: usize) -> Vec<SparsePoly> {
    let xy = product_xy(n);
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(xy.get(i, j).clone());
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(xy.get(i, i) - xy.get(i + 1, i + 1));
    }
    out
}

/// All `n²` entries of `XY`, row-major.
pub fn generators_i1xy(n: usize) -> Vec<SparsePoly> {
    let xy = product_xy(n);
    (0..n * n).map(|k| xy.get(k / n, k % n).clone()).collect()
}

/// `b = (XY)_{1,1}`.
pub fn trace_entry(n: usize) -> SparsePoly {
    product_xy(n).get(0, 0).clone()
}

/// Every difference `(XY)_{i,i} − (XY)_{j,j}` with `i < j`.
pub fn all_diagonal_differences(n: usize) -> Vec<SparsePoly> {
    let xy = product_xy(n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(xy.get(i, i) - xy.get(j, j));
        }
    }
    out
}

/// Dimension of the linear span of `polys` over ℚ.
pub fn span_rank(polys: &[SparsePoly]) -> usize {
    let monomials: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    let index: BTreeMap<&Monomial, usize> = monomials.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<BigRational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigRational::default(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = BigRational::from_integer(c.clone());
            }
            row
        })
        .collect();
    exact::rank(&rows)
}

/// True when `a` and `b` span the same ℚ-vector space.
pub fn same_span(a: &[SparsePoly], b: &[SparsePoly]) -> bool {
    let union: Vec<SparsePoly> = a.iter().chain(b).cloned().collect();
    let ra = span_rank(a);
    ra == span_rank(b) && ra == span_rank(&union)
}

/// All generators live in bidegree (1,1), so ideal equality of
/// `J + (b)` and `I₁(XY)` reduces to equality of these spans.
pub fn j_plus_b_spans_i1xy(n: usize) -> bool {
    let mut lhs = generators_j(n);
    lhs.push(trace_entry(n));
    same_span(&lhs, &generators_i1xy(n))
}

/// The exchange `X ↔ Y` permutes the generator set, up to sign.
pub fn generators_swap_symmetric(n: usize) -> bool {
    let gens = generators_j(n);
    let original: BTreeSet<SparsePoly> = gens.iter().map(SparsePoly::sign_normalized).collect();
    let swapped: BTreeSet<SparsePoly> = gens
        .iter()
        .map(|g| g.swap_sides().sign_normalized())
        .collect();
    original == swapped
}
