//! Maximum-likelihood degrees φ(n,d) = deg^{m−d,d−1}(Γ) of the general
//! linear concentration model, and their polynomial dependence on `n`.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{forward_differences, BigInt, BigRational};
use crate::multidegree::MultidegreeTable;
use crate::sym_dim;

/// Number of extra points an interpolant must reproduce.
pub const VALIDATION_POINTS: usize = 3;

/// φ(n,d) for `1 <= d <= m`.
pub fn ml_degree(n: usize, d: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size n must be at least 1".into()));
    }
    let table = MultidegreeTable::compute(n)?;
    ml_degree_from(&table, d)
}

/// φ(n,d) read from an already computed table.
pub fn ml_degree_from(table: &MultidegreeTable, d: i64) -> Result<BigInt> {
    if d < 1 || d as usize > table.m {
        return Err(Error::DimensionOutOfRange {
            n: table.n,
            d,
            m: table.m,
        });
    }
    Ok(table.gamma_degs[d as usize - 1].clone())
}

/// Rows φ(n,1), …, φ(n,m(n)) for `n = 1, …, n_max`.
pub fn ml_table(n_max: usize) -> Result<Vec<Vec<BigInt>>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| MultidegreeTable::compute(n).map(|t| t.gamma_degs))
        .collect()
}

/// Smallest `n` with `n(n+1)/2 >= d`.
pub fn anchor(d: usize) -> usize {
    (1..).find(|&n| sym_dim(n) >= d).expect("unbounded search")
}

fn phi_samples(d: usize, ns: RangeInclusive<usize>) -> Result<Vec<BigInt>> {
    let ns: Vec<usize> = ns.collect();
    ns.par_iter()
        .map(|&n| {
            let table = MultidegreeTable::compute(n)?;
            ml_degree_from(&table, d as i64)
        })
        .collect()
}

/// Monomial coefficients (lowest degree first) of the Lagrange interpolant
/// through `points`, whose abscissae must be distinct.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis = Π_{j≠i} (x − x_j) / (x_i − x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (c, b) in coeffs.iter_mut().zip(basis) {
            *c += b * &scale;
        }
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// φ(·,d) as an exact polynomial in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlPolynomial {
    pub d: usize,
    /// Monomial coefficients in `n`, lowest degree first; empty for zero.
    pub coeffs: Vec<BigRational>,
    /// The `n` values used for the fit.
    pub sample_range: RangeInclusive<usize>,
    /// Extra `(n, φ(n,d))` points the polynomial was checked against.
    pub validated: Vec<(usize, BigInt)>,
}

impl MlPolynomial {
    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }
}

impl fmt::Display for MlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fits φ(·,d) through `d` consecutive in-range samples starting at
/// [`anchor`]`(d)` and checks it against [`VALIDATION_POINTS`] further ones.
pub fn ml_polynomial(d: usize) -> Result<MlPolynomial> {
    if d == 0 {
        return Err(Error::DimensionOutOfRange { n: 0, d: 0, m: 0 });
    }
    let start = anchor(d);
    let fit_end = start + d - 1;
    let values = phi_samples(d, start..=fit_end + VALIDATION_POINTS)?;
    let q = |v: &BigInt| BigRational::from_integer(v.clone());

    let points: Vec<(BigRational, BigRational)> = (start..=fit_end)
        .zip(&values)
        .map(|(n, v)| (q(&BigInt::from(n)), q(v)))
        .collect();
    let poly = MlPolynomial {
        d,
        coeffs: interpolate(&points),
        sample_range: start..=fit_end,
        validated: Vec::new(),
    };

    let mut validated = Vec::with_capacity(VALIDATION_POINTS);
    for (n, v) in (fit_end + 1..).zip(&values[d..]) {
        let got = poly.eval(n as i64);
        if got != q(v) {
            return Err(Error::PolynomialityViolated {
                d,
                n,
                expected: v.to_string(),
                got: got.to_string(),
            });
        }
        validated.push((n, v.clone()));
    }
    Ok(MlPolynomial { validated, ..poly })
}

/// Outcome of the finite-difference test of polynomiality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDifferenceReport {
    pub d: usize,
    /// First `n` of the window.
    pub start: usize,
    /// φ(n,d) over the window.
    pub values: Vec<BigInt>,
    /// d-th forward differences of `values`.
    pub differences: Vec<BigInt>,
}

impl FiniteDifferenceReport {
    pub fn all_vanish(&self) -> bool {
        self.differences.iter().all(Zero::is_zero)
    }
}

/// d-th forward differences of `n ↦ φ(n,d)` over `window` consecutive valid `n`.
pub fn finite_difference_check(d: usize, window: usize) -> Result<FiniteDifferenceReport> {
    if d == 0 {
        return Err(Error::DimensionOutOfRange { n: 0, d: 0, m: 0 });
    }
    if window < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "window {window} too small for order-{d} differences"
        )));
    }
    let start = anchor(d);
    let values = phi_samples(d, start..=start + window - 1)?;
    let differences = forward_differences(&values, d);
    Ok(FiniteDifferenceReport {
        d,
        start,
        values,
        differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(int(v))
    }

    #[test]
    fn ml_degree_examples() {
        assert_eq!(ml_degree(3, 1).unwrap(), int(1));
        assert_eq!(ml_degree(3, 3).unwrap(), int(4));
        assert_eq!(ml_degree(3, 6).unwrap(), int(1));
        assert_eq!(ml_degree(2, 2).unwrap(), int(1));
        for d in [0, 7, -2] {
            let err = ml_degree(3, d).unwrap_err();
            assert!(err.to_string().contains("dimension d out of range for n"));
        }
    }

    #[test]
    fn table_rows() {
        let t = ml_table(3).unwrap();
        assert_eq!(t[0], vec![int(1)]);
        assert_eq!(t[1], vec![int(1); 3]);
        assert_eq!(t[2], [1, 2, 4, 4, 2, 1].map(int).to_vec());
        for row in ml_table(7).unwrap() {
            let mut rev = row.clone();
            rev.reverse();
            assert_eq!(row, rev);
            assert_eq!(row[0], int(1));
        }
    }

    #[test]
    fn anchors() {
        assert_eq!(anchor(1), 1);
        assert_eq!(anchor(2), 2);
        assert_eq!(anchor(3), 2);
        assert_eq!(anchor(4), 3);
        assert_eq!(anchor(7), 4);
    }

    #[test]
    fn interpolation_recovers_known_polynomial() {
        // 2n² − 3n + 1/2 sampled at 0..3
        let f = |n: i64| rat(2 * n * n - 3 * n) + BigRational::new(int(1), int(2));
        let pts: Vec<_> = (0..3).map(|n| (rat(n), f(n))).collect();
        assert_eq!(
            interpolate(&pts),
            vec![BigRational::new(int(1), int(2)), rat(-3), rat(2)]
        );
    }

    #[test]
    fn low_dimension_polynomials() {
        let p = ml_polynomial(1).unwrap();
        assert_eq!(p.coeffs, vec![rat(1)]);
        assert_eq!(p.to_string(), "1");

        let p = ml_polynomial(2).unwrap();
        assert_eq!(p.sample_range, 2..=3);
        assert_eq!(p.coeffs, vec![rat(-1), rat(1)]);
        assert_eq!(p.to_string(), "n - 1");
        assert_eq!(p.validated, vec![(4, int(3)), (5, int(4)), (6, int(5))]);

        let p = ml_polynomial(3).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(3), rat(4));
        assert!(ml_polynomial(0).is_err());
    }

    #[test]
    fn difference_checks() {
        assert!(finite_difference_check(1, 5).unwrap().all_vanish());
        assert!(finite_difference_check(2, 6).unwrap().all_vanish());
        let r = finite_difference_check(4, 8).unwrap();
        assert_eq!(r.differences.len(), 4);
        assert!(r.all_vanish());
        assert!(finite_difference_check(3, 3).is_err());
    }

    #[test]
    fn consecutive_ml_degrees_sum_to_beta() {
        for n in 1..=8 {
            let t = MultidegreeTable::compute(n).unwrap();
            for d in 1..t.m as i64 {
                let lhs = ml_degree_from(&t, d).unwrap() + ml_degree_from(&t, d + 1).unwrap();
                assert_eq!(lhs, t.beta_at(d));
            }
        }
    }

    #[test]
    fn polynomial_display_forms() {
        let p = MlPolynomial {
            d: 3,
            coeffs: vec![rat(0), BigRational::new(int(-1), int(2)), rat(1)],
            sample_range: 0..=0,
            validated: Vec::new(),
        };
        assert_eq!(p.to_string(), "n^2 - 1/2*n");
    }
}
