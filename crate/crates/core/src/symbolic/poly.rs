use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigInt, BigRational};

/// Which generic matrix a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Entry `(row, col)` of a generic symmetric matrix, 1-based with `row <= col`.
///
/// The derived order puts the X block before the Y block, each row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    side: Side,
    row: u16,
    col: u16,
}

impl VarId {
    /// Normalizes `(i, j)` so that `row <= col`.
    pub fn new(side: Side, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1, "variable indices are 1-based");
        let (row, col) = if i <= j { (i, j) } else { (j, i) };
        Self {
            side,
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    pub fn swapped(&self) -> Self {
        Self {
            side: self.side.other(),
            ..*self
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::X => 'X',
            Side::Y => 'Y',
        };
        if self.row < 10 && self.col < 10 {
            write!(f, "{s}{}{}", self.row, self.col)
        } else {
            write!(f, "{s}[{},{}]", self.row, self.col)
        }
    }
}

/// Power product of variables, stored as `(var, exponent)` sorted by var.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// `(X-degree, Y-degree)`.
    pub fn bidegree(&self) -> (u32, u32) {
        self.0.iter().fold((0, 0), |(x, y), &(v, e)| match v.side() {
            Side::X => (x + e, y),
            Side::Y => (x, y + e),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }

    fn swapped(&self) -> Self {
        let mut v: Vec<_> = self.0.iter().map(|&(x, e)| (x.swapped(), e)).collect();
        v.sort_unstable();
        Self(v)
    }
}

// Graded lexicographic: total degree first, then the exponent vectors compared
// lexicographically in variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // the smaller variable is present only on one side
                    return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with big-integer coefficients in the entries of X and Y.
///
/// Terms live in a map keyed by [`Monomial`]; zero coefficients are never
/// stored, so equality of polynomials is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    pub fn var(v: VarId) -> Self {
        Self::from_terms([(Monomial::var(v), BigInt::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Common bidegree of all terms, `None` for zero or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Exchanges every `X_{i,j}` with `Y_{i,j}`.
    pub fn swap_sides(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.swapped(), c.clone())))
    }

    /// `±self` with a positive leading coefficient.
    pub fn sign_normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each assigned variable by a polynomial; other variables stay.
    pub fn substitute(&self, assignment: &HashMap<VarId, SparsePoly>) -> Self {
        let mut powers: HashMap<(VarId, u32), SparsePoly> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &(v, e) in m.factors() {
                let factor = match assignment.get(&v) {
                    Some(p) => powers.entry((v, e)).or_insert_with(|| p.pow(e)).clone(),
                    None => Self::from_terms([(Monomial(vec![(v, e)]), BigInt::one())]),
                };
                term = &term * &factor;
            }
            out = out + term;
        }
        out
    }

    /// Exact value under a complete rational assignment.
    pub fn evaluate(&self, assignment: &HashMap<VarId, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for &(v, e) in m.factors() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.factors().is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl Sub<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}
