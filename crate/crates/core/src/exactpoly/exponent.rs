//! Exponent vectors and the graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The monomial order used throughout the crate. Only grevlex is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

/// Exponent vector of a monomial: entry `k` is the exponent of `x_k`.
///
/// The length is fixed by the ambient ring and never changes after
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVec(Vec<u32>);

impl ExponentVec {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVec(exponents)
    }

    pub fn zeros(nvars: usize) -> Self {
        ExponentVec(vec![0; nvars])
    }

    /// `x_index` as an exponent vector.
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        ExponentVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Does `self` divide `other` as a monomial?
    pub fn divides(&self, other: &ExponentVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum (monomial product).
    pub fn mul(&self, other: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference (monomial quotient); `None` if not divisible.
    pub fn checked_div(&self, other: &ExponentVec) -> Option<ExponentVec> {
        if other.divides(self) {
            Some(ExponentVec(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl fmt::Debug for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVec {
    fn from(v: Vec<u32>) -> Self {
        ExponentVec(v)
    }
}

impl std::ops::Index<usize> for ExponentVec {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

/// Grevlex comparison: total degree first; ties broken at the last variable
/// in which the vectors differ, the smaller exponent there winning.
pub fn grevlex_cmp(u: &ExponentVec, v: &ExponentVec) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(grevlex_cmp_unchecked(u, v))
}

fn grevlex_cmp_unchecked(u: &ExponentVec, v: &ExponentVec) -> Ordering {
    match u.total_degree().cmp(&v.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (a, b) in u.0.iter().zip(&v.0).rev() {
        match a.cmp(b) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable => greater
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// `Ord` is grevlex so that `BTreeMap` keys iterate in ascending grevlex
/// order (leading term last). Vectors of different lengths never share a
/// container; they compare by length first to keep the order total.
impl Ord for ExponentVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| grevlex_cmp_unchecked(self, other))
    }
}

impl PartialOrd for ExponentVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of the given total degree, grevlex-descending.
pub fn degree_monomials_desc(nvars: usize, degree: u32) -> Vec<ExponentVec> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out.sort();
    out.reverse();
    out
}

fn fill(out: &mut Vec<ExponentVec>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(ExponentVec::new(current.clone()));
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}
