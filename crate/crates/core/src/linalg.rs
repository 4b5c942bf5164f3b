//! Exact elimination over the rationals.
//!
//! Rows are cleared to integers, then reduced by one-step fraction-free
//! (Bareiss) elimination: every update is
//! `(pivot * entry - row_lead * pivot_entry) / previous_pivot`
//! with the division exact, which keeps entries the size of minors of the
//! input instead of growing exponentially. Columns are processed left to
//! right; the pivot row may be chosen freely among rows with a nonzero lead,
//! which does not affect which columns end up as pivots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// (row index, column index) per pivot, in increasing column order.
    pub pivots: Vec<(usize, usize)>,
    /// Rows never chosen as pivots; zero in every lead column.
    pub spare_rows: Vec<usize>,
}

/// Clear one rational row to integers: multiply by the lcm of denominators,
/// then strip the gcd of the entries.
pub(crate) fn integerize_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &out {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut out {
            *x /= &g;
        }
    }
    out
}

/// Fraction-free forward elimination on integer rows. Pivots are sought in
/// columns `0..lead_cols`; any trailing columns (e.g. an augmented right-hand
/// side) are carried along in the updates.
pub(crate) fn eliminate(mut rows: Vec<Vec<BigInt>>, lead_cols: usize) -> Echelon {
    let nrows = rows.len();
    let width = rows.first().map_or(0, |r| r.len());
    debug_assert!(rows.iter().all(|r| r.len() == width));
    debug_assert!(lead_cols <= width);

    let mut active: Vec<usize> = (0..nrows).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();

    for col in 0..lead_cols {
        // sparsest candidate row, ties by position
        let candidate = active
            .iter()
            .enumerate()
            .filter(|(_, &r)| !rows[r][col].is_zero())
            .min_by_key(|(_, &r)| {
                (
                    rows[r][col..].iter().filter(|x| !x.is_zero()).count(),
                    r,
                )
            })
            .map(|(pos, _)| pos);
        let Some(pos) = candidate else {
            continue; // free column
        };
        let prow = active.swap_remove(pos);
        pivots.push((prow, col));
        let pivot_val = rows[prow][col].clone();
        let pivot_tail: Vec<BigInt> = rows[prow][col..].to_vec();

        for &r in &active {
            let lead = std::mem::replace(&mut rows[r][col], BigInt::zero());
            let row = &mut rows[r];
            if lead.is_zero() {
                if pivot_val != prev {
                    for c in (col + 1)..width {
                        if !row[c].is_zero() {
                            let num = &pivot_val * &row[c];
                            debug_assert!((&num % &prev).is_zero());
                            row[c] = num / &prev;
                        }
                    }
                }
            } else {
                for c in (col + 1)..width {
                    let num = &pivot_val * &row[c] - &lead * &pivot_tail[c - col];
                    debug_assert!((&num % &prev).is_zero());
                    row[c] = num / &prev;
                }
            }
        }
        prev = pivot_val;
    }

    active.sort_unstable();
    Echelon {
        rows,
        pivots,
        spare_rows: active,
    }
}

pub(crate) enum SolveOutcome {
    /// Particular solution with all non-pivot variables set to zero, plus the
    /// rank of the coefficient matrix.
    Solution {
        values: Vec<BigRational>,
        rank: usize,
    },
    Inconsistent,
}

/// Solve `A x = b` given augmented rational rows `[A | b]`.
pub(crate) fn solve_augmented(rows: &[Vec<BigRational>]) -> SolveOutcome {
    let width = rows.first().map_or(0, |r| r.len());
    assert!(width >= 1);
    let ncols = width - 1;
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| integerize_row(r)).collect();
    let ech = eliminate(int_rows, ncols);

    for &r in &ech.spare_rows {
        if !ech.rows[r][ncols].is_zero() {
            return SolveOutcome::Inconsistent;
        }
    }

    let mut values = vec![BigRational::zero(); ncols];
    for &(prow, pcol) in ech.pivots.iter().rev() {
        let row = &ech.rows[prow];
        let mut acc = BigRational::from_integer(row[ncols].clone());
        for &(_, c) in &ech.pivots {
            if c > pcol && !row[c].is_zero() && !values[c].is_zero() {
                acc -= BigRational::from_integer(row[c].clone()) * &values[c];
            }
        }
        values[pcol] = acc / BigRational::from_integer(row[pcol].clone());
    }
    SolveOutcome::Solution {
        values,
        rank: ech.pivots.len(),
    }
}

/// Rank of a rational matrix.
pub(crate) fn rank(rows: &[Vec<BigRational>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| integerize_row(r)).collect();
    eliminate(int_rows, width).pivots.len()
}
