//! Hilbert functions of homogeneous ideals by exact rank computation.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exactpoly::{degree_monomials_desc, MultiPoly};
use crate::linalg;

/// Cap on matrix cells per rank computation.
pub const DEFAULT_RANK_CELLS: usize = 4_000_000;

/// Hilbert function values per degree, with the stabilized value once a full
/// window of consecutive degrees agrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub values: BTreeMap<u32, u64>,
    pub stable_value: Option<u64>,
}

/// Dimension of the degree-`d` slice of the quotient by the given
/// homogeneous ideal: the number of degree-`d` monomials minus the rank of
/// the degree-`d` multiples of the generators. Monomial generators are
/// counted directly without linear algebra.
pub fn hilbert_function_at(gens: &[MultiPoly], d: u32, max_cells: usize) -> Result<u64> {
    let live: Vec<&MultiPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let nvars = match live.first() {
        None => {
            return gens
                .first()
                .map(|g| count_monomials(g.nvars(), d))
                .ok_or(Error::EmptyGenerators)
        }
        Some(g) => g.nvars(),
    };
    let mut degrees = Vec::with_capacity(live.len());
    for g in &live {
        match g.homogeneous_degree() {
            Some(dg) => degrees.push(dg),
            None => return Err(Error::NotHomogeneous),
        }
    }

    if live.iter().all(|g| g.num_terms() == 1) {
        let ideal = MonomialIdeal::new(
            nvars,
            live.iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect(),
        );
        return Ok(super::standard_monomial_count(&ideal, d));
    }

    let basis = degree_monomials_desc(nvars, d);
    let index: BTreeMap<_, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let ncols = basis.len();
    let nrows: usize = degrees
        .iter()
        .filter(|&&dg| dg <= d)
        .map(|&dg| count_monomials(nvars, d - dg) as usize)
        .sum();
    let cells = nrows.saturating_mul(ncols);
    if cells > max_cells {
        return Err(Error::BudgetExhausted {
            spent: cells,
            cap: max_cells,
        });
    }

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(nrows);
    for (g, &dg) in live.iter().zip(&degrees) {
        if dg > d {
            continue;
        }
        for shift in degree_monomials_desc(nvars, d - dg) {
            let mut row = vec![BigRational::from_integer(0.into()); ncols];
            for (m, c) in g.terms() {
                row[index[&m.mul(&shift)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = linalg::rank(&rows);
    Ok(ncols as u64 - rank as u64)
}

fn count_monomials(nvars: usize, d: u32) -> u64 {
    // binom(nvars - 1 + d, nvars - 1)
    let mut acc = 1u64;
    for k in 1..nvars {
        acc = acc * (d as u64 + k as u64) / k as u64;
    }
    acc
}

/// Scan the Hilbert function from the top generator degree until
/// `nvars + 1` consecutive degrees agree; that value is the degree of the
/// ideal when the quotient has a constant Hilbert polynomial.
pub fn hilbert_stable_value(gens: &[MultiPoly], max_cells: usize) -> Result<HilbertTable> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nvars = gens[0].nvars();
    let window = nvars + 1;
    let from = gens
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .ok_or(Error::ZeroPolynomial)?;
    let to = from + 8 + 4 * window as u32;

    let mut table = HilbertTable {
        values: BTreeMap::new(),
        stable_value: None,
    };
    let mut run = 0usize;
    let mut last: Option<u64> = None;
    for d in from..=to {
        let v = hilbert_function_at(gens, d, max_cells)?;
        table.values.insert(d, v);
        if last == Some(v) {
            run += 1;
        } else {
            run = 1;
        }
        last = Some(v);
        if run >= window {
            table.stable_value = Some(v);
            return Ok(table);
        }
    }
    Err(Error::NotStabilized { from, to })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::exactpoly::ratio::int;
    use crate::generators::{build_j, ExponentSeq};

    #[test]
    fn irrelevant_ideal_slice_vanishes() {
        let gens = vec![parse_poly("x0", 2).unwrap(), parse_poly("x1", 2).unwrap()];
        assert_eq!(hilbert_function_at(&gens, 3, DEFAULT_RANK_CELLS).unwrap(), 0);
    }

    #[test]
    fn monomial_fallback() {
        let gens = vec![parse_poly("x0^4*x1", 2).unwrap()];
        assert_eq!(hilbert_function_at(&gens, 10, DEFAULT_RANK_CELLS).unwrap(), 5);
        // direct count agrees with the rank route when forced through it
        let gens = vec![parse_poly("x0^4*x1+0", 2).unwrap()];
        assert_eq!(hilbert_function_at(&gens, 4, DEFAULT_RANK_CELLS).unwrap(), 5);
    }

    #[test]
    fn generator_ideal_of_three_threes_reaches_28() {
        let a = ExponentSeq::new(vec![3, 3, 3]).unwrap();
        let j = build_j(&a, &int(2)).unwrap();
        let gens = j.polynomials();
        assert_eq!(hilbert_function_at(&gens, 12, DEFAULT_RANK_CELLS).unwrap(), 28);
        let table = hilbert_stable_value(&gens, DEFAULT_RANK_CELLS).unwrap();
        assert_eq!(table.stable_value, Some(28));
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let gens = vec![parse_poly("x0^2+x1", 2).unwrap()];
        assert!(matches!(
            hilbert_function_at(&gens, 3, DEFAULT_RANK_CELLS),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let a = ExponentSeq::new(vec![3, 3, 3]).unwrap();
        let gens = build_j(&a, &int(2)).unwrap().polynomials();
        assert!(matches!(
            hilbert_function_at(&gens, 12, 100),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn monomial_count_helper() {
        assert_eq!(count_monomials(3, 12), 91);
        assert_eq!(count_monomials(4, 16), 969);
        assert_eq!(count_monomials(1, 7), 1);
    }
}
