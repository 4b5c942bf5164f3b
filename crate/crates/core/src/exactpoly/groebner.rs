//! A desk-scale Buchberger engine.
//!
//! Normal-strategy pair selection (smallest lcm first) with Buchberger's
//! coprimality and chain criteria. The output is the reduced Groebner basis:
//! monic, fully interreduced, sorted by leading monomial. A configurable
//! budget counts S-pair reductions and fails loudly instead of hanging.

use std::collections::BTreeSet;

use super::divide::remainder;
use super::exponent::{ExponentVec, MonomialOrder};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

pub const DEFAULT_SPAIR_BUDGET: usize = 200_000;

/// Compute the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger_basis(
    gens: &[MultiPoly],
    order: MonomialOrder,
    budget: usize,
) -> Result<Vec<MultiPoly>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nvars = gens[0].nvars();
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::NvarsMismatch(nvars, g.nvars()));
        }
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    if basis.is_empty() {
        // the zero ideal
        return Ok(Vec::new());
    }

    // pending pairs keyed by (lcm, i, j): BTreeSet pops the smallest lcm
    // first, which is the normal selection strategy
    let mut pairs: BTreeSet<(ExponentVec, usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert(pair_key(&basis, i, j));
        }
    }

    let mut spent = 0usize;
    while let Some(entry) = pairs.first().cloned() {
        pairs.remove(&entry);
        let (lcm, i, j) = entry;

        let lt_i = basis[i].leading_monomial().unwrap();
        let lt_j = basis[j].leading_monomial().unwrap();
        // coprimality criterion: S(f, g) reduces to zero when the leading
        // monomials are coprime
        if lt_i.mul(lt_j) == lcm {
            continue;
        }
        // chain criterion: skip if some k with LT(k) | lcm(i,j) has both
        // pairs (i,k) and (j,k) already handled
        if (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pairs.contains(&pair_key(&basis, i.min(k), i.max(k)))
                && !pairs.contains(&pair_key(&basis, j.min(k), j.max(k)))
        }) {
            continue;
        }

        spent += 1;
        if spent > budget {
            return Err(Error::BudgetExhausted { spent, cap: budget });
        }

        let s = s_polynomial(&basis[i], &basis[j], &lcm);
        let r = remainder(&s, &basis, order)?;
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.monic());
            for k in 0..new {
                pairs.insert(pair_key(&basis, k, new));
            }
        }
    }

    Ok(reduce_basis(basis, order))
}

fn pair_key(basis: &[MultiPoly], i: usize, j: usize) -> (ExponentVec, usize, usize) {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    (lcm, i, j)
}

/// S(f, g) for monic f, g with the given lcm of leading monomials.
fn s_polynomial(f: &MultiPoly, g: &MultiPoly, lcm: &ExponentVec) -> MultiPoly {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let a = f.mul_term(&lcm.checked_div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&lcm.checked_div(gm).unwrap(), &gc.recip());
    a.sub(&b).expect("same ring")
}

/// Minimize (drop elements whose leading monomial is divisible by another's)
/// and fully reduce each survivor against the rest.
fn reduce_basis(mut basis: Vec<MultiPoly>, order: MonomialOrder) -> Vec<MultiPoly> {
    basis.sort_by(|a, b| a.leading_monomial().unwrap().cmp(b.leading_monomial().unwrap()));
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j]
                    .leading_monomial()
                    .unwrap()
                    .divides(basis[i].leading_monomial().unwrap())
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            remainder(&minimal[i], &others, order).expect("nonzero divisors")
        };
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().unwrap().cmp(b.leading_monomial().unwrap()));
    reduced
}
