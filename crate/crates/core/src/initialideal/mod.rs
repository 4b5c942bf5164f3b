//! Monomial-ideal side of the construction: the lattice-simplex indexed
//! generators, staircase degree counts, and the recursive description of the
//! initial ideal of the generator set, used to cross-check the Groebner
//! computation and the point counts.

mod hilbert;
mod validate;

pub use hilbert::{hilbert_function_at, hilbert_stable_value, HilbertTable, DEFAULT_RANK_CELLS};
pub use validate::{
    validate_theorem_pipeline, CountStep, HilbertStep, InitialIdealStep, StepOutcome,
    ValidationOptions, ValidationReport,
};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactpoly::ExponentVec;
use crate::generators::ExponentSeq;

/// Lattice points of the dilated standard simplex: all nonnegative integer
/// vectors of length `dim` summing to `lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSimplex {
    pub lambda: u32,
    pub dim: usize,
    pub points: Vec<Vec<u32>>,
}

impl LatticeSimplex {
    pub fn new(lambda: u32, dim: usize) -> Self {
        let mut points = Vec::new();
        compositions(lambda, dim, &mut points);
        LatticeSimplex {
            lambda,
            dim,
            points,
        }
    }

    /// For a descending sequence with odd last entry: lambda = (a_n + 1) / 2,
    /// dimension n.
    pub fn for_sequence(a: &ExponentSeq) -> Result<Self> {
        let sorted = a.sorted_desc();
        let last = *sorted.last().unwrap();
        if last % 2 == 0 {
            return Err(Error::InvalidExponents(format!(
                "last (smallest) exponent must be odd, got {last}"
            )));
        }
        Ok(Self::new((last + 1) / 2, sorted.len() - 1))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn compositions(total: u32, parts: usize, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if parts == 1 {
        out.push(vec![total]);
        return;
    }
    for last in 0..=total {
        let mut inner = Vec::new();
        compositions(total - last, parts - 1, &mut inner);
        for mut v in inner {
            v.push(last);
            out.push(v);
        }
    }
}

/// A monomial ideal held by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<ExponentVec>,
    nvars: usize,
}

impl MonomialIdeal {
    /// Minimize under divisibility and sort.
    pub fn new(nvars: usize, gens: Vec<ExponentVec>) -> Self {
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        let mut keep = vec![true; sorted.len()];
        for i in 0..sorted.len() {
            for j in 0..sorted.len() {
                if i != j && keep[j] && sorted[j].divides(&sorted[i]) && sorted[j] != sorted[i] {
                    keep[i] = false;
                    break;
                }
            }
        }
        let gens = sorted
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        MonomialIdeal { gens, nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVec] {
        &self.gens
    }

    pub fn contains(&self, m: &ExponentVec) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The ideal plus one extra monomial generator.
    pub fn with_extra(&self, m: ExponentVec) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Generators as monomial strings like `x0^6*x1^2`.
    pub fn generator_strings(&self) -> Vec<String> {
        use num_rational::BigRational;
        self.gens
            .iter()
            .map(|g| {
                crate::exactpoly::MultiPoly::from_terms(
                    self.nvars,
                    [(g.clone(), BigRational::from_integer(1.into()))],
                )
                .to_string()
            })
            .collect()
    }
}

fn require_descending_odd(a: &ExponentSeq) -> Result<Vec<u32>> {
    if !a.is_descending() {
        return Err(Error::InvalidExponents(format!(
            "expected a descending sequence, got {:?}",
            a.exponents()
        )));
    }
    let sorted = a.exponents().to_vec();
    if sorted.last().unwrap() % 2 == 0 {
        return Err(Error::InvalidExponents(format!(
            "last exponent must be odd, got {}",
            sorted.last().unwrap()
        )));
    }
    Ok(sorted)
}

/// The exponent map from simplex lattice points to monomial generators:
/// `beta_k = 0` when `i_k = 0`, else
/// `a_k - 1 - 2(i_0 + ... + i_(k-1)) + 2 i_k`. The output has one slot per
/// variable except the last.
pub fn beta_map(a: &ExponentSeq, point: &[u32]) -> Result<ExponentVec> {
    let sorted = require_descending_odd(a)?;
    let n = sorted.len() - 1;
    let lambda = (sorted[n] + 1) / 2;
    if point.len() != n || point.iter().sum::<u32>() != lambda {
        return Err(Error::InvalidExponents(format!(
            "{point:?} is not on the simplex of size {lambda} in dimension {n}"
        )));
    }
    Ok(beta_unchecked(&sorted, point))
}

fn beta_unchecked(sorted: &[u32], point: &[u32]) -> ExponentVec {
    let mut prefix: i64 = 0;
    let mut out = Vec::with_capacity(point.len());
    for (k, &ik) in point.iter().enumerate() {
        if ik == 0 {
            out.push(0u32);
        } else {
            let b = sorted[k] as i64 - 1 - 2 * prefix + 2 * ik as i64;
            debug_assert!(b > 0);
            out.push(b as u32);
        }
        prefix += ik as i64;
    }
    ExponentVec::new(out)
}

/// The candidate initial ideal for a descending sequence with odd last
/// entry: generators are the beta images of the simplex lattice points,
/// minimized. Lives in the full ring (the last variable never appears).
pub fn build_m(a: &ExponentSeq) -> Result<MonomialIdeal> {
    let sorted = require_descending_odd(a)?;
    Ok(build_m_slice(&sorted))
}

fn build_m_slice(sorted: &[u32]) -> MonomialIdeal {
    let nvars = sorted.len();
    let n = nvars - 1;
    let lambda = (sorted[n] + 1) / 2;
    let simplex = LatticeSimplex::new(lambda, n);
    let gens = simplex
        .points
        .iter()
        .map(|p| {
            let beta = beta_unchecked(sorted, p);
            let mut e = beta.exponents().to_vec();
            e.push(0);
            ExponentVec::new(e)
        })
        .collect();
    MonomialIdeal::new(nvars, gens)
}

/// Degree of a monomial ideal whose quotient has a constant Hilbert
/// polynomial: the stabilized count of standard monomials per degree.
///
/// When no generator involves the last variable and every other variable has
/// a pure-power generator, the finite complement in the first variables is
/// counted directly; otherwise the Hilbert function is scanned until
/// `nvars + 1` consecutive degrees agree.
pub fn staircase_degree(m: &MonomialIdeal) -> Result<u64> {
    if m.gens.is_empty() {
        return Err(Error::NotStabilized { from: 0, to: 0 });
    }
    let nvars = m.nvars;
    let last_var_free = m.gens.iter().all(|g| g[nvars - 1] == 0);
    if last_var_free {
        if let Some(bounds) = pure_power_bounds(m) {
            return Ok(count_box_complement(m, &bounds));
        }
    }

    let window = nvars + 1;
    let from = m
        .gens
        .iter()
        .map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    let max_exp_sum: u32 = (0..nvars)
        .map(|v| m.gens.iter().map(|g| g[v]).max().unwrap_or(0))
        .sum();
    let to = from + max_exp_sum + window as u32 + 2;

    let mut run: Vec<u64> = Vec::new();
    for d in from..=to {
        let value = standard_monomial_count(m, d);
        if run.last() == Some(&value) {
            run.push(value);
        } else {
            run = vec![value];
        }
        if run.len() >= window {
            return Ok(value);
        }
    }
    Err(Error::NotStabilized { from, to })
}

/// Pure-power exponent of each variable except the last, if all exist.
fn pure_power_bounds(m: &MonomialIdeal) -> Option<Vec<u32>> {
    (0..m.nvars - 1)
        .map(|v| {
            m.gens
                .iter()
                .filter(|g| {
                    g.exponents()
                        .iter()
                        .enumerate()
                        .all(|(w, &e)| w == v || e == 0)
                })
                .map(|g| g[v])
                .min()
        })
        .collect()
}

fn count_box_complement(m: &MonomialIdeal, bounds: &[u32]) -> u64 {
    let mut count = 0u64;
    let mut exps = vec![0u32; m.nvars];
    count_box_rec(m, bounds, 0, &mut exps, &mut count);
    count
}

fn count_box_rec(m: &MonomialIdeal, bounds: &[u32], var: usize, exps: &mut Vec<u32>, count: &mut u64) {
    if var == bounds.len() {
        if !m.contains(&ExponentVec::new(exps.clone())) {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        count_box_rec(m, bounds, var + 1, exps, count);
    }
    exps[var] = 0;
}

/// Number of degree-`d` monomials outside the ideal.
pub fn standard_monomial_count(m: &MonomialIdeal, d: u32) -> u64 {
    let mut count = 0u64;
    let mut exps = vec![0u32; m.nvars];
    standard_rec(m, d, 0, &mut exps, &mut count);
    count
}

fn standard_rec(m: &MonomialIdeal, remaining: u32, var: usize, exps: &mut Vec<u32>, count: &mut u64) {
    if var + 1 == m.nvars {
        exps[var] = remaining;
        if !m.contains(&ExponentVec::new(exps.clone())) {
            *count += 1;
        }
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        standard_rec(m, remaining - e, var + 1, exps, count);
    }
    exps[var] = 0;
}

/// The initial ideal of the generator set, built recursively: odd last entry
/// gives the simplex-indexed ideal directly; an even last entry combines the
/// ideal of the shortened sequence with the last variable times the ideal of
/// the decremented sequence. The input is re-sorted descending first.
pub fn recursive_initial_ideal(a: &ExponentSeq) -> MonomialIdeal {
    let sorted = a.sorted_desc();
    recursive_slice(&sorted)
}

fn recursive_slice(sorted: &[u32]) -> MonomialIdeal {
    let nvars = sorted.len();
    if nvars == 1 {
        return MonomialIdeal::new(1, Vec::new());
    }
    let last = sorted[nvars - 1];
    if last % 2 == 1 {
        return build_m_slice(sorted);
    }
    // shortened sequence, embedded in the full ring
    let shorter = recursive_slice(&sorted[..nvars - 1]);
    let mut gens: Vec<ExponentVec> = shorter
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.push(0);
            ExponentVec::new(e)
        })
        .collect();
    // last variable times the ideal of the decremented sequence
    let mut dec = sorted.to_vec();
    dec[nvars - 1] -= 1;
    let xlast = ExponentVec::unit(nvars, nvars - 1);
    gens.extend(
        build_m_slice(&dec)
            .generators()
            .iter()
            .map(|g| g.mul(&xlast)),
    );
    MonomialIdeal::new(nvars, gens)
}

/// Convenience: `staircase_degree` compared against the point-count formula.
pub fn degree_matches_count(a: &ExponentSeq) -> Result<bool> {
    let ideal = recursive_initial_ideal(a);
    let deg = staircase_degree(&ideal)?;
    Ok(BigUint::from(deg) == crate::apolarpoints::count_formula(a))
}
