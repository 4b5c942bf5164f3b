//! End-to-end validation of the construction for a concrete (a, t) pair.
//!
//! The report checks, in order: the enumerated point count against the
//! closed-form count; vanishing of every generator at every point;
//! membership of the generators in the annihilator; the Groebner initial
//! ideal against the recursive prediction; and stabilization of the Hilbert
//! function at the point count, which certifies that the generator ideal
//! really is the full vanishing ideal of the points.

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{hilbert_stable_value, recursive_initial_ideal, MonomialIdeal};
use crate::apolarpoints::{candidate_points, count_formula, ProjPoint};
use crate::error::{Error, Result};
use crate::exactpoly::ratio::ratio_string;
use crate::exactpoly::{buchberger_basis, MonomialOrder, DEFAULT_SPAIR_BUDGET};
use crate::generators::{apolar_membership, build_j, ExponentSeq};
use crate::initialideal::DEFAULT_RANK_CELLS;

use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct ValidationOptions {
    pub groebner_budget: usize,
    pub rank_cells: usize,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            groebner_budget: DEFAULT_SPAIR_BUDGET,
            rank_cells: DEFAULT_RANK_CELLS,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountStep {
    pub pass: bool,
    pub enumerated: u64,
    pub expected: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepOutcome {
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InitialIdealStep {
    pub pass: bool,
    pub computed: Vec<String>,
    pub predicted: Vec<String>,
    pub note: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertStep {
    pub pass: bool,
    pub stable_value: Option<u64>,
    pub expected: u64,
    pub note: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    /// The descending relabeling in which everything is computed.
    pub exponents: Vec<u32>,
    pub t: String,
    pub point_count: CountStep,
    pub vanishing: StepOutcome,
    pub apolar: StepOutcome,
    pub initial_ideal: InitialIdealStep,
    pub hilbert: HilbertStep,
    pub overall: bool,
    pub budget_exhausted: bool,
    pub elapsed_ms: u128,
}

impl ValidationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn validate_theorem_pipeline(
    a: &ExponentSeq,
    t: &BigRational,
    opts: &ValidationOptions,
) -> Result<ValidationReport> {
    if t.is_zero() {
        return Err(Error::DegenerateParameter("0".into()));
    }
    let start = Instant::now();
    let sorted = ExponentSeq::new(a.sorted_desc()).expect("valid sequence stays valid");
    let expected_count = count_formula(&sorted);
    let expected = u64::try_from(&expected_count).map_err(|_| {
        Error::InvalidExponents(format!(
            "point count {expected_count} too large to validate directly"
        ))
    })?;

    // (1) enumerate and deduplicate; at degenerate t the collapse shows up
    // here as a short list
    let raw = candidate_points(&sorted, t)?;
    let mut seen = BTreeSet::new();
    let mut points: Vec<ProjPoint> = Vec::new();
    for p in raw {
        if seen.insert(p.normalized()) {
            points.push(p);
        }
    }
    let point_count = CountStep {
        pass: points.len() as u64 == expected,
        enumerated: points.len() as u64,
        expected,
    };

    let gens = build_j(&sorted, t)?;
    let polys = gens.polynomials();

    // (2) every generator vanishes at every point
    let vanishing = StepOutcome {
        pass: polys
            .iter()
            .all(|g| points.iter().all(|p| g.eval(p.coords()).is_zero())),
    };

    // (3) annihilator membership
    let apolar = StepOutcome {
        pass: polys.iter().all(|g| apolar_membership(g, &sorted)),
    };

    // (4) Groebner initial ideal against the recursive prediction
    let predicted = recursive_initial_ideal(&sorted);
    let g_started = Instant::now();
    let mut budget_exhausted = false;
    let initial_ideal = match buchberger_basis(&polys, MonomialOrder::Grevlex, opts.groebner_budget)
    {
        Ok(basis) => {
            let computed = MonomialIdeal::new(
                sorted.nvars(),
                basis
                    .iter()
                    .map(|g| g.leading_monomial().expect("reduced basis").clone())
                    .collect(),
            );
            InitialIdealStep {
                pass: computed == predicted,
                computed: computed.generator_strings(),
                predicted: predicted.generator_strings(),
                note: None,
                elapsed_ms: g_started.elapsed().as_millis(),
            }
        }
        Err(err @ Error::BudgetExhausted { .. }) => {
            budget_exhausted = true;
            InitialIdealStep {
                pass: false,
                computed: Vec::new(),
                predicted: predicted.generator_strings(),
                note: Some(err.to_string()),
                elapsed_ms: g_started.elapsed().as_millis(),
            }
        }
        Err(err) => return Err(err),
    };

    // (5) Hilbert function stabilizes at the number of points
    let h_started = Instant::now();
    let hilbert = match hilbert_stable_value(&polys, opts.rank_cells) {
        Ok(table) => {
            let stable = table.stable_value.expect("scan returned with a value");
            HilbertStep {
                pass: stable == points.len() as u64,
                stable_value: Some(stable),
                expected: points.len() as u64,
                note: None,
                elapsed_ms: h_started.elapsed().as_millis(),
            }
        }
        Err(err @ (Error::BudgetExhausted { .. } | Error::NotStabilized { .. })) => {
            if matches!(err, Error::BudgetExhausted { .. }) {
                budget_exhausted = true;
            }
            HilbertStep {
                pass: false,
                stable_value: None,
                expected: points.len() as u64,
                note: Some(err.to_string()),
                elapsed_ms: h_started.elapsed().as_millis(),
            }
        }
        Err(err) => return Err(err),
    };

    let overall = point_count.pass
        && vanishing.pass
        && apolar.pass
        && initial_ideal.pass
        && hilbert.pass;
    Ok(ValidationReport {
        exponents: sorted.exponents().to_vec(),
        t: ratio_string(t),
        point_count,
        vanishing,
        apolar,
        initial_ideal,
        hilbert,
        overall,
        budget_exhausted,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
