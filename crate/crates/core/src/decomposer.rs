//! Assembling and solving the power-sum interpolation system, verifying the
//! result by exact expansion, and the retry loop over the parameter t.
//!
//! The system has one row per degree-d exponent vector (grevlex descending)
//! and one column per enumerated point; the entry is the multinomial
//! coefficient times the point coordinates raised to the row exponents. Its
//! right-hand side picks out the target monomial, so a solution gives
//! coefficients lambda with `sum_i lambda_i L_i^d` equal to the monomial,
//! which is then certified by expanding the sum again.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::apolarpoints::{count_formula, enumerate_points, t_is_valid, ApolarPointSet};
use crate::error::{Error, Result};
use crate::exactpoly::ratio::{parse_ratio, ratio_string};
use crate::exactpoly::{degree_monomials_desc, ExponentVec, MultiPoly};
use crate::generators::ExponentSeq;
use crate::linalg;

/// Multinomial coefficient d! / (alpha_0! ... alpha_n!).
pub fn multinomial(d: u32, alpha: &[u32]) -> BigInt {
    debug_assert_eq!(alpha.iter().sum::<u32>(), d);
    let mut remaining = d;
    let mut acc = BigInt::one();
    for &e in alpha {
        acc *= binomial(BigInt::from(remaining), BigInt::from(e));
        remaining -= e;
    }
    acc
}

/// Expand `(c_0 X_0 + ... + c_n X_n)^d` exactly.
pub fn expand_power(linform: &[BigRational], d: u32) -> MultiPoly {
    let nvars = linform.len();
    let mut out = MultiPoly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    expand_rec(linform, d, 0, &BigRational::one(), &mut exps, &mut out);
    out
}

fn expand_rec(
    c: &[BigRational],
    remaining: u32,
    var: usize,
    coeff: &BigRational,
    exps: &mut Vec<u32>,
    out: &mut MultiPoly,
) {
    if var + 1 == c.len() {
        if remaining > 0 && c[var].is_zero() {
            return;
        }
        exps[var] = remaining;
        let mut full = coeff.clone();
        for _ in 0..remaining {
            full *= &c[var];
        }
        out.add_term(ExponentVec::new(exps.clone()), full);
        exps[var] = 0;
        return;
    }
    let top = if c[var].is_zero() { 0 } else { remaining };
    let mut power = coeff.clone();
    for e in 0..=top {
        exps[var] = e;
        let with_binom =
            &power * BigRational::from_integer(binomial(BigInt::from(remaining), BigInt::from(e)));
        expand_rec(c, remaining - e, var + 1, &with_binom, exps, out);
        if e < top {
            power *= &c[var];
        }
    }
    exps[var] = 0;
}

/// The interpolation system for a monomial over a point set.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub a: ExponentSeq,
    pub degree: u32,
    /// Row labels: degree-d exponent vectors, grevlex descending.
    pub row_monomials: Vec<ExponentVec>,
    pub matrix: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
}

pub fn assemble_system(a: &ExponentSeq, pts: &ApolarPointSet) -> LinearSystem {
    let nvars = a.nvars();
    let d = a.total_degree();
    let row_monomials = degree_monomials_desc(nvars, d);

    // per-point powers of each coordinate up to d
    let power_tables: Vec<Vec<Vec<BigRational>>> = pts
        .points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| {
                    let mut row = Vec::with_capacity(d as usize + 1);
                    row.push(BigRational::one());
                    for e in 1..=d as usize {
                        let next = &row[e - 1] * c;
                        row.push(next);
                    }
                    row
                })
                .collect()
        })
        .collect();

    let target = ExponentVec::new(a.exponents().to_vec());
    let mut matrix = Vec::with_capacity(row_monomials.len());
    let mut rhs = Vec::with_capacity(row_monomials.len());
    for alpha in &row_monomials {
        let m = BigRational::from_integer(multinomial(d, alpha.exponents()));
        let row: Vec<BigRational> = power_tables
            .iter()
            .map(|powers| {
                let mut entry = m.clone();
                for (v, &e) in alpha.exponents().iter().enumerate() {
                    if e > 0 {
                        if powers[v][e as usize].is_zero() {
                            entry = BigRational::zero();
                            break;
                        }
                        entry *= &powers[v][e as usize];
                    }
                }
                entry
            })
            .collect();
        rhs.push(if *alpha == target {
            BigRational::one()
        } else {
            BigRational::zero()
        });
        matrix.push(row);
    }
    LinearSystem {
        a: a.clone(),
        degree: d,
        row_monomials,
        matrix,
        rhs,
    }
}

pub enum SolveOutcome {
    /// Particular solution (non-pivot coefficients zero) plus the rank of the
    /// coefficient matrix.
    Solution {
        lambdas: Vec<BigRational>,
        rank: usize,
    },
    Inconsistent,
}

/// Exact Gaussian elimination; `Inconsistent` is a value, not an error, and
/// signals a bad parameter or point set upstream.
pub fn solve_rational_system(sys: &LinearSystem) -> SolveOutcome {
    let rows: Vec<Vec<BigRational>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    match linalg::solve_augmented(&rows) {
        linalg::SolveOutcome::Solution { values, rank } => SolveOutcome::Solution {
            lambdas: values,
            rank,
        },
        linalg::SolveOutcome::Inconsistent => SolveOutcome::Inconsistent,
    }
}

/// A power-sum representation of the monomial with exponents `a`: the list
/// of (lambda, linear form) pairs, each linear form given by its coefficient
/// vector.
#[derive(Debug, Clone, PartialEq)]
pub struct WaringDecomposition {
    pub a: ExponentSeq,
    pub degree: u32,
    pub t: BigRational,
    pub terms: Vec<(BigRational, Vec<BigRational>)>,
}

impl WaringDecomposition {
    pub fn nonzero_terms(&self) -> usize {
        self.terms.iter().filter(|(l, _)| !l.is_zero()).count()
    }

    /// Drop terms with zero coefficient.
    pub fn pruned(&self) -> WaringDecomposition {
        WaringDecomposition {
            a: self.a.clone(),
            degree: self.degree,
            t: self.t.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| !l.is_zero())
                .cloned()
                .collect(),
        }
    }

    pub fn lambdas(&self) -> Vec<BigRational> {
        self.terms.iter().map(|(l, _)| l.clone()).collect()
    }

    /// Serialize to the machine-readable schema. `verified` is the caller's
    /// certification status for the identity (see [`verify_decomposition`]).
    pub fn to_json(&self, verified: bool) -> String {
        let bound = u64::try_from(&count_formula(&self.a)).expect("desk-scale bound");
        let dto = DecompositionJson {
            exponents: self.a.exponents().to_vec(),
            degree: self.degree,
            t: ratio_string(&self.t),
            points: self
                .terms
                .iter()
                .map(|(_, l)| l.iter().map(ratio_string).collect())
                .collect(),
            lambdas: self.terms.iter().map(|(l, _)| ratio_string(l)).collect(),
            term_count: self.nonzero_terms(),
            bound,
            verified,
        };
        serde_json::to_string(&dto).expect("decomposition serializes")
    }

    /// Parse the schema back; returns the decomposition and the `verified`
    /// flag the file claims.
    pub fn from_json(s: &str) -> Result<(WaringDecomposition, bool)> {
        let dto: DecompositionJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let a = ExponentSeq::new(dto.exponents)?;
        if dto.degree != a.total_degree() {
            return Err(Error::Parse(format!(
                "degree {} does not match exponent sum {}",
                dto.degree,
                a.total_degree()
            )));
        }
        if dto.points.len() != dto.lambdas.len() {
            return Err(Error::Parse(format!(
                "{} points but {} lambdas",
                dto.points.len(),
                dto.lambdas.len()
            )));
        }
        let t = parse_ratio(&dto.t)?;
        let mut terms = Vec::with_capacity(dto.points.len());
        for (lam, pt) in dto.lambdas.iter().zip(&dto.points) {
            if pt.len() != a.nvars() {
                return Err(Error::Parse(format!(
                    "point with {} coordinates in {} variables",
                    pt.len(),
                    a.nvars()
                )));
            }
            let lam = parse_ratio(lam)?;
            let coords = pt.iter().map(|c| parse_ratio(c)).collect::<Result<_>>()?;
            terms.push((lam, coords));
        }
        Ok((
            WaringDecomposition {
                a,
                degree: dto.degree,
                t,
                terms,
            },
            dto.verified,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    exponents: Vec<u32>,
    degree: u32,
    t: String,
    points: Vec<Vec<String>>,
    lambdas: Vec<String>,
    term_count: usize,
    bound: u64,
    verified: bool,
}

/// Expand `sum_i lambda_i L_i^d` and compare against the monomial, exactly.
pub fn verify_decomposition(dec: &WaringDecomposition) -> bool {
    let nvars = dec.a.nvars();
    let mut sum = MultiPoly::zero(nvars);
    for (lambda, linform) in &dec.terms {
        if lambda.is_zero() {
            continue;
        }
        let expanded = expand_power(linform, dec.degree).scale(lambda);
        sum = sum.add(&expanded).expect("same ring");
    }
    let target = MultiPoly::from_terms(
        nvars,
        [(
            ExponentVec::new(dec.a.exponents().to_vec()),
            BigRational::one(),
        )],
    );
    sum == target
}

#[derive(Debug, Clone)]
pub struct DecomposeOptions {
    /// Maximum number of parameter values tried before giving up.
    pub retry_limit: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { retry_limit: 8 }
    }
}

/// The parameter schedule: the hint (if any), then small primes and halves.
fn t_schedule(hint: Option<&BigRational>) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::new();
    if let Some(h) = hint {
        out.push(h.clone());
    }
    let defaults = [
        (2, 1), (3, 1), (5, 1), (7, 1),
        (1, 2), (3, 2), (5, 2), (7, 2),
        (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
    ];
    for (n, d) in defaults {
        let t = BigRational::new(BigInt::from(n), BigInt::from(d));
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// Full pipeline: enumerate points, assemble and solve the system, verify the
/// expansion; on an inconsistent system or failed verification move to the
/// next parameter value. The returned decomposition always verifies.
pub fn decompose_monomial(
    a: &ExponentSeq,
    t_hint: Option<&BigRational>,
    opts: &DecomposeOptions,
) -> Result<WaringDecomposition> {
    let mut attempted: Vec<String> = Vec::new();
    for t in t_schedule(t_hint) {
        if attempted.len() >= opts.retry_limit {
            break;
        }
        attempted.push(ratio_string(&t));
        if !t_is_valid(&t) {
            continue;
        }
        let pts = enumerate_points(a, &t)?;
        let sys = assemble_system(a, &pts);
        let lambdas = match solve_rational_system(&sys) {
            SolveOutcome::Solution { lambdas, .. } => lambdas,
            SolveOutcome::Inconsistent => continue,
        };
        let dec = WaringDecomposition {
            a: a.clone(),
            degree: sys.degree,
            t: t.clone(),
            terms: lambdas
                .into_iter()
                .zip(&pts.points)
                .map(|(l, p)| (l, p.coords().to_vec()))
                .collect(),
        };
        if verify_decomposition(&dec) {
            return Ok(dec);
        }
    }
    Err(Error::RetriesExhausted { attempted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::exactpoly::ratio::{int, ratio};

    fn seq(v: &[u32]) -> ExponentSeq {
        ExponentSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn binomial_expansion() {
        let p = expand_power(&[int(1), int(1)], 2);
        assert_eq!(p, parse_poly("x0^2+2*x0*x1+x1^2", 2).unwrap());
    }

    #[test]
    fn multinomial_coefficient_with_sign() {
        let p = expand_power(&[int(1), int(-1), int(1)], 9);
        let m = ExponentVec::new(vec![3, 3, 3]);
        assert_eq!(p.coefficient(&m), int(-1680));
        assert_eq!(multinomial(9, &[3, 3, 3]), BigInt::from(1680));
    }

    #[test]
    fn single_variable_power() {
        let p = expand_power(&[int(0), int(0), int(1)], 7);
        assert_eq!(p, parse_poly("x2^7", 3).unwrap());
    }

    #[test]
    fn zero_coordinates_prune_the_expansion() {
        let p = expand_power(&[int(2), int(0)], 3);
        assert_eq!(p, parse_poly("8*x0^3", 2).unwrap());
    }

    #[test]
    fn tiny_system_solves_to_quarter_coefficients() {
        // X0*X1 = 1/4 (X0+X1)^2 - 1/4 (X0-X1)^2
        let a = seq(&[1, 1]);
        let pts = enumerate_points(&a, &int(2)).unwrap();
        let sys = assemble_system(&a, &pts);
        assert_eq!(sys.matrix.len(), 3);
        assert_eq!(sys.matrix[0].len(), 2);
        match solve_rational_system(&sys) {
            SolveOutcome::Solution { lambdas, rank } => {
                assert_eq!(lambdas, vec![ratio(1, 4), ratio(-1, 4)]);
                assert_eq!(rank, 2);
            }
            SolveOutcome::Inconsistent => panic!("consistent by construction"),
        }
    }

    #[test]
    fn system_dimensions() {
        let a = seq(&[3, 3, 3]);
        let pts = enumerate_points(&a, &int(2)).unwrap();
        let sys = assemble_system(&a, &pts);
        assert_eq!(sys.matrix.len(), 55);
        assert_eq!(sys.matrix[0].len(), 28);
        // rows are grevlex-descending and the target row carries the 1
        let target = ExponentVec::new(vec![3, 3, 3]);
        let pos = sys.row_monomials.iter().position(|m| *m == target).unwrap();
        assert!(sys.rhs[pos].is_one());
        assert_eq!(sys.rhs.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn inconsistent_systems_are_reported_as_values() {
        let a = seq(&[1, 1]);
        let pts = enumerate_points(&a, &int(2)).unwrap();
        let mut sys = assemble_system(&a, &pts);
        // a second copy of the target row with a different right-hand side
        let target = ExponentVec::new(vec![1, 1]);
        let pos = sys.row_monomials.iter().position(|m| *m == target).unwrap();
        let row = sys.matrix[pos].clone();
        sys.matrix.push(row);
        sys.row_monomials.push(target);
        sys.rhs.push(int(2));
        assert!(matches!(
            solve_rational_system(&sys),
            SolveOutcome::Inconsistent
        ));
    }

    #[test]
    fn all_ones_decomposes_with_a_power_of_two_terms() {
        for n in [2usize, 3, 4] {
            let a = seq(&vec![1; n]);
            let dec = decompose_monomial(&a, None, &DecomposeOptions::default()).unwrap();
            assert!(verify_decomposition(&dec));
            assert_eq!(dec.terms.len(), 1 << (n - 1));
            assert_eq!(
                num_bigint::BigUint::from(dec.terms.len()),
                count_formula(&a)
            );
        }
    }

    #[test]
    fn verification_is_exact() {
        let a = seq(&[2, 2]);
        let mut dec = decompose_monomial(&a, Some(&int(2)), &DecomposeOptions::default()).unwrap();
        assert!(verify_decomposition(&dec));
        dec.terms[0].0 += int(1);
        assert!(!verify_decomposition(&dec));
    }

    #[test]
    fn scaling_the_points_leaves_the_expansion_fixed() {
        let a = seq(&[2, 2]);
        let dec = decompose_monomial(&a, Some(&int(2)), &DecomposeOptions::default()).unwrap();
        let c = ratio(3, 5);
        let mut scale_factor = BigRational::one();
        for _ in 0..dec.degree {
            scale_factor *= &c;
        }
        let rescaled = WaringDecomposition {
            a: dec.a.clone(),
            degree: dec.degree,
            t: dec.t.clone(),
            terms: dec
                .terms
                .iter()
                .map(|(l, p)| {
                    (
                        l / &scale_factor,
                        p.iter().map(|x| x * &c).collect::<Vec<_>>(),
                    )
                })
                .collect(),
        };
        assert!(verify_decomposition(&rescaled));
    }

    #[test]
    fn degenerate_hint_falls_through_to_the_schedule() {
        let a = seq(&[2, 2]);
        let dec = decompose_monomial(&a, Some(&int(1)), &DecomposeOptions::default()).unwrap();
        assert_eq!(dec.t, int(2));
    }

    #[test]
    fn exhausted_retries_report_the_attempts() {
        let a = seq(&[2, 2]);
        let err = decompose_monomial(&a, None, &DecomposeOptions { retry_limit: 0 }).unwrap_err();
        match err {
            Error::RetriesExhausted { attempted } => assert!(attempted.is_empty()),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let a = seq(&[2, 2]);
        let dec = decompose_monomial(&a, None, &DecomposeOptions::default()).unwrap();
        let json = dec.to_json(true);
        let (back, verified) = WaringDecomposition::from_json(&json).unwrap();
        assert!(verified);
        assert_eq!(back, dec);
        assert!(WaringDecomposition::from_json("{}").is_err());
    }

    #[test]
    fn pruning_drops_zero_terms_only() {
        let a = seq(&[2, 2]);
        let mut dec = decompose_monomial(&a, None, &DecomposeOptions::default()).unwrap();
        dec.terms.push((int(0), vec![int(9), int(9)]));
        let pruned = dec.pruned();
        assert_eq!(pruned.terms.len(), dec.nonzero_terms());
        assert!(verify_decomposition(&pruned));
    }
}
