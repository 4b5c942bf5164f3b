//! The hyperbolic binary forms and the generator set they span.
//!
//! For an odd pair (a_i, a_j) the form is a product of factors
//! `x_i^2 - t^(2k) x_j^2` over a centered range of k, so all roots are real
//! and, for |t| not 0 or 1, distinct. General exponents are handled by
//! dropping each even entry to the odd number below it and multiplying the
//! affected variable back in.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::ratio::signed_pow;
use crate::exactpoly::{ExponentVec, MultiPoly};

/// A sequence of positive exponents together with its descending sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSeq {
    exps: Vec<u32>,
    perm: Vec<usize>,
}

impl ExponentSeq {
    /// At least two entries, all positive.
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() < 2 {
            return Err(Error::InvalidExponents(format!(
                "need at least two exponents, got {}",
                exps.len()
            )));
        }
        if exps.iter().any(|&a| a == 0) {
            return Err(Error::InvalidExponents(format!(
                "all exponents must be positive, got {exps:?}"
            )));
        }
        let mut perm: Vec<usize> = (0..exps.len()).collect();
        perm.sort_by(|&i, &j| exps[j].cmp(&exps[i]).then(i.cmp(&j)));
        Ok(ExponentSeq { exps, perm })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Number of variables (the sequence length).
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// `perm[k]` is the original index of the k-th largest entry.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn sorted_desc(&self) -> Vec<u32> {
        self.perm.iter().map(|&i| self.exps[i]).collect()
    }

    pub fn is_descending(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// The odd sequence `a' = a - eps(a)` with the parity flags that were
/// subtracted (`eps = 1` exactly at even entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddizedSeq {
    pub aprime: Vec<u32>,
    pub eps: Vec<u8>,
}

impl OddizedSeq {
    pub fn from_seq(a: &ExponentSeq) -> Self {
        let eps: Vec<u8> = a.exponents().iter().map(|&x| (x % 2 == 0) as u8).collect();
        let aprime = a
            .exponents()
            .iter()
            .zip(&eps)
            .map(|(&x, &e)| x - e as u32)
            .collect();
        OddizedSeq { aprime, eps }
    }
}

/// The generator set of the ideal for a sequence `a` at parameter `t`:
/// one binary form per index pair i < j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: BTreeMap<(usize, usize), MultiPoly>,
    t: BigRational,
}

impl GeneratorSet {
    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&MultiPoly> {
        self.gens.get(&(i, j))
    }

    /// Pairs (i, j) with their generators, ordered by (i, j).
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> {
        self.gens.iter()
    }

    pub fn polynomials(&self) -> Vec<MultiPoly> {
        self.gens.values().cloned().collect()
    }
}

fn check_pair(len: usize, i: usize, j: usize) -> Result<()> {
    if i >= j || j >= len {
        return Err(Error::IndexOutOfRange { i, j, len });
    }
    Ok(())
}

/// Range of factor exponents k for the odd pair (ai, aj): the product runs
/// over k from -(floor(ai/4) + floor((aj+2)/4)) to floor((ai+2)/4) + floor(aj/4).
fn factor_range(ai: u32, aj: u32) -> (i64, i64) {
    let lo = -((ai / 4) as i64 + ((aj + 2) / 4) as i64);
    let hi = ((ai + 2) / 4) as i64 + (aj / 4) as i64;
    (lo, hi)
}

/// The binary form for an all-odd sequence: the product of
/// `x_i^2 - t^(2k) x_j^2` over the centered k-range. Total degree a_i + a_j.
pub fn build_f(odd_exponents: &[u32], i: usize, j: usize, t: &BigRational) -> Result<MultiPoly> {
    let nvars = odd_exponents.len();
    check_pair(nvars, i, j)?;
    if t.is_zero() {
        return Err(Error::DegenerateParameter("0".into()));
    }
    if let Some(&bad) = odd_exponents.iter().find(|&&a| a % 2 == 0) {
        return Err(Error::InvalidExponents(format!(
            "expected all odd exponents, found {bad}"
        )));
    }
    let (lo, hi) = factor_range(odd_exponents[i], odd_exponents[j]);
    let xi2 = ExponentVec::new({
        let mut e = vec![0; nvars];
        e[i] = 2;
        e
    });
    let xj2 = ExponentVec::new({
        let mut e = vec![0; nvars];
        e[j] = 2;
        e
    });
    let mut f = MultiPoly::one(nvars);
    for k in lo..=hi {
        let factor = MultiPoly::from_terms(
            nvars,
            [
                (xi2.clone(), BigRational::from_integer(1.into())),
                (xj2.clone(), -signed_pow(t, 2 * k)),
            ],
        );
        f = f.mul(&factor)?;
    }
    Ok(f)
}

/// Generator for an arbitrary positive sequence: the odd-pair form of the
/// oddized sequence times `x_i^eps(a_i) * x_j^eps(a_j)`. Total degree a_i + a_j.
pub fn build_g(a: &ExponentSeq, i: usize, j: usize, t: &BigRational) -> Result<MultiPoly> {
    check_pair(a.nvars(), i, j)?;
    let odd = OddizedSeq::from_seq(a);
    let f = build_f(&odd.aprime, i, j, t)?;
    let mut shift = vec![0u32; a.nvars()];
    shift[i] = odd.eps[i] as u32;
    shift[j] = odd.eps[j] as u32;
    Ok(f.mul_term(
        &ExponentVec::new(shift),
        &BigRational::from_integer(1.into()),
    ))
}

/// All generators of the ideal for `a` at parameter `t`, keyed by the index
/// pair. Exactly n(n+1)/2 of them for n+1 variables.
pub fn build_j(a: &ExponentSeq, t: &BigRational) -> Result<GeneratorSet> {
    build_j_with(a, t, false)
}

/// As [`build_j`], optionally clearing coefficient denominators.
pub fn build_j_with(a: &ExponentSeq, t: &BigRational, clear_denominators: bool) -> Result<GeneratorSet> {
    let mut gens = BTreeMap::new();
    for i in 0..a.nvars() {
        for j in (i + 1)..a.nvars() {
            let mut g = build_g(a, i, j, t)?;
            if clear_denominators {
                g = g.cleared_denominators();
            }
            gens.insert((i, j), g);
        }
    }
    Ok(GeneratorSet { gens, t: t.clone() })
}

/// Membership in the annihilator of the monomial with exponents `a`: true iff
/// every term of `p` is divisible by `x_i^(a_i + 1)` for some i.
pub fn apolar_membership(p: &MultiPoly, a: &ExponentSeq) -> bool {
    debug_assert_eq!(p.nvars(), a.nvars());
    p.terms().all(|(m, _)| {
        a.exponents()
            .iter()
            .enumerate()
            .any(|(i, &ai)| m[i] >= ai + 1)
    })
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
    fn seq_validation_and_sort() {
        assert!(ExponentSeq::new(vec![3]).is_err());
        assert!(ExponentSeq::new(vec![3, 0]).is_err());
        let a = seq(&[3, 5, 4]);
        assert_eq!(a.perm(), &[1, 2, 0]);
        assert_eq!(a.sorted_desc(), vec![5, 4, 3]);
        assert!(!a.is_descending());
        assert!(seq(&[5, 4, 3]).is_descending());
        // ties keep original order
        assert_eq!(seq(&[3, 3, 3]).perm(), &[0, 1, 2]);
    }

    #[test]
    fn oddized() {
        let odd = OddizedSeq::from_seq(&seq(&[5, 4, 3]));
        assert_eq!(odd.aprime, vec![5, 3, 3]);
        assert_eq!(odd.eps, vec![0, 1, 0]);
    }

    #[test]
    fn f_for_pair_of_threes() {
        let f = build_f(&[3, 3], 0, 1, &int(2)).unwrap();
        assert_eq!(
            f,
            parse_poly("x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6", 2).unwrap()
        );
    }

    #[test]
    fn f_single_factor_for_ones() {
        for t in [int(2), ratio(5, 2), int(-3)] {
            assert_eq!(
                build_f(&[1, 1], 0, 1, &t).unwrap(),
                parse_poly("x0^2-x1^2", 2).unwrap()
            );
        }
    }

    #[test]
    fn f_factor_range_for_five_three() {
        // k runs over {-2, -1, 0, 1}
        let f = build_f(&[5, 3], 0, 1, &int(2)).unwrap();
        let expected = parse_poly("x0^2-1/16*x1^2", 2)
            .unwrap()
            .mul(&parse_poly("x0^2-1/4*x1^2", 2).unwrap())
            .unwrap()
            .mul(&parse_poly("x0^2-x1^2", 2).unwrap())
            .unwrap()
            .mul(&parse_poly("x0^2-4*x1^2", 2).unwrap())
            .unwrap();
        assert_eq!(f, expected);
        assert_eq!(f.total_degree(), Some(8));
    }

    #[test]
    fn f_rejects_bad_input() {
        assert!(matches!(
            build_f(&[3, 3], 0, 1, &int(0)),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(build_f(&[4, 3], 0, 1, &int(2)).is_err());
        assert!(build_f(&[3, 3], 1, 1, &int(2)).is_err());
        assert!(build_f(&[3, 3], 0, 2, &int(2)).is_err());
    }

    #[test]
    fn g_attaches_even_variables() {
        // (5,4,3): pair (0,1) picks up the factor x1
        let a = seq(&[5, 4, 3]);
        let t = int(2);
        let g = build_g(&a, 0, 1, &t).unwrap();
        let f = build_f(&[5, 3, 3], 0, 1, &t).unwrap();
        assert_eq!(g, f.mul(&MultiPoly::var(3, 1)).unwrap());
        assert_eq!(g.total_degree(), Some(9));

        // (4,4,4): pair (0,1) picks up x0*x1
        let a = seq(&[4, 4, 4]);
        let g = build_g(&a, 0, 1, &t).unwrap();
        let f = build_f(&[3, 3, 3], 0, 1, &t).unwrap();
        let x0x1 = MultiPoly::var(3, 0).mul(&MultiPoly::var(3, 1)).unwrap();
        assert_eq!(g, f.mul(&x0x1).unwrap());
        assert_eq!(g.total_degree(), Some(8));
    }

    #[test]
    fn g_for_two_twos() {
        for t in [int(2), int(7), ratio(1, 2)] {
            let g = build_g(&seq(&[2, 2]), 0, 1, &t).unwrap();
            assert_eq!(g, parse_poly("x0^3*x1-x0*x1^3", 2).unwrap());
        }
    }

    #[test]
    fn g_is_even_in_t() {
        let a = seq(&[5, 4, 3]);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let plus = build_g(&a, i, j, &int(2)).unwrap();
            let minus = build_g(&a, i, j, &int(-2)).unwrap();
            assert_eq!(plus, minus);
        }
    }

    #[test]
    fn j_has_one_generator_per_pair() {
        let t = int(2);
        let j = build_j(&seq(&[3, 3, 3]), &t).unwrap();
        assert_eq!(j.len(), 3);
        let g01 = parse_poly("x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6", 3).unwrap();
        let g02 = parse_poly("x0^6-21/4*x0^4*x2^2+21/4*x0^2*x2^4-x2^6", 3).unwrap();
        let g12 = parse_poly("x1^6-21/4*x1^4*x2^2+21/4*x1^2*x2^4-x2^6", 3).unwrap();
        assert_eq!(j.get(0, 1), Some(&g01));
        assert_eq!(j.get(0, 2), Some(&g02));
        assert_eq!(j.get(1, 2), Some(&g12));

        assert_eq!(build_j(&seq(&[4, 2]), &t).unwrap().len(), 1);
        assert_eq!(build_j(&seq(&[5, 4, 3]), &t).unwrap().len(), 3);
    }

    #[test]
    fn cleared_denominators_variant() {
        let j = build_j_with(&seq(&[3, 3]), &int(2), true).unwrap();
        let g = j.get(0, 1).unwrap();
        assert_eq!(
            g,
            &parse_poly("4*x0^6-21*x0^4*x1^2+21*x0^2*x1^4-4*x1^6", 2).unwrap()
        );
    }

    #[test]
    fn generators_annihilate_their_monomial() {
        let a = seq(&[5, 4, 3]);
        let j = build_j(&a, &int(2)).unwrap();
        for (_, g) in j.iter() {
            assert!(apolar_membership(g, &a));
        }
        // x0*x1*x2 is not in the annihilator of the square monomial
        let p = parse_poly("x0*x1*x2", 3).unwrap();
        assert!(!apolar_membership(&p, &seq(&[2, 2, 2])));
        // the zero polynomial vacuously is
        assert!(apolar_membership(&MultiPoly::zero(3), &seq(&[2, 2, 2])));
    }

    #[test]
    fn expansion_coefficients_are_signed_elementary_symmetric() {
        // coefficient of x_i^(ai+aj-2d) x_j^(2d) in F is (-1)^d e_d of the
        // factor values t^(2k)
        let cases: [(&[u32], BigRational); 3] =
            [(&[3, 3], int(2)), (&[5, 3], int(3)), (&[5, 5], ratio(3, 2))];
        for (aodd, t) in cases {
            let f = build_f(aodd, 0, 1, &t).unwrap();
            let (lo, hi) = super::factor_range(aodd[0], aodd[1]);
            let values: Vec<BigRational> = (lo..=hi).map(|k| signed_pow(&t, 2 * k)).collect();
            let half = (aodd[0] + aodd[1]) / 2;
            for d in 0..=half {
                let mut e_d = elementary_symmetric(&values, d as usize);
                if d % 2 == 1 {
                    e_d = -e_d;
                }
                let mut mono = vec![0u32; 2];
                mono[0] = aodd[0] + aodd[1] - 2 * d;
                mono[1] = 2 * d;
                assert_eq!(f.coefficient(&ExponentVec::new(mono)), e_d);
            }
        }
    }

    fn elementary_symmetric(values: &[BigRational], d: usize) -> BigRational {
        // dynamic programming over prefix products
        let mut e = vec![BigRational::from_integer(0.into()); d + 1];
        e[0] = int(1);
        for v in values {
            for k in (1..=d).rev() {
                let add = &e[k - 1] * v;
                e[k] += add;
            }
        }
        e[d].clone()
    }
}
