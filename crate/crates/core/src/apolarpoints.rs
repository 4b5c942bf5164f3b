//! Exact enumeration of the structured point set cut out by the generator
//! ideal.
//!
//! For an all-odd sequence the points have coordinates `t^b` with each
//! exponent in a centered range and at least one exponent at its lower bound
//! (one canonical representative per projective class), followed by every
//! sign pattern on all coordinates but the last. Even entries are handled by
//! recursing on the last even index: once with that entry decremented, once
//! with the variable deleted and a zero coordinate inserted back.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::ratio::{is_degenerate_t, ratio_string, signed_pow};
use crate::generators::ExponentSeq;

/// A projective point held as one canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<BigRational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidExponents(
                "projective point cannot be all zero".into(),
            ));
        }
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Scale so the last nonzero coordinate is 1; exact, so two points are
    /// projectively equal iff their normalized forms are identical.
    pub fn normalized(&self) -> Vec<BigRational> {
        let pivot = self
            .coords
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("not all zero");
        self.coords.iter().map(|c| c / pivot).collect()
    }

    pub fn coordinate_strings(&self) -> Vec<String> {
        self.coords.iter().map(ratio_string).collect()
    }
}

/// The enumerated point set for a sequence and parameter.
#[derive(Debug, Clone)]
pub struct ApolarPointSet {
    pub points: Vec<ProjPoint>,
    pub a: ExponentSeq,
    pub t: BigRational,
}

impl ApolarPointSet {
    /// The set of normalized representatives, for order-insensitive
    /// comparison.
    pub fn projective_set(&self) -> std::collections::BTreeSet<Vec<BigRational>> {
        self.points.iter().map(|p| p.normalized()).collect()
    }
}

/// Half the difference of the shifted exponent products: the size of the
/// point set and the rank bound it certifies.
pub fn count_formula(a: &ExponentSeq) -> BigUint {
    count_formula_slice(a.exponents())
}

fn count_formula_slice(a: &[u32]) -> BigUint {
    let mut plus = BigInt::one();
    let mut minus = BigInt::one();
    for &ai in a {
        plus *= BigInt::from(ai + 1);
        minus *= BigInt::from(ai - 1);
    }
    ((plus - minus) / BigInt::from(2))
        .to_biguint()
        .expect("count is positive")
}

/// Points for an all-odd sequence. Representatives have coordinate exponents
/// `b_i` in `[-floor(a_i/4), floor((a_i+2)/4)]` with at least one `b_i` at
/// its lower bound; each representative is followed by all sign patterns on
/// coordinates 0..n-1, the last coordinate left as is.
pub fn base_odd_points(a: &ExponentSeq, t: &BigRational) -> Result<Vec<ProjPoint>> {
    if let Some(&bad) = a.exponents().iter().find(|&&x| x % 2 == 0) {
        return Err(Error::InvalidExponents(format!(
            "expected all odd exponents, found {bad}"
        )));
    }
    check_t(t)?;
    Ok(base_odd_raw(a.exponents(), t)
        .into_iter()
        .map(|coords| ProjPoint::new(coords).expect("nonzero"))
        .collect())
}

fn check_t(t: &BigRational) -> Result<()> {
    if is_degenerate_t(t) {
        return Err(Error::DegenerateParameter(ratio_string(t)));
    }
    Ok(())
}

fn base_odd_raw(a: &[u32], t: &BigRational) -> Vec<Vec<BigRational>> {
    if a.is_empty() {
        return Vec::new();
    }
    // ascending exponent values per coordinate; index 0 is the lower bound
    let ranges: Vec<Vec<BigRational>> = a
        .iter()
        .map(|&ai| {
            let lo = -((ai / 4) as i64);
            let hi = ((ai + 2) / 4) as i64;
            (lo..=hi).map(|b| signed_pow(t, b)).collect()
        })
        .collect();

    let mut reps: Vec<Vec<BigRational>> = Vec::new();
    let mut idx = vec![0usize; a.len()];
    loop {
        if idx.iter().any(|&k| k == 0) {
            reps.push(
                idx.iter()
                    .zip(&ranges)
                    .map(|(&k, r)| r[k].clone())
                    .collect(),
            );
        }
        // odometer with the last position fastest
        let mut pos = a.len();
        loop {
            if pos == 0 {
                return apply_signs(reps);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < ranges[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn apply_signs(reps: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let mut out = Vec::new();
    for rep in reps {
        let n = rep.len() - 1;
        for pattern in 0..(1u64 << n) {
            let mut p = rep.clone();
            for (i, c) in p.iter_mut().enumerate().take(n) {
                // bit order matches the enumeration of representatives: the
                // last flippable coordinate varies fastest
                if (pattern >> (n - 1 - i)) & 1 == 1 {
                    *c = -c.clone();
                }
            }
            out.push(p);
        }
    }
    out
}

fn points_rec(a: &[u32], t: &BigRational) -> Vec<Vec<BigRational>> {
    match a.iter().rposition(|&x| x % 2 == 0) {
        None => base_odd_raw(a, t),
        Some(l) => {
            let mut deleted: Vec<u32> = a.to_vec();
            deleted.remove(l);
            let mut out: Vec<Vec<BigRational>> = points_rec(&deleted, t)
                .into_iter()
                .map(|mut p| {
                    p.insert(l, BigRational::zero());
                    p
                })
                .collect();
            let mut decremented = a.to_vec();
            decremented[l] -= 1;
            out.extend(points_rec(&decremented, t));
            out
        }
    }
}

/// Raw enumeration without the nondegeneracy guard on `t` (still requires
/// `t != 0`). At `|t| = 1` the listed points collide projectively; callers
/// that want to observe that collapse deduplicate the result.
pub fn candidate_points(a: &ExponentSeq, t: &BigRational) -> Result<Vec<ProjPoint>> {
    if t.is_zero() {
        return Err(Error::DegenerateParameter("0".into()));
    }
    Ok(points_rec(a.exponents(), t)
        .into_iter()
        .map(|coords| ProjPoint::new(coords).expect("nonzero"))
        .collect())
}

/// Enumerate the full point set; the number of points always equals
/// [`count_formula`].
pub fn enumerate_points(a: &ExponentSeq, t: &BigRational) -> Result<ApolarPointSet> {
    check_t(t)?;
    let points = candidate_points(a, t)?;
    debug_assert_eq!(BigUint::from(points.len()), count_formula(a));
    Ok(ApolarPointSet {
        points,
        a: a.clone(),
        t: t.clone(),
    })
}

/// True when `t` is usable for point constructions (|t| not in {0, 1}).
pub fn t_is_valid(t: &BigRational) -> bool {
    !t.is_zero() && !t.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio::{int, ratio};
    use crate::generators::build_j;
    use std::collections::BTreeSet;

    fn seq(v: &[u32]) -> ExponentSeq {
        ExponentSeq::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn count_formula_values() {
        assert_eq!(count_formula(&seq(&[3, 3, 3])), BigUint::from(28u32));
        assert_eq!(count_formula(&seq(&[5, 4, 3])), BigUint::from(48u32));
        assert_eq!(count_formula(&seq(&[4, 4, 4])), BigUint::from(49u32));
        assert_eq!(count_formula(&seq(&[4, 4, 4, 4])), BigUint::from(272u32));
        // two variables: a0 + a1
        for (a0, a1) in [(1, 1), (5, 2), (9, 9)] {
            assert_eq!(
                count_formula(&seq(&[a0, a1])),
                BigUint::from((a0 + a1) as u32)
            );
        }
    }

    #[test]
    fn ones_collapse_to_two_points() {
        let pts = base_odd_points(&seq(&[1, 1]), &int(2)).unwrap();
        let coords: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(coords, vec![ints(&[1, 1]), ints(&[-1, 1])]);
    }

    #[test]
    fn odd_base_for_three_threes_matches_known_28() {
        let pts = base_odd_points(&seq(&[3, 3, 3]), &int(2)).unwrap();
        let listed: Vec<Vec<i64>> = vec![
            vec![1, 1, 1], vec![1, -1, 1], vec![-1, 1, 1], vec![-1, -1, 1],
            vec![1, 1, 2], vec![1, -1, 2], vec![-1, 1, 2], vec![-1, -1, 2],
            vec![1, 2, 1], vec![1, -2, 1], vec![-1, 2, 1], vec![-1, -2, 1],
            vec![1, 2, 2], vec![1, -2, 2], vec![-1, 2, 2], vec![-1, -2, 2],
            vec![2, 1, 1], vec![2, -1, 1], vec![-2, 1, 1], vec![-2, -1, 1],
            vec![2, 1, 2], vec![2, -1, 2], vec![-2, 1, 2], vec![-2, -1, 2],
            vec![2, 2, 1], vec![2, -2, 1], vec![-2, 2, 1], vec![-2, -2, 1],
        ];
        let got: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        let want: Vec<Vec<BigRational>> = listed.iter().map(|p| ints(p)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn five_three_three_has_40_vanishing_points() {
        let a = seq(&[5, 3, 3]);
        let t = int(2);
        let pts = base_odd_points(&a, &t).unwrap();
        assert_eq!(pts.len(), 40);
        assert_eq!(BigUint::from(pts.len()), count_formula(&a));
        let j = build_j(&a, &t).unwrap();
        for p in &pts {
            for (_, g) in j.iter() {
                assert!(g.eval(p.coords()).is_zero());
            }
        }
        let distinct: BTreeSet<_> = pts.iter().map(|p| p.normalized()).collect();
        assert_eq!(distinct.len(), 40);
    }

    #[test]
    fn two_twos_enumeration_and_brute_force() {
        let a = seq(&[2, 2]);
        let t = int(2);
        let set = enumerate_points(&a, &t).unwrap();
        let coords: Vec<Vec<BigRational>> =
            set.points.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1]), ints(&[-1, 1])]
        );
        assert_eq!(BigUint::from(set.points.len()), count_formula(&a));

        // brute force: every projective zero of x0*x1*(x0^2 - x1^2) over a
        // grid of small rationals lies in the enumerated set
        let g = build_j(&a, &t).unwrap().get(0, 1).unwrap().clone();
        let expected = set.projective_set();
        let mut values = Vec::new();
        for num in -4i64..=4 {
            for den in [1i64, 2, 3] {
                values.push(ratio(num, den));
            }
        }
        for x in &values {
            for y in &values {
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let p = ProjPoint::new(vec![x.clone(), y.clone()]).unwrap();
                if g.eval(p.coords()).is_zero() {
                    assert!(expected.contains(&p.normalized()), "missing zero {p:?}");
                }
            }
        }
    }

    #[test]
    fn recursion_splits_on_the_last_even_index() {
        // (5,4,3): 40 points with x1 != 0 plus 8 with x1 = 0
        let a = seq(&[5, 4, 3]);
        let t = int(2);
        let set = enumerate_points(&a, &t).unwrap();
        assert_eq!(set.points.len(), 48);
        let (zero_x1, nonzero_x1): (Vec<_>, Vec<_>) =
            set.points.iter().partition(|p| p.coords()[1].is_zero());
        assert_eq!(zero_x1.len(), 8);
        assert_eq!(nonzero_x1.len(), 40);
        // the x1 = 0 points come first: deletion branch before decrement
        assert!(set.points[..8].iter().all(|p| p.coords()[1].is_zero()));
        let j = build_j(&a, &t).unwrap();
        for p in &set.points {
            for (_, g) in j.iter() {
                assert!(g.eval(p.coords()).is_zero());
            }
        }
    }

    #[test]
    fn four_four_four_matches_published_49() {
        let a = seq(&[4, 4, 4]);
        let t = int(2);
        let set = enumerate_points(&a, &t).unwrap();
        assert_eq!(set.points.len(), 49);

        let tt = 2i64;
        let mut expected: Vec<Vec<i64>> = Vec::new();
        // all coordinates nonzero: every magnitude pattern except (t, t, t)
        for (b0, b1, b2) in [
            (1, 1, 1), (1, 1, tt), (1, tt, 1), (tt, 1, 1),
            (1, tt, tt), (tt, 1, tt), (tt, tt, 1),
        ] {
            for s1 in [1, -1] {
                for s2 in [1, -1] {
                    expected.push(vec![b0, s1 * b1, s2 * b2]);
                }
            }
        }
        // one zero coordinate
        for (u, v) in [(1, 1), (1, tt), (tt, 1)] {
            for s in [1, -1] {
                expected.push(vec![u, s * v, 0]);
                expected.push(vec![u, 0, s * v]);
                expected.push(vec![0, u, s * v]);
            }
        }
        // coordinate points
        expected.push(vec![1, 0, 0]);
        expected.push(vec![0, 1, 0]);
        expected.push(vec![0, 0, 1]);
        assert_eq!(expected.len(), 49);

        let want: BTreeSet<Vec<BigRational>> = expected
            .iter()
            .map(|c| ProjPoint::new(ints(c)).unwrap().normalized())
            .collect();
        assert_eq!(set.projective_set(), want);
    }

    #[test]
    fn degenerate_t_rejected() {
        let a = seq(&[3, 3]);
        for t in [int(0), int(1), int(-1)] {
            assert!(enumerate_points(&a, &t).is_err());
            assert!(base_odd_points(&a, &t).is_err());
        }
        assert!(enumerate_points(&a, &ratio(1, 2)).is_ok());
        assert!(enumerate_points(&a, &int(-2)).is_ok());
        // candidate enumeration only rejects t = 0
        assert!(candidate_points(&a, &int(1)).is_ok());
        assert!(candidate_points(&a, &int(0)).is_err());
    }

    #[test]
    fn at_unit_t_the_points_collide() {
        let a = seq(&[3, 3, 3]);
        let pts = candidate_points(&a, &int(1)).unwrap();
        assert_eq!(pts.len(), 28);
        let distinct: BTreeSet<_> = pts.iter().map(|p| p.normalized()).collect();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn counts_match_formula_across_samples() {
        let t = ratio(5, 2);
        for a in [
            vec![1, 1], vec![2, 2], vec![3, 2], vec![2, 3], vec![4, 4],
            vec![5, 4, 3], vec![2, 2, 2], vec![4, 3, 3], vec![3, 4, 5],
            vec![2, 2, 2, 2], vec![3, 3, 3, 3],
        ] {
            let a = seq(&a);
            let set = enumerate_points(&a, &t).unwrap();
            assert_eq!(BigUint::from(set.points.len()), count_formula(&a));
            assert_eq!(set.projective_set().len(), set.points.len());
        }
    }

    #[test]
    fn odd_base_is_closed_under_reflections() {
        let a = seq(&[5, 3, 3]);
        let pts = base_odd_points(&a, &ratio(3, 2)).unwrap();
        let all: BTreeSet<Vec<BigRational>> =
            pts.iter().map(|p| p.coords().to_vec()).collect();
        for flip in 0..2 {
            let flipped: BTreeSet<Vec<BigRational>> = pts
                .iter()
                .map(|p| {
                    let mut c = p.coords().to_vec();
                    c[flip] = -c[flip].clone();
                    c
                })
                .collect();
            assert_eq!(all, flipped);
        }
    }

    #[test]
    fn normalization_identifies_sign_flips_of_whole_points() {
        let p = ProjPoint::new(ints(&[1, -1, 0])).unwrap();
        let q = ProjPoint::new(ints(&[-1, 1, 0])).unwrap();
        assert_eq!(p.normalized(), q.normalized());
        assert!(ProjPoint::new(ints(&[0, 0, 0])).is_err());
    }
}
