//! Multivariate division with remainder.

use num_rational::BigRational;

use super::exponent::MonomialOrder;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Divide `p` by the ordered list `divisors`, returning `(quotients,
/// remainder)` with `p = sum_i quotients[i] * divisors[i] + remainder` and no
/// remainder term divisible by any divisor's leading monomial.
///
/// Divisors are tried in the given order at every step, so the result is
/// deterministic.
pub fn poly_reduce(
    p: &MultiPoly,
    divisors: &[MultiPoly],
    _order: MonomialOrder,
) -> Result<(Vec<MultiPoly>, MultiPoly)> {
    let nvars = p.nvars();
    for d in divisors {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if d.nvars() != nvars {
            return Err(Error::NvarsMismatch(nvars, d.nvars()));
        }
    }
    let lead: Vec<_> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        })
        .collect();

    let mut quotients = vec![MultiPoly::zero(nvars); divisors.len()];
    let mut remainder = MultiPoly::zero(nvars);
    let mut work = p.clone();

    while let Some((lm, lc)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, (dm, dc)) in lead.iter().enumerate() {
            if let Some(q) = lm.checked_div(dm) {
                let coeff: BigRational = &lc / dc;
                quotients[i].add_term(q.clone(), coeff.clone());
                let step = divisors[i].mul_term(&q, &coeff);
                work = work.sub(&step).expect("same ring");
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.add_term(lm.clone(), lc.clone());
            // move the leading term out of the working polynomial
            work.add_term(lm, -lc);
        }
    }
    Ok((quotients, remainder))
}

/// Remainder only.
pub fn remainder(p: &MultiPoly, divisors: &[MultiPoly], order: MonomialOrder) -> Result<MultiPoly> {
    poly_reduce(p, divisors, order).map(|(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::parse_poly;

    #[test]
    fn exact_division_leaves_zero_remainder() {
        let p = parse_poly("x0^2", 2).unwrap();
        let d = parse_poly("x0", 2).unwrap();
        let (q, r) = poly_reduce(&p, &[d.clone()], MonomialOrder::Grevlex).unwrap();
        assert!(r.is_zero());
        assert_eq!(q[0].mul(&d).unwrap(), p);
    }

    #[test]
    fn remainder_not_divisible_by_leading_monomials() {
        let p = parse_poly("x0^6*x1", 2).unwrap();
        let d = parse_poly("x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6", 2).unwrap();
        let (q, r) = poly_reduce(&p, &[d.clone()], MonomialOrder::Grevlex).unwrap();
        let dm = d.leading_monomial().unwrap();
        for (m, _) in r.terms() {
            assert!(!dm.divides(m));
        }
        // p = q*d + r
        let back = q[0].mul(&d).unwrap().add(&r).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn division_identity_holds_with_several_divisors() {
        let p = parse_poly("x0^3*x1+x0*x1^2+x1^3+3", 2).unwrap();
        let d1 = parse_poly("x0*x1-1", 2).unwrap();
        let d2 = parse_poly("x1^2-1", 2).unwrap();
        let (q, r) = poly_reduce(&p, &[d1.clone(), d2.clone()], MonomialOrder::Grevlex).unwrap();
        let back = q[0]
            .mul(&d1)
            .unwrap()
            .add(&q[1].mul(&d2).unwrap())
            .unwrap()
            .add(&r)
            .unwrap();
        assert_eq!(back, p);
        for (m, _) in r.terms() {
            assert!(!d1.leading_monomial().unwrap().divides(m));
            assert!(!d2.leading_monomial().unwrap().divides(m));
        }
    }

    #[test]
    fn zero_divisor_rejected() {
        let p = parse_poly("x0", 2).unwrap();
        assert!(poly_reduce(&p, &[MultiPoly::zero(2)], MonomialOrder::Grevlex).is_err());
    }
}
