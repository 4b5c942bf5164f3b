//! Subresultant-style combinations of two univariate polynomials.
//!
//! For f of degree n and g of degree m with n >= m >= i >= 1 this produces
//! (u, v, h) with deg u <= m-i, deg v <= n-i and h = u*f + v*g of degree at
//! most i-1. The coefficients of u and v are signed maximal minors of a
//! submatrix of the Sylvester matrix of f and g.

use num_rational::BigRational;
use num_traits::Zero;

use super::exponent::ExponentVec;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

pub fn subresultant_pair(
    f: &MultiPoly,
    g: &MultiPoly,
    i: usize,
) -> Result<(MultiPoly, MultiPoly, MultiPoly)> {
    if f.nvars() != 1 || g.nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.total_degree().unwrap() as usize;
    let m = g.total_degree().unwrap() as usize;
    if n < m || i < 1 || i > m {
        return Err(Error::SubresultantIndex { i });
    }

    let fc = dense_coeffs(f, n);
    let gc = dense_coeffs(g, m);

    // the (n+m-i+1) x (n+m-2i+2) shift matrix: columns are x^(m-i-j)*f for
    // j = 0..=m-i followed by x^(n-i-j)*g for j = 0..=n-i, rows are the
    // coefficients of x^(n+m-i) down to x^0
    let nrows = n + m - i + 1;
    let ncols = n + m - 2 * i + 2;
    let entry = |r: usize, c: usize| -> BigRational {
        if c <= m - i {
            coeff_at(&fc, n as i64 - r as i64 + c as i64)
        } else {
            let j = c - (m - i + 1);
            coeff_at(&gc, m as i64 - r as i64 + j as i64)
        }
    };

    // cofactor solution of the top (ncols-1) rows: x_j = (-1)^j det(M~ minus
    // column j) annihilates every coefficient of degree >= i
    let top = ncols - 1;
    debug_assert_eq!(top, n + m - 2 * i + 1);
    debug_assert!(top < nrows);
    let mut cof = Vec::with_capacity(ncols);
    for j in 0..ncols {
        let minor: Vec<Vec<BigRational>> = (0..top)
            .map(|r| {
                (0..ncols)
                    .filter(|&c| c != j)
                    .map(|c| entry(r, c))
                    .collect()
            })
            .collect();
        let mut d = det(minor);
        if j % 2 == 1 {
            d = -d;
        }
        cof.push(d);
    }

    let mut u = MultiPoly::zero(1);
    for (j, c) in cof.iter().take(m - i + 1).enumerate() {
        u.add_term(ExponentVec::new(vec![(m - i - j) as u32]), c.clone());
    }
    let mut v = MultiPoly::zero(1);
    for (j, c) in cof.iter().skip(m - i + 1).enumerate() {
        v.add_term(ExponentVec::new(vec![(n - i - j) as u32]), c.clone());
    }

    let h = u.mul(f)?.add(&v.mul(g)?)?;
    debug_assert!(h.total_degree().map_or(true, |d| d as usize <= i - 1));
    Ok((u, v, h))
}

fn dense_coeffs(p: &MultiPoly, deg: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); deg + 1];
    for (m, k) in p.terms() {
        c[m[0] as usize] = k.clone();
    }
    c
}

fn coeff_at(c: &[BigRational], k: i64) -> BigRational {
    if k < 0 || k as usize >= c.len() {
        BigRational::zero()
    } else {
        c[k as usize].clone()
    }
}

/// Exact determinant by Gaussian elimination; fine at the sizes used here.
fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let k = m.len();
    debug_assert!(m.iter().all(|r| r.len() == k));
    let mut sign_flip = false;
    let mut acc = BigRational::from_integer(1.into());
    for col in 0..k {
        let pivot = match (col..k).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            sign_flip = !sign_flip;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in (col + 1)..k {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..k {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    if sign_flip {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::parse_poly;
    use crate::exactpoly::ratio::int;

    #[test]
    fn quadratic_times_linear() {
        // f = x^2, g = x + 1: u = 1, v = -(x - 1), h = 1
        let f = parse_poly("x0^2", 1).unwrap();
        let g = parse_poly("x0+1", 1).unwrap();
        let (u, v, h) = subresultant_pair(&f, &g, 1).unwrap();
        assert_eq!(u.to_string(), "1");
        assert_eq!(v.to_string(), "-x0+1");
        assert_eq!(h, MultiPoly::constant(1, int(1)));
    }

    #[test]
    fn degree_drops_below_index() {
        let f = parse_poly("x0^3+1", 1).unwrap();
        let g = parse_poly("x0^2-1", 1).unwrap();
        let (u, v, h) = subresultant_pair(&f, &g, 1).unwrap();
        assert!(h.total_degree().map_or(true, |d| d == 0));
        assert_eq!(u.mul(&f).unwrap().add(&v.mul(&g).unwrap()).unwrap(), h);
        // gcd(f, g) has the root x = -1, so the degree-0 combination is 0
        assert!(h.is_zero());
    }

    #[test]
    fn index_validation() {
        let f = parse_poly("x0^2", 1).unwrap();
        let g = parse_poly("x0+1", 1).unwrap();
        assert!(subresultant_pair(&f, &g, 0).is_err());
        assert!(subresultant_pair(&f, &g, 2).is_err());
        assert!(subresultant_pair(&g, &f, 1).is_err());
        assert!(subresultant_pair(&f, &MultiPoly::zero(1), 1).is_err());
        let bivariate = parse_poly("x0+x1", 2).unwrap();
        assert!(subresultant_pair(&bivariate, &bivariate, 1).is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![
            vec![int(2), int(-1), int(3)],
            vec![int(0), int(5), int(1)],
            vec![int(4), int(1), int(-2)],
        ];
        // cofactor expansion along the first row: 2*(-11) + 1*(-4) + 3*(-20)
        assert_eq!(det(m), int(-86));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det(singular), int(0));
    }
}
