//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by grevlex order, so iteration is
//! grevlex-ascending and the leading term is the last entry. No zero
//! coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exponent::ExponentVec;
use super::ratio;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<ExponentVec, BigRational>,
    nvars: usize,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
            nvars,
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVec::zeros(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVec::unit(nvars, index), BigRational::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVec, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in grevlex-ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in grevlex-descending order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&ExponentVec, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &ExponentVec) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVec, &BigRational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&ExponentVec> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// `Some(d)` if nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.total_degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Add `c * x^m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: ExponentVec, c: BigRational) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
            nvars: self.nvars,
        }
    }

    /// Exact product, distributing and merging term by term.
    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
            nvars: self.nvars,
        }
    }

    /// Multiply by the single term `c * x^m`.
    pub fn mul_term(&self, m: &ExponentVec, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
            nvars: self.nvars,
        }
    }

    /// Divide by the leading coefficient; no-op on zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Multiply by the least common multiple of the coefficient denominators,
    /// giving integer coefficients.
    pub fn cleared_denominators(&self) -> MultiPoly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        self.scale(&BigRational::from_integer(l))
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    if v.is_zero() {
                        term = BigRational::zero();
                        break;
                    }
                    term *= ratio::signed_pow(v, e as i64);
                }
            }
            acc += term;
        }
        acc
    }

    /// Map each exponent vector, merging coefficients. Used to embed a
    /// polynomial into a larger ring or to relabel variables.
    pub fn map_monomials<F>(&self, nvars: usize, f: F) -> MultiPoly
    where
        F: Fn(&ExponentVec) -> ExponentVec,
    {
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text format: grevlex-descending terms like `-21/4*x0^4*x1^2`, joined by
/// `+`/`-`, variables `x0..xN`. `Display` and [`parse_poly`] round-trip.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let neg = c < &BigRational::zero();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if m.is_constant() {
                write!(f, "{}", ratio::ratio_string(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", ratio::ratio_string(&abs))?;
                }
                let mut first = true;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{i}")?;
                    } else {
                        write!(f, "x{i}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parse the text format produced by `Display`.
pub fn parse_poly(input: &str, nvars: usize) -> Result<MultiPoly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = MultiPoly::zero(nvars);
    // split into signed chunks
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut pieces: Vec<&str> = Vec::new();
    for (idx, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && idx > start {
            pieces.push(&s[start..idx]);
            start = idx;
        }
    }
    pieces.push(&s[start..]);
    for piece in pieces {
        let (sign, body) = match piece.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, piece.strip_prefix('+').unwrap_or(piece)),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {input:?}")));
        }
        let mut coeff = ratio::int(sign);
        let mut exps = vec![0u32; nvars];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in {piece:?}")));
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (var, exp) = match rest.split_once('^') {
                    Some((v, e)) => (v, e),
                    None => (rest, "1"),
                };
                let v: usize = var
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                let e: u32 = exp
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                if v >= nvars {
                    return Err(Error::Parse(format!(
                        "variable x{v} out of range for {nvars} variables"
                    )));
                }
                exps[v] += e;
            } else {
                // rational coefficient; allow a separate /q factor glued on
                coeff *= ratio::parse_ratio(factor)?;
            }
        }
        out.add_term(ExponentVec::new(exps), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio::{int, ratio};

    fn ev(v: &[u32]) -> ExponentVec {
        ExponentVec::new(v.to_vec())
    }

    #[test]
    fn difference_of_squares() {
        let p = parse_poly("x0+x1", 2).unwrap();
        let q = parse_poly("x0-x1", 2).unwrap();
        assert_eq!(p.mul(&q).unwrap(), parse_poly("x0^2-x1^2", 2).unwrap());
    }

    #[test]
    fn hyperbolic_factor_product() {
        let f1 = parse_poly("x0^2-1/4*x1^2", 2).unwrap();
        let f2 = parse_poly("x0^2-x1^2", 2).unwrap();
        let f3 = parse_poly("x0^2-4*x1^2", 2).unwrap();
        let prod = f1.mul(&f2).unwrap().mul(&f3).unwrap();
        assert_eq!(
            prod,
            parse_poly("x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6", 2).unwrap()
        );
        assert_eq!(prod.to_string(), "x0^6-21/4*x0^4*x1^2+21/4*x0^2*x1^4-x1^6");
    }

    #[test]
    fn nvars_mismatch_is_an_error() {
        let p = MultiPoly::var(2, 0);
        let q = MultiPoly::var(3, 0);
        assert!(matches!(p.mul(&q), Err(Error::NvarsMismatch(2, 3))));
        assert!(p.add(&q).is_err());
    }

    #[test]
    fn no_zero_terms_survive() {
        let p = parse_poly("x0^2-x1^2", 2).unwrap();
        let q = parse_poly("x1^2-x0^2", 2).unwrap();
        let s = p.add(&q).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn leading_term_is_grevlex_max() {
        let p = parse_poly("x0^4*x1^8+x0^6*x1^6", 2).unwrap();
        assert_eq!(p.leading_monomial().unwrap(), &ev(&[6, 6]));
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(MultiPoly::constant(2, ratio(-3, 7)).to_string(), "-3/7");
        assert_eq!(MultiPoly::var(3, 1).to_string(), "x1");
        let p = MultiPoly::from_terms(2, [(ev(&[1, 1]), int(-1)), (ev(&[0, 0]), int(5))]);
        assert_eq!(p.to_string(), "-x0*x1+5");
        assert_eq!(parse_poly(&p.to_string(), 2).unwrap(), p);
    }

    #[test]
    fn eval_exact() {
        let p = parse_poly("x0^2-4*x1^2", 2).unwrap();
        assert_eq!(p.eval(&[int(2), int(1)]), int(0));
        assert_eq!(p.eval(&[ratio(1, 2), int(1)]), ratio(-15, 4));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_poly("", 2).is_err());
        assert!(parse_poly("x5", 2).is_err());
        assert!(parse_poly("x0^a", 2).is_err());
        assert!(parse_poly("3**x0", 2).is_err());
        assert!(parse_poly("+", 2).is_err());
    }
}
