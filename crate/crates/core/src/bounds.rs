//! Closed-form upper bounds on the real rank of a monomial, and a table
//! generator for comparing them.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::One;

use crate::apolarpoints::count_formula;
use crate::generators::ExponentSeq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsRow {
    pub a: ExponentSeq,
    pub ub_bt: BigUint,
    pub ub_ckov: BigUint,
    pub ub_hm: BigUint,
}

/// Half the difference of shifted exponent products; the bound this crate
/// realizes constructively.
pub fn ub_hm(a: &ExponentSeq) -> BigUint {
    count_formula(a)
}

/// Product of `a_i + min(a)` over all entries except one copy of the minimum.
pub fn ub_ckov(a: &ExponentSeq) -> BigUint {
    let sorted = a.sorted_desc();
    let amin = *sorted.last().expect("nonempty");
    sorted
        .iter()
        .take(sorted.len() - 1)
        .map(|&ai| BigUint::from(ai + amin))
        .product()
}

/// Twice the ceiling of binom(n+d, n) / (n+1) for total degree d.
pub fn ub_bt(a: &ExponentSeq) -> BigUint {
    let n = a.nvars() - 1;
    let d = a.total_degree() as usize;
    let b = binomial(BigUint::from(n + d), BigUint::from(n));
    let denom = BigUint::from(n + 1);
    let ceil = (&b + &denom - BigUint::one()) / &denom;
    BigUint::from(2u32) * ceil
}

pub fn bounds_table(seqs: &[ExponentSeq]) -> Vec<BoundsRow> {
    seqs.iter()
        .map(|a| BoundsRow {
            a: a.clone(),
            ub_bt: ub_bt(a),
            ub_ckov: ub_ckov(a),
            ub_hm: ub_hm(a),
        })
        .collect()
}
