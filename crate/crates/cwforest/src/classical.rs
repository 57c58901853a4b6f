//! The four classical properties of the Calkin-Wilf tree, the `(1,1)`
//! forest rooted at 1: vertex lookup by address, the Newman successor,
//! the continued-fraction row formula, and the denominator chain.

use num_bigint::BigUint;
use num_traits::One;

use crate::forest::{self, ForestConfig, ForestError, TreeAddress};
use crate::rational::Rational;

fn cw_config() -> ForestConfig {
    ForestConfig::new(1, 1).unwrap()
}

/// The entry `c(n, i)` of the Calkin-Wilf tree.
pub fn cw_vertex(addr: &TreeAddress) -> Rational {
    forest::vertex_at(cw_config(), &Rational::one(), addr)
}

/// Newman's map `q -> 1/(2*floor(q) + 1 - q)`, which sends each row entry
/// to the next entry in its row. Defined on all positive rationals; the
/// last entry of row n maps to `1/(n+2)`, the first entry of row n+1.
pub fn newman_successor(q: &Rational) -> Rational {
    let floor = q.floor();
    let (a, b) = (q.numer(), q.denom());
    // (2*floor + 1) - a/b = ((2*floor + 1)*b - a) / b, positive since the
    // fractional part of q is below 1
    let d = (BigUint::from(2u32) * floor + BigUint::one()) * b - a;
    Rational::new(b.clone(), d).unwrap()
}

/// Row number of `q` in the Calkin-Wilf tree: the coefficient sum of its
/// continued fraction, minus one.
pub fn cw_row_of(q: &Rational) -> BigUint {
    let sum: BigUint = q.continued_fraction().into_iter().sum();
    sum - BigUint::one()
}

/// Checks row `n` of the Calkin-Wilf tree for the denominator-numerator
/// chain: `c(n,1) = 1/(n+1)`, `c(n,2^n) = n+1`, and each entry's
/// denominator equals the next entry's numerator.
pub fn check_denominator_chain(n: u32) -> Result<bool, ForestError> {
    let row = forest::row(cw_config(), &Rational::one(), n)?;
    let edge = BigUint::from(n + 1);
    let first = row.first().unwrap();
    let last = row.last().unwrap();
    if first.numer() != &BigUint::one() || first.denom() != &edge {
        return Ok(false);
    }
    if last.numer() != &edge || last.denom() != &BigUint::one() {
        return Ok(false);
    }
    Ok(row.windows(2).all(|w| w[0].denom() == w[1].numer()))
}
