//! Reduced positive rationals over arbitrary-precision integers.
//!
//! Only the positive rationals exist in this system: both numerator and
//! denominator are at least 1 and are stored coprime. Row entries grow
//! exponentially with tree depth, so fixed-width integers are not an option.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("numerator must be positive")]
    ZeroNumerator,
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("invalid rational literal {0:?}")]
    Parse(String),
}

/// A positive rational number `a/b` with `gcd(a, b) = 1` and `a, b >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigUint,
    denom: BigUint,
}

impl Rational {
    /// Builds the reduced form of `n/d`. Rejects zero on either side.
    pub fn new(n: BigUint, d: BigUint) -> Result<Rational, RationalError> {
        if n.is_zero() {
            return Err(RationalError::ZeroNumerator);
        }
        if d.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        let g = n.gcd(&d);
        Ok(Rational {
            numer: &n / &g,
            denom: &d / &g,
        })
    }

    pub fn from_u64(n: u64, d: u64) -> Result<Rational, RationalError> {
        Rational::new(BigUint::from(n), BigUint::from(d))
    }

    pub fn one() -> Rational {
        Rational {
            numer: BigUint::one(),
            denom: BigUint::one(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    /// `max(numerator, denominator)` of the reduced form.
    pub fn height(&self) -> BigUint {
        self.numer.clone().max(self.denom.clone())
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// Exact integer part, i.e. `numer div denom`.
    pub fn floor(&self) -> BigUint {
        &self.numer / &self.denom
    }

    /// Swaps numerator and denominator.
    pub fn reciprocal(&self) -> Rational {
        Rational {
            numer: self.denom.clone(),
            denom: self.numer.clone(),
        }
    }

    /// Product of two positive rationals, reduced.
    pub fn mul(&self, other: &Rational) -> Rational {
        // unwrap is fine: positives are closed under multiplication
        Rational::new(&self.numer * &other.numer, &self.denom * &other.denom).unwrap()
    }

    /// Compares `self` with the integer `k` exactly.
    pub fn cmp_integer(&self, k: &BigUint) -> Ordering {
        self.numer.cmp(&(&self.denom * k))
    }

    /// Compares `self` with `1/k` exactly (`k >= 1`).
    pub fn cmp_inverse_integer(&self, k: &BigUint) -> Ordering {
        (&self.numer * k).cmp(&self.denom)
    }

    /// Euclidean continued-fraction expansion `[a0, a1, ..., ak]`.
    ///
    /// `a0 = floor(q) >= 0`, every later coefficient is >= 1, and the last
    /// coefficient is >= 2 unless the expansion is exactly `[1]` (q = 1).
    /// This is the short canonical form, the direct Euclidean output.
    pub fn continued_fraction(&self) -> Vec<BigUint> {
        let mut coeffs = Vec::new();
        let mut a = self.numer.clone();
        let mut b = self.denom.clone();
        loop {
            let (q, r) = a.div_rem(&b);
            coeffs.push(q);
            if r.is_zero() {
                break;
            }
            a = b;
            b = r;
        }
        coeffs
    }

    /// Evaluates a continued fraction back to a rational. Used as the
    /// round-trip counterpart of [`Rational::continued_fraction`].
    pub fn from_continued_fraction(coeffs: &[BigUint]) -> Result<Rational, RationalError> {
        let (last, init) = coeffs.split_last().ok_or(RationalError::ZeroNumerator)?;
        let mut n = last.clone();
        let mut d = BigUint::one();
        if n.is_zero() {
            return Err(RationalError::ZeroNumerator);
        }
        for a in init.iter().rev() {
            // q <- a + 1/q
            let new_n = a * &n + &d;
            d = n;
            n = new_n;
        }
        Rational::new(n, d)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl fmt::Display for Rational {
    /// Renders `a/b`, or plain `a` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    /// Parses `"a/b"` or `"a"` (read as `a/1`). Signs, spaces, and zeros
    /// are rejected.
    fn from_str(s: &str) -> Result<Rational, RationalError> {
        let err = || RationalError::Parse(s.to_string());
        let (ns, ds) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if ns.is_empty() || ds.is_empty() {
            return Err(err());
        }
        if !ns.bytes().all(|c| c.is_ascii_digit()) || !ds.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let n = BigUint::from_str(ns).map_err(|_| err())?;
        let d = BigUint::from_str(ds).map_err(|_| err())?;
        Rational::new(n, d).map_err(|_| err())
    }
}
