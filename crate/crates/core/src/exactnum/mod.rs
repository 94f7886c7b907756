//! Exact arithmetic in cyclotomic fields, Galois automorphisms and abelian
//! number-field descriptors.

pub mod arith;
mod cyclo;
mod field;
mod group;
mod poly;
mod root;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use cyclo::Cyclo;
pub use field::{field_of, NumberFieldDesc};
pub use group::GroupElement;
pub use root::RootOfUnity;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("automorphism index {k} is not coprime to conductor {conductor}")]
    NotCoprime { k: u64, conductor: u64 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {conductor} needs {expected} coefficients, got {found}")]
    CoefficientLength {
        conductor: u64,
        expected: usize,
        found: usize,
    },
    #[error("malformed rational {0:?}")]
    BadRational(alloc::string::String),
}

/// `zeta_n^k` in canonical form.
pub fn cyclo_make(n: u64, k: i64) -> Cyclo {
    Cyclo::root_of_unity(n, k)
}

/// Parses `[+-]digits[/digits]` with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::BadRational(s.into());
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        _ => (1, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num * sign, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_grammar() {
        assert_eq!(parse_rational("2/3").unwrap(), Rational::new(2.into(), 3.into()));
        assert_eq!(parse_rational("-4/6").unwrap(), Rational::new((-2).into(), 3.into()));
        assert_eq!(parse_rational("+7").unwrap(), Rational::from_integer(7.into()));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
        for bad in ["", "-", "1/0", "1/-2", "1.5", " 1", "a", "1/", "/2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }
}
