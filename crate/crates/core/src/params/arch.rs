use core::fmt;

use num_traits::Zero;

use super::Param;
use crate::exactnum::{GroupElement, Rational};

/// The character `z -> (z/|z|)^m |z|^(2s)` of `C^*`, recorded as `(m, 2s)`.
///
/// Characters multiply by adding exponents, so the group law here is
/// addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArchCharacter {
    pub m: i64,
    pub two_s: Rational,
}

/// Restriction to `C^*` of an archimedean parameter, as a multiset of
/// characters.
pub type ArchParam = Param<ArchCharacter>;

impl ArchCharacter {
    pub fn new(m: i64, two_s: Rational) -> Self {
        Self { m, two_s }
    }

    /// `(z/|z|)^m`.
    pub fn angular(m: i64) -> Self {
        Self::new(m, Rational::zero())
    }

    /// `|z|^(2s)`.
    pub fn radial(two_s: Rational) -> Self {
        Self::new(0, two_s)
    }

    pub fn is_unitary(&self) -> bool {
        self.two_s.is_zero()
    }
}

impl GroupElement for ArchCharacter {
    fn times(&self, rhs: &Self) -> Self {
        Self::new(self.m + rhs.m, &self.two_s + &rhs.two_s)
    }

    fn inverse(&self) -> Self {
        Self::new(-self.m, -&self.two_s)
    }

    fn is_identity(&self) -> bool {
        self.m == 0 && self.two_s.is_zero()
    }

    fn identity_like(&self) -> Self {
        Self::angular(0)
    }
}

impl fmt::Debug for ArchCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, 2s={})", self.m, self.two_s)
    }
}

/// Whether `lhs` is a one-dimensional twist of `rhs`: `lhs = rhs (x) chi`
/// for a single character `chi`.
pub fn equal_up_to_twist(lhs: &ArchParam, rhs: &ArchParam) -> bool {
    let n = lhs.dimension();
    if n != rhs.dimension() {
        return false;
    }
    // chi is forced to be the difference of the means
    let sum = |p: &ArchParam| {
        p.roots()
            .iter()
            .fold(ArchCharacter::angular(0), |acc, x| acc.times(x))
    };
    let diff = sum(lhs).divide(&sum(rhs));
    let count = n as i64;
    if diff.m % count != 0 {
        return false;
    }
    let chi = ArchCharacter::new(
        diff.m / count,
        diff.two_s / Rational::from_integer(count.into()),
    );
    rhs.twist(&chi).map(|t| t == *lhs).unwrap_or(false)
}
