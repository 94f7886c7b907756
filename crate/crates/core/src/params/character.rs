use core::fmt;

use crate::exactnum::{GroupElement, RootOfUnity};

/// A character in a cyclic model group: `chi = g^exponent` for a generator
/// `g` of order `modulus`, stored reduced to its exact order.
///
/// The `ramified` flag is bookkeeping for the local case analyses. Products
/// are flagged ramified when either factor is, except that the trivial
/// character is always unramified.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbstractCharacter {
    value: RootOfUnity,
    ramified: bool,
}

impl AbstractCharacter {
    pub fn new(modulus: u64, exponent: i64, ramified: bool) -> Self {
        let value = RootOfUnity::new(modulus, exponent);
        Self {
            value,
            ramified: ramified && !value.is_identity(),
        }
    }

    pub fn trivial() -> Self {
        Self::new(1, 0, false)
    }

    /// Exact order of the character.
    pub fn order(&self) -> u64 {
        self.value.order()
    }

    pub fn exponent(&self) -> u64 {
        self.value.exponent()
    }

    pub fn is_ramified(&self) -> bool {
        self.ramified
    }

    pub fn is_trivial(&self) -> bool {
        self.value.is_identity()
    }
}

impl GroupElement for AbstractCharacter {
    fn times(&self, rhs: &Self) -> Self {
        let value = self.value.times(&rhs.value);
        Self {
            value,
            ramified: (self.ramified || rhs.ramified) && !value.is_identity(),
        }
    }

    fn inverse(&self) -> Self {
        Self {
            value: self.value.inverse(),
            ramified: self.ramified,
        }
    }

    fn is_identity(&self) -> bool {
        self.value.is_identity()
    }

    fn identity_like(&self) -> Self {
        Self::trivial()
    }
}

impl fmt::Debug for AbstractCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        write!(
            f,
            "chi[{}^{}{}]",
            self.value.order(),
            self.value.exponent(),
            if self.ramified { ", ram" } else { "" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_reduce() {
        let mu = AbstractCharacter::new(10, 1, true);
        assert_eq!(mu.order(), 10);
        assert_eq!(mu.power(2).order(), 5);
        assert_eq!(mu.power(10), AbstractCharacter::trivial());
        assert!(!mu.power(10).is_ramified());
        assert!(mu.power(3).is_ramified());
    }
}
