use core::fmt;

use super::arith::{gcd, lcm, residue};
use super::group::GroupElement;
use super::Cyclo;

/// A root of unity `exp(2 pi i * k / n)`, stored as the reduced fraction
/// `k / n` in `[0, 1)`.
///
/// This is the subgroup of `Cyclo` units that the enumeration harness walks.
/// Group operations are fraction arithmetic, so exhaustive sweeps stay cheap;
/// [`Cyclo::from`] embeds a value back into the field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    // field order gives the sort key (order, numerator)
    order: u64,
    k: u64,
}

impl RootOfUnity {
    pub const ONE: Self = Self { order: 1, k: 0 };

    /// `zeta_n^k`.
    pub fn new(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order zero");
        let k = residue(k, n);
        let g = gcd(k, n);
        Self {
            order: n / g,
            k: k / g,
        }
    }

    /// Exact multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent of `zeta_order`, coprime to the order.
    pub fn exponent(&self) -> u64 {
        self.k
    }

    /// All roots of unity whose order divides `n`, in the order `k = 0..n`.
    pub fn all_dividing(n: u64) -> impl Iterator<Item = Self> {
        (0..n).map(move |k| Self::new(n, k as i64))
    }

    /// All roots of unity of order at most `n`, sorted by (order, exponent).
    pub fn all_up_to(n: u64) -> impl Iterator<Item = Self> {
        (1..=n).flat_map(|m| {
            (0..m)
                .filter(move |&k| gcd(k, m) == 1)
                .map(move |k| Self { order: m, k })
        })
    }

    /// The `r` solutions of `x^r = self`.
    pub fn roots(&self, r: u64) -> impl Iterator<Item = Self> + '_ {
        // x = (k/n + j)/r = (k + j n) / (r n)
        (0..r).map(move |j| Self::new(r * self.order, (self.k + j * self.order) as i64))
    }

    /// Field automorphism `zeta -> zeta^a` restricted to roots of unity.
    pub fn galois(&self, a: i64) -> Self {
        Self::new(self.order, (self.k as i64).wrapping_mul(a.rem_euclid(self.order as i64)))
    }
}

impl GroupElement for RootOfUnity {
    fn times(&self, rhs: &Self) -> Self {
        let n = lcm(self.order, rhs.order);
        let k = self.k * (n / self.order) + rhs.k * (n / rhs.order);
        Self::new(n, (k % n) as i64)
    }

    fn inverse(&self) -> Self {
        Self::new(self.order, -(self.k as i64))
    }

    fn is_identity(&self) -> bool {
        self.order == 1
    }

    fn identity_like(&self) -> Self {
        Self::ONE
    }

    fn power(&self, e: i64) -> Self {
        let k = (i128::from(self.k as i64) * i128::from(e)).rem_euclid(i128::from(self.order));
        Self::new(self.order, k as i64)
    }
}

impl From<RootOfUnity> for Cyclo {
    fn from(r: RootOfUnity) -> Self {
        Cyclo::root_of_unity(r.order, r.k as i64)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => f.write_str("1"),
            2 => f.write_str("-1"),
            n => write!(f, "zeta{n}^{}", self.k),
        }
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_order() {
        assert_eq!(RootOfUnity::new(10, 2), RootOfUnity::new(5, 1));
        assert_eq!(RootOfUnity::new(4, 2).order(), 2);
        assert_eq!(RootOfUnity::new(6, -1), RootOfUnity::new(6, 5));
        assert!(RootOfUnity::new(7, 14).is_identity());
    }

    #[test]
    fn counts() {
        assert_eq!(RootOfUnity::all_up_to(12).count(), 46);
        assert_eq!(RootOfUnity::all_dividing(60).count(), 60);
    }

    #[test]
    fn products_and_roots() {
        let a = RootOfUnity::new(10, 1);
        assert_eq!(a.times(&a.power(9)), RootOfUnity::ONE);
        assert_eq!(a.power(-3), RootOfUnity::new(10, 7));
        for r in a.roots(3) {
            assert_eq!(r.power(3), a);
        }
        assert_eq!(a.galois(3), RootOfUnity::new(10, 3));
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let a = RootOfUnity::new(12, 5);
        let b = RootOfUnity::new(20, 3);
        let lhs = Cyclo::from(a.times(&b));
        let rhs = &Cyclo::from(a) * &Cyclo::from(b);
        assert_eq!(lhs, rhs);
    }
}
