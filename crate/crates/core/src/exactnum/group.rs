use core::fmt::Debug;

/// An element of an abelian group written multiplicatively, with a total
/// order used only to sort multisets canonically.
///
/// Parameters, L-factor identities and the classifiers are generic over this
/// trait so that the same code runs on [`Cyclo`](super::Cyclo) values, on the
/// lighter [`RootOfUnity`](super::RootOfUnity) representation used by the
/// enumeration harness, and on exponent bookkeeping types.
pub trait GroupElement: Clone + Ord + Debug {
    fn times(&self, rhs: &Self) -> Self;

    /// Group inverse. Callers guarantee [`is_invertible`](Self::is_invertible).
    fn inverse(&self) -> Self;

    fn is_identity(&self) -> bool;

    /// Whether the value is a group element at all (a field zero is not).
    fn is_invertible(&self) -> bool {
        true
    }

    /// The identity of the group `self` lives in.
    fn identity_like(&self) -> Self {
        self.times(&self.inverse())
    }

    fn divide(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse())
    }

    fn power(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.identity_like();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.times(&sq);
            }
        }
        acc
    }
}
