//! Local parameters and their functorial operations.
//!
//! A [`Param`] is a finite multiset of group elements, kept sorted so that
//! multiset equality is vector equality. With [`Cyclo`] entries it is an
//! unramified parameter (the Satake inverse roots); with [`ArchCharacter`]
//! entries it tracks archimedean exponents; with [`AbstractCharacter`]
//! entries it models principal series built from characters of a cyclic
//! group.

mod arch;
mod character;
mod steinberg;

use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::{Cyclo, GroupElement};

pub use arch::{equal_up_to_twist, ArchCharacter, ArchParam};
pub use character::AbstractCharacter;
pub use steinberg::{steinberg_sym, SteinbergBlock, SteinbergParam};

/// An unramified local parameter: the multiset of Satake inverse roots.
pub type UnramifiedParam = Param<Cyclo>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("a parameter needs at least one entry")]
    Empty,
    #[error("parameter entries must be invertible")]
    NotInvertible,
    #[error("expected a parameter of dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("operation needs dimension at least {min}, got {found}")]
    DimensionTooSmall { min: usize, found: usize },
    #[error("Steinberg blocks must have size at least 1")]
    EmptyBlock,
    #[error("unsupported Steinberg shape: expected a single 2-dimensional block")]
    UnsupportedShape,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param<S> {
    roots: Vec<S>,
}

impl<S: GroupElement> Param<S> {
    pub fn new(mut roots: Vec<S>) -> Result<Self, ParamError> {
        if roots.is_empty() {
            return Err(ParamError::Empty);
        }
        if !roots.iter().all(GroupElement::is_invertible) {
            return Err(ParamError::NotInvertible);
        }
        roots.sort();
        Ok(Self { roots })
    }

    /// The two-dimensional parameter `{a, b}`.
    pub fn pair(a: S, b: S) -> Result<Self, ParamError> {
        Self::new(alloc::vec![a, b])
    }

    /// `{a, w/a}`: the parameter with first inverse root `a` and central
    /// value `w`.
    pub fn with_central(a: S, w: &S) -> Result<Self, ParamError> {
        if !a.is_invertible() || !w.is_invertible() {
            return Err(ParamError::NotInvertible);
        }
        let b = w.divide(&a);
        Self::pair(a, b)
    }

    fn from_unsorted(mut roots: Vec<S>) -> Self {
        roots.sort();
        Self { roots }
    }

    pub fn roots(&self) -> &[S] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<S> {
        self.roots
    }

    pub fn dimension(&self) -> usize {
        self.roots.len()
    }

    /// Product of all entries (the determinant).
    pub fn central(&self) -> S {
        let mut it = self.roots.iter();
        let first = it.next().expect("nonempty").clone();
        it.fold(first, |acc, x| acc.times(x))
    }

    /// The two entries of a dimension-2 parameter, in canonical order.
    pub fn as_pair(&self) -> Result<(&S, &S), ParamError> {
        match self.roots.as_slice() {
            [a, b] => Ok((a, b)),
            _ => Err(self.wrong_dimension(2)),
        }
    }

    fn wrong_dimension(&self, expected: usize) -> ParamError {
        ParamError::WrongDimension {
            expected,
            found: self.dimension(),
        }
    }

    /// `sym^m {a, b} = {a^j b^(m-j) : 0 <= j <= m}`.
    pub fn sym_power(&self, m: u32) -> Result<Self, ParamError> {
        let (a, b) = self.as_pair()?;
        let mut out = Vec::with_capacity(m as usize + 1);
        let mut apow = a.identity_like();
        for j in 0..=m {
            out.push(apow.times(&b.power(i64::from(m - j))));
            apow = apow.times(a);
        }
        Ok(Self::from_unsorted(out))
    }

    /// `Ad {a, b} = {a/b, 1, b/a}`.
    pub fn adjoint(&self) -> Result<Self, ParamError> {
        let (a, b) = self.as_pair()?;
        let r = a.divide(b);
        Ok(Self::from_unsorted(alloc::vec![
            r.inverse(),
            a.identity_like(),
            r
        ]))
    }

    /// Rankin-Selberg product: all pairwise products.
    pub fn tensor(&self, other: &Self) -> Self {
        let out = self
            .roots
            .iter()
            .flat_map(|x| other.roots.iter().map(move |y| x.times(y)))
            .collect();
        Self::from_unsorted(out)
    }

    /// Multiplies every entry by `x`.
    pub fn twist(&self, x: &S) -> Result<Self, ParamError> {
        if !x.is_invertible() {
            return Err(ParamError::NotInvertible);
        }
        Ok(Self::from_unsorted(
            self.roots.iter().map(|r| r.times(x)).collect(),
        ))
    }

    /// Multiset union.
    pub fn isobaric_sum(&self, other: &Self) -> Self {
        let mut out = self.roots.clone();
        out.extend(other.roots.iter().cloned());
        Self::from_unsorted(out)
    }

    /// Inverts every entry (the contragredient).
    pub fn dual(&self) -> Self {
        Self::from_unsorted(self.roots.iter().map(GroupElement::inverse).collect())
    }

    /// Products over unordered pairs of distinct indices.
    pub fn ext_square(&self) -> Result<Self, ParamError> {
        let n = self.dimension();
        if n < 2 {
            return Err(ParamError::DimensionTooSmall { min: 2, found: n });
        }
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.roots[i].times(&self.roots[j]));
            }
        }
        Ok(Self::from_unsorted(out))
    }

    pub fn multiset_equal(&self, other: &Self) -> bool {
        self.roots == other.roots
    }

    /// Entries of `self` not matched in `other` and vice versa, counted with
    /// multiplicity.
    pub fn difference(&self, other: &Self) -> (Vec<S>, Vec<S>) {
        let (mut i, mut j) = (0, 0);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let (a, b) = (&self.roots, &other.roots);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    left.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    right.push(b[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        left.extend(a[i..].iter().cloned());
        right.extend(b[j..].iter().cloned());
        (left, right)
    }

    /// Number of entries equal to `x`.
    pub fn multiplicity(&self, x: &S) -> usize {
        self.roots.iter().filter(|r| *r == x).count()
    }

    pub fn map<T: GroupElement>(&self, f: impl FnMut(&S) -> T) -> Param<T> {
        Param::from_unsorted(self.roots.iter().map(f).collect())
    }
}

impl<S: fmt::Debug> fmt::Debug for Param<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.roots.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Rational, RootOfUnity};

    fn q(n: i64, d: i64) -> Cyclo {
        Cyclo::from_rational(&Rational::new(n.into(), d.into()))
    }

    fn int(v: i64) -> Cyclo {
        Cyclo::from_int(v)
    }

    fn z(n: u64, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    fn p(v: &[Cyclo]) -> UnramifiedParam {
        Param::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sym_power_examples() {
        let ab = p(&[int(2), int(3)]);
        assert_eq!(ab.sym_power(1).unwrap(), ab);
        assert_eq!(
            p(&[int(2), int(1)]).sym_power(3).unwrap(),
            p(&[int(8), int(4), int(2), int(1)])
        );
        let s5 = p(&[z(10, 1), z(10, -1)]).sym_power(5).unwrap();
        let expect = p(&[z(10, 5), z(10, 3), z(10, 1), z(10, -1), z(10, -3), z(10, -5)]);
        assert_eq!(s5, expect);
        assert_eq!(s5.multiplicity(&int(-1)), 2);
        assert_eq!(ab.sym_power(0).unwrap(), p(&[int(1)]));
    }

    #[test]
    fn sym_power_needs_pairs() {
        assert_eq!(
            p(&[int(1)]).sym_power(2),
            Err(ParamError::WrongDimension { expected: 2, found: 1 })
        );
    }

    #[test]
    fn adjoint_examples() {
        let a = z(7, 2);
        assert_eq!(p(&[a.clone(), a]).adjoint().unwrap(), p(&[int(1), int(1), int(1)]));
        assert_eq!(
            p(&[z(10, 1), z(10, -1)]).adjoint().unwrap(),
            p(&[z(5, 1), int(1), z(5, -1)])
        );
        assert_eq!(
            p(&[int(2), int(1)]).adjoint().unwrap(),
            p(&[int(2), int(1), q(1, 2)])
        );
        assert!(p(&[int(2), int(1), int(3)]).adjoint().is_err());
    }

    #[test]
    fn tensor_examples() {
        let x = z(3, 1);
        let pp = p(&[int(2), z(5, 1)]);
        assert_eq!(p(std::slice::from_ref(&x)).tensor(&pp), pp.twist(&x).unwrap());
        let i = z(4, 1);
        let mi = z(4, 3);
        assert_eq!(
            p(&[int(-1), int(1), int(-1)]).tensor(&p(&[i.clone(), mi.clone()])),
            p(&[mi.clone(), i.clone(), i.clone(), mi.clone(), mi, i])
        );
        assert_eq!(
            p(&[int(2), int(1)]).tensor(&p(&[int(3), int(1)])),
            p(&[int(6), int(2), int(3), int(1)])
        );
    }

    #[test]
    fn twist_examples() {
        let pp = p(&[z(9, 2), int(3)]);
        assert_eq!(pp.twist(&int(1)).unwrap(), pp);
        let (a, b) = (z(8, 1), z(8, 3));
        let zz = z(3, 1);
        assert_eq!(
            p(&[a.clone(), b.clone()]).twist(&zz).unwrap(),
            p(&[&zz * &a, &zz * &b])
        );
        assert_eq!(
            p(&[z(5, 1), int(1), z(5, -1)]).twist(&z(5, 1)).unwrap(),
            p(&[z(5, 2), z(5, 1), int(1)])
        );
        assert_eq!(pp.twist(&Cyclo::zero()), Err(ParamError::NotInvertible));
    }

    #[test]
    fn sums_and_duals() {
        let (a, b) = (z(12, 5), int(4));
        assert_eq!(
            p(std::slice::from_ref(&a)).isobaric_sum(&p(std::slice::from_ref(&b))),
            p(&[a, b])
        );
        assert_eq!(p(&[int(2), int(1)]).dual(), p(&[q(1, 2), int(1)]));
        for k in 0..12 {
            let a = z(12, k);
            let s3 = p(&[a.clone(), a.inverse()]).sym_power(3).unwrap();
            assert_eq!(s3.dual(), s3);
        }
    }

    #[test]
    fn ext_square_examples() {
        let (a, b) = (z(5, 2), int(7));
        assert_eq!(p(&[a.clone(), b.clone()]).ext_square().unwrap(), p(&[&a * &b]));
        let e = p(&[int(8), int(4), int(2), int(1)]).ext_square().unwrap();
        assert_eq!(e, p(&[int(32), int(16), int(8), int(8), int(4), int(2)]));
        assert_eq!(e.dimension(), 6);
        assert!(p(&[int(3)]).ext_square().is_err());
    }

    #[test]
    fn multiset_equality() {
        let (a, b) = (z(5, 1), int(2));
        assert!(p(&[a.clone(), b.clone()]).multiset_equal(&p(&[b, a])));
        assert!(!p(&[int(1), int(1)]).multiset_equal(&p(&[int(1)])));
        let lhs = p(&[z(10, 1), z(10, -1)]).sym_power(3).unwrap();
        let rhs = p(&[z(10, 3), z(10, -3)]).sym_power(3).unwrap();
        assert!(lhs.multiset_equal(&rhs));
    }

    #[test]
    fn difference_reports_unmatched() {
        let l = p(&[int(1), int(2), int(2)]);
        let r = p(&[int(2), int(3)]);
        assert_eq!(l.difference(&r), (alloc::vec![int(1), int(2)], alloc::vec![int(3)]));
    }

    #[test]
    fn new_rejects_empty_and_zero() {
        assert_eq!(Param::<Cyclo>::new(alloc::vec![]), Err(ParamError::Empty));
        assert_eq!(Param::new(alloc::vec![Cyclo::zero()]), Err(ParamError::NotInvertible));
    }

    #[test]
    fn root_of_unity_backend_agrees() {
        let a = RootOfUnity::new(12, 5);
        let b = RootOfUnity::new(20, 7);
        let pr = Param::pair(a, b).unwrap();
        let pc = Param::pair(Cyclo::from(a), Cyclo::from(b)).unwrap();
        let via_roots = pr.sym_power(4).unwrap().map(|r| Cyclo::from(*r));
        assert_eq!(via_roots, pc.sym_power(4).unwrap());
    }
}
