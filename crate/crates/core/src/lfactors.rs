//! Local Euler factors and the local L-factor identities.
//!
//! Factors are compared structurally, as multisets of inverse roots. The
//! truncated Dirichlet expansion is kept as an independent check of that
//! comparison. The residue-field size `q` is carried for display only: the
//! identities below do not depend on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactnum::{Cyclo, GroupElement};
use crate::params::{Param, ParamError, UnramifiedParam};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LFactorError {
    #[error("residue field size must be at least 2, got {0}")]
    BadQ(u64),
    #[error("factors over different residue fields ({0} and {1})")]
    MismatchedQ(u64, u64),
}

/// `prod_i (1 - g_i q^-s)^-1` for the inverse roots `g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalLFactor {
    roots: UnramifiedParam,
    q: u64,
}

pub fn local_l_factor(p: &UnramifiedParam, q: u64) -> Result<LocalLFactor, LFactorError> {
    if q < 2 {
        return Err(LFactorError::BadQ(q));
    }
    Ok(LocalLFactor {
        roots: p.clone(),
        q,
    })
}

impl LocalLFactor {
    pub fn inverse_roots(&self) -> &UnramifiedParam {
        &self.roots
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.roots.dimension()
    }

    /// Product of Euler factors at the same place.
    pub fn product(&self, other: &Self) -> Result<Self, LFactorError> {
        if self.q != other.q {
            return Err(LFactorError::MismatchedQ(self.q, other.q));
        }
        Ok(Self {
            roots: self.roots.isobaric_sum(&other.roots),
            q: self.q,
        })
    }

    /// Coefficients of `q^(-ks)` for `k = 0..=terms`: the complete
    /// homogeneous symmetric polynomials of the inverse roots.
    pub fn dirichlet_coeffs(&self, terms: usize) -> Vec<Cyclo> {
        dirichlet_coeffs(self, terms)
    }
}

pub fn dirichlet_coeffs(l: &LocalLFactor, terms: usize) -> Vec<Cyclo> {
    let mut c = vec![Cyclo::zero(); terms + 1];
    c[0] = Cyclo::one();
    // multiply by (1 - g X)^-1 one root at a time
    for g in l.roots.roots() {
        for k in 1..=terms {
            let step = g * &c[k - 1];
            c[k] = &c[k] + &step;
        }
    }
    c
}

/// Cauchy product of two truncated series, truncated to the shorter length.
pub fn convolve(a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|k| {
            (0..=k).fold(Cyclo::zero(), |acc, i| &acc + &(&a[i] * &b[k - i]))
        })
        .collect()
}

/// Equality of two factors decided from Dirichlet coefficients alone.
///
/// `1/L` is a polynomial of degree `dim`, and it is determined by the series
/// modulo `X^(dim+1)`, so comparing `max(dim)` coefficients suffices.
pub fn factors_agree_by_coeffs(l1: &LocalLFactor, l2: &LocalLFactor) -> bool {
    let t = l1.degree().max(l2.degree());
    l1.dirichlet_coeffs(t) == l2.dirichlet_coeffs(t)
}

/// Outcome of a multiset identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck<S> {
    pub holds: bool,
    pub lhs: Param<S>,
    pub rhs: Param<S>,
    /// An entry present on one side with higher multiplicity than on the
    /// other, when the identity fails.
    pub witness: Option<S>,
}

impl<S: GroupElement> IdentityCheck<S> {
    fn compare(lhs: Param<S>, rhs: Param<S>) -> Self {
        let holds = lhs == rhs;
        let witness = if holds {
            None
        } else {
            let (l, r) = lhs.difference(&rhs);
            l.into_iter().chain(r).next()
        };
        Self {
            holds,
            lhs,
            rhs,
            witness,
        }
    }
}

/// `sym^4(p) (x) p = sym^5(p) + sym^3(p) (x) det(p)`.
pub fn check_clebsch_gordon<S: GroupElement>(
    p: &Param<S>,
) -> Result<IdentityCheck<S>, ParamError> {
    let lhs = p.sym_power(4)?.tensor(p);
    let rhs = p
        .sym_power(5)?
        .isobaric_sum(&p.sym_power(3)?.twist(&p.central())?);
    Ok(IdentityCheck::compare(lhs, rhs))
}

/// `Lambda^2(sym^3 p) = sym^4(p) (x) w + {w^3}` with `w = det(p)`.
pub fn check_lambda2_sym3<S: GroupElement>(
    p: &Param<S>,
) -> Result<IdentityCheck<S>, ParamError> {
    let w = p.central();
    let lhs = p.sym_power(3)?.ext_square()?;
    let rhs = p
        .sym_power(4)?
        .twist(&w)?
        .isobaric_sum(&Param::new(vec![w.power(3)])?);
    Ok(IdentityCheck::compare(lhs, rhs))
}

/// Both sides of the local sym^5 identity for `pi = {a, w/a}` and
/// `pi' = {c, wp/c}`: `sym^5(pi)` and `Ad(pi') (x) pi (x) w^2`.
pub fn si3_sides<S: GroupElement>(
    a: &S,
    w: &S,
    c: &S,
    wp: &S,
) -> Result<(Param<S>, Param<S>), ParamError> {
    let pi = Param::with_central(a.clone(), w)?;
    let pi_prime = Param::with_central(c.clone(), wp)?;
    let lhs = pi.sym_power(5)?;
    let rhs = pi_prime.adjoint()?.tensor(&pi).twist(&w.power(2))?;
    Ok((lhs, rhs))
}

pub fn check_si3_local<S: GroupElement>(a: &S, w: &S, c: &S, wp: &S) -> Result<bool, ParamError> {
    let (lhs, rhs) = si3_sides(a, w, c, wp)?;
    Ok(lhs == rhs)
}
