//! Exclusion arguments at places where `pi` is not unramified principal
//! series: Steinberg, dihedral supercuspidal, ramified principal series,
//! archimedean and non-tempered.

use alloc::vec;
use alloc::vec::Vec;

use super::ClassifyError;
use crate::exactnum::{GroupElement, Rational};
use crate::lfactors::si3_sides;
use crate::params::{
    equal_up_to_twist, AbstractCharacter, ArchCharacter, ArchParam, Param, SteinbergParam,
};

/// Both sides of the sym^5 identity when `pi` is special, with `lambda`
/// kept symbolic as an exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergObstruction {
    /// `Ad(lambda' st) (x) (lambda st)`, twisted by `lambda^2`.
    pub left: SteinbergParam,
    /// `sym^5(lambda st)`.
    pub right: SteinbergParam,
    pub isomorphic: bool,
}

impl SteinbergObstruction {
    pub fn verdict(&self) -> &'static str {
        if self.isomorphic {
            "isomorphic"
        } else {
            "never isomorphic"
        }
    }
}

pub fn steinberg_obstruction() -> SteinbergObstruction {
    let pi = SteinbergParam::special(1);
    // Ad kills the twist, so the exponent chosen for lambda' is irrelevant
    let ad = SteinbergParam::special(0).adjoint().expect("special shape");
    let left = ad.tensor(&pi).twist(2);
    let right = pi.sym_power(5).expect("special shape");
    let isomorphic = left == right;
    SteinbergObstruction {
        left,
        right,
        isomorphic,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralReport {
    pub lambda0: AbstractCharacter,
    /// `{lambda0, lambda0 nu, nu}`.
    pub adjoint: Param<AbstractCharacter>,
    pub trivial_multiplicity: usize,
    /// The trivial character inside the adjoint contradicts irreducibility.
    pub contradiction: bool,
}

/// The adjoint of a dihedral supercuspidal parameter whose adjoint is
/// unramified, with `nu` the unramified quadratic character.
///
/// `lambda0` must be unramified of order 1 or 2 (so trivial or `nu`), and
/// `nu` must be nontrivial.
pub fn dihedral_adjoint_check(
    lambda0: AbstractCharacter,
    nu_nontrivial: bool,
) -> Result<DihedralReport, ClassifyError> {
    if lambda0.is_ramified() {
        return Err(ClassifyError::OutOfModel("lambda0 must be unramified"));
    }
    if lambda0.order() > 2 {
        return Err(ClassifyError::OutOfModel("lambda0 must have order 1 or 2"));
    }
    if !nu_nontrivial {
        return Err(ClassifyError::OutOfModel("nu must be the nontrivial quadratic character"));
    }
    let nu = AbstractCharacter::new(2, 1, false);
    let adjoint = Param::new(vec![lambda0, lambda0.times(&nu), nu])?;
    let trivial_multiplicity = adjoint.multiplicity(&AbstractCharacter::trivial());
    Ok(DihedralReport {
        lambda0,
        adjoint,
        trivial_multiplicity,
        contradiction: trivial_multiplicity > 0,
    })
}

/// Relation between the two ramified principal series parameters
/// `{mu, mu^-1}` and `{mu', mu'^-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsRelation {
    /// `mu' = mu`.
    Equal,
    /// `mu' = mu^3`.
    Cube,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedVerdict {
    pub mu_order: u64,
    pub relation: PsRelation,
    pub sym3_match: bool,
    pub si3_holds: bool,
    /// `{mu^3, mu^-3} = {mu^7, mu^-7}`, the reduced form of the sym^5
    /// identity for the cube relation.
    pub reduced_identity: Option<bool>,
    pub allowed: bool,
}

pub fn ramified_ps_constrain(mu_order: u64, relation: PsRelation) -> Result<RamifiedVerdict, ClassifyError> {
    if mu_order == 0 {
        return Err(ClassifyError::ZeroOrder);
    }
    let mu = AbstractCharacter::new(mu_order, 1, true);
    let one = AbstractCharacter::trivial();
    let mu_prime = match relation {
        PsRelation::Equal => mu,
        PsRelation::Cube => mu.power(3),
    };
    let pi = Param::pair(mu, mu.inverse())?;
    let pi_prime = Param::pair(mu_prime, mu_prime.inverse())?;
    let sym3_match = pi.sym_power(3)? == pi_prime.sym_power(3)?;
    let (lhs, rhs) = si3_sides(&mu, &one, &mu_prime, &one)?;
    let si3_holds = lhs == rhs;
    let (reduced_identity, allowed) = match relation {
        PsRelation::Cube => {
            let reduced = Param::pair(mu.power(3), mu.power(-3))? == Param::pair(mu.power(7), mu.power(-7))?;
            (Some(reduced), reduced)
        }
        PsRelation::Equal => (None, si3_holds),
    };
    Ok(RamifiedVerdict {
        mu_order,
        relation,
        sym3_match,
        si3_holds,
        reduced_identity,
        allowed,
    })
}

fn sym5_against_tensor(sigma: &ArchParam) -> (ArchParam, ArchParam) {
    let left = sigma
        .adjoint()
        .expect("dimension 2")
        .tensor(sigma);
    let right = sigma.sym_power(5).expect("dimension 2");
    (left, right)
}

/// Whether `Ad(sigma') (x) sigma` can be a twist of `sym^5(sigma)` when
/// `sigma` restricted to `C^*` is `(z/|z|)^m + (z/|z|)^-m`.
pub fn arch_galois_check(m: i64) -> bool {
    let sigma = Param::pair(ArchCharacter::angular(m), ArchCharacter::angular(-m)).expect("nonempty");
    let (left, right) = sym5_against_tensor(&sigma);
    equal_up_to_twist(&left, &right)
}

/// The same comparison for `|.|^t + |.|^-t`.
pub fn tempered_check(t: &Rational) -> bool {
    let sigma = Param::pair(
        ArchCharacter::radial(t.clone()),
        ArchCharacter::radial(-t.clone()),
    )
    .expect("nonempty");
    let (left, right) = sym5_against_tensor(&sigma);
    equal_up_to_twist(&left, &right)
}

/// Exponent lists `(left, right)` used by [`arch_galois_check`], for
/// reporting.
pub fn arch_exponents(m: i64) -> (Vec<i64>, Vec<i64>) {
    let sigma = Param::pair(ArchCharacter::angular(m), ArchCharacter::angular(-m)).expect("nonempty");
    let (left, right) = sym5_against_tensor(&sigma);
    let ms = |p: &ArchParam| p.roots().iter().map(|x| x.m).collect();
    (ms(&left), ms(&right))
}
