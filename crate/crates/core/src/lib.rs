//! Exact local algebra for icosahedral-type pairs of GL(2) parameters.
//!
//! The crate is `no_std` (with `alloc`). It provides
//!
//! - [`exactnum`]: cyclotomic field arithmetic, Galois action, abelian fields;
//! - [`params`]: multiset parameters and their functorial operations
//!   (symmetric powers, adjoint, tensor products, twists);
//! - [`lfactors`]: local Euler factors and the local L-factor identities;
//! - [`classify`]: the symmetric-cube matching classification and the
//!   local exclusion arguments built on it;
//! - [`icosa`]: the binary icosahedral group as exact 2x2 matrices, used as
//!   ground truth for the classifiers.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactnum;
pub mod params;
pub mod lfactors;
pub mod classify;
pub mod icosa;
