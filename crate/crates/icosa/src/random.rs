//! Seeded samplers for verification campaigns.
//!
//! An inverse root is `zeta_n^k` with `n` uniform over the divisors of 60
//! and `k` uniform in `0..n`; one draw in eight is instead a rational from
//! `{2, 1/2, 3, 1/3}` so that non-unitary inputs are exercised too.

use icosa_core::exactnum::{arith::divisors, Cyclo, Rational, RootOfUnity};
use icosa_core::params::{Param, UnramifiedParam};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn root<R: Rng>(rng: &mut R) -> RootOfUnity {
    let ds = divisors(60);
    let n = ds[rng.random_range(0..ds.len())];
    RootOfUnity::new(n, rng.random_range(0..n as i64))
}

pub fn unit<R: Rng>(rng: &mut R) -> Cyclo {
    if rng.random_ratio(1, 8) {
        let (n, d) = [(2, 1), (1, 2), (3, 1), (1, 3)][rng.random_range(0..4)];
        Cyclo::from_rational(&Rational::new(n.into(), d.into()))
    } else {
        Cyclo::from(root(rng))
    }
}

pub fn pair<R: Rng>(rng: &mut R) -> UnramifiedParam {
    Param::pair(unit(rng), unit(rng)).expect("samples are units")
}
