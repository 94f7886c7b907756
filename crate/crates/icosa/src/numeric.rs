//! Floating-point embedding of cyclotomic values, used only as an
//! independent oracle against the exact arithmetic.

use std::f64::consts::TAU;

use icosa_core::exactnum::{Cyclo, Rational};
use icosa_core::params::UnramifiedParam;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Image of `x` under `zeta_n -> exp(2 pi i / n)`.
pub fn embed(x: &Cyclo) -> Complex64 {
    let n = x.conductor() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Complex64::from_polar(1.0, TAU * k as f64 / n) * to_f64(c))
        .sum()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("small rationals fit in f64")
}

/// Multiset equality of embedded values up to `tol`, by greedy matching.
pub fn multisets_close(xs: &[Complex64], ys: &[Complex64], tol: f64) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut used = vec![false; ys.len()];
    xs.iter().all(|x| {
        let hit = ys
            .iter()
            .enumerate()
            .find(|&(j, y)| !used[j] && (x - y).norm() < tol)
            .map(|(j, _)| j);
        match hit {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

pub fn embed_param(p: &UnramifiedParam) -> Vec<Complex64> {
    p.roots().iter().map(embed).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio() {
        let phi = &Cyclo::root_of_unity(10, 1) + &Cyclo::root_of_unity(10, 9);
        let v = embed(&phi);
        assert!((v.re - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn greedy_matching() {
        let a = [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let b = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
        assert!(!multisets_close(&a, &b, 1e-9));
        assert!(multisets_close(&a, &a, 1e-9));
    }
}
