//! Integer polynomial helpers for cyclotomic reduction.
//!
//! Polynomials are coefficient vectors, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::arith::{divisors, moebius};

/// The `n`-th cyclotomic polynomial, monic, lowest degree first.
///
/// Built as `prod_{d | n} (x^d - 1)^{mu(n/d)}`: the factors with positive
/// Möbius sign are multiplied out, then the others are divided off exactly.
pub fn cyclotomic(n: u64) -> Vec<i64> {
    let mut num: Vec<i128> = vec![1];
    let mut dens = Vec::new();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = mul_x_pow_minus_one(&num, d as usize),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        num = div_x_pow_minus_one(&num, d);
    }
    num.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

fn mul_x_pow_minus_one(p: &[i128], d: usize) -> Vec<i128> {
    let mut out = vec![0i128; p.len() + d];
    for (k, &c) in p.iter().enumerate() {
        out[k + d] += c;
        out[k] -= c;
    }
    out
}

fn div_x_pow_minus_one(p: &[i128], d: usize) -> Vec<i128> {
    // p = q * (x^d - 1)  =>  q_k = q_{k-d} - p_k
    let len = p.len() - d;
    let mut q = vec![0i128; len];
    for k in 0..len {
        let prev = if k >= d { q[k - d] } else { 0 };
        q[k] = prev - p[k];
    }
    debug_assert!((len..p.len()).all(|k| p[k] == if k >= d { q[k - d] } else { 0 }));
    q
}

/// Reduces `v` modulo the monic polynomial `modulus` in place; the result has
/// length `deg(modulus)`.
pub fn reduce(v: &mut Vec<BigInt>, modulus: &[i64]) {
    let deg = modulus.len() - 1;
    if v.len() <= deg {
        v.resize(deg, BigInt::zero());
        return;
    }
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut v[i]);
        let base = i - deg;
        for (j, &m) in modulus[..deg].iter().enumerate() {
            if m != 0 {
                v[base + j] -= &c * m;
            }
        }
    }
    v.truncate(deg);
}

/// Schoolbook product.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}
