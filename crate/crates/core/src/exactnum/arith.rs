//! Small-integer number theory used for conductors and residues.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Möbius function.
pub fn moebius(n: u64) -> i8 {
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Inverse of `a` modulo `m`, if it exists. `m == 1` yields `Some(0)`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % m), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(m)) as u64)
}

/// Reduces a signed integer into `0..m`.
pub fn residue(k: i64, m: u64) -> u64 {
    i128::from(k).rem_euclid(i128::from(m)) as u64
}

/// The unit group `(Z/n)^*`, as least positive representatives in `1..=n`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return alloc::vec![1];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totients() {
        let got: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(got, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 5), Some(2));
        assert_eq!(mod_inverse(13, 20), Some(17));
        assert_eq!(mod_inverse(4, 6), None);
        assert_eq!(mod_inverse(7, 1), Some(0));
    }

    #[test]
    fn moebius_values() {
        let got: Vec<i8> = (1..=10).map(moebius).collect();
        assert_eq!(got, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn unit_groups() {
        assert_eq!(units(1), [1]);
        assert_eq!(units(10), [1, 3, 7, 9]);
    }
}
