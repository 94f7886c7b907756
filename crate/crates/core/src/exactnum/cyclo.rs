use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::{gcd, lcm, mod_inverse, prime_factors, residue, totient, units};
use super::group::GroupElement;
use super::poly;
use super::{ExactError, Rational};

/// An exact element of the cyclotomic field `Q(zeta_n)`.
///
/// Stored as numerators over a common positive denominator, in the basis
/// `1, zeta_n, ..., zeta_n^(phi(n)-1)` of residues modulo the `n`-th
/// cyclotomic polynomial. Every constructor and operation returns the
/// canonical form: minimal conductor (never `2 mod 4`), denominator positive
/// and coprime to the numerator content. Structural equality is therefore
/// field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    conductor: u64,
    nums: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    pub fn zero() -> Self {
        Self {
            conductor: 1,
            nums: vec![BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self {
            conductor: 1,
            nums: vec![BigInt::from(v)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::build(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `zeta_n^k`, with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order zero");
        let k = residue(k, n);
        let g = gcd(k, n);
        let (n, k) = (n / g, k / g);
        let mut e = vec![BigInt::zero(); n as usize];
        e[k as usize] = BigInt::one();
        Self::from_exponents(n, e, BigInt::one())
    }

    /// Builds an element from coefficients in the `Phi_n`-residue basis.
    pub fn from_coeffs(n: u64, coeffs: &[Rational]) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let expected = totient(n) as usize;
        if coeffs.len() != expected {
            return Err(ExactError::CoefficientLength {
                conductor: n,
                expected,
                found: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::build(n, nums, den))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients in the `Phi_n`-residue basis, length `phi(conductor)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.nums
            .iter()
            .map(|n| Rational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.nums[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.nums[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.nums[0].clone(), self.den.clone()))
    }

    /// Applies the automorphism `zeta_n -> zeta_n^k`.
    pub fn galois(&self, k: i64) -> Result<Self, ExactError> {
        let n = self.conductor;
        let k = residue(k, n);
        if gcd(k, n) != 1 && n != 1 {
            return Err(ExactError::NotCoprime { k, conductor: n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut e = vec![BigInt::zero(); n as usize];
        for (j, x) in self.nums.iter().enumerate() {
            if !x.is_zero() {
                e[(j as u64 * k % n) as usize] += x;
            }
        }
        poly::reduce(&mut e, &poly::cyclotomic(n));
        Ok(Self::build(n, e, self.den.clone()))
    }

    /// Complex conjugation, i.e. `galois(-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInverse);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(&r.recip()));
        }
        // x^-1 = (product of the other conjugates) / norm(x)
        let n = self.conductor;
        let mut others = Self::one();
        for k in units(n) {
            if k != 1 {
                others = &others * &self.galois(k as i64)?;
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("norm of a cyclotomic element is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        if e < 0 && self.is_zero() {
            return Err(ExactError::ZeroInverse);
        }
        if self.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        Ok(self.power(e))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let nums = self.nums.iter().map(|x| x * r.numer()).collect();
        Self::build(self.conductor, nums, &self.den * r.denom())
    }

    /// Numerators over a common denominator, lifted into `Q(zeta_n)` for a
    /// multiple `n` of the conductor.
    fn lift(&self, n: u64) -> Vec<BigInt> {
        if n == self.conductor {
            return self.nums.clone();
        }
        debug_assert_eq!(n % self.conductor, 0);
        let step = (n / self.conductor) as usize;
        let mut e = vec![BigInt::zero(); n as usize];
        for (j, x) in self.nums.iter().enumerate() {
            e[j * step] = x.clone();
        }
        poly::reduce(&mut e, &poly::cyclotomic(n));
        e
    }

    fn from_exponents(n: u64, mut e: Vec<BigInt>, den: BigInt) -> Self {
        poly::reduce(&mut e, &poly::cyclotomic(n));
        Self::build(n, e, den)
    }

    /// Canonicalizes an already reduced vector at conductor `n`.
    fn build(mut n: u64, mut nums: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(nums.len() as u64, totient(n));
        'descend: loop {
            for p in prime_factors(n) {
                if let Some(v) = descend(n, &nums, p) {
                    nums = v;
                    n /= p;
                    continue 'descend;
                }
            }
            break;
        }
        if den.is_negative() {
            den = -den;
            nums.iter_mut().for_each(|x| *x = -core::mem::take(x));
        }
        let g = nums.iter().fold(den.clone(), |acc, x| acc.gcd(x));
        if !g.is_one() && !g.is_zero() {
            nums.iter_mut().for_each(|x| *x /= &g);
            den /= &g;
        }
        if nums.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        Self {
            conductor: n,
            nums,
            den,
        }
    }
}

/// Tries to rewrite `v in Q(zeta_n)` as an element of `Q(zeta_{n/p})`.
fn descend(n: u64, v: &[BigInt], p: u64) -> Option<Vec<BigInt>> {
    let m = n / p;
    if m.is_multiple_of(p) {
        // Phi_n(x) = Phi_m(x^p): the subfield is spanned by zeta_n^{jp}.
        if v.iter()
            .enumerate()
            .any(|(k, x)| !(k as u64).is_multiple_of(p) && !x.is_zero())
        {
            return None;
        }
        return Some(v.iter().step_by(p as usize).cloned().collect());
    }
    // p exactly divides n: zeta_n = zeta_p^alpha * zeta_m^beta, and
    // 1, zeta_p, ..., zeta_p^{p-2} is a basis of Q(zeta_n) over Q(zeta_m).
    let alpha = mod_inverse(m % p, p).expect("coprime");
    let beta = mod_inverse(p % m, m).expect("coprime");
    let mut parts = vec![vec![BigInt::zero(); m as usize]; p as usize];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let k = k as u64;
        let i = (alpha * k % p) as usize;
        let j = (beta * k % m) as usize;
        parts[i][j] += x;
    }
    let phi_m = poly::cyclotomic(m);
    for part in parts.iter_mut() {
        poly::reduce(part, &phi_m);
    }
    let last = &parts[p as usize - 1];
    if parts[1..p as usize - 1].iter().any(|c| c != last) {
        return None;
    }
    Some(
        parts[0]
            .iter()
            .zip(last.iter())
            .map(|(a, b)| a - b)
            .collect(),
    )
}

impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| {
            for (a, b) in self.nums.iter().zip(other.nums.iter()) {
                let ord = (a * &other.den).cmp(&(b * &self.den));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let n = lcm(self.conductor, rhs.conductor);
        let a = self.lift(n);
        let b = rhs.lift(n);
        let nums = a
            .iter()
            .zip(b.iter())
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        Cyclo::build(n, nums, &self.den * &rhs.den)
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;

    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;

    fn neg(self) -> Cyclo {
        Cyclo {
            conductor: self.conductor,
            nums: self.nums.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;

    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.is_rational() || rhs.is_rational() {
            let (r, x) = if self.is_rational() { (self, rhs) } else { (rhs, self) };
            let nums = x.nums.iter().map(|v| v * &r.nums[0]).collect();
            return Cyclo::build(x.conductor, nums, &x.den * &r.den);
        }
        let n = lcm(self.conductor, rhs.conductor);
        let mut prod = poly::mul(&self.lift(n), &rhs.lift(n));
        poly::reduce(&mut prod, &poly::cyclotomic(n));
        Cyclo::build(n, prod, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Cyclo {
    type Output = Cyclo;

    fn neg(self) -> Cyclo {
        -&self
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl GroupElement for Cyclo {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    fn is_identity(&self) -> bool {
        self.is_one()
    }

    fn is_invertible(&self) -> bool {
        !self.is_zero()
    }

    fn identity_like(&self) -> Self {
        Self::one()
    }
}

/// Renders as a polynomial in `zeta<n>`, e.g. `1 - 2/3*zeta5^2`.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = match k {
                0 => alloc::format!("{mag}"),
                _ => {
                    let z = if k == 1 {
                        alloc::format!("zeta{}", self.conductor)
                    } else {
                        alloc::format!("zeta{}^{k}", self.conductor)
                    };
                    if mag.is_one() {
                        z
                    } else {
                        alloc::format!("{mag}*{z}")
                    }
                }
            };
            let sign = match (terms.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            terms.push(alloc::format!("{sign}{body}"));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for t in terms {
            f.write_str(&t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    #[test]
    fn make_examples() {
        assert_eq!(z(1, 0), Cyclo::one());
        let m = z(4, 2);
        assert_eq!(m, Cyclo::from_int(-1));
        assert_eq!(m.conductor(), 1);
        assert_eq!(z(10, 2), z(5, 1));
        assert_eq!(z(10, 2).conductor(), 5);
    }

    #[test]
    fn conductor_two_mod_four_never_survives() {
        for k in 0..10 {
            assert_ne!(z(10, k).conductor() % 4, 2);
        }
        assert_eq!(z(10, 1).conductor(), 5);
        assert_eq!(z(6, 1).conductor(), 3);
    }

    #[test]
    fn golden_ratio_pair() {
        let s = &z(5, 1) + &z(5, 4);
        // minimal polynomial x^2 + x - 1
        let v = &(&s * &s) + &s;
        assert_eq!(v, Cyclo::one());
        assert_eq!(&z(10, 1) * &z(10, 9), Cyclo::one());
    }

    #[test]
    fn subfield_elements_descend() {
        // zeta20^4 = zeta5, zeta20^5 = i
        assert_eq!(z(20, 4).conductor(), 5);
        assert_eq!(z(20, 5).conductor(), 4);
        let s = &z(20, 1) + &z(20, 19);
        assert_eq!(s.conductor(), 20);
        let t = &z(12, 1) + &z(12, 11); // sqrt 3
        assert_eq!(t.conductor(), 12);
        let u = &t * &t;
        assert_eq!(u, Cyclo::from_int(3));
    }

    #[test]
    fn inverse_and_zero() {
        let x = &z(7, 1) + &Cyclo::from_int(2);
        let y = x.try_inv().unwrap();
        assert_eq!(&x * &y, Cyclo::one());
        assert_eq!(Cyclo::zero().try_inv(), Err(ExactError::ZeroInverse));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(10, 1).galois(3).unwrap(), z(10, 3));
        let r = Cyclo::from_rational(&Rational::new(2.into(), 3.into()));
        assert_eq!(r.galois(7).unwrap(), r);
        let s = &z(5, 1) + &z(5, 4);
        assert_eq!(s.galois(2).unwrap(), &z(5, 2) + &z(5, 3));
        assert!(matches!(
            z(10, 1).galois(5),
            Err(ExactError::NotCoprime { .. })
        ));
    }

    #[test]
    fn from_coeffs_checks_length() {
        let one = Rational::from_integer(1.into());
        assert!(Cyclo::from_coeffs(5, std::slice::from_ref(&one)).is_err());
        assert!(Cyclo::from_coeffs(0, std::slice::from_ref(&one)).is_err());
        let z = Rational::from_integer(0.into());
        let x = Cyclo::from_coeffs(10, &[z.clone(), z.clone(), one.clone(), z]).unwrap();
        assert_eq!(x, super::super::Cyclo::root_of_unity(10, 2));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Cyclo::zero()), "0");
        let x = &Cyclo::from_int(1) - &z(5, 2).scale(&Rational::new(2.into(), 3.into()));
        assert_eq!(alloc::format!("{x}"), "1 - 2/3*zeta5^2");
    }
}
