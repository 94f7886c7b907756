use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::arith::{gcd, lcm, prime_factors, totient, units};
use super::Cyclo;

/// An abelian number field, presented as the fixed field of a subgroup `H`
/// of `(Z/n)^*` inside `Q(zeta_n)`.
///
/// Always canonical: the conductor is the smallest `n` admitting such a
/// presentation and `H` is stored as sorted representatives in `1..=n`, so
/// two descriptors describe the same field iff they are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumberFieldDesc {
    conductor: u64,
    subgroup: Vec<u64>,
}

impl NumberFieldDesc {
    /// The field fixed by the subgroup generated by `generators` in `(Z/n)^*`.
    /// Generators not coprime to `n` are ignored.
    pub fn new(n: u64, generators: &[u64]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let gens: Vec<u64> = generators
            .iter()
            .map(|&g| g % n)
            .filter(|&g| gcd(g, n) == 1 || n == 1)
            .collect();
        let mut sub = close(n, &gens);
        let mut n = n;
        'descend: loop {
            for p in prime_factors(n) {
                let d = n / p;
                let kernel_inside = units(n)
                    .into_iter()
                    .filter(|k| k % d == 1 % d)
                    .all(|k| sub.contains(&k));
                if kernel_inside {
                    let image: Vec<u64> = sub.iter().map(|&h| h % d).collect();
                    sub = close(d, &image);
                    n = d;
                    continue 'descend;
                }
            }
            break;
        }
        Self {
            conductor: n,
            subgroup: sub.into_iter().collect(),
        }
    }

    pub fn rationals() -> Self {
        Self::new(1, &[])
    }

    /// The full cyclotomic field `Q(zeta_n)`.
    pub fn cyclotomic(n: u64) -> Self {
        Self::new(n, &[])
    }

    /// `Q(sqrt 5)`, the real subfield of `Q(zeta_5)`.
    pub fn sqrt5() -> Self {
        Self::new(5, &[4])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn subgroup(&self) -> &[u64] {
        &self.subgroup
    }

    pub fn degree(&self) -> u64 {
        totient(self.conductor) / self.subgroup.len() as u64
    }

    pub fn is_rationals(&self) -> bool {
        self.conductor == 1
    }

    /// The maximal totally real subfield: adjoin complex conjugation to `H`.
    pub fn real_subfield(&self) -> Self {
        let n = self.conductor;
        let mut gens = self.subgroup.clone();
        gens.push(n - 1);
        Self::new(n, &gens)
    }

    /// Whether `x` lies in this field.
    pub fn contains(&self, x: &Cyclo) -> bool {
        let big = lcm(self.conductor, x.conductor());
        self.fixing_group_in(big)
            .into_iter()
            .all(|k| x.galois(k as i64).map(|y| &y == x).unwrap_or(false))
    }

    pub fn is_subfield_of(&self, other: &Self) -> bool {
        let big = lcm(self.conductor, other.conductor);
        let mine: BTreeSet<u64> = self.fixing_group_in(big).into_iter().collect();
        other.fixing_group_in(big).iter().all(|k| mine.contains(k))
    }

    /// Preimage of `H` in `(Z/m)^*` for a multiple `m` of the conductor.
    fn fixing_group_in(&self, m: u64) -> Vec<u64> {
        let n = self.conductor;
        units(m)
            .into_iter()
            .filter(|k| {
                let r = k % n;
                let r = if r == 0 { n } else { r };
                self.subgroup.binary_search(&r).is_ok()
            })
            .collect()
    }
}

/// The smallest abelian field containing every value.
pub fn field_of<'a, I>(values: I) -> NumberFieldDesc
where
    I: IntoIterator<Item = &'a Cyclo>,
{
    let values: Vec<&Cyclo> = values.into_iter().collect();
    let n = values.iter().fold(1, |acc, v| lcm(acc, v.conductor()));
    let stab: Vec<u64> = units(n)
        .into_iter()
        .filter(|&k| {
            values
                .iter()
                .all(|v| v.galois(k as i64).map(|y| &y == *v).unwrap_or(false))
        })
        .collect();
    NumberFieldDesc::new(n, &stab)
}

/// Subgroup of `(Z/n)^*` generated by `gens`, as representatives in `1..=n`.
fn close(n: u64, gens: &[u64]) -> BTreeSet<u64> {
    let rep = |k: u64| if n == 1 { 1 } else { k % n };
    let mut set = BTreeSet::from([1]);
    let mut frontier = alloc::vec![1];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = rep(x * g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

impl fmt::Display for NumberFieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor;
        if n == 1 {
            return f.write_str("Q");
        }
        if self.subgroup == [1] {
            return write!(f, "Q(zeta{n})");
        }
        if self.subgroup == [1, n - 1] {
            if n == 5 {
                return f.write_str("Q(sqrt5)");
            }
            return write!(f, "Q(zeta{n})^+");
        }
        write!(f, "Q(zeta{n})^{:?}", self.subgroup)
    }
}

impl fmt::Debug for NumberFieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [n={}, H={:?}]", self.conductor, self.subgroup)
    }
}
