//! The binary icosahedral group as exact 2x2 matrices over `Q(zeta20)`, its
//! two-dimensional characters, and the icosahedral signature identities.
//!
//! Unit icosians `a + bi + cj + dk` are realized as
//! `[[a + bi, c + di], [-c + di, a - bi]]` with `i = zeta4` and the golden
//! ratio `phi = 1 + zeta5 + zeta5^4`, so no square roots are ever taken.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use crate::classify::{classify_trivial_central, rationality_field, tau_conjugate, Lemma65Case};
use crate::exactnum::{field_of, Cyclo, NumberFieldDesc, Rational};
use crate::params::{Param, UnramifiedParam};

/// Automorphism index of `Q(zeta20)` fixing `i` and sending `sqrt5` to
/// `-sqrt5`.
pub const CONJUGATE_K: i64 = 13;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IcosaError {
    #[error("products leave the element set")]
    NotClosed,
    #[error("expected 120 elements, built {0}")]
    WrongOrder(usize),
    #[error("unsupported automorphism index {0} (expected 1 or 13)")]
    UnsupportedAutomorphism(i64),
    #[error("character vectors have different class structure")]
    MismatchedClasses,
    #[error("inner product is not rational")]
    NotRational,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactMatrix2 {
    pub entries: [[Cyclo; 2]; 2],
}

impl ExactMatrix2 {
    pub fn identity() -> Self {
        Self {
            entries: [[Cyclo::one(), Cyclo::zero()], [Cyclo::zero(), Cyclo::one()]],
        }
    }

    /// Image of the quaternion `a + bi + cj + dk`.
    pub fn from_quaternion(a: &Cyclo, b: &Cyclo, c: &Cyclo, d: &Cyclo) -> Self {
        let i = Cyclo::root_of_unity(4, 1);
        let bi = b * &i;
        let di = d * &i;
        Self {
            entries: [[a + &bi, c + &di], [&di - c, a - &bi]],
        }
    }

    pub fn det(&self) -> Cyclo {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> Cyclo {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn galois(&self, k: i64) -> Self {
        let g = |x: &Cyclo| x.galois(k).expect("k is a unit mod 20");
        let [[a, b], [c, d]] = &self.entries;
        Self {
            entries: [[g(a), g(b)], [g(c), g(d)]],
        }
    }
}

impl Mul for &ExactMatrix2 {
    type Output = ExactMatrix2;

    fn mul(self, rhs: &ExactMatrix2) -> ExactMatrix2 {
        let (x, y) = (&self.entries, &rhs.entries);
        let e = |r: usize, c: usize| &(&x[r][0] * &y[0][c]) + &(&x[r][1] * &y[1][c]);
        ExactMatrix2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Element indices, ascending; the first is the representative.
    pub members: Vec<usize>,
    pub order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

#[derive(Debug, Clone)]
pub struct GroupData {
    pub elements: Vec<ExactMatrix2>,
    /// `table[x][y]` is the index of `elements[x] * elements[y]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverses: Vec<usize>,
    /// Empty until [`conjugacy_classes`] runs.
    pub classes: Vec<ConjugacyClass>,
}

impl GroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut n = 1;
        let mut p = x;
        while p != self.identity {
            p = self.table[p][x];
            n += 1;
        }
        n
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size() as u64).collect()
    }
}

fn icosians() -> Vec<[Cyclo; 4]> {
    let half = Cyclo::from_rational(&Rational::new(1.into(), 2.into()));
    let zero = Cyclo::zero();
    let one = Cyclo::one();
    let phi_inv = &Cyclo::root_of_unity(5, 1) + &Cyclo::root_of_unity(5, 4);
    let phi = &one + &phi_inv;
    let signs = |v: Cyclo| [v.clone(), -v];

    let mut out = Vec::with_capacity(120);
    // +-1, +-i, +-j, +-k
    for pos in 0..4 {
        for s in signs(one.clone()) {
            let mut q = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
            q[pos] = s;
            out.push(q);
        }
    }
    // (+-1 +-i +-j +-k)/2
    for mask in 0..16u32 {
        let c = |bit: u32| if mask >> bit & 1 == 1 { -&half } else { half.clone() };
        out.push([c(0), c(1), c(2), c(3)]);
    }
    // even permutations of (0, +-1, +-1/phi, +-phi)/2
    let base = [zero, &one * &half, &phi_inv * &half, &phi * &half];
    for perm in even_permutations() {
        for mask in 0..8u32 {
            let mut q = [Cyclo::zero(), Cyclo::zero(), Cyclo::zero(), Cyclo::zero()];
            for (slot, &src) in perm.iter().enumerate() {
                let v = &base[src];
                q[slot] = if src > 0 && mask >> (src - 1) & 1 == 1 { -v } else { v.clone() };
            }
            out.push(q);
        }
    }
    out
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                if a == b || a == c || b == c {
                    continue;
                }
                let p = [a, b, c, 6 - a - b - c];
                let inversions = (0..4)
                    .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                if inversions % 2 == 0 {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Builds the 120 unit icosians and their Cayley table, failing if the set
/// is not closed or has the wrong size.
pub fn build_group() -> Result<GroupData, IcosaError> {
    let mut elements: Vec<ExactMatrix2> = icosians()
        .iter()
        .map(|[a, b, c, d]| ExactMatrix2::from_quaternion(a, b, c, d))
        .collect();
    elements.sort();
    elements.dedup();
    if elements.len() != 120 {
        return Err(IcosaError::WrongOrder(elements.len()));
    }
    let index: BTreeMap<&ExactMatrix2, usize> =
        elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut table = vec![vec![0; elements.len()]; elements.len()];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            table[i][j] = *index.get(&(x * y)).ok_or(IcosaError::NotClosed)?;
        }
    }
    let identity = *index
        .get(&ExactMatrix2::identity())
        .ok_or(IcosaError::NotClosed)?;
    let inverses = (0..elements.len())
        .map(|i| table[i].iter().position(|&p| p == identity).ok_or(IcosaError::NotClosed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupData {
        elements,
        table,
        identity,
        inverses,
        classes: Vec::new(),
    })
}

/// Partitions the group into conjugacy classes, ordered by element order,
/// then class size, then trace.
pub fn conjugacy_classes(mut g: GroupData) -> GroupData {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut members: Vec<usize> = (0..n)
            .map(|h| g.table[g.table[h][x]][g.inverses[h]])
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        classes.push(ConjugacyClass {
            order: g.element_order(x),
            members,
        });
    }
    classes.sort_by(|p, q| {
        let tr = |c: &ConjugacyClass| g.elements[c.representative()].trace();
        (p.order, p.size())
            .cmp(&(q.order, q.size()))
            .then_with(|| tr(p).cmp(&tr(q)))
    });
    g.classes = classes;
    g
}

/// Class function on the conjugacy classes of a [`GroupData`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    pub values: Vec<Cyclo>,
    pub class_sizes: Vec<u64>,
}

impl CharacterVector {
    pub fn constant(value: Cyclo, class_sizes: &[u64]) -> Self {
        Self {
            values: vec![value; class_sizes.len()],
            class_sizes: class_sizes.to_vec(),
        }
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x * y)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x - y)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(x, y)| f(x, y)).collect(),
            class_sizes: self.class_sizes.clone(),
        }
    }

    pub fn galois(&self, k: i64) -> Self {
        Self {
            values: self
                .values
                .iter()
                .map(|x| x.galois(k).expect("unit index"))
                .collect(),
            class_sizes: self.class_sizes.clone(),
        }
    }

    pub fn degree(&self) -> &Cyclo {
        &self.values[0]
    }
}

/// Character of the defining representation (`k = 1`) or of its Galois
/// conjugate (`k = 13`).
pub fn rep_character(g: &GroupData, k: i64) -> Result<CharacterVector, IcosaError> {
    if k != 1 && k != CONJUGATE_K {
        return Err(IcosaError::UnsupportedAutomorphism(k));
    }
    let chi = CharacterVector {
        values: g
            .classes
            .iter()
            .map(|c| g.elements[c.representative()].trace())
            .collect(),
        class_sizes: g.class_sizes(),
    };
    Ok(if k == 1 { chi } else { chi.galois(k) })
}

/// Determinant character of the defining representation.
pub fn det_character(g: &GroupData) -> CharacterVector {
    CharacterVector {
        values: g
            .classes
            .iter()
            .map(|c| g.elements[c.representative()].det())
            .collect(),
        class_sizes: g.class_sizes(),
    }
}

/// `chi_{sym^m}` from `chi_{sym^m} = chi chi_{sym^(m-1)} - det chi_{sym^(m-2)}`.
pub fn sym_character(chi: &CharacterVector, det: &CharacterVector, m: u32) -> CharacterVector {
    let mut prev = CharacterVector::constant(Cyclo::one(), &chi.class_sizes);
    if m == 0 {
        return prev;
    }
    let mut cur = chi.clone();
    for _ in 1..m {
        let next = chi.product(&cur).difference(&det.product(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1/|G|) sum size * x * conj(y)`.
pub fn inner_product(x: &CharacterVector, y: &CharacterVector) -> Result<Rational, IcosaError> {
    if x.class_sizes != y.class_sizes || x.values.len() != y.values.len() {
        return Err(IcosaError::MismatchedClasses);
    }
    let total: u64 = x.class_sizes.iter().sum();
    let mut acc = Cyclo::zero();
    for ((a, b), &s) in x.values.iter().zip(&y.values).zip(&x.class_sizes) {
        acc = &acc + &(&(a * &b.conj()) * &Cyclo::from_int(s as i64));
    }
    let r = acc.to_rational().ok_or(IcosaError::NotRational)?;
    Ok(r / Rational::from_integer((total as i64).into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcosaIdentityReport {
    pub chi: CharacterVector,
    pub chi_conj: CharacterVector,
    pub sym3: CharacterVector,
    pub sym3_conj: CharacterVector,
    pub sym5: CharacterVector,
    /// `sym^2(chi') chi`.
    pub sym2_conj_times_chi: CharacterVector,
    pub sym3_holds: bool,
    pub sym5_holds: bool,
    pub not_self_conjugate: bool,
    pub norm: Rational,
    pub cross: Rational,
    pub trace_field: NumberFieldDesc,
}

impl IcosaIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.sym3_holds
            && self.sym5_holds
            && self.not_self_conjugate
            && self.norm == Rational::from_integer(1.into())
            && self.cross == Rational::from_integer(0.into())
            && self.trace_field == NumberFieldDesc::sqrt5()
    }
}

/// Checks `sym^3(rho) = sym^3(rho')` and `sym^5(rho) = sym^2(rho') (x) rho`
/// pointwise on every class, and that `rho` differs from `rho'`.
pub fn verify_icosahedral_identities(g: &GroupData) -> IcosaIdentityReport {
    let chi = rep_character(g, 1).expect("supported");
    let chi_conj = rep_character(g, CONJUGATE_K).expect("supported");
    let det = det_character(g);
    let sym3 = sym_character(&chi, &det, 3);
    let sym3_conj = sym_character(&chi_conj, &det, 3);
    let sym5 = sym_character(&chi, &det, 5);
    let sym2_conj_times_chi = sym_character(&chi_conj, &det, 2).product(&chi);
    IcosaIdentityReport {
        sym3_holds: sym3 == sym3_conj,
        sym5_holds: sym5 == sym2_conj_times_chi,
        not_self_conjugate: chi != chi_conj,
        norm: inner_product(&chi, &chi).expect("same classes"),
        cross: inner_product(&chi, &chi_conj).expect("same classes"),
        trace_field: field_of(chi.values.iter()),
        chi,
        chi_conj,
        sym3,
        sym3_conj,
        sym5,
        sym2_conj_times_chi,
    }
}

/// Eigenvalue pair `{l, 1/l}` of each class representative, with `l` found
/// among the roots of unity of the element's order.
pub fn frobenius_params(g: &GroupData) -> Vec<UnramifiedParam> {
    g.classes
        .iter()
        .map(|c| {
            let m = &g.elements[c.representative()];
            let tr = m.trace();
            let n = c.order;
            let lambda = (0..n as i64)
                .map(|k| Cyclo::root_of_unity(n, k))
                .find(|l| (l + &l.conj()) == tr)
                .expect("eigenvalues of a finite-order element are roots of unity");
            let inv = lambda.conj();
            Param::pair(lambda, inv).expect("roots of unity are units")
        })
        .collect()
}

/// Per-class outcome of pairing a class parameter with its conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPairing {
    pub order: u64,
    pub size: usize,
    pub param: UnramifiedParam,
    pub conjugate: UnramifiedParam,
    pub case: Lemma65Case,
    pub field: NumberFieldDesc,
}

/// Classifies each class parameter against its conjugate parameter.
pub fn pair_classes(g: &GroupData) -> Vec<ClassPairing> {
    g.classes
        .iter()
        .zip(frobenius_params(g))
        .map(|(c, param)| {
            let conjugate = tau_conjugate(&param).expect("conductor divides 20");
            let (a, _) = param.as_pair().expect("pair");
            // the classifier only sees {c, 1/c}, so either entry serves as c
            let (c_entry, _) = conjugate.as_pair().expect("pair");
            let case = classify_trivial_central(a, c_entry).expect("units");
            ClassPairing {
                order: c.order,
                size: c.size(),
                field: rationality_field(&param).expect("pair"),
                param,
                conjugate,
                case,
            }
        })
        .collect()
}
