//! Exhaustive census of symmetric-cube matches among roots of unity.
//!
//! The grid is every `(a, c)` with both orders at most `max_order`, for each
//! central pair `(w, wp)` with `w^3 = wp^3` and orders at most
//! `min(central_max_order, max_order)` (or only `w = wp = 1`). Every match is
//! run through the classifiers and each claimed property is re-checked;
//! violations are collected as tuples.

use alloc::vec::Vec;

use super::{
    check_sym3_match, classify_trivial_central, power_relation, rationality_field, tau_conjugate,
    CaseLabel, ClassifyError, Lemma65Case, PowerRelation,
};
use crate::exactnum::{Cyclo, GroupElement, NumberFieldDesc, RootOfUnity};
use crate::lfactors::check_si3_local;
use crate::params::{Param, UnramifiedParam};

/// How candidate partners `c` are generated for each `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Only cube roots of entries of `sym^3(pi)`: any match has
    /// `c^3` among them.
    Pruned,
    /// Every `c` in the grid.
    BruteForce,
}

/// Arithmetic used for the classification itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Roots,
    Cyclo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_order: u64,
    pub w_trivial: bool,
    pub central_max_order: u64,
    pub strategy: Strategy,
    pub backend: Backend,
}

impl EnumerationConfig {
    pub fn new(max_order: u64, w_trivial: bool) -> Self {
        Self {
            max_order,
            w_trivial,
            central_max_order: 12,
            strategy: Strategy::Pruned,
            backend: Backend::Roots,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    pub a: RootOfUnity,
    pub w: RootOfUnity,
    pub c: RootOfUnity,
    pub wp: RootOfUnity,
}

/// Outcomes over the trivial-central sub-grid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lemma65Counts {
    pub case_i_m4: u64,
    pub case_i_m6: u64,
    pub case_ii: u64,
    /// Cube match holds but the sym^5 identity fails.
    pub excluded: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationReport {
    pub central_pairs: u64,
    /// Number of `(w, wp, a, c)` tuples covered.
    pub grid_size: u64,
    pub sym3_matches: u64,
    /// Indexed by [`CaseLabel::index`].
    pub case_counts: [u64; 3],
    pub adjoint_isomorphic: u64,
    pub si3_holds: u64,
    /// Matches fitting none of the three cases.
    pub uncovered: Vec<Tuple>,
    pub witness_failures: Vec<Tuple>,
    /// Adjoint match and sym^5 identity, but no power relation.
    pub power_relation_failures: Vec<Tuple>,
    /// Quartic case with `w = 1` and the sym^5 identity, yet `a^4 != 1`.
    pub quartic_sharpening_failures: Vec<Tuple>,
    pub lemma65: Lemma65Counts,
    /// Trivial centrals, both identities hold, neither case applies.
    pub lemma65_unclassified: Vec<Tuple>,
    /// Case assigned but its shape (`c = +-a` or `c = a^3`) or adjoint
    /// behaviour is wrong.
    pub lemma65_shape_failures: Vec<Tuple>,
    pub rationality_failures: Vec<Tuple>,
    pub tau_failures: Vec<Tuple>,
}

impl EnumerationReport {
    pub fn uncovered_count(&self) -> usize {
        self.uncovered.len()
    }

    pub fn violation_count(&self) -> usize {
        self.violation_lists().iter().map(|(_, v)| v.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0
    }

    pub fn violation_lists(&self) -> [(&'static str, &[Tuple]); 8] {
        [
            ("uncovered", &self.uncovered),
            ("witness", &self.witness_failures),
            ("power_relation", &self.power_relation_failures),
            ("quartic_sharpening", &self.quartic_sharpening_failures),
            ("lemma65_unclassified", &self.lemma65_unclassified),
            ("lemma65_shape", &self.lemma65_shape_failures),
            ("rationality", &self.rationality_failures),
            ("tau", &self.tau_failures),
        ]
    }

    /// Combines reports over disjoint parts of the grid. The result does not
    /// depend on the order of merging.
    pub fn merge(mut self, other: Self) -> Self {
        self.central_pairs = self.central_pairs.max(other.central_pairs);
        self.grid_size += other.grid_size;
        self.sym3_matches += other.sym3_matches;
        for (x, y) in self.case_counts.iter_mut().zip(other.case_counts) {
            *x += y;
        }
        self.adjoint_isomorphic += other.adjoint_isomorphic;
        self.si3_holds += other.si3_holds;
        self.lemma65.case_i_m4 += other.lemma65.case_i_m4;
        self.lemma65.case_i_m6 += other.lemma65.case_i_m6;
        self.lemma65.case_ii += other.lemma65.case_ii;
        self.lemma65.excluded += other.lemma65.excluded;
        let lists = [
            (&mut self.uncovered, other.uncovered),
            (&mut self.witness_failures, other.witness_failures),
            (&mut self.power_relation_failures, other.power_relation_failures),
            (&mut self.quartic_sharpening_failures, other.quartic_sharpening_failures),
            (&mut self.lemma65_unclassified, other.lemma65_unclassified),
            (&mut self.lemma65_shape_failures, other.lemma65_shape_failures),
            (&mut self.rationality_failures, other.rationality_failures),
            (&mut self.tau_failures, other.tau_failures),
        ];
        for (mine, theirs) in lists {
            mine.extend(theirs);
            mine.sort_unstable();
        }
        self
    }
}

trait Embed: GroupElement {
    fn lift(r: RootOfUnity) -> Self;
    fn to_cyclo(&self) -> Cyclo;
}

impl Embed for RootOfUnity {
    fn lift(r: RootOfUnity) -> Self {
        r
    }

    fn to_cyclo(&self) -> Cyclo {
        Cyclo::from(*self)
    }
}

impl Embed for Cyclo {
    fn lift(r: RootOfUnity) -> Self {
        Cyclo::from(r)
    }

    fn to_cyclo(&self) -> Cyclo {
        self.clone()
    }
}

fn central_pairs(config: &EnumerationConfig) -> Vec<(RootOfUnity, RootOfUnity)> {
    if config.w_trivial {
        return alloc::vec![(RootOfUnity::ONE, RootOfUnity::ONE)];
    }
    let ws: Vec<RootOfUnity> = RootOfUnity::all_up_to(config.central_max_order.min(config.max_order)).collect();
    let mut out = Vec::new();
    for w in &ws {
        for wp in &ws {
            if w.power(3) == wp.power(3) {
                out.push((*w, *wp));
            }
        }
    }
    out
}

pub fn enumerate_solutions(config: &EnumerationConfig) -> Result<EnumerationReport, ClassifyError> {
    enumerate_solutions_part(config, 0, 1)
}

/// The share of the census whose `a` has grid index `= part (mod parts)`.
/// Merging all `parts` shares gives the full report.
pub fn enumerate_solutions_part(
    config: &EnumerationConfig,
    part: usize,
    parts: usize,
) -> Result<EnumerationReport, ClassifyError> {
    if config.max_order == 0 || config.central_max_order == 0 {
        return Err(ClassifyError::OutOfModel("orders must be at least 1"));
    }
    if parts == 0 || part >= parts {
        return Err(ClassifyError::OutOfModel("partition index out of range"));
    }
    let grid: Vec<RootOfUnity> = RootOfUnity::all_up_to(config.max_order).collect();
    let centrals = central_pairs(config);
    let mut report = EnumerationReport {
        central_pairs: centrals.len() as u64,
        ..Default::default()
    };
    for &(w, wp) in &centrals {
        for a in grid.iter().skip(part).step_by(parts) {
            report.grid_size += grid.len() as u64;
            let cands = match config.strategy {
                Strategy::BruteForce => grid.clone(),
                Strategy::Pruned => pruned_candidates(*a, w, config.max_order),
            };
            for c in cands {
                let t = Tuple { a: *a, w, c, wp };
                match config.backend {
                    Backend::Roots => analyse::<RootOfUnity>(t, &mut report),
                    Backend::Cyclo => analyse::<Cyclo>(t, &mut report),
                }
            }
        }
    }
    Ok(report.merge(EnumerationReport::default()))
}

fn pruned_candidates(a: RootOfUnity, w: RootOfUnity, max_order: u64) -> Vec<RootOfUnity> {
    let pi = Param::with_central(a, &w).expect("roots of unity are units");
    let mut out: Vec<RootOfUnity> = pi
        .sym_power(3)
        .expect("dimension 2")
        .roots()
        .iter()
        .flat_map(|x| x.roots(3).collect::<Vec<_>>())
        .filter(|c| c.order() <= max_order)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn analyse<S: Embed>(t: Tuple, report: &mut EnumerationReport) {
    let [a, w, c, wp] = [t.a, t.w, t.c, t.wp].map(S::lift);
    let r = check_sym3_match(&a, &w, &c, &wp).expect("grid values are units with w^3 = wp^3");
    if !r.sym3_match {
        return;
    }
    report.sym3_matches += 1;
    if r.cases.is_empty() {
        report.uncovered.push(t);
    }
    let pi = Param::with_central(a.clone(), &w).expect("unit");
    let pi_prime = Param::with_central(c.clone(), &wp).expect("unit");
    for case in &r.cases {
        report.case_counts[case.label().index()] += 1;
        if !case.verify(&w, &wp, &pi, &pi_prime) {
            report.witness_failures.push(t);
        }
    }
    let si3 = check_si3_local(&a, &w, &c, &wp).expect("dimension 2");
    if si3 {
        report.si3_holds += 1;
    }
    if r.adjoint_isomorphic {
        report.adjoint_isomorphic += 1;
        if si3 && power_relation(&a, &w) == PowerRelation::None {
            report.power_relation_failures.push(t);
        }
    }
    if w.is_identity() && si3 && r.witness(CaseLabel::Quartic).is_some() && !a.power(4).is_identity() {
        report.quartic_sharpening_failures.push(t);
    }
    if w.is_identity() && wp.is_identity() {
        trivial_central_checks(t, &a, &c, si3, r.adjoint_isomorphic, report);
    }
}

fn trivial_central_checks<S: Embed>(
    t: Tuple,
    a: &S,
    c: &S,
    si3: bool,
    adjoint_isomorphic: bool,
    report: &mut EnumerationReport,
) {
    let case = classify_trivial_central(a, c).expect("units");
    let pair = |x: &S| -> UnramifiedParam {
        let x = x.to_cyclo();
        let inv = x.inverse();
        Param::pair(x, inv).expect("unit")
    };
    let (pi, pi_prime) = (pair(a), pair(c));
    match case {
        Lemma65Case::None => {
            if si3 {
                report.lemma65_unclassified.push(t);
            } else {
                report.lemma65.excluded += 1;
            }
        }
        Lemma65Case::I { m } => {
            if m == 4 {
                report.lemma65.case_i_m4 += 1;
            } else {
                report.lemma65.case_i_m6 += 1;
            }
            let ac = a.to_cyclo();
            let signs = [ac.clone(), -&ac, ac.inverse(), -&ac.inverse()];
            let shape = adjoint_isomorphic
                && a.power(i64::from(m)).is_identity()
                && signs.contains(&c.to_cyclo());
            if !shape {
                report.lemma65_shape_failures.push(t);
            }
            if !rationality_field(&pi).expect("pair").is_rationals() {
                report.rationality_failures.push(t);
            }
        }
        Lemma65Case::II => {
            report.lemma65.case_ii += 1;
            let cubes = Param::pair(a.power(3), a.power(-3)).expect("unit");
            let shape = !adjoint_isomorphic
                && a.power(10).is_identity()
                && Param::pair(c.clone(), c.inverse()).expect("unit") == cubes;
            if !shape {
                report.lemma65_shape_failures.push(t);
            }
            if rationality_field(&pi).expect("pair") != NumberFieldDesc::sqrt5() {
                report.rationality_failures.push(t);
            }
            if tau_conjugate(&pi).ok().as_ref() != Some(&pi_prime) {
                report.tau_failures.push(t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_grid() {
        let r = enumerate_solutions(&EnumerationConfig::new(1, true)).unwrap();
        assert_eq!(r.grid_size, 1);
        assert_eq!(r.sym3_matches, 1);
        assert_eq!(r.lemma65.case_i_m4, 1);
        assert!(r.is_clean());
    }

    #[test]
    fn order_ten_trivial_center() {
        let r = enumerate_solutions(&EnumerationConfig::new(10, true)).unwrap();
        assert!(r.is_clean(), "{r:?}");
        assert!(r.lemma65.case_ii > 0);
        assert!(r.case_counts[CaseLabel::Quintic.index()] > 0);
    }

    #[test]
    fn strategies_agree() {
        let mut cfg = EnumerationConfig::new(12, false);
        cfg.central_max_order = 4;
        let pruned = enumerate_solutions(&cfg).unwrap();
        cfg.strategy = Strategy::BruteForce;
        let brute = enumerate_solutions(&cfg).unwrap();
        assert_eq!(pruned, brute);
        assert!(pruned.is_clean());
    }

    #[test]
    fn partitions_merge_to_whole() {
        let cfg = EnumerationConfig::new(12, true);
        let whole = enumerate_solutions(&cfg).unwrap();
        let merged = (0..3)
            .map(|p| enumerate_solutions_part(&cfg, p, 3).unwrap())
            .reduce(EnumerationReport::merge)
            .unwrap();
        assert_eq!(whole, merged);
    }

    #[test]
    fn rejects_empty_grid() {
        assert!(enumerate_solutions(&EnumerationConfig::new(0, true)).is_err());
        assert!(enumerate_solutions_part(&EnumerationConfig::new(3, true), 2, 2).is_err());
    }
}
