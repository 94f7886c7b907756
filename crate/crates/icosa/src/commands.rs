//! The subcommands, as functions from parsed input to a report and an exit
//! status. Nothing here prints; `main` chooses the output format.

use std::fmt::Write as _;
use std::path::Path;

use icosa_core::classify::{
    check_sym3_match, classify_trivial_central, derive_power_relation, rationality_field,
    CaseLabel, ClassifyError, EnumerationConfig, EnumerationReport, Lemma65Case, Tuple,
};
use icosa_core::exactnum::Cyclo;
use icosa_core::icosa::{
    build_group, conjugacy_classes, pair_classes, verify_icosahedral_identities,
};
use icosa_core::lfactors::{local_l_factor, si3_sides, LocalLFactor};
use icosa_core::params::{Param, UnramifiedParam};
use serde_json::{json, Value};

use crate::json::{
    cyclo_from_json, cyclo_to_json, field_to_json, param_from_json, param_to_json,
    rational_to_json, root_to_json, witnesses_to_json,
};
use crate::render::{euler_factor_json_style, euler_factor_text};
use crate::verify::{self, parallel_census, Identity, VerifyConfig};
use crate::InputError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: u8,
    pub report: Value,
    pub text: String,
}

impl Outcome {
    fn new(ok: bool, report: Value, text: String) -> Self {
        Self {
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            report,
            text,
        }
    }
}

/// Reads a JSON document from a file, or from stdin for `-`.
pub fn read_input(path: &Path) -> Result<Value, InputError> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

/// `(a, w, c, wp)` from either explicit fields or two parameters.
pub fn classify_inputs(v: &Value) -> Result<[Cyclo; 4], InputError> {
    let field = |names: &[&str]| -> Result<Cyclo, InputError> {
        names
            .iter()
            .find_map(|n| v.get(*n))
            .ok_or_else(|| InputError::Shape(format!("missing \"{}\"", names[0])))
            .and_then(cyclo_from_json)
    };
    if v.get("a").is_some() {
        return Ok([
            field(&["a"])?,
            field(&["w"])?,
            field(&["c"])?,
            field(&["wp", "w'", "w_prime"])?,
        ]);
    }
    let pi = v.get("pi").ok_or_else(|| {
        InputError::Shape("expected fields a, w, c, wp or parameters pi, pi_prime".into())
    })?;
    let pi_prime = v
        .get("pi_prime")
        .ok_or_else(|| InputError::Shape("missing \"pi_prime\"".into()))?;
    let split = |p: UnramifiedParam| -> Result<(Cyclo, Cyclo), InputError> {
        let w = p.central();
        let (a, _) = p.as_pair()?;
        Ok((a.clone(), w))
    };
    let (a, w) = split(param_from_json(pi)?)?;
    let (c, wp) = split(param_from_json(pi_prime)?)?;
    Ok([a, w, c, wp])
}

pub fn classify(input: &Value, strict: bool) -> Result<Outcome, InputError> {
    let [a, w, c, wp] = classify_inputs(input)?;
    let report = check_sym3_match(&a, &w, &c, &wp)?;
    let (lhs, rhs) = si3_sides(&a, &w, &c, &wp)?;
    let si3 = lhs == rhs;
    let power = match derive_power_relation(&a, &w, &c, &wp) {
        Ok(r) => Some(r),
        Err(ClassifyError::Precondition { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let pi = Param::with_central(a.clone(), &w)?;
    let field = rationality_field(&pi)?;
    let lemma65 = if w.is_one() && wp.is_one() {
        Some(classify_trivial_central(&a, &c)?)
    } else {
        None
    };
    let labels: Vec<&str> = report.labels().iter().map(|l| l.as_str()).collect();
    let out = json!({
        "input": {
            "a": cyclo_to_json(&a),
            "w": cyclo_to_json(&w),
            "c": cyclo_to_json(&c),
            "wp": cyclo_to_json(&wp),
        },
        "sym3_match": report.sym3_match,
        "cases": labels,
        "witnesses": witnesses_to_json(&report),
        "adjoint_isomorphic": report.adjoint_isomorphic,
        "si3_local": si3,
        "power_relation": power.map(|p| p.as_str()),
        "rationality_field": field_to_json(&field),
        "lemma65": lemma65.map(lemma65_json),
    });
    let mut text = String::new();
    let _ = writeln!(text, "pi  = {{{}}}", join(pi.roots()));
    let _ = writeln!(text, "pi' = {{{}}}", join(Param::with_central(c.clone(), &wp)?.roots()));
    let _ = writeln!(text, "sym3 match: {}", report.sym3_match);
    let _ = writeln!(text, "cases: {}", if labels.is_empty() { "-".into() } else { labels.join(", ") });
    for case in &report.cases {
        let _ = writeln!(text, "  {}: {:?}", case.label(), case);
    }
    let _ = writeln!(text, "adjoint isomorphic: {}", report.adjoint_isomorphic);
    let _ = writeln!(text, "sym5 identity: {si3}");
    let _ = writeln!(
        text,
        "power relation: {}",
        power.map_or("n/a (hypotheses fail)", |p| p.as_str())
    );
    let _ = writeln!(text, "rationality field: {field}");
    if let Some(case) = lemma65 {
        let _ = writeln!(text, "trivial-central case: {}", lemma65_text(case));
    }
    let ok = !strict || (report.sym3_match && si3);
    Ok(Outcome::new(ok, out, text))
}

fn join(xs: &[Cyclo]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn lemma65_json(case: Lemma65Case) -> Value {
    match case {
        Lemma65Case::I { m } => json!({ "case": "i", "m": m }),
        other => json!({ "case": other.as_str() }),
    }
}

fn lemma65_text(case: Lemma65Case) -> String {
    match case {
        Lemma65Case::I { m } => format!("i (m = {m})"),
        other => other.as_str().to_owned(),
    }
}

pub fn verify(identity: &str, cfg: &VerifyConfig) -> Result<Outcome, InputError> {
    let ids = Identity::parse(identity)
        .ok_or_else(|| InputError::Shape(format!("unknown identity {identity:?}")))?;
    let results = verify::run(&ids, cfg);
    let violations: u64 = results.iter().map(|r| r.failure_count).sum();
    let report = json!({
        "seed": cfg.seed,
        "trials": cfg.trials,
        "max_order": cfg.max_order,
        "campaigns": results,
        "violations": violations,
    });
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(
            text,
            "{:<16} random {:>5}  sweep {:>7}  passes {:>7}  failures {}",
            r.identity, r.random_trials, r.sweep_cases, r.passes, r.failure_count
        );
        for (k, v) in &r.counts {
            let _ = writeln!(text, "    {k}: {v}");
        }
        for f in &r.failures {
            let _ = writeln!(text, "    FAIL {f}");
        }
    }
    let _ = writeln!(text, "violations: {violations}");
    Ok(Outcome::new(violations == 0, report, text))
}

fn tuple_json(t: &Tuple) -> Value {
    json!({
        "a": root_to_json(&t.a),
        "w": root_to_json(&t.w),
        "c": root_to_json(&t.c),
        "wp": root_to_json(&t.wp),
    })
}

pub fn enumeration_json(cfg: &EnumerationConfig, r: &EnumerationReport) -> Value {
    let violations: serde_json::Map<String, Value> = r
        .violation_lists()
        .iter()
        .map(|(name, list)| ((*name).to_owned(), Value::from(list.iter().map(tuple_json).collect::<Vec<_>>())))
        .collect();
    let cases: serde_json::Map<String, Value> = [CaseLabel::Twist, CaseLabel::Quartic, CaseLabel::Quintic]
        .iter()
        .map(|l| (l.as_str().to_owned(), json!(r.case_counts[l.index()])))
        .collect();
    json!({
        "config": {
            "max_order": cfg.max_order,
            "w_trivial": cfg.w_trivial,
            "central_max_order": cfg.central_max_order,
            "strategy": format!("{:?}", cfg.strategy).to_lowercase(),
            "backend": format!("{:?}", cfg.backend).to_lowercase(),
        },
        "central_pairs": r.central_pairs,
        "grid_size": r.grid_size,
        "sym3_matches": r.sym3_matches,
        "case_counts": cases,
        "adjoint_isomorphic": r.adjoint_isomorphic,
        "si3_holds": r.si3_holds,
        "trivial_central": {
            "case_i_m4": r.lemma65.case_i_m4,
            "case_i_m6": r.lemma65.case_i_m6,
            "case_ii": r.lemma65.case_ii,
            "excluded_by_sym5": r.lemma65.excluded,
        },
        "uncovered": r.uncovered_count(),
        "violations": violations,
        "clean": r.is_clean(),
    })
}

pub fn enumerate(cfg: &EnumerationConfig) -> Result<Outcome, InputError> {
    if cfg.max_order == 0 || cfg.central_max_order == 0 {
        return Err(InputError::Shape("orders must be at least 1".into()));
    }
    let r = parallel_census(cfg);
    let report = enumeration_json(cfg, &r);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "grid: orders <= {}, {} central pair(s), {} tuples",
        cfg.max_order, r.central_pairs, r.grid_size
    );
    let _ = writeln!(text, "sym3 matches: {}", r.sym3_matches);
    for l in [CaseLabel::Twist, CaseLabel::Quartic, CaseLabel::Quintic] {
        let _ = writeln!(text, "  {}: {}", l, r.case_counts[l.index()]);
    }
    let _ = writeln!(
        text,
        "trivial centre: case i (m=4) {}, case i (m=6) {}, case ii {}, excluded {}",
        r.lemma65.case_i_m4, r.lemma65.case_i_m6, r.lemma65.case_ii, r.lemma65.excluded
    );
    for (name, list) in r.violation_lists() {
        let _ = writeln!(text, "{name}: {}", list.len());
    }
    Ok(Outcome::new(r.is_clean(), report, text))
}

pub fn demo() -> Result<Outcome, InputError> {
    let g = build_group().map_err(|e| InputError::Shape(e.to_string()))?;
    let g = conjugacy_classes(g);
    let ids = verify_icosahedral_identities(&g);
    let pairings = pair_classes(&g);
    let mut classes = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "group order {}, {} classes", g.order(), g.classes.len());
    let mut all_consistent = true;
    for (i, p) in pairings.iter().enumerate() {
        let expected_sqrt5 = p.case == Lemma65Case::II;
        let field_ok = if expected_sqrt5 {
            p.field == icosa_core::exactnum::NumberFieldDesc::sqrt5()
        } else {
            p.field.is_rationals()
        };
        let consistent = p.case != Lemma65Case::None && field_ok;
        all_consistent &= consistent;
        classes.push(json!({
            "order": p.order,
            "size": p.size,
            "chi": cyclo_to_json(&ids.chi.values[i]),
            "chi_conjugate": cyclo_to_json(&ids.chi_conj.values[i]),
            "param": param_to_json(&p.param),
            "tau_param": param_to_json(&p.conjugate),
            "case": lemma65_json(p.case),
            "rationality_field": field_to_json(&p.field),
            "consistent": consistent,
        }));
        let _ = writeln!(
            text,
            "order {:>2} size {:>2}  chi = {:<28} case {:<10} field {}",
            p.order,
            p.size,
            ids.chi.values[i].to_string(),
            lemma65_text(p.case),
            p.field
        );
    }
    let _ = writeln!(text, "sym3(rho) = sym3(rho'): {}", ids.sym3_holds);
    let _ = writeln!(text, "sym5(rho) = sym2(rho') x rho: {}", ids.sym5_holds);
    let _ = writeln!(text, "rho != rho': {}", ids.not_self_conjugate);
    let _ = writeln!(text, "<chi, chi> = {}, <chi, chi'> = {}", ids.norm, ids.cross);
    let _ = writeln!(text, "trace field: {}", ids.trace_field);
    let ok = ids.all_hold() && all_consistent && g.order() == 120 && g.classes.len() == 9;
    let report = json!({
        "group_order": g.order(),
        "class_count": g.classes.len(),
        "classes": classes,
        "identities": {
            "sym3": ids.sym3_holds,
            "sym5": ids.sym5_holds,
            "not_self_conjugate": ids.not_self_conjugate,
            "norm": rational_to_json(&ids.norm),
            "cross": rational_to_json(&ids.cross),
            "trace_field": field_to_json(&ids.trace_field),
        },
        "all_consistent": ok,
    });
    Ok(Outcome::new(ok, report, text))
}

fn factor_json(l: &LocalLFactor, terms: usize) -> Value {
    json!({
        "q": l.q(),
        "inverse_roots": param_to_json(l.inverse_roots()),
        "euler_factor": euler_factor_json_style(l),
        "dirichlet_coeffs": l.dirichlet_coeffs(terms).iter().map(cyclo_to_json).collect::<Vec<_>>(),
    })
}

fn factor_text(l: &LocalLFactor, terms: usize, out: &mut String) {
    let _ = writeln!(out, "{}", euler_factor_text(l));
    for (k, c) in l.dirichlet_coeffs(terms).iter().enumerate() {
        let _ = writeln!(out, "  h_{k} = {c}");
    }
}

pub fn lfactor(input: &Value, q: Option<u64>, terms: usize) -> Result<Outcome, InputError> {
    if terms == 0 {
        return Err(InputError::Shape("terms must be at least 1".into()));
    }
    let q = q
        .or_else(|| input.get("q").and_then(Value::as_u64))
        .ok_or_else(|| InputError::Shape("missing residue field size q".into()))?;
    let mut text = String::new();
    if input.get("a").is_some() {
        // both sides of the local sym^5 identity
        let [a, w, c, wp] = classify_inputs(input)?;
        let (lhs, rhs) = si3_sides(&a, &w, &c, &wp)?;
        let (l1, l2) = (local_l_factor(&lhs, q)?, local_l_factor(&rhs, q)?);
        let agree = l1.dirichlet_coeffs(terms) == l2.dirichlet_coeffs(terms);
        let _ = writeln!(text, "sym5 side:");
        factor_text(&l1, terms, &mut text);
        let _ = writeln!(text, "tensor side:");
        factor_text(&l2, terms, &mut text);
        let _ = writeln!(text, "coefficients agree: {agree}");
        let report = json!({
            "sym5": factor_json(&l1, terms),
            "tensor": factor_json(&l2, terms),
            "coefficients_match": agree,
        });
        return Ok(Outcome::new(true, report, text));
    }
    let mut p = param_from_json(input)?;
    if let Some(m) = input.get("sym_power") {
        let m = m
            .as_u64()
            .and_then(|m| u32::try_from(m).ok())
            .ok_or_else(|| InputError::Shape("sym_power must be a non-negative integer".into()))?;
        p = p.sym_power(m)?;
    }
    let l = local_l_factor(&p, q)?;
    factor_text(&l, terms, &mut text);
    Ok(Outcome::new(true, factor_json(&l, terms), text))
}
