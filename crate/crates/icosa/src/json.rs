//! JSON encodings of exact values, parameters, fields and reports.
//!
//! A cyclotomic value is `{"conductor": n, "coeffs": ["num/den", ...]}` with
//! `phi(n)` coefficients in the power basis reduced modulo the `n`-th
//! cyclotomic polynomial. On input, `{"zeta": [n, k]}`, a rational string
//! and a plain integer are accepted as shorthands.

use icosa_core::classify::{CaseWitness, ClassificationReport};
use icosa_core::exactnum::{parse_rational, Cyclo, NumberFieldDesc, Rational, RootOfUnity};
use icosa_core::params::{
    ArchCharacter, ArchParam, Param, SteinbergBlock, SteinbergParam, UnramifiedParam,
};
use serde_json::{json, Map, Value};

use crate::InputError;

fn shape(msg: impl Into<String>) -> InputError {
    InputError::Shape(msg.into())
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational, InputError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| shape(format!("rational must be an integer or a string, got {n}"))),
        other => Err(shape(format!("expected a rational, got {other}"))),
    }
}

pub fn cyclo_to_json(x: &Cyclo) -> Value {
    json!({
        "conductor": x.conductor(),
        "coeffs": x.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

pub fn cyclo_from_json(v: &Value) -> Result<Cyclo, InputError> {
    match v {
        Value::Object(m) if m.contains_key("zeta") => {
            let pair = m["zeta"]
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| shape("\"zeta\" must be [n, k]"))?;
            let n = pair[0]
                .as_u64()
                .filter(|&n| n >= 1)
                .ok_or_else(|| shape("zeta order must be a positive integer"))?;
            let k = pair[1].as_i64().ok_or_else(|| shape("zeta exponent must be an integer"))?;
            Ok(Cyclo::root_of_unity(n, k))
        }
        Value::Object(m) => {
            let n = m
                .get("conductor")
                .and_then(Value::as_u64)
                .ok_or_else(|| shape("missing positive integer \"conductor\""))?;
            let coeffs = m
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| shape("missing \"coeffs\" array"))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Cyclo::from_coeffs(n, &coeffs)?)
        }
        Value::String(_) | Value::Number(_) => Ok(Cyclo::from_rational(&rational_from_json(v)?)),
        other => Err(shape(format!("expected a cyclotomic value, got {other}"))),
    }
}

pub fn root_to_json(r: &RootOfUnity) -> Value {
    json!({ "zeta": [r.order(), r.exponent()] })
}

pub fn param_to_json(p: &UnramifiedParam) -> Value {
    json!({ "inverse_roots": p.roots().iter().map(cyclo_to_json).collect::<Vec<_>>() })
}

pub fn param_from_json(v: &Value) -> Result<UnramifiedParam, InputError> {
    let roots = v
        .get("inverse_roots")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing \"inverse_roots\" array"))?
        .iter()
        .map(cyclo_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Param::new(roots)?)
}

pub fn field_to_json(f: &NumberFieldDesc) -> Value {
    json!({ "conductor": f.conductor(), "subgroup": f.subgroup() })
}

pub fn field_from_json(v: &Value) -> Result<NumberFieldDesc, InputError> {
    let n = v
        .get("conductor")
        .and_then(Value::as_u64)
        .filter(|&n| n >= 1)
        .ok_or_else(|| shape("missing positive integer \"conductor\""))?;
    let gens = v
        .get("subgroup")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing \"subgroup\" array"))?
        .iter()
        .map(|g| g.as_u64().ok_or_else(|| shape("subgroup entries must be integers")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NumberFieldDesc::new(n, &gens))
}

pub fn steinberg_to_json(p: &SteinbergParam) -> Value {
    let blocks: Vec<Value> = p
        .blocks()
        .iter()
        .map(|b| json!({ "lambda_exp": b.lambda_exp, "size": b.size }))
        .collect();
    json!({ "blocks": blocks })
}

pub fn steinberg_from_json(v: &Value) -> Result<SteinbergParam, InputError> {
    let blocks = v
        .get("blocks")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing \"blocks\" array"))?
        .iter()
        .map(|b| {
            let lambda_exp = b.get("lambda_exp").and_then(Value::as_i64);
            let size = b.get("size").and_then(Value::as_u64).and_then(|s| u32::try_from(s).ok());
            match (lambda_exp, size) {
                (Some(lambda_exp), Some(size)) => Ok(SteinbergBlock { lambda_exp, size }),
                _ => Err(shape("block needs integer \"lambda_exp\" and \"size\"")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SteinbergParam::new(blocks)?)
}

pub fn arch_to_json(p: &ArchParam) -> Value {
    let exps: Vec<Value> = p
        .roots()
        .iter()
        .map(|x| json!({ "m": x.m, "two_s": rational_to_json(&x.two_s) }))
        .collect();
    json!({ "exponents": exps })
}

pub fn arch_from_json(v: &Value) -> Result<ArchParam, InputError> {
    let exps = v
        .get("exponents")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing \"exponents\" array"))?
        .iter()
        .map(|e| {
            let m = e.get("m").and_then(Value::as_i64).ok_or_else(|| shape("exponent needs integer \"m\""))?;
            let two_s = rational_from_json(e.get("two_s").unwrap_or(&json!(0)))?;
            Ok(ArchCharacter::new(m, two_s))
        })
        .collect::<Result<Vec<_>, InputError>>()?;
    Ok(Param::new(exps)?)
}

/// Witnesses keyed by case label.
pub fn witnesses_to_json(report: &ClassificationReport<Cyclo>) -> Value {
    let mut out = Map::new();
    for case in &report.cases {
        let body = match case {
            CaseWitness::Twist { z } => json!({ "z": cyclo_to_json(z) }),
            CaseWitness::Quartic { z, mu, a } => {
                json!({ "z": cyclo_to_json(z), "mu": cyclo_to_json(mu), "a": cyclo_to_json(a) })
            }
            CaseWitness::Quintic { z, zeta, a } => {
                json!({ "z": cyclo_to_json(z), "zeta": cyclo_to_json(zeta), "a": cyclo_to_json(a) })
            }
        };
        out.insert(case.label().as_str().to_owned(), body);
    }
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclo_round_trip() {
        let x = &Cyclo::root_of_unity(10, 3) + &Cyclo::from_rational(&parse_rational("-2/7").unwrap());
        let v = cyclo_to_json(&x);
        assert_eq!(cyclo_from_json(&v).unwrap(), x);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(cyclo_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), x);
    }

    #[test]
    fn cyclo_shorthands() {
        assert_eq!(cyclo_from_json(&json!({"zeta": [10, 3]})).unwrap(), Cyclo::root_of_unity(10, 3));
        assert_eq!(cyclo_from_json(&json!("1/2")).unwrap(), Cyclo::from_rational(&parse_rational("1/2").unwrap()));
        assert_eq!(cyclo_from_json(&json!(3)).unwrap(), Cyclo::from_int(3));
        assert!(cyclo_from_json(&json!({"conductor": 5, "coeffs": ["1"]})).is_err());
        assert!(cyclo_from_json(&json!("1/0")).is_err());
        assert!(cyclo_from_json(&json!([1])).is_err());
    }

    #[test]
    fn param_and_field_round_trip() {
        let p = Param::pair(Cyclo::root_of_unity(5, 1), Cyclo::root_of_unity(5, 4)).unwrap();
        assert_eq!(param_from_json(&param_to_json(&p)).unwrap(), p);
        let f = NumberFieldDesc::sqrt5();
        assert_eq!(field_to_json(&f), json!({"conductor": 5, "subgroup": [1, 4]}));
        assert_eq!(field_from_json(&field_to_json(&f)).unwrap(), f);
        assert!(param_from_json(&json!({"inverse_roots": [0]})).is_err());
    }

    #[test]
    fn steinberg_and_arch_round_trip() {
        let s = SteinbergParam::special(3);
        assert_eq!(steinberg_from_json(&steinberg_to_json(&s)).unwrap(), s);
        let a = Param::pair(ArchCharacter::angular(2), ArchCharacter::new(-2, parse_rational("1/2").unwrap())).unwrap();
        assert_eq!(arch_from_json(&arch_to_json(&a)).unwrap(), a);
    }
}
