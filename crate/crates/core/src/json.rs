//! JSON document formats. Rationals are written as `"p/q"` strings; integers are
//! accepted wherever a rational is expected. Parse errors carry a JSON pointer to the
//! offending field.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cones::{Cone, StateFan};
use crate::rep::{RepExpr, StateSet, TorusWeight};
use crate::stability::{
    ConditionTemplate, FiltrationData, SimplifiedConditions, StabilityParams, SupportSpec,
    TemplateKind, Verdict,
};
use crate::weights::{CornerCoefficients, WeightVector};
use crate::{Error, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonError {
    /// JSON pointer (RFC 6901) of the offending value; empty for the whole document.
    pub pointer: String,
    pub message: String,
    /// The library error behind a semantic failure, if any.
    pub source: Option<Error>,
}

impl JsonError {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        JsonError {
            pointer: pointer.into(),
            message: message.into(),
            source: None,
        }
    }

    pub fn from_error(pointer: impl Into<String>, err: Error) -> Self {
        JsonError {
            pointer: pointer.into(),
            message: err.to_string(),
            source: Some(err),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": self.message, "pointer": self.pointer})
    }
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pointer.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.pointer, self.message)
        }
    }
}

impl std::error::Error for JsonError {}

pub type JsonResult<T> = std::result::Result<T, JsonError>;

pub fn child(ptr: &str, key: impl fmt::Display) -> String {
    let key = key.to_string().replace('~', "~0").replace('/', "~1");
    format!("{ptr}/{key}")
}

fn lift<T>(ptr: &str, r: crate::Result<T>) -> JsonResult<T> {
    r.map_err(|e| JsonError::from_error(ptr, e))
}

pub fn field<'a>(v: &'a Value, ptr: &str, key: &str) -> JsonResult<&'a Value> {
    v.as_object()
        .ok_or_else(|| JsonError::new(ptr, "expected an object"))?
        .get(key)
        .ok_or_else(|| JsonError::new(child(ptr, key), "missing field"))
}

pub fn array<'a>(v: &'a Value, ptr: &str) -> JsonResult<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| JsonError::new(ptr, "expected an array"))
}

pub fn parse_i64(v: &Value, ptr: &str) -> JsonResult<i64> {
    v.as_i64()
        .ok_or_else(|| JsonError::new(ptr, "expected an integer"))
}

pub fn parse_usize(v: &Value, ptr: &str) -> JsonResult<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| JsonError::new(ptr, "expected a non-negative integer"))
}

pub fn parse_u32(v: &Value, ptr: &str) -> JsonResult<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| JsonError::new(ptr, "expected a non-negative integer"))
}

pub fn parse_bool(v: &Value, ptr: &str) -> JsonResult<bool> {
    v.as_bool()
        .ok_or_else(|| JsonError::new(ptr, "expected a boolean"))
}

fn int_array(v: &Value, ptr: &str) -> JsonResult<Vec<i64>> {
    array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_i64(x, &child(ptr, i)))
        .collect()
}

fn bigint_value(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

// rationals

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn parse_rational_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn rational_from_json(v: &Value, ptr: &str) -> JsonResult<Rational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(BigInt::from(x)))
            .ok_or_else(|| JsonError::new(ptr, "expected an integer or a \"p/q\" string")),
        Value::String(s) => parse_rational_str(s)
            .ok_or_else(|| JsonError::new(ptr, format!("cannot parse {s:?} as a rational"))),
        _ => Err(JsonError::new(
            ptr,
            "expected an integer or a \"p/q\" string",
        )),
    }
}

pub fn rationals_to_json(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

pub fn rationals_from_json(v: &Value, ptr: &str) -> JsonResult<Vec<Rational>> {
    array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational_from_json(x, &child(ptr, i)))
        .collect()
}

// representations

pub fn rep_to_json(rep: &RepExpr) -> Value {
    match rep {
        RepExpr::Std(r) => json!({"std": r}),
        RepExpr::Trivial(r) => json!({"trivial": r}),
        RepExpr::Dual(e) => json!({"dual": rep_to_json(e)}),
        RepExpr::Tensor(a, b) => json!({"tensor": [rep_to_json(a), rep_to_json(b)]}),
        RepExpr::Sym(k, e) => json!({"sym": [k, rep_to_json(e)]}),
        RepExpr::Wedge(k, e) => json!({"wedge": [k, rep_to_json(e)]}),
        RepExpr::DirectSum(items) => {
            json!({"dsum": items.iter().map(rep_to_json).collect::<Vec<_>>()})
        }
        RepExpr::DetPow(r, b) => json!({"det": [r, b]}),
    }
}

fn pair<'a>(v: &'a Value, ptr: &str) -> JsonResult<(&'a Value, &'a Value)> {
    match array(v, ptr)?.as_slice() {
        [a, b] => Ok((a, b)),
        _ => Err(JsonError::new(ptr, "expected an array of two elements")),
    }
}

pub fn rep_from_json(v: &Value, ptr: &str) -> JsonResult<RepExpr> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::new(ptr, "expected a representation object"))?;
    if obj.len() != 1 {
        return Err(JsonError::new(
            ptr,
            "a representation object has exactly one key",
        ));
    }
    let (key, body) = obj.iter().next().expect("one key");
    let at = child(ptr, key);
    let rep = match key.as_str() {
        "std" | "trivial" => {
            let r = parse_usize(body, &at)?;
            if r == 0 {
                return Err(JsonError::from_error(at, Error::ZeroRank));
            }
            if key == "std" {
                RepExpr::std(r)
            } else {
                RepExpr::trivial(r)
            }
        }
        "dual" => RepExpr::dual(rep_from_json(body, &at)?),
        "tensor" => {
            let (a, b) = pair(body, &at)?;
            let a = rep_from_json(a, &child(&at, 0))?;
            let b = rep_from_json(b, &child(&at, 1))?;
            lift(&at, RepExpr::tensor(a, b))?
        }
        "sym" | "wedge" => {
            let (k, e) = pair(body, &at)?;
            let k = parse_u32(k, &child(&at, 0))?;
            let e = rep_from_json(e, &child(&at, 1))?;
            if key == "sym" {
                lift(&at, RepExpr::sym(k, e))?
            } else {
                lift(&at, RepExpr::wedge(k, e))?
            }
        }
        "dsum" => {
            let items = array(body, &at)?
                .iter()
                .enumerate()
                .map(|(i, x)| rep_from_json(x, &child(&at, i)))
                .collect::<JsonResult<Vec<_>>>()?;
            lift(&at, RepExpr::direct_sum(items))?
        }
        "det" => {
            let (r, b) = pair(body, &at)?;
            let r = parse_usize(r, &child(&at, 0))?;
            if r == 0 {
                return Err(JsonError::from_error(child(&at, 0), Error::ZeroRank));
            }
            RepExpr::det(r, parse_i64(b, &child(&at, 1))?)
        }
        other => {
            return Err(JsonError::new(
                at,
                format!("unknown representation {other:?}"),
            ))
        }
    };
    Ok(rep)
}

// weights and states

pub fn torus_weight_to_json(w: &TorusWeight) -> Value {
    Value::from(w.entries().to_vec())
}

pub fn torus_weight_from_json(v: &Value, ptr: &str) -> JsonResult<TorusWeight> {
    Ok(TorusWeight::new(int_array(v, ptr)?))
}

/// `[{"chi": [...], "mult": m}, ...]` in lexicographic order.
pub fn states_to_json(states: &StateSet) -> Value {
    Value::Array(
        states
            .iter()
            .map(|(w, m)| {
                let mult =
                    u64::try_from(m).map_or_else(|_| Value::String(m.to_string()), Value::from);
                json!({"chi": torus_weight_to_json(w), "mult": mult})
            })
            .collect(),
    )
}

/// Accepts `[{"chi": [...], "mult": m}, ...]` or a plain list of integer arrays.
/// `rank` is required to build an empty set and checked otherwise.
pub fn states_from_json(v: &Value, ptr: &str, rank: Option<usize>) -> JsonResult<StateSet> {
    let items = array(v, ptr)?;
    let mut entries = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let at = child(ptr, i);
        let entry = if item.is_object() {
            let chi = torus_weight_from_json(field(item, &at, "chi")?, &child(&at, "chi"))?;
            let mult = match item.get("mult") {
                None => 1,
                Some(m) => {
                    let mp = child(&at, "mult");
                    let m = match m {
                        Value::String(s) => s.parse::<u128>().ok(),
                        _ => m.as_u64().map(u128::from),
                    }
                    .ok_or_else(|| JsonError::new(&mp, "expected a positive multiplicity"))?;
                    if m == 0 {
                        return Err(JsonError::new(mp, "expected a positive multiplicity"));
                    }
                    m
                }
            };
            (chi, mult, at)
        } else {
            (torus_weight_from_json(item, &at)?, 1, at)
        };
        entries.push(entry);
    }
    let rank = match (rank, entries.first()) {
        (Some(r), _) => r,
        (None, Some((w, _, _))) => w.rank(),
        (None, None) => {
            return Err(JsonError::new(
                ptr,
                "cannot infer the rank of an empty state set",
            ))
        }
    };
    let mut set = StateSet::new(rank);
    for (w, m, at) in entries {
        lift(&at, set.insert(w, m))?;
    }
    Ok(set)
}

pub fn weight_to_json(g: &WeightVector) -> Value {
    rationals_to_json(g.entries())
}

pub fn weight_from_json(v: &Value, ptr: &str) -> JsonResult<WeightVector> {
    lift(ptr, WeightVector::new(rationals_from_json(v, ptr)?))
}

/// Integral weight vectors are written as integer arrays.
pub fn integral_weight_to_json(g: &WeightVector) -> Value {
    if g.is_integral() {
        Value::Array(
            g.entries()
                .iter()
                .map(|x| bigint_value(&x.to_integer()))
                .collect(),
        )
    } else {
        weight_to_json(g)
    }
}

pub fn coefficients_to_json(c: &CornerCoefficients) -> Value {
    rationals_to_json(c.coefficients())
}

// cones

pub fn cone_to_json(cone: &Cone) -> Value {
    json!({
        "rays": cone.rays().iter().map(integral_weight_to_json).collect::<Vec<_>>(),
        "halfspaces": cone.halfspaces().iter().map(torus_weight_to_json).collect::<Vec<_>>(),
        "full_dimensional": cone.is_full_dimensional(),
    })
}

/// Cone given by halfspaces `{"rank": r, "halfspaces": [[...], ...]}`; the facets of
/// the dominant cone are implied.
pub fn cone_from_json(v: &Value, ptr: &str) -> JsonResult<Cone> {
    let hs_ptr = child(ptr, "halfspaces");
    let halfspaces = match v.get("halfspaces") {
        Some(h) => array(h, &hs_ptr)?
            .iter()
            .enumerate()
            .map(|(i, x)| torus_weight_from_json(x, &child(&hs_ptr, i)))
            .collect::<JsonResult<Vec<_>>>()?,
        None => Vec::new(),
    };
    let r = match v.get("rank") {
        Some(r) => parse_usize(r, &child(ptr, "rank"))?,
        None => halfspaces
            .first()
            .map(TorusWeight::rank)
            .ok_or_else(|| JsonError::new(child(ptr, "rank"), "missing field"))?,
    };
    lift(ptr, Cone::from_halfspaces(r, halfspaces))
}

pub fn fan_to_json(fan: &StateFan) -> Value {
    let cells: Map<String, Value> = fan
        .cells()
        .iter()
        .map(|(chi, cone)| (torus_weight_to_json(chi).to_string(), cone_to_json(cone)))
        .collect();
    json!({
        "A": fan.base().distinct().map(torus_weight_to_json).collect::<Vec<_>>(),
        "cells": cells,
        "K": fan.generators().iter().map(integral_weight_to_json).collect::<Vec<_>>(),
        "critical": fan.is_critical(),
    })
}

// stability

/// A filtration document with its optional support and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationDoc {
    pub filtration: FiltrationData,
    pub support: Option<SupportSpec>,
    pub params: Option<StabilityParams>,
}

impl FiltrationDoc {
    pub fn require_support(&self) -> JsonResult<&SupportSpec> {
        self.support
            .as_ref()
            .ok_or_else(|| JsonError::new("/support", "missing field"))
    }

    pub fn require_params(&self) -> JsonResult<&StabilityParams> {
        self.params
            .as_ref()
            .ok_or_else(|| JsonError::new("/delta", "missing field"))
    }
}

pub fn steps_from_json(v: &Value, ptr: &str) -> JsonResult<Vec<(usize, i64)>> {
    array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let at = child(ptr, i);
            let (rank, deg) = pair(s, &at)?;
            Ok((
                parse_usize(rank, &child(&at, 0))?,
                parse_i64(deg, &child(&at, 1))?,
            ))
        })
        .collect()
}

pub fn params_from_json(v: &Value, ptr: &str) -> JsonResult<Option<StabilityParams>> {
    let Some(delta) = v.get("delta") else {
        return Ok(None);
    };
    let dp = child(ptr, "delta");
    let delta = rational_from_json(delta, &dp)?;
    let strict = match v.get("strict") {
        Some(s) => parse_bool(s, &child(ptr, "strict"))?,
        None => false,
    };
    lift(&dp, StabilityParams::new(delta, strict)).map(Some)
}

pub fn filtration_from_json(v: &Value, ptr: &str) -> JsonResult<FiltrationDoc> {
    let r = parse_usize(field(v, ptr, "r")?, &child(ptr, "r"))?;
    let d = parse_i64(field(v, ptr, "d")?, &child(ptr, "d"))?;
    let steps_ptr = child(ptr, "steps");
    let steps = match v.get("steps") {
        Some(s) => steps_from_json(s, &steps_ptr)?,
        None => Vec::new(),
    };
    let alpha_ptr = child(ptr, "alpha");
    let alpha = match v.get("alpha") {
        Some(a) => rationals_from_json(a, &alpha_ptr)?,
        None => vec![Rational::from_integer(BigInt::from(1)); steps.len()],
    };
    let filtration = FiltrationData::new(r, d, steps, alpha).map_err(|e| {
        let at = match e {
            Error::InvalidRank(_) => child(ptr, "r"),
            Error::RankOrder { .. } => steps_ptr.clone(),
            _ => alpha_ptr.clone(),
        };
        JsonError::from_error(at, e)
    })?;
    let support = match v.get("support") {
        Some(s) => {
            let sp = child(ptr, "support");
            let states = states_from_json(s, &sp, Some(r))?;
            Some(lift(&sp, SupportSpec::new(states))?)
        }
        None => None,
    };
    let params = params_from_json(v, ptr)?;
    Ok(FiltrationDoc {
        filtration,
        support,
        params,
    })
}

pub fn filtration_to_json(doc: &FiltrationDoc) -> Value {
    let f = &doc.filtration;
    let mut out = Map::new();
    out.insert("r".into(), Value::from(f.r));
    out.insert("d".into(), Value::from(f.d));
    out.insert(
        "steps".into(),
        Value::Array(f.steps.iter().map(|&(i, d)| json!([i, d])).collect()),
    );
    out.insert("alpha".into(), rationals_to_json(&f.alpha));
    if let Some(s) = &doc.support {
        out.insert("support".into(), states_to_json(s.states()));
    }
    if let Some(p) = &doc.params {
        out.insert("delta".into(), rational_to_json(&p.delta));
        out.insert("strict".into(), Value::Bool(p.strict));
    }
    Value::Object(out)
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    json!({
        "value": rational_to_json(&v.value),
        "passes": v.passes,
        "boundary": v.boundary,
    })
}

pub fn verdict_from_json(v: &Value, ptr: &str) -> JsonResult<Verdict> {
    Ok(Verdict {
        value: rational_from_json(field(v, ptr, "value")?, &child(ptr, "value"))?,
        passes: parse_bool(field(v, ptr, "passes")?, &child(ptr, "passes"))?,
        boundary: parse_bool(field(v, ptr, "boundary")?, &child(ptr, "boundary"))?,
    })
}

pub fn template_to_json(t: &ConditionTemplate) -> Value {
    json!({
        "kind": match t.kind {
            TemplateKind::Subbundle => "subbundle",
            TemplateKind::Filtration => "filtration",
        },
        "weight": integral_weight_to_json(&t.weight),
        "coefficients": coefficients_to_json(&t.coefficients),
        "ranks": t.ranks,
        "alpha": t.alpha.iter().map(bigint_value).collect::<Vec<_>>(),
        "degree_coefficient": bigint_value(&t.degree_coefficient()),
        "step_coefficients": t.step_coefficients().iter().map(bigint_value).collect::<Vec<_>>(),
        "inequality": t.render(),
    })
}

pub fn conditions_to_json(c: &SimplifiedConditions) -> Value {
    json!({
        "r": c.r,
        "subbundle": c.subbundle.iter().map(template_to_json).collect::<Vec<_>>(),
        "filtration": c.filtration.iter().map(template_to_json).collect::<Vec<_>>(),
    })
}
