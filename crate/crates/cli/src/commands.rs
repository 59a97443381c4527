//! Document schemas of the subcommands. Each command reads one JSON object and
//! calls exactly one library operation.

use decostab_core::json::{
    array, child, coefficients_to_json, conditions_to_json, cone_from_json, cone_to_json,
    fan_to_json, field, filtration_from_json, integral_weight_to_json, parse_bool, parse_i64,
    parse_u32, parse_usize, rational_from_json, rational_to_json, rationals_from_json,
    rep_from_json, rep_to_json, states_from_json, states_to_json, torus_weight_from_json,
    verdict_to_json, weight_from_json, FiltrationDoc, JsonError, JsonResult,
};
use decostab_core::stability::profiles::{
    conic_critical_type, conic_minimal_support, conic_states, conic_support, framed_support,
    hitchin_nilpotent_mu, hitchin_support, profile_conic, profile_extension, profile_framed,
    profile_hitchin, RestrictionFlags,
};
use decostab_core::{
    bound_c1, check, check_subbundle, combine_direct_sum, critical_weight_vectors, decompose,
    delta_threshold, enumerate_states, gieseker_epsilon, homogeneity_degree, homogenize, m_value,
    mu, sectional_check, simplify, state_cell, state_containment, state_fan, Result, StateSet,
    SupportSpec, Verdict,
};
use serde_json::{json, Value};

use crate::{Command, ProfileCommand};

pub struct Output {
    pub document: Value,
    /// Outcome of a stability check, for `--assert-pass`.
    pub passes: Option<bool>,
}

impl From<Value> for Output {
    fn from(document: Value) -> Self {
        Output {
            document,
            passes: None,
        }
    }
}

impl From<Verdict> for Output {
    fn from(v: Verdict) -> Self {
        Output {
            document: verdict_to_json(&v),
            passes: Some(v.passes),
        }
    }
}

fn lift<T>(ptr: &str, r: Result<T>) -> JsonResult<T> {
    r.map_err(|e| JsonError::from_error(ptr, e))
}

fn req<'a>(doc: &'a Value, key: &str) -> JsonResult<(&'a Value, String)> {
    Ok((field(doc, "", key)?, child("", key)))
}

fn usize_at(doc: &Value, key: &str) -> JsonResult<usize> {
    let (v, p) = req(doc, key)?;
    parse_usize(v, &p)
}

fn i64_at(doc: &Value, key: &str) -> JsonResult<i64> {
    let (v, p) = req(doc, key)?;
    parse_i64(v, &p)
}

fn u32_at(doc: &Value, key: &str) -> JsonResult<u32> {
    let (v, p) = req(doc, key)?;
    parse_u32(v, &p)
}

fn bool_at(doc: &Value, key: &str) -> JsonResult<bool> {
    let (v, p) = req(doc, key)?;
    parse_bool(v, &p)
}

fn bool_or(doc: &Value, key: &str, default: bool) -> JsonResult<bool> {
    match doc.get(key) {
        Some(v) => parse_bool(v, &child("", key)),
        None => Ok(default),
    }
}

fn rep_at(doc: &Value) -> JsonResult<decostab_core::RepExpr> {
    let (v, p) = req(doc, "rep")?;
    rep_from_json(v, &p)
}

fn states_at(doc: &Value, key: &str, rank: Option<usize>) -> JsonResult<StateSet> {
    let (v, p) = req(doc, key)?;
    states_from_json(v, &p, rank)
}

fn support_at(doc: &Value, key: &str, rank: usize) -> JsonResult<SupportSpec> {
    let (v, p) = req(doc, key)?;
    lift(&p, SupportSpec::new(states_from_json(v, &p, Some(rank))?))
}

fn filtration_at(doc: &Value) -> JsonResult<FiltrationDoc> {
    filtration_from_json(doc, "")
}

fn pairs_at(doc: &Value, key: &str) -> JsonResult<Vec<(usize, usize)>> {
    let (v, p) = req(doc, key)?;
    array(v, &p)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let at = child(&p, i);
            let items = array(x, &at)?;
            if items.len() != 2 {
                return Err(JsonError::new(at, "expected a pair of indices"));
            }
            Ok((
                parse_usize(&items[0], &child(&at, 0))?,
                parse_usize(&items[1], &child(&at, 1))?,
            ))
        })
        .collect()
}

fn mu_doc(value: Result<decostab_core::Rational>, ptr: &str) -> JsonResult<Output> {
    Ok(json!({"mu": rational_to_json(&lift(ptr, value)?)}).into())
}

pub fn run(command: Command, doc: &Value, budget: u128) -> JsonResult<Output> {
    match command {
        Command::States => {
            let rep = rep_at(doc)?;
            Ok(states_to_json(&lift("/rep", enumerate_states(&rep))?).into())
        }
        Command::Degree => {
            let rep = rep_at(doc)?;
            Ok(json!({"degree": lift("/rep", homogeneity_degree(&rep))?}).into())
        }
        Command::Homogenize => {
            let (v, p) = req(doc, "summands")?;
            let summands = array(v, &p)?
                .iter()
                .enumerate()
                .map(|(i, s)| rep_from_json(s, &child(&p, i)))
                .collect::<JsonResult<Vec<_>>>()?;
            let kappa = u32_at(doc, "kappa")?;
            Ok(json!({"rep": rep_to_json(&lift("", homogenize(&summands, kappa))?)}).into())
        }
        Command::EnvelopeCheck => {
            let rep = rep_at(doc)?;
            let (a, b, c) = (u32_at(doc, "a")?, u32_at(doc, "b")?, u32_at(doc, "c")?);
            Ok(json!({"contained": lift("", state_containment(&rep, a, b, c))?}).into())
        }
        Command::Mu => {
            let (g, gp) = req(doc, "gamma")?;
            let gamma = weight_from_json(g, &gp)?;
            let a = states_at(doc, "A", Some(gamma.rank()))?;
            mu_doc(mu(&a, &gamma), "/A")
        }
        Command::Decompose => {
            let (g, gp) = req(doc, "gamma")?;
            let c = decompose(&weight_from_json(g, &gp)?);
            Ok(json!({
                "alpha": coefficients_to_json(&c),
                "total": rational_to_json(&c.total()),
            })
            .into())
        }
        Command::Cone => Ok(cone_to_json(&cone_from_json(doc, "")?).into()),
        Command::Cell => {
            let (c, cp) = req(doc, "chi")?;
            let chi = torus_weight_from_json(c, &cp)?;
            let a = states_at(doc, "A", Some(chi.rank()))?;
            Ok(cone_to_json(&lift(&cp, state_cell(&a, &chi))?).into())
        }
        Command::Fan => {
            let a = states_at(doc, "A", None)?;
            if doc.get("rep").is_some() {
                let states = lift("/rep", enumerate_states(&rep_at(doc)?))?;
                if states.rank() != a.rank() {
                    return Err(JsonError::new("/A", "rank differs from the representation"));
                }
                if let Some((i, _)) = a.distinct().enumerate().find(|(_, w)| !states.contains(w)) {
                    return Err(JsonError::new(
                        child("/A", i),
                        "not a state of the representation",
                    ));
                }
            }
            Ok(fan_to_json(&lift("/A", state_fan(&a))?).into())
        }
        Command::Critical => {
            let a = states_at(doc, "A", None)?;
            let fan = lift("/A", state_fan(&a))?;
            let extra = lift("/A", fan.extra_generators())?;
            Ok(json!({
                "critical": fan.is_critical(),
                "extra": extra.iter().map(integral_weight_to_json).collect::<Vec<_>>(),
            })
            .into())
        }
        Command::KRho => {
            let rep = rep_at(doc)?;
            let k = lift("/rep", critical_weight_vectors(&rep, budget))?;
            Ok(json!({"K": k.iter().map(integral_weight_to_json).collect::<Vec<_>>()}).into())
        }
        Command::MValue => {
            let f = filtration_at(doc)?;
            Ok(json!({"M": rational_to_json(&m_value(&f.filtration))}).into())
        }
        Command::Check => {
            let f = filtration_at(doc)?;
            Ok(lift(
                "",
                check(&f.filtration, f.require_support()?, f.require_params()?),
            )?
            .into())
        }
        Command::CheckSubbundle => {
            let r = usize_at(doc, "r")?;
            let supp = support_at(doc, "support", r)?;
            let params = decostab_core::json::params_from_json(doc, "")?
                .ok_or_else(|| JsonError::new("/delta", "missing field"))?;
            let v = check_subbundle(
                usize_at(doc, "rank")?,
                i64_at(doc, "degree")?,
                &supp,
                r,
                i64_at(doc, "d")?,
                &params,
            );
            Ok(lift("", v)?.into())
        }
        Command::Combine => {
            let f = filtration_at(doc)?;
            let (s, sp) = req(doc, "supports")?;
            let supports = array(s, &sp)?
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let at = child(&sp, i);
                    lift(
                        &at,
                        SupportSpec::new(states_from_json(x, &at, Some(f.filtration.r))?),
                    )
                })
                .collect::<JsonResult<Vec<_>>>()?;
            let (sig, sigp) = req(doc, "sigma")?;
            let sigma = rationals_from_json(sig, &sigp)?;
            let v = combine_direct_sum(&f.filtration, &supports, &sigma, f.require_params()?);
            Ok(lift(&sigp, v)?.into())
        }
        Command::Sectional => {
            let f = filtration_at(doc)?;
            let (h, hp) = req(doc, "h0")?;
            let h0 = array(h, &hp)?
                .iter()
                .enumerate()
                .map(|(i, x)| parse_i64(x, &child(&hp, i)))
                .collect::<JsonResult<Vec<_>>>()?;
            let (m, mp) = req(doc, "mu")?;
            let mu = rational_from_json(m, &mp)?;
            let v = sectional_check(
                &f.filtration,
                i64_at(doc, "chi")?,
                &h0,
                &mu,
                f.require_params()?,
            );
            Ok(lift(&hp, v)?.into())
        }
        Command::Epsilon => {
            let (dl, dp) = req(doc, "delta")?;
            let delta = rational_from_json(dl, &dp)?;
            let (p, eps) = lift(
                "",
                gieseker_epsilon(
                    i64_at(doc, "d")?,
                    usize_at(doc, "r")?,
                    i64_at(doc, "g")?,
                    i64_at(doc, "n")?,
                    u32_at(doc, "a")?,
                    &delta,
                ),
            )?;
            Ok(json!({"p": p.to_string(), "epsilon": rational_to_json(&eps)}).into())
        }
        Command::C1 => {
            let (dl, dp) = req(doc, "delta")?;
            let delta = rational_from_json(dl, &dp)?;
            let c1 = bound_c1(usize_at(doc, "r")?, u32_at(doc, "a")?, &delta);
            Ok(json!({"C1": rational_to_json(&c1)}).into())
        }
        Command::Simplify => {
            let rep = rep_at(doc)?;
            Ok(conditions_to_json(&lift("/rep", simplify(&rep, budget))?).into())
        }
        Command::Threshold => {
            let f = filtration_at(doc)?;
            let t = lift("", delta_threshold(&f.filtration, f.require_support()?))?;
            Ok(json!({"delta": t.as_ref().map(rational_to_json)}).into())
        }
        Command::Profile(p) => run_profile(p, doc),
    }
}

fn run_profile(command: ProfileCommand, doc: &Value) -> JsonResult<Output> {
    match command {
        ProfileCommand::Extension => mu_doc(
            profile_extension(
                usize_at(doc, "i")?,
                usize_at(doc, "dim_ker")?,
                usize_at(doc, "dim_cap")?,
                usize_at(doc, "r")?,
            ),
            "",
        ),
        ProfileCommand::Framed => {
            let (k, r) = (usize_at(doc, "k")?, usize_at(doc, "r")?);
            let in_kernel = bool_at(doc, "in_kernel")?;
            let m = lift("", profile_framed(k, in_kernel, r))?;
            let support = lift("", framed_support(k, in_kernel, r))?;
            Ok(json!({"mu": rational_to_json(&m), "support": states_to_json(&support)}).into())
        }
        ProfileCommand::Hitchin => {
            let (i, r) = (usize_at(doc, "i")?, usize_at(doc, "r")?);
            let invariant = bool_at(doc, "invariant")?;
            let superinvariant = bool_or(doc, "superinvariant", false)?;
            let eps_zero = bool_or(doc, "eps_zero", false)?;
            let m = lift(
                "",
                profile_hitchin(i, invariant, superinvariant, eps_zero, r),
            )?;
            let support = lift(
                "",
                hitchin_support(i, invariant, superinvariant, eps_zero, r),
            )?;
            Ok(json!({"mu": rational_to_json(&m), "support": states_to_json(&support)}).into())
        }
        ProfileCommand::ConicSupport => {
            let r = usize_at(doc, "r")?;
            let pairs = pairs_at(doc, "pairs")?;
            let (minimal, nu) = lift("/pairs", conic_minimal_support(&pairs, r))?;
            let minimal: Vec<_> = minimal.into_iter().collect();
            let states = lift("/pairs", conic_states(&minimal, r))?;
            Ok(json!({
                "minimal": minimal.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "nu": nu,
                "states": states_to_json(&states),
            })
            .into())
        }
        ProfileCommand::ConicMu => {
            let (c, k, r) = (
                u32_at(doc, "c_tau")?,
                usize_at(doc, "k")?,
                usize_at(doc, "r")?,
            );
            let c = u8::try_from(c).map_err(|_| JsonError::new("/c_tau", "expected 0, 1 or 2"))?;
            let m = lift("", profile_conic(c, k, r))?;
            let support = lift("", conic_support(c, k, r))?;
            Ok(json!({"mu": rational_to_json(&m), "support": states_to_json(&support)}).into())
        }
        ProfileCommand::ConicType => {
            let flags = match doc.get("pattern") {
                Some(_) => lift(
                    "/pattern",
                    RestrictionFlags::from_pattern(&pairs_at(doc, "pattern")?),
                )?,
                None => {
                    let (f, fp) = req(doc, "flags")?;
                    let get = |name: &str| match f.get(name) {
                        Some(v) => parse_bool(v, &child(&fp, name)),
                        None => Ok(false),
                    };
                    RestrictionFlags {
                        e1e2: get("e1e2")?,
                        e1e3: get("e1e3")?,
                        e1e: get("e1e")?,
                        e2e2: get("e2e2")?,
                        e2e3: get("e2e3")?,
                        e2e: get("e2e")?,
                        e3e3: get("e3e3")?,
                    }
                }
            };
            let c = lift("", conic_critical_type(&flags))?;
            Ok(json!({
                "type": c.kind.to_string(),
                "support": c.support.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "tests": c.tests.iter().map(|t| json!({
                    "ranks": [t.ranks.0, t.ranks.1],
                    "mu": rational_to_json(&t.mu),
                })).collect::<Vec<_>>(),
            })
            .into())
        }
        ProfileCommand::HitchinNilpotent => mu_doc(
            hitchin_nilpotent_mu(usize_at(doc, "r")?, bool_or(doc, "sigma_nonzero", false)?),
            "",
        ),
    }
}
