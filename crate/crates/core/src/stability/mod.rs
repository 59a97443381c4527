//! The δ-(semi)stability inequality `M(E•, α) + δ·μ (≥) 0` on numeric filtration data,
//! its reduction to finitely many templates, and the numeric constants of the
//! construction (the slope bound `C₁`, the twist `p` and the exponent `ε`).

pub mod profiles;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cones::{corner_set, critical_weight_vectors};
use crate::error::{Error, Result};
use crate::rep::{RepExpr, StateSet};
use crate::weights::{
    corner_basis, decompose, filtration_weight, mu, CornerCoefficients, WeightVector,
};
use crate::{int, Rational};

/// A weighted filtration `0 ⊂ E₁ ⊂ … ⊂ E_s ⊂ E` reduced to ranks, degrees and weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationData {
    pub r: usize,
    pub d: i64,
    /// `(rk Eⱼ, deg Eⱼ)`, ranks strictly increasing inside `1..r`.
    pub steps: Vec<(usize, i64)>,
    pub alpha: Vec<Rational>,
}

impl FiltrationData {
    pub fn new(r: usize, d: i64, steps: Vec<(usize, i64)>, alpha: Vec<Rational>) -> Result<Self> {
        let filt = FiltrationData { r, d, steps, alpha };
        filt.validate()?;
        Ok(filt)
    }

    /// A one-step filtration `0 ⊂ E' ⊂ E` with weight one.
    pub fn subbundle(r: usize, d: i64, rank: usize, degree: i64) -> Result<Self> {
        Self::new(r, d, vec![(rank, degree)], vec![Rational::one()])
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 2 {
            return Err(Error::InvalidRank(self.r));
        }
        filtration_weight(self.r, &self.ranks(), &self.alpha).map(|_| ())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|&(i, _)| i).collect()
    }

    /// `γ = Σ αⱼ γ^(iⱼ)`.
    pub fn weight_vector(&self) -> Result<WeightVector> {
        filtration_weight(self.r, &self.ranks(), &self.alpha)
    }

    /// The same filtration with every weight multiplied by `k > 0`.
    pub fn scaled(&self, k: &Rational) -> FiltrationData {
        FiltrationData {
            alpha: self.alpha.iter().map(|a| a * k).collect(),
            ..self.clone()
        }
    }
}

/// The declared generic state support of the decoration along a filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSpec {
    support: StateSet,
}

impl SupportSpec {
    pub fn new(support: StateSet) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(SupportSpec { support })
    }

    pub fn states(&self) -> &StateSet {
        &self.support
    }

    pub fn rank(&self) -> usize {
        self.support.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityParams {
    pub delta: Rational,
    /// Test stability (`>`) instead of semistability (`≥`).
    pub strict: bool,
}

impl StabilityParams {
    pub fn new(delta: Rational, strict: bool) -> Result<Self> {
        if !delta.is_positive() {
            return Err(Error::NonpositiveDelta);
        }
        Ok(StabilityParams { delta, strict })
    }
}

/// Outcome of one inequality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: Rational,
    pub passes: bool,
    /// `value = 0`, the equality case relevant for polystability.
    pub boundary: bool,
}

impl Verdict {
    pub fn from_value(value: Rational, strict: bool) -> Verdict {
        let boundary = value.is_zero();
        let passes = value.is_positive() || (boundary && !strict);
        Verdict {
            value,
            passes,
            boundary,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passes, self.boundary) {
            (true, true) => "pass (boundary)",
            (true, false) => "pass",
            (false, true) => "fail (boundary)",
            (false, false) => "fail",
        };
        write!(f, "{} [{}]", self.value, status)
    }
}

/// `M(E•, α) = Σ αⱼ (d·iⱼ - dⱼ·r)`.
pub fn m_value(filt: &FiltrationData) -> Rational {
    let r = filt.r as i64;
    filt.steps
        .iter()
        .zip(&filt.alpha)
        .fold(Rational::zero(), |acc, (&(i, dj), a)| {
            acc + a * int(filt.d * i as i64 - dj * r)
        })
}

fn filtration_mu(filt: &FiltrationData, supp: &SupportSpec) -> Result<Rational> {
    if supp.rank() != filt.r {
        return Err(Error::LengthMismatch {
            expected: filt.r,
            found: supp.rank(),
        });
    }
    if filt.steps.is_empty() {
        // γ = 0 pairs to zero with every state
        return Ok(Rational::zero());
    }
    mu(supp.states(), &filt.weight_vector()?)
}

/// `M(E•, α) + δ·μ(E•, α; τ)` compared with zero.
pub fn check(
    filt: &FiltrationData,
    supp: &SupportSpec,
    params: &StabilityParams,
) -> Result<Verdict> {
    filt.validate()?;
    let value = m_value(filt) + &params.delta * filtration_mu(filt, supp)?;
    Ok(Verdict::from_value(value, params.strict))
}

/// The one-step case `(d·rk E' - deg E'·r) + δ·μ(E') (≥) 0`.
pub fn check_subbundle(
    rank: usize,
    degree: i64,
    supp: &SupportSpec,
    r: usize,
    d: i64,
    params: &StabilityParams,
) -> Result<Verdict> {
    check(
        &FiltrationData::subbundle(r, d, rank, degree)?,
        supp,
        params,
    )
}

/// `M + δ·Σ σⱼ μⱼ` for a decoration of a direct sum `ρ₁ ⊕ … ⊕ ρ_s` with weights `σ`.
pub fn combine_direct_sum(
    filt: &FiltrationData,
    supports: &[SupportSpec],
    sigma: &[Rational],
    params: &StabilityParams,
) -> Result<Verdict> {
    filt.validate()?;
    if supports.len() != sigma.len() {
        return Err(Error::LengthMismatch {
            expected: supports.len(),
            found: sigma.len(),
        });
    }
    let total = sigma.iter().fold(Rational::zero(), |acc, s| acc + s);
    if sigma.is_empty() || sigma.iter().any(|s| !s.is_positive()) || !total.is_one() {
        return Err(Error::SigmaNotNormalized);
    }
    let mut weighted = Rational::zero();
    for (supp, s) in supports.iter().zip(sigma) {
        weighted += s * filtration_mu(filt, supp)?;
    }
    let value = m_value(filt) + &params.delta * weighted;
    Ok(Verdict::from_value(value, params.strict))
}

/// `Σ αⱼ (χ(E(n))·iⱼ - h⁰(Eⱼ(n))·r) + δ·μ`.
pub fn sectional_check(
    filt: &FiltrationData,
    chi_en: i64,
    h0: &[i64],
    mu: &Rational,
    params: &StabilityParams,
) -> Result<Verdict> {
    filt.validate()?;
    if h0.len() != filt.steps.len() {
        return Err(Error::LengthMismatch {
            expected: filt.steps.len(),
            found: h0.len(),
        });
    }
    let r = filt.r as i64;
    let sum = filt
        .steps
        .iter()
        .zip(h0)
        .zip(&filt.alpha)
        .fold(Rational::zero(), |acc, ((&(i, _), &h), a)| {
            acc + a * int(chi_en * i as i64 - h * r)
        });
    Ok(Verdict::from_value(sum + &params.delta * mu, params.strict))
}

/// `C₁ = δ·a·(r-1)/r`; a δ-semistable pair satisfies `μ(E') ≤ d/r + C₁`.
pub fn bound_c1(r: usize, a: u32, delta: &Rational) -> Rational {
    delta * int(a as i64) * int(r as i64 - 1) / int(r as i64)
}

/// `p = d + r(n + 1 - g)` and `ε = (p - a·δ)/(r·δ)`.
pub fn gieseker_epsilon(
    d: i64,
    r: usize,
    g: i64,
    n: i64,
    a: u32,
    delta: &Rational,
) -> Result<(BigInt, Rational)> {
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    if !delta.is_positive() {
        return Err(Error::NonpositiveDelta);
    }
    let r = BigInt::from(r);
    let p: BigInt = BigInt::from(d) + &r * (BigInt::from(n) + 1 - BigInt::from(g));
    let p_rat = Rational::from_integer(p.clone());
    let eps = (p_rat - int(a as i64) * delta) / (Rational::from_integer(r) * delta);
    Ok((p, eps))
}

/// The unique `δ > 0` with `M + δ·μ = 0`, when `M` and `μ` have opposite signs.
pub fn delta_threshold(filt: &FiltrationData, supp: &SupportSpec) -> Result<Option<Rational>> {
    filt.validate()?;
    let m = m_value(filt);
    let mu = filtration_mu(filt, supp)?;
    if mu.is_zero() || m.is_zero() || m.is_positive() == mu.is_positive() {
        return Ok(None);
    }
    Ok(Some(-m / mu))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplateKind {
    /// `0 ⊂ E' ⊂ E`, one per rank.
    Subbundle,
    /// A filtration attached to a non-corner critical weight vector.
    Filtration,
}

/// An inequality `Σ αⱼ (d·iⱼ - r·dⱼ) + δ·μ (≥) 0` that has to be tested for all
/// filtrations with the given ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionTemplate {
    pub kind: TemplateKind,
    pub r: usize,
    /// Primitive weight vector `Σ αⱼ γ^(iⱼ)` up to scaling.
    pub weight: WeightVector,
    pub coefficients: CornerCoefficients,
    pub ranks: Vec<usize>,
    /// The positive coefficients rescaled to coprime integers.
    pub alpha: Vec<BigInt>,
}

impl ConditionTemplate {
    fn from_weight(kind: TemplateKind, weight: WeightVector) -> ConditionTemplate {
        let coefficients = decompose(&weight);
        let ranks = coefficients.support_ranks();
        let positive: Vec<&Rational> = ranks
            .iter()
            .map(|&i| &coefficients.coefficients()[i - 1])
            .collect();
        let lcm = positive
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let scaled: Vec<BigInt> = positive.iter().map(|a| (*a * &lcm).to_integer()).collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        let alpha = scaled.into_iter().map(|a| a / &gcd).collect();
        ConditionTemplate {
            kind,
            r: weight.rank(),
            weight,
            coefficients,
            ranks,
            alpha,
        }
    }

    /// Coefficient of `deg E`, that is `Σ αⱼ iⱼ`.
    pub fn degree_coefficient(&self) -> BigInt {
        self.ranks
            .iter()
            .zip(&self.alpha)
            .map(|(&i, a)| a * BigInt::from(i))
            .sum()
    }

    /// Coefficients `r·αⱼ` with which `deg Eⱼ` is subtracted.
    pub fn step_coefficients(&self) -> Vec<BigInt> {
        self.alpha
            .iter()
            .map(|a| a * BigInt::from(self.r))
            .collect()
    }

    /// The filtration this template describes, for concrete degrees `dⱼ`.
    pub fn instantiate(&self, d: i64, degrees: &[i64]) -> Result<FiltrationData> {
        if degrees.len() != self.ranks.len() {
            return Err(Error::LengthMismatch {
                expected: self.ranks.len(),
                found: degrees.len(),
            });
        }
        FiltrationData::new(
            self.r,
            d,
            self.ranks
                .iter()
                .copied()
                .zip(degrees.iter().copied())
                .collect(),
            self.alpha
                .iter()
                .map(|a| Rational::from_integer(a.clone()))
                .collect(),
        )
    }

    /// `Σ (r·αⱼ)·deg Eⱼ (≤) (Σ αⱼ iⱼ)·deg E + δ·μ`.
    pub fn render(&self) -> String {
        let lhs: Vec<String> = self
            .step_coefficients()
            .iter()
            .zip(&self.ranks)
            .map(|(c, i)| format!("{c}·deg E{}", subscript(*i)))
            .collect();
        format!(
            "{} (≤) {}·deg E + δ·μ",
            lhs.join(" + "),
            self.degree_coefficient()
        )
    }
}

fn subscript(i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// The finite list of inequality templates that decides δ-(semi)stability for `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedConditions {
    pub r: usize,
    pub subbundle: Vec<ConditionTemplate>,
    pub filtration: Vec<ConditionTemplate>,
}

impl SimplifiedConditions {
    pub fn templates(&self) -> impl Iterator<Item = &ConditionTemplate> + '_ {
        self.subbundle.iter().chain(&self.filtration)
    }
}

/// Subbundle templates for every rank plus one filtration template for every
/// critical weight vector of `ρ` that is not a corner weight.
pub fn simplify(rep: &RepExpr, budget: u128) -> Result<SimplifiedConditions> {
    let (r, _) = rep.validate()?;
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    let k_rho = critical_weight_vectors(rep, budget)?;
    let corners = corner_set(r)?;
    let subbundle = (1..r)
        .map(|i| {
            Ok(ConditionTemplate::from_weight(
                TemplateKind::Subbundle,
                corner_basis(r, i)?.primitive(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let filtration = k_rho
        .into_iter()
        .filter(|g| !corners.contains(g))
        .map(|g| ConditionTemplate::from_weight(TemplateKind::Filtration, g))
        .collect();
    Ok(SimplifiedConditions {
        r,
        subbundle,
        filtration,
    })
}
