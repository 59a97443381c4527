//! Weight vectors of one-parameter subgroups of `SL(r)` and Hilbert–Mumford weights.
//!
//! The basis of `C^r` is fixed once and for all; a one-parameter subgroup is then
//! determined by its weight vector `γ₁ ≤ … ≤ γ_r`, `Σγᵢ = 0`. Choosing a basis adapted
//! to a filtration is expressed by the caller through the support set passed to [`mu`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rep::{StateSet, TorusWeight};
use crate::{int, Rational};

/// Rational weight vector `γ` with non-decreasing entries summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotOrdered);
        }
        if !entries
            .iter()
            .fold(Rational::zero(), |acc, x| acc + x)
            .is_zero()
        {
            return Err(Error::NonZeroSum);
        }
        Ok(WeightVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(r: usize) -> Self {
        WeightVector(vec![Rational::zero(); r])
    }

    pub(crate) fn new_unchecked(entries: Vec<Rational>) -> Self {
        WeightVector(entries)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn add(&self, other: &WeightVector) -> Result<WeightVector> {
        check_len(self.rank(), other.rank())?;
        Ok(WeightVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Multiplies by a non-negative rational.
    pub fn scale(&self, k: &Rational) -> WeightVector {
        assert!(
            !k.is_negative(),
            "scaling a weight vector by a negative factor"
        );
        WeightVector(self.0.iter().map(|x| x * k).collect())
    }

    /// The unique primitive integral vector on the ray through `self` (content one).
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> WeightVector {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return self.clone();
        }
        WeightVector(
            ints.into_iter()
                .map(|x| Rational::from_integer(x / &g))
                .collect(),
        )
    }

    /// Integer entries, when all entries are integers that fit in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Coefficients `α₁, …, α_{r-1} ≥ 0` of `γ = Σ αᵢ γ^(i)` in the corner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCoefficients(Vec<Rational>);

impl CornerCoefficients {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.iter().any(Signed::is_negative) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(CornerCoefficients(coefficients))
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    /// `Σ αᵢ`.
    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// The ranks `i` with `αᵢ > 0`, i.e. the steps of the associated filtration.
    pub fn support_ranks(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_positive())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `Σ αᵢ γ^(i)` for rank `r = len + 1`.
    pub fn recompose(&self) -> WeightVector {
        let r = self.0.len() + 1;
        let mut out = vec![Rational::zero(); r];
        for (i, a) in self.0.iter().enumerate() {
            let corner = corner_entries(r, i + 1);
            for (o, c) in out.iter_mut().zip(corner) {
                *o += a * c;
            }
        }
        WeightVector(out)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

fn corner_entries(r: usize, i: usize) -> impl Iterator<Item = Rational> {
    let (low, high) = (i as i64 - r as i64, i as i64);
    (0..r).map(move |p| if p < i { int(low) } else { int(high) })
}

/// The corner weight `γ^(i) = (i-r, …, i-r, i, …, i)` with `i` leading entries `i-r`.
pub fn corner_basis(r: usize, i: usize) -> Result<WeightVector> {
    if i == 0 || i >= r {
        return Err(Error::IndexOutOfRange { i, r });
    }
    Ok(WeightVector(corner_entries(r, i).collect()))
}

/// `αᵢ = (γ_{i+1} - γᵢ)/r`, so that `γ = Σ αᵢ γ^(i)`.
pub fn decompose(gamma: &WeightVector) -> CornerCoefficients {
    let r = int(gamma.rank() as i64);
    CornerCoefficients(gamma.0.windows(2).map(|w| (&w[1] - &w[0]) / &r).collect())
}

/// The natural pairing `Σ γᵢ χᵢ`.
pub fn pairing(gamma: &WeightVector, chi: &TorusWeight) -> Result<Rational> {
    check_len(gamma.rank(), chi.rank())?;
    Ok(gamma
        .0
        .iter()
        .zip(chi.entries())
        .fold(Rational::zero(), |acc, (g, &c)| acc + g * int(c)))
}

/// `μ = -min{⟨γ, χ⟩ : χ ∈ support}`. Multiplicities are ignored.
pub fn mu(support: &StateSet, gamma: &WeightVector) -> Result<Rational> {
    check_len(gamma.rank(), support.rank())?;
    let mut min: Option<Rational> = None;
    for chi in support.distinct() {
        let p = pairing(gamma, chi)?;
        if min.as_ref().is_none_or(|m| p < *m) {
            min = Some(p);
        }
    }
    min.map(|m| -m).ok_or(Error::EmptySupport)
}

/// The weight vector `Σ αⱼ γ^(iⱼ)` of a weighted filtration with ranks `i₁ < … < i_s`.
pub fn filtration_weight(r: usize, ranks: &[usize], alpha: &[Rational]) -> Result<WeightVector> {
    check_len(ranks.len(), alpha.len())?;
    if ranks.windows(2).any(|w| w[0] >= w[1]) || ranks.iter().any(|&i| i == 0 || i >= r) {
        return Err(Error::RankOrder { r });
    }
    if alpha.iter().any(|a| !a.is_positive()) {
        return Err(Error::NonPositiveWeight);
    }
    let mut coefficients = vec![Rational::zero(); r.saturating_sub(1)];
    for (&i, a) in ranks.iter().zip(alpha) {
        coefficients[i - 1] = a.clone();
    }
    Ok(CornerCoefficients(coefficients).recompose())
}

/// `μ` of the weighted filtration with the given ranks and weights.
pub fn mu_filtration(ranks: &[usize], alpha: &[Rational], support: &StateSet) -> Result<Rational> {
    let gamma = filtration_weight(support.rank(), ranks, alpha)?;
    mu(support, &gamma)
}
