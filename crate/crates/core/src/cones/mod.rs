//! Exact rational cones inside the dominant weight cone
//! `C = {γ₁ ≤ … ≤ γ_r, Σγᵢ = 0} = R≥0·γ^(1) + … + R≥0·γ^(r-1)`,
//! the state cells `C^χ_A` and their minimal integral generators.

mod dd;
mod fan;

pub use fan::{
    critical_states_weight_vectors, critical_weight_vectors, is_critical, state_fan, StateFan,
    DEFAULT_BUDGET,
};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rep::{StateSet, TorusWeight};
use crate::weights::{corner_basis, pairing, WeightVector};
use crate::Rational;

/// A rational polyhedral cone contained in the dominant weight cone, kept in double
/// description: primitive integral extreme rays plus the normals `n` of the halfspaces
/// `⟨γ, n⟩ ≤ 0` cutting it out. The facets `γᵢ - γ_{i+1} ≤ 0` of the dominant cone are
/// always among the halfspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    rays: Vec<WeightVector>,
    halfspaces: Vec<TorusWeight>,
}

fn facet_normals(r: usize) -> impl Iterator<Item = TorusWeight> {
    (0..r - 1).map(move |i| {
        let mut n = vec![0; r];
        n[i] = 1;
        n[i + 1] = -1;
        TorusWeight::new(n)
    })
}

impl Cone {
    /// The subcone of the dominant weight cone cut out by the extra halfspaces.
    pub fn from_halfspaces<I>(r: usize, extra: I) -> Result<Cone>
    where
        I: IntoIterator<Item = TorusWeight>,
    {
        if r < 2 {
            return Err(Error::InvalidRank(r));
        }
        let mut halfspaces: Vec<TorusWeight> = facet_normals(r).collect();
        let mut others = BTreeSet::new();
        for n in extra {
            if n.rank() != r {
                return Err(Error::LengthMismatch {
                    expected: r,
                    found: n.rank(),
                });
            }
            if !n.is_zero() && !halfspaces.contains(&n) {
                others.insert(n);
            }
        }
        halfspaces.extend(others);
        let rays = compute_rays(r, &halfspaces)?;
        Ok(Cone {
            rank: r,
            rays,
            halfspaces,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Primitive integral extreme rays in lexicographic order.
    pub fn rays(&self) -> &[WeightVector] {
        &self.rays
    }

    pub fn halfspaces(&self) -> &[TorusWeight] {
        &self.halfspaces
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn contains(&self, gamma: &WeightVector) -> bool {
        gamma.rank() == self.rank
            && gamma
                .entries()
                .iter()
                .fold(Rational::zero(), |acc, x| acc + x)
                .is_zero()
            && self
                .halfspaces
                .iter()
                .all(|n| !pairing(gamma, n).expect("rank checked").is_positive())
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = self
            .rays
            .iter()
            .map(|g| g.entries().iter().map(|x| x.to_integer()).collect())
            .collect();
        dd::rank_of(&rows.iter().collect::<Vec<_>>())
    }

    /// Whether the cone has non-empty interior relative to the dominant cone.
    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.rank - 1
    }

    /// Intersection with another subcone of the same rank.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        Cone::from_halfspaces(
            self.rank,
            self.halfspaces.iter().chain(&other.halfspaces).cloned(),
        )
    }

    /// The slice `⟨γ, n⟩ = 0` of the cone.
    pub fn restrict_to_hyperplane(&self, normal: &TorusWeight) -> Result<Cone> {
        Cone::from_halfspaces(
            self.rank,
            self.halfspaces
                .iter()
                .cloned()
                .chain([normal.clone(), normal.neg()]),
        )
    }

    /// Checks the double description: every ray satisfies every halfspace and the
    /// rays recomputed from the halfspaces coincide with the stored ones.
    pub fn is_consistent(&self) -> bool {
        self.rays.iter().all(|g| self.contains(g))
            && compute_rays(self.rank, &self.halfspaces).as_deref() == Ok(&self.rays[..])
    }
}

fn compute_rays(r: usize, halfspaces: &[TorusWeight]) -> Result<Vec<WeightVector>> {
    let rows: Vec<_> = halfspaces.iter().map(dd::chart_row).collect();
    let mut out: Vec<WeightVector> = dd::extreme_rays(r - 1, &rows)
        .iter()
        .map(|alpha| {
            let gamma = dd::from_chart(alpha);
            WeightVector::new_unchecked(gamma.into_iter().map(Rational::from_integer).collect())
                .primitive()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The dominant weight cone `C` of rank `r`, generated by the corner weights.
pub fn weight_cone(r: usize) -> Result<Cone> {
    Cone::from_halfspaces(r, [])
}

/// Primitive corner weights `γ^(1), …, γ^(r-1)`.
pub fn corner_set(r: usize) -> Result<BTreeSet<WeightVector>> {
    (1..r)
        .map(|i| Ok(corner_basis(r, i)?.primitive()))
        .collect()
}

/// `C^χ_A = {γ ∈ C : ⟨γ, χ⟩ ≤ ⟨γ, χ'⟩ for all χ' ∈ A}`.
pub fn state_cell(a: &StateSet, chi: &TorusWeight) -> Result<Cone> {
    if !a.contains(chi) {
        return Err(Error::ChiNotInA);
    }
    Cone::from_halfspaces(
        a.rank(),
        a.distinct().filter(|c| *c != chi).map(|c| chi.sub(c)),
    )
}

/// Extreme rays of the cone recomputed from its halfspaces.
pub fn rays(cone: &Cone) -> Vec<WeightVector> {
    compute_rays(cone.rank, &cone.halfspaces).expect("cone rank is at least two")
}
