use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{corner_set, state_cell, Cone};
use crate::error::{Error, Result};
use crate::rep::{enumerate_states, RepExpr, StateSet, TorusWeight};
use crate::weights::WeightVector;

/// Default cap on the number of state subsets examined by [`critical_weight_vectors`].
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// The decomposition `C = ∪_{χ∈A} C^χ_A` of the dominant cone by a state subset `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFan {
    base: StateSet,
    cells: BTreeMap<TorusWeight, Cone>,
    generators: BTreeSet<WeightVector>,
    critical: bool,
}

impl StateFan {
    /// The subset `A`, deduplicated.
    pub fn base(&self) -> &StateSet {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn cells(&self) -> &BTreeMap<TorusWeight, Cone> {
        &self.cells
    }

    pub fn cell(&self, chi: &TorusWeight) -> Option<&Cone> {
        self.cells.get(chi)
    }

    /// `K^χ_A`, the minimal integral generators of the edges of one cell.
    pub fn cell_generators(&self, chi: &TorusWeight) -> Option<&[WeightVector]> {
        self.cells.get(chi).map(Cone::rays)
    }

    /// `K_A`, the union of all cell generators.
    pub fn generators(&self) -> &BTreeSet<WeightVector> {
        &self.generators
    }

    pub fn is_critical(&self) -> bool {
        self.critical
    }

    /// Characters whose cell has empty interior in `C`. They are still part of the fan.
    pub fn degenerate_cells(&self) -> Vec<&TorusWeight> {
        self.cells
            .iter()
            .filter(|(_, c)| !c.is_full_dimensional())
            .map(|(chi, _)| chi)
            .collect()
    }

    /// Generators of `K_A` that are not corner weights.
    pub fn extra_generators(&self) -> Result<Vec<WeightVector>> {
        let corners = corner_set(self.rank())?;
        Ok(self
            .generators
            .iter()
            .filter(|g| !corners.contains(*g))
            .cloned()
            .collect())
    }

    /// Characters whose cell contains `γ`, i.e. the minimizers of `⟨γ, χ⟩` over `A`.
    pub fn cells_containing(&self, gamma: &WeightVector) -> Vec<&TorusWeight> {
        self.cells
            .iter()
            .filter(|(_, c)| c.contains(gamma))
            .map(|(chi, _)| chi)
            .collect()
    }
}

/// Computes every cell `C^χ_A` together with `K_A`.
pub fn state_fan(a: &StateSet) -> Result<StateFan> {
    if a.is_empty() {
        return Err(Error::EmptySupport);
    }
    let r = a.rank();
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    let base = a.deduplicated();
    let cells = base
        .distinct()
        .map(|chi| Ok((chi.clone(), state_cell(&base, chi)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let generators: BTreeSet<WeightVector> = cells
        .values()
        .flat_map(|c| c.rays().iter().cloned())
        .collect();
    let corners = corner_set(r)?;
    let critical = generators.iter().any(|g| !corners.contains(g));
    Ok(StateFan {
        base,
        cells,
        generators,
        critical,
    })
}

/// Whether `K_A` contains a generator other than the corner weights.
pub fn is_critical(a: &StateSet) -> Result<bool> {
    Ok(state_fan(a)?.is_critical())
}

/// `K_ρ = ∪_{A ⊆ ST(ρ)} K_A`, the finite set of weight vectors that has to be tested.
pub fn critical_weight_vectors(rep: &RepExpr, budget: u128) -> Result<BTreeSet<WeightVector>> {
    critical_states_weight_vectors(&enumerate_states(rep)?, budget)
}

/// [`critical_weight_vectors`] for an explicit state set.
pub fn critical_states_weight_vectors(
    states: &StateSet,
    budget: u128,
) -> Result<BTreeSet<WeightVector>> {
    let r = states.rank();
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    let distinct: Vec<TorusWeight> = states.distinct().cloned().collect();
    let n = distinct.len();
    let subsets = if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    if subsets > budget || n >= 64 {
        return Err(Error::TooManyStates { subsets, budget });
    }
    let found = (1u64..=subsets as u64)
        .into_par_iter()
        .map(|mask| {
            let subset = StateSet::from_weights(
                r,
                (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| distinct[i].clone()),
            )?;
            Ok(state_fan(&subset)?.generators)
        })
        .try_reduce(BTreeSet::new, |mut acc, set| {
            acc.extend(set);
            Ok(acc)
        })?;
    let mut out = corner_set(r)?;
    out.extend(found);
    Ok(out)
}
