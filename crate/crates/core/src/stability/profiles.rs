//! Support sets and `μ` values for the standard example classes: extension pairs,
//! framed modules, Hitchin pairs and conic bundles.
//!
//! Every profile works in a basis adapted to the subbundle or filtration under test,
//! so `E' = ⟨w₁, …, w_k⟩` and the weight vector is a corner weight or a sum of them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rep::{StateSet, TorusWeight};
use crate::weights::{corner_basis, mu, mu_filtration};
use crate::{int, Rational};

fn check_rank(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    Ok(())
}

fn check_subrank(k: usize, r: usize) -> Result<()> {
    check_rank(r)?;
    if k == 0 || k >= r {
        return Err(Error::IndexOutOfRange { i: k, r });
    }
    Ok(())
}

/// `μ = i·dim ker v - r·dim(⟨w₁, …, wᵢ⟩ ∩ ker v)` for an extension pair.
pub fn profile_extension(i: usize, dim_ker: usize, dim_cap: usize, r: usize) -> Result<Rational> {
    if dim_cap > i.min(dim_ker) || i.min(dim_ker) > r {
        return Err(Error::InvalidProfile(format!(
            "need dim_cap <= min(i, dim_ker) <= r, got i={i}, dim_ker={dim_ker}, dim_cap={dim_cap}, r={r}"
        )));
    }
    Ok(int(i as i64 * dim_ker as i64 - r as i64 * dim_cap as i64))
}

/// Framed module `E → M₀`: `-k` when `E'` lies in the kernel, `r - k` otherwise.
pub fn profile_framed(k: usize, in_kernel: bool, r: usize) -> Result<Rational> {
    check_subrank(k, r)?;
    Ok(if in_kernel {
        int(-(k as i64))
    } else {
        int(r as i64 - k as i64)
    })
}

/// States `{eᵢ : i > k}`, plus `e_k` when `E'` is not in the kernel.
pub fn framed_support(k: usize, in_kernel: bool, r: usize) -> Result<StateSet> {
    check_subrank(k, r)?;
    let first = if in_kernel { k + 1 } else { k };
    StateSet::from_weights(r, (first..=r).map(|i| TorusWeight::unit(r, i)))
}

/// Hitchin pair `(φ, ε)` and the subbundle `W = ⟨w₁, …, wᵢ⟩`: `μ = r` if `W` is not
/// φ-invariant, `-r` if it is superinvariant (`W ⊂ ker φ`, `φ(E) ⊂ W`) and `ε = 0`,
/// and `0` otherwise.
pub fn profile_hitchin(
    i: usize,
    invariant: bool,
    superinvariant: bool,
    eps_zero: bool,
    r: usize,
) -> Result<Rational> {
    check_subrank(i, r)?;
    if superinvariant && !invariant {
        return Err(Error::InvalidProfile(
            "a superinvariant subbundle is invariant".into(),
        ));
    }
    let r = r as i64;
    Ok(if !invariant {
        int(r)
    } else if superinvariant && eps_zero {
        int(-r)
    } else {
        int(0)
    })
}

/// States of `End(C^r) ⊕ C` on which `(φ, ε)` is nonzero. A nonzero entry `φ_{kj}`
/// (row `k`, column `j`) contributes `e_j - e_k`; `ε ≠ 0` contributes `0`.
pub fn hitchin_support_from_matrix(nonzero: &[Vec<bool>], eps_nonzero: bool) -> Result<StateSet> {
    let r = nonzero.len();
    check_rank(r)?;
    let mut states = StateSet::new(r);
    for (k, row) in nonzero.iter().enumerate() {
        if row.len() != r {
            return Err(Error::LengthMismatch {
                expected: r,
                found: row.len(),
            });
        }
        for (j, &entry) in row.iter().enumerate() {
            if entry {
                states.insert(
                    TorusWeight::unit(r, j + 1).sub(&TorusWeight::unit(r, k + 1)),
                    1,
                )?;
            }
        }
    }
    if eps_nonzero {
        states.insert(TorusWeight::zero(r), 1)?;
    }
    if states.is_empty() {
        return Err(Error::EmptySupport);
    }
    Ok(states.deduplicated())
}

/// A Higgs field realizing the given case of [`profile_hitchin`].
pub fn hitchin_support(
    i: usize,
    invariant: bool,
    superinvariant: bool,
    eps_zero: bool,
    r: usize,
) -> Result<StateSet> {
    profile_hitchin(i, invariant, superinvariant, eps_zero, r)?;
    let mut m = vec![vec![false; r]; r];
    if !invariant {
        // w_i ↦ w_{i+1}
        m[i][i - 1] = true;
    } else if superinvariant {
        // w_r ↦ w_1
        m[0][r - 1] = true;
    } else {
        m[0][0] = true;
        m[0][r - 1] = true;
    }
    hitchin_support_from_matrix(&m, !eps_zero)
}

/// `μ` of the full flag `E_j = ker φ^j` of a nilpotent Higgs field with weights
/// `(1, …, 1)`; `sigma_nonzero` adds the state of the scalar part.
pub fn hitchin_nilpotent_mu(r: usize, sigma_nonzero: bool) -> Result<Rational> {
    check_rank(r)?;
    let mut m = vec![vec![false; r]; r];
    for j in 1..r {
        // w_{j+1} ↦ w_j
        m[j - 1][j] = true;
    }
    let support = hitchin_support_from_matrix(&m, sigma_nonzero)?;
    let ranks: Vec<usize> = (1..r).collect();
    mu_filtration(&ranks, &vec![int(1); r - 1], &support)
}

fn normalize_pair((a, b): (usize, usize), r: usize) -> Result<(usize, usize)> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if a == 0 || b > r {
        return Err(Error::InvalidProfile(format!(
            "index pair ({a},{b}) outside 1..{r}"
        )));
    }
    Ok((a, b))
}

/// `(i₁, i₂) ⪯ (j₁, j₂)` iff `i₁ ≤ j₁` and `i₂ ≤ j₂`.
pub fn pair_precedes(p: (usize, usize), q: (usize, usize)) -> bool {
    p.0 <= q.0 && p.1 <= q.1
}

/// The ⪯-minimal pairs among the nonzero coefficients `l_{i₁i₂}` of a quadratic form,
/// and `ν = min(i₁ + i₂)`.
pub fn conic_minimal_support(
    nonzero: &[(usize, usize)],
    r: usize,
) -> Result<(BTreeSet<(usize, usize)>, usize)> {
    check_rank(r)?;
    let pairs = nonzero
        .iter()
        .map(|&p| normalize_pair(p, r))
        .collect::<Result<BTreeSet<_>>>()?;
    let nu = pairs
        .iter()
        .map(|&(a, b)| a + b)
        .min()
        .ok_or(Error::EmptySupport)?;
    let minimal = pairs
        .iter()
        .filter(|&&p| !pairs.iter().any(|&q| q != p && pair_precedes(q, p)))
        .copied()
        .collect();
    Ok((minimal, nu))
}

/// States `e_{i₁} + e_{i₂}` of `S²C^r` for the given pairs.
pub fn conic_states(pairs: &[(usize, usize)], r: usize) -> Result<StateSet> {
    check_rank(r)?;
    let mut states = StateSet::new(r);
    for &p in pairs {
        let (a, b) = normalize_pair(p, r)?;
        states.insert(TorusWeight::unit(r, a).add(&TorusWeight::unit(r, b)), 1)?;
    }
    Ok(states.deduplicated())
}

/// `μ(E', τ) = c_τ(E')·r - 2·rk E'`.
pub fn profile_conic(c_tau: u8, k: usize, r: usize) -> Result<Rational> {
    check_subrank(k, r)?;
    if c_tau > 2 {
        return Err(Error::InvalidProfile(format!(
            "c_tau must be 0, 1 or 2, got {c_tau}"
        )));
    }
    Ok(int(c_tau as i64 * r as i64 - 2 * k as i64))
}

/// A quadratic form with the given `c_τ(E')` for `E' = ⟨w₁, …, w_k⟩`: `τ(w₁w₁) ≠ 0`
/// for `c = 2`, `τ(w₁w_r) ≠ 0` for `c = 1`, and only `τ(w_r w_r) ≠ 0` for `c = 0`.
pub fn conic_support(c_tau: u8, k: usize, r: usize) -> Result<StateSet> {
    profile_conic(c_tau, k, r)?;
    let mut pairs = vec![(r, r)];
    match c_tau {
        2 => pairs.push((1, 1)),
        1 => pairs.push((1, r)),
        _ => {}
    }
    conic_states(&pairs, r)
}

/// Vanishing of `τ` restricted to `E_a·E_b` for a full flag `E₁ ⊂ E₂ ⊂ E₃ ⊂ E` of a
/// rank four bundle (`true` means the restriction is zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RestrictionFlags {
    pub e1e2: bool,
    pub e1e3: bool,
    pub e1e: bool,
    pub e2e2: bool,
    pub e2e3: bool,
    pub e2e: bool,
    pub e3e3: bool,
}

/// The blocks `E_a·E_b` in the order of the fields of [`RestrictionFlags`].
const BLOCKS: [(&str, usize, usize); 7] = [
    ("e1e2", 1, 2),
    ("e1e3", 1, 3),
    ("e1e", 1, 4),
    ("e2e2", 2, 2),
    ("e2e3", 2, 3),
    ("e2e", 2, 4),
    ("e3e3", 3, 3),
];

fn in_block((i, j): (usize, usize), a: usize, b: usize) -> bool {
    (i <= a && j <= b) || (i <= b && j <= a)
}

impl RestrictionFlags {
    fn as_array(&self) -> [bool; 7] {
        [
            self.e1e2, self.e1e3, self.e1e, self.e2e2, self.e2e3, self.e2e, self.e3e3,
        ]
    }

    /// Flags of the quadratic form whose nonzero coefficients are `nonzero`.
    pub fn from_pattern(nonzero: &[(usize, usize)]) -> Result<RestrictionFlags> {
        let pairs = nonzero
            .iter()
            .map(|&p| normalize_pair(p, 4))
            .collect::<Result<Vec<_>>>()?;
        let zero = |a, b| !pairs.iter().any(|&p| in_block(p, a, b));
        Ok(RestrictionFlags {
            e1e2: zero(1, 2),
            e1e3: zero(1, 3),
            e1e: zero(1, 4),
            e2e2: zero(2, 2),
            e2e3: zero(2, 3),
            e2e: zero(2, 4),
            e3e3: zero(3, 3),
        })
    }

    /// The most generic coefficient pattern with these flags: every `l_{i₁i₂}` not
    /// forced to vanish is nonzero. Fails when a nonvanishing flag cannot be met.
    pub fn generic_pattern(&self) -> Result<Vec<(usize, usize)>> {
        let flags = self.as_array();
        let pattern: Vec<(usize, usize)> = (1..=4)
            .flat_map(|i| (i..=4).map(move |j| (i, j)))
            .filter(|&p| {
                !BLOCKS
                    .iter()
                    .zip(flags)
                    .any(|(&(_, a, b), zero)| zero && in_block(p, a, b))
            })
            .collect();
        for (&(name, a, b), zero) in BLOCKS.iter().zip(flags) {
            if !zero && !pattern.iter().any(|&p| in_block(p, a, b)) {
                return Err(Error::InconsistentFlags(format!(
                    "{name} is declared nonzero but is forced to vanish"
                )));
            }
        }
        if pattern.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(pattern)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CriticalType {
    I,
    II,
    III,
    IV,
    V,
}

impl CriticalType {
    pub const ALL: [CriticalType; 5] = [
        CriticalType::I,
        CriticalType::II,
        CriticalType::III,
        CriticalType::IV,
        CriticalType::V,
    ];

    fn matches(self, f: &RestrictionFlags) -> bool {
        match self {
            CriticalType::I => f.e1e2 && !f.e1e3 && !f.e2e2,
            CriticalType::II => f.e1e3 && !f.e1e && !f.e2e2,
            CriticalType::III => f.e1e3 && f.e2e2 && !f.e1e && !f.e2e3,
            CriticalType::IV => f.e2e3 && !f.e1e && !f.e3e3,
            CriticalType::V => f.e1e && f.e2e3 && !f.e2e && !f.e3e3,
        }
    }

    /// The two-step filtrations `E_a ⊂ E_b` whose inequality involves this type.
    pub fn tested_pairs(self) -> &'static [(usize, usize)] {
        match self {
            CriticalType::I => &[(1, 2)],
            CriticalType::II => &[(1, 3), (2, 3)],
            CriticalType::III => &[(1, 3)],
            CriticalType::IV => &[(1, 2), (1, 3)],
            CriticalType::V => &[(2, 3)],
        }
    }

    /// Flags of the simplest quadratic form of this type.
    pub fn representative_flags(self) -> RestrictionFlags {
        let pattern: &[(usize, usize)] = match self {
            CriticalType::I => &[(1, 3), (2, 2)],
            CriticalType::II => &[(1, 4), (2, 2)],
            CriticalType::III => &[(1, 4), (2, 3)],
            CriticalType::IV => &[(1, 4), (3, 3)],
            CriticalType::V => &[(2, 4), (3, 3)],
        };
        RestrictionFlags::from_pattern(pattern).expect("pairs are in range")
    }
}

impl fmt::Display for CriticalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CriticalType::I => "I",
            CriticalType::II => "II",
            CriticalType::III => "III",
            CriticalType::IV => "IV",
            CriticalType::V => "V",
        };
        f.write_str(s)
    }
}

/// `μ` of `0 ⊂ E_a ⊂ E_b ⊂ E` with weights `(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalTest {
    pub ranks: (usize, usize),
    pub mu: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalClassification {
    pub kind: CriticalType,
    /// The generic coefficient pattern used to evaluate `μ`.
    pub support: Vec<(usize, usize)>,
    pub tests: Vec<CriticalTest>,
}

/// Classifies a full flag of a rank four conic bundle and evaluates `μ` on the
/// two-step filtrations attached to its type.
pub fn conic_critical_type(flags: &RestrictionFlags) -> Result<CriticalClassification> {
    let support = flags.generic_pattern()?;
    let kind = CriticalType::ALL
        .into_iter()
        .find(|t| t.matches(flags))
        .ok_or(Error::NoCriticalType)?;
    let states = conic_states(&support, 4)?;
    let tests = kind
        .tested_pairs()
        .iter()
        .map(|&(a, b)| {
            let gamma = corner_basis(4, a)?.add(&corner_basis(4, b)?)?;
            Ok(CriticalTest {
                ranks: (a, b),
                mu: mu(&states, &gamma)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CriticalClassification {
        kind,
        support,
        tests,
    })
}
