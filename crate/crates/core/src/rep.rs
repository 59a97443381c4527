//! Representations of `GL(r)` built from the standard representation, and their torus states.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A character of the maximal torus of `GL(r)`: entry `i` is the exponent of the
/// `i`-th torus coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusWeight(Vec<i64>);

impl TorusWeight {
    pub fn new(entries: Vec<i64>) -> Self {
        TorusWeight(entries)
    }

    pub fn zero(r: usize) -> Self {
        TorusWeight(vec![0; r])
    }

    /// The `i`-th standard basis weight, `1 <= i <= r`.
    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i - 1] = 1;
        TorusWeight(v)
    }

    pub fn constant(r: usize, value: i64) -> Self {
        TorusWeight(vec![value; r])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the entries; the degree with which the centre acts.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &TorusWeight) -> TorusWeight {
        TorusWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &TorusWeight) -> TorusWeight {
        TorusWeight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> TorusWeight {
        TorusWeight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> TorusWeight {
        TorusWeight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl From<Vec<i64>> for TorusWeight {
    fn from(v: Vec<i64>) -> Self {
        TorusWeight(v)
    }
}

impl fmt::Display for TorusWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Finite multiset of torus weights, kept in lexicographic order.
///
/// As the state set of a representation the multiplicity of `χ` is `dim V_χ`.
/// As a decoration support only the distinct weights matter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSet {
    rank: usize,
    weights: BTreeMap<TorusWeight, u128>,
}

impl StateSet {
    pub fn new(rank: usize) -> Self {
        StateSet {
            rank,
            weights: BTreeMap::new(),
        }
    }

    /// Builds a state set from weights listed with repetition.
    pub fn from_weights<I>(rank: usize, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = TorusWeight>,
    {
        let mut set = StateSet::new(rank);
        for w in weights {
            set.insert(w, 1)?;
        }
        Ok(set)
    }

    /// Builds a state set from plain integer vectors; the rank is taken from the first one.
    pub fn from_vecs(vecs: Vec<Vec<i64>>) -> Result<Self> {
        let rank = vecs.first().map(Vec::len).unwrap_or(0);
        Self::from_weights(rank, vecs.into_iter().map(TorusWeight))
    }

    pub fn insert(&mut self, weight: TorusWeight, mult: u128) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                found: weight.rank(),
            });
        }
        if mult == 0 {
            return Ok(());
        }
        let slot = self.weights.entry(weight).or_insert(0);
        *slot = slot.checked_add(mult).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Total multiplicity, i.e. the dimension of the underlying space.
    pub fn dimension(&self) -> u128 {
        self.weights.values().sum()
    }

    pub fn multiplicity(&self, weight: &TorusWeight) -> u128 {
        self.weights.get(weight).copied().unwrap_or(0)
    }

    pub fn contains(&self, weight: &TorusWeight) -> bool {
        self.weights.contains_key(weight)
    }

    /// `(weight, multiplicity)` pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&TorusWeight, u128)> + '_ {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    /// The distinct weights in lexicographic order.
    pub fn distinct(&self) -> impl Iterator<Item = &TorusWeight> + '_ {
        self.weights.keys()
    }

    /// The same weights, each with multiplicity one.
    pub fn deduplicated(&self) -> StateSet {
        StateSet {
            rank: self.rank,
            weights: self.weights.keys().map(|w| (w.clone(), 1)).collect(),
        }
    }

    /// Multiset inclusion.
    pub fn is_submultiset_of(&self, other: &StateSet) -> bool {
        self.rank == other.rank && self.iter().all(|(w, m)| other.multiplicity(w) >= m)
    }

    /// The distinct sums `Σχᵢ` in increasing order.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.distinct().map(TorusWeight::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn map_weights(&self, f: impl Fn(&TorusWeight) -> TorusWeight) -> StateSet {
        let mut out = StateSet::new(self.rank);
        for (w, m) in self.iter() {
            *out.weights.entry(f(w)).or_insert(0) += m;
        }
        out
    }
}

/// Syntax tree of a `GL(r)`-representation built from the standard representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepExpr {
    /// The standard representation on `C^r`.
    Std(usize),
    /// The one-dimensional trivial representation of `GL(r)`.
    Trivial(usize),
    Dual(Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Sym(u32, Box<RepExpr>),
    Wedge(u32, Box<RepExpr>),
    DirectSum(Vec<RepExpr>),
    /// `(Λ^r C^r)^{⊗b}`; `b` may be negative.
    DetPow(usize, i64),
}

impl RepExpr {
    pub fn std(r: usize) -> Self {
        RepExpr::Std(r)
    }

    pub fn trivial(r: usize) -> Self {
        RepExpr::Trivial(r)
    }

    pub fn det(r: usize, b: i64) -> Self {
        RepExpr::DetPow(r, b)
    }

    pub fn dual(inner: RepExpr) -> Self {
        RepExpr::Dual(Box::new(inner))
    }

    pub fn tensor(left: RepExpr, right: RepExpr) -> Result<Self> {
        let e = RepExpr::Tensor(Box::new(left), Box::new(right));
        e.validate()?;
        Ok(e)
    }

    pub fn sym(k: u32, inner: RepExpr) -> Result<Self> {
        let e = RepExpr::Sym(k, Box::new(inner));
        e.validate()?;
        Ok(e)
    }

    pub fn wedge(k: u32, inner: RepExpr) -> Result<Self> {
        let e = RepExpr::Wedge(k, Box::new(inner));
        e.validate()?;
        Ok(e)
    }

    pub fn direct_sum(summands: Vec<RepExpr>) -> Result<Self> {
        let e = RepExpr::DirectSum(summands);
        e.validate()?;
        Ok(e)
    }

    /// `End(C^r) = C^r ⊗ (C^r)^∨`.
    pub fn end(r: usize) -> Self {
        RepExpr::Tensor(
            Box::new(RepExpr::Std(r)),
            Box::new(RepExpr::Dual(Box::new(RepExpr::Std(r)))),
        )
    }

    /// Checks rank agreement and exterior powers, returning `(rank, dimension)`.
    pub fn validate(&self) -> Result<(usize, u128)> {
        let r = self.rank()?;
        let dim = self.dimension_checked(r)?;
        Ok((r, dim))
    }

    /// The common rank of all leaves.
    pub fn rank(&self) -> Result<usize> {
        let mut found = None;
        self.collect_rank(&mut found)?;
        found.ok_or(Error::EmptySum)
    }

    fn collect_rank(&self, found: &mut Option<usize>) -> Result<()> {
        let mut leaf = |r: usize| -> Result<()> {
            if r == 0 {
                return Err(Error::ZeroRank);
            }
            match *found {
                None => *found = Some(r),
                Some(expected) if expected != r => {
                    return Err(Error::MixedRank { expected, found: r })
                }
                _ => {}
            }
            Ok(())
        };
        match self {
            RepExpr::Std(r) | RepExpr::Trivial(r) | RepExpr::DetPow(r, _) => leaf(*r),
            RepExpr::Dual(e) | RepExpr::Sym(_, e) | RepExpr::Wedge(_, e) => e.collect_rank(found),
            RepExpr::Tensor(a, b) => {
                a.collect_rank(found)?;
                b.collect_rank(found)
            }
            RepExpr::DirectSum(items) => {
                if items.is_empty() {
                    return Err(Error::EmptySum);
                }
                items.iter().try_for_each(|e| e.collect_rank(found))
            }
        }
    }

    /// Dimension by the product/binomial formulas.
    pub fn dimension(&self) -> Result<u128> {
        let r = self.rank()?;
        self.dimension_checked(r)
    }

    fn dimension_checked(&self, r: usize) -> Result<u128> {
        Ok(match self {
            RepExpr::Std(_) => r as u128,
            RepExpr::Trivial(_) | RepExpr::DetPow(_, _) => 1,
            RepExpr::Dual(e) => e.dimension_checked(r)?,
            RepExpr::Tensor(a, b) => a
                .dimension_checked(r)?
                .checked_mul(b.dimension_checked(r)?)
                .ok_or(Error::Overflow)?,
            RepExpr::Sym(k, e) => {
                let d = e.dimension_checked(r)?;
                if d == 0 {
                    u128::from(*k == 0)
                } else {
                    binomial(d + *k as u128 - 1, *k as u128)?
                }
            }
            RepExpr::Wedge(k, e) => {
                let d = e.dimension_checked(r)?;
                if *k as u128 > d {
                    return Err(Error::WedgeTooLarge { k: *k, dim: d });
                }
                binomial(d, *k as u128)?
            }
            RepExpr::DirectSum(items) => {
                let mut total: u128 = 0;
                for e in items {
                    total = total
                        .checked_add(e.dimension_checked(r)?)
                        .ok_or(Error::Overflow)?;
                }
                total
            }
        })
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepExpr::Std(r) => write!(f, "C^{r}"),
            RepExpr::Trivial(_) => write!(f, "C"),
            RepExpr::Dual(e) => write!(f, "({e})^*"),
            RepExpr::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            RepExpr::Sym(k, e) => write!(f, "S^{k}({e})"),
            RepExpr::Wedge(k, e) => write!(f, "Λ^{k}({e})"),
            RepExpr::DirectSum(items) => {
                write!(f, "(")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ⊕ ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            RepExpr::DetPow(_, b) => write!(f, "det^{b}"),
        }
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(n - i).ok_or(Error::Overflow)? / (i + 1);
    }
    Ok(acc)
}

/// The exact multiset of torus weights of `rep`.
///
/// Symmetric and exterior powers are expanded over the weighted basis of the inner
/// representation, so repeated inner weights contribute with their full multiplicity.
pub fn enumerate_states(rep: &RepExpr) -> Result<StateSet> {
    let (r, _) = rep.validate()?;
    states_of(rep, r)
}

fn states_of(rep: &RepExpr, r: usize) -> Result<StateSet> {
    match rep {
        RepExpr::Std(_) => StateSet::from_weights(r, (1..=r).map(|i| TorusWeight::unit(r, i))),
        RepExpr::Trivial(_) => StateSet::from_weights(r, [TorusWeight::zero(r)]),
        RepExpr::DetPow(_, b) => StateSet::from_weights(r, [TorusWeight::constant(r, *b)]),
        RepExpr::Dual(e) => Ok(states_of(e, r)?.map_weights(TorusWeight::neg)),
        RepExpr::Tensor(a, b) => {
            let sa = states_of(a, r)?;
            let sb = states_of(b, r)?;
            let mut out = StateSet::new(r);
            for (wa, ma) in sa.iter() {
                for (wb, mb) in sb.iter() {
                    out.insert(wa.add(wb), ma.checked_mul(mb).ok_or(Error::Overflow)?)?;
                }
            }
            Ok(out)
        }
        RepExpr::Sym(k, e) => power_states(&states_of(e, r)?, *k, PowerKind::Symmetric),
        RepExpr::Wedge(k, e) => power_states(&states_of(e, r)?, *k, PowerKind::Exterior),
        RepExpr::DirectSum(items) => {
            let mut out = StateSet::new(r);
            for e in items {
                for (w, m) in states_of(e, r)?.iter() {
                    out.insert(w.clone(), m)?;
                }
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Copy)]
enum PowerKind {
    Symmetric,
    Exterior,
}

/// Weights of `S^k` or `Λ^k` of a representation with the given states.
///
/// A weight space of dimension `m` at `χ` contributes `C(m+j-1, j)` (symmetric) or
/// `C(m, j)` (exterior) basis vectors of weight `jχ` when `j` of the `k` factors are
/// drawn from it; the result is the degree-`k` part of the product over weight spaces.
fn power_states(inner: &StateSet, k: u32, kind: PowerKind) -> Result<StateSet> {
    let r = inner.rank();
    let k = k as usize;
    // layer[j] = weights reachable using exactly j factors
    let mut layers: Vec<BTreeMap<TorusWeight, u128>> = vec![BTreeMap::new(); k + 1];
    layers[0].insert(TorusWeight::zero(r), 1);
    for (chi, m) in inner.iter() {
        let mut next: Vec<BTreeMap<TorusWeight, u128>> = vec![BTreeMap::new(); k + 1];
        for (used, layer) in layers.iter().enumerate() {
            for (w, &count) in layer {
                for j in 0..=(k - used) {
                    let ways = match kind {
                        PowerKind::Symmetric => {
                            if j == 0 {
                                1
                            } else {
                                binomial(m + j as u128 - 1, j as u128)?
                            }
                        }
                        PowerKind::Exterior => binomial(m, j as u128)?,
                    };
                    if ways == 0 {
                        break;
                    }
                    let total = count.checked_mul(ways).ok_or(Error::Overflow)?;
                    let slot = next[used + j]
                        .entry(w.add(&chi.scale(j as i64)))
                        .or_insert(0);
                    *slot = slot.checked_add(total).ok_or(Error::Overflow)?;
                }
            }
        }
        layers = next;
    }
    let mut out = StateSet::new(r);
    for (w, m) in std::mem::take(&mut layers[k]) {
        out.insert(w, m)?;
    }
    Ok(out)
}

/// The degree `α` with which the centre acts, when all states share it.
pub fn homogeneity_degree(rep: &RepExpr) -> Result<i64> {
    let degrees = enumerate_states(rep)?.degrees();
    match degrees.as_slice() {
        [alpha] => Ok(*alpha),
        _ => Err(Error::Inhomogeneous(degrees)),
    }
}

/// Homogenizes `ρ₁ ⊕ … ⊕ ρ_n` to `⊕_{Σνᵢαᵢ=κ} S^{ν₁}ρ₁ ⊗ … ⊗ S^{ν_n}ρ_n`.
///
/// Terms are ordered by decreasing `ν` in lexicographic order; `S⁰` factors are
/// dropped and `S¹ρ` is written as `ρ`.
pub fn homogenize(summands: &[RepExpr], kappa: u32) -> Result<RepExpr> {
    if summands.is_empty() {
        return Err(Error::EmptySum);
    }
    let mut degrees = Vec::with_capacity(summands.len());
    let mut rank = None;
    for (index, s) in summands.iter().enumerate() {
        let r = s.rank()?;
        match rank {
            None => rank = Some(r),
            Some(expected) if expected != r => return Err(Error::MixedRank { expected, found: r }),
            _ => {}
        }
        let degree = homogeneity_degree(s)?;
        if degree <= 0 {
            return Err(Error::NonPositiveDegree { index, degree });
        }
        degrees.push(degree as u32);
    }

    let mut solutions = Vec::new();
    let mut nu = vec![0u32; degrees.len()];
    solve_degrees(&degrees, kappa, 0, &mut nu, &mut solutions);
    if solutions.is_empty() {
        return Err(Error::NoSolutions { kappa });
    }

    let mut terms = Vec::with_capacity(solutions.len());
    for nu in solutions {
        let mut factors = summands
            .iter()
            .zip(&nu)
            .filter(|(_, &n)| n > 0)
            .map(|(s, &n)| {
                if n == 1 {
                    s.clone()
                } else {
                    RepExpr::Sym(n, Box::new(s.clone()))
                }
            });
        let first = factors.next().expect("kappa > 0 needs a factor");
        terms.push(factors.fold(first, |acc, f| RepExpr::Tensor(Box::new(acc), Box::new(f))));
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        RepExpr::DirectSum(terms)
    })
}

fn solve_degrees(
    degrees: &[u32],
    remaining: u32,
    pos: usize,
    nu: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if pos == degrees.len() {
        if remaining == 0 {
            out.push(nu.clone());
        }
        return;
    }
    let max = remaining / degrees[pos];
    for n in (0..=max).rev() {
        nu[pos] = n;
        solve_degrees(degrees, remaining - n * degrees[pos], pos + 1, nu, out);
    }
    nu[pos] = 0;
}

/// Multiplicity of the weight `ψ` (non-negative entries summing to `a`) in `(C^r)^{⊗a}`:
/// the multinomial coefficient `a! / Πψᵢ!`. Saturates at `u128::MAX`.
fn tensor_power_multiplicity(psi: &[i64]) -> u128 {
    let mut acc: u128 = 1;
    let mut n: u128 = 0;
    for &p in psi {
        for j in 1..=p as u128 {
            n += 1;
            // acc * n / j, exact because partial products of binomials are integral
            acc = match acc.checked_mul(n) {
                Some(v) => v / j,
                None => return u128::MAX,
            };
        }
    }
    acc
}

/// Whether every state of `rep` (with multiplicity) occurs in
/// `V_{a,b,c} = ((C^r)^{⊗a} ⊗ (Λ^r C^r)^{⊗-b})^{⊕c}`.
pub fn state_containment(rep: &RepExpr, a: u32, b: u32, c: u32) -> Result<bool> {
    let states = enumerate_states(rep)?;
    let contained = states.iter().all(|(chi, m)| {
        let psi: Vec<i64> = chi.entries().iter().map(|x| x + b as i64).collect();
        if psi.iter().any(|&p| p < 0) || psi.iter().sum::<i64>() != a as i64 {
            return false;
        }
        tensor_power_multiplicity(&psi).saturating_mul(c as u128) >= m
    });
    Ok(contained)
}

/// The smallest `(a, b, c)` for which [`state_containment`] holds.
pub fn minimal_envelope(rep: &RepExpr) -> Result<(u32, u32, u32)> {
    let alpha = homogeneity_degree(rep)?;
    let states = enumerate_states(rep)?;
    let r = states.rank() as i64;
    let b = states
        .distinct()
        .flat_map(|w| w.entries().iter().map(|&x| -x))
        .max()
        .unwrap_or(0)
        .max(0);
    let a = alpha + r * b;
    let mut c: u128 = 1;
    for (chi, m) in states.iter() {
        let psi: Vec<i64> = chi.entries().iter().map(|x| x + b).collect();
        let cap = tensor_power_multiplicity(&psi);
        c = c.max(m.div_ceil(cap));
    }
    let to_u32 = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow);
    Ok((
        to_u32(a)?,
        to_u32(b)?,
        u32::try_from(c).map_err(|_| Error::Overflow)?,
    ))
}
