//! Double description for subcones of the dominant weight cone.
//!
//! Points of the hyperplane `Σγᵢ = 0` are written as `γ = Σ αᵢ γ^(i)`. In these
//! coordinates the dominant cone is the non-negative orthant, so every subcone is
//! pointed and the iteration can start from the unit vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rep::TorusWeight;
use crate::Rational;

pub(crate) type IntVec = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn make_primitive(v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Rank of a set of integer rows, by exact elimination.
pub(crate) fn rank_of(rows: &[&IntVec]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Row `bⱼ = ⟨γ^(j), n⟩` of the constraint `⟨γ, n⟩ ≤ 0` in corner coordinates.
pub(crate) fn chart_row(normal: &TorusWeight) -> IntVec {
    let r = normal.rank();
    let entries = normal.entries();
    (1..r)
        .map(|j| {
            let low = (j as i64 - r as i64) * entries[..j].iter().sum::<i64>();
            let high = j as i64 * entries[j..].iter().sum::<i64>();
            BigInt::from(low + high)
        })
        .collect()
}

/// `Σ αⱼ γ^(j)` as an integer vector of length `r`.
pub(crate) fn from_chart(alpha: &[BigInt]) -> IntVec {
    let r = alpha.len() + 1;
    let mut out = vec![BigInt::zero(); r];
    for (j0, a) in alpha.iter().enumerate() {
        let j = j0 + 1;
        for (p, o) in out.iter_mut().enumerate() {
            let c = if p < j { j as i64 - r as i64 } else { j as i64 };
            *o += a * c;
        }
    }
    out
}

/// Extreme rays, in corner coordinates, of `{α ≥ 0 : row·α ≤ 0 for every row}`.
pub(crate) fn extreme_rays(dim: usize, rows: &[IntVec]) -> Vec<IntVec> {
    if dim == 0 {
        return Vec::new();
    }
    let mut processed: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::from(-1);
            v
        })
        .collect();
    let mut current: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::from(1);
            v
        })
        .collect();

    for row in rows {
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let values: Vec<BigInt> = current.iter().map(|ray| dot(row, ray)).collect();
        let positive: Vec<usize> = (0..current.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        if positive.is_empty() {
            processed.push(row.clone());
            continue;
        }
        let negative: Vec<usize> = (0..current.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut next: Vec<IntVec> = (0..current.len())
            .filter(|&i| !values[i].is_positive())
            .map(|i| current[i].clone())
            .collect();

        if dim >= 2 {
            let zero_sets: Vec<Vec<usize>> = current
                .iter()
                .map(|ray| {
                    (0..processed.len())
                        .filter(|&k| dot(&processed[k], ray).is_zero())
                        .collect()
                })
                .collect();
            for &p in &positive {
                for &n in &negative {
                    let common: Vec<&IntVec> = zero_sets[p]
                        .iter()
                        .filter(|k| zero_sets[n].contains(k))
                        .map(|&k| &processed[k])
                        .collect();
                    if common.len() + 2 < dim || rank_of(&common) != dim - 2 {
                        continue;
                    }
                    let combined: IntVec = current[n]
                        .iter()
                        .zip(&current[p])
                        .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                        .collect();
                    let combined = make_primitive(combined);
                    if !next.contains(&combined) {
                        next.push(combined);
                    }
                }
            }
        }
        current = next;
        processed.push(row.clone());
    }
    current
}
