//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! enumeration or double-description code it is compared against.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use decostab_core::RepExpr;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

type Q = Ratio<i128>;

/// Weights of an explicit basis of the representation, listed with repetition.
pub fn basis_weights(rep: &RepExpr) -> Vec<Vec<i64>> {
    match rep {
        RepExpr::Std(r) => (0..*r)
            .map(|i| (0..*r).map(|j| i64::from(i == j)).collect())
            .collect(),
        RepExpr::Trivial(r) => vec![vec![0; *r]],
        RepExpr::DetPow(r, b) => vec![vec![*b; *r]],
        RepExpr::Dual(e) => basis_weights(e)
            .into_iter()
            .map(|w| w.into_iter().map(|x| -x).collect())
            .collect(),
        RepExpr::Tensor(a, b) => {
            let (a, b) = (basis_weights(a), basis_weights(b));
            let mut out = Vec::new();
            for x in &a {
                for y in &b {
                    out.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
                }
            }
            out
        }
        RepExpr::Sym(k, e) => index_tuples(&basis_weights(e), *k as usize, false),
        RepExpr::Wedge(k, e) => index_tuples(&basis_weights(e), *k as usize, true),
        RepExpr::DirectSum(items) => items.iter().flat_map(basis_weights).collect(),
    }
}

/// Sums over non-decreasing (or strictly increasing) index tuples of length `k`.
fn index_tuples(basis: &[Vec<i64>], k: usize, strict: bool) -> Vec<Vec<i64>> {
    let r = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k);
    fn rec(
        basis: &[Vec<i64>],
        k: usize,
        strict: bool,
        start: usize,
        tuple: &mut Vec<usize>,
        out: &mut Vec<Vec<i64>>,
        r: usize,
    ) {
        if tuple.len() == k {
            let mut w = vec![0; r];
            for &i in tuple.iter() {
                for (a, b) in w.iter_mut().zip(&basis[i]) {
                    *a += b;
                }
            }
            out.push(w);
            return;
        }
        for i in start..basis.len() {
            tuple.push(i);
            rec(
                basis,
                k,
                strict,
                if strict { i + 1 } else { i },
                tuple,
                out,
                r,
            );
            tuple.pop();
        }
    }
    rec(basis, k, strict, 0, &mut tuple, &mut out, r);
    out
}

pub fn multiset(weights: Vec<Vec<i64>>) -> BTreeMap<Vec<i64>, u128> {
    let mut m = BTreeMap::new();
    for w in weights {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

fn rref(mut m: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col];
        for x in m[row].iter_mut() {
            *x /= lead;
        }
        let pivot_row = m[row].clone();
        for (i, other) in m.iter_mut().enumerate() {
            if i != row && !other[col].is_zero() {
                let f = other[col];
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

/// The kernel of `rows` when it is one-dimensional.
fn kernel_line(rows: &[Vec<i64>], r: usize) -> Option<Vec<i64>> {
    let m: Vec<Vec<Q>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| Q::from(x as i128)).collect())
        .collect();
    let (m, pivots) = rref(m);
    if pivots.len() != r - 1 {
        return None;
    }
    let free = (0..r).find(|c| !pivots.contains(c))?;
    let mut v = vec![Q::zero(); r];
    v[free] = Q::from(1);
    for (i, &p) in pivots.iter().enumerate() {
        v[p] = -m[i][free];
    }
    let lcm = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * Q::from(lcm)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    Some(ints.iter().map(|x| (x / g) as i64).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Extreme rays of `{γ : Σγᵢ = 0, ⟨γ, n⟩ ≤ 0 for n in normals}` by solving every
/// choice of `r - 2` active constraints. The facets of the dominant cone must be
/// included among `normals` by the caller.
pub fn brute_rays(r: usize, normals: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let normals: Vec<&Vec<i64>> = normals
        .iter()
        .filter(|n| n.iter().any(|&x| x != 0))
        .collect();
    for choice in subsets(normals.len(), r - 2) {
        let mut rows: Vec<Vec<i64>> = choice.iter().map(|&i| normals[i].clone()).collect();
        rows.push(vec![1; r]);
        let Some(v) = kernel_line(&rows, r) else {
            continue;
        };
        for cand in [v.clone(), v.iter().map(|x| -x).collect::<Vec<_>>()] {
            let feasible = normals
                .iter()
                .all(|n| n.iter().zip(&cand).map(|(a, b)| a * b).sum::<i64>() <= 0);
            if feasible {
                out.insert(cand);
            }
        }
    }
    out
}

/// Normals `eᵢ - e_{i+1}` of the facets of the dominant cone.
pub fn dominant_facets(r: usize) -> Vec<Vec<i64>> {
    (0..r - 1)
        .map(|i| {
            let mut n = vec![0; r];
            n[i] = 1;
            n[i + 1] = -1;
            n
        })
        .collect()
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}
