//! Inputs shared by the benchmarks.

use decostab_core::{RepExpr, StateSet};

pub fn sym2(r: usize) -> RepExpr {
    RepExpr::sym(2, RepExpr::std(r)).expect("valid representation")
}

pub fn tensor_power(r: usize, a: u32) -> RepExpr {
    (1..a).fold(RepExpr::std(r), |acc, _| {
        RepExpr::tensor(acc, RepExpr::std(r)).expect("ranks agree")
    })
}

/// The two-state conic subset `{e₁ + e_r, 2e₂}`.
pub fn conic_pair(r: usize) -> StateSet {
    let mut a = vec![0; r];
    a[0] += 1;
    a[r - 1] += 1;
    let mut b = vec![0; r];
    b[1] = 2;
    StateSet::from_vecs(vec![a, b]).expect("same rank")
}
