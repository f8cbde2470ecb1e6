//! Fixed-size subset enumeration over a [`VertexSet`] universe.

use std::ops::ControlFlow;

use crate::graph::VertexSet;

/// Visits every `k`-subset of `universe` in increasing mask order.
pub fn for_each_k_subset<B>(
    universe: VertexSet,
    k: usize,
    mut visit: impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let members = universe.to_vec();
    let m = members.len();
    if k > m {
        return ControlFlow::Continue(());
    }
    if k == 0 {
        return visit(VertexSet::EMPTY);
    }
    // Gosper's hack on positions within `members`, then scattered back.
    let mut x: u64 = (1u64 << k) - 1;
    let limit: u64 = if m == 64 { u64::MAX } else { 1u64 << m };
    loop {
        let set: VertexSet = VertexSet::from_mask(x).iter().map(|i| members[i]).collect();
        visit(set)?;
        let c = x & x.wrapping_neg();
        let r = x + c;
        if r >= limit || r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if x >= limit {
            break;
        }
    }
    ControlFlow::Continue(())
}

/// Number of `k`-subsets of an `n`-set, saturating.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}
