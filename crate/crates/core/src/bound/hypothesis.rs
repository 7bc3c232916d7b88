use alloc::vec::Vec;

use crate::{Decomposition, VarSet};

/// Outcome of the radical-sum hypothesis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub satisfied: bool,
    /// `(i, τ)` with `√Q_i ⊆ ∑_{j∈τ} √Q_j` but `Q_i ⊄ ∑_{j∈τ} Q_j` (0-based).
    pub violations: Vec<(usize, Vec<usize>)>,
}

/// For every component `Q_i` and every nonempty proper subset `τ` of the
/// components with `√Q_i ⊆ ∑_{j∈τ} √Q_j`, require `Q_i ⊆ ∑_{j∈τ} Q_j`.
///
/// Subsets containing `i` are skipped, the containment is trivial there.
/// With irreducible components the radical containment is a support
/// containment, and `x_k^a ∈ ∑_{j∈τ} Q_j` iff `a` is at least the least
/// exponent of `x_k` among the `Q_j`, `j ∈ τ`.
pub fn hypothesis_check(d: &Decomposition) -> HypothesisReport {
    let comps = d.components();
    let s = comps.len();
    let mut violations = Vec::new();
    if s >= 2 {
        for (i, qi) in comps.iter().enumerate() {
            for mask in 1u64..(1u64 << s) - 1 {
                if mask >> i & 1 == 1 {
                    continue;
                }
                let tau: Vec<usize> = (0..s).filter(|&j| mask >> j & 1 == 1).collect();
                let rad = tau.iter().fold(VarSet::EMPTY, |acc, &j| acc.union(comps[j].support()));
                if !qi.support().is_subset(rad) {
                    continue;
                }
                let contained = qi.powers().iter().all(|&(k, a)| {
                    let least = tau.iter().filter_map(|&j| comps[j].exponent(k)).min();
                    least.is_some_and(|b| a >= b)
                });
                if !contained {
                    violations.push((i, tau));
                }
            }
        }
    }
    HypothesisReport { satisfied: violations.is_empty(), violations }
}
