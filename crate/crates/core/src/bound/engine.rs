use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::split::{build_split, SplitContext};
use super::BoundConfig;
use crate::sdepth::{sdepth_ideal, sdepth_quotient, Budget};
use crate::{Decomposition, Error, Monomial, MonomialIdeal, Result};

/// Which component(s) to use as the pivot `Q_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// 0-based component index.
    Index(usize),
    /// Every component; the reported bound is the best one.
    All,
}

/// One admissible `(τ, w)` in the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTerm {
    pub tau: Vec<usize>,
    pub w: Monomial,
    /// `sdepth` over `S_τ` of `∩_{j∉τ}(Q_j : w) ∩ S_τ`.
    pub ideal_part: usize,
    /// `sdepth` over `S''` of `S'' / (∩_{j∈τ} Q_j ∩ S'')`.
    pub quotient_part: usize,
    pub total: usize,
    /// `S_τ` has no variables; `ideal_part` is the dimension-0 value of the
    /// constants ring over itself.
    pub constants_ring: bool,
    /// `S''` has no variables (pivot with full support); `quotient_part` is 0.
    pub empty_dprime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotBound {
    pub pivot: usize,
    pub r: usize,
    pub value: usize,
    pub terms: Vec<BoundTerm>,
    /// Relabeling placing the pivot's support first (ambient 0-based indices).
    pub permutation: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    /// The requested pivot's bound, or the best over all pivots.
    pub value: usize,
    pub per_pivot: Vec<PivotBound>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Ideal,
    Quotient,
}

/// Memo of exact sub-sdepth values, keyed by the re-indexed ideal.
#[derive(Default)]
pub struct SdepthCache {
    values: BTreeMap<(Kind, MonomialIdeal), usize>,
}

impl SdepthCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get(&mut self, kind: Kind, ideal: MonomialIdeal, cfg: &BoundConfig, budget: &mut dyn Budget) -> Result<usize> {
        if let Some(&v) = self.values.get(&(kind, ideal.clone())) {
            return Ok(v);
        }
        let v = match kind {
            Kind::Ideal => sdepth_ideal(&ideal, &cfg.sdepth, budget)?.sdepth,
            Kind::Quotient => sdepth_quotient(&ideal, &cfg.sdepth, budget)?.sdepth,
        };
        self.values.insert((kind, ideal), v);
        Ok(v)
    }
}

/// The recursive lower bound on `sdepth(S/I)` from the irreducible
/// decomposition of `I`:
///
/// `min { n - r, sdepth(∩_{j∉τ}(Q_j : w) ∩ S_τ) + sdepth(S''/(∩_{j∈τ} Q_j ∩ S'')) }`
///
/// over nonempty proper `τ` and `w ∈ M_τ` with `∩_{j∉τ} Q_j ∩ wS_τ ≠ 0`.
/// For a single component the bound is `n - r`.
pub fn theorem_main_bound(
    d: &Decomposition,
    pivot: Pivot,
    cfg: &BoundConfig,
    cache: &mut SdepthCache,
    budget: &mut dyn Budget,
) -> Result<BoundReport> {
    let s = d.len();
    if s == 0 {
        return Err(Error::Domain("decomposition has no components"));
    }
    if s > cfg.max_components {
        return Err(Error::TooManyComponents { components: s, cap: cfg.max_components });
    }
    let pivots: Vec<usize> = match pivot {
        Pivot::Index(k) if k >= s => return Err(Error::Domain("pivot index out of range")),
        Pivot::Index(k) => alloc::vec![k],
        Pivot::All => (0..s).collect(),
    };
    let mut per_pivot = Vec::with_capacity(pivots.len());
    for p in pivots {
        let ctx = build_split(d, p)?;
        per_pivot.push(pivot_bound(&ctx, cfg, cache, budget)?);
    }
    let value = per_pivot.iter().map(|b| b.value).max().expect("at least one pivot");
    Ok(BoundReport { n: d.nvars(), s, value, per_pivot })
}

fn pivot_bound(
    ctx: &SplitContext,
    cfg: &BoundConfig,
    cache: &mut SdepthCache,
    budget: &mut dyn Budget,
) -> Result<PivotBound> {
    let n = ctx.nvars();
    let s = ctx.s();
    let r = ctx.r();
    let mut value = n - r;
    let mut terms = Vec::new();
    let s_dprime = ctx.s_dprime();
    for t in ctx.enumerate_tau() {
        let outside: Vec<usize> = (0..s).filter(|&j| t.mask >> j & 1 == 0).collect();
        let inside_meet = intersect(ctx, &t.tau, n);
        let quotient_ideal = inside_meet.restrict_to_subring(s_dprime);
        for w in &t.m_tau {
            let colon_meet = outside
                .iter()
                .map(|&j| ctx.component_ideal(j).colon(w).expect("same ring"))
                .reduce(|a, b| a.intersect(&b).expect("same ring"))
                .expect("τ is proper");
            let ideal_part_ideal = colon_meet.restrict_to_subring(t.s_tau);
            if ideal_part_ideal.is_zero() {
                continue;
            }
            let constants_ring = t.s_tau.is_empty();
            let ideal_part = if constants_ring {
                0
            } else {
                cache.get(Kind::Ideal, ideal_part_ideal.project(t.s_tau)?, cfg, budget)?
            };
            let empty_dprime = s_dprime.is_empty();
            let quotient_part = if empty_dprime {
                0
            } else {
                cache.get(Kind::Quotient, quotient_ideal.project(s_dprime)?, cfg, budget)?
            };
            let total = ideal_part + quotient_part;
            value = value.min(total);
            terms.push(BoundTerm {
                tau: t.tau.clone(),
                w: w.clone(),
                ideal_part,
                quotient_part,
                total,
                constants_ring,
                empty_dprime,
            });
        }
    }
    Ok(PivotBound { pivot: ctx.pivot(), r, value, terms, permutation: ctx.permutation().to_vec() })
}

fn intersect(ctx: &SplitContext, idx: &[usize], n: usize) -> MonomialIdeal {
    idx.iter()
        .map(|&j| ctx.component_ideal(j).clone())
        .reduce(|a, b| a.intersect(&b).expect("same ring"))
        .unwrap_or_else(|| MonomialIdeal::unit(n))
}
