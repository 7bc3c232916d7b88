//! Lower bounds for `sdepth(S/I)` from the irreducible decomposition of `I`.
//!
//! Fix one component `Q_1 = (x_1^{a_1}, ..., x_r^{a_r})` as the pivot, let
//! `S' = K[x_1..x_r]` and `S'' = K[x_{r+1}..x_n]`. Every nonempty proper
//! subset `τ` of the components yields a subring `S_τ ⊆ S'` and a finite set
//! `M_τ` of monomials; together they index a direct sum decomposition of
//! `S/I` as a vector space. Bounding the Stanley depth of every summand
//! gives [`theorem_main_bound`]. Under the radical-sum hypothesis checked by
//! [`hypothesis_check`] that bound is at least `size(I)`.

mod classify;
mod engine;
mod hypothesis;
mod split;

pub use classify::{
    classify_monomial, verify_direct_sum, Classification, DirectSumReport, SummandTag, Violation, ViolationKind,
};
pub use engine::{theorem_main_bound, BoundReport, BoundTerm, Pivot, PivotBound, SdepthCache};
pub use hypothesis::{hypothesis_check, HypothesisReport};
pub use split::{build_split, SplitContext, TauData};

use crate::sdepth::{sdepth_quotient, Budget, SdepthConfig, StanleyDecomposition};
use crate::size::{size_of_decomposition, SizeReport};
use crate::{decompose, Decomposition, MonomialIdeal, Result};

/// Default cap on the number of components for the `2^s` subset enumeration.
pub const DEFAULT_MAX_COMPONENTS: usize = 12;

/// Default degree cap for [`verify_direct_sum`].
pub const DEFAULT_DEGREE_CAP: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundConfig {
    pub max_components: usize,
    pub sdepth: SdepthConfig,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig { max_components: DEFAULT_MAX_COMPONENTS, sdepth: SdepthConfig::default() }
    }
}

/// Everything known about one ideal: size, hypothesis, bound, exact sdepth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub ideal: MonomialIdeal,
    pub decomposition: Decomposition,
    pub size: SizeReport,
    pub hypothesis: HypothesisReport,
    pub bound: BoundReport,
    pub sdepth: StanleyDecomposition,
}

impl InequalityReport {
    pub fn sdepth_exact(&self) -> usize {
        self.sdepth.sdepth
    }

    /// `sdepth(S/I) >= size(I)`.
    pub fn inequality_holds(&self) -> bool {
        self.sdepth.sdepth >= self.size.size
    }

    /// The exact value respects the bound for every pivot.
    pub fn bound_sound(&self) -> bool {
        self.bound.per_pivot.iter().all(|p| self.sdepth.sdepth >= p.value)
    }

    /// Whether every pivot's bound is at least `size(I)`; meaningful under the hypothesis.
    pub fn bound_dominates_size(&self) -> bool {
        self.bound.per_pivot.iter().all(|p| p.value >= self.size.size)
    }

    /// A contradiction with a proven statement: an unsound bound, or a
    /// failure of the size inequality for an ideal satisfying the hypothesis.
    pub fn has_violation(&self) -> bool {
        !self.bound_sound() || (self.hypothesis.satisfied && (!self.inequality_holds() || !self.bound_dominates_size()))
    }
}

/// Compute size, hypothesis, the all-pivot bound and the exact `sdepth(S/I)`.
pub fn size_inequality_check(
    ideal: &MonomialIdeal,
    cfg: &BoundConfig,
    budget: &mut dyn Budget,
) -> Result<InequalityReport> {
    let decomposition = decompose(ideal)?;
    let size = size_of_decomposition(&decomposition, crate::size::DEFAULT_MAX_COMPONENTS)?;
    let hypothesis = hypothesis_check(&decomposition);
    let mut cache = SdepthCache::new();
    let bound = theorem_main_bound(&decomposition, Pivot::All, cfg, &mut cache, budget)?;
    let sdepth = sdepth_quotient(ideal, &cfg.sdepth, budget)?;
    Ok(InequalityReport { ideal: ideal.clone(), decomposition, size, hypothesis, bound, sdepth })
}
