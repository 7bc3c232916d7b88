//! Monomial-level check of the vector space decompositions of `S`, `I` and
//! `S/I` induced by a pivot component.
//!
//! Write a monomial as `m = u·v` with `u ∈ S'` and `v ∈ S''`. If `u ∉ Q` the
//! monomial lies in the summand `uS''`. Otherwise `τ = {j : u ∉ Q_j}` is a
//! proper subset of the components and `m` lies in the summand indexed by
//! `(τ, w)` where `w` is the part of `u` in the variables of `∑_{j∈τ} √Q_j`.
//! The summand for `τ = ∅` is `(I ∩ S')S`; for nonempty `τ`, `m` is in the
//! `I`-part iff `w·v ∈ ∩_{j∈τ} Q_j`.

use alloc::vec::Vec;

use super::split::SplitContext;
use crate::monomial::monomials_up_to_degree;
use crate::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SummandTag {
    /// `uS''` with `u ∈ Mon(S') \ Q`.
    First { u: Monomial },
    /// `(∩_{j∉τ} Q_j ∩ wS_τ) S_τ[S'']` with `w ∈ M_τ`.
    Tau { tau: Vec<usize>, w: Monomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tag: SummandTag,
    /// Whether the summand piece containing the monomial belongs to `I`.
    pub in_ideal_part: bool,
}

pub fn classify_monomial(ctx: &SplitContext, m: &Monomial) -> Classification {
    let u = m.part_in(ctx.s_prime());
    if !ctx.in_sum(&u) {
        return Classification { tag: SummandTag::First { u }, in_ideal_part: false };
    }
    let mask = (0..ctx.s()).filter(|&j| !ctx.in_component(j, &u)).fold(0u32, |acc, j| acc | 1 << j);
    let data = ctx.tau_data(mask);
    let w = u.part_in(data.v_tau);
    let in_ideal_part = if mask == 0 {
        true
    } else {
        let wv = w.mul(&m.part_in(ctx.s_dprime())).expect("same ring");
        data.tau.iter().all(|&j| ctx.in_component(j, &wv))
    };
    Classification { tag: SummandTag::Tau { tau: data.tau, w }, in_ideal_part }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The classifier's summand does not contain the monomial.
    NotInClaimedSummand,
    /// The monomial lies in this many summands (should be exactly one).
    Membership(usize),
    /// The classifier's `I`-part flag disagrees with membership in `I`.
    IdealPart { claimed: bool, actual: bool },
    /// `τ = ∅` tagging disagrees with membership in `(I ∩ S')S`.
    EmptyTau { tagged: bool, in_extension: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub monomial: Monomial,
    pub tag: SummandTag,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumReport {
    pub pivot: usize,
    pub degree_cap: u32,
    pub monomials: usize,
    pub first_summand: usize,
    pub tau_summand: usize,
    pub ideal_part: usize,
    /// Set when the cap does not exceed the largest generator degree of `I`.
    pub cap_too_small: bool,
    pub violations: Vec<Violation>,
}

impl DirectSumReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Classify every monomial of degree at most `degree_cap` and check the
/// classification against membership computed directly from the summand
/// definitions, for every summand at once.
pub fn verify_direct_sum(ctx: &SplitContext, degree_cap: u32) -> DirectSumReport {
    let d = ctx.decomposition();
    let ideal = d.intersection();
    let max_deg = ideal.gens().iter().map(Monomial::degree).max().unwrap_or(0);
    let s = ctx.s();
    // all proper subsets, including ∅
    let taus: Vec<_> = (0u32..(1u32 << s) - 1).map(|mask| ctx.tau_data(mask)).collect();

    let mut report = DirectSumReport {
        pivot: ctx.pivot(),
        degree_cap,
        monomials: 0,
        first_summand: 0,
        tau_summand: 0,
        ideal_part: 0,
        cap_too_small: u64::from(degree_cap) <= max_deg,
        violations: Vec::new(),
    };

    for m in monomials_up_to_degree(ctx.nvars(), degree_cap) {
        report.monomials += 1;
        let c = classify_monomial(ctx, &m);
        let u = m.part_in(ctx.s_prime());
        let mut push = |kind| report.violations.push(Violation { monomial: m.clone(), tag: c.tag.clone(), kind });

        let mut hits = Vec::new();
        if !ctx.in_sum(&u) {
            hits.push(SummandTag::First { u: u.clone() });
        }
        for t in &taus {
            let w = u.part_in(t.v_tau);
            let w_ok = t.m_tau.binary_search(&w).is_ok();
            let rest_ok = (0..s).filter(|&j| t.mask >> j & 1 == 0).all(|j| ctx.in_component(j, &u));
            if w_ok && rest_ok {
                hits.push(SummandTag::Tau { tau: t.tau.clone(), w });
            }
        }
        if !hits.contains(&c.tag) {
            push(ViolationKind::NotInClaimedSummand);
        }
        if hits.len() != 1 {
            push(ViolationKind::Membership(hits.len()));
        }
        let actual = ideal.contains_unchecked(&m);
        if c.in_ideal_part != actual {
            push(ViolationKind::IdealPart { claimed: c.in_ideal_part, actual });
        }
        let empty_tau = matches!(&c.tag, SummandTag::Tau { tau, .. } if tau.is_empty());
        let in_extension = ideal.contains_unchecked(&u);
        if empty_tau != in_extension {
            push(ViolationKind::EmptyTau { tagged: empty_tau, in_extension });
        }

        match c.tag {
            SummandTag::First { .. } => report.first_summand += 1,
            SummandTag::Tau { .. } => report.tau_summand += 1,
        }
        if c.in_ideal_part {
            report.ideal_part += 1;
        }
    }
    report
}
