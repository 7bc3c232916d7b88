//! JSON encodings of library results. Component and variable indices are
//! 1-based in every report.

use serde_json::{json, Value};
use stanley_core::bound::{
    BoundReport, BoundTerm, DirectSumReport, HypothesisReport, InequalityReport, PivotBound, SummandTag, ViolationKind,
};
use stanley_core::{
    Decomposition, IrreducibleComponent, MonomialIdeal, Polarization, SizeReport, StanleyDecomposition,
};

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    json!(i.to_string())
}

/// A component as its list of `x<i>^<e>` generators.
pub fn component(q: &IrreducibleComponent) -> Value {
    q.powers().iter().map(|&(i, e)| format!("x{}^{}", i + 1, e)).collect()
}

pub fn decomposition(d: &Decomposition) -> Value {
    d.components().iter().map(component).collect()
}

pub fn size(r: &SizeReport) -> Value {
    json!({
        "n": r.n,
        "s": r.s,
        "h": r.h,
        "v": r.v,
        "size": r.size,
        "witness": one_based(&r.witness),
    })
}

pub fn hypothesis(h: &HypothesisReport) -> Value {
    let violations: Vec<Value> =
        h.violations.iter().map(|(i, tau)| json!({ "i": i + 1, "tau": one_based(tau) })).collect();
    json!({ "satisfied": h.satisfied, "violations": violations })
}

fn term(t: &BoundTerm) -> Value {
    json!({
        "tau": one_based(&t.tau),
        "w": t.w.to_string(),
        "ideal_part": t.ideal_part,
        "quotient_part": t.quotient_part,
        "total": t.total,
        "constants_ring": t.constants_ring,
        "empty_dprime": t.empty_dprime,
    })
}

fn pivot(p: &PivotBound, n: usize) -> Value {
    json!({
        "pivot": p.pivot + 1,
        "r": p.r,
        "n_minus_r": n - p.r,
        "value": p.value,
        "permutation": p.permutation.iter().map(|&i| format!("x{}", i + 1)).collect::<Vec<_>>(),
        "terms": p.terms.iter().map(term).collect::<Vec<_>>(),
    })
}

/// `terms` are those of the first pivot attaining `value`.
pub fn bound(b: &BoundReport) -> Value {
    let best = b.per_pivot.iter().find(|p| p.value == b.value).expect("value comes from a pivot");
    json!({
        "value": b.value,
        "best_pivot": best.pivot + 1,
        "per_pivot": b.per_pivot.iter().map(|p| pivot(p, b.n)).collect::<Vec<_>>(),
        "terms": best.terms.iter().map(term).collect::<Vec<_>>(),
    })
}

/// Witness intervals as `[lower, upper, dimension]` triples.
pub fn stanley(sd: &StanleyDecomposition) -> Value {
    json!({
        "sdepth": sd.sdepth,
        "cap": sd.cap,
        "intervals": sd.intervals.iter().map(|iv| json!([iv.lower, iv.upper, iv.dimension])).collect::<Vec<_>>(),
    })
}

pub fn check(r: &InequalityReport) -> Value {
    json!({
        "ideal": ideal(&r.ideal),
        "n": r.ideal.nvars(),
        "s": r.decomposition.len(),
        "decomposition": decomposition(&r.decomposition),
        "size": size(&r.size),
        "hypothesis": hypothesis(&r.hypothesis),
        "bound": bound(&r.bound),
        "sdepth_exact": r.sdepth_exact(),
        "sdepth_witness": stanley(&r.sdepth),
        "inequality_holds": r.inequality_holds(),
        "bound_sound": r.bound_sound(),
        "bound_ge_size": r.bound_dominates_size(),
        "violation": r.has_violation(),
    })
}

fn tag(t: &SummandTag) -> Value {
    match t {
        SummandTag::First { u } => json!({ "first": u.to_string() }),
        SummandTag::Tau { tau, w } => json!({ "tau": one_based(tau), "w": w.to_string() }),
    }
}

pub fn direct_sum(r: &DirectSumReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let kind = match &v.kind {
                ViolationKind::NotInClaimedSummand => json!("not_in_claimed_summand"),
                ViolationKind::Membership(k) => json!({ "summands": k }),
                ViolationKind::IdealPart { claimed, actual } => json!({ "ideal_part": claimed, "in_ideal": actual }),
                ViolationKind::EmptyTau { tagged, in_extension } => {
                    json!({ "empty_tau": tagged, "in_extension": in_extension })
                }
            };
            json!({ "monomial": v.monomial.to_string(), "tag": tag(&v.tag), "kind": kind })
        })
        .collect();
    json!({
        "pivot": r.pivot + 1,
        "degree_cap": r.degree_cap,
        "monomials": r.monomials,
        "first_summand": r.first_summand,
        "tau_summand": r.tau_summand,
        "ideal_part": r.ideal_part,
        "cap_too_small": r.cap_too_small,
        "violations": violations,
    })
}

pub fn polarization(original: &MonomialIdeal, p: &Polarization) -> Value {
    json!({
        "ideal": ideal(original),
        "n": original.nvars(),
        "polarized": ideal(&p.ideal),
        "polarized_n": p.ideal.nvars(),
        "added": p.added,
        "parents": p.parents.iter().map(|&i| format!("x{}", i + 1)).collect::<Vec<_>>(),
    })
}
