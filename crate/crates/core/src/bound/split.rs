use alloc::vec::Vec;

use crate::{Decomposition, Error, Monomial, MonomialIdeal, Result, VarSet};

/// A decomposition with one component chosen as the pivot `Q_1`.
///
/// `S'` is the polynomial ring on the pivot's support and `S''` the ring on
/// the remaining variables. Variables keep their ambient indices; the
/// relabeling that would move `S'` to the front is recorded in
/// [`permutation`](Self::permutation) for reports only.
#[derive(Clone, Debug)]
pub struct SplitContext {
    decomposition: Decomposition,
    pivot: usize,
    s_prime: VarSet,
    s_dprime: VarSet,
    permutation: Vec<usize>,
    ideals: Vec<MonomialIdeal>,
    /// `min_j a_{i,j}` over all components containing `x_i`; 0 if none.
    sum_exponents: Vec<u32>,
}

/// Data attached to a subset `τ` of component indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauData {
    /// Sorted 0-based component indices.
    pub tau: Vec<usize>,
    pub mask: u32,
    /// Variables of `S'` outside `∑_{j∈τ} √Q_j`.
    pub s_tau: VarSet,
    /// Variables of `S'` inside `∑_{j∈τ} √Q_j`.
    pub v_tau: VarSet,
    /// Monomials of `K[V_τ]` outside `∑_{j∈τ} Q_j`, in lexicographic order.
    pub m_tau: Vec<Monomial>,
}

/// Put component `pivot` (0-based) first.
pub fn build_split(d: &Decomposition, pivot: usize) -> Result<SplitContext> {
    let q1 = d.components().get(pivot).ok_or(Error::Domain("pivot index out of range"))?;
    let n = d.nvars();
    let s_prime = q1.support();
    let s_dprime = VarSet::full(n).difference(s_prime);
    let permutation = s_prime.iter().chain(s_dprime.iter()).collect();
    let ideals = d.components().iter().map(|q| q.to_ideal(n)).collect();
    let mut sum_exponents = alloc::vec![0u32; n];
    for q in d.components() {
        for &(i, e) in q.powers() {
            if sum_exponents[i] == 0 || e < sum_exponents[i] {
                sum_exponents[i] = e;
            }
        }
    }
    Ok(SplitContext { decomposition: d.clone(), pivot, s_prime, s_dprime, permutation, ideals, sum_exponents })
}

impl SplitContext {
    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn nvars(&self) -> usize {
        self.decomposition.nvars()
    }

    pub fn s(&self) -> usize {
        self.decomposition.len()
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// `|support(Q_1)|`.
    pub fn r(&self) -> usize {
        self.s_prime.len()
    }

    pub fn s_prime(&self) -> VarSet {
        self.s_prime
    }

    pub fn s_dprime(&self) -> VarSet {
        self.s_dprime
    }

    /// `permutation[k]` is the ambient variable placed at position `k`:
    /// first the pivot's support, then the rest, each increasing.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// `Q_j` as a monomial ideal.
    pub fn component_ideal(&self, j: usize) -> &MonomialIdeal {
        &self.ideals[j]
    }

    /// `Q = Q_1 + ... + Q_s`, tested via the least pure power per variable.
    pub fn in_sum(&self, u: &Monomial) -> bool {
        self.sum_exponents.iter().zip(u.exponents()).any(|(&a, &e)| a > 0 && e >= a)
    }

    pub(crate) fn in_component(&self, j: usize, u: &Monomial) -> bool {
        self.decomposition.components()[j].contains(u)
    }

    pub(crate) fn mask_members(&self, mask: u32) -> Vec<usize> {
        (0..self.s()).filter(|&j| mask >> j & 1 == 1).collect()
    }

    /// `S_τ`, `V_τ` and `M_τ` for the component subset `mask`.
    ///
    /// For `τ = ∅` this gives `S_∅ = S'` and `M_∅ = {1}`.
    pub fn tau_data(&self, mask: u32) -> TauData {
        let tau = self.mask_members(mask);
        let n = self.nvars();
        let comps = self.decomposition.components();
        let rad = tau.iter().fold(VarSet::EMPTY, |acc, &j| acc.union(comps[j].support()));
        let v_tau = self.s_prime.intersection(rad);
        let s_tau = self.s_prime.difference(rad);
        // box bound: x_i^{a} with a below the least exponent of x_i among Q_j, j ∈ τ
        let mut bound = alloc::vec![0u32; n];
        for i in v_tau.iter() {
            bound[i] = tau.iter().filter_map(|&j| comps[j].exponent(i)).min().expect("i in some support") - 1;
        }
        let tau_sum =
            tau.iter().map(|&j| &self.ideals[j]).fold(MonomialIdeal::zero(n), |acc, q| acc.sum(q).expect("same ring"));
        let m_tau =
            crate::monomial::monomials_in_box(&bound).into_iter().filter(|w| !tau_sum.contains_unchecked(w)).collect();
        TauData { tau, mask, s_tau, v_tau, m_tau }
    }

    /// All nonempty proper subsets `τ` of the components, by increasing mask.
    /// Empty when `s = 1`.
    pub fn enumerate_tau(&self) -> Vec<TauData> {
        let s = self.s();
        if s < 2 {
            return Vec::new();
        }
        (1u32..(1u32 << s) - 1).map(|mask| self.tau_data(mask)).collect()
    }
}
