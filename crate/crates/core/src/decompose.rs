//! Irredundant irreducible decomposition of monomial ideals.
//!
//! An irreducible monomial ideal is generated by pure powers of variables.
//! Every monomial ideal is a finite intersection of such ideals and the
//! irredundant presentation is unique, which makes it the canonical input
//! of the size invariant and the bound engine.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Monomial, MonomialIdeal, Result, VarSet};

/// An irreducible monomial ideal `(x_i^{a_i} : i in support)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    /// `(variable, exponent)` pairs sorted by variable, exponents positive.
    powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    pub fn new(mut powers: Vec<(usize, u32)>) -> Result<Self> {
        powers.sort_unstable();
        if powers.is_empty() {
            return Err(Error::Domain("irreducible component needs at least one generator"));
        }
        if powers.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Domain("irreducible component exponents must be positive"));
        }
        if powers.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Domain("repeated variable in irreducible component"));
        }
        Ok(IrreducibleComponent { powers })
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn support(&self) -> VarSet {
        self.powers.iter().map(|&(i, _)| i).collect()
    }

    /// `a_i` for `x_i` in the support.
    pub fn exponent(&self, var: usize) -> Option<u32> {
        self.powers.iter().find(|&&(i, _)| i == var).map(|&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.powers.iter().all(|&(_, e)| e == 1)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|&(i, e)| m.exponent(i) >= e)
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        let gens = self.powers.iter().map(|&(i, e)| Monomial::pure_power(nvars, i, e)).collect();
        MonomialIdeal::from_gens_unchecked(nvars, gens)
    }

    fn from_pure_power_ideal(ideal: &MonomialIdeal) -> Self {
        let powers = ideal.gens().iter().map(|g| g.as_pure_power().expect("generator is a pure power")).collect();
        IrreducibleComponent::new(powers).expect("nonzero proper ideal")
    }

    fn canonical_key(&self) -> (Vec<usize>, Vec<u32>) {
        (self.powers.iter().map(|p| p.0).collect(), self.powers.iter().map(|p| p.1).collect())
    }
}

impl Ord for IrreducibleComponent {
    /// Support first (as an increasing list of variables), then exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, &(i, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{}^{}", i + 1, e)?;
        }
        f.write_str(")")
    }
}

/// The irredundant presentation `I = Q_1 ∩ ... ∩ Q_s` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    nvars: usize,
    components: Vec<IrreducibleComponent>,
}

impl Decomposition {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `Q_1 ∩ ... ∩ Q_s`.
    pub fn intersection(&self) -> MonomialIdeal {
        let ideals: Vec<_> = self.components.iter().map(|q| q.to_ideal(self.nvars)).collect();
        MonomialIdeal::intersect_all(ideals.iter())
            .expect("same ring")
            .unwrap_or_else(|| MonomialIdeal::unit(self.nvars))
    }

    /// Union of the supports of `Q_j` for `j` in `indices` (0-based).
    ///
    /// For irreducible components this is the set of variables of the prime
    /// `sqrt(sum Q_j)`.
    pub fn support_union(&self, indices: &[usize]) -> Result<VarSet> {
        if indices.is_empty() {
            return Err(Error::Domain("empty component index set"));
        }
        let mut acc = VarSet::EMPTY;
        for &j in indices {
            let q = self.components.get(j).ok_or(Error::Domain("component index out of range"))?;
            acc = acc.union(q.support());
        }
        Ok(acc)
    }

    pub fn full_support(&self) -> VarSet {
        self.components.iter().fold(VarSet::EMPTY, |acc, q| acc.union(q.support()))
    }

    pub fn is_squarefree(&self) -> bool {
        self.components.iter().all(IrreducibleComponent::is_squarefree)
    }
}

/// Whether every minimal generator of `ideal` is a pure power.
///
/// The unit ideal is not irreducible here since decomposition components are
/// proper ideals. The zero ideal passes vacuously.
pub fn is_irreducible(ideal: &MonomialIdeal) -> bool {
    !ideal.is_unit() && ideal.gens().iter().all(|g| g.as_pure_power().is_some())
}

/// Compute the irredundant irreducible decomposition of a proper nonzero ideal.
///
/// Splitting rule: take the lexicographically first generator `g` that
/// involves at least two variables and let `x_i` be its first variable.
/// Then `I = (I + x_i^{e_i}) ∩ (I + g / x_i^{e_i})`. Leaves are ideals
/// generated by pure powers; the collected leaves are pruned to an
/// irredundant family.
pub fn decompose(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::Domain("cannot decompose the zero ideal"));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("cannot decompose the unit ideal"));
    }
    let mut memo = BTreeMap::new();
    let leaves = split(ideal, &mut memo);
    Ok(prune_irredundant(ideal.nvars(), leaves))
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut BTreeMap<MonomialIdeal, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(done) = memo.get(ideal) {
        return done.clone();
    }
    let n = ideal.nvars();
    let mixed = ideal.gens().iter().find(|g| g.as_pure_power().is_none());
    let out = match mixed {
        None => alloc::vec![IrreducibleComponent::from_pure_power_ideal(ideal)],
        Some(g) => {
            let i = g.support().iter().next().expect("mixed generator has support");
            let g1 = Monomial::pure_power(n, i, g.exponent(i));
            let g2 = g.colon(&g1).expect("same ring");
            let left = ideal.sum(&MonomialIdeal::from_gens_unchecked(n, alloc::vec![g1])).expect("same ring");
            let right = ideal.sum(&MonomialIdeal::from_gens_unchecked(n, alloc::vec![g2])).expect("same ring");
            let mut out = split(&left, memo);
            out.extend(split(&right, memo));
            out.sort();
            out.dedup();
            out
        }
    };
    memo.insert(ideal.clone(), out.clone());
    out
}

/// Drop every `Q_k` with `∩_{j≠k} Q_j ⊆ Q_k` until the family is irredundant.
///
/// Containment is checked on the generators of the intersection of the
/// remaining components. The irredundant presentation is unique, so the
/// result does not depend on the removal order.
pub fn prune_irredundant(nvars: usize, mut components: Vec<IrreducibleComponent>) -> Decomposition {
    components.sort();
    components.dedup();
    let mut k = 0;
    while k < components.len() && components.len() > 1 {
        let others: Vec<MonomialIdeal> =
            components.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, q)| q.to_ideal(nvars)).collect();
        let rest = MonomialIdeal::intersect_all(others.iter()).expect("same ring").expect("nonempty");
        if rest.gens().iter().all(|g| components[k].contains(g)) {
            components.remove(k);
        } else {
            k += 1;
        }
    }
    Decomposition { nvars, components }
}
