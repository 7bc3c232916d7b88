//! Lyubeznik's size invariant.
//!
//! For `I = Q_1 ∩ ... ∩ Q_s` irredundant, let `h` be the height of
//! `Q_1 + ... + Q_s` and `v` the least number of components whose sum has
//! the same radical. Then `size(I) = v + n - h - 1`. Radicals of sums of
//! irreducible ideals are primes on unions of supports, so `v` is a minimum
//! set cover of the union of component supports.

use alloc::vec::Vec;

use crate::{decompose, Decomposition, Error, MonomialIdeal, Result, VarSet};

/// Default cap on the number of components for the exact cover search.
pub const DEFAULT_MAX_COMPONENTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub n: usize,
    pub s: usize,
    /// Number of variables in the union of all component supports.
    pub h: usize,
    /// Minimum number of components covering that union.
    pub v: usize,
    pub size: usize,
    /// Lexicographically least 0-based component index set of cardinality `v`.
    pub witness: Vec<usize>,
}

/// `size(I)` for a proper nonzero ideal.
pub fn size(ideal: &MonomialIdeal) -> Result<SizeReport> {
    let d = decompose(ideal)?;
    size_of_decomposition(&d, DEFAULT_MAX_COMPONENTS)
}

pub fn size_of_decomposition(d: &Decomposition, max_components: usize) -> Result<SizeReport> {
    if d.len() > max_components {
        return Err(Error::TooManyComponents { components: d.len(), cap: max_components });
    }
    let (v, witness) = min_cover(d)?;
    let n = d.nvars();
    let h = d.full_support().len();
    Ok(SizeReport { n, s: d.len(), h, v, size: v + n - h - 1, witness })
}

/// Minimum number of components whose supports cover the union of all
/// supports, with the lexicographically least witness.
pub fn min_cover(d: &Decomposition) -> Result<(usize, Vec<usize>)> {
    if d.is_empty() {
        return Err(Error::Domain("decomposition has no components"));
    }
    let sets: Vec<VarSet> = d.components().iter().map(|q| q.support()).collect();
    Ok(min_set_cover(&sets))
}

/// Exact minimum cover of `union(sets)` by members of `sets`.
///
/// Cardinalities are tried in increasing order up to the greedy cover size,
/// and within one cardinality index subsets are visited in lexicographic
/// order, so the first hit is the lexicographically least minimum cover.
/// Branches are cut when the remaining sets cannot cover what is missing.
pub fn min_set_cover(sets: &[VarSet]) -> (usize, Vec<usize>) {
    let target = sets.iter().fold(VarSet::EMPTY, |a, &b| a.union(b));
    let greedy = greedy_cover(sets, target);
    // suffix[i] = union of sets[i..]
    let mut suffix = alloc::vec![VarSet::EMPTY; sets.len() + 1];
    for i in (0..sets.len()).rev() {
        suffix[i] = suffix[i + 1].union(sets[i]);
    }
    for k in 1..greedy.len() {
        let mut chosen = Vec::with_capacity(k);
        if search(sets, &suffix, target, VarSet::EMPTY, 0, k, &mut chosen) {
            return (k, chosen);
        }
    }
    // the greedy size is attained; find the least witness of that size
    let k = greedy.len();
    let mut chosen = Vec::with_capacity(k);
    let found = search(sets, &suffix, target, VarSet::EMPTY, 0, k, &mut chosen);
    debug_assert!(found);
    (k, chosen)
}

fn search(
    sets: &[VarSet],
    suffix: &[VarSet],
    target: VarSet,
    covered: VarSet,
    start: usize,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return target.is_subset(covered);
    }
    let left = k - chosen.len();
    for i in start..=sets.len().saturating_sub(left) {
        if !target.is_subset(covered.union(suffix[i])) {
            return false;
        }
        chosen.push(i);
        if search(sets, suffix, target, covered.union(sets[i]), i + 1, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn greedy_cover(sets: &[VarSet], target: VarSet) -> Vec<usize> {
    let mut covered = VarSet::EMPTY;
    let mut picked = Vec::new();
    while !target.is_subset(covered) {
        let best = (0..sets.len())
            .max_by_key(|&i| (sets[i].difference(covered).len(), core::cmp::Reverse(i)))
            .expect("nonempty");
        covered = covered.union(sets[best]);
        picked.push(best);
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IrreducibleComponent, Monomial};
    use alloc::vec;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn vs(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    /// Full enumeration of index subsets; least cardinality, then least in
    /// lexicographic order of the sorted index list.
    fn brute_cover(sets: &[VarSet]) -> (usize, Vec<usize>) {
        let target = sets.iter().fold(VarSet::EMPTY, |a, &b| a.union(b));
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u32..(1 << sets.len()) {
            let idx: Vec<usize> = (0..sets.len()).filter(|i| mask >> i & 1 == 1).collect();
            let cov = idx.iter().fold(VarSet::EMPTY, |a, &i| a.union(sets[i]));
            if cov != target {
                continue;
            }
            best = match best {
                Some(b) if (b.len(), &b) <= (idx.len(), &idx) => Some(b),
                _ => Some(idx),
            };
        }
        let b = best.unwrap();
        (b.len(), b)
    }

    #[test]
    fn min_cover_examples() {
        assert_eq!(min_set_cover(&[vs(&[1]), vs(&[0, 2])]).0, 2);
        assert_eq!(min_set_cover(&[vs(&[0, 1]), vs(&[0, 2])]), (2, vec![0, 1]));
        assert_eq!(min_set_cover(&[vs(&[0, 3])]), (1, vec![0]));
        // greedy picks {0,1,2} first and then needs two more; optimum is 2
        let tricky = [vs(&[0, 1, 2]), vs(&[0, 1, 3]), vs(&[2, 4]), vs(&[3, 5]), vs(&[4, 5])];
        assert_eq!(min_set_cover(&tricky), brute_cover(&tricky));
    }

    #[test]
    fn two_generator_example_size() {
        let r = size(&ideal(3, &[&[2, 0, 0], &[0, 1, 1]])).unwrap();
        assert_eq!((r.n, r.s, r.h, r.v, r.size), (3, 2, 3, 2, 1));
        assert_eq!(r.witness, vec![0, 1]);
        let p = size(&ideal(4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]])).unwrap();
        assert_eq!(p.size, 1);
    }

    #[test]
    fn maximal_ideal_has_size_zero() {
        for n in 1..=5 {
            let gens: Vec<Vec<u32>> = (0..n).map(|i| Monomial::pure_power(n, i, 1).exponents().to_vec()).collect();
            let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
            let r = size(&ideal(n, &refs)).unwrap();
            assert_eq!((r.v, r.h, r.size), (1, n, 0));
        }
    }

    #[test]
    fn single_component_size_is_n_minus_r() {
        let r = size(&ideal(4, &[&[2, 0, 0, 0], &[0, 0, 3, 0]])).unwrap();
        assert_eq!((r.v, r.size), (1, 2));
    }

    #[test]
    fn component_cap() {
        let d = crate::decompose::prune_irredundant(
            3,
            vec![IrreducibleComponent::new(vec![(0, 1)]).unwrap(), IrreducibleComponent::new(vec![(1, 1)]).unwrap()],
        );
        assert!(matches!(size_of_decomposition(&d, 1), Err(Error::TooManyComponents { .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn exact_cover_matches_brute_force(masks in prop::collection::vec(1u64..(1 << 7), 1..=12)) {
                let sets: Vec<VarSet> = masks.into_iter().map(VarSet::from_bits).collect();
                prop_assert_eq!(min_set_cover(&sets), brute_cover(&sets));
            }

            #[test]
            fn size_bounds_and_permutation_invariance(
                gens in prop::collection::vec(prop::collection::vec(0u32..=2, 4), 1..6)
                    .prop_filter("proper", |gs| gs.iter().all(|g| g.iter().any(|&e| e > 0))),
                perm in Just([0usize, 1, 2, 3]).prop_shuffle(),
            ) {
                let i = MonomialIdeal::new(4, gens.iter().cloned().map(Monomial::new).collect()).unwrap();
                let d = decompose(&i).unwrap();
                let r = size_of_decomposition(&d, 20).unwrap();
                let largest = d.components().iter().map(|q| q.support().len()).max().unwrap();
                prop_assert!(r.size <= 4 - largest);
                let moved = MonomialIdeal::new(4, gens.iter().map(|g| {
                    let mut e = vec![0u32; 4];
                    for (k, &x) in g.iter().enumerate() { e[perm[k]] = x; }
                    Monomial::new(e)
                }).collect()).unwrap();
                prop_assert_eq!(size(&moved).unwrap().size, r.size);
            }
        }
    }
}
