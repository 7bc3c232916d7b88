//! Monomial ideals in canonical form: a minimal generating set, sorted
//! lexicographically by exponent vector.

use alloc::vec::Vec;
use core::fmt;

use crate::monomial::check_nvars;
use crate::{Error, Monomial, Result, VarSet};

/// A monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators, the unit ideal has the single generator `1`.
/// Ideals of a coordinate subring are kept in the ambient ring; their
/// generators are simply supported inside the subring's variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Result of [`MonomialIdeal::polarize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    /// The squarefree ideal in `original + added` variables.
    pub ideal: MonomialIdeal,
    pub added: usize,
    /// For every variable of the enlarged ring, the original variable it replaces.
    pub parents: Vec<usize>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        check_nvars(nvars)?;
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::RingMismatch { left: nvars, right: g.nvars() });
        }
        Ok(Self::from_gens_unchecked(nvars, gens))
    }

    pub(crate) fn from_gens_unchecked(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: alloc::vec![Monomial::one(nvars)] }
    }

    /// The irreducible ideal `(x_i^{a_i} : i)` from `(var, exponent)` pairs.
    pub fn from_pure_powers(nvars: usize, powers: &[(usize, u32)]) -> Result<Self> {
        let gens = powers.iter().map(|&(i, e)| Monomial::pure_power(nvars, i, e)).collect();
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Union of the supports of all generators.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// Componentwise maximum of generator exponents (the exponent vector of
    /// the lcm of the generators).
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = alloc::vec![0u32; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Reject ideals with a generator exponent above `cap`.
    pub fn check_exponent_cap(&self, cap: u32) -> Result<()> {
        match self.lcm_exponents().into_iter().max() {
            Some(e) if e > cap => Err(Error::ExponentCap { exponent: e, cap }),
            _ => Ok(()),
        }
    }

    fn same_ring(&self, nvars: usize) -> Result<()> {
        if self.nvars == nvars {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.nvars, right: nvars })
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.same_ring(m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`, tested on generators.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other.nvars)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.zip_with(h, u32::max));
            }
        }
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// Intersection of a nonempty family; `None` for an empty iterator.
    pub fn intersect_all<'a>(mut ideals: impl Iterator<Item = &'a MonomialIdeal>) -> Result<Option<MonomialIdeal>> {
        let Some(first) = ideals.next() else { return Ok(None) };
        let mut acc = first.clone();
        for j in ideals {
            acc = acc.intersect(j)?;
        }
        Ok(Some(acc))
    }

    /// `(self : w)`.
    pub fn colon(&self, w: &Monomial) -> Result<MonomialIdeal> {
        self.same_ring(w.nvars())?;
        let gens = self.gens.iter().map(|g| g.zip_with(w, u32::saturating_sub)).collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        Self::from_gens_unchecked(self.nvars, gens)
    }

    /// `w * self`.
    pub fn mul_monomial(&self, w: &Monomial) -> Result<MonomialIdeal> {
        self.same_ring(w.nvars())?;
        let gens = self.gens.iter().map(|g| g.zip_with(w, |a, b| a + b)).collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `self ∩ K[vars]`, kept in the ambient ring.
    ///
    /// A monomial of the subring lies in `self` iff some generator divides it,
    /// and such a generator is itself supported in `vars`.
    pub fn restrict_to_subring(&self, vars: VarSet) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self.gens.iter().filter(|g| g.support().is_subset(vars)).cloned().collect(),
        }
    }

    /// Re-index an ideal whose generators are supported in `vars` onto the
    /// dense ring `K[vars]` with `vars.len()` variables.
    ///
    /// Generators outside `vars` are an error; call
    /// [`restrict_to_subring`](Self::restrict_to_subring) first.
    pub fn project(&self, vars: VarSet) -> Result<MonomialIdeal> {
        if !self.support().is_subset(vars) {
            return Err(Error::Domain("ideal has generators outside the target subring"));
        }
        check_nvars(vars.len())?;
        let gens = self.gens.iter().map(|g| g.project(vars)).collect();
        Ok(Self::from_gens_unchecked(vars.len(), gens))
    }

    /// Standard polarization: `x_i^e` becomes `x_i * x_{i,2} * ... * x_{i,e}`.
    ///
    /// The first copy of `x_i` keeps index `i`; extra copies are appended after
    /// the original variables, grouped by parent variable in increasing order.
    pub fn polarize(&self) -> Result<Polarization> {
        let maxes = self.lcm_exponents();
        let mut parents: Vec<usize> = (0..self.nvars).collect();
        // offset[i]: index of the second copy of x_i in the enlarged ring
        let mut offset = alloc::vec![0usize; self.nvars];
        for (i, &e) in maxes.iter().enumerate() {
            offset[i] = parents.len();
            for _ in 1..e.max(1) {
                parents.push(i);
            }
        }
        let total = parents.len();
        check_nvars(total)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = alloc::vec![0u32; total];
                for (i, &e) in g.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[i] = 1;
                        for k in 1..e as usize {
                            exps[offset[i] + k - 1] = 1;
                        }
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        Ok(Polarization { ideal: Self::from_gens_unchecked(total, gens), added: total - self.nvars, parents })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in {} vars", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    /// Membership straight from the definition of the generating set, with no
    /// minimalization involved.
    fn raw_member(gens: &[&[u32]], x: &Monomial) -> bool {
        gens.iter().any(|g| g.iter().zip(x.exponents()).all(|(a, b)| a <= b))
    }

    fn is_antichain(i: &MonomialIdeal) -> bool {
        let g = i.gens();
        (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !g[a].divides_unchecked(&g[b])))
    }

    #[test]
    fn contains_examples() {
        assert!(ideal(2, &[&[2, 0]]).contains(&m(&[2, 1])).unwrap());
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert!(!ex.contains(&m(&[1, 1, 0])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&m(&[4, 4, 4])).unwrap());
        assert!(ex.contains(&m(&[1, 1])).is_err());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(ideal(2, &[&[1, 0]]).sum(&ideal(2, &[&[1, 1]])).unwrap(), ideal(2, &[&[1, 0]]));
        let a: &[&[u32]] = &[&[2, 0, 0], &[0, 1, 0]];
        let b: &[&[u32]] = &[&[2, 0, 0], &[0, 0, 1]];
        let s = ideal(3, a).sum(&ideal(3, b)).unwrap();
        assert_eq!(s, ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        for x in monomials_up_to_degree(3, 4) {
            assert_eq!(s.contains(&x).unwrap(), raw_member(a, &x) || raw_member(b, &x));
        }
        let i = ideal(3, a);
        assert_eq!(i.sum(&MonomialIdeal::zero(3)).unwrap(), i);
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(ideal(2, &[&[1, 0]]).intersect(&ideal(2, &[&[0, 1]])).unwrap(), ideal(2, &[&[1, 1]]));
        let a: &[&[u32]] = &[&[2, 0, 0], &[0, 1, 0]];
        let b: &[&[u32]] = &[&[2, 0, 0], &[0, 0, 1]];
        let i = ideal(3, a).intersect(&ideal(3, b)).unwrap();
        assert_eq!(i, ideal(3, &[&[2, 0, 0], &[0, 1, 1]]));
        for x in monomials_up_to_degree(3, 6) {
            assert_eq!(i.contains(&x).unwrap(), raw_member(a, &x) && raw_member(b, &x));
        }
        assert_eq!(i.intersect(&MonomialIdeal::unit(3)).unwrap(), i);
    }

    #[test]
    fn colon_examples() {
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(ex.colon(&m(&[0, 1, 0])).unwrap(), ideal(3, &[&[2, 0, 0], &[0, 0, 1]]));
        assert_eq!(ex.colon(&Monomial::one(3)).unwrap(), ex);
        let gens: &[&[u32]] = &[&[2, 0], &[0, 1]];
        let c = ideal(2, gens).colon(&m(&[1, 0])).unwrap();
        assert_eq!(c, ideal(2, &[&[1, 0], &[0, 1]]));
        for x in monomials_up_to_degree(2, 4) {
            let xw = x.mul(&m(&[1, 0])).unwrap();
            assert_eq!(c.contains(&x).unwrap(), raw_member(gens, &xw));
        }
    }

    #[test]
    fn radical_examples() {
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(ex.radical(), ideal(3, &[&[1, 0, 0], &[0, 1, 1]]));
        assert_eq!(ideal(1, &[&[3]]).radical(), ideal(1, &[&[1]]));
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sq.radical(), sq);
    }

    #[test]
    fn restrict_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(i.restrict_to_subring(VarSet::singleton(2)), ideal(3, &[&[0, 0, 1]]));
        assert!(ideal(2, &[&[1, 1]]).restrict_to_subring(VarSet::singleton(0)).is_zero());
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let sub: VarSet = [1, 2].into_iter().collect();
        let r = ex.restrict_to_subring(sub);
        assert_eq!(r, ideal(3, &[&[0, 1, 1]]));
        for x in monomials_up_to_degree(3, 4).into_iter().filter(|x| x.support().is_subset(sub)) {
            assert_eq!(r.contains(&x).unwrap(), ex.contains(&x).unwrap());
        }
    }

    #[test]
    fn project_reindexes() {
        let i = ideal(4, &[&[0, 2, 0, 1]]);
        let vars: VarSet = [1, 3].into_iter().collect();
        assert_eq!(i.project(vars).unwrap(), ideal(2, &[&[2, 1]]));
        assert!(i.project(VarSet::singleton(1)).is_err());
    }

    #[test]
    fn polarize_examples() {
        let p = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]).polarize().unwrap();
        assert_eq!(p.ideal, ideal(4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]));
        assert_eq!(p.added, 1);
        assert_eq!(p.parents, vec![0, 1, 2, 0]);

        let sq = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let p = sq.polarize().unwrap();
        assert_eq!((p.ideal, p.added), (sq, 0));

        let p = ideal(1, &[&[3]]).polarize().unwrap();
        assert_eq!(p.ideal, ideal(3, &[&[1, 1, 1]]));
        assert_eq!(p.added, 2);
    }

    #[test]
    fn zero_and_unit() {
        assert!(MonomialIdeal::zero(2).is_zero());
        assert!(MonomialIdeal::unit(2).is_unit());
        assert!(ideal(2, &[&[0, 0], &[1, 0]]).is_unit());
        assert_eq!(format!("{}", MonomialIdeal::zero(2)), "0");
        assert_eq!(format!("{}", ideal(3, &[&[0, 1, 1], &[2, 0, 0]])), "x2*x3, x1^2");
    }

    #[test]
    fn exponent_cap() {
        let i = ideal(2, &[&[65, 0]]);
        assert_eq!(i.check_exponent_cap(64), Err(Error::ExponentCap { exponent: 65, cap: 64 }));
        assert!(i.check_exponent_cap(65).is_ok());
    }

    #[test]
    fn minimal_and_lex_sorted() {
        let i = ideal(2, &[&[1, 1], &[0, 2], &[1, 1], &[2, 2], &[1, 0]]);
        assert_eq!(i.gens(), &[m(&[0, 2]), m(&[1, 0])]);
        assert!(is_antichain(&i));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
            prop::collection::vec(prop::collection::vec(0u32..=3, n), 0..5)
                .prop_map(move |gs| MonomialIdeal::new(n, gs.into_iter().map(Monomial::new).collect()).unwrap())
        }

        proptest! {
            #[test]
            fn binary_ops_match_membership(a in arb_ideal(3), b in arb_ideal(3), w in prop::collection::vec(0u32..=2, 3)) {
                let w = Monomial::new(w);
                let s = a.sum(&b).unwrap();
                let i = a.intersect(&b).unwrap();
                let c = a.colon(&w).unwrap();
                for r in [&s, &i, &c] {
                    prop_assert!(is_antichain(r));
                    prop_assert!(r.gens().windows(2).all(|p| p[0] < p[1]));
                }
                for x in monomials_up_to_degree(3, 6) {
                    let ia = a.contains(&x).unwrap();
                    let ib = b.contains(&x).unwrap();
                    prop_assert_eq!(s.contains(&x).unwrap(), ia || ib);
                    prop_assert_eq!(i.contains(&x).unwrap(), ia && ib);
                    prop_assert_eq!(c.contains(&x).unwrap(), a.contains(&x.mul(&w).unwrap()).unwrap());
                }
            }

            #[test]
            fn radical_laws(a in arb_ideal(3), b in arb_ideal(3)) {
                let r = a.radical();
                prop_assert_eq!(r.radical(), r.clone());
                prop_assert_eq!(a.intersect(&b).unwrap().radical(), r.intersect(&b.radical()).unwrap());
            }

            #[test]
            fn polarization_depolarizes(a in arb_ideal(3)) {
                let p = a.polarize().unwrap();
                prop_assert!(p.ideal.is_squarefree());
                let back: Vec<Monomial> = p.ideal.gens().iter().map(|g| {
                    let mut e = vec![0u32; 3];
                    for (k, &x) in g.exponents().iter().enumerate() {
                        e[p.parents[k]] += x;
                    }
                    Monomial::new(e)
                }).collect();
                let mut expected = a.gens().to_vec();
                let mut back_sorted = back;
                back_sorted.sort();
                expected.sort();
                prop_assert_eq!(back_sorted, expected);
            }
        }
    }
}
