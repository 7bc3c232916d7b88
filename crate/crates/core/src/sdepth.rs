//! Exact Stanley depth of monomial modules `J/I` with `I ⊊ J`.
//!
//! Choose a cap vector `g` at least the exponent vector of every generator
//! of `I` and `J`. The characteristic poset is the set of exponent vectors
//! `a <= g` with `x^a ∈ J \ I`. A partition of it into intervals `[a, b]`
//! yields a Stanley decomposition of `J/I` whose spaces have dimension
//! `ρ(b) = #{i : b_i = g_i}`, and the Stanley depth of `J/I` is the largest
//! achievable minimum of `ρ` over all such partitions.
//!
//! The search tests each target `d` from an upper bound downwards. A
//! feasibility test always extends the partition from the lexicographically
//! least uncovered point `p`: every point of its interval is uncovered and
//! componentwise `>= p`, so `p` must be the interval's lower end. Candidate
//! upper ends are tried in decreasing dimension.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, MonomialIdeal, Result};

/// Default cap on the number of poset points.
pub const DEFAULT_MAX_POINTS: usize = 20_000;

/// Hard cap on the size of the enclosing box `∏ (g_i + 1)`.
const MAX_BOX: usize = 1 << 22;

/// Failed search states remembered per target dimension.
const MEMO_LIMIT: usize = 1 << 18;

/// Cooperative cancellation for long searches. Called once per search node.
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Runs out after a fixed number of search nodes.
#[derive(Clone, Copy, Debug)]
pub struct NodeBudget(pub u64);

impl Budget for NodeBudget {
    fn exhausted(&mut self) -> bool {
        if self.0 == 0 {
            return true;
        }
        self.0 -= 1;
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SdepthConfig {
    pub max_points: usize,
}

impl Default for SdepthConfig {
    fn default() -> Self {
        SdepthConfig { max_points: DEFAULT_MAX_POINTS }
    }
}

/// A poset interval `[lower, upper]` and its Stanley space dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
    pub dimension: usize,
}

/// A witness partition of the characteristic poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub cap: Vec<u32>,
    pub intervals: Vec<Interval>,
    /// Minimum interval dimension, i.e. the Stanley depth this witness attains.
    pub sdepth: usize,
}

impl StanleyDecomposition {
    /// Check that the intervals are disjoint, cover exactly `points`, and
    /// that `sdepth` is their minimum dimension.
    pub fn is_valid_for(&self, points: &[Vec<u32>]) -> bool {
        let want: BTreeSet<&[u32]> = points.iter().map(Vec::as_slice).collect();
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut min_dim = usize::MAX;
        for iv in &self.intervals {
            let rho = iv.upper.iter().zip(&self.cap).filter(|(b, g)| b == g).count();
            if rho != iv.dimension || iv.lower.iter().zip(&iv.upper).any(|(a, b)| a > b) {
                return false;
            }
            min_dim = min_dim.min(rho);
            let mut ok = true;
            for_each_in_box(&iv.lower, &iv.upper, |c| {
                if !want.contains(c) || !seen.insert(c.to_vec()) {
                    ok = false;
                }
                ok
            });
            if !ok {
                return false;
            }
        }
        seen.len() == want.len() && (self.intervals.is_empty() || min_dim == self.sdepth)
    }
}

/// Componentwise max of generator exponents of `i` and `j`, at least 1 in
/// every coordinate so that variables absent from all generators are free.
pub fn default_cap(i: &MonomialIdeal, j: &MonomialIdeal) -> Vec<u32> {
    i.lcm_exponents().into_iter().zip(j.lcm_exponents()).map(|(a, b)| a.max(b).max(1)).collect()
}

fn check_module(i: &MonomialIdeal, j: &MonomialIdeal, cap: &[u32]) -> Result<()> {
    if i.nvars() != j.nvars() {
        return Err(Error::RingMismatch { left: i.nvars(), right: j.nvars() });
    }
    if cap.len() != i.nvars() {
        return Err(Error::RingMismatch { left: i.nvars(), right: cap.len() });
    }
    if !i.is_subset(j)? {
        return Err(Error::Domain("submodule ideal is not contained in the ambient ideal"));
    }
    let need = default_cap(i, j);
    if need.iter().zip(cap).any(|(n, g)| g < n) {
        return Err(Error::Domain("cap vector is below a generator exponent"));
    }
    Ok(())
}

/// Points `a <= cap` with `x^a ∈ J \ I`, in lexicographic order.
pub fn characteristic_points(i: &MonomialIdeal, j: &MonomialIdeal, cap: &[u32]) -> Result<Vec<Vec<u32>>> {
    check_module(i, j, cap)?;
    let mut out = Vec::new();
    let zeros = alloc::vec![0u32; cap.len()];
    for_each_in_box(&zeros, cap, |c| {
        if in_module(i, j, c) {
            out.push(c.to_vec());
        }
        true
    });
    Ok(out)
}

fn in_module(i: &MonomialIdeal, j: &MonomialIdeal, c: &[u32]) -> bool {
    let divides = |g: &crate::Monomial| g.exponents().iter().zip(c).all(|(a, b)| a <= b);
    j.gens().iter().any(divides) && !i.gens().iter().any(divides)
}

/// Visit `c` with `lo <= c <= hi` in lexicographic order until `f` returns false.
/// Returns false if stopped early.
fn for_each_in_box(lo: &[u32], hi: &[u32], mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let n = lo.len();
    let mut c = lo.to_vec();
    loop {
        if !f(&c) {
            return false;
        }
        let mut k = n;
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            if c[k] < hi[k] {
                c[k] += 1;
                break;
            }
            c[k] = lo[k];
        }
    }
}

/// Exact `sdepth(J/I)` with the default cap vector.
pub fn sdepth_module(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    cfg: &SdepthConfig,
    budget: &mut dyn Budget,
) -> Result<StanleyDecomposition> {
    let cap = default_cap(i, j);
    sdepth_module_with_cap(i, j, &cap, cfg, budget)
}

/// `sdepth(S/I)`.
pub fn sdepth_quotient(i: &MonomialIdeal, cfg: &SdepthConfig, budget: &mut dyn Budget) -> Result<StanleyDecomposition> {
    sdepth_module(i, &MonomialIdeal::unit(i.nvars()), cfg, budget)
}

/// `sdepth(I)` as an `S`-module.
pub fn sdepth_ideal(i: &MonomialIdeal, cfg: &SdepthConfig, budget: &mut dyn Budget) -> Result<StanleyDecomposition> {
    sdepth_module(&MonomialIdeal::zero(i.nvars()), i, cfg, budget)
}

pub fn sdepth_module_with_cap(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    cap: &[u32],
    cfg: &SdepthConfig,
    budget: &mut dyn Budget,
) -> Result<StanleyDecomposition> {
    check_module(i, j, cap)?;
    if i == j {
        return Err(Error::Domain("module J/I is zero (I = J)"));
    }
    let mut box_size: usize = 1;
    for &g in cap {
        box_size = box_size
            .checked_mul(g as usize + 1)
            .filter(|&b| b <= MAX_BOX)
            .ok_or(Error::PosetTooLarge { points: usize::MAX, cap: MAX_BOX })?;
    }
    let poset = Poset::build(i, j, cap, box_size);
    if poset.points.len() > cfg.max_points {
        return Err(Error::PosetTooLarge { points: poset.points.len(), cap: cfg.max_points });
    }
    let mut search = Search::new(&poset, budget);
    for d in (0..=poset.upper_bound()).rev() {
        if let Some(intervals) = search.partition(d)? {
            return Ok(StanleyDecomposition { cap: cap.to_vec(), intervals, sdepth: d });
        }
    }
    unreachable!("singleton intervals always give a partition with d = 0")
}

struct Poset {
    cap: Vec<u32>,
    stride: Vec<usize>,
    member: Vec<bool>,
    /// Box indices of the points, increasing (= lexicographic order).
    points: Vec<usize>,
}

impl Poset {
    fn build(i: &MonomialIdeal, j: &MonomialIdeal, cap: &[u32], box_size: usize) -> Self {
        let n = cap.len();
        let mut stride = alloc::vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            stride[k] = stride[k + 1] * (cap[k + 1] as usize + 1);
        }
        let mut member = alloc::vec![false; box_size];
        let mut points = Vec::new();
        let zeros = alloc::vec![0u32; n];
        let mut idx = 0;
        for_each_in_box(&zeros, cap, |c| {
            if in_module(i, j, c) {
                member[idx] = true;
                points.push(idx);
            }
            idx += 1;
            true
        });
        Poset { cap: cap.to_vec(), stride, member, points }
    }

    fn coords(&self, mut idx: usize) -> Vec<u32> {
        self.stride
            .iter()
            .map(|&s| {
                let c = idx / s;
                idx %= s;
                c as u32
            })
            .collect()
    }

    fn rho(&self, c: &[u32]) -> usize {
        c.iter().zip(&self.cap).filter(|(a, g)| a == g).count()
    }

    /// `min ρ(m)` over maximal points `m`: a maximal point is the upper end
    /// of its own interval in every partition.
    fn upper_bound(&self) -> usize {
        let n = self.cap.len();
        let mut best = n;
        for &p in &self.points {
            let c = self.coords(p);
            let maximal = (0..n).all(|k| c[k] == self.cap[k] || !self.member[p + self.stride[k]]);
            if maximal {
                best = best.min(self.rho(&c));
            }
        }
        best
    }
}

struct Search<'a> {
    poset: &'a Poset,
    budget: &'a mut dyn Budget,
    covered: Vec<u64>,
    chosen: Vec<(usize, usize)>,
    failed: BTreeSet<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(poset: &'a Poset, budget: &'a mut dyn Budget) -> Self {
        let words = poset.member.len().div_ceil(64);
        Search { poset, budget, covered: alloc::vec![0; words], chosen: Vec::new(), failed: BTreeSet::new() }
    }

    fn is_covered(&self, idx: usize) -> bool {
        self.covered[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn free(&self, idx: usize) -> bool {
        self.poset.member[idx] && !self.is_covered(idx)
    }

    /// A partition into intervals of dimension `>= d`, if one exists.
    fn partition(&mut self, d: usize) -> Result<Option<Vec<Interval>>> {
        self.covered.iter_mut().for_each(|w| *w = 0);
        self.chosen.clear();
        self.failed.clear();
        if !self.extend(d, 0)? {
            return Ok(None);
        }
        let intervals = self
            .chosen
            .iter()
            .map(|&(lo, hi)| {
                let upper = self.poset.coords(hi);
                Interval { lower: self.poset.coords(lo), dimension: self.poset.rho(&upper), upper }
            })
            .collect();
        Ok(Some(intervals))
    }

    fn extend(&mut self, d: usize, from: usize) -> Result<bool> {
        let Some(pos) = (from..self.poset.points.len()).find(|&k| !self.is_covered(self.poset.points[k])) else {
            return Ok(true);
        };
        if self.budget.exhausted() {
            return Err(Error::BudgetExhausted);
        }
        if self.failed.contains(&self.covered) {
            return Ok(false);
        }
        let p = self.poset.points[pos];
        let lower = self.poset.coords(p);
        let mut uppers = Vec::new();
        let mut upper = lower.clone();
        self.collect_uppers(&lower, &mut upper, 0, 0, d, &mut uppers);
        // decreasing dimension, then larger intervals first
        uppers.sort_unstable_by(|a, b| b.cmp(a));
        for (_, hi) in uppers {
            let hi_coords = self.poset.coords(hi);
            self.toggle(&lower, &hi_coords);
            self.chosen.push((p, hi));
            if self.extend(d, pos + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.toggle(&lower, &hi_coords);
        }
        if self.failed.len() < MEMO_LIMIT {
            self.failed.insert(self.covered.clone());
        }
        Ok(false)
    }

    /// Enumerate upper ends `b >= lower` with `[lower, b]` free and
    /// `ρ(b) >= d`, setting coordinates left to right. Pushes `(ρ(b), index(b))`.
    fn collect_uppers(
        &self,
        lower: &[u32],
        upper: &mut Vec<u32>,
        k: usize,
        dims: usize,
        d: usize,
        out: &mut Vec<(usize, usize)>,
    ) {
        let n = lower.len();
        if dims + (n - k) < d {
            return;
        }
        if k == n {
            let idx = upper.iter().zip(&self.poset.stride).map(|(&c, &s)| c as usize * s).sum();
            out.push((dims, idx));
            return;
        }
        let cap = self.poset.cap[k];
        loop {
            let t = upper[k];
            self.collect_uppers(lower, upper, k + 1, dims + usize::from(t == cap), d, out);
            if t == cap {
                break;
            }
            // the slab c_k = t + 1, c_j in [lower_j, upper_j] for j < k, c_j = lower_j for j > k
            let mut slab_lo = lower.to_vec();
            let mut slab_hi = lower.to_vec();
            slab_hi[..k].copy_from_slice(&upper[..k]);
            slab_lo[k] = t + 1;
            slab_hi[k] = t + 1;
            let stride = &self.poset.stride;
            let ok = for_each_in_box(&slab_lo, &slab_hi, |c| {
                let idx: usize = c.iter().zip(stride).map(|(&x, &s)| x as usize * s).sum();
                self.free(idx)
            });
            if !ok {
                break;
            }
            upper[k] = t + 1;
        }
        upper[k] = lower[k];
    }

    fn toggle(&mut self, lo: &[u32], hi: &[u32]) {
        let stride = &self.poset.stride;
        let covered = &mut self.covered;
        for_each_in_box(lo, hi, |c| {
            let idx: usize = c.iter().zip(stride).map(|(&x, &s)| x as usize * s).sum();
            covered[idx / 64] ^= 1u64 << (idx % 64);
            true
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Monomial;
    use alloc::vec;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn run(i: &MonomialIdeal, j: &MonomialIdeal) -> StanleyDecomposition {
        let sd = sdepth_module(i, j, &SdepthConfig::default(), &mut Unlimited).unwrap();
        let pts = characteristic_points(i, j, &sd.cap).unwrap();
        assert!(sd.is_valid_for(&pts), "invalid witness {sd:?}");
        sd
    }

    #[test]
    fn characteristic_point_examples() {
        let unit1 = MonomialIdeal::unit(1);
        assert_eq!(characteristic_points(&ideal(1, &[&[1]]), &unit1, &[1]).unwrap(), vec![vec![0]]);
        let p = characteristic_points(&MonomialIdeal::zero(2), &ideal(2, &[&[1, 1]]), &[1, 1]).unwrap();
        assert_eq!(p, vec![vec![1, 1]]);
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let pts = characteristic_points(&ex, &MonomialIdeal::unit(3), &[2, 1, 1]).unwrap();
        // filter the 18-point box by hand: a1 < 2 and not (a2 = a3 = 1)
        let mut expected = vec![];
        for a in 0..=2u32 {
            for b in 0..=1u32 {
                for c in 0..=1u32 {
                    if a < 2 && !(b == 1 && c == 1) {
                        expected.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(expected.len(), 6);
        assert_eq!(pts, expected);
    }

    #[test]
    fn module_preconditions() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert!(matches!(characteristic_points(&a, &b, &[1, 1]), Err(Error::Domain(_))));
        assert!(matches!(
            characteristic_points(&ideal(1, &[&[2]]), &MonomialIdeal::unit(1), &[1]),
            Err(Error::Domain(_))
        ));
        let cfg = SdepthConfig::default();
        assert!(matches!(sdepth_module(&a, &a, &cfg, &mut Unlimited), Err(Error::Domain(_))));
        let small = SdepthConfig { max_points: 2 };
        assert!(matches!(
            sdepth_quotient(&ideal(2, &[&[3, 0]]), &small, &mut Unlimited),
            Err(Error::PosetTooLarge { points: 6, cap: 2 })
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let r = sdepth_ideal(&i, &SdepthConfig::default(), &mut NodeBudget(0));
        assert_eq!(r, Err(Error::BudgetExhausted));
    }

    #[test]
    fn pure_power_quotients() {
        let sd = run(&ideal(3, &[&[2, 0, 0], &[0, 3, 0]]), &MonomialIdeal::unit(3));
        assert_eq!(sd.sdepth, 1);
        let sd = run(&ideal(2, &[&[1, 1]]), &MonomialIdeal::unit(2));
        assert_eq!(sd.sdepth, 1);
    }

    #[test]
    fn maximal_ideal_quotient_is_zero() {
        for n in 1..=4 {
            let gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, 1)).collect();
            let m = MonomialIdeal::new(n, gens).unwrap();
            assert_eq!(run(&m, &MonomialIdeal::unit(n)).sdepth, 0);
        }
    }

    #[test]
    fn maximal_ideal_sdepth_is_half_n_rounded_up() {
        for n in 1..=5usize {
            let gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, 1)).collect();
            let m = MonomialIdeal::new(n, gens).unwrap();
            assert_eq!(run(&MonomialIdeal::zero(n), &m).sdepth, n.div_ceil(2), "n = {n}");
        }
    }

    #[test]
    fn two_generator_example_quotient() {
        let ex = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert!(run(&ex, &MonomialIdeal::unit(3)).sdepth >= 1);
    }

    #[test]
    fn free_module() {
        // S/0 and the unit ideal are free: sdepth n
        assert_eq!(run(&MonomialIdeal::zero(3), &MonomialIdeal::unit(3)).sdepth, 3);
    }
}
