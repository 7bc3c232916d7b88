//! Random instances of the mixed-module inequality
//!
//! `sdepth_S3(I1 S3 / (I1 S3 ∩ J1 S3)) >= sdepth_S1((I:w) ∩ S1) + sdepth_S2(S2 / ((J:w) ∩ S2))`
//!
//! with `I1 = I ∩ w S1` and `J1 = J ∩ w S2`. Variables of `S` are ordered
//! `x` (the `S1` block), then `y` (the `S2` block), then `z`.
//!
//! Every monomial of `I1 S3` is `w` times a monomial of `A = (I:w) ∩ S1`, and
//! likewise `J1 S3 = w B S3` with `B = (J:w) ∩ S2`. As `A` and `B` live in
//! disjoint variables, the left module is `wA / wAB` over `S3`, shifted by
//! the `z`-part of `w`, which does not change its Stanley depth. The left
//! side is computed from that presentation with the `S3`-part of `w` kept,
//! so the poset sees the shift.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley_core::sdepth::{sdepth_ideal, sdepth_module, sdepth_quotient};
use stanley_core::{Budget, Monomial, MonomialIdeal, Result, SdepthConfig, VarSet};

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedInstance {
    pub n_x: usize,
    pub n_y: usize,
    pub n_z: usize,
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub w: Monomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedOutcome {
    pub lhs: usize,
    /// `sdepth_S1((I:w) ∩ S1)`.
    pub ideal_part: usize,
    /// `sdepth_S2(S2 / ((J:w) ∩ S2))`.
    pub quotient_part: usize,
}

impl MixedOutcome {
    pub fn holds(&self) -> bool {
        self.lhs >= self.ideal_part + self.quotient_part
    }
}

impl MixedInstance {
    pub fn nvars(&self) -> usize {
        self.n_x + self.n_y + self.n_z
    }

    fn block(&self, start: usize, len: usize) -> VarSet {
        (start..start + len).collect()
    }

    pub fn s1(&self) -> VarSet {
        self.block(0, self.n_x)
    }

    pub fn s2(&self) -> VarSet {
        self.block(self.n_x, self.n_y)
    }

    pub fn s3(&self) -> VarSet {
        self.s1().union(self.s2())
    }

    /// `(I:w) ∩ S1` and `(J:w) ∩ S2`, still in the ambient ring.
    fn parts(&self) -> Result<(MonomialIdeal, MonomialIdeal)> {
        let a = self.i.colon(&self.w)?.restrict_to_subring(self.s1());
        let b = self.j.colon(&self.w)?.restrict_to_subring(self.s2());
        Ok((a, b))
    }

    /// Whether both sides are defined: `w ∉ J` and `(I:w) ∩ S1 ≠ 0`.
    pub fn is_admissible(&self) -> bool {
        match (self.j.contains(&self.w), self.parts()) {
            (Ok(false), Ok((a, _))) => !a.is_zero(),
            _ => false,
        }
    }

    /// Exact values of both sides.
    pub fn evaluate(&self, cfg: &SdepthConfig, budget: &mut dyn Budget) -> Result<MixedOutcome> {
        if !self.is_admissible() {
            return Err(stanley_core::Error::Domain("instance needs w outside J and (I:w) ∩ S1 nonzero"));
        }
        let (a, b) = self.parts()?;
        let s3 = self.s3();
        let w3 = MonomialIdeal::new(self.nvars(), vec![self.w.part_in(s3)])?.project(s3)?.gens()[0].clone();
        let a3 = a.project(s3)?.mul_monomial(&w3)?;
        let ab3 = a.intersect(&b)?.project(s3)?.mul_monomial(&w3)?;
        let lhs = sdepth_module(&ab3, &a3, cfg, budget)?.sdepth;
        let ideal_part = sdepth_ideal(&a.project(self.s1())?, cfg, budget)?.sdepth;
        let quotient_part = sdepth_quotient(&b.project(self.s2())?, cfg, budget)?.sdepth;
        Ok(MixedOutcome { lhs, ideal_part, quotient_part })
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exponent: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.random_range(0..=max_exponent)).collect())
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_exponent: u32) -> MonomialIdeal {
    let k = rng.random_range(1..=3);
    let gens = (0..k)
        .map(|_| loop {
            let g = random_monomial(rng, n, max_exponent);
            if !g.is_one() {
                break g;
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators drawn in the ring")
}

/// `count` admissible instances with `|x|, |y|` in `1..=2`, `|z|` in
/// `0..=1`, up to three generators per ideal and exponents at most 2.
pub fn generate_mixed_instances(seed: u64, count: usize) -> std::result::Result<Vec<MixedInstance>, Error> {
    const MAX_ATTEMPTS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut attempts = 0;
        let inst = loop {
            if attempts == MAX_ATTEMPTS {
                return Err(Error::RejectionExhausted { index, attempts });
            }
            attempts += 1;
            let n_x = rng.random_range(1..=2);
            let n_y = rng.random_range(1..=2);
            let n_z = rng.random_range(0..=1);
            let n = n_x + n_y + n_z;
            let i = random_ideal(&mut rng, n, 2);
            let j = random_ideal(&mut rng, n, 2);
            let w = random_monomial(&mut rng, n, 2);
            let inst = MixedInstance { n_x, n_y, n_z, i, j, w };
            if inst.is_admissible() {
                break inst;
            }
        };
        out.push(inst);
    }
    Ok(out)
}
