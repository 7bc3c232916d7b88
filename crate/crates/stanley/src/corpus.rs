//! Seeded random corpora of monomial ideals.
//!
//! The stream is ChaCha8 seeded with `seed_from_u64(seed)` (rand_chacha
//! 0.9). Each ideal is drawn as follows, every range inclusive:
//!
//! 1. `n` uniform in `n_range`, then the generator count `k` uniform in
//!    `generator_count_range`.
//! 2. `k` generators. Squarefree: each variable is kept with probability
//!    1/2, redrawn if empty. General and hypothesis-satisfying: each
//!    exponent uniform in `0..=max_exponent`, redrawn if all zero.
//! 3. The draw is rejected (and steps 1-2 repeated) if the irreducible
//!    decomposition has more than `max_components` components, or, for the
//!    hypothesis-satisfying family, if the ideal is squarefree or fails the
//!    radical-sum hypothesis.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley_core::bound::hypothesis_check;
use stanley_core::{decompose, Monomial, MonomialIdeal};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Squarefree,
    General,
    HypothesisSatisfying,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Squarefree => "squarefree",
            Family::General => "general",
            Family::HypothesisSatisfying => "hypothesis-satisfying",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub n_range: RangeInclusive<usize>,
    pub generator_count_range: RangeInclusive<usize>,
    pub max_exponent: u32,
    pub family: Family,
    pub max_components: Option<usize>,
    /// Rejection-sampling attempts allowed per ideal.
    pub max_attempts: usize,
}

impl CorpusSpec {
    pub fn new(family: Family, seed: u64, count: usize) -> Self {
        CorpusSpec {
            seed,
            count,
            n_range: 3..=5,
            generator_count_range: 1..=4,
            max_exponent: 3,
            family,
            max_components: None,
            max_attempts: 10_000,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.n_range.is_empty() || self.generator_count_range.is_empty() {
            return Err(Error::Usage("corpus ranges must be nonempty".into()));
        }
        if *self.n_range.start() == 0 || *self.n_range.end() > stanley_core::MAX_VARS {
            return Err(Error::Usage("number of variables out of range".into()));
        }
        if *self.generator_count_range.start() == 0 {
            return Err(Error::Usage("ideals need at least one generator".into()));
        }
        if self.max_exponent == 0 {
            return Err(Error::Usage("max exponent must be positive".into()));
        }
        Ok(())
    }
}

/// Deterministic list of `spec.count` ideals.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<MonomialIdeal>, Error> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let mut attempts = 0;
        let ideal = loop {
            if attempts == spec.max_attempts {
                return Err(Error::RejectionExhausted { index, attempts });
            }
            attempts += 1;
            let candidate = draw(&mut rng, spec);
            if accept(&candidate, spec) {
                break candidate;
            }
        };
        out.push(ideal);
    }
    Ok(out)
}

fn draw(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> MonomialIdeal {
    let n = rng.random_range(spec.n_range.clone());
    let k = rng.random_range(spec.generator_count_range.clone());
    let gens = (0..k)
        .map(|_| loop {
            let exps: Vec<u32> = match spec.family {
                Family::Squarefree => (0..n).map(|_| u32::from(rng.random_bool(0.5))).collect(),
                Family::General | Family::HypothesisSatisfying => {
                    (0..n).map(|_| rng.random_range(0..=spec.max_exponent)).collect()
                }
            };
            if exps.iter().any(|&e| e > 0) {
                break Monomial::new(exps);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators drawn in the ring")
}

fn accept(ideal: &MonomialIdeal, spec: &CorpusSpec) -> bool {
    let d = decompose(ideal).expect("generators are proper and nonzero");
    if spec.max_components.is_some_and(|cap| d.len() > cap) {
        return false;
    }
    match spec.family {
        Family::HypothesisSatisfying => !ideal.is_squarefree() && hypothesis_check(&d).satisfied,
        _ => true,
    }
}
