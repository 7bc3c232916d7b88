//! Exact combinatorics of monomial ideals in `K[x1, ..., xn]`.
//!
//! The crate covers:
//!
//! - arithmetic on monomials and monomial ideals ([`Monomial`], [`MonomialIdeal`]),
//! - the irredundant irreducible decomposition ([`decompose`]),
//! - Lyubeznik's size invariant ([`size`]),
//! - exact Stanley depth of `J/I` via interval partitions of the
//!   characteristic poset ([`sdepth`]),
//! - the recursive lower bound on `sdepth(S/I)` built from an irreducible
//!   component, its summand classifier and the radical-sum hypothesis
//!   check ([`bound`]).
//!
//! Everything is `no_std` with `alloc`. The field is never materialized:
//! all computations are characteristic-free monomial combinatorics.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bound;
pub mod decompose;
mod error;
pub mod ideal;
pub mod monomial;
pub mod sdepth;
pub mod size;
mod varset;

pub use decompose::{decompose, Decomposition, IrreducibleComponent};
pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, Polarization};
pub use monomial::{Monomial, RingCtx};
pub use sdepth::{Budget, SdepthConfig, StanleyDecomposition};
pub use size::{size, SizeReport};
pub use varset::VarSet;

/// Largest number of variables a ring may have; [`VarSet`] is a `u64` mask.
pub const MAX_VARS: usize = 64;

/// Default cap on any exponent appearing in a minimal generator.
pub const DEFAULT_EXPONENT_CAP: u32 = 64;
