//! Monomials as dense exponent vectors over a fixed number of variables.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, VarSet, MAX_VARS};

/// Names for the variables of `K[x1, ..., xn]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCtx {
    names: Vec<String>,
}

impl RingCtx {
    /// The ring with `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Result<Self> {
        check_nvars(n)?;
        Ok(RingCtx { names: (1..=n).map(|i| format!("x{i}")).collect() })
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        check_nvars(names.len())?;
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Domain("duplicate variable name"));
            }
        }
        Ok(RingCtx { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

pub(crate) fn check_nvars(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::BadVariableCount(n))
    } else {
        Ok(())
    }
}

/// A monomial `x^a`, stored as its exponent vector `a`.
///
/// The derived ordering is lexicographic on exponent vectors, which is the
/// canonical generator order used throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: alloc::vec![0; n] }
    }

    /// `x_i^e` in `n` variables (0-based `i`).
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = alloc::vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some((i, e))` if this is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    fn same_ring(&self, other: &Monomial) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.nvars(), right: other.nvars() })
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, u32::saturating_sub))
    }

    pub(crate) fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// The factor of `self` in the variables of `vars`; other exponents are zeroed.
    pub fn part_in(&self, vars: VarSet) -> Monomial {
        Monomial { exps: self.exps.iter().enumerate().map(|(i, &e)| if vars.contains(i) { e } else { 0 }).collect() }
    }

    /// Re-index onto the dense ring whose variables are the members of `vars`.
    pub(crate) fn project(&self, vars: VarSet) -> Monomial {
        Monomial { exps: vars.iter().map(|i| self.exps[i]).collect() }
    }

    /// Write `self` with the default variable names, e.g. `x1^2*x3`; `1` for the unit.
    pub fn display(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials in `n` variables of total degree at most `max_degree`,
/// in lexicographic order of exponent vectors.
pub fn monomials_up_to_degree(n: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut alloc::vec![0; n], &mut out);
    out
}

/// All monomials `x^a` with `a <= bound` componentwise, lexicographically ordered.
pub fn monomials_in_box(bound: &[u32]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; bound.len()];
    loop {
        out.push(Monomial::new(cur.clone()));
        // odometer, last coordinate fastest
        let mut i = bound.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divides_examples() {
        assert!(m(&[0, 0]).divides(&m(&[3, 5])).unwrap());
        assert!(!m(&[2, 0]).divides(&m(&[1, 7])).unwrap());
        assert!(m(&[1, 1]).divides(&m(&[1, 1])).unwrap());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        assert_eq!(m(&[1]).divides(&m(&[1, 0])), Err(Error::RingMismatch { left: 1, right: 2 }));
        assert!(m(&[1]).lcm(&m(&[1, 0])).is_err());
    }

    #[test]
    fn lcm_gcd_colon() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).unwrap(), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b).unwrap(), m(&[1, 0, 0]));
        assert_eq!(a.colon(&b).unwrap(), m(&[1, 0, 1]));
        assert_eq!(a.mul(&b).unwrap().degree(), 7);
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(m(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 1, 0]).as_pure_power(), None);
        assert_eq!(m(&[0, 0]).as_pure_power(), None);
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 1, 0]).display(), "x1^2*x2");
        assert_eq!(m(&[0, 0]).display(), "1");
    }

    #[test]
    fn enumerations() {
        // C(3 + 6, 6) = 84
        assert_eq!(monomials_up_to_degree(3, 6).len(), 84);
        let b = monomials_in_box(&[2, 1, 1]);
        assert_eq!(b.len(), 12);
        assert_eq!(b[0], m(&[0, 0, 0]));
        assert_eq!(b[1], m(&[0, 0, 1]));
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ring_ctx() {
        assert_eq!(RingCtx::new(3).unwrap().name(2), "x3");
        assert!(RingCtx::new(0).is_err());
        assert!(RingCtx::with_names(vec!["a".into(), "a".into()]).is_err());
    }
}
