use crate::algebra::{Carrier, Semiring, SupOutcome};
use crate::cardinal::{Cardinal, CardinalFamily};
use crate::complete::{Complete, SubsumSet};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// An element of `ℕ ∪ {∞}` with unbounded finite part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NInf {
    Fin(BigUint),
    Inf,
}

impl NInf {
    pub fn zero() -> Self {
        NInf::Fin(BigUint::zero())
    }

    pub fn one() -> Self {
        NInf::Fin(BigUint::one())
    }

    pub fn fin(n: u64) -> Self {
        NInf::Fin(BigUint::from(n))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NInf::Fin(n) if n.is_zero())
    }

    pub fn add(&self, other: &NInf) -> NInf {
        match (self, other) {
            (NInf::Fin(a), NInf::Fin(b)) => NInf::Fin(a + b),
            _ => NInf::Inf,
        }
    }

    /// `0·∞ = 0`.
    pub fn mul(&self, other: &NInf) -> NInf {
        if self.is_zero() || other.is_zero() {
            return NInf::zero();
        }
        match (self, other) {
            (NInf::Fin(a), NInf::Fin(b)) => NInf::Fin(a * b),
            _ => NInf::Inf,
        }
    }

    /// Some `t` with `self + t = other`, if one exists.
    pub fn solve_add(&self, other: &NInf) -> Option<NInf> {
        match (self, other) {
            (NInf::Fin(a), NInf::Fin(b)) if a <= b => Some(NInf::Fin(b - a)),
            (NInf::Fin(_), NInf::Fin(_)) => None,
            (_, NInf::Inf) => Some(NInf::Inf),
            (NInf::Inf, NInf::Fin(_)) => None,
        }
    }

    /// `κ` copies of `self`.
    pub fn scale(&self, k: Cardinal) -> NInf {
        match k {
            Cardinal::Fin(n) => self.mul(&NInf::fin(n)),
            _ if self.is_zero() => NInf::zero(),
            _ => NInf::Inf,
        }
    }
}

impl fmt::Display for NInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NInf::Fin(n) => write!(f, "{n}"),
            NInf::Inf => f.write_str("∞"),
        }
    }
}

impl FromStr for NInf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "∞" => Ok(NInf::Inf),
            _ => s
                .parse::<BigUint>()
                .map(NInf::Fin)
                .map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad coefficient `{s}`"),
                }),
        }
    }
}

/// `ℕ^∞`: numeric order with `∞` on top; `Σ` is `∞` as soon as an `∞` occurs
/// or a nonzero value occurs infinitely often, else the weighted sum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NatInfinity;

impl Semiring for NatInfinity {
    type Elem = NInf;

    fn zero(&self) -> NInf {
        NInf::zero()
    }
    fn one(&self) -> NInf {
        NInf::one()
    }
    fn add(&self, a: &NInf, b: &NInf) -> NInf {
        a.add(b)
    }
    fn mul(&self, a: &NInf, b: &NInf) -> NInf {
        a.mul(b)
    }
    fn label(&self, a: &NInf) -> String {
        a.to_string()
    }
    fn carrier(&self) -> Carrier<NInf> {
        Carrier::Sample((0..=4).map(NInf::fin).chain([NInf::Inf]).collect())
    }
    fn leq(&self, a: &NInf, b: &NInf) -> Option<bool> {
        Some(a <= b)
    }
}

impl Complete for NatInfinity {
    fn sigma(&self, f: &CardinalFamily<NInf>) -> NInf {
        f.iter()
            .fold(NInf::zero(), |acc, (a, k)| acc.add(&a.scale(k)))
    }

    /// A chain: the maximum of a finite set, `∞` for an unbounded one (only
    /// `∞` bounds arbitrarily large naturals).
    fn sup(&self, xs: &SubsumSet<NInf>) -> Result<SupOutcome<NInf>> {
        Ok(if xs.unbounded {
            SupOutcome::Sup(NInf::Inf)
        } else {
            SupOutcome::Sup(xs.elems.iter().max().cloned().unwrap_or_else(NInf::zero))
        })
    }
}

/// The ordered semiring of natural numbers (no infinite sums).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Nat;

impl Semiring for Nat {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn label(&self, a: &BigUint) -> String {
        a.to_string()
    }
    fn carrier(&self) -> Carrier<BigUint> {
        Carrier::Sample((0u32..=5).map(BigUint::from).collect())
    }
    fn leq(&self, a: &BigUint, b: &BigUint) -> Option<bool> {
        Some(a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complete::{finite_subsums_sup, is_finitary};

    #[test]
    fn sigma_examples() {
        let n = NatInfinity;
        let f = CardinalFamily::singleton(NInf::fin(2), Cardinal::Fin(3));
        assert_eq!(n.sigma(&f), NInf::fin(6));
        let g = CardinalFamily::singleton(NInf::one(), Cardinal::Aleph0);
        assert_eq!(n.sigma(&g), NInf::Inf);
        let z = CardinalFamily::singleton(NInf::zero(), Cardinal::Uncountable);
        assert_eq!(n.sigma(&z), NInf::zero());
    }

    #[test]
    fn large_values_do_not_overflow() {
        let big = NInf::fin(u64::MAX);
        let sq = big.mul(&big).add(&big);
        assert!(matches!(sq, NInf::Fin(ref v) if v.bits() == 128));
    }

    #[test]
    fn unbounded_subsums_have_sup_infinity() {
        let n = NatInfinity;
        let g = CardinalFamily::singleton(NInf::one(), Cardinal::Aleph0);
        let xs = n.finite_subsums(&g);
        assert!(xs.unbounded);
        assert!(xs.elems.contains(&NInf::fin(3)));
        assert!(!xs.elems.contains(&NInf::Inf));
        assert_eq!(
            finite_subsums_sup(&n, &g).unwrap(),
            SupOutcome::Sup(NInf::Inf)
        );
        assert!(is_finitary(&n, &[g]).unwrap().holds);
    }

    #[test]
    fn solve_add_matches_order() {
        let xs: Vec<NInf> = (0..4).map(NInf::fin).chain([NInf::Inf]).collect();
        for a in &xs {
            for b in &xs {
                let t = a.solve_add(b);
                assert_eq!(t.is_some(), a <= b);
                if let Some(t) = t {
                    assert_eq!(a.add(&t), *b);
                }
            }
        }
    }
}
