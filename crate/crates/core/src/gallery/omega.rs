use crate::algebra::{Carrier, Semiring, SupOutcome};
use crate::cardinal::CardinalFamily;
use crate::complete::{Complete, SubsumSet};
use crate::error::Result;
use std::cmp::Ordering;

/// `0, 1, 2, ..., ∞-2, ∞-1, ∞`. `InfMinus(k)` always has `k >= 1`; `∞-0`
/// is `Inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OmegaMinusElement {
    Fin(u64),
    InfMinus(u64),
    Inf,
}

use OmegaMinusElement::{Fin, Inf, InfMinus};

impl OmegaMinusElement {
    /// `∞ - k`, normalizing `k = 0` to `∞`.
    pub fn inf_minus(k: u64) -> Self {
        if k == 0 {
            Inf
        } else {
            InfMinus(k)
        }
    }

    fn rank(&self) -> (u8, i128) {
        match *self {
            Fin(n) => (0, n as i128),
            InfMinus(k) => (1, -(k as i128)),
            Inf => (2, 0),
        }
    }
}

impl Ord for OmegaMinusElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for OmegaMinusElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The naturals followed by a reversed copy of them and a top. Addition:
/// `n + (∞-k)` is `∞` when `n >= k` and `∞-(k-n)` otherwise; two infinite
/// elements sum to `∞`. Multiplication: `0` absorbs, `1` is neutral,
/// naturals multiply, every other product is `∞`. `Σ` is the finite fold on
/// families with finitely many nonzero terms and `∞` otherwise.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OmegaMinus;

impl Semiring for OmegaMinus {
    type Elem = OmegaMinusElement;

    fn zero(&self) -> OmegaMinusElement {
        Fin(0)
    }
    fn one(&self) -> OmegaMinusElement {
        Fin(1)
    }
    fn add(&self, a: &OmegaMinusElement, b: &OmegaMinusElement) -> OmegaMinusElement {
        match (a, b) {
            (Fin(x), Fin(y)) => Fin(x.checked_add(*y).expect("overflow")),
            (Fin(n), InfMinus(k)) | (InfMinus(k), Fin(n)) => {
                if n >= k {
                    Inf
                } else {
                    InfMinus(k - n)
                }
            }
            _ => Inf,
        }
    }
    fn mul(&self, a: &OmegaMinusElement, b: &OmegaMinusElement) -> OmegaMinusElement {
        match (a, b) {
            (Fin(0), _) | (_, Fin(0)) => Fin(0),
            (Fin(1), x) | (x, Fin(1)) => x.clone(),
            (Fin(x), Fin(y)) => Fin(x.checked_mul(*y).expect("overflow")),
            _ => Inf,
        }
    }
    fn label(&self, a: &OmegaMinusElement) -> String {
        match a {
            Fin(n) => n.to_string(),
            InfMinus(k) => format!("∞-{k}"),
            Inf => "∞".to_string(),
        }
    }
    fn carrier(&self) -> Carrier<OmegaMinusElement> {
        Carrier::Sample(
            (0..=3)
                .map(Fin)
                .chain((1..=3).map(InfMinus))
                .chain([Inf])
                .collect(),
        )
    }
    fn leq(&self, a: &OmegaMinusElement, b: &OmegaMinusElement) -> Option<bool> {
        Some(a <= b)
    }
}

impl Complete for OmegaMinus {
    fn sigma(&self, f: &CardinalFamily<OmegaMinusElement>) -> OmegaMinusElement {
        if f.size_where(|e| *e != Fin(0)).is_infinite() {
            return Inf;
        }
        f.iter().fold(Fin(0), |acc, (e, k)| match k {
            crate::cardinal::Cardinal::Fin(n) => self.add(&acc, &self.times(n, e)),
            _ => acc,
        })
    }

    /// The order is total. An unbounded subsum set contains arbitrarily
    /// large naturals; if it also has an infinite element, its largest one
    /// is the supremum. Otherwise the upper bounds are the `∞-k` and `∞`,
    /// with no least one.
    fn sup(&self, xs: &SubsumSet<OmegaMinusElement>) -> Result<SupOutcome<OmegaMinusElement>> {
        let top_infinite = xs.elems.iter().filter(|e| !matches!(e, Fin(_))).max();
        Ok(match (xs.unbounded, top_infinite) {
            (false, _) => SupOutcome::Sup(xs.elems.iter().max().cloned().unwrap_or(Fin(0))),
            (true, Some(t)) => SupOutcome::Sup(t.clone()),
            (true, None) => SupOutcome::NoLeast((1..=4).rev().map(InfMinus).chain([Inf]).collect()),
        })
    }
}
