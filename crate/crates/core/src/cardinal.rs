//! Cardinal multiplicities, index families up to bijection, and ultimately
//! periodic sequences.

use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Size of an index set. All uncountable cardinals are one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Fin(u64),
    Aleph0,
    Uncountable,
}

/// Cardinal operation selector for [`card_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardOp {
    Add,
    Mul,
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Fin(0);
    pub const ONE: Cardinal = Cardinal::Fin(1);

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    pub fn is_infinite(self) -> bool {
        !matches!(self, Cardinal::Fin(_))
    }

    /// Panics if a finite sum overflows `u64`.
    pub fn plus(self, other: Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Fin(a), Cardinal::Fin(b)) => {
                Cardinal::Fin(a.checked_add(b).expect("finite cardinal overflow"))
            }
            (a, b) => a.max(b),
        }
    }

    /// Panics if a finite product overflows `u64`.
    pub fn times(self, other: Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Fin(0), _) | (_, Cardinal::Fin(0)) => Cardinal::ZERO,
            (Cardinal::Fin(a), Cardinal::Fin(b)) => {
                Cardinal::Fin(a.checked_mul(b).expect("finite cardinal overflow"))
            }
            (a, b) => a.max(b),
        }
    }

    /// `Fin(0..=max_fin)`, then the two infinite classes.
    pub fn classes(max_fin: u64) -> Vec<Cardinal> {
        (0..=max_fin)
            .map(Cardinal::Fin)
            .chain([Cardinal::Aleph0, Cardinal::Uncountable])
            .collect()
    }
}

pub fn card_arith(op: CardOp, x: Cardinal, y: Cardinal) -> Cardinal {
    match op {
        CardOp::Add => x.plus(y),
        CardOp::Mul => x.times(y),
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Fin(n) => write!(f, "fin:{n}"),
            Cardinal::Aleph0 => f.write_str("aleph0"),
            Cardinal::Uncountable => f.write_str("uncountable"),
        }
    }
}

impl FromStr for Cardinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aleph0" => Ok(Cardinal::Aleph0),
            "uncountable" => Ok(Cardinal::Uncountable),
            _ => s
                .strip_prefix("fin:")
                .and_then(|n| n.parse().ok())
                .map(Cardinal::Fin)
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("bad cardinal `{s}` (want fin:<n>, aleph0 or uncountable)"),
                }),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cardinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A family `(a_i)_{i in I}` recorded up to bijection of `I`: each value
/// maps to the cardinality of the set of indices holding it. Zero
/// multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CardinalFamily<E: Ord> {
    mult: BTreeMap<E, Cardinal>,
}

impl<E: Ord> Default for CardinalFamily<E> {
    fn default() -> Self {
        CardinalFamily {
            mult: BTreeMap::new(),
        }
    }
}

impl<E: Ord + Clone> CardinalFamily<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(e: E, k: Cardinal) -> Self {
        let mut f = Self::new();
        f.insert(e, k);
        f
    }

    /// The family indexed by the positions of a finite listing.
    pub fn from_sequence<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a E>,
        E: 'a,
    {
        let mut f = Self::new();
        for e in items {
            f.insert(e.clone(), Cardinal::ONE);
        }
        f
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (E, Cardinal)>) -> Self {
        let mut f = Self::new();
        for (e, k) in pairs {
            f.insert(e, k);
        }
        f
    }

    /// Adds `k` more indices holding `e`.
    pub fn insert(&mut self, e: E, k: Cardinal) {
        if k.is_zero() {
            return;
        }
        let slot = self.mult.entry(e).or_insert(Cardinal::ZERO);
        *slot = slot.plus(k);
    }

    pub fn mult(&self, e: &E) -> Cardinal {
        self.mult.get(e).copied().unwrap_or(Cardinal::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, Cardinal)> {
        self.mult.iter().map(|(e, k)| (e, *k))
    }

    pub fn keys(&self) -> impl Iterator<Item = &E> {
        self.mult.keys()
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Total size of the index set.
    pub fn size(&self) -> Cardinal {
        self.mult.values().fold(Cardinal::ZERO, |a, &k| a.plus(k))
    }

    /// Total multiplicity of the keys satisfying `pred`.
    pub fn size_where(&self, pred: impl Fn(&E) -> bool) -> Cardinal {
        self.iter()
            .filter(|(e, _)| pred(e))
            .fold(Cardinal::ZERO, |a, (_, k)| a.plus(k))
    }

    pub fn is_all_finite(&self) -> bool {
        self.mult.values().all(|k| !k.is_infinite())
    }

    /// Disjoint union of index sets.
    pub fn union(&self, other: &Self) -> Self {
        let mut f = self.clone();
        for (e, k) in other.iter() {
            f.insert(e.clone(), k);
        }
        f
    }

    /// `k` disjoint copies of this family.
    pub fn repeated(&self, k: Cardinal) -> Self {
        Self::from_pairs(self.iter().map(|(e, m)| (e.clone(), m.times(k))))
    }

    /// Applies `f` to every member; values that collide merge.
    pub fn map<F: Ord + Clone>(&self, f: impl Fn(&E) -> F) -> CardinalFamily<F> {
        CardinalFamily::from_pairs(self.iter().map(|(e, k)| (f(e), k)))
    }

    /// Whether `self(v) <= other(v)` for every value.
    pub fn is_subfamily_of(&self, other: &Self) -> bool {
        self.iter().all(|(e, k)| k <= other.mult(e))
    }
}

/// `prefix` followed by `cycle` repeated forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaSequence<E> {
    pub prefix: Vec<E>,
    pub cycle: Vec<E>,
}

impl<E: Ord + Clone> OmegaSequence<E> {
    pub fn new(prefix: Vec<E>, cycle: Vec<E>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Structure(
                "omega sequence needs a nonempty cycle".into(),
            ));
        }
        Ok(OmegaSequence { prefix, cycle })
    }

    /// Term `a_{i+1}` (zero-based `i`).
    pub fn term(&self, i: usize) -> &E {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The induced family: values on the cycle occur countably often.
    pub fn family(&self) -> CardinalFamily<E> {
        let mut f = CardinalFamily::from_sequence(&self.prefix);
        for e in &self.cycle {
            f.insert(e.clone(), Cardinal::Aleph0);
        }
        f
    }

    pub fn map<F: Ord + Clone>(&self, f: impl Fn(&E) -> F) -> OmegaSequence<F> {
        OmegaSequence {
            prefix: self.prefix.iter().map(&f).collect(),
            cycle: self.cycle.iter().map(&f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Cardinal::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(card_arith(CardOp::Add, Fin(2), Fin(3)), Fin(5));
        assert_eq!(card_arith(CardOp::Add, Fin(7), Aleph0), Aleph0);
        assert_eq!(card_arith(CardOp::Mul, Aleph0, Uncountable), Uncountable);
        assert_eq!(card_arith(CardOp::Mul, Fin(0), Uncountable), Fin(0));
        assert_eq!(card_arith(CardOp::Mul, Fin(4), Aleph0), Aleph0);
        assert_eq!(card_arith(CardOp::Mul, Fin(4), Fin(6)), Fin(24));
        assert!(Fin(u64::MAX) < Aleph0 && Aleph0 < Uncountable);
    }

    #[test]
    fn cardinal_text_form() {
        for k in [Fin(0), Fin(3), Aleph0, Uncountable] {
            assert_eq!(k.to_string().parse::<Cardinal>().unwrap(), k);
        }
        assert!("fin:-1".parse::<Cardinal>().is_err());
        assert!("omega".parse::<Cardinal>().is_err());
    }

    #[test]
    fn families_are_canonical() {
        let mut f = CardinalFamily::new();
        f.insert('a', Fin(0));
        assert!(f.is_empty());
        f.insert('a', Fin(2));
        f.insert('a', Aleph0);
        assert_eq!(f.mult(&'a'), Aleph0);
        assert_eq!(f.repeated(Fin(0)), CardinalFamily::new());
    }

    #[test]
    fn omega_sequence_family() {
        let s = OmegaSequence::new(vec![1, 2, 2], vec![3, 1]).unwrap();
        let f = s.family();
        assert_eq!(f.mult(&2), Fin(2));
        assert_eq!(f.mult(&1), Aleph0);
        assert_eq!(f.mult(&3), Aleph0);
        assert_eq!(*s.term(4), 1);
        assert_eq!(*s.term(5), 3);
        assert!(OmegaSequence::<u8>::new(vec![], vec![]).is_err());
    }

    fn cardinal() -> impl Strategy<Value = Cardinal> {
        prop_oneof![(0u64..1000).prop_map(Fin), Just(Aleph0), Just(Uncountable)]
    }

    proptest! {
        #[test]
        fn listing_order_does_not_matter(xs in proptest::collection::vec(0u8..6, 0..20), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut ys = xs.clone();
            ys.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(CardinalFamily::from_sequence(&xs), CardinalFamily::from_sequence(&ys));
        }

        #[test]
        fn cardinal_semiring_laws(a in cardinal(), b in cardinal(), c in cardinal()) {
            prop_assert_eq!(a.plus(b), b.plus(a));
            prop_assert_eq!(a.times(b), b.times(a));
            prop_assert_eq!(a.plus(b).plus(c), a.plus(b.plus(c)));
            prop_assert_eq!(a.times(b).times(c), a.times(b.times(c)));
            prop_assert_eq!(a.times(b.plus(c)), a.times(b).plus(a.times(c)));
        }
    }
}
