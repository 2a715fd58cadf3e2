//! The example semirings as executable constructions, each with its order and
//! `Σ` rule.

mod adjoin;
mod natinf;
mod omega;

pub use adjoin::{adjoin_infinity, search_distributivity_violation, DistributivityWitness};
pub use natinf::{NInf, Nat, NatInfinity};
pub use omega::{OmegaMinus, OmegaMinusElement};

use crate::algebra::{small, Carrier, FiniteSemiring, PartialOrder, Semiring, SupOutcome};
use crate::cardinal::{Cardinal, CardinalFamily};
use crate::complete::{closure_subsums, Complete};
use crate::error::{Error, Result};

/// How a finite complete semiring evaluates `Σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaRule {
    /// `Σ f` is the `+`-fold over keys of `κ·a`, where `κ·a` is the repeated
    /// sum for finite `κ` and is read from the tables for infinite `κ`.
    Scaled {
        aleph0: Vec<usize>,
        uncountable: Vec<usize>,
    },
    /// `Σ f` is the greatest finite subsum of `f` under the attached order.
    SupOfFiniteSubsums,
}

/// A finite carrier with tables, an optional order and a `Σ` rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSigma {
    pub name: String,
    pub base: FiniteSemiring,
    pub order: Option<PartialOrder>,
    pub rule: SigmaRule,
}

impl FiniteSigma {
    /// `Σ{a ↦ ℵ₀}` and `Σ{a ↦ uncountable}` for every element.
    pub fn sigma_table(&self) -> Vec<(String, String, String)> {
        self.base
            .indices()
            .map(|a| {
                let s = |k| self.label(&self.sigma(&CardinalFamily::singleton(a, k)));
                (
                    self.label(&a),
                    s(Cardinal::Aleph0),
                    s(Cardinal::Uncountable),
                )
            })
            .collect()
    }
}

impl Semiring for FiniteSigma {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.base.zero_index()
    }
    fn one(&self) -> usize {
        self.base.one_index()
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.base.plus(*a, *b)
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.base.times_table(*a, *b)
    }
    fn label(&self, a: &usize) -> String {
        self.base.label(a)
    }
    fn carrier(&self) -> Carrier<usize> {
        self.base.carrier()
    }
    fn leq(&self, a: &usize, b: &usize) -> Option<bool> {
        self.order.as_ref().map(|o| o.leq(*a, *b))
    }
}

impl Complete for FiniteSigma {
    fn sigma(&self, f: &CardinalFamily<usize>) -> usize {
        match &self.rule {
            SigmaRule::Scaled {
                aleph0,
                uncountable,
            } => f.iter().fold(self.zero(), |acc, (&a, k)| {
                let part = match k {
                    Cardinal::Fin(n) => self.times(n, &a),
                    Cardinal::Aleph0 => aleph0[a],
                    Cardinal::Uncountable => uncountable[a],
                };
                self.base.plus(acc, part)
            }),
            SigmaRule::SupOfFiniteSubsums => {
                let xs = closure_subsums(self, f);
                match self.sup(&xs) {
                    Ok(SupOutcome::Sup(s)) => s,
                    other => panic!(
                        "{}: finite subsums of a family have no greatest element ({other:?}); \
                         the order is not compatible",
                        self.name
                    ),
                }
            }
        }
    }
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `{0,1}` with or/and; every infinite sum of a nonzero is `1`.
pub fn boolean() -> FiniteSigma {
    FiniteSigma {
        name: "boolean".into(),
        base: small::boolean(),
        order: Some(PartialOrder::chain(2)),
        rule: SigmaRule::Scaled {
            aleph0: vec![0, 1],
            uncountable: vec![0, 1],
        },
    }
}

fn subset_label(bits: usize, names: &[String]) -> String {
    let members: Vec<&str> = names
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, n)| n.as_str())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// Subsets of an `n`-point universe with union and intersection; `Σ` is the
/// union of the keys, the order is inclusion.
pub fn powerset(n: usize) -> Result<FiniteSigma> {
    if n > 8 {
        return Err(Error::Precondition(format!(
            "powerset universe of {n} points is too large (max 8)"
        )));
    }
    let names: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let size = 1usize << n;
    let labels = (0..size).map(|b| subset_label(b, &names)).collect();
    let base = FiniteSemiring::from_fn(labels, 0, size - 1, |a, b| a | b, |a, b| a & b)?;
    let ids: Vec<usize> = (0..size).collect();
    Ok(FiniteSigma {
        name: format!("powerset:{n}"),
        base,
        order: Some(PartialOrder::from_fn(size, |a, b| a & b == a)?),
        rule: SigmaRule::Scaled {
            aleph0: ids.clone(),
            uncountable: ids,
        },
    })
}

/// Largest number of words a language carrier may range over.
const MAX_WORDS: usize = 10;

/// Languages over the first `k` letters with words of length `<= max_len`.
/// Union is addition; concatenation discards words longer than `max_len`
/// (a congruence: a product is long iff every extension of it is).
pub fn language(k: usize, max_len: usize) -> Result<FiniteSigma> {
    if k > 26 {
        return Err(Error::Precondition(
            "alphabets have at most 26 letters".into(),
        ));
    }
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..k as u8).map(move |c| {
                    let mut v = w.clone();
                    v.push(b'a' + c);
                    v
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
        if words.len() > MAX_WORDS {
            return Err(Error::Precondition(format!(
                "lang:{k}:{max_len} ranges over more than {MAX_WORDS} words"
            )));
        }
    }
    let names: Vec<String> = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                String::from_utf8(w.clone()).expect("ascii")
            }
        })
        .collect();
    let index = |w: &[u8]| words.iter().position(|x| x == w);
    let concat: Vec<Vec<Option<usize>>> = words
        .iter()
        .map(|u| {
            words
                .iter()
                .map(|v| {
                    if u.len() + v.len() > max_len {
                        None
                    } else {
                        index(&[u.as_slice(), v.as_slice()].concat())
                    }
                })
                .collect()
        })
        .collect();
    let size = 1usize << words.len();
    let labels = (0..size).map(|b| subset_label(b, &names)).collect();
    let nw = words.len();
    let product = |a: usize, b: usize| {
        let mut out = 0usize;
        for (i, row) in concat.iter().enumerate().take(nw) {
            if a >> i & 1 == 0 {
                continue;
            }
            for (j, w) in row.iter().enumerate() {
                if b >> j & 1 == 1 {
                    if let Some(w) = w {
                        out |= 1 << w;
                    }
                }
            }
        }
        out
    };
    let base = FiniteSemiring::from_fn(labels, 0, 1, |a, b| a | b, product)?;
    let ids: Vec<usize> = (0..size).collect();
    Ok(FiniteSigma {
        name: format!("lang:{k}:{max_len}"),
        base,
        order: Some(PartialOrder::from_fn(size, |a, b| a & b == a)?),
        rule: SigmaRule::Scaled {
            aleph0: ids.clone(),
            uncountable: ids,
        },
    })
}

/// `{0, finite, infinite}`: infinitely many nonzero terms sum to `infinite`.
pub fn three_valued() -> FiniteSigma {
    let base = FiniteSemiring::from_fn(
        strs(&["0", "finite", "infinite"]),
        0,
        1,
        |a, b| a.max(b),
        |a, b| if a == 0 || b == 0 { 0 } else { a.max(b) },
    )
    .expect("three-valued tables");
    FiniteSigma {
        name: "three-valued".into(),
        base,
        order: Some(PartialOrder::chain(3)),
        rule: SigmaRule::Scaled {
            aleph0: vec![0, 2, 2],
            uncountable: vec![0, 2, 2],
        },
    }
}

/// `{0, finite, countable, uncountable}` with `max` as addition and `0`
/// absorbing, otherwise `max`, as multiplication. Countably many `finite`
/// terms still sum to `finite`; only uncountably many nonzero terms reach
/// `uncountable`.
pub fn four_valued() -> FiniteSigma {
    let base = FiniteSemiring::from_fn(
        strs(&["0", "finite", "countable", "uncountable"]),
        0,
        1,
        |a, b| a.max(b),
        |a, b| if a == 0 || b == 0 { 0 } else { a.max(b) },
    )
    .expect("four-valued tables");
    FiniteSigma {
        name: "four-valued".into(),
        base,
        order: Some(PartialOrder::chain(4)),
        rule: SigmaRule::Scaled {
            aleph0: vec![0, 1, 2, 3],
            uncountable: vec![0, 3, 3, 3],
        },
    }
}

/// A gallery semiring resolved by name.
#[derive(Debug, Clone)]
pub enum GalleryEntry {
    Finite(FiniteSigma),
    /// Ordered but not complete; its completion is [`NatInfinity`].
    Nat(Nat),
    NatInfinity(NatInfinity),
    OmegaMinus(OmegaMinus),
}

/// Names accepted by [`lookup`]; `<..>` marks parameters.
pub const GALLERY_NAMES: &[&str] = &[
    "nat",
    "nat-infinity",
    "boolean",
    "xor",
    "nat-desk:<cap>",
    "powerset:<n>",
    "lang:<k>:<L>",
    "three-valued",
    "four-valued",
    "omega-minus",
    "adjoin-inf:<file or finite gallery name>",
];

fn parse_param(name: &str, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad parameter `{s}` in gallery name `{name}`"),
    })
}

/// Plain finite semiring (no `Σ`) for a finite gallery name.
pub fn lookup_finite(name: &str) -> Result<FiniteSemiring> {
    match lookup(name)? {
        GalleryEntry::Finite(f) => Ok(f.base),
        _ => Err(Error::Precondition(format!(
            "`{name}` has an infinite carrier"
        ))),
    }
}

pub fn lookup(name: &str) -> Result<GalleryEntry> {
    let parts: Vec<&str> = name.splitn(2, ':').collect();
    let entry = match parts.as_slice() {
        ["nat"] => GalleryEntry::Nat(Nat),
        ["nat-infinity"] => GalleryEntry::NatInfinity(NatInfinity),
        ["omega-minus"] => GalleryEntry::OmegaMinus(OmegaMinus),
        ["boolean"] => GalleryEntry::Finite(boolean()),
        ["three-valued"] => GalleryEntry::Finite(three_valued()),
        ["four-valued"] => GalleryEntry::Finite(four_valued()),
        ["xor"] => GalleryEntry::Finite(FiniteSigma {
            name: "xor".into(),
            base: small::xor(),
            order: None,
            // xor is not zero-sum-free, so it has no complete extension; the
            // rule is only there to make the entry total
            rule: SigmaRule::Scaled {
                aleph0: vec![0, 1],
                uncountable: vec![0, 1],
            },
        }),
        ["nat-desk", cap] => {
            let cap = parse_param(name, cap)?;
            let base = small::nat_desk(cap);
            GalleryEntry::Finite(crate::completion::completion_of_finite_unchecked(
                base,
                PartialOrder::chain(cap + 1),
                format!("nat-desk:{cap}"),
            ))
        }
        ["powerset", n] => GalleryEntry::Finite(powerset(parse_param(name, n)?)?),
        ["lang", rest] => {
            let (k, l) = rest.split_once(':').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("`{name}`: expected lang:<k>:<L>"),
            })?;
            GalleryEntry::Finite(language(parse_param(name, k)?, parse_param(name, l)?)?)
        }
        ["adjoin-inf", inner] => {
            let base = if std::path::Path::new(inner).is_file() {
                crate::io::read_semiring_file(inner)?.semiring
            } else {
                lookup_finite(inner)?
            };
            let mut t = adjoin_infinity(&base)?;
            t.name = name.to_string();
            GalleryEntry::Finite(t)
        }
        _ => {
            return Err(Error::UnknownName(format!(
                "`{name}` (known: {})",
                GALLERY_NAMES.join(", ")
            )))
        }
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_semiring_axioms;
    use crate::complete::sigma;

    fn fam(pairs: &[(usize, Cardinal)]) -> CardinalFamily<usize> {
        CardinalFamily::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn finite_gallery_tables_are_semirings() {
        for s in [
            boolean(),
            powerset(3).unwrap(),
            language(1, 2).unwrap(),
            language(2, 2).unwrap(),
            three_valued(),
            four_valued(),
        ] {
            assert!(check_semiring_axioms(&s.base).passed, "{}", s.name);
        }
    }

    #[test]
    fn powerset_sigma_is_union() {
        let p = powerset(3).unwrap();
        let a = p.base.index_of("{a}").unwrap();
        let b = p.base.index_of("{b}").unwrap();
        let f = fam(&[(a, Cardinal::ONE), (b, Cardinal::ONE)]);
        assert_eq!(p.label(&sigma(&p, &f).unwrap()), "{a,b}");
    }

    #[test]
    fn language_products() {
        let l = language(2, 2).unwrap();
        let i = |s: &str| l.base.index_of(s).unwrap();
        assert_eq!(l.label(&l.mul(&i("{a}"), &i("{b}"))), "{ab}");
        assert_eq!(l.label(&l.mul(&i("{a,b}"), &i("{ε,a}"))), "{a,b,aa,ba}");
        // overflow beyond length 2 is discarded on both sides
        let l12 = language(1, 2).unwrap();
        let a = l12.base.index_of("{a}").unwrap();
        let aa = l12.base.index_of("{aa}").unwrap();
        assert_eq!(l12.mul(&l12.mul(&a, &a), &a), l12.zero());
        assert_eq!(l12.mul(&a, &aa), l12.zero());
        assert_eq!(l12.one(), l12.base.index_of("{ε}").unwrap());
    }

    #[test]
    fn language_size_guard() {
        assert!(language(3, 2).is_err());
        assert!(language(0, 5).is_ok());
    }

    #[test]
    fn three_valued_rules() {
        let t = three_valued();
        assert_eq!(t.label(&t.add(&1, &1)), "finite");
        assert_eq!(
            t.label(&t.sigma(&fam(&[(1, Cardinal::Aleph0)]))),
            "infinite"
        );
        assert_eq!(t.label(&t.sigma(&fam(&[(1, Cardinal::Fin(7))]))), "finite");
        assert_eq!(t.sigma(&fam(&[(0, Cardinal::Uncountable)])), 0);
    }

    #[test]
    fn four_valued_rules() {
        let f = four_valued();
        assert_eq!(
            f.label(&f.sigma(&fam(&[(1, Cardinal::Uncountable)]))),
            "uncountable"
        );
        assert_eq!(f.label(&f.sigma(&fam(&[(1, Cardinal::Aleph0)]))), "finite");
        assert_eq!(
            f.label(&f.sigma(&fam(&[(1, Cardinal::Aleph0), (2, Cardinal::ONE)]))),
            "countable"
        );
    }

    #[test]
    fn lookup_names() {
        for name in [
            "nat",
            "nat-infinity",
            "boolean",
            "xor",
            "nat-desk:3",
            "powerset:2",
            "lang:1:2",
            "three-valued",
            "four-valued",
            "omega-minus",
            "adjoin-inf:boolean",
        ] {
            assert!(lookup(name).is_ok(), "{name}");
        }
        assert!(lookup("lang:1").is_err());
        assert!(lookup("powerset:x").is_err());
        assert!(lookup("adjoin-inf:xor").is_err());
        assert!(lookup("quaternions").is_err());
    }
}
