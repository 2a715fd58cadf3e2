//! Semirings given by tables, the generic [`Semiring`] interface, and the
//! decision procedures on the natural quasiorder.

mod enumerate;
mod order;

pub use enumerate::{enumerate_semirings, random_semiring, MAX_EXHAUSTIVE};
pub use order::{
    check_ordered_semiring, condition4_holds_on, is_orderable, is_zero_sum_free,
    natural_quasiorder, search_compatible_order, OrderSearch, Orderability, PartialOrder,
    QuasiOrder, SupOutcome, ZeroSumFree,
};

use crate::error::{Error, Result};
use crate::report::CheckReport;
use std::fmt::Debug;
use std::hash::Hash;

/// The carrier as seen by batteries: either all of it, or a bounded sample
/// of a symbolic (infinite) carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier<E> {
    Finite(Vec<E>),
    Sample(Vec<E>),
}

impl<E> Carrier<E> {
    pub fn elements(&self) -> &[E] {
        match self {
            Carrier::Finite(v) | Carrier::Sample(v) => v,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Carrier::Finite(_))
    }
}

/// A semiring presented by its operations. Elements are plain values; the
/// structure object carries whatever tables or parameters the operations
/// need.
pub trait Semiring {
    type Elem: Clone + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn label(&self, a: &Self::Elem) -> String;
    fn carrier(&self) -> Carrier<Self::Elem>;

    /// The attached partial order, if any.
    fn leq(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<bool> {
        None
    }

    fn has_order(&self) -> bool {
        let z = self.zero();
        self.leq(&z, &z).is_some()
    }

    /// `a + a + ... + a` with `n` summands.
    fn times(&self, n: u64, a: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.add(&acc, a);
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// Checks every semiring law on all tuples drawn from `elems`, in
/// lexicographic index order, so the first violation of each law carries the
/// least witness.
pub fn check_laws<S: Semiring + ?Sized>(s: &S, elems: &[S::Elem]) -> CheckReport {
    let mut report = CheckReport::new();
    let z = s.zero();
    let o = s.one();
    let l = |xs: &[&S::Elem]| xs.iter().map(|x| s.label(x)).collect::<Vec<_>>();

    for a in elems {
        report.record(
            s.add(&z, a) == *a && s.add(a, &z) == *a,
            "add-identity",
            || l(&[a]),
        );
        report.record(
            s.mul(&o, a) == *a && s.mul(a, &o) == *a,
            "mul-identity",
            || l(&[a]),
        );
        report.record(
            s.mul(&z, a) == z && s.mul(a, &z) == z,
            "zero-annihilation",
            || l(&[a]),
        );
    }
    for a in elems {
        for b in elems {
            report.record(s.add(a, b) == s.add(b, a), "add-commutativity", || {
                l(&[a, b])
            });
        }
    }
    for a in elems {
        for b in elems {
            let ab = s.add(a, b);
            let mab = s.mul(a, b);
            for c in elems {
                report.record(
                    s.add(&ab, c) == s.add(a, &s.add(b, c)),
                    "add-associativity",
                    || l(&[a, b, c]),
                );
                report.record(
                    s.mul(&mab, c) == s.mul(a, &s.mul(b, c)),
                    "mul-associativity",
                    || l(&[a, b, c]),
                );
                let bc = s.add(b, c);
                report.record(
                    s.mul(a, &bc) == s.add(&s.mul(a, b), &s.mul(a, c)),
                    "left-distributivity",
                    || l(&[a, b, c]),
                );
                report.record(
                    s.mul(&bc, a) == s.add(&s.mul(b, a), &s.mul(c, a)),
                    "right-distributivity",
                    || l(&[a, b, c]),
                );
            }
        }
    }
    report
}

/// A finite semiring given by its addition and multiplication tables over an
/// indexed carrier. Element identity is index equality.
///
/// Construction only validates the shape of the tables; whether they form a
/// semiring is decided by [`check_semiring_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    labels: Vec<String>,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteSemiring {
    pub fn new(
        labels: Vec<String>,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Structure("empty carrier".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Structure(format!("duplicate label `{l}`")));
            }
        }
        if zero >= n || one >= n {
            return Err(Error::Structure(format!(
                "zero/one index out of range (zero={zero}, one={one}, n={n})"
            )));
        }
        let flat = |name: &str, t: Vec<Vec<usize>>| -> Result<Vec<usize>> {
            if t.len() != n {
                return Err(Error::Structure(format!(
                    "{name} table has {} rows, expected {n}",
                    t.len()
                )));
            }
            let mut out = Vec::with_capacity(n * n);
            for (i, row) in t.into_iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Structure(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, v) in row.into_iter().enumerate() {
                    if v >= n {
                        return Err(Error::Structure(format!(
                            "{name}[{i}][{j}] = {v} is out of range"
                        )));
                    }
                    out.push(v);
                }
            }
            Ok(out)
        };
        let add = flat("add", add)?;
        let mul = flat("mul", mul)?;
        Ok(FiniteSemiring {
            labels,
            zero,
            one,
            add,
            mul,
        })
    }

    /// Builds the tables by evaluating `add` and `mul` on every pair.
    pub fn from_fn(
        labels: Vec<String>,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n)
                .map(|i| (0..n).map(|j| f(i, j)).collect())
                .collect::<Vec<Vec<usize>>>()
        };
        let a = table(&add);
        let m = table(&mul);
        Self::new(labels, zero, one, a, m)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b]
    }

    #[inline]
    pub fn times_table(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.size())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.size())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// The same semiring with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Structure("relabeling is not a permutation".into()));
            }
            inv[p] = i;
        }
        if perm.len() != n {
            return Err(Error::Structure("relabeling has the wrong length".into()));
        }
        let labels = (0..n).map(|j| self.labels[inv[j]].clone()).collect();
        Self::from_fn(
            labels,
            perm[self.zero],
            perm[self.one],
            |i, j| perm[self.plus(inv[i], inv[j])],
            |i, j| perm[self.times_table(inv[i], inv[j])],
        )
    }
}

impl Semiring for FiniteSemiring {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.plus(*a, *b)
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.times_table(*a, *b)
    }
    fn label(&self, a: &usize) -> String {
        self.labels
            .get(*a)
            .cloned()
            .unwrap_or_else(|| format!("#{a}"))
    }
    fn carrier(&self) -> Carrier<usize> {
        Carrier::Finite(self.indices().collect())
    }
}

/// Every violated semiring law instance of `s`, with lexicographically least
/// witnesses first.
pub fn check_semiring_axioms(s: &FiniteSemiring) -> CheckReport {
    let elems: Vec<usize> = s.indices().collect();
    check_laws(s, &elems)
}

/// Named two- and three-element semirings used throughout the tests and the
/// gallery.
pub mod small {
    use super::FiniteSemiring;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    /// `{0,1}` with or/and.
    pub fn boolean() -> FiniteSemiring {
        FiniteSemiring::from_fn(labels(&["0", "1"]), 0, 1, |a, b| a | b, |a, b| a & b)
            .expect("boolean tables")
    }

    /// `Z/2` with xor/and. A semiring that is not orderable.
    pub fn xor() -> FiniteSemiring {
        FiniteSemiring::from_fn(labels(&["0", "1"]), 0, 1, |a, b| a ^ b, |a, b| a & b)
            .expect("xor tables")
    }

    /// `{0, 1, ..., cap}` with addition and multiplication saturating at
    /// `cap`: the quotient of the naturals identifying everything `>= cap`.
    pub fn nat_desk(cap: usize) -> FiniteSemiring {
        let names: Vec<String> = (0..=cap).map(|i| i.to_string()).collect();
        FiniteSemiring::from_fn(
            names,
            0,
            1.min(cap),
            |a, b| (a + b).min(cap),
            |a, b| (a * b).min(cap),
        )
        .expect("saturating tables")
    }
}
