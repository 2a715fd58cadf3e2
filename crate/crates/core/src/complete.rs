//! Complete semirings: a total `Σ` on cardinal families, its axiom battery,
//! d-completeness, finitarity and characteristic cardinality.

use crate::algebra::{Semiring, SupOutcome};
use crate::cardinal::{Cardinal, CardinalFamily, OmegaSequence};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// A semiring with an infinite sum on families recorded up to bijection.
pub trait Complete: Semiring {
    fn sigma(&self, f: &CardinalFamily<Self::Elem>) -> Self::Elem;

    /// Sums of finite subfamilies. Symbolic carriers get a bounded sample
    /// flagged as unbounded.
    fn finite_subsums(&self, f: &CardinalFamily<Self::Elem>) -> SubsumSet<Self::Elem> {
        closure_subsums(self, f)
    }

    /// Least upper bound in the attached order.
    fn sup(&self, xs: &SubsumSet<Self::Elem>) -> Result<SupOutcome<Self::Elem>> {
        carrier_sup(self, xs)
    }

    /// `|S|`; symbolic carriers here are all countable.
    fn carrier_cardinality(&self) -> Cardinal {
        let c = self.carrier();
        if c.is_finite() {
            Cardinal::Fin(c.elements().len() as u64)
        } else {
            Cardinal::Aleph0
        }
    }
}

/// The set of finite subsums of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsumSet<E: Ord> {
    pub elems: BTreeSet<E>,
    /// True when some orbit `n·a` never closed: `elems` is then a finite
    /// sample of an infinite set.
    pub unbounded: bool,
}

const SYMBOLIC_ORBIT: usize = 16;

/// The multiples `{n·a : n <= k}`, and whether the set is complete.
fn multiples<S: Semiring + ?Sized>(
    s: &S,
    a: &S::Elem,
    k: Cardinal,
    limit: usize,
) -> (BTreeSet<S::Elem>, bool) {
    let mut seen = BTreeSet::new();
    let mut cur = s.zero();
    seen.insert(cur.clone());
    let mut n = 0u64;
    loop {
        if let Cardinal::Fin(m) = k {
            if n == m {
                return (seen, true);
            }
        } else if n as usize >= limit {
            return (seen, false);
        }
        cur = s.add(&cur, a);
        n += 1;
        if !seen.insert(cur.clone()) {
            // the orbit is deterministic, so a repeat closes it
            return (seen, true);
        }
    }
}

/// Reachability closure: start from `{0}` and add every available multiple
/// of each key.
pub fn closure_subsums<S: Semiring + ?Sized>(
    s: &S,
    f: &CardinalFamily<S::Elem>,
) -> SubsumSet<S::Elem> {
    let carrier = s.carrier();
    let limit = if carrier.is_finite() {
        carrier.elements().len() + 1
    } else {
        SYMBOLIC_ORBIT
    };
    let mut acc = BTreeSet::from([s.zero()]);
    let mut unbounded = false;
    for (a, k) in f.iter() {
        let (ms, closed) = multiples(s, a, k, limit);
        unbounded |= !closed;
        acc = acc
            .iter()
            .flat_map(|x| ms.iter().map(move |m| (x, m)))
            .map(|(x, m)| s.add(x, m))
            .collect();
    }
    SubsumSet {
        elems: acc,
        unbounded,
    }
}

/// Least upper bound by scanning a finite carrier.
pub fn carrier_sup<S: Semiring + ?Sized>(
    s: &S,
    xs: &SubsumSet<S::Elem>,
) -> Result<SupOutcome<S::Elem>> {
    if !s.has_order() {
        return Err(Error::MissingOrder);
    }
    let carrier = s.carrier();
    if !carrier.is_finite() || xs.unbounded {
        return Err(Error::Precondition(
            "carrier scan needs a finite carrier; symbolic semirings supply their own sup".into(),
        ));
    }
    let leq = |a: &S::Elem, b: &S::Elem| s.leq(a, b).unwrap_or(false);
    let ub: Vec<S::Elem> = carrier
        .elements()
        .iter()
        .filter(|u| xs.elems.iter().all(|x| leq(x, u)))
        .cloned()
        .collect();
    if ub.is_empty() {
        return Ok(SupOutcome::NoUpperBound);
    }
    Ok(match ub.iter().find(|u| ub.iter().all(|v| leq(u, v))) {
        Some(u) => SupOutcome::Sup(u.clone()),
        None => SupOutcome::NoLeast(ub),
    })
}

/// `{a ↦ fin:2, b ↦ aleph0}` with element labels.
pub fn family_label<S: Semiring + ?Sized>(s: &S, f: &CardinalFamily<S::Elem>) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|(e, k)| format!("{} ↦ {k}", s.label(e)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn sequence_label<S: Semiring + ?Sized>(s: &S, q: &OmegaSequence<S::Elem>) -> String {
    let l = |v: &[S::Elem]| v.iter().map(|e| s.label(e)).collect::<Vec<_>>().join(", ");
    format!("[{}]({})^ω", l(&q.prefix), l(&q.cycle))
}

/// `Σ` with its input checked against the carrier and, on all-finite
/// families, against the finite fold of `+`.
pub fn sigma<C: Complete + ?Sized>(c: &C, f: &CardinalFamily<C::Elem>) -> Result<C::Elem> {
    let carrier = c.carrier();
    if carrier.is_finite() {
        if let Some(e) = f.keys().find(|e| !carrier.elements().contains(e)) {
            return Err(Error::UnknownElement(format!("{e:?}")));
        }
    }
    let v = c.sigma(f);
    if f.is_all_finite() {
        let fold = f.iter().fold(c.zero(), |acc, (e, k)| match k {
            Cardinal::Fin(n) => c.add(&acc, &c.times(n, e)),
            _ => unreachable!(),
        });
        if fold != v {
            return Err(Error::Inconsistency(format!(
                "Σ{} = {} but the finite fold is {}",
                family_label(c, f),
                c.label(&v),
                c.label(&fold)
            )));
        }
    }
    Ok(v)
}

/// Seeds and sizes for the randomized batteries.
#[derive(Debug, Clone, Serialize)]
pub struct BatteryConfig {
    pub seed: u64,
    pub families: usize,
    pub sequences: usize,
    /// Largest finite multiplicity drawn.
    pub max_fin: u64,
    /// Largest number of distinct values in a drawn family.
    pub max_keys: usize,
    /// Largest number of blocks in a generated partition.
    pub max_blocks: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            seed: 1,
            families: 500,
            sequences: 200,
            max_fin: 4,
            max_keys: 3,
            max_blocks: 4,
        }
    }
}

impl BatteryConfig {
    pub fn with_seed(seed: u64) -> Self {
        BatteryConfig {
            seed,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_blocks == 0 || self.max_blocks > 8 {
            return Err(Error::Precondition(format!(
                "partitions into {} blocks are not generated (supported: 1..=8)",
                self.max_blocks
            )));
        }
        if self.max_fin == 0 || self.max_keys == 0 {
            return Err(Error::Precondition(
                "battery needs max_fin >= 1 and max_keys >= 1".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn random_cardinal(rng: &mut ChaCha8Rng, max_fin: u64) -> Cardinal {
    match rng.gen_range(0..20) {
        0..=11 => Cardinal::Fin(rng.gen_range(1..=max_fin)),
        12..=16 => Cardinal::Aleph0,
        _ => Cardinal::Uncountable,
    }
}

fn random_family<E: Ord + Clone>(
    rng: &mut ChaCha8Rng,
    elems: &[E],
    cfg: &BatteryConfig,
    min_keys: usize,
) -> CardinalFamily<E> {
    let keys = rng.gen_range(min_keys..=cfg.max_keys);
    let mut f = CardinalFamily::new();
    for _ in 0..keys {
        let e = elems.choose(rng).expect("nonempty carrier").clone();
        f.insert(e, random_cardinal(rng, cfg.max_fin));
    }
    f
}

/// Every singleton family `{a ↦ κ}` over the small classes, then
/// `cfg.families` random families.
pub fn family_battery<S: Semiring + ?Sized>(
    s: &S,
    cfg: &BatteryConfig,
) -> Vec<CardinalFamily<S::Elem>> {
    let elems = s.carrier().elements().to_vec();
    let mut out = vec![CardinalFamily::new()];
    for a in &elems {
        for k in Cardinal::classes(2).into_iter().skip(1) {
            out.push(CardinalFamily::singleton(a.clone(), k));
        }
    }
    let mut rng = cfg.rng(1);
    out.extend((0..cfg.families).map(|_| random_family(&mut rng, &elems, cfg, 1)));
    out
}

/// Constant and one-shot sequences for each element, `a` then `b` forever
/// for each pair on small carriers, then random ones with cycles biased
/// toward zero so that constant tails occur.
pub fn sequence_battery<S: Semiring + ?Sized>(
    s: &S,
    cfg: &BatteryConfig,
) -> Vec<OmegaSequence<S::Elem>> {
    let elems = s.carrier().elements().to_vec();
    let z = s.zero();
    let mut out = Vec::new();
    for a in &elems {
        out.push(OmegaSequence {
            prefix: vec![],
            cycle: vec![a.clone()],
        });
        out.push(OmegaSequence {
            prefix: vec![a.clone()],
            cycle: vec![z.clone()],
        });
    }
    // `a` followed by `b` forever: settles exactly when `a + b = a`
    if elems.len() <= 16 {
        for a in &elems {
            for b in &elems {
                out.push(OmegaSequence {
                    prefix: vec![a.clone()],
                    cycle: vec![b.clone()],
                });
            }
        }
    }
    let mut rng = cfg.rng(2);
    for _ in 0..cfg.sequences {
        let plen = rng.gen_range(0..=3);
        let clen = rng.gen_range(1..=3);
        let prefix = (0..plen)
            .map(|_| elems.choose(&mut rng).expect("nonempty").clone())
            .collect();
        let cycle = (0..clen)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    z.clone()
                } else {
                    elems.choose(&mut rng).expect("nonempty").clone()
                }
            })
            .collect();
        out.push(OmegaSequence { prefix, cycle });
    }
    out
}

fn cardinal_splits(k: Cardinal) -> Vec<(Cardinal, Cardinal)> {
    use Cardinal::*;
    let out = match k {
        Fin(n) => (0..=n).map(|a| (Fin(a), Fin(n - a))).collect(),
        Aleph0 => vec![
            (Fin(0), Aleph0),
            (Fin(1), Aleph0),
            (Fin(2), Aleph0),
            (Aleph0, Aleph0),
        ],
        Uncountable => vec![
            (Fin(1), Uncountable),
            (Aleph0, Uncountable),
            (Uncountable, Uncountable),
        ],
    };
    debug_assert!(out.iter().all(|&(a, b)| a.plus(b) == k));
    out
}

/// Runs the five complete-semiring axioms: the pair axiom (and the finite
/// folds it implies), invariance under reindexing, the partition axiom over
/// multiplicity splits and block repetitions, two-sided infinite
/// distributivity, and the zero axiom.
///
/// Law names in the report: `sigma-empty`, `sigma-singleton`, `pair`,
/// `finite-fold`, `bijection`, `partition-split`, `partition-blocks`,
/// `left-distributivity`, `right-distributivity`, `zero`.
pub fn check_sigma_axioms<C: Complete + ?Sized>(c: &C, cfg: &BatteryConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let mut r = CheckReport::new();
    let elems = c.carrier().elements().to_vec();
    let z = c.zero();
    let fl = |f: &CardinalFamily<C::Elem>| family_label(c, f);
    let el = |e: &C::Elem| c.label(e);

    r.record(
        c.sigma(&CardinalFamily::new()) == z,
        "sigma-empty",
        Vec::new,
    );
    for a in &elems {
        r.record(
            c.sigma(&CardinalFamily::singleton(a.clone(), Cardinal::ONE)) == *a,
            "sigma-singleton",
            || vec![el(a)],
        );
    }

    // (i) pair axiom
    for a in &elems {
        for b in &elems {
            let f = CardinalFamily::from_sequence([a, b]);
            r.record(c.sigma(&f) == c.add(a, b), "pair", || vec![el(a), el(b)]);
        }
    }

    // (ii) reindexing a finite listing changes neither the family nor Σ
    let mut rng = cfg.rng(3);
    for _ in 0..cfg.families.min(200) {
        let len = rng.gen_range(0..8);
        let xs: Vec<C::Elem> = (0..len)
            .map(|_| elems.choose(&mut rng).expect("nonempty").clone())
            .collect();
        let mut ys = xs.clone();
        ys.shuffle(&mut rng);
        let (f, g) = (
            CardinalFamily::from_sequence(&xs),
            CardinalFamily::from_sequence(&ys),
        );
        let fold = c.sum(&xs);
        let sf = c.sigma(&f);
        r.record(f == g && sf == c.sigma(&g), "bijection", || {
            xs.iter().map(el).collect()
        });
        r.record(sf == fold, "finite-fold", || xs.iter().map(el).collect());
    }

    let families = family_battery(c, cfg);
    for f in &families {
        let total = c.sigma(f);

        // (iii) partition: split one multiplicity into two blocks
        for (key, k) in f.iter() {
            for (a, b) in cardinal_splits(k) {
                let mut rest = f.clone();
                rest = CardinalFamily::from_pairs(
                    rest.iter()
                        .filter(|(e, _)| *e != key)
                        .map(|(e, m)| (e.clone(), m)),
                );
                rest.insert(key.clone(), a);
                let other = CardinalFamily::singleton(key.clone(), b);
                let blocks = CardinalFamily::from_sequence([&c.sigma(&rest), &c.sigma(&other)]);
                r.record(c.sigma(&blocks) == total, "partition-split", || {
                    vec![fl(f), el(key), a.to_string(), b.to_string()]
                });
            }
        }

        // (iv) infinite distributivity on both sides
        for x in &elems {
            let left = c.sigma(&f.map(|e| c.mul(x, e)));
            r.record(c.mul(x, &total) == left, "left-distributivity", || {
                vec![el(x), fl(f)]
            });
            let right = c.sigma(&f.map(|e| c.mul(e, x)));
            r.record(c.mul(&total, x) == right, "right-distributivity", || {
                vec![el(x), fl(f)]
            });
        }
    }

    // (iii) partition: index set = disjoint union of μ_j copies of blocks B_j
    let mut rng = cfg.rng(4);
    for _ in 0..cfg.families {
        let nblocks = rng.gen_range(1..=cfg.max_blocks);
        let blocks: Vec<(CardinalFamily<C::Elem>, Cardinal)> = (0..nblocks)
            .map(|_| {
                (
                    random_family(&mut rng, &elems, cfg, 1),
                    random_cardinal(&mut rng, 3),
                )
            })
            .collect();
        let whole = blocks.iter().fold(CardinalFamily::new(), |acc, (b, mu)| {
            acc.union(&b.repeated(*mu))
        });
        let sums = CardinalFamily::from_pairs(blocks.iter().map(|(b, mu)| (c.sigma(b), *mu)));
        r.record(
            c.sigma(&whole) == c.sigma(&sums),
            "partition-blocks",
            || {
                blocks
                    .iter()
                    .map(|(b, mu)| format!("{mu} × {}", fl(b)))
                    .collect()
            },
        );
    }

    // (v) zero axiom
    for k in Cardinal::classes(cfg.max_fin) {
        r.record(
            c.sigma(&CardinalFamily::singleton(z.clone(), k)) == z,
            "zero",
            || vec![k.to_string()],
        );
    }
    Ok(r)
}

/// Long-run behaviour of the partial sums of an omega sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialSums<E> {
    /// Constant `c` from some index on.
    EventuallyConstant(E),
    NotConstant,
    /// No repetition of the (sum, cycle position) state within the step cap.
    Undetermined,
}

const SEQUENCE_STEP_CAP: usize = 4096;

/// Simulates the states `(partial sum, position in cycle)` after the prefix.
/// On a finite carrier they repeat within `|S|·|cycle|` steps; the partial
/// sums are eventually constant iff they are constant on the repeating part.
pub fn partial_sums<S: Semiring + ?Sized>(
    s: &S,
    q: &OmegaSequence<S::Elem>,
) -> PartialSums<S::Elem> {
    let mut sum = s.sum(&q.prefix);
    let mut seen: HashMap<(S::Elem, usize), usize> = HashMap::new();
    let mut sums: Vec<S::Elem> = Vec::new();
    let mut pos = 0;
    loop {
        if let Some(&start) = seen.get(&(sum.clone(), pos)) {
            let tail = &sums[start..];
            return if tail.iter().all(|x| *x == tail[0]) {
                PartialSums::EventuallyConstant(tail[0].clone())
            } else {
                PartialSums::NotConstant
            };
        }
        if sums.len() >= SEQUENCE_STEP_CAP {
            return PartialSums::Undetermined;
        }
        seen.insert((sum.clone(), pos), sums.len());
        sum = s.add(&sum, &q.cycle[pos]);
        sums.push(sum.clone());
        pos = (pos + 1) % q.cycle.len();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DWitness<E> {
    pub sequence: OmegaSequence<E>,
    pub partial_sum: E,
    pub sigma: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCompleteness<E> {
    pub holds: bool,
    pub witness: Option<DWitness<E>>,
    pub checked: usize,
    pub constant_tails: usize,
    pub undetermined: usize,
}

/// Every sequence whose partial sums settle at `c` must have `Σ = c`.
pub fn is_d_complete<C: Complete + ?Sized>(
    c: &C,
    seqs: &[OmegaSequence<C::Elem>],
) -> DCompleteness<C::Elem> {
    let mut out = DCompleteness {
        holds: true,
        witness: None,
        checked: 0,
        constant_tails: 0,
        undetermined: 0,
    };
    for q in seqs {
        out.checked += 1;
        match partial_sums(c, q) {
            PartialSums::EventuallyConstant(v) => {
                out.constant_tails += 1;
                let sigma = c.sigma(&q.family());
                if sigma != v && out.witness.is_none() {
                    out.holds = false;
                    out.witness = Some(DWitness {
                        sequence: q.clone(),
                        partial_sum: v,
                        sigma,
                    });
                }
            }
            PartialSums::NotConstant => {}
            PartialSums::Undetermined => out.undetermined += 1,
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitaryWitness<E: Ord> {
    pub family: CardinalFamily<E>,
    pub sigma: E,
    pub sup: SupOutcome<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finitarity<E: Ord> {
    pub holds: bool,
    pub witness: Option<FinitaryWitness<E>>,
    pub checked: usize,
}

/// `Σ f` must be the least upper bound of the finite subsums of `f`.
pub fn is_finitary<C: Complete + ?Sized>(
    c: &C,
    fams: &[CardinalFamily<C::Elem>],
) -> Result<Finitarity<C::Elem>> {
    if !c.has_order() {
        return Err(Error::MissingOrder);
    }
    for (i, f) in fams.iter().enumerate() {
        let sup = c.sup(&c.finite_subsums(f))?;
        let sigma = c.sigma(f);
        if sup.sup() != Some(&sigma) {
            return Ok(Finitarity {
                holds: false,
                witness: Some(FinitaryWitness {
                    family: f.clone(),
                    sigma,
                    sup,
                }),
                checked: i + 1,
            });
        }
    }
    Ok(Finitarity {
        holds: true,
        witness: None,
        checked: fams.len(),
    })
}

/// Bounds for [`characteristic_cardinality`].
#[derive(Debug, Clone, Copy)]
pub struct CardinalityBound {
    pub max_fin: u64,
    pub max_keys: usize,
}

impl Default for CardinalityBound {
    fn default() -> Self {
        CardinalityBound {
            max_fin: 4,
            max_keys: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacteristicCardinality {
    pub lambda1: Cardinal,
    pub lambda_s: Cardinal,
    /// Set when the bounded family space may hide a larger `λ_S`.
    pub caveat: bool,
    /// `λ_S <= max(λ₁, |S|)`.
    pub bound_holds: bool,
    /// `Σ{1 ↦ κ}` for each class `κ` examined.
    pub sums_of_one: Vec<(Cardinal, String)>,
}

/// Least class from which `values` stays constant.
fn stabilization<E: PartialEq>(classes: &[Cardinal], values: &[E]) -> Cardinal {
    let last = values.last().expect("nonempty");
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] == *last {
        i -= 1;
    }
    classes[i]
}

/// `λ₁`: the least class beyond which sums of ones stop changing. `λ_S`:
/// for each family in the bounded space, the least size of a subfamily with
/// the same sum, maximized over families.
pub fn characteristic_cardinality<C: Complete + ?Sized>(
    c: &C,
    bound: CardinalityBound,
) -> CharacteristicCardinality {
    let classes = Cardinal::classes(bound.max_fin);
    let one = c.one();
    let ones: Vec<C::Elem> = classes
        .iter()
        .map(|&k| c.sigma(&CardinalFamily::singleton(one.clone(), k)))
        .collect();
    let lambda1 = stabilization(&classes, &ones);

    let carrier = c.carrier();
    let elems = carrier.elements();
    let nonzero: Vec<Cardinal> = classes[1..].to_vec();

    // families with up to max_keys distinct keys, in index order
    let mut lambda_s = Cardinal::ZERO;
    let mut keysets: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..bound.max_keys {
        let mut next = Vec::new();
        for ks in &keysets {
            let start = ks.last().map_or(0, |&l| l + 1);
            for i in start..elems.len() {
                let mut k2 = ks.clone();
                k2.push(i);
                next.push(k2);
            }
        }
        for ks in &next {
            for_each_assignment(ks.len(), &nonzero, &mut |mults| {
                let f = CardinalFamily::from_pairs(
                    ks.iter().zip(mults).map(|(&i, &k)| (elems[i].clone(), k)),
                );
                let target = c.sigma(&f);
                let mut best = f.size();
                // subfamilies g <= f with multiplicities drawn from the classes
                for_each_assignment(ks.len(), &classes, &mut |sub| {
                    if sub.iter().zip(mults).any(|(s, m)| s > m) {
                        return;
                    }
                    let g = CardinalFamily::from_pairs(
                        ks.iter().zip(sub).map(|(&i, &k)| (elems[i].clone(), k)),
                    );
                    let size = g.size();
                    if size < best && c.sigma(&g) == target {
                        best = size;
                    }
                });
                lambda_s = lambda_s.max(best);
            });
        }
        keysets = next;
    }

    let orbits_settled = elems.iter().all(|a| {
        let at = |n| c.sigma(&CardinalFamily::singleton(a.clone(), Cardinal::Fin(n)));
        at(bound.max_fin) == at(bound.max_fin - 1)
    });
    let caveat = !(carrier.is_finite() && bound.max_keys >= elems.len() && orbits_settled);
    let bound_holds = lambda_s <= lambda1.max(c.carrier_cardinality());
    CharacteristicCardinality {
        lambda1,
        lambda_s,
        caveat,
        bound_holds,
        sums_of_one: classes
            .iter()
            .zip(&ones)
            .map(|(k, v)| (*k, c.label(v)))
            .collect(),
    }
}

fn for_each_assignment(n: usize, values: &[Cardinal], f: &mut dyn FnMut(&[Cardinal])) {
    let mut idx = vec![0usize; n];
    let mut cur: Vec<Cardinal> = vec![values[0]; n];
    loop {
        f(&cur);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                cur[k] = values[idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = values[0];
            k += 1;
        }
    }
}

/// `sup` of the finite subsums of `f`: the value a finitary `Σ` must take.
pub fn finite_subsums_sup<C: Complete + ?Sized>(
    c: &C,
    f: &CardinalFamily<C::Elem>,
) -> Result<SupOutcome<C::Elem>> {
    c.sup(&c.finite_subsums(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{boolean, four_valued, NInf, NatInfinity};

    #[test]
    fn boolean_passes_the_axiom_battery() {
        let r = check_sigma_axioms(&boolean(), &BatteryConfig::default()).unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn unsupported_partition_shapes_are_refused() {
        let cfg = BatteryConfig {
            max_blocks: 9,
            ..BatteryConfig::default()
        };
        assert!(matches!(
            check_sigma_axioms(&boolean(), &cfg),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn finite_subsum_closures() {
        let b = boolean();
        let s = finite_subsums_closure(&b, &CardinalFamily::singleton(1, Cardinal::ONE));
        assert_eq!(s, BTreeSet::from([0, 1]));
        let f = four_valued();
        let s = finite_subsums_closure(&f, &CardinalFamily::singleton(1, Cardinal::Uncountable));
        assert_eq!(s, BTreeSet::from([0, 1]));
    }

    fn finite_subsums_closure<C: Complete>(
        c: &C,
        f: &CardinalFamily<C::Elem>,
    ) -> BTreeSet<C::Elem> {
        let s = c.finite_subsums(f);
        assert!(!s.unbounded);
        s.elems
    }

    #[test]
    fn eventually_constant_partial_sums() {
        let n = NatInfinity;
        let q = OmegaSequence::new(vec![NInf::fin(5)], vec![NInf::zero()]).unwrap();
        assert_eq!(
            partial_sums(&n, &q),
            PartialSums::EventuallyConstant(NInf::fin(5))
        );
        assert!(is_d_complete(&n, &[q]).holds);
        let b = boolean();
        let q = OmegaSequence::new(vec![], vec![0, 1]).unwrap();
        assert_eq!(partial_sums(&b, &q), PartialSums::EventuallyConstant(1));
    }

    #[test]
    fn growing_sums_are_undetermined_on_symbolic_carriers() {
        let q = OmegaSequence::new(vec![], vec![NInf::one()]).unwrap();
        assert_eq!(partial_sums(&NatInfinity, &q), PartialSums::Undetermined);
    }

    #[test]
    fn characteristic_cardinalities() {
        assert_eq!(
            characteristic_cardinality(&boolean(), CardinalityBound::default()).lambda1,
            Cardinal::ONE
        );
        let n = characteristic_cardinality(&NatInfinity, CardinalityBound::default());
        assert_eq!(n.lambda1, Cardinal::Aleph0);
        assert!(n.bound_holds && n.caveat);
        let f = characteristic_cardinality(&four_valued(), CardinalityBound::default());
        assert_eq!(f.lambda1, Cardinal::Uncountable);
    }

    #[test]
    fn finitary_needs_an_order() {
        let mut b = boolean();
        b.order = None;
        assert!(matches!(is_finitary(&b, &[]), Err(Error::MissingOrder)));
    }

    #[test]
    fn checked_sigma_rejects_foreign_keys() {
        assert!(matches!(
            sigma(&boolean(), &CardinalFamily::singleton(5, Cardinal::ONE)),
            Err(Error::UnknownElement(_))
        ));
        assert_eq!(
            sigma(&boolean(), &CardinalFamily::singleton(1, Cardinal::Fin(3))).unwrap(),
            1
        );
    }
}
