//! The completion of a finite ordered semiring: the precongruence `≲` on
//! polynomials over the carrier, the congruence `∼`, the induced `Σ`, and
//! checks of uniqueness and of the universal property.

use crate::algebra::{
    check_ordered_semiring, is_orderable, FiniteSemiring, PartialOrder, Semiring,
};
use crate::cardinal::{Cardinal, CardinalFamily};
use crate::complete::characteristic_cardinality;
use crate::complete::CardinalityBound;
use crate::complete::{
    check_sigma_axioms, family_battery, family_label, finite_subsums_sup, is_d_complete,
    sequence_battery, sequence_label, BatteryConfig, Complete,
};
use crate::error::{Error, Result};
use crate::gallery::{four_valued, FiniteSigma, NInf, NatInfinity, SigmaRule};
use crate::report::CheckReport;
use crate::series::{evaluate_phi, Polynomial, TruncatedSeries, Word};
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeSet;

/// One direction of `≲`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lesssim {
    pub holds: bool,
    /// Least `p' <= p` with no `q' <= q` such that `φ(p') <= φ(q')`.
    pub failing: Option<Polynomial>,
}

/// `p ≲ q` and `q ≲ p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub lesssim_forward: bool,
    pub lesssim_backward: bool,
    /// The failing `p'` of the first direction that fails.
    pub witness: Option<Polynomial>,
}

impl CongruenceVerdict {
    pub fn sim(&self) -> bool {
        self.lesssim_forward && self.lesssim_backward
    }
}

fn require_ordered(s: &FiniteSemiring, o: &PartialOrder) -> Result<()> {
    let r = check_ordered_semiring(s, o);
    match r.first() {
        None => Ok(()),
        Some(v) => Err(Error::IncompatibleOrder(v.to_string())),
    }
}

fn check_letters(p: &Polynomial, s: &FiniteSemiring) -> Result<()> {
    evaluate_phi(p, s).map(|_| ())
}

/// `φ` of every polynomial below `p`.
fn below_images(p: &Polynomial, s: &FiniteSemiring) -> BTreeSet<usize> {
    p.enumerate_below()
        .iter()
        .map(|x| evaluate_phi(x, s).expect("letters checked"))
        .collect()
}

/// The brute-force definition of `≲` over precomputed images: every image
/// below `p` is dominated by some image below `q`.
fn dominated(o: &PartialOrder, below_p: &BTreeSet<usize>, below_q: &BTreeSet<usize>) -> bool {
    below_p
        .iter()
        .all(|&x| below_q.iter().any(|&y| o.leq(x, y)))
}

/// `p ≲ q`: every `p' <= p` has some `q' <= q` with `φ(p') <= φ(q')`. The
/// literal search is run, then compared with `φ(p) <= φ(q)`; a disagreement
/// is an [`Error::Inconsistency`].
pub fn lesssim(
    p: &Polynomial,
    q: &Polynomial,
    s: &FiniteSemiring,
    o: &PartialOrder,
) -> Result<Lesssim> {
    require_ordered(s, o)?;
    check_letters(p, s)?;
    check_letters(q, s)?;
    let below_q = below_images(q, s);
    let failing = p.enumerate_below().into_iter().find(|x| {
        let v = evaluate_phi(x, s).expect("letters checked");
        !below_q.iter().any(|&y| o.leq(v, y))
    });
    let holds = failing.is_none();
    let reduced = o.leq(evaluate_phi(p, s)?, evaluate_phi(q, s)?);
    if holds != reduced {
        return Err(Error::Inconsistency(format!(
            "brute-force ≲ gives {holds}, φ(p) <= φ(q) gives {reduced} for p = {}, q = {}",
            p.display(s),
            q.display(s)
        )));
    }
    Ok(Lesssim { holds, failing })
}

/// Both directions of `≲`.
pub fn congruence(
    p: &Polynomial,
    q: &Polynomial,
    s: &FiniteSemiring,
    o: &PartialOrder,
) -> Result<CongruenceVerdict> {
    let f = lesssim(p, q, s, o)?;
    let b = lesssim(q, p, s, o)?;
    Ok(CongruenceVerdict {
        lesssim_forward: f.holds,
        lesssim_backward: b.holds,
        witness: f.failing.or(b.failing),
    })
}

/// `≲` on series with `∞` coefficients, approximated by capping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesLesssim {
    Decided(bool),
    /// The verdicts at caps `c_max - 1` and `c_max` differ.
    Inconclusive {
        lower_cap: bool,
        upper_cap: bool,
    },
}

/// `r ≲ t` with every `∞` coefficient replaced by `c_max - 1` and by
/// `c_max`; the verdict stands only when the two agree.
pub fn lesssim_series(
    r: &TruncatedSeries,
    t: &TruncatedSeries,
    s: &FiniteSemiring,
    o: &PartialOrder,
    c_max: u64,
) -> Result<SeriesLesssim> {
    if c_max < 2 {
        return Err(Error::Precondition(format!(
            "coefficient cap {c_max} is below 2"
        )));
    }
    let at = |cap| lesssim(&r.cap(cap), &t.cap(cap), s, o).map(|l| l.holds);
    let lower_cap = at(c_max - 1)?;
    let upper_cap = at(c_max)?;
    Ok(if lower_cap == upper_cap {
        SeriesLesssim::Decided(upper_cap)
    } else {
        SeriesLesssim::Inconclusive {
            lower_cap,
            upper_cap,
        }
    })
}

/// Sizes for the random polynomial batteries.
#[derive(Debug, Clone, Serialize)]
pub struct PolyBattery {
    pub seed: u64,
    pub triples: usize,
    pub quadruples: usize,
    pub max_support: usize,
    pub max_coeff: u64,
    pub max_len: usize,
}

impl Default for PolyBattery {
    fn default() -> Self {
        PolyBattery {
            seed: 0,
            triples: 300,
            quadruples: 100,
            max_support: 3,
            max_coeff: 2,
            max_len: 2,
        }
    }
}

impl PolyBattery {
    pub fn with_seed(seed: u64) -> Self {
        PolyBattery {
            seed,
            ..Self::default()
        }
    }
}

/// A random polynomial over the carrier of `s`.
pub fn random_polynomial(
    rng: &mut impl Rng,
    s: &FiniteSemiring,
    max_support: usize,
    max_coeff: u64,
    max_len: usize,
) -> Polynomial {
    let n = rng.gen_range(0..=max_support);
    Polynomial::from_terms((0..n).map(|_| {
        let len = rng.gen_range(0..=max_len);
        let w = Word((0..len).map(|_| rng.gen_range(0..s.size())).collect());
        (w, rng.gen_range(1..=max_coeff.max(1)))
    }))
}

/// Equivalence, compatibility with `+` and the Cauchy product, and
/// `p ∼ q ⇔ φ(p) = φ(q)`, on seeded samples.
///
/// Law names: `sim-reflexive`, `sim-symmetric`, `sim-transitive`,
/// `sim-add-compatible`, `sim-mul-compatible`, `collapse`.
pub fn sim_congruence_battery(
    s: &FiniteSemiring,
    o: &PartialOrder,
    cfg: &PolyBattery,
) -> Result<CheckReport> {
    require_ordered(s, o)?;
    let mut rng = BatteryConfig::with_seed(cfg.seed).rng(7);
    let mut gen = || random_polynomial(&mut rng, s, cfg.max_support, cfg.max_coeff, cfg.max_len);
    let mut r = CheckReport::new();
    let show = |ps: &[&Polynomial]| ps.iter().map(|p| p.display(s).to_string()).collect();
    let sim = |a: &Polynomial, b: &Polynomial| congruence(a, b, s, o).map(|v| v.sim());
    for _ in 0..cfg.triples {
        let (a, b, c) = (gen(), gen(), gen());
        let (ab, ba, bc, ac) = (sim(&a, &b)?, sim(&b, &a)?, sim(&b, &c)?, sim(&a, &c)?);
        r.record(sim(&a, &a)?, "sim-reflexive", || show(&[&a]));
        r.record(ab == ba, "sim-symmetric", || show(&[&a, &b]));
        r.record(!(ab && bc) || ac, "sim-transitive", || show(&[&a, &b, &c]));
        let same = evaluate_phi(&a, s)? == evaluate_phi(&b, s)?;
        r.record(ab == same, "collapse", || show(&[&a, &b]));
    }
    for _ in 0..cfg.quadruples {
        let (p, p2, q, q2) = (gen(), gen(), gen(), gen());
        if !(sim(&p, &p2)? && sim(&q, &q2)?) {
            continue;
        }
        r.record(sim(&p.add(&q), &p2.add(&q2))?, "sim-add-compatible", || {
            show(&[&p, &p2, &q, &q2])
        });
        r.record(
            sim(&p.cauchy(&q), &p2.cauchy(&q2))?,
            "sim-mul-compatible",
            || show(&[&p, &p2, &q, &q2]),
        );
    }
    Ok(r)
}

/// Every polynomial with at most `max_support` terms, coefficients in
/// `1..=max_coeff` and words of length `<= max_len` over `n` letters.
pub fn all_polynomials(
    n: usize,
    max_support: usize,
    max_coeff: u64,
    max_len: usize,
) -> Vec<Polynomial> {
    let words = Word::all_up_to(n, max_len);
    let mut out = Vec::new();
    fn go(
        words: &[Word],
        start: usize,
        left: usize,
        max_coeff: u64,
        cur: &mut Vec<(Word, u64)>,
        out: &mut Vec<Polynomial>,
    ) {
        out.push(Polynomial::from_terms(cur.iter().cloned()));
        if left == 0 {
            return;
        }
        for i in start..words.len() {
            for c in 1..=max_coeff {
                cur.push((words[i].clone(), c));
                go(words, i + 1, left - 1, max_coeff, cur, out);
                cur.pop();
            }
        }
    }
    go(&words, 0, max_support, max_coeff, &mut Vec::new(), &mut out);
    out
}

/// `p ∼ q ⇔ φ(p) = φ(q)` over every pair from [`all_polynomials`], with `∼`
/// decided by the brute-force search alone.
pub fn collapse_exhaustive(
    s: &FiniteSemiring,
    o: &PartialOrder,
    max_support: usize,
    max_coeff: u64,
    max_len: usize,
) -> Result<CheckReport> {
    require_ordered(s, o)?;
    let polys = all_polynomials(s.size(), max_support, max_coeff, max_len);
    let images: Vec<BTreeSet<usize>> = polys.iter().map(|p| below_images(p, s)).collect();
    let phis: Vec<usize> = polys
        .iter()
        .map(|p| evaluate_phi(p, s))
        .collect::<Result<_>>()?;
    let mut r = CheckReport::new();
    for i in 0..polys.len() {
        for j in 0..polys.len() {
            let sim = dominated(o, &images[i], &images[j]) && dominated(o, &images[j], &images[i]);
            r.record(sim == (phis[i] == phis[j]), "collapse", || {
                vec![
                    polys[i].display(s).to_string(),
                    polys[j].display(s).to_string(),
                ]
            });
        }
    }
    Ok(r)
}

/// `S` with order `o` and `Σ f` the greatest finite subsum of `f`. No checks.
pub fn completion_of_finite_unchecked(
    base: FiniteSemiring,
    order: PartialOrder,
    name: String,
) -> FiniteSigma {
    FiniteSigma {
        name,
        base,
        order: Some(order),
        rule: SigmaRule::SupOfFiniteSubsums,
    }
}

/// The completion of a finite ordered semiring and the reports that
/// certify it.
#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub semiring: FiniteSigma,
    /// Image of each carrier element; the identity for finite carriers.
    pub embedding: Vec<usize>,
    /// Σ axioms, d-completeness, finitarity and uniqueness of `Σ`.
    pub finitary_report: CheckReport,
}

/// `Σ` axioms, d-completeness on the sequence battery and finitarity on the
/// family battery, merged into one report.
pub fn completeness_report<C: Complete + ?Sized>(
    c: &C,
    cfg: &BatteryConfig,
) -> Result<CheckReport> {
    let mut r = check_sigma_axioms(c, cfg)?;
    let d = is_d_complete(c, &sequence_battery(c, cfg));
    if let Some(w) = &d.witness {
        r.push(
            "d-completeness",
            vec![
                sequence_label(c, &w.sequence),
                c.label(&w.partial_sum),
                c.label(&w.sigma),
            ],
        );
    }
    r.merge(unique_finitary_sigma(c, &family_battery(c, cfg))?);
    Ok(r)
}

/// Completes `s` under `o`. Refuses unorderable `s` with the absorption
/// witness and orders that are not compatible.
pub fn completion_of_finite(
    s: &FiniteSemiring,
    o: &PartialOrder,
    name: &str,
    cfg: &BatteryConfig,
) -> Result<CompletionResult> {
    let ord = is_orderable(s)?;
    if let Some(e) = ord.refusal(s) {
        return Err(e);
    }
    require_ordered(s, o)?;
    let semiring = completion_of_finite_unchecked(s.clone(), o.clone(), name.to_string());
    let finitary_report = completeness_report(&semiring, cfg)?;
    Ok(CompletionResult {
        embedding: s.indices().collect(),
        semiring,
        finitary_report,
    })
}

/// Recomputes `Σ f` as the supremum of the finite subsums of `f` and
/// compares it with `t`'s own `Σ`. Law name: `finitary-sigma`.
pub fn unique_finitary_sigma<C: Complete + ?Sized>(
    t: &C,
    fams: &[CardinalFamily<C::Elem>],
) -> Result<CheckReport> {
    if !t.has_order() {
        return Err(Error::MissingOrder);
    }
    let mut r = CheckReport::new();
    for f in fams {
        let sup = finite_subsums_sup(t, f)?;
        let sigma = t.sigma(f);
        r.record(sup.sup() == Some(&sigma), "finitary-sigma", || {
            vec![
                family_label(t, f),
                t.label(&sigma),
                match sup.sup() {
                    Some(x) => t.label(x),
                    None => "no supremum".into(),
                },
            ]
        });
    }
    Ok(r)
}

/// Checks that `f: S̄ → T` preserves `Σ` on the family battery, after
/// verifying that `T` is finitary and that `f` is an embedding (injective,
/// preserving `0`, `1`, `+`, `·` and the order). The extension is unique
/// because it is fixed on the carrier.
pub fn universal_property_check<C: Complete + ?Sized>(
    s: &FiniteSigma,
    t: &C,
    f: &[C::Elem],
    cfg: &BatteryConfig,
) -> Result<CheckReport> {
    let pre = |m: String| Err(Error::Precondition(m));
    if !t.has_order() {
        return Err(Error::MissingOrder);
    }
    let uniq = unique_finitary_sigma(t, &family_battery(t, cfg))?;
    if let Some(v) = uniq.first() {
        return pre(format!("target is not finitary: {v}"));
    }
    let n = s.base.size();
    if f.len() != n {
        return pre(format!("map has {} images for {n} elements", f.len()));
    }
    let distinct: BTreeSet<&C::Elem> = f.iter().collect();
    if distinct.len() != n {
        return pre("map is not injective".into());
    }
    if f[s.zero()] != t.zero() || f[s.one()] != t.one() {
        return pre("map does not preserve 0 and 1".into());
    }
    for a in 0..n {
        for b in 0..n {
            let ok_add = f[s.add(&a, &b)] == t.add(&f[a], &f[b]);
            let ok_mul = f[s.mul(&a, &b)] == t.mul(&f[a], &f[b]);
            let ok_ord = !s.leq(&a, &b).unwrap_or(false) || t.leq(&f[a], &f[b]) == Some(true);
            if !(ok_add && ok_mul && ok_ord) {
                let what = if !ok_add {
                    "+"
                } else if !ok_mul {
                    "·"
                } else {
                    "the order"
                };
                return pre(format!(
                    "map does not preserve {what} at ({}, {})",
                    s.label(&a),
                    s.label(&b)
                ));
            }
        }
    }
    let mut r = CheckReport::new();
    for g in family_battery(s, cfg) {
        let lhs = f[s.sigma(&g)].clone();
        let rhs = t.sigma(&g.map(|a| f[*a].clone()));
        r.record(lhs == rhs, "sigma-preserved", || {
            vec![family_label(s, &g), t.label(&lhs), t.label(&rhs)]
        });
    }
    Ok(r)
}

/// Why no complete semiring containing `ℕ` maps `Σ`-preservingly into both
/// `ℕ^∞` and the four-valued semiring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoUniversalDemo {
    pub nat_infinity_lambda1: Cardinal,
    pub four_valued_lambda1: Cardinal,
    /// `Σ{1 ↦ ℵ₀}` and `Σ{1 ↦ uncountable}` in `ℕ^∞`.
    pub nat_infinity_sums: (String, String),
    /// The same sums in the four-valued semiring.
    pub four_valued_sums: (String, String),
}

impl NoUniversalDemo {
    /// The sums coincide in `ℕ^∞` and differ in the four-valued semiring.
    pub fn obstructs(&self) -> bool {
        self.nat_infinity_sums.0 == self.nat_infinity_sums.1
            && self.four_valued_sums.0 != self.four_valued_sums.1
    }

    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("λ₁(nat-infinity) = {}", self.nat_infinity_lambda1),
            format!("λ₁(four-valued) = {}", self.four_valued_lambda1),
            format!(
                "nat-infinity: Σ{{1 ↦ aleph0}} = {}, Σ{{1 ↦ uncountable}} = {}",
                self.nat_infinity_sums.0, self.nat_infinity_sums.1
            ),
            format!(
                "four-valued: Σ{{1 ↦ aleph0}} = {}, Σ{{1 ↦ uncountable}} = {}",
                self.four_valued_sums.0, self.four_valued_sums.1
            ),
        ]
    }
}

pub fn no_universal_complete_demo() -> NoUniversalDemo {
    fn sums<C: Complete>(c: &C) -> (String, String) {
        let at = |k| c.label(&c.sigma(&CardinalFamily::singleton(c.one(), k)));
        (at(Cardinal::Aleph0), at(Cardinal::Uncountable))
    }
    let n = NatInfinity;
    let c = four_valued();
    let bound = CardinalityBound::default();
    NoUniversalDemo {
        nat_infinity_lambda1: characteristic_cardinality(&n, bound).lambda1,
        four_valued_lambda1: characteristic_cardinality(&c, bound).lambda1,
        nat_infinity_sums: sums(&n),
        four_valued_sums: sums(&c),
    }
}

/// The completion of `ℕ`, checked symbolically: `ℕ^∞` is finitary on the
/// family battery, `ℕ` sits inside it as the finite elements, and sums of
/// infinitely many nonzero naturals are `∞`.
#[derive(Debug, Clone, Serialize)]
pub struct NatCompletion {
    pub completion: String,
    pub report: CheckReport,
    /// `Σ{1 ↦ κ}` for the classes examined.
    pub sums_of_one: Vec<(String, String)>,
}

pub fn nat_completion(cfg: &BatteryConfig) -> Result<NatCompletion> {
    let n = NatInfinity;
    let mut report = completeness_report(&n, cfg)?;
    // the embedding n ↦ n preserves + and · on a sample of naturals
    for a in 0..6u64 {
        for b in 0..6u64 {
            let (x, y) = (NInf::fin(a), NInf::fin(b));
            report.record(n.add(&x, &y) == NInf::fin(a + b), "embedding-add", || {
                vec![a.to_string(), b.to_string()]
            });
            report.record(n.mul(&x, &y) == NInf::fin(a * b), "embedding-mul", || {
                vec![a.to_string(), b.to_string()]
            });
        }
    }
    let sums_of_one = Cardinal::classes(3)
        .into_iter()
        .map(|k| {
            let v = n.sigma(&CardinalFamily::singleton(NInf::one(), k));
            (k.to_string(), n.label(&v))
        })
        .collect();
    Ok(NatCompletion {
        completion: "nat-infinity".into(),
        report,
        sums_of_one,
    })
}
