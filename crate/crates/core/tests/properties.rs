//! Algebraic invariants of polynomials, series, `φ` and the congruence.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semicomp::complete::BatteryConfig;
use semicomp::completion::{congruence, random_polynomial, sim_congruence_battery, PolyBattery};
use semicomp::gallery::{boolean, three_valued, NInf, NatInfinity};
use semicomp::series::{
    embed_e, evaluate_phi, series_d_complete_check, Polynomial, TruncatedSeries, Word,
};
use semicomp::{enumerate_semirings, is_orderable, natural_quasiorder, FiniteSemiring};
use std::collections::BTreeMap;

fn small_semiring() -> impl Strategy<Value = FiniteSemiring> {
    let all: Vec<FiniteSemiring> = (1..=3)
        .flat_map(|n| enumerate_semirings(n).unwrap())
        .collect();
    proptest::sample::select(all)
}

fn poly(n: usize, max_support: usize, max_len: usize) -> impl Strategy<Value = Polynomial> {
    let word = proptest::collection::vec(0..n, 0..=max_len).prop_map(Word);
    proptest::collection::vec((word, 1u64..4), 0..=max_support).prop_map(Polynomial::from_terms)
}

fn semiring_and_polys(k: usize) -> impl Strategy<Value = (FiniteSemiring, Vec<Polynomial>)> {
    small_semiring().prop_flat_map(move |s| {
        let n = s.size();
        (Just(s), proptest::collection::vec(poly(n, 4, 3), k))
    })
}

/// Cauchy product straight from the definition: for every word up to the
/// combined length, sum over its factorizations.
fn cauchy_oracle(p: &Polynomial, q: &Polynomial, letters: usize) -> Polynomial {
    let max = p.max_word_len() + q.max_word_len();
    Polynomial::from_terms(Word::all_up_to(letters, max).into_iter().map(|w| {
        let c: u64 = w
            .factorizations()
            .map(|(u, v)| p.coeff(&u) * q.coeff(&v))
            .sum();
        (w, c)
    }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_is_a_homomorphism((s, ps) in semiring_and_polys(2)) {
        let (p, q) = (&ps[0], &ps[1]);
        let phi = |x: &Polynomial| evaluate_phi(x, &s).unwrap();
        prop_assert_eq!(phi(&p.add(q)), s.plus(phi(p), phi(q)));
        prop_assert_eq!(phi(&p.cauchy(q)), s.times_table(phi(p), phi(q)));
        prop_assert_eq!(phi(&Polynomial::zero()), s.zero_index());
        prop_assert_eq!(phi(&Polynomial::unit()), s.one_index());
    }

    #[test]
    fn cauchy_product_laws((s, ps) in semiring_and_polys(3)) {
        let n = s.size();
        let (p, q, r) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(p.cauchy(q), cauchy_oracle(p, q, n));
        prop_assert_eq!(p.cauchy(q).cauchy(r), p.cauchy(&q.cauchy(r)));
        prop_assert_eq!(p.cauchy(&q.add(r)), p.cauchy(q).add(&p.cauchy(r)));
        prop_assert_eq!(q.add(r).cauchy(p), q.cauchy(p).add(&r.cauchy(p)));
        prop_assert_eq!(p.cauchy(&Polynomial::unit()), p.clone());
        prop_assert_eq!(Polynomial::unit().cauchy(p), p.clone());
        prop_assert!(p.cauchy(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn phi_is_monotone((s, ps) in semiring_and_polys(2)) {
        let q = natural_quasiorder(&s);
        let (p, extra) = (&ps[0], &ps[1]);
        let bigger = p.add(extra);
        prop_assert!(p.leq(&bigger));
        prop_assert!(q.leq(evaluate_phi(p, &s).unwrap(), evaluate_phi(&bigger, &s).unwrap()));
    }

    #[test]
    fn enumerate_below_is_exactly_the_down_set(p in poly(3, 3, 2)) {
        let below = p.enumerate_below();
        prop_assert_eq!(below.len() as u64, p.count_below());
        prop_assert!(below.iter().all(|x| x.leq(&p)));
        prop_assert_eq!(below.iter().collect::<std::collections::BTreeSet<_>>().len(), below.len());
        prop_assert_eq!(below.first(), Some(&Polynomial::zero()));
        prop_assert_eq!(below.last(), Some(&p));
    }

    #[test]
    fn truncation_is_a_congruence((s, ps) in semiring_and_polys(2), l in 0usize..3) {
        let _ = s;
        let big = ps.iter().map(|p| p.max_word_len()).max().unwrap_or(0).max(l + 1);
        let r = TruncatedSeries::from_polynomial(&ps[0], big).unwrap();
        let t = TruncatedSeries::from_polynomial(&ps[1], big).unwrap();
        prop_assert_eq!(
            r.cauchy(&t).unwrap().truncate(l),
            r.truncate(l).cauchy(&t.truncate(l)).unwrap()
        );
        prop_assert_eq!(r.add(&t).unwrap().truncate(l), r.truncate(l).add(&t.truncate(l)).unwrap());
    }

    #[test]
    fn polynomials_embed_into_series((s, ps) in semiring_and_polys(2)) {
        let _ = s;
        let (p, q) = (&ps[0], &ps[1]);
        let l = p.cauchy(q).max_word_len().max(p.max_word_len()).max(q.max_word_len());
        let e = |x: &Polynomial| TruncatedSeries::from_polynomial(x, l).unwrap();
        prop_assert_eq!(e(&p.add(q)), e(p).add(&e(q)).unwrap());
        prop_assert_eq!(e(&p.cauchy(q)), e(p).cauchy(&e(q)).unwrap());
        for (w, c) in p.terms() {
            prop_assert_eq!(e(p).coeff(w), NInf::fin(c));
        }
    }

    #[test]
    fn series_order_is_the_natural_order(
        a in proptest::collection::vec(proptest::option::of(0u64..4), 4),
        b in proptest::collection::vec(proptest::option::of(0u64..4), 4),
    ) {
        let words = Word::all_up_to(1, 3);
        let mk = |v: &[Option<u64>]| {
            let mut r = TruncatedSeries::zero(3);
            for (w, c) in words.iter().zip(v) {
                r.add_term(w.clone(), c.map_or(NInf::Inf, NInf::fin)).unwrap();
            }
            r
        };
        let (x, y) = (mk(&a), mk(&b));
        let diff = x.difference(&y);
        prop_assert_eq!(x.leq(&y), diff.is_some());
        if let Some(t) = diff {
            prop_assert_eq!(x.add(&t).unwrap(), y);
        }
    }
}

#[test]
fn phi_of_e_is_the_identity() {
    for s in (1..=3).flat_map(|n| enumerate_semirings(n).unwrap()) {
        let mut seen = BTreeMap::new();
        for a in s.indices() {
            let e = embed_e(&s, a).unwrap();
            assert_eq!(evaluate_phi(&e, &s).unwrap(), a);
            assert!(seen.insert(e, a).is_none());
        }
    }
}

#[test]
fn cauchy_associativity_on_seeded_triples() {
    let s = semicomp::algebra::small::nat_desk(3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_polynomial(&mut rng, &s, 4, 3, 3);
        let q = random_polynomial(&mut rng, &s, 4, 3, 3);
        let r = random_polynomial(&mut rng, &s, 4, 3, 3);
        assert_eq!(p.cauchy(&q).cauchy(&r), p.cauchy(&q.cauchy(&r)));
    }
}

#[test]
fn sim_battery_on_every_ordered_small_semiring() {
    for s in (1..=3).flat_map(|n| enumerate_semirings(n).unwrap()) {
        let ord = is_orderable(&s).unwrap();
        let Some(o) = ord.order() else { continue };
        let r = sim_congruence_battery(&s, o, &PolyBattery::with_seed(5)).unwrap();
        assert!(r.passed, "{r}");
    }
}

#[test]
fn boolean_sim_example() {
    let s = semicomp::algebra::small::boolean();
    let o = semicomp::PartialOrder::chain(2);
    let one = Polynomial::monomial(Word::letter(1), 1);
    let two = Polynomial::monomial(Word::letter(1), 2);
    let v = congruence(&one, &two, &s, &o).unwrap();
    assert!(v.lesssim_forward && v.lesssim_backward && v.witness.is_none());
}

#[test]
fn series_d_completeness_lifts_the_base() {
    let cfg = BatteryConfig::default();
    assert!(series_d_complete_check(&NatInfinity, 1, 2, &cfg).passed);
    assert!(series_d_complete_check(&boolean(), 2, 2, &cfg).passed);
    let r = series_d_complete_check(&three_valued(), 1, 2, &cfg);
    assert!(!r.passed);
    let w = r.first().unwrap();
    assert_eq!(w.witness[0], "[](finite·ε)^ω");
    assert_eq!(w.witness[2], "infinite·ε");
}
