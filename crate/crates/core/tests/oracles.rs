//! Results cross-checked against independent brute-force implementations
//! written here from the definitions.

use semicomp::algebra::small;
use semicomp::complete::{finite_subsums_sup, BatteryConfig};
use semicomp::completion::{
    completion_of_finite, completion_of_finite_unchecked, unique_finitary_sigma,
    universal_property_check,
};
use semicomp::gallery::{
    four_valued, language, powerset, NInf, NatInfinity, OmegaMinus, OmegaMinusElement,
};
use semicomp::series::{evaluate_phi, Polynomial, Word};
use semicomp::{
    check_ordered_semiring, check_semiring_axioms, enumerate_semirings, is_orderable,
    is_zero_sum_free, natural_quasiorder, search_compatible_order, Cardinal, CardinalFamily,
    Complete, Error, FiniteSemiring, OrderSearch, PartialOrder, Semiring,
};

/// Every semiring law by nested loops over the raw tables.
fn laws_hold(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: usize) -> bool {
    let n = add.len();
    for a in 0..n {
        if add[zero][a] != a || add[a][zero] != a || mul[one][a] != a || mul[a][one] != a {
            return false;
        }
        if mul[zero][a] != zero || mul[a][zero] != zero {
            return false;
        }
        for b in 0..n {
            if add[a][b] != add[b][a] {
                return false;
            }
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]]
                    || mul[mul[a][b]][c] != mul[a][mul[b][c]]
                    || mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
                    || mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]
                {
                    return false;
                }
            }
        }
    }
    true
}

fn all_small() -> Vec<FiniteSemiring> {
    (1..=3)
        .flat_map(|n| enumerate_semirings(n).unwrap())
        .collect()
}

#[test]
fn enumeration_counts_match_an_unpruned_search() {
    // counts from a separate search over all tables with 0 and 1 fixed,
    // without pruning
    let counts: Vec<usize> = (1..=3)
        .map(|n| enumerate_semirings(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 6]);
    let orderable: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_semirings(n)
                .unwrap()
                .iter()
                .filter(|s| is_orderable(s).unwrap().is_orderable())
                .count()
        })
        .collect();
    assert_eq!(orderable, vec![1, 1, 4]);
    let zsf: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_semirings(n)
                .unwrap()
                .iter()
                .filter(|s| is_zero_sum_free(s).holds)
                .count()
        })
        .collect();
    assert_eq!(zsf, vec![1, 1, 5]);
}

#[test]
fn enumerated_tables_pass_an_independent_law_check() {
    for s in all_small() {
        assert!(laws_hold(
            &s.add_table(),
            &s.mul_table(),
            s.zero_index(),
            s.one_index()
        ));
        assert!(check_semiring_axioms(&s).passed);
    }
}

#[test]
fn law_checker_agrees_with_the_oracle_on_perturbed_tables() {
    let mut disagreements = 0;
    let mut failing = 0;
    for s in enumerate_semirings(3).unwrap() {
        for (table, i, j) in
            (0..2).flat_map(|t| (0..3).flat_map(move |i| (0..3).map(move |j| (t, i, j))))
        {
            for v in 0..3 {
                let mut add = s.add_table();
                let mut mul = s.mul_table();
                if table == 0 {
                    add[i][j] = v;
                } else {
                    mul[i][j] = v;
                }
                let expected = laws_hold(&add, &mul, 0, 1);
                let t = FiniteSemiring::new(s.labels().to_vec(), 0, 1, add, mul).unwrap();
                let r = check_semiring_axioms(&t);
                failing += usize::from(!expected);
                disagreements += usize::from(r.passed != expected);
                assert_eq!(r.passed, r.violations.is_empty());
            }
        }
    }
    assert_eq!(disagreements, 0);
    assert!(failing > 0);
}

#[test]
fn commutativity_witness() {
    let t = FiniteSemiring::new(
        vec!["0".into(), "1".into(), "a".into()],
        0,
        1,
        vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
    )
    .unwrap();
    let r = check_semiring_axioms(&t);
    let v = r
        .violations
        .iter()
        .find(|v| v.law == "add-commutativity")
        .unwrap();
    assert_eq!(v.witness, vec!["1".to_string(), "a".to_string()]);
}

#[test]
fn out_of_range_cells_are_structural_errors() {
    let e = FiniteSemiring::new(
        vec!["0".into(), "1".into()],
        0,
        1,
        vec![vec![0, 1], vec![1, 2]],
        vec![vec![0, 0], vec![0, 1]],
    );
    assert!(matches!(e, Err(Error::Structure(_))));
}

/// All partial orders on `n` points compatible with `s`, by scanning every
/// relation as a bitmask.
fn compatible_orders(s: &FiniteSemiring) -> Vec<PartialOrder> {
    let n = s.size();
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n * n)) {
        let rel = |a: usize, b: usize| mask >> (a * n + b) & 1 == 1;
        let reflexive = (0..n).all(|a| rel(a, a));
        let antisym = (0..n).all(|a| (0..n).all(|b| a == b || !(rel(a, b) && rel(b, a))));
        let trans =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))));
        if !(reflexive && antisym && trans) {
            continue;
        }
        let z = s.zero_index();
        let ok = (0..n).all(|a| rel(z, a))
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    !rel(a, b)
                        || (0..n).all(|c| {
                            rel(s.plus(a, c), s.plus(b, c))
                                && rel(s.times_table(a, c), s.times_table(b, c))
                                && rel(s.times_table(c, a), s.times_table(c, b))
                        })
                })
            });
        if ok {
            out.push(PartialOrder::from_fn(n, rel).unwrap());
        }
    }
    out
}

#[test]
fn orderability_matches_a_scan_of_all_relations() {
    for s in all_small() {
        let orders = compatible_orders(&s);
        let ord = is_orderable(&s).unwrap();
        assert_eq!(ord.is_orderable(), !orders.is_empty());
        let q = natural_quasiorder(&s);
        for o in &orders {
            assert!(o.contains(&q));
        }
        match search_compatible_order(&s, 1_000_000) {
            OrderSearch::Found(o) => assert!(orders.contains(&o)),
            OrderSearch::NoneExists { .. } => assert!(orders.is_empty()),
            OrderSearch::Inconclusive { .. } => panic!("budget is ample"),
        }
        if ord.is_orderable() {
            assert!(is_zero_sum_free(&s).holds);
        }
    }
}

#[test]
fn xor_order_search_examines_the_three_posets() {
    assert_eq!(
        search_compatible_order(&small::xor(), 100),
        OrderSearch::NoneExists { examined: 3 }
    );
    assert!(matches!(
        search_compatible_order(&small::nat_desk(3), 2),
        OrderSearch::Inconclusive { examined: 2 }
    ));
}

#[test]
fn natural_quasiorder_of_xor_relates_everything() {
    let q = natural_quasiorder(&small::xor());
    assert!(q.matrix().iter().flatten().all(|&b| b));
    assert_eq!(is_zero_sum_free(&small::xor()).witness, Some((1, 1)));
}

#[test]
fn language_subset_order_is_compatible() {
    let l = language(1, 2).unwrap();
    let n = l.base.size();
    // subsets as bitmasks: inclusion is the bitwise test
    let o = PartialOrder::from_fn(n, |a, b| a & b == a).unwrap();
    assert!(check_ordered_semiring(&l.base, &o).passed);
    for a in 0..n {
        for b in 0..n {
            assert_eq!(l.base.plus(a, b), a | b);
        }
    }
}

#[test]
fn phi_agrees_with_reverse_order_evaluation() {
    for s in all_small() {
        let n = s.size();
        let words = Word::all_up_to(n, 2);
        for (i, u) in words.iter().enumerate() {
            for v in &words[i..] {
                let p = Polynomial::from_terms([(u.clone(), 2), (v.clone(), 1)]);
                // fold the terms right to left, multiplying letters right to left
                let eval = |w: &Word| {
                    w.0.iter()
                        .rev()
                        .fold(s.one_index(), |acc, &a| s.times_table(a, acc))
                };
                let mut expect = s.zero_index();
                for (w, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
                    for _ in 0..c {
                        expect = s.plus(eval(w), expect);
                    }
                }
                assert_eq!(evaluate_phi(&p, &s).unwrap(), expect);
            }
        }
    }
}

/// `Σ` on `ℕ^∞` directly from its rule.
fn nat_inf_sigma(f: &CardinalFamily<NInf>) -> NInf {
    let mut total = 0u64;
    for (a, k) in f.iter() {
        match (a, k) {
            (NInf::Fin(n), _) if n.bits() == 0 => {}
            (NInf::Inf, _) => return NInf::Inf,
            (_, Cardinal::Aleph0 | Cardinal::Uncountable) => return NInf::Inf,
            (NInf::Fin(n), Cardinal::Fin(m)) => total += u64::try_from(n).unwrap() * m,
        }
    }
    NInf::fin(total)
}

#[test]
fn nat_infinity_sigma_matches_its_rule() {
    let cfg = BatteryConfig {
        families: 1000,
        ..BatteryConfig::with_seed(3)
    };
    let n = NatInfinity;
    for f in semicomp::complete::family_battery(&n, &cfg) {
        assert_eq!(n.sigma(&f), nat_inf_sigma(&f));
    }
    let r = semicomp::complete::check_sigma_axioms(&n, &cfg).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn powerset_sigma_is_union() {
    let p = powerset(3).unwrap();
    for f in semicomp::complete::family_battery(&p, &BatteryConfig::default()) {
        let union = f.keys().fold(0usize, |acc, &a| acc | a);
        assert_eq!(p.sigma(&f), union);
        assert_eq!(finite_subsums_sup(&p, &f).unwrap().sup(), Some(&union));
    }
}

#[test]
fn omega_minus_addition_examples() {
    use OmegaMinusElement::*;
    let o = OmegaMinus;
    assert_eq!(o.add(&Fin(3), &InfMinus(2)), Inf);
    assert_eq!(o.add(&Fin(1), &InfMinus(3)), InfMinus(2));
    assert!(o.leq(&InfMinus(3), &InfMinus(2)).unwrap());
    assert!(o.leq(&Fin(1000), &InfMinus(5)).unwrap());
}

#[test]
fn unique_finitary_sigma_controls() {
    let cfg = BatteryConfig::default();
    let n = NatInfinity;
    assert!(
        unique_finitary_sigma(&n, &semicomp::complete::family_battery(&n, &cfg))
            .unwrap()
            .passed
    );
    let p = powerset(3).unwrap();
    assert!(
        unique_finitary_sigma(&p, &semicomp::complete::family_battery(&p, &cfg))
            .unwrap()
            .passed
    );
    let f = four_valued();
    let r = unique_finitary_sigma(&f, &semicomp::complete::family_battery(&f, &cfg)).unwrap();
    assert!(!r.passed);
    assert_eq!(r.first().unwrap().witness[0], "{finite ↦ uncountable}");
}

#[test]
fn completion_of_languages_has_union_sums() {
    let l = language(1, 2).unwrap();
    let c = completion_of_finite(
        &l.base,
        l.order.as_ref().unwrap(),
        "lang",
        &BatteryConfig::default(),
    )
    .unwrap();
    for f in semicomp::complete::family_battery(&l, &BatteryConfig::default()) {
        let union = f.keys().fold(0usize, |acc, &a| acc | a);
        assert_eq!(c.semiring.sigma(&f), union);
    }
}

#[test]
fn universal_property_cases() {
    let cfg = BatteryConfig::default();
    let b =
        completion_of_finite_unchecked(small::boolean(), PartialOrder::chain(2), "boolean".into());
    // 1 ↦ {x}
    let t = powerset(1).unwrap();
    assert!(
        universal_property_check(&b, &t, &[0, 1], &cfg)
            .unwrap()
            .passed
    );
    // 1 ↦ {ε}
    let l2 = language(1, 2).unwrap();
    let eps = l2.base.index_of("{ε}").unwrap();
    assert!(
        universal_property_check(&b, &l2, &[0, eps], &cfg)
            .unwrap()
            .passed
    );
    // inclusion of L=1 languages into L=2 languages is not multiplicative
    let l1 = language(1, 1).unwrap();
    let s1 = completion_of_finite_unchecked(
        l1.base.clone(),
        l1.order.clone().unwrap(),
        "lang:1:1".into(),
    );
    let incl: Vec<usize> = l1
        .base
        .labels()
        .iter()
        .map(|lab| l2.base.index_of(lab).unwrap())
        .collect();
    assert!(matches!(
        universal_property_check(&s1, &l2, &incl, &cfg),
        Err(Error::Precondition(_))
    ));
    // non-finitary target
    assert!(matches!(
        universal_property_check(&b, &four_valued(), &[0, 1], &cfg),
        Err(Error::Precondition(_))
    ));
}
