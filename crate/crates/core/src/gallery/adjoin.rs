use super::{FiniteSigma, SigmaRule};
use crate::algebra::{
    check_semiring_axioms, is_zero_sum_free, natural_quasiorder, FiniteSemiring, Semiring,
};
use crate::cardinal::{Cardinal, CardinalFamily};
use crate::complete::{family_label, Complete};
use crate::error::{Error, Result};

/// `S ∪ {∞}` for a zero-sum-free `S`. `∞` absorbs under `+`; `0·∞ = ∞·0 =
/// 0` and `x·∞ = ∞·x = ∞` otherwise. `Σ f` is `∞` when `f` holds `∞` or
/// infinitely many nonzero terms, and the finite fold otherwise.
///
/// The natural order is attached when it is antisymmetric.
pub fn adjoin_infinity(s: &FiniteSemiring) -> Result<FiniteSigma> {
    let zsf = is_zero_sum_free(s);
    if let Some((x, y)) = zsf.witness {
        return Err(Error::NotZeroSumFree {
            x: s.label(&x),
            y: s.label(&y),
        });
    }
    let n = s.size();
    let inf = n;
    let z = s.zero_index();
    let mut labels = s.labels().to_vec();
    let mut top = "∞".to_string();
    while labels.contains(&top) {
        top.push('\'');
    }
    labels.push(top);
    let base = FiniteSemiring::from_fn(
        labels,
        z,
        s.one_index(),
        |a, b| {
            if a == inf || b == inf {
                inf
            } else {
                s.plus(a, b)
            }
        },
        |a, b| {
            if a == z || b == z {
                z
            } else if a == inf || b == inf {
                inf
            } else {
                s.times_table(a, b)
            }
        },
    )?;
    let scale: Vec<usize> = (0..=n).map(|a| if a == z { z } else { inf }).collect();
    let order = natural_quasiorder(&base).into_partial_order();
    Ok(FiniteSigma {
        name: "adjoin-inf".into(),
        base,
        order,
        rule: SigmaRule::Scaled {
            aleph0: scale.clone(),
            uncountable: scale,
        },
    })
}

/// An instance where `x·Σf != Σ(x·f)` (or the right-handed version) in an
/// `adjoin_infinity` extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityWitness {
    pub base: FiniteSemiring,
    pub extended: FiniteSigma,
    pub x: usize,
    pub family: CardinalFamily<usize>,
    pub left_handed: bool,
    /// `x·Σf` (or `Σf·x`).
    pub product_of_sum: usize,
    /// `Σ(x·f)` (or `Σ(f·x)`).
    pub sum_of_products: usize,
    /// Whether the extension itself satisfies the finite semiring laws.
    pub extension_is_semiring: bool,
}

impl DistributivityWitness {
    /// Re-evaluates both sides; true when they still differ.
    pub fn replay(&self) -> bool {
        let t = &self.extended;
        let total = t.sigma(&self.family);
        let (lhs, rhs) = if self.left_handed {
            (
                t.mul(&self.x, &total),
                t.sigma(&self.family.map(|e| t.mul(&self.x, e))),
            )
        } else {
            (
                t.mul(&total, &self.x),
                t.sigma(&self.family.map(|e| t.mul(e, &self.x))),
            )
        };
        lhs == self.product_of_sum && rhs == self.sum_of_products && lhs != rhs
    }

    pub fn describe(&self) -> String {
        let t = &self.extended;
        let (x, f) = (t.label(&self.x), family_label(t, &self.family));
        let (l, r) = (
            t.label(&self.product_of_sum),
            t.label(&self.sum_of_products),
        );
        if self.left_handed {
            format!("{x}·Σ{f} = {l} but Σ({x}·{f}) = {r}")
        } else {
            format!("Σ{f}·{x} = {l} but Σ({f}·{x}) = {r}")
        }
    }
}

/// Scans the zero-sum-free members of `pool` in order, and for each one the
/// elements `x` and the families `{a ↦ ℵ₀}`, `{a ↦ uncountable}`, `{a ↦ 1}`
/// in index order; returns the first infinite-distributivity failure.
pub fn search_distributivity_violation<I>(pool: I) -> Option<DistributivityWitness>
where
    I: IntoIterator<Item = FiniteSemiring>,
{
    for s in pool {
        let Ok(t) = adjoin_infinity(&s) else { continue };
        let n = t.base.size();
        let mut families = Vec::new();
        for k in [Cardinal::Aleph0, Cardinal::Uncountable, Cardinal::ONE] {
            for a in 0..n {
                families.push(CardinalFamily::singleton(a, k));
            }
        }
        for x in 0..n {
            for f in &families {
                let total = t.sigma(f);
                for left_handed in [true, false] {
                    let (lhs, rhs) = if left_handed {
                        (t.mul(&x, &total), t.sigma(&f.map(|e| t.mul(&x, e))))
                    } else {
                        (t.mul(&total, &x), t.sigma(&f.map(|e| t.mul(e, &x))))
                    };
                    if lhs != rhs {
                        return Some(DistributivityWitness {
                            extension_is_semiring: check_semiring_axioms(&t.base).passed,
                            base: s,
                            extended: t,
                            x,
                            family: f.clone(),
                            left_handed,
                            product_of_sum: lhs,
                            sum_of_products: rhs,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::small::{boolean, nat_desk, xor};
    use crate::algebra::{enumerate_semirings, PartialOrder};

    #[test]
    fn boolean_plus_infinity_is_the_three_chain() {
        let t = adjoin_infinity(&boolean()).unwrap();
        assert_eq!(t.base.labels(), ["0", "1", "∞"]);
        assert_eq!(t.order, Some(PartialOrder::chain(3)));
        assert!(check_semiring_axioms(&t.base).passed);
        let f = CardinalFamily::singleton(1, Cardinal::Aleph0);
        assert_eq!(t.sigma(&f), 2);
    }

    #[test]
    fn extension_keeps_the_finite_part() {
        let s = nat_desk(3);
        let t = adjoin_infinity(&s).unwrap();
        for a in s.indices() {
            for b in s.indices() {
                assert_eq!(t.add(&a, &b), s.plus(a, b));
                assert_eq!(t.mul(&a, &b), s.times_table(a, b));
            }
        }
    }

    #[test]
    fn refuses_sums_to_zero() {
        assert!(matches!(
            adjoin_infinity(&xor()),
            Err(Error::NotZeroSumFree { .. })
        ));
    }

    #[test]
    fn no_violation_without_zero_divisors() {
        assert_eq!(
            search_distributivity_violation([boolean(), nat_desk(2), nat_desk(4)]),
            None
        );
    }

    #[test]
    fn zero_divisors_give_a_violation() {
        let w = search_distributivity_violation(enumerate_semirings(3).unwrap())
            .expect("a size-3 zero-sum-free semiring with zero divisors exists");
        assert!(w.replay());
        // x is a zero divisor killing the summand: x·∞ = ∞ but Σ of zeros is 0
        let t = &w.extended;
        let (&a, k) = w.family.iter().next().unwrap();
        assert!(k.is_infinite());
        let killed = if w.left_handed {
            t.mul(&w.x, &a)
        } else {
            t.mul(&a, &w.x)
        };
        assert_eq!(killed, t.zero());
        assert_eq!(w.sum_of_products, t.zero());
        assert!(!w.extension_is_semiring);
    }
}
