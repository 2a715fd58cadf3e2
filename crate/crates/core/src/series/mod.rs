//! Words over a semiring alphabet, `ℕ`-polynomials, length-truncated
//! `ℕ^∞`-series, the embedding `e` and the evaluation map `φ`.

mod coeff;
mod truncated;

pub use coeff::{series_d_complete_check, SeriesSemiring};
pub use truncated::TruncatedSeries;

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A word over the carrier indices of a base semiring. Concatenation is the
/// free-monoid product with the empty word as identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(a: usize) -> Self {
        Word(vec![a])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word([self.0.as_slice(), other.0.as_slice()].concat())
    }

    /// Every split `w = u·v`, `u` growing.
    pub fn factorizations(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
    }

    /// Product of the letters in the base semiring; `1` for the empty word.
    pub fn evaluate(&self, s: &FiniteSemiring) -> Result<usize> {
        self.0.iter().try_fold(s.one_index(), |acc, &a| {
            if a >= s.size() {
                Err(Error::UnknownElement(format!("#{a}")))
            } else {
                Ok(s.times_table(acc, a))
            }
        })
    }

    /// All words of length `<= max_len` over `n` letters, shortest first.
    pub fn all_up_to(n: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| (0..n).map(move |a| w.concat(&Word::letter(a))))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

/// Finitely supported map from words to positive integers: an element of
/// `ℕ⟨S*⟩`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    coeffs: BTreeMap<Word, u64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1·ε`, the multiplicative identity.
    pub fn unit() -> Self {
        Self::monomial(Word::empty(), 1)
    }

    pub fn monomial(w: Word, c: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, u64)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Panics on `u64` overflow of a coefficient.
    pub fn add_term(&mut self, w: Word, c: u64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(w).or_insert(0);
        *slot = slot
            .checked_add(c)
            .expect("polynomial coefficient overflow");
    }

    pub fn coeff(&self, w: &Word) -> u64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, u64)> {
        self.coeffs.iter().map(|(w, c)| (w, *c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_word_len(&self) -> usize {
        self.coeffs.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (w, c) in other.terms() {
            p.add_term(w.clone(), c);
        }
        p
    }

    /// `(p·q)(w) = Σ_{w = uv} p(u)·q(v)`.
    pub fn cauchy(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                p.add_term(
                    u.concat(v),
                    a.checked_mul(b).expect("polynomial coefficient overflow"),
                );
            }
        }
        p
    }

    /// Coefficientwise `<=`.
    pub fn leq(&self, other: &Polynomial) -> bool {
        self.terms().all(|(w, c)| c <= other.coeff(w))
    }

    /// Number of polynomials coefficientwise below this one.
    pub fn count_below(&self) -> u64 {
        self.terms().map(|(_, c)| c + 1).product()
    }

    /// Every polynomial coefficientwise `<= self`, in lexicographic order of
    /// the coefficient vectors over the sorted support (first word most
    /// significant).
    pub fn enumerate_below(&self) -> Vec<Polynomial> {
        let support: Vec<(&Word, u64)> = self.terms().collect();
        let mut out = Vec::with_capacity(self.count_below() as usize);
        let mut digits = vec![0u64; support.len()];
        loop {
            out.push(Polynomial::from_terms(
                support
                    .iter()
                    .zip(&digits)
                    .map(|((w, _), &d)| ((*w).clone(), d)),
            ));
            let mut k = support.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if digits[k] < support[k].1 {
                    digits[k] += 1;
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    /// Renders with element labels, e.g. `2*[a] + 1*[b.c] + 3*[]`.
    pub fn display<'a>(&'a self, s: &'a FiniteSemiring) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, s }
    }
}

struct PolyDisplay<'a> {
    p: &'a Polynomial,
    s: &'a FiniteSemiring,
}

pub(crate) fn word_text(w: &Word, s: &FiniteSemiring) -> String {
    let letters: Vec<String> = w.0.iter().map(|&a| s.labels()[a].clone()).collect();
    format!("[{}]", letters.join("."))
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .p
            .terms()
            .map(|(w, c)| format!("{c}*{}", word_text(w, self.s)))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `e(a)`: the one-letter word `a` with coefficient 1. A map of sets, not a
/// homomorphism: `e(0)` is not the zero polynomial.
pub fn embed_e(s: &FiniteSemiring, a: usize) -> Result<Polynomial> {
    if a >= s.size() {
        return Err(Error::UnknownElement(format!("#{a}")));
    }
    Ok(Polynomial::monomial(Word::letter(a), 1))
}

/// `φ(p)`: sum over the support of `p(w)` copies of the product of the
/// letters of `w`.
pub fn evaluate_phi(p: &Polynomial, s: &FiniteSemiring) -> Result<usize> {
    p.terms().try_fold(s.zero_index(), |acc, (w, c)| {
        let v = w.evaluate(s)?;
        let mut acc = acc;
        for _ in 0..c {
            acc = s.plus(acc, v);
        }
        Ok(acc)
    })
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.add(q)
}

pub fn poly_cauchy(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.cauchy(q)
}
