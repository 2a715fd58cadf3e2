use super::{word_text, Polynomial, Word};
use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use crate::gallery::NInf;
use std::collections::BTreeMap;
use std::fmt;

/// A power series with `ℕ^∞` coefficients on the words of length
/// `<= max_len`. Longer words are sent to a discarded ideal: a product of
/// words is long exactly when every extension of it is, so truncation is a
/// congruence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    max_len: usize,
    coeffs: BTreeMap<Word, NInf>,
}

impl TruncatedSeries {
    pub fn zero(max_len: usize) -> Self {
        TruncatedSeries {
            max_len,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(max_len: usize) -> Self {
        let mut s = Self::zero(max_len);
        s.coeffs.insert(Word::empty(), NInf::one());
        s
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn coeff(&self, w: &Word) -> NInf {
        self.coeffs.get(w).cloned().unwrap_or_else(NInf::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &NInf)> {
        self.coeffs.iter()
    }

    /// Adds `c` to the coefficient of `w`.
    pub fn add_term(&mut self, w: Word, c: NInf) -> Result<()> {
        if w.len() > self.max_len {
            return Err(Error::Precondition(format!(
                "word of length {} exceeds maxlen={}",
                w.len(),
                self.max_len
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(w).or_insert_with(NInf::zero);
        *slot = slot.add(&c);
        Ok(())
    }

    /// Coefficient-preserving image of a polynomial; needs
    /// `max_len >= p.max_word_len()`.
    pub fn from_polynomial(p: &Polynomial, max_len: usize) -> Result<Self> {
        let mut s = Self::zero(max_len);
        for (w, c) in p.terms() {
            s.add_term(w.clone(), NInf::fin(c))?;
        }
        Ok(s)
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.max_len != other.max_len {
            return Err(Error::Precondition(format!(
                "series truncated at {} and {}",
                self.max_len, other.max_len
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        let mut s = self.clone();
        for (w, c) in other.terms() {
            s.add_term(w.clone(), c.clone())?;
        }
        Ok(s)
    }

    /// Truncated Cauchy product; factorizations landing beyond `max_len`
    /// are dropped.
    pub fn cauchy(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        let mut s = Self::zero(self.max_len);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                if u.len() + v.len() <= self.max_len {
                    s.add_term(u.concat(v), a.mul(b))?;
                }
            }
        }
        Ok(s)
    }

    /// Drops the words longer than `max_len`.
    pub fn truncate(&self, max_len: usize) -> Self {
        TruncatedSeries {
            max_len,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficientwise `<=`.
    pub fn leq(&self, other: &Self) -> bool {
        self.terms().all(|(w, c)| *c <= other.coeff(w))
    }

    /// Solves `self + t = other` coefficientwise.
    pub fn difference(&self, other: &Self) -> Option<Self> {
        let mut t = Self::zero(self.max_len);
        let words: std::collections::BTreeSet<&Word> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        for w in words {
            let d = self.coeff(w).solve_add(&other.coeff(w))?;
            t.add_term(w.clone(), d).ok()?;
        }
        Some(t)
    }

    pub fn has_infinite(&self) -> bool {
        self.coeffs.values().any(|c| *c == NInf::Inf)
    }

    /// The polynomial with every `∞` coefficient replaced by `cap`.
    pub fn cap(&self, cap: u64) -> Polynomial {
        Polynomial::from_terms(self.terms().map(|(w, c)| {
            let v = match c {
                NInf::Inf => cap,
                NInf::Fin(n) => u64::try_from(n).expect("finite coefficient fits u64"),
            };
            (w.clone(), v)
        }))
    }

    pub fn display<'a>(&'a self, s: &'a FiniteSemiring) -> impl fmt::Display + 'a {
        SeriesDisplay { t: self, s }
    }
}

struct SeriesDisplay<'a> {
    t: &'a TruncatedSeries,
    s: &'a FiniteSemiring,
}

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "maxlen={}; ", self.t.max_len)?;
        if self.t.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .t
            .terms()
            .map(|(w, c)| {
                let c = match c {
                    NInf::Inf => "inf".to_string(),
                    NInf::Fin(n) => n.to_string(),
                };
                format!("{c}*{}", word_text(w, self.s))
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[usize]) -> Word {
        Word(xs.to_vec())
    }

    #[test]
    fn zero_is_additive_identity() {
        let mut r = TruncatedSeries::zero(2);
        r.add_term(w(&[0]), NInf::fin(3)).unwrap();
        r.add_term(w(&[0, 1]), NInf::Inf).unwrap();
        assert_eq!(r.add(&TruncatedSeries::zero(2)).unwrap(), r);
        assert!(r.add(&TruncatedSeries::zero(3)).is_err());
    }

    #[test]
    fn infinite_constant_term_squares_to_itself() {
        let mut r = TruncatedSeries::zero(2);
        r.add_term(Word::empty(), NInf::Inf).unwrap();
        let sq = r.cauchy(&r).unwrap();
        assert_eq!(sq.coeff(&Word::empty()), NInf::Inf);
        assert_eq!(sq, r);
    }

    #[test]
    fn products_beyond_the_bound_are_discarded() {
        let mut a = TruncatedSeries::zero(1);
        a.add_term(w(&[0]), NInf::one()).unwrap();
        assert_eq!(a.cauchy(&a).unwrap(), TruncatedSeries::zero(1));
        assert!(a.clone().add_term(w(&[0, 0]), NInf::one()).is_err());
    }

    #[test]
    fn difference_exists_iff_leq() {
        let mut a = TruncatedSeries::zero(1);
        a.add_term(w(&[0]), NInf::fin(2)).unwrap();
        let mut b = TruncatedSeries::zero(1);
        b.add_term(w(&[0]), NInf::Inf).unwrap();
        assert!(a.leq(&b) && a.difference(&b).is_some());
        assert!(!b.leq(&a) && b.difference(&a).is_none());
    }
}
