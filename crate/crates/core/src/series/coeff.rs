use super::Word;
use crate::algebra::{Carrier, Semiring};
use crate::cardinal::CardinalFamily;
use crate::cardinal::OmegaSequence;
use crate::complete::{is_d_complete, sequence_battery, sequence_label, BatteryConfig, Complete};
use crate::report::CheckReport;

/// Power series over a `k`-letter alphabet, truncated at `max_len`, with
/// coefficients in a complete semiring. `Σ` acts coefficientwise.
#[derive(Debug, Clone)]
pub struct SeriesSemiring<C: Complete> {
    pub coeff: C,
    words: Vec<Word>,
    /// `concat[u][v]`: index of `u·v`, or none if it is too long.
    concat: Vec<Vec<Option<usize>>>,
    letters: usize,
}

impl<C: Complete> SeriesSemiring<C> {
    pub fn new(coeff: C, letters: usize, max_len: usize) -> Self {
        let words = Word::all_up_to(letters, max_len);
        let concat = words
            .iter()
            .map(|u| {
                words
                    .iter()
                    .map(|v| {
                        let uv = u.concat(v);
                        words.iter().position(|x| *x == uv)
                    })
                    .collect()
            })
            .collect();
        SeriesSemiring {
            coeff,
            words,
            concat,
            letters,
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// `c` at word index `w`, zero elsewhere.
    pub fn monomial(&self, c: C::Elem, w: usize) -> Vec<C::Elem> {
        let mut v = vec![self.coeff.zero(); self.words.len()];
        v[w] = c;
        v
    }

    fn word_name(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".into();
        }
        w.0.iter()
            .map(|&a| {
                if self.letters <= 26 {
                    ((b'a' + a as u8) as char).to_string()
                } else {
                    a.to_string()
                }
            })
            .collect()
    }
}

impl<C: Complete> Semiring for SeriesSemiring<C> {
    type Elem = Vec<C::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.coeff.zero(); self.words.len()]
    }
    fn one(&self) -> Self::Elem {
        self.monomial(self.coeff.one(), 0)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.coeff.add(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        for (u, row) in self.concat.iter().enumerate() {
            for (v, uv) in row.iter().enumerate() {
                if let Some(w) = uv {
                    let p = self.coeff.mul(&a[u], &b[v]);
                    out[*w] = self.coeff.add(&out[*w], &p);
                }
            }
        }
        out
    }
    fn label(&self, a: &Self::Elem) -> String {
        let z = self.coeff.zero();
        let terms: Vec<String> = a
            .iter()
            .zip(&self.words)
            .filter(|(c, _)| **c != z)
            .map(|(c, w)| format!("{}·{}", self.coeff.label(c), self.word_name(w)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
    /// Zero, one, and the monomials over the coefficient sample.
    fn carrier(&self) -> Carrier<Self::Elem> {
        let z = self.coeff.zero();
        let mut out = vec![self.zero(), self.one()];
        for c in self.coeff.carrier().elements() {
            if *c == z {
                continue;
            }
            for w in 0..self.words.len() {
                let m = self.monomial(c.clone(), w);
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        Carrier::Sample(out)
    }
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> Option<bool> {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.coeff.leq(x, y))
            .try_fold(true, |acc, r| r.map(|r| acc && r))
    }
}

impl<C: Complete> Complete for SeriesSemiring<C> {
    fn sigma(&self, f: &CardinalFamily<Self::Elem>) -> Self::Elem {
        (0..self.words.len())
            .map(|i| self.coeff.sigma(&f.map(|s| s[i].clone())))
            .collect()
    }
}

/// d-completeness of the truncated series semiring over `coeff`: every base
/// sequence lifted to each word (in word order, `ε` first), then a random
/// battery of series-valued sequences.
pub fn series_d_complete_check<C: Complete + Clone>(
    coeff: &C,
    letters: usize,
    max_len: usize,
    cfg: &BatteryConfig,
) -> CheckReport {
    let series = SeriesSemiring::new(coeff.clone(), letters, max_len);
    let mut seqs: Vec<OmegaSequence<Vec<C::Elem>>> = Vec::new();
    for q in sequence_battery(coeff, cfg) {
        for w in 0..series.words.len() {
            seqs.push(q.map(|c| series.monomial(c.clone(), w)));
        }
    }
    seqs.extend(sequence_battery(&series, cfg));
    let d = is_d_complete(&series, &seqs);
    let mut r = CheckReport::new();
    r.checked = d.checked;
    if let Some(w) = d.witness {
        r.push(
            "d-completeness",
            vec![
                sequence_label(&series, &w.sequence),
                series.label(&w.partial_sum),
                series.label(&w.sigma),
            ],
        );
    }
    r
}
