//! Text and JSON formats: semiring tables, cardinal families, ultimately
//! periodic sequences, polynomials and truncated series.

use crate::algebra::{FiniteSemiring, PartialOrder, QuasiOrder};
use crate::cardinal::{Cardinal, CardinalFamily, OmegaSequence};
use crate::error::{Error, Result};
use crate::gallery::NInf;
use crate::series::{Polynomial, TruncatedSeries, Word};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// The JSON shape of a finite semiring. `order` lists pairs `[i, j]` with
/// `i <= j`; reflexive and transitive closure is taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringDoc {
    pub elements: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
}

/// A parsed semiring document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedSemiring {
    pub semiring: FiniteSemiring,
    pub order: Option<PartialOrder>,
}

impl SemiringDoc {
    pub fn from_semiring(s: &FiniteSemiring, order: Option<&PartialOrder>) -> Self {
        SemiringDoc {
            elements: s.labels().to_vec(),
            zero: s.zero_index(),
            one: s.one_index(),
            add: s.add_table(),
            mul: s.mul_table(),
            order: order.map(|o| o.strict_pairs().into_iter().map(|(a, b)| [a, b]).collect()),
        }
    }

    pub fn load(self) -> Result<LoadedSemiring> {
        let n = self.elements.len();
        let semiring = FiniteSemiring::new(self.elements, self.zero, self.one, self.add, self.mul)?;
        let order = match self.order {
            None => None,
            Some(pairs) => {
                let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[a, b]| (a, b)).collect();
                if let Some(&(a, b)) = pairs.iter().find(|(a, b)| *a >= n || *b >= n) {
                    return Err(Error::Structure(format!(
                        "order pair [{a}, {b}] is out of range"
                    )));
                }
                Some(PartialOrder::from_pairs(n, &pairs)?)
            }
        };
        Ok(LoadedSemiring { semiring, order })
    }
}

pub fn parse_semiring_json(text: &str) -> Result<LoadedSemiring> {
    let doc: SemiringDoc = serde_json::from_str(text)?;
    doc.load()
}

fn read(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_semiring_file(path: impl AsRef<Path>) -> Result<LoadedSemiring> {
    parse_semiring_json(&read(path)?)
}

/// Renders a boolean relation matrix, one row per line.
pub fn matrix_rows(q: &QuasiOrder) -> Vec<String> {
    q.matrix()
        .iter()
        .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect())
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    family: BTreeMap<String, String>,
}

/// `{"family": {"<label>": "fin:3" | "aleph0" | "uncountable"}}`.
pub fn parse_family_json<E: Ord + Clone>(
    text: &str,
    resolve: impl Fn(&str) -> Result<E>,
) -> Result<CardinalFamily<E>> {
    let doc: FamilyDoc = serde_json::from_str(text)?;
    let mut f = CardinalFamily::new();
    for (label, k) in doc.family {
        f.insert(resolve(&label)?, k.parse::<Cardinal>()?);
    }
    Ok(f)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceDoc {
    #[serde(default)]
    prefix: Vec<String>,
    cycle: Vec<String>,
}

/// `{"prefix": [labels], "cycle": [labels]}`.
pub fn parse_sequence_json<E: Ord + Clone>(
    text: &str,
    resolve: impl Fn(&str) -> Result<E>,
) -> Result<OmegaSequence<E>> {
    let doc: SequenceDoc = serde_json::from_str(text)?;
    let prefix = doc
        .prefix
        .iter()
        .map(|l| resolve(l))
        .collect::<Result<_>>()?;
    let cycle = doc
        .cycle
        .iter()
        .map(|l| resolve(l))
        .collect::<Result<_>>()?;
    OmegaSequence::new(prefix, cycle)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a number");
        }
        let v = rest[..len]
            .parse()
            .or_else(|_| self.err("number too large"))?;
        self.pos += len;
        Ok(v)
    }

    /// `[l1.l2...]` with labels resolved in `s`; `[]` is the empty word.
    fn word(&mut self, s: &FiniteSemiring) -> Result<Word> {
        self.expect("[")?;
        let start = self.pos;
        let Some(len) = self.text[start..].find(']') else {
            return self.err("unterminated word");
        };
        let body = &self.text[start..start + len];
        let mut letters = Vec::new();
        if !body.trim().is_empty() {
            let mut off = start;
            for part in body.split('.') {
                let label = part.trim();
                match s.index_of(label) {
                    Ok(i) => letters.push(i),
                    Err(_) => {
                        self.pos = off;
                        return self.err(format!("unknown letter `{label}`"));
                    }
                }
                off += part.len() + 1;
            }
        }
        self.pos = start + len + 1;
        Ok(Word(letters))
    }
}

/// Parses `2*[a] + 1*[b.c] + 3*[]`; `0` alone is the zero polynomial.
/// Letters are element labels of `s`.
pub fn parse_polynomial(text: &str, s: &FiniteSemiring) -> Result<Polynomial> {
    let mut c = Cursor { text, pos: 0 };
    if c.eat("0") && c.at_end() {
        return Ok(Polynomial::zero());
    }
    c.pos = 0;
    let mut p = Polynomial::zero();
    loop {
        let k = c.number()?;
        c.expect("*")?;
        let w = c.word(s)?;
        p.add_term(w, k);
        if c.at_end() {
            return Ok(p);
        }
        c.expect("+")?;
    }
}

/// Parses `maxlen=2; inf*[a] + 1*[]`.
pub fn parse_series(text: &str, s: &FiniteSemiring) -> Result<TruncatedSeries> {
    let mut c = Cursor { text, pos: 0 };
    c.expect("maxlen")?;
    c.expect("=")?;
    let max_len = c.number()? as usize;
    c.expect(";")?;
    let mut r = TruncatedSeries::zero(max_len);
    if c.eat("0") && c.at_end() || c.at_end() {
        return Ok(r);
    }
    loop {
        let k = if c.eat("inf") || c.eat("∞") {
            NInf::Inf
        } else {
            NInf::fin(c.number()?)
        };
        c.expect("*")?;
        let at = c.pos;
        let w = c.word(s)?;
        if let Err(e) = r.add_term(w, k) {
            return Err(Error::Parse {
                pos: at,
                msg: e.to_string(),
            });
        }
        if c.at_end() {
            return Ok(r);
        }
        c.expect("+")?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::small::{boolean, nat_desk};

    #[test]
    fn semiring_document_round_trip() {
        let s = nat_desk(2);
        let o = PartialOrder::chain(3);
        let text = serde_json::to_string(&SemiringDoc::from_semiring(&s, Some(&o))).unwrap();
        let back = parse_semiring_json(&text).unwrap();
        assert_eq!(back.semiring, s);
        assert_eq!(back.order, Some(o));
    }

    #[test]
    fn malformed_documents() {
        let bad =
            r#"{"elements":["0","1"],"zero":0,"one":1,"add":[[0,1],[1,2]],"mul":[[0,0],[0,1]]}"#;
        assert!(matches!(parse_semiring_json(bad), Err(Error::Structure(_))));
        assert!(matches!(
            parse_semiring_json("{\"elements\": ["),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn polynomial_text() {
        let s = nat_desk(2);
        let p = parse_polynomial("2*[1] + 1*[1.2] + 3*[]", &s).unwrap();
        assert_eq!(p.coeff(&Word(vec![1])), 2);
        assert_eq!(p.coeff(&Word(vec![1, 2])), 1);
        assert_eq!(p.coeff(&Word::empty()), 3);
        assert_eq!(parse_polynomial(&p.display(&s).to_string(), &s).unwrap(), p);
        assert_eq!(parse_polynomial("0", &s).unwrap(), Polynomial::zero());
        match parse_polynomial("2*[1] + 1*[7]", &s) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn series_text() {
        let s = boolean();
        let r = parse_series("maxlen=2; inf*[1] + 1*[1.1]", &s).unwrap();
        assert_eq!(r.coeff(&Word(vec![1])), NInf::Inf);
        assert_eq!(r.display(&s).to_string(), "maxlen=2; inf*[1] + 1*[1.1]");
        assert!(parse_series("maxlen=1; 1*[1.1]", &s).is_err());
    }

    #[test]
    fn family_and_sequence_documents() {
        let s = boolean();
        let f = parse_family_json(r#"{"family":{"1":"aleph0","0":"fin:2"}}"#, |l| {
            s.index_of(l)
        })
        .unwrap();
        assert_eq!(f.mult(&1), Cardinal::Aleph0);
        assert_eq!(f.mult(&0), Cardinal::Fin(2));
        let q =
            parse_sequence_json(r#"{"prefix":["1"],"cycle":["0"]}"#, |l| s.index_of(l)).unwrap();
        assert_eq!(q.term(5), &0);
    }
}
