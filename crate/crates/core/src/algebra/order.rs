use super::{FiniteSemiring, Semiring};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use serde::Serialize;

/// Reflexive, transitive relation on an indexed carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuasiOrder {
    rel: Vec<Vec<bool>>,
}

impl QuasiOrder {
    pub fn from_matrix(rel: Vec<Vec<bool>>) -> Result<Self> {
        let n = rel.len();
        if rel.iter().any(|r| r.len() != n) {
            return Err(Error::Structure("relation matrix is not square".into()));
        }
        if let Some(i) = (0..n).find(|&i| !rel[i][i]) {
            return Err(Error::Structure(format!(
                "relation is not reflexive at {i}"
            )));
        }
        if let Some((i, j, k)) = transitivity_failure(&rel) {
            return Err(Error::Structure(format!(
                "relation is not transitive: {i} <= {j} <= {k}"
            )));
        }
        Ok(QuasiOrder { rel })
    }

    pub fn size(&self) -> usize {
        self.rel.len()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rel[a][b]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.rel
    }

    /// Least pair `a < b` (index order) with `a <= b` and `b <= a`.
    pub fn antisymmetry_failure(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.rel[a][b] && self.rel[b][a])
    }

    pub fn into_partial_order(self) -> Option<PartialOrder> {
        match self.antisymmetry_failure() {
            Some(_) => None,
            None => Some(PartialOrder { rel: self.rel }),
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn transitivity_failure(rel: &[Vec<bool>]) -> Option<(usize, usize, usize)> {
    let n = rel.len();
    for i in 0..n {
        for j in 0..n {
            if !rel[i][j] {
                continue;
            }
            for k in 0..n {
                if rel[j][k] && !rel[i][k] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Outcome of a least-upper-bound query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupOutcome<E> {
    Sup(E),
    /// Upper bounds exist but none is least. Carries (a sample of) them.
    NoLeast(Vec<E>),
    NoUpperBound,
}

impl<E> SupOutcome<E> {
    pub fn sup(&self) -> Option<&E> {
        match self {
            SupOutcome::Sup(e) => Some(e),
            _ => None,
        }
    }
}

/// Reflexive, transitive, antisymmetric relation on an indexed carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartialOrder {
    rel: Vec<Vec<bool>>,
}

impl PartialOrder {
    pub fn from_matrix(rel: Vec<Vec<bool>>) -> Result<Self> {
        let q = QuasiOrder::from_matrix(rel)?;
        if let Some((a, b)) = q.antisymmetry_failure() {
            return Err(Error::Structure(format!(
                "relation is not antisymmetric: {a} <= {b} <= {a}"
            )));
        }
        Ok(PartialOrder { rel: q.rel })
    }

    /// The reflexive-transitive closure of the given strict pairs.
    #[allow(clippy::needless_range_loop)]
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Structure(format!(
                    "order pair ({a},{b}) out of range"
                )));
            }
            rel[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_matrix(rel)
    }

    /// Total order following index order.
    pub fn chain(n: usize) -> Self {
        PartialOrder {
            rel: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
        }
    }

    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::from_matrix(
            (0..n)
                .map(|i| (0..n).map(|j| leq(i, j)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rel.len()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rel[a][b]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.rel
    }

    /// Whether every pair related by `q` is related here.
    pub fn contains(&self, q: &QuasiOrder) -> bool {
        let n = self.size();
        q.size() == n && (0..n).all(|a| (0..n).all(|b| !q.leq(a, b) || self.leq(a, b)))
    }

    /// Strict pairs `(a, b)`, `a < b`, in index order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.rel[a][b])
            .collect()
    }

    pub fn upper_bounds(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.size())
            .filter(|&u| xs.iter().all(|&x| self.leq(x, u)))
            .collect()
    }

    pub fn sup(&self, xs: &[usize]) -> SupOutcome<usize> {
        let ub = self.upper_bounds(xs);
        if ub.is_empty() {
            return SupOutcome::NoUpperBound;
        }
        match ub.iter().find(|&&u| ub.iter().all(|&v| self.leq(u, v))) {
            Some(&u) => SupOutcome::Sup(u),
            None => SupOutcome::NoLeast(ub),
        }
    }
}

/// `a <= b` iff `a + x = b` for some `x` in the carrier.
pub fn natural_quasiorder(s: &FiniteSemiring) -> QuasiOrder {
    let n = s.size();
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for x in 0..n {
            rel[a][s.plus(a, x)] = true;
        }
    }
    QuasiOrder { rel }
}

/// Whether the semiring can be ordered, decided two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orderability {
    /// The natural order, which is then compatible.
    Orderable(PartialOrder),
    /// `pair` breaks antisymmetry of the natural quasiorder; `triple`
    /// `(a, x, y)` has `a + x + y = a` but `a + x != a`.
    NotOrderable {
        pair: (usize, usize),
        triple: (usize, usize, usize),
    },
}

impl Orderability {
    pub fn is_orderable(&self) -> bool {
        matches!(self, Orderability::Orderable(_))
    }

    pub fn order(&self) -> Option<&PartialOrder> {
        match self {
            Orderability::Orderable(o) => Some(o),
            _ => None,
        }
    }

    /// The refusal error carrying the absorption triple.
    pub fn refusal(&self, s: &FiniteSemiring) -> Option<Error> {
        match *self {
            Orderability::Orderable(_) => None,
            Orderability::NotOrderable {
                triple: (a, x, y), ..
            } => Some(Error::NotOrderable {
                a: s.label(&a),
                x: s.label(&x),
                y: s.label(&y),
            }),
        }
    }
}

/// Least `(a, x, y)` in `elems` with `a + x + y = a` and `a + x != a`.
pub fn condition4_holds_on<S: Semiring + ?Sized>(
    s: &S,
    elems: &[S::Elem],
) -> Option<(S::Elem, S::Elem, S::Elem)> {
    for a in elems {
        for x in elems {
            let ax = s.add(a, x);
            if ax == *a {
                continue;
            }
            for y in elems {
                if s.add(&ax, y) == *a {
                    return Some((a.clone(), x.clone(), y.clone()));
                }
            }
        }
    }
    None
}

/// Antisymmetry of the natural quasiorder, cross-checked against the
/// absorption condition `a + x + y = a => a + x = a`. The two must agree;
/// disagreement is reported as [`Error::Inconsistency`].
pub fn is_orderable(s: &FiniteSemiring) -> Result<Orderability> {
    let q = natural_quasiorder(s);
    let pair = q.antisymmetry_failure();
    let elems: Vec<usize> = s.indices().collect();
    let triple = condition4_holds_on(s, &elems);
    match (pair, triple) {
        (None, None) => Ok(Orderability::Orderable(
            q.into_partial_order().expect("antisymmetry checked"),
        )),
        (Some(pair), Some(triple)) => Ok(Orderability::NotOrderable { pair, triple }),
        (p, t) => Err(Error::Inconsistency(format!(
            "antisymmetry witness {p:?} but absorption witness {t:?}"
        ))),
    }
}

/// Result of the brute-force order search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSearch {
    Found(PartialOrder),
    NoneExists { examined: u64 },
    Inconclusive { examined: u64 },
}

/// Tries every partial order on the carrier (each unordered pair is
/// unrelated, `<` or `>`; non-transitive candidates are skipped) and returns
/// the first one that makes `s` an ordered semiring.
pub fn search_compatible_order(s: &FiniteSemiring, budget: u64) -> OrderSearch {
    let n = s.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut state = vec![0u8; pairs.len()];
    let mut examined = 0u64;
    loop {
        if examined >= budget {
            return OrderSearch::Inconclusive { examined };
        }
        examined += 1;
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for (&(a, b), &st) in pairs.iter().zip(&state) {
            match st {
                1 => rel[a][b] = true,
                2 => rel[b][a] = true,
                _ => {}
            }
        }
        if transitivity_failure(&rel).is_none() {
            let o = PartialOrder { rel };
            if check_ordered_semiring(s, &o).passed {
                return OrderSearch::Found(o);
            }
        }
        // base-3 counter over the pair states
        let mut k = 0;
        loop {
            if k == state.len() {
                return OrderSearch::NoneExists { examined };
            }
            state[k] += 1;
            if state[k] < 3 {
                break;
            }
            state[k] = 0;
            k += 1;
        }
    }
}

/// Checks that `o` is a partial order under which `+` and `·` are monotone in
/// each argument and `0` is least.
pub fn check_ordered_semiring(s: &FiniteSemiring, o: &PartialOrder) -> CheckReport {
    let mut report = CheckReport::new();
    let n = s.size();
    if o.size() != n {
        report.push(
            "order-size",
            vec![format!("order on {} points, carrier has {n}", o.size())],
        );
        return report;
    }
    let l = |xs: &[usize]| xs.iter().map(|x| s.label(x)).collect::<Vec<_>>();
    let z = s.zero_index();
    for a in 0..n {
        report.record(o.leq(z, a), "zero-least", || l(&[a]));
    }
    for a in 0..n {
        for b in 0..n {
            if !o.leq(a, b) {
                continue;
            }
            for c in 0..n {
                report.record(
                    o.leq(s.plus(a, c), s.plus(b, c)),
                    "add-monotone-left",
                    || l(&[a, b, c]),
                );
                report.record(
                    o.leq(s.plus(c, a), s.plus(c, b)),
                    "add-monotone-right",
                    || l(&[a, b, c]),
                );
                report.record(
                    o.leq(s.times_table(a, c), s.times_table(b, c)),
                    "mul-monotone-left",
                    || l(&[a, b, c]),
                );
                report.record(
                    o.leq(s.times_table(c, a), s.times_table(c, b)),
                    "mul-monotone-right",
                    || l(&[a, b, c]),
                );
            }
        }
    }
    report
}

/// `x + y = 0` forces `x = y = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumFree {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn is_zero_sum_free(s: &FiniteSemiring) -> ZeroSumFree {
    let z = s.zero_index();
    let witness = s
        .indices()
        .filter(|&x| x != z)
        .flat_map(|x| s.indices().filter(move |&y| y != z).map(move |y| (x, y)))
        .find(|&(x, y)| s.plus(x, y) == z);
    ZeroSumFree {
        holds: witness.is_none(),
        witness,
    }
}
