use super::{check_semiring_axioms, FiniteSemiring};
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest carrier size accepted by [`enumerate_semirings`].
pub const MAX_EXHAUSTIVE: usize = 3;

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => ((b'a' + (i - 2) as u8) as char).to_string(),
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Cell {
    /// Commutative addition: fills `(i, j)` and `(j, i)`.
    Add(usize, usize),
    Mul(usize, usize),
}

/// Backtracking fill of the free table cells with zero = 0 and one = 1 fixed
/// (both 0 when n = 1), zero absorbing, and pruning on every law instance
/// whose entries are all known.
struct TableSearch {
    n: usize,
    add: Vec<Option<usize>>,
    mul: Vec<Option<usize>>,
    cells: Vec<Cell>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        let (zero, one) = (0, if n > 1 { 1 } else { 0 });
        let mut add = vec![None; n * n];
        let mut mul = vec![None; n * n];
        for i in 0..n {
            add[zero * n + i] = Some(i);
            add[i * n + zero] = Some(i);
            mul[one * n + i] = Some(i);
            mul[i * n + one] = Some(i);
            mul[zero * n + i] = Some(zero);
            mul[i * n + zero] = Some(zero);
        }
        let mut cells = Vec::new();
        for i in 0..n {
            for j in i..n {
                if add[i * n + j].is_none() {
                    cells.push(Cell::Add(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j].is_none() {
                    cells.push(Cell::Mul(i, j));
                }
            }
        }
        TableSearch { n, add, mul, cells }
    }

    fn set(&mut self, cell: Cell, v: Option<usize>) {
        let n = self.n;
        match cell {
            Cell::Add(i, j) => {
                self.add[i * n + j] = v;
                self.add[j * n + i] = v;
            }
            Cell::Mul(i, j) => self.mul[i * n + j] = v,
        }
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        let a = |x: usize, y: usize| self.add[x * n + y];
        let m = |x: usize, y: usize| self.mul[x * n + y];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let add_assoc = (|| Some(a(a(x, y)?, z)? == a(x, a(y, z)?)?))();
                    let mul_assoc = (|| Some(m(m(x, y)?, z)? == m(x, m(y, z)?)?))();
                    let left = (|| Some(m(x, a(y, z)?)? == a(m(x, y)?, m(x, z)?)?))();
                    let right = (|| Some(m(a(y, z)?, x)? == a(m(y, x)?, m(z, x)?)?))();
                    if [add_assoc, mul_assoc, left, right].contains(&Some(false)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn finish(&self) -> FiniteSemiring {
        let n = self.n;
        let t = |v: &[Option<usize>]| {
            (0..n)
                .map(|i| (0..n).map(|j| v[i * n + j].expect("filled")).collect())
                .collect::<Vec<Vec<usize>>>()
        };
        FiniteSemiring::new(
            default_labels(n),
            0,
            if n > 1 { 1 } else { 0 },
            t(&self.add),
            t(&self.mul),
        )
        .expect("search fills every cell in range")
    }

    /// Depth-first search; `order` picks the value order at each cell and
    /// `visit` returns false to stop.
    fn run(
        &mut self,
        depth: usize,
        order: &mut dyn FnMut() -> Vec<usize>,
        visit: &mut dyn FnMut(FiniteSemiring) -> bool,
    ) -> bool {
        if depth == self.cells.len() {
            let s = self.finish();
            if check_semiring_axioms(&s).passed {
                return visit(s);
            }
            return true;
        }
        let cell = self.cells[depth];
        for v in order() {
            self.set(cell, Some(v));
            if self.consistent() && !self.run(depth + 1, order, visit) {
                self.set(cell, None);
                return false;
            }
        }
        self.set(cell, None);
        true
    }
}

/// Every semiring table on `n <= 3` elements with zero at index 0 and one at
/// index 1, in lexicographic order of the free cells. Tables are not reduced
/// up to isomorphism.
pub fn enumerate_semirings(n: usize) -> Result<Vec<FiniteSemiring>> {
    if n == 0 || n > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXHAUSTIVE,
        });
    }
    let mut out = Vec::new();
    let mut search = TableSearch::new(n);
    search.run(0, &mut || (0..n).collect(), &mut |s| {
        out.push(s);
        true
    });
    Ok(out)
}

/// A semiring on `n` elements, determined by `seed`: a randomized
/// backtracking search picks the tables, then the carrier is relabeled by a
/// random permutation (so zero and one can land anywhere).
pub fn random_semiring(n: usize, seed: u64) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::Structure("empty carrier".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    {
        let mut search = TableSearch::new(n);
        let rng = &mut rng;
        let mut order = || {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs
        };
        search.run(0, &mut order, &mut |s| {
            found = Some(s);
            false
        });
    }
    let s = found.ok_or_else(|| Error::Inconsistency(format!("no semiring of size {n}")))?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    s.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::small::{boolean, xor};

    #[test]
    fn size_one_is_the_trivial_semiring() {
        let all = enumerate_semirings(1).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].add_table(), vec![vec![0]]);
        assert_eq!(all[0].mul_table(), vec![vec![0]]);
    }

    #[test]
    fn size_two_is_boolean_and_xor() {
        let all = enumerate_semirings(2).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&boolean()));
        assert!(all.contains(&xor()));
    }

    #[test]
    fn exhaustive_mode_refuses_large_carriers() {
        assert!(matches!(
            enumerate_semirings(4),
            Err(Error::TooLarge { n: 4, max: 3 })
        ));
        assert!(enumerate_semirings(0).is_err());
    }

    #[test]
    fn random_semiring_is_deterministic() {
        assert_eq!(
            random_semiring(3, 42).unwrap(),
            random_semiring(3, 42).unwrap()
        );
        assert_eq!(
            random_semiring(4, 7).unwrap(),
            random_semiring(4, 7).unwrap()
        );
    }

    #[test]
    fn random_semirings_pass_the_axioms() {
        for seed in 0..50 {
            let s = random_semiring(4, seed).unwrap();
            assert!(check_semiring_axioms(&s).passed, "seed {seed}");
        }
    }
}
