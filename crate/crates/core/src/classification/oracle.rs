//! Exhaustive enumeration of groups of order at most 8 by filling Cayley
//! tables cell by cell.
//!
//! Symmetry is broken by fixing an element of the largest available order
//! `k` as element 1: elements `0..k` are its powers and its row is the
//! product of the cycles `(mk, mk+1, ..., mk+k-1)`, one per right coset of
//! the cyclic subgroup it generates. Any group with an element of order `k`
//! has a table of that shape, so trying each `k` and discarding tables with
//! an element of order above `k` misses nothing.

use crate::error::{Error, Result};
use crate::group::{validate_table, CayleyTable};
use crate::invariants::{fingerprint, Fingerprint};
use crate::isomorphism::search_isomorphism;

pub const ORACLE_MAX_ORDER: usize = 8;

const EMPTY: usize = usize::MAX;

/// One representative of every isomorphism class of groups of order `n`.
///
/// Output is in discovery order: larger maximal element order first.
pub fn enumerate_groups_oracle(n: usize) -> Result<Vec<CayleyTable>> {
    if n == 0 || n > ORACLE_MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut found: Vec<(Fingerprint, CayleyTable)> = Vec::new();
    if n == 1 {
        return Ok(vec![validate_table(&[vec![0]])?]);
    }
    for k in (2..=n).rev().filter(|k| n % k == 0) {
        let mut search = Search::new(n, k);
        search.run(0);
        for g in search.complete {
            if g.elements().any(|a| g.element_order(a) > k) {
                continue;
            }
            let fp = fingerprint(&g);
            let seen = found
                .iter()
                .any(|(f, h)| *f == fp && search_isomorphism(h, &g).is_some());
            if !seen {
                found.push((fp, g));
            }
        }
    }
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

struct Search {
    n: usize,
    t: Vec<usize>,
    /// Cells still to fill, row-major.
    cells: Vec<(usize, usize)>,
    row_used: Vec<Vec<bool>>,
    col_used: Vec<Vec<bool>>,
    complete: Vec<CayleyTable>,
}

impl Search {
    fn new(n: usize, k: usize) -> Self {
        let mut s = Search {
            n,
            t: vec![EMPTY; n * n],
            cells: Vec::new(),
            row_used: vec![vec![false; n]; n],
            col_used: vec![vec![false; n]; n],
            complete: Vec::new(),
        };
        for a in 0..n {
            s.put(0, a, a);
            if a > 0 {
                s.put(a, 0, a);
            }
        }
        for x in 1..n {
            let (m, i) = (x / k, x % k);
            s.put(1, x, m * k + (i + 1) % k);
        }
        s.cells = (2..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
        s
    }

    fn get(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b]
    }

    fn put(&mut self, a: usize, b: usize, c: usize) {
        self.t[a * self.n + b] = c;
        self.row_used[a][c] = true;
        self.col_used[b][c] = true;
    }

    fn take(&mut self, a: usize, b: usize) {
        let c = self.get(a, b);
        self.t[a * self.n + b] = EMPTY;
        self.row_used[a][c] = false;
        self.col_used[b][c] = false;
    }

    fn run(&mut self, depth: usize) {
        if depth == self.cells.len() {
            let rows: Vec<Vec<usize>> = self.t.chunks(self.n).map(<[usize]>::to_vec).collect();
            if let Ok(g) = validate_table(&rows) {
                self.complete.push(g);
            }
            return;
        }
        let (a, b) = self.cells[depth];
        for c in 0..self.n {
            if self.row_used[a][c] || self.col_used[b][c] {
                continue;
            }
            self.put(a, b, c);
            if self.associative_at(a, b) {
                self.run(depth + 1);
            }
            self.take(a, b);
        }
    }

    /// Checks every associativity instance that uses the cell `(a, b)` and
    /// otherwise only filled cells.
    fn associative_at(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let ab = self.get(a, b);
        let known = |x: usize, y: usize| {
            let v = self.get(x, y);
            (v != EMPTY).then_some(v)
        };
        for x in 0..n {
            // (ab)x = a(bx)
            if let (Some(l), Some(bx)) = (known(ab, x), known(b, x)) {
                if known(a, bx).is_some_and(|r| r != l) {
                    return false;
                }
            }
            // (xa)b = x(ab)
            if let (Some(xa), Some(r)) = (known(x, a), known(x, ab)) {
                if known(xa, b).is_some_and(|l| l != r) {
                    return false;
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                if known(u, v) == Some(a) {
                    // (uv)b = u(vb)
                    if let Some(vb) = known(v, b) {
                        if known(u, vb).is_some_and(|r| r != ab) {
                            return false;
                        }
                    }
                }
                if known(u, v) == Some(b) {
                    // a(uv) = (au)v
                    if let Some(au) = known(a, u) {
                        if known(au, v).is_some_and(|l| l != ab) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_groups_oracle(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2]);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(enumerate_groups_oracle(0), Err(Error::OrderOutOfRange(0))));
        assert!(matches!(enumerate_groups_oracle(9), Err(Error::OrderOutOfRange(9))));
    }

    #[test]
    fn order_four_groups_are_abelian() {
        let gs = enumerate_groups_oracle(4).unwrap();
        assert!(gs.iter().all(CayleyTable::is_abelian));
        assert!(gs[0].is_cyclic());
    }
}
