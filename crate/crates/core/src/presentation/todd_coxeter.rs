//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy).
//!
//! Cosets are numbered in order of definition. For each live coset in
//! turn, every relator is scanned from it (defining cosets as needed to
//! complete the scan), then any remaining empty entries of its row are
//! filled. Coincidences are processed with the usual union-find queue.
//! The result is the right regular action, collapsed into a Cayley table.

use std::collections::VecDeque;

use super::{Presentation, Word};
use crate::error::EnumerationError;
use crate::group::{CayleyTable, ElementId};

const NONE: u32 = u32::MAX;

/// An enumerated group together with the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub group: CayleyTable,
    /// Element represented by each generator, in declaration order.
    pub generators: Vec<ElementId>,
    /// Total number of cosets defined, including those later merged.
    pub cosets_defined: usize,
}

/// Enumerates `p` to a Cayley table.
pub fn coset_enumerate(p: &Presentation) -> Result<CayleyTable, EnumerationError> {
    enumerate(p).map(|e| e.group)
}

/// Enumerates `p`, keeping the generator images.
///
/// Elements are labelled with their shortlex-least positive word in the
/// generators.
pub fn enumerate(p: &Presentation) -> Result<Enumeration, EnumerationError> {
    let cols = 2 * p.generators.len();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(letters).collect();
    let mut ct = CosetTable::new(cols, p.max_cosets);
    ct.define_first()?;

    let mut alpha = 0;
    while alpha < ct.len() {
        for r in &relators {
            if !ct.is_live(alpha) {
                break;
            }
            ct.scan_and_fill(alpha, r)?;
        }
        if ct.is_live(alpha) {
            for x in 0..cols {
                if ct.get(alpha, x).is_none() {
                    ct.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }

    let (action, n) = ct.compress();
    let defined = ct.len();
    let group = regular_table(&action, n, cols);
    let generators: Vec<ElementId> = (0..p.generators.len()).map(|g| action[2 * g]).collect();
    let group = label_by_shortlex(group, &generators, &p.generators);

    if let Some(expected) = p.expected_order {
        if expected != n {
            return Err(EnumerationError::OrderMismatch { found: n, expected });
        }
    }
    Ok(Enumeration { group, generators, cosets_defined: defined })
}

/// Expands a word into coset-table columns: `2g` for `g`, `2g+1` for `g⁻¹`.
fn letters(w: &Word) -> Vec<usize> {
    w.factors()
        .iter()
        .flat_map(|&(g, k)| {
            let col = if k > 0 { 2 * g } else { 2 * g + 1 };
            std::iter::repeat_n(col, k.unsigned_abs() as usize)
        })
        .collect()
}

struct CosetTable {
    cols: usize,
    budget: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
}

impl CosetTable {
    fn new(cols: usize, budget: usize) -> Self {
        CosetTable { cols, budget, table: Vec::new(), parent: Vec::new() }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, k: usize) -> bool {
        self.parent[k] as usize == k
    }

    fn get(&self, k: usize, x: usize) -> Option<usize> {
        let v = self.table[k * self.cols + x];
        (v != NONE).then_some(v as usize)
    }

    fn set(&mut self, k: usize, x: usize, v: usize) {
        self.table[k * self.cols + x] = v as u32;
    }

    fn clear(&mut self, k: usize, x: usize) {
        self.table[k * self.cols + x] = NONE;
    }

    fn new_coset(&mut self) -> Result<usize, EnumerationError> {
        if self.len() >= self.budget {
            return Err(EnumerationError::CosetBudgetExceeded(self.budget));
        }
        let k = self.len();
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.parent.push(k as u32);
        Ok(k)
    }

    fn define_first(&mut self) -> Result<(), EnumerationError> {
        self.new_coset().map(|_| ())
    }

    fn define(&mut self, k: usize, x: usize) -> Result<(), EnumerationError> {
        let b = self.new_coset()?;
        self.set(k, x, b);
        self.set(b, x ^ 1, k);
        Ok(())
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Result<(), EnumerationError> {
        let (mut f, mut b) = (alpha, alpha);
        // letters w[i..j] are still unscanned
        let (mut i, mut j) = (0, w.len());
        loop {
            while i < j {
                match self.get(f, w[i]) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                self.coincidence(f, b);
                return Ok(());
            }
            while j > i {
                match self.get(b, w[j - 1] ^ 1) {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn rep(&mut self, k: usize) -> usize {
        let mut root = k;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut k = k;
        while self.parent[k] as usize != root {
            let next = self.parent[k] as usize;
            self.parent[k] = root as u32;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo as u32;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            for x in 0..self.cols {
                let Some(d) = self.get(g, x) else { continue };
                self.clear(d, x ^ 1);
                let mu = self.rep(g);
                let nu = self.rep(d);
                if let Some(t) = self.get(mu, x) {
                    self.merge(nu, t, &mut queue);
                } else if let Some(t) = self.get(nu, x ^ 1) {
                    self.merge(mu, t, &mut queue);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    /// Renumbers live cosets consecutively; returns the action table and
    /// the number of live cosets.
    fn compress(&self) -> (Vec<usize>, usize) {
        let mut index = vec![usize::MAX; self.len()];
        let mut n = 0;
        for k in 0..self.len() {
            if self.is_live(k) {
                index[k] = n;
                n += 1;
            }
        }
        let mut action = Vec::with_capacity(n * self.cols);
        for k in (0..self.len()).filter(|&k| self.is_live(k)) {
            for x in 0..self.cols {
                let t = self.get(k, x).expect("complete coset table");
                debug_assert!(self.is_live(t));
                action.push(index[t]);
            }
        }
        (action, n)
    }
}

/// Cayley table of the regular representation given by the coset action.
fn regular_table(action: &[usize], n: usize, cols: usize) -> CayleyTable {
    // spanning tree from the identity coset, in breadth-first order
    let mut tree: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for x in 0..cols {
            let d = action[c * cols + x];
            if !seen[d] {
                seen[d] = true;
                tree.push((d, c, x));
                queue.push_back(d);
            }
        }
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        table[a * n] = a as u32;
        for &(b, parent, x) in &tree {
            let via = table[a * n + parent] as usize;
            table[a * n + b] = action[via * cols + x] as u32;
        }
    }
    CayleyTable::from_flat_unchecked(n, table, None)
}

fn label_by_shortlex(g: CayleyTable, gens: &[ElementId], names: &[char]) -> CayleyTable {
    let n = g.order();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let b = g.mul(a, s);
            if words[b].is_none() {
                let mut w = words[a].clone().unwrap_or_default();
                w.push(i);
                words[b] = Some(w);
                queue.push_back(b);
            }
        }
    }
    let labels = words
        .into_iter()
        .map(|w| {
            let w = w.expect("generators span the enumerated group");
            Word::from_factors(w.into_iter().map(|i| (i, 1))).render(names)
        })
        .collect();
    g.with_labels(labels).expect("one label per element")
}
