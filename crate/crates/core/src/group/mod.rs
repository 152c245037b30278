//! Finite groups stored as full multiplication tables.
//!
//! Element `0` is always the identity. Every constructor in the crate
//! renumbers its elements to keep that true, so identity checks are a
//! comparison with zero.

mod hom;
mod io;
mod subgroup;

use std::borrow::Cow;
use std::collections::VecDeque;

pub use hom::GroupHom;
pub use io::GroupFile;
pub use subgroup::{CosetPartition, Side, SubgroupMask};

use crate::error::{Line, TableError};
use crate::set::ElementSet;

/// Index of an element in `[0, n)`; `0` is the identity.
pub type ElementId = usize;

/// The identity element of every [`CayleyTable`].
pub const IDENTITY: ElementId = 0;

/// A finite group given by its complete multiplication table.
///
/// `table[a * n + b]` holds `a·b`. Instances are immutable once built and
/// every public constructor validates the group axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Validates a raw square array as a group table with identity `0`.
///
/// The axioms are checked in the order identity, Latin square,
/// associativity, inverses; the first failure is reported with a witness.
pub fn validate_table(raw: &[Vec<usize>]) -> Result<CayleyTable, TableError> {
    let n = raw.len();
    if n == 0 {
        return Err(TableError::Empty);
    }
    for (row, entries) in raw.iter().enumerate() {
        if entries.len() != n {
            return Err(TableError::NotSquare { row, len: entries.len(), expected: n });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(TableError::EntryOutOfRange { row, col, value, order: n });
        }
    }
    for a in 0..n {
        if raw[0][a] != a || raw[a][0] != a {
            return Err(TableError::NotIdentity(a));
        }
    }
    let mut seen = vec![usize::MAX; n];
    for (line, idx) in [Line::Row, Line::Column].into_iter().flat_map(|l| (0..n).map(move |i| (l, i))) {
        for k in 0..n {
            let v = match line {
                Line::Row => raw[idx][k],
                Line::Column => raw[k][idx],
            };
            let stamp = idx + if line == Line::Row { 0 } else { n };
            if seen[v] == stamp {
                return Err(TableError::NotLatin { line, index: idx, value: v });
            }
            seen[v] = stamp;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = raw[a][b];
            for c in 0..n {
                if raw[ab][c] != raw[a][raw[b][c]] {
                    return Err(TableError::NotAssociative(a, b, c));
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| raw[a][b] == 0 && raw[b][a] == 0) {
            return Err(TableError::NoInverse(a));
        }
    }
    let table = raw.iter().flatten().map(|&v| v as u32).collect();
    Ok(CayleyTable::from_flat_unchecked(n, table, None))
}

impl CayleyTable {
    /// Builds a table that is already known to satisfy the group axioms.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&v| v == 0).expect("row without identity") as u32;
        }
        CayleyTable { order, table, inverses, labels }
    }

    /// Builds a table from a product closure, for constructions whose group
    /// structure is guaranteed by the math (products, quotients).
    pub(crate) fn from_fn_unchecked(order: usize, f: impl Fn(ElementId, ElementId) -> ElementId) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b) as u32);
            }
        }
        Self::from_flat_unchecked(order, table, None)
    }

    /// Validates nested rows, see [`validate_table`].
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        validate_table(rows)
    }

    /// Attaches display labels, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TableError> {
        if labels.len() != self.order {
            return Err(TableError::LabelCount { got: labels.len(), order: self.order });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b] as ElementId
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverses[a] as ElementId
    }

    /// `a^k` for any integer `k`; negative powers use the inverse.
    pub fn pow(&self, a: ElementId, k: i64) -> ElementId {
        let base = if k < 0 { self.inv(a) } else { a };
        let k = k.unsigned_abs() % self.element_order(a) as u64;
        (0..k).fold(IDENTITY, |acc, _| self.mul(acc, base))
    }

    /// Smallest `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: ElementId) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `[a,b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: ElementId, h: ElementId) -> ElementId {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.order)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `a`, falling back to its index.
    pub fn label(&self, a: ElementId) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[a]),
            None => Cow::Owned(a.to_string()),
        }
    }

    /// Element carrying the given label, if labels are present.
    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as ElementId).collect())
            .collect()
    }

    /// Renames elements through `perm` (old index → new index).
    ///
    /// `perm` must be a permutation fixing `0`.
    pub fn relabeled(&self, perm: &[ElementId]) -> CayleyTable {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let mut back = vec![0; self.order];
        for (old, &new) in perm.iter().enumerate() {
            back[new] = old;
        }
        let mut g = Self::from_fn_unchecked(self.order, |a, b| perm[self.mul(back[a], back[b])]);
        g.labels = self
            .labels
            .as_ref()
            .map(|l| back.iter().map(|&old| l[old].clone()).collect());
        g
    }

    /// Least subgroup containing `seeds`, by closure under products.
    pub fn subgroup_generated<I: IntoIterator<Item = ElementId>>(&self, seeds: I) -> SubgroupMask {
        let seeds: Vec<ElementId> = seeds.into_iter().filter(|&s| s != IDENTITY).collect();
        let mut members = ElementSet::empty(self.order);
        members.insert(IDENTITY);
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &s in &seeds {
                let y = self.mul(x, s);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        SubgroupMask::from_set_unchecked(members)
    }

    /// Checks that `seeds` generate the whole group.
    pub fn generates(&self, seeds: &[ElementId]) -> bool {
        self.subgroup_generated(seeds.iter().copied()).order() == self.order
    }

    pub fn whole(&self) -> SubgroupMask {
        SubgroupMask::from_set_unchecked(ElementSet::full(self.order))
    }

    pub fn trivial_subgroup(&self) -> SubgroupMask {
        SubgroupMask::from_set_unchecked(ElementSet::from_elements(self.order, [IDENTITY]))
    }

    /// Whether `g h g⁻¹ ∈ H` for every `g` in the group and `h` in `H`.
    pub fn is_normal(&self, h: &SubgroupMask) -> bool {
        h.iter()
            .all(|x| self.elements().all(|g| h.contains(self.conjugate(g, x))))
    }
}
