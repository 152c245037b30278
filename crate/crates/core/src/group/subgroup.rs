use serde::Serialize;

use super::{CayleyTable, ElementId, GroupHom, IDENTITY};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A subgroup, stored as a bit mask over the parent's element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupMask {
    // Ordered by (universe, mask value); callers that need the
    // (order, mask value) ordering sort with `sort_key`.
    members: ElementSet,
}

impl SubgroupMask {
    pub(crate) fn from_set_unchecked(members: ElementSet) -> Self {
        debug_assert!(members.contains(IDENTITY));
        SubgroupMask { members }
    }

    /// Checks that `elements` form a subgroup of `g`.
    pub fn from_elements<I: IntoIterator<Item = ElementId>>(g: &CayleyTable, elements: I) -> Option<Self> {
        let members = ElementSet::from_elements(g.order(), elements);
        let closed = members.contains(IDENTITY)
            && members.iter().all(|a| {
                members.contains(g.inv(a)) && members.iter().all(|b| members.contains(g.mul(a, b)))
            });
        closed.then_some(SubgroupMask { members })
    }

    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent_order() / self.order()
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.members.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupMask) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupMask) -> SubgroupMask {
        SubgroupMask::from_set_unchecked(self.members.intersection(&other.members))
    }

    /// Key for the canonical (order, mask value) ordering.
    pub fn sort_key(&self) -> (usize, &ElementSet) {
        (self.order(), &self.members)
    }

    /// The subgroup viewed as a group of its own, elements renumbered in
    /// increasing parent order. Also returns the embedding.
    pub fn as_group(&self, g: &CayleyTable) -> (CayleyTable, Vec<ElementId>) {
        let elems = self.to_vec();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let mut sub = CayleyTable::from_fn_unchecked(elems.len(), |a, b| pos[g.mul(elems[a], elems[b])]);
        if g.labels().is_some() {
            sub.labels = Some(elems.iter().map(|&a| g.label(a).into_owned()).collect());
        }
        (sub, elems)
    }
}

impl std::fmt::Debug for SubgroupMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// The partition of a group into the cosets of a subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    /// Blocks ordered by their smallest element; block 0 is the subgroup.
    pub blocks: Vec<ElementSet>,
    pub side: Side,
    pub subgroup: SubgroupMask,
}

impl CosetPartition {
    /// Index of the block holding each element.
    pub fn block_of(&self) -> Vec<usize> {
        let n = self.subgroup.parent_order();
        let mut out = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for a in b.iter() {
                out[a] = i;
            }
        }
        out
    }
}

impl CayleyTable {
    /// Left cosets `gH` or right cosets `Hg`.
    pub fn cosets(&self, h: &SubgroupMask, side: Side) -> CosetPartition {
        let mut assigned = ElementSet::empty(self.order());
        let mut blocks = Vec::with_capacity(h.index());
        for g in self.elements() {
            if assigned.contains(g) {
                continue;
            }
            let block = ElementSet::from_elements(
                self.order(),
                h.iter().map(|x| match side {
                    Side::Left => self.mul(g, x),
                    Side::Right => self.mul(x, g),
                }),
            );
            assigned = assigned.union(&block);
            blocks.push(block);
        }
        CosetPartition { blocks, side, subgroup: h.clone() }
    }

    /// The set `HK = {hk}`, which need not be a subgroup.
    pub fn product_set(&self, h: &SubgroupMask, k: &SubgroupMask) -> ElementSet {
        ElementSet::from_elements(
            self.order(),
            h.iter().flat_map(|a| k.iter().map(move |b| self.mul(a, b))),
        )
    }

    /// Quotient by a normal subgroup together with the canonical projection.
    ///
    /// Cosets are numbered by increasing minimum representative, so the
    /// identity coset is element 0 of the quotient. Labels are
    /// `<representative>N`.
    pub fn quotient(&self, nsub: &SubgroupMask) -> Result<(CayleyTable, GroupHom)> {
        if !self.is_normal(nsub) {
            return Err(Error::NotNormal);
        }
        let part = self.cosets(nsub, Side::Left);
        let block_of = part.block_of();
        let reps: Vec<ElementId> = part.blocks.iter().map(|b| b.min().expect("empty coset")).collect();
        let mut q = CayleyTable::from_fn_unchecked(reps.len(), |a, b| block_of[self.mul(reps[a], reps[b])]);
        q.labels = Some(reps.iter().map(|&r| format!("{}N", self.label(r))).collect());
        let proj = GroupHom::from_parts_unchecked(self.order(), reps.len(), block_of);
        Ok((q, proj))
    }
}
