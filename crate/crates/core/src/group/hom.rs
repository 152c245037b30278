use std::collections::VecDeque;

use super::{CayleyTable, ElementId, SubgroupMask, IDENTITY};
use crate::set::ElementSet;

/// A map between two groups given by the image of every source element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source_order: usize,
    target_order: usize,
    image: Vec<ElementId>,
}

impl GroupHom {
    pub(crate) fn from_parts_unchecked(source_order: usize, target_order: usize, image: Vec<ElementId>) -> Self {
        GroupHom { source_order, target_order, image }
    }

    /// Wraps `image` after checking the homomorphism property on all pairs.
    pub fn new(source: &CayleyTable, target: &CayleyTable, image: Vec<ElementId>) -> Option<Self> {
        if image.len() != source.order() || image.iter().any(|&t| t >= target.order()) {
            return None;
        }
        let hom = GroupHom { source_order: source.order(), target_order: target.order(), image };
        hom.is_homomorphism(source, target).then_some(hom)
    }

    pub fn identity(g: &CayleyTable) -> Self {
        GroupHom::from_parts_unchecked(g.order(), g.order(), g.elements().collect())
    }

    /// Extends generator images to a homomorphism, if one exists.
    ///
    /// The map is spread along a breadth-first spanning tree of the
    /// source's Cayley graph and then every generator edge is checked.
    /// Returns `None` when `gens` does not generate the source or when the
    /// images are inconsistent.
    pub fn extend_from_generators(
        source: &CayleyTable,
        target: &CayleyTable,
        gens: &[ElementId],
        images: &[ElementId],
    ) -> Option<Self> {
        assert_eq!(gens.len(), images.len());
        let n = source.order();
        let mut map = vec![usize::MAX; n];
        map[IDENTITY] = IDENTITY;
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for (&s, &t) in gens.iter().zip(images) {
                let y = source.mul(x, s);
                let want = target.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = want;
                    queue.push_back(y);
                } else if map[y] != want {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        Some(GroupHom::from_parts_unchecked(n, target.order(), map))
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn image(&self) -> &[ElementId] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.image[a]
    }

    pub fn is_homomorphism(&self, source: &CayleyTable, target: &CayleyTable) -> bool {
        self.image[IDENTITY] == IDENTITY
            && source.elements().all(|a| {
                source
                    .elements()
                    .all(|b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
            })
    }

    pub fn is_bijective(&self) -> bool {
        self.source_order == self.target_order
            && ElementSet::from_elements(self.target_order, self.image.iter().copied()).len() == self.target_order
    }

    /// Inverse map of a bijection.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.source_order];
        for (a, &b) in self.image.iter().enumerate() {
            inv[b] = a;
        }
        Some(GroupHom::from_parts_unchecked(self.target_order, self.source_order, inv))
    }

    pub fn kernel(&self) -> SubgroupMask {
        SubgroupMask::from_set_unchecked(ElementSet::from_elements(
            self.source_order,
            self.image.iter().enumerate().filter(|(_, &b)| b == IDENTITY).map(|(a, _)| a),
        ))
    }

    /// Image of an element set under the map.
    pub fn map_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.target_order, set.iter().map(|a| self.image[a]))
    }

    /// Full preimage of an element set.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(
            self.source_order,
            (0..self.source_order).filter(|&a| set.contains(self.image[a])),
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(other.target_order, self.source_order);
        GroupHom::from_parts_unchecked(
            other.source_order,
            self.target_order,
            other.image.iter().map(|&a| self.image[a]).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::cyclic;

    #[test]
    fn extension_from_generator() {
        let z8 = cyclic(8).unwrap();
        let z4 = cyclic(4).unwrap();
        let h = GroupHom::extend_from_generators(&z8, &z4, &[1], &[1]).unwrap();
        assert!(h.is_homomorphism(&z8, &z4));
        assert_eq!(h.kernel().to_vec(), vec![0, 4]);
        // 1 -> 1 in Z3 is not a homomorphism from Z8
        let z3 = cyclic(3).unwrap();
        assert!(GroupHom::extend_from_generators(&z8, &z3, &[1], &[1]).is_none());
        // 2 does not generate Z8
        assert!(GroupHom::extend_from_generators(&z8, &z8, &[2], &[2]).is_none());
    }

    #[test]
    fn automorphism_inverse() {
        let z8 = cyclic(8).unwrap();
        let h = GroupHom::extend_from_generators(&z8, &z8, &[1], &[3]).unwrap();
        assert!(h.is_bijective());
        let inv = h.inverse().unwrap();
        assert_eq!(h.compose(&inv), GroupHom::identity(&z8));
        assert!(GroupHom::new(&z8, &z8, vec![0, 2, 4, 6, 0, 2, 4, 6]).is_some());
        assert!(GroupHom::new(&z8, &z8, vec![0, 2, 4, 6, 0, 2, 4, 7]).is_none());
    }
}
