//! Isomorphism testing by invariant pruning and backtracking over
//! generator images, plus split-extension detection.

use itertools::Itertools;
use serde::Serialize;

use crate::group::{CayleyTable, ElementId, GroupHom, SubgroupMask};
use crate::invariants::{all_subgroups, center, fingerprint};

/// The lexicographically first generating set of least size.
pub fn minimal_generating_set(g: &CayleyTable) -> Vec<ElementId> {
    for k in 0..=g.order() {
        if let Some(set) = (1..g.order()).combinations(k).find(|c| g.generates(c)) {
            return set;
        }
    }
    unreachable!("the whole group generates itself")
}

/// A bijective homomorphism `g1 → g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: GroupHom,
}

impl IsoWitness {
    pub fn image(&self) -> &[ElementId] {
        self.mapping.image()
    }

    pub fn verify(&self, g1: &CayleyTable, g2: &CayleyTable) -> bool {
        self.mapping.source_order() == g1.order()
            && self.mapping.target_order() == g2.order()
            && self.mapping.is_bijective()
            && self.mapping.is_homomorphism(g1, g2)
    }
}

impl Serialize for IsoWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.image().serialize(s)
    }
}

/// Decides isomorphism. Differing fingerprints answer `None` at once;
/// otherwise see [`search_isomorphism`].
pub fn find_isomorphism(g1: &CayleyTable, g2: &CayleyTable) -> Option<IsoWitness> {
    if g1.order() != g2.order() || fingerprint(g1) != fingerprint(g2) {
        return None;
    }
    search_isomorphism(g1, g2)
}

/// Backtracking stage alone: tries images of `g1`'s minimal generating set
/// among `g2` elements of equal order and centrality, in lexicographic
/// order of the image tuple, and returns the first bijective extension.
pub fn search_isomorphism(g1: &CayleyTable, g2: &CayleyTable) -> Option<IsoWitness> {
    if g1.order() != g2.order() {
        return None;
    }
    let gens = minimal_generating_set(g1);
    let (z1, z2) = (center(g1), center(g2));
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            let (k, central) = (g1.element_order(s), z1.contains(s));
            g2.elements()
                .filter(|&t| g2.element_order(t) == k && z2.contains(t) == central)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(g1, g2, &gens, &candidates, &mut images)
}

fn backtrack(
    g1: &CayleyTable,
    g2: &CayleyTable,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> Option<IsoWitness> {
    let depth = images.len();
    if depth == gens.len() {
        return GroupHom::extend_from_generators(g1, g2, gens, images)
            .filter(GroupHom::is_bijective)
            .map(|mapping| IsoWitness { mapping });
    }
    for &t in &candidates[depth] {
        if images.contains(&t) {
            continue;
        }
        images.push(t);
        let found = backtrack(g1, g2, gens, candidates, images);
        images.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn are_isomorphic(g1: &CayleyTable, g2: &CayleyTable) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// `G = N ⋊ H` with both factors proper and nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub normal: SubgroupMask,
    pub complement: SubgroupMask,
}

/// Whether `(n, h)` exhibits `g` as a nontrivial semidirect product.
pub fn is_split_witness(g: &CayleyTable, n: &SubgroupMask, h: &SubgroupMask) -> bool {
    let proper = |s: &SubgroupMask| !s.is_trivial() && !s.is_whole();
    proper(n)
        && proper(h)
        && g.is_normal(n)
        && n.intersection(h).is_trivial()
        && n.order() * h.order() == g.order()
}

/// Searches the subgroup lattice for a nontrivial split decomposition;
/// the first pair in lattice order is returned.
pub fn is_nontrivial_semidirect(g: &CayleyTable) -> Option<SplitWitness> {
    let subs = all_subgroups(g);
    subs.iter()
        .filter(|n| g.is_normal(n))
        .flat_map(|n| subs.iter().map(move |h| (n, h)))
        .find(|(n, h)| is_split_witness(g, n, h))
        .map(|(n, h)| SplitWitness { normal: n.clone(), complement: h.clone() })
}
