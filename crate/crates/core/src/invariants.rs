//! Center, conjugacy classes, derived subgroup, subgroup lattice, and an
//! isomorphism-invariant fingerprint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CayleyTable, ElementId, SubgroupMask};
use crate::set::ElementSet;

pub fn center(g: &CayleyTable) -> SubgroupMask {
    let members = g.elements().filter(|&h| g.elements().all(|x| g.commutes(h, x)));
    SubgroupMask::from_set_unchecked(ElementSet::from_elements(g.order(), members))
}

pub fn centralizer(g: &CayleyTable, h: ElementId) -> SubgroupMask {
    let members = g.elements().filter(|&x| g.commutes(h, x));
    SubgroupMask::from_set_unchecked(ElementSet::from_elements(g.order(), members))
}

/// `|Z(G)|` followed by the sorted sizes of the non-central classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEquation {
    pub center_size: usize,
    pub orbit_sizes: Vec<usize>,
}

impl ClassEquation {
    /// `center_size + Σ orbit_sizes = |G|` and every orbit size divides `|G|`.
    pub fn holds_for(&self, order: usize) -> bool {
        self.center_size + self.orbit_sizes.iter().sum::<usize>() == order
            && self.orbit_sizes.iter().all(|&k| k > 1 && order % k == 0)
    }
}

impl fmt::Display for ClassEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.center_size)?;
        for k in &self.orbit_sizes {
            write!(f, " + {k}")?;
        }
        Ok(())
    }
}

/// Conjugacy classes ordered by smallest element, and the class equation.
pub fn conjugacy_classes(g: &CayleyTable) -> (Vec<ElementSet>, ClassEquation) {
    let mut seen = ElementSet::empty(g.order());
    let mut classes = Vec::new();
    for h in g.elements() {
        if seen.contains(h) {
            continue;
        }
        let class = ElementSet::from_elements(g.order(), g.elements().map(|x| g.conjugate(x, h)));
        seen = seen.union(&class);
        classes.push(class);
    }
    let center_size = classes.iter().filter(|c| c.len() == 1).count();
    let mut orbit_sizes: Vec<usize> = classes.iter().map(ElementSet::len).filter(|&k| k > 1).collect();
    orbit_sizes.sort_unstable();
    (classes, ClassEquation { center_size, orbit_sizes })
}

pub fn derived_subgroup(g: &CayleyTable) -> SubgroupMask {
    let commutators: Vec<ElementId> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    g.subgroup_generated(commutators)
}

/// Result of checking that `D(G)` is the least normal subgroup with an
/// abelian quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedCertificate {
    pub derived: SubgroupMask,
    /// Every normal subgroup `N` with `G/N` abelian.
    pub abelian_kernels: Vec<SubgroupMask>,
    pub holds: bool,
}

/// Enumerates all normal `N` with `G/N` abelian (by building the quotient)
/// and checks `D(G) ⊆ N` for each, and that `D(G)` is among them.
pub fn verify_derived_minimal(g: &CayleyTable) -> DerivedCertificate {
    let derived = derived_subgroup(g);
    let abelian_kernels: Vec<SubgroupMask> = all_subgroups(g)
        .into_iter()
        .filter(|n| g.is_normal(n))
        .filter(|n| g.quotient(n).map(|(q, _)| q.is_abelian()).unwrap_or(false))
        .collect();
    let holds = abelian_kernels.contains(&derived) && abelian_kernels.iter().all(|n| derived.is_subgroup_of(n));
    DerivedCertificate { derived, abelian_kernels, holds }
}

/// Every subgroup, sorted by (order, mask value).
///
/// Starts from the cyclic subgroups and joins each newly found subgroup
/// with every cyclic subgroup until nothing new appears.
pub fn all_subgroups(g: &CayleyTable) -> Vec<SubgroupMask> {
    let mut cyclic: Vec<(ElementId, SubgroupMask)> = Vec::new();
    for a in g.elements() {
        let c = g.subgroup_generated([a]);
        if !cyclic.iter().any(|(_, d)| *d == c) {
            cyclic.push((a, c));
        }
    }
    let mut found: BTreeSet<SubgroupMask> = cyclic.iter().map(|(_, c)| c.clone()).collect();
    let mut frontier: Vec<SubgroupMask> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for (a, _) in &cyclic {
                if s.contains(*a) {
                    continue;
                }
                let join = g.subgroup_generated(s.iter().chain([*a]));
                if found.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SubgroupMask> = found.into_iter().collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

pub fn subgroups_containing(g: &CayleyTable, h: &SubgroupMask) -> Vec<SubgroupMask> {
    all_subgroups(g).into_iter().filter(|s| h.is_subgroup_of(s)).collect()
}

/// Checks that `S ↦ S/N` is a bijection from subgroups containing `N` onto
/// the subgroups of `G/N`, in both directions.
pub fn correspondence_check(g: &CayleyTable, nsub: &SubgroupMask) -> Result<bool> {
    if !g.is_normal(nsub) {
        return Err(Error::NotNormal);
    }
    let (q, proj) = g.quotient(nsub)?;
    let upstairs = subgroups_containing(g, nsub);
    let downstairs: BTreeSet<ElementSet> = all_subgroups(&q).into_iter().map(|s| s.members().clone()).collect();
    let images: BTreeSet<ElementSet> = upstairs.iter().map(|s| proj.map_set(s.members())).collect();
    let injective = images.len() == upstairs.len();
    // every subgroup of G/N pulls back to a subgroup containing N that maps onto it
    let surjective = downstairs.iter().all(|t| {
        let pre = proj.preimage(t);
        upstairs.iter().any(|s| *s.members() == pre) && proj.map_set(&pre) == *t
    });
    Ok(injective && surjective && images == downstairs)
}

/// Element order → number of elements of that order.
pub fn order_profile(g: &CayleyTable) -> BTreeMap<usize, usize> {
    profile_of(g, g.elements())
}

fn profile_of(g: &CayleyTable, elems: impl Iterator<Item = ElementId>) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for a in elems {
        *out.entry(g.element_order(a)).or_insert(0) += 1;
    }
    out
}

/// Subgroup order → number of subgroups of that order.
pub fn subgroup_counts(g: &CayleyTable) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for s in all_subgroups(g) {
        *out.entry(s.order()).or_insert(0) += 1;
    }
    out
}

/// Isomorphism invariants compared lexicographically in field order.
///
/// Equal fingerprints are necessary for isomorphism, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub order_profile: Vec<(usize, usize)>,
    pub center_order: usize,
    pub center_profile: Vec<(usize, usize)>,
    pub derived_order: usize,
    pub abelianization_profile: Vec<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    pub subgroup_counts: Vec<(usize, usize)>,
}

pub fn fingerprint(g: &CayleyTable) -> Fingerprint {
    let z = center(g);
    let d = derived_subgroup(g);
    let (ab, _) = g.quotient(&d).expect("derived subgroup is normal");
    let (classes, _) = conjugacy_classes(g);
    let mut class_sizes: Vec<usize> = classes.iter().map(ElementSet::len).collect();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        order_profile: order_profile(g).into_iter().collect(),
        center_order: z.order(),
        center_profile: profile_of(g, z.iter()).into_iter().collect(),
        derived_order: d.order(),
        abelianization_profile: order_profile(&ab).into_iter().collect(),
        class_sizes,
        subgroup_counts: subgroup_counts(g).into_iter().collect(),
    }
}

/// Isomorphism type of a center, named as in the order-16 table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CenterType {
    WholeGroup,
    Trivial,
    Z2,
    Z4,
    Z2xZ2,
    Other(usize),
}

impl CenterType {
    pub fn of(g: &CayleyTable) -> Self {
        Self::classify(g, &center(g))
    }

    pub fn classify(g: &CayleyTable, z: &SubgroupMask) -> Self {
        if z.is_whole() {
            return CenterType::WholeGroup;
        }
        match z.order() {
            1 => CenterType::Trivial,
            2 => CenterType::Z2,
            4 if z.iter().any(|a| g.element_order(a) == 4) => CenterType::Z4,
            4 => CenterType::Z2xZ2,
            n => CenterType::Other(n),
        }
    }
}

impl fmt::Display for CenterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterType::WholeGroup => f.write_str("Z(G)=G"),
            CenterType::Trivial => f.write_str("Z₁"),
            CenterType::Z2 => f.write_str("Z₂"),
            CenterType::Z4 => f.write_str("Z₄"),
            CenterType::Z2xZ2 => f.write_str("Z₂×Z₂"),
            CenterType::Other(n) => write!(f, "order {n}"),
        }
    }
}

impl Serialize for CenterType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub size: usize,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<CenterType>,
    pub members: Vec<String>,
}

/// The report printed by `fingroup invariants`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub center: SubgroupSummary,
    pub derived: SubgroupSummary,
    pub class_equation: ClassEquation,
    pub order_profile: BTreeMap<usize, usize>,
    pub subgroup_counts: BTreeMap<usize, usize>,
}

impl InvariantReport {
    pub fn new(g: &CayleyTable) -> Self {
        let names = |s: &SubgroupMask| s.iter().map(|a| g.label(a).into_owned()).collect();
        let z = center(g);
        let d = derived_subgroup(g);
        InvariantReport {
            order: g.order(),
            center: SubgroupSummary { size: z.order(), kind: Some(CenterType::classify(g, &z)), members: names(&z) },
            derived: SubgroupSummary { size: d.order(), kind: None, members: names(&d) },
            class_equation: conjugacy_classes(g).1,
            order_profile: order_profile(g),
            subgroup_counts: subgroup_counts(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{abelian, cyclic, dihedral, quaternion_units};

    #[test]
    fn centers() {
        let z6 = cyclic(6).unwrap();
        assert!(center(&z6).is_whole());
        let d4 = dihedral(4);
        let z = center(&d4);
        assert_eq!(z.to_vec(), vec![0, d4.find_label("r^2").unwrap()]);
        assert_eq!(CenterType::of(&d4), CenterType::Z2);
        assert_eq!(CenterType::of(&dihedral(3)), CenterType::Trivial);
        assert_eq!(CenterType::of(&z6), CenterType::WholeGroup);
    }

    #[test]
    fn centralizer_of_rotation() {
        let d4 = dihedral(4);
        let r = d4.find_label("r").unwrap();
        assert_eq!(centralizer(&d4, r), d4.subgroup_generated([r]));
        assert!(centralizer(&d4, 0).is_whole());
    }

    #[test]
    fn class_equations() {
        let (_, eq) = conjugacy_classes(&quaternion_units());
        assert_eq!(eq, ClassEquation { center_size: 2, orbit_sizes: vec![2, 2, 2] });
        assert!(eq.holds_for(8));
        assert_eq!(eq.to_string(), "2 + 2 + 2 + 2");
        let (classes, eq) = conjugacy_classes(&cyclic(5).unwrap());
        assert_eq!(classes.len(), 5);
        assert!(eq.orbit_sizes.is_empty());
    }

    #[test]
    fn derived_subgroups() {
        assert!(derived_subgroup(&cyclic(8).unwrap()).is_trivial());
        let q = quaternion_units();
        assert_eq!(derived_subgroup(&q), center(&q));
        let cert = verify_derived_minimal(&q);
        assert!(cert.holds);
        assert_eq!(cert.derived.to_vec(), vec![0, 1]);
        let cert = verify_derived_minimal(&dihedral(4));
        assert!(cert.holds);
        // D(D4), the three order-4 subgroups, and G
        assert_eq!(cert.abelian_kernels.len(), 5);
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(all_subgroups(&cyclic(7).unwrap()).len(), 2);
        assert_eq!(all_subgroups(&abelian(&[2, 2]).unwrap()).len(), 5);
        let counts = subgroup_counts(&abelian(&[2, 2, 2]).unwrap());
        assert_eq!(counts[&4], 7);
        assert_eq!(counts[&2], 7);
        let d4 = dihedral(4);
        let subs = all_subgroups(&d4);
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        let above = subgroups_containing(&d4, &center(&d4));
        let orders: Vec<_> = above.iter().map(SubgroupMask::order).collect();
        assert_eq!(orders, vec![2, 4, 4, 4, 8]);
    }

    #[test]
    fn correspondence() {
        let d4 = dihedral(4);
        assert!(correspondence_check(&d4, &d4.trivial_subgroup()).unwrap());
        assert!(correspondence_check(&d4, &d4.whole()).unwrap());
        assert!(correspondence_check(&d4, &center(&d4)).unwrap());
        let s = d4.subgroup_generated([d4.find_label("s").unwrap()]);
        assert!(matches!(correspondence_check(&d4, &s), Err(Error::NotNormal)));
    }

    #[test]
    fn order_profiles() {
        let p: Vec<_> = order_profile(&quaternion_units()).into_iter().collect();
        assert_eq!(p, vec![(1, 1), (2, 1), (4, 6)]);
        let p: Vec<_> = order_profile(&dihedral(4)).into_iter().collect();
        assert_eq!(p, vec![(1, 1), (2, 5), (4, 2)]);
    }

    #[test]
    fn fingerprints_separate_small_groups() {
        assert_ne!(fingerprint(&cyclic(8).unwrap()), fingerprint(&abelian(&[4, 2]).unwrap()));
        assert_ne!(fingerprint(&dihedral(4)), fingerprint(&quaternion_units()));
        let d4 = dihedral(4);
        let perm = [0, 7, 6, 5, 4, 3, 2, 1];
        assert_eq!(fingerprint(&d4.relabeled(&perm)), fingerprint(&d4));
    }

    #[test]
    fn report_json_shape() {
        let r = InvariantReport::new(&quaternion_units());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["center"]["type"], "Z₂");
        assert_eq!(v["center"]["members"], serde_json::json!(["1", "-1"]));
        assert_eq!(v["order_profile"]["4"], 6);
        assert!(v["derived"].get("type").is_none());
    }
}
