//! Groups built without presentations: cyclic groups, direct and
//! semidirect products, and automorphism groups.

use std::fmt;

use crate::error::ConstructionError;
use crate::group::{CayleyTable, ElementId, GroupHom};
use crate::isomorphism::minimal_generating_set;

/// Addition modulo `n`; element `k` is the residue `k`.
pub fn cyclic(n: usize) -> Result<CayleyTable, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidOrder(n));
    }
    Ok(CayleyTable::from_fn_unchecked(n, |a, b| (a + b) % n))
}

/// `g1 × g2`; the pair `(a, b)` sits at index `a·|g2| + b`.
pub fn direct_product(g1: &CayleyTable, g2: &CayleyTable) -> CayleyTable {
    let m = g2.order();
    let g = CayleyTable::from_fn_unchecked(g1.order() * m, |x, y| {
        g1.mul(x / m, y / m) * m + g2.mul(x % m, y % m)
    });
    let labels = (0..g.order())
        .map(|x| format!("({},{})", g1.label(x / m), g2.label(x % m)))
        .collect();
    g.with_labels(labels).expect("label count")
}

/// Direct product of cyclic groups of the given orders, left-nested.
pub fn abelian(orders: &[usize]) -> Result<CayleyTable, ConstructionError> {
    let Some((&first, rest)) = orders.split_first() else {
        return cyclic(1);
    };
    let mut g = cyclic(first)?;
    for &n in rest {
        g = direct_product(&g, &cyclic(n)?);
    }
    Ok(g)
}

/// Dihedral group of order `2n` as `Z_n ⋊ Z_2` with inversion, labelled
/// `r^k` and `r^k s`.
pub fn dihedral(n: usize) -> CayleyTable {
    assert!(n >= 1);
    let spec = SdpSpec::cyclic(cyclic(n).expect("n >= 1"), 2, inversion(n)).expect("inversion is an involution");
    let g = semidirect_product(&spec);
    let labels = (0..2 * n)
        .map(|x| {
            let (k, s) = (x / 2, x % 2);
            let r = match k {
                0 if s == 0 => "e".to_string(),
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            if s == 1 {
                format!("{r}s")
            } else {
                r
            }
        })
        .collect();
    g.with_labels(labels).expect("label count")
}

/// The inversion automorphism `k ↦ -k` of `Z_n`.
pub fn inversion(n: usize) -> AutMap {
    AutMap { perm: (0..n).map(|k| (n - k) % n).collect() }
}

/// The quaternion units `{1,-1,i,-i,j,-j,k,-k}` under multiplication, in
/// that index order.
pub fn quaternion_units() -> CayleyTable {
    // basis 0..4 = 1,i,j,k; element index = 2*basis + sign bit
    const MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let g = CayleyTable::from_fn_unchecked(8, |a, b| {
        let (basis, neg) = MUL[a / 2][b / 2];
        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
        2 * basis + usize::from(sign)
    });
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    g.with_labels(labels).expect("label count")
}

/// An automorphism, as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutMap {
    perm: Vec<ElementId>,
}

impl AutMap {
    /// Checks that `perm` is a bijective homomorphism of `g`.
    pub fn new(g: &CayleyTable, perm: Vec<ElementId>) -> Result<Self, ConstructionError> {
        let hom = GroupHom::new(g, g, perm).filter(GroupHom::is_bijective);
        match hom {
            Some(h) => Ok(AutMap { perm: h.image().to_vec() }),
            None => Err(ConstructionError::NotAutomorphism { order: g.order() }),
        }
    }

    pub fn identity(order: usize) -> Self {
        AutMap { perm: (0..order).collect() }
    }

    /// Completes generator images to a full automorphism.
    pub fn from_generator_images(
        g: &CayleyTable,
        gens: &[ElementId],
        images: &[ElementId],
    ) -> Result<Self, ConstructionError> {
        GroupHom::extend_from_generators(g, g, gens, images)
            .filter(|h| h.is_bijective())
            .map(|h| AutMap { perm: h.image().to_vec() })
            .ok_or(ConstructionError::NotAutomorphism { order: g.order() })
    }

    pub fn group_order(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[ElementId] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.perm[a]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AutMap) -> AutMap {
        AutMap { perm: other.perm.iter().map(|&a| self.perm[a]).collect() }
    }

    pub fn inverse(&self) -> AutMap {
        let mut inv = vec![0; self.perm.len()];
        for (a, &b) in self.perm.iter().enumerate() {
            inv[b] = a;
        }
        AutMap { perm: inv }
    }

    pub fn pow(&self, k: usize) -> AutMap {
        (0..k).fold(AutMap::identity(self.perm.len()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(a, &b)| a == b)
    }
}

/// All automorphisms of `g`, in lexicographic order of their permutations.
///
/// Backtracks over images of a minimal generating set, restricted to
/// elements of matching order.
pub fn automorphism_group(g: &CayleyTable) -> Vec<AutMap> {
    let gens = minimal_generating_set(g);
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            let k = g.element_order(s);
            g.elements().filter(|&t| g.element_order(t) == k).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search_images(g, &gens, &candidates, &mut images, &mut out);
    out.sort();
    out
}

fn search_images(
    g: &CayleyTable,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
    out: &mut Vec<AutMap>,
) {
    let depth = images.len();
    if depth == gens.len() {
        if let Ok(a) = AutMap::from_generator_images(g, gens, images) {
            out.push(a);
        }
        return;
    }
    for &t in &candidates[depth] {
        if images.contains(&t) {
            continue;
        }
        images.push(t);
        search_images(g, gens, candidates, images, out);
        images.pop();
    }
}

/// Data for `N ⋊ H`: an action of `H` on `N` stored for every element of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdpSpec {
    normal: CayleyTable,
    acting: CayleyTable,
    action: Vec<AutMap>,
}

impl SdpSpec {
    /// Validates that `action` is a homomorphism `H → Aut(N)`.
    pub fn new(normal: CayleyTable, acting: CayleyTable, action: Vec<AutMap>) -> Result<Self, ConstructionError> {
        if action.len() != acting.order() {
            return Err(ConstructionError::ActionSize { expected: acting.order(), got: action.len() });
        }
        for a in &action {
            if a.group_order() != normal.order() {
                return Err(ConstructionError::NotAutomorphism { order: normal.order() });
            }
            AutMap::new(&normal, a.perm.clone())?;
        }
        for h1 in acting.elements() {
            for h2 in acting.elements() {
                if action[acting.mul(h1, h2)] != action[h1].compose(&action[h2]) {
                    return Err(ConstructionError::ActionNotHomomorphism(h1, h2));
                }
            }
        }
        Ok(SdpSpec { normal, acting, action })
    }

    /// Action of `Z_m` whose generator `1` acts by `generator`.
    pub fn cyclic(normal: CayleyTable, m: usize, generator: AutMap) -> Result<Self, ConstructionError> {
        let acting = cyclic(m)?;
        let action = (0..m).map(|k| generator.pow(k)).collect();
        SdpSpec::new(normal, acting, action)
    }

    /// The trivial action, giving the direct product.
    pub fn trivial(normal: CayleyTable, acting: CayleyTable) -> Self {
        let action = vec![AutMap::identity(normal.order()); acting.order()];
        SdpSpec { normal, acting, action }
    }

    pub fn normal(&self) -> &CayleyTable {
        &self.normal
    }

    pub fn acting(&self) -> &CayleyTable {
        &self.acting
    }

    pub fn action(&self, h: ElementId) -> &AutMap {
        &self.action[h]
    }
}

/// `N ⋊ H` with `(n1,h1)(n2,h2) = (n1·φ_{h1}(n2), h1h2)`; the pair
/// `(n, h)` sits at index `n·|H| + h`.
pub fn semidirect_product(spec: &SdpSpec) -> CayleyTable {
    let (n, h) = (&spec.normal, &spec.acting);
    let m = h.order();
    let g = CayleyTable::from_fn_unchecked(n.order() * m, |x, y| {
        let (n1, h1) = (x / m, x % m);
        let (n2, h2) = (y / m, y % m);
        n.mul(n1, spec.action[h1].apply(n2)) * m + h.mul(h1, h2)
    });
    let labels = (0..g.order())
        .map(|x| format!("({},{})", n.label(x / m), h.label(x % m)))
        .collect();
    g.with_labels(labels).expect("label count")
}

/// The five split extensions used by the order-16 catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionKey {
    /// `Z4 → Aut(Z2×Z2)`, `1 ↦ [(1,0)↦(1,0), (0,1)↦(1,1)]`.
    KleinByZ4,
    /// `Z2 → Aut(Z4×Z2)`, `1 ↦ [(1,0)↦(1,0), (0,1)↦(2,1)]`.
    Z4xZ2ByZ2,
    /// `Z2 → Aut(Z8)`, `1 ↦ (1 ↦ 5)`.
    Z8Phi1,
    /// `Z2 → Aut(Z8)`, `1 ↦ (1 ↦ 7)`.
    Z8Phi2,
    /// `Z2 → Aut(Z8)`, `1 ↦ (1 ↦ 3)`.
    Z8Phi3,
}

impl ActionKey {
    pub const ALL: [ActionKey; 5] =
        [ActionKey::KleinByZ4, ActionKey::Z4xZ2ByZ2, ActionKey::Z8Phi1, ActionKey::Z8Phi2, ActionKey::Z8Phi3];

    pub fn name(self) -> &'static str {
        match self {
            ActionKey::KleinByZ4 => "phi:Z4->Aut(Z2xZ2)",
            ActionKey::Z4xZ2ByZ2 => "phi:Z2->Aut(Z4xZ2)",
            ActionKey::Z8Phi1 => "phi1:Z2->Aut(Z8)",
            ActionKey::Z8Phi2 => "phi2:Z2->Aut(Z8)",
            ActionKey::Z8Phi3 => "phi3:Z2->Aut(Z8)",
        }
    }

    /// Builds the action from the generator images and validates it.
    pub fn spec(self) -> SdpSpec {
        // pairs (a, b) of Zm × Z2 sit at index 2a + b
        let pair = |a: usize, b: usize| 2 * a + b;
        let (normal, m, gens, images) = match self {
            ActionKey::KleinByZ4 => (abelian(&[2, 2]), 4, vec![pair(1, 0), pair(0, 1)], vec![pair(1, 0), pair(1, 1)]),
            ActionKey::Z4xZ2ByZ2 => (abelian(&[4, 2]), 2, vec![pair(1, 0), pair(0, 1)], vec![pair(1, 0), pair(2, 1)]),
            ActionKey::Z8Phi1 => (cyclic(8), 2, vec![1], vec![5]),
            ActionKey::Z8Phi2 => (cyclic(8), 2, vec![1], vec![7]),
            ActionKey::Z8Phi3 => (cyclic(8), 2, vec![1], vec![3]),
        };
        let normal = normal.expect("valid factor orders");
        let generator = AutMap::from_generator_images(&normal, &gens, &images)
            .unwrap_or_else(|e| panic!("{}: {e}", self.name()));
        SdpSpec::cyclic(normal, m, generator).unwrap_or_else(|e| panic!("{}: {e}", self.name()))
    }
}

impl fmt::Display for ActionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The five catalog actions, each validated as a homomorphism.
pub fn catalog_actions() -> Vec<(ActionKey, SdpSpec)> {
    ActionKey::ALL.iter().map(|&k| (k, k.spec())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::order_profile;

    #[test]
    fn cyclic_groups() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert!(matches!(cyclic(0), Err(ConstructionError::InvalidOrder(0))));
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.element_order(2), 2);
        let z16 = cyclic(16).unwrap();
        assert!(z16.is_cyclic());
        assert_eq!(z16.element_order(1), 16);
    }

    #[test]
    fn direct_products() {
        let z4z2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap());
        assert_eq!(z4z2.order(), 8);
        assert!(z4z2.is_abelian());
        let profile: Vec<_> = order_profile(&z4z2).into_iter().collect();
        assert_eq!(profile, vec![(1, 1), (2, 3), (4, 4)]);
        let t = direct_product(&dihedral(4), &cyclic(1).unwrap());
        assert_eq!(t.rows(), dihedral(4).rows());
    }

    #[test]
    fn quaternion_units_multiply() {
        let q = quaternion_units();
        let f = |s: &str| q.find_label(s).unwrap();
        assert_eq!(q.mul(f("i"), f("j")), f("k"));
        assert_eq!(q.mul(f("j"), f("i")), f("-k"));
        assert_eq!(q.mul(f("i"), f("i")), f("-1"));
        assert_eq!(q.element_order(f("-1")), 2);
        assert_eq!(q.element_order(f("k")), 4);
        crate::group::validate_table(&q.rows()).unwrap();
    }

    #[test]
    fn automorphism_counts() {
        let aut_z8 = automorphism_group(&cyclic(8).unwrap());
        assert_eq!(aut_z8.len(), 4);
        let images: Vec<_> = aut_z8.iter().map(|a| a.apply(1)).collect();
        assert_eq!(images, vec![1, 3, 5, 7]);
        assert_eq!(automorphism_group(&cyclic(1).unwrap()).len(), 1);
        assert_eq!(automorphism_group(&abelian(&[2, 2]).unwrap()).len(), 6);
        assert_eq!(automorphism_group(&dihedral(4)).len(), 8);
        assert_eq!(automorphism_group(&quaternion_units()).len(), 24);
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let n = cyclic(4).unwrap();
        let h = cyclic(2).unwrap();
        let sdp = semidirect_product(&SdpSpec::trivial(n.clone(), h.clone()));
        assert_eq!(sdp.rows(), direct_product(&n, &h).rows());
    }

    #[test]
    fn non_homomorphic_action_is_rejected() {
        // 1 ↦ 2 has order 4 in Aut(Z5), so it cannot be the image of an involution
        let z5 = cyclic(5).unwrap();
        let a = AutMap::from_generator_images(&z5, &[1], &[2]).unwrap();
        assert_eq!(
            SdpSpec::cyclic(z5, 2, a),
            Err(ConstructionError::ActionNotHomomorphism(1, 1))
        );
    }

    #[test]
    fn bad_automorphism_is_rejected() {
        let z8 = cyclic(8).unwrap();
        assert!(AutMap::from_generator_images(&z8, &[1], &[2]).is_err());
        assert!(AutMap::new(&z8, vec![0, 2, 1, 3, 4, 5, 6, 7]).is_err());
    }

    #[test]
    fn catalog_action_arithmetic() {
        let specs = catalog_actions();
        assert_eq!(specs.len(), 5);
        let phi2 = ActionKey::Z8Phi2.spec();
        assert!(phi2.action(1).compose(phi2.action(1)).is_identity());
        let phi3 = ActionKey::Z8Phi3.spec();
        assert_eq!(phi3.action(1).apply(1), 3);
        assert_eq!(phi3.action(1).pow(2).apply(1), 1);
        let klein = ActionKey::KleinByZ4.spec();
        // (1,1) = index 3 goes to (1,0)+(1,1) = (0,1) = index 1
        assert_eq!(klein.action(1).apply(3), 1);
        assert_eq!(klein.acting().order(), 4);
        let b = ActionKey::Z4xZ2ByZ2.spec();
        assert_eq!(b.action(1).apply(1), 5);
    }

    #[test]
    fn dihedral_labels() {
        let d4 = dihedral(4);
        assert_eq!(d4.labels().unwrap(), ["e", "s", "r", "rs", "r^2", "r^2s", "r^3", "r^3s"]);
        let r = d4.find_label("r").unwrap();
        let s = d4.find_label("s").unwrap();
        assert_eq!(d4.mul(s, r), d4.find_label("r^3s").unwrap());
    }
}
