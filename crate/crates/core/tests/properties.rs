use std::sync::OnceLock;

use proptest::prelude::*;

use fingroup::classification::{build_catalog, catalog_order16, catalog_order8};
use fingroup::constructors::{automorphism_group, cyclic, direct_product, semidirect_product, AutMap, SdpSpec};
use fingroup::group::Side;
use fingroup::invariants::{all_subgroups, center, fingerprint};
use fingroup::isomorphism::{find_isomorphism, search_isomorphism};
use fingroup::presentation::{enumerate, parse_presentation, satisfies_relations, Presentation, Relation, Word};
use fingroup::{validate_table, CayleyTable};

fn catalog() -> &'static [(String, CayleyTable)] {
    static GROUPS: OnceLock<Vec<(String, CayleyTable)>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        build_catalog(catalog_order8())
            .into_iter()
            .chain(build_catalog(catalog_order16()))
            .map(|b| (b.entry.id.to_string(), b.group().unwrap().clone()))
            .collect()
    })
}

/// A permutation of `0..n` fixing 0.
fn relabeling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|rest| {
        let mut p = vec![0];
        p.extend(rest);
        p
    })
}

fn group_and_relabeling() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..catalog().len()).prop_flat_map(|i| (Just(i), relabeling(catalog()[i].1.order())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeled_groups_are_isomorphic((i, perm) in group_and_relabeling()) {
        let g = &catalog()[i].1;
        let h = g.relabeled(&perm);
        prop_assert!(validate_table(&h.rows()).is_ok());
        prop_assert_eq!(fingerprint(&h), fingerprint(g));
        let w = find_isomorphism(g, &h).expect("relabeling is an isomorphism");
        prop_assert!(w.verify(g, &h));
        let back = w.mapping.inverse().unwrap();
        prop_assert!(back.is_homomorphism(&h, g));
    }

    #[test]
    fn generated_subgroups_obey_lagrange(i in 0..19usize, seeds in prop::collection::vec(0..16usize, 0..4)) {
        let g = &catalog()[i].1;
        let seeds: Vec<usize> = seeds.into_iter().map(|s| s % g.order()).collect();
        let h = g.subgroup_generated(seeds.iter().copied());
        prop_assert!(h.contains(0));
        prop_assert!(seeds.iter().all(|&s| h.contains(s)));
        prop_assert_eq!(g.order() % h.order(), 0);
        for a in h.iter() {
            prop_assert!(h.contains(g.inv(a)));
            for b in h.iter() {
                prop_assert!(h.contains(g.mul(a, b)));
            }
        }
        let left = g.cosets(&h, Side::Left);
        prop_assert!(left.blocks.iter().all(|b| b.len() == h.order()));
        prop_assert_eq!(&left.blocks[0], h.members());
        if g.is_normal(&h) {
            prop_assert_eq!(&left.blocks, &g.cosets(&h, Side::Right).blocks);
        }
    }

    #[test]
    fn presentations_round_trip(
        relations in prop::collection::vec(
            (prop::collection::vec((0..3usize, -4i64..5), 0..5), prop::collection::vec((0..3usize, -4i64..5), 0..5)),
            0..5,
        )
    ) {
        let relations: Vec<Relation> = relations
            .into_iter()
            .map(|(l, r)| Relation::new(Word::from_factors(l), Word::from_factors(r)))
            .filter(|r| !r.relator().is_identity())
            .collect();
        let p = Presentation::new(vec!['a', 'b', 'c'], relations);
        let text = p.to_string();
        prop_assert_eq!(parse_presentation(&text).unwrap(), p);
    }

    #[test]
    fn semidirect_products_with_involutions(k in 0..4usize) {
        let z8 = cyclic(8).unwrap();
        let auts = automorphism_group(&z8);
        let a = &auts[k];
        let spec = SdpSpec::cyclic(z8.clone(), 2, a.clone()).unwrap();
        let g = semidirect_product(&spec);
        prop_assert_eq!(g.order(), 16);
        prop_assert!(validate_table(&g.rows()).is_ok());
        // pairs (n, e) sit at even indices, pairs (e, h) at 0 and 1
        let n_copy = g.subgroup_generated([2]);
        let h_copy = g.subgroup_generated([1]);
        prop_assert_eq!(n_copy.order(), 8);
        prop_assert!(g.is_normal(&n_copy));
        prop_assert!(n_copy.intersection(&h_copy).is_trivial());
        prop_assert_eq!(g.is_abelian(), a.is_identity());
    }
}

#[test]
fn quotient_projections_are_homomorphisms() {
    for (id, g) in catalog() {
        for n in all_subgroups(g).into_iter().filter(|n| g.is_normal(n)) {
            let (q, proj) = g.quotient(&n).unwrap();
            assert_eq!(q.order() * n.order(), g.order(), "{id}");
            assert!(proj.is_homomorphism(g, &q), "{id}");
            assert_eq!(proj.kernel(), n, "{id}");
        }
    }
}

#[test]
fn products_pass_validation() {
    let z4 = cyclic(4).unwrap();
    let z2 = cyclic(2).unwrap();
    assert!(validate_table(&direct_product(&z4, &z2).rows()).is_ok());
    let inv = AutMap::from_generator_images(&z4, &[1], &[3]).unwrap();
    let d4 = semidirect_product(&SdpSpec::cyclic(z4, 2, inv).unwrap());
    assert!(validate_table(&d4.rows()).is_ok());
    assert_eq!(center(&d4).order(), 2);
}

#[test]
fn isomorphism_is_an_equivalence_on_the_catalog() {
    let groups = catalog();
    for (i, (a, g1)) in groups.iter().enumerate() {
        let id = find_isomorphism(g1, g1).expect("reflexive");
        assert!(id.verify(g1, g1));
        let copy = g1.relabeled(&(0..g1.order()).map(|x| if x == 0 { 0 } else { g1.order() - x }).collect::<Vec<_>>());
        let w = find_isomorphism(g1, &copy).unwrap();
        let back = find_isomorphism(&copy, g1).unwrap();
        assert!(back.verify(&copy, g1), "{a}");
        // transitivity through the copy
        let composed = back.mapping.compose(&w.mapping);
        assert!(composed.is_bijective() && composed.is_homomorphism(g1, g1), "{a}");
        for (b, g2) in &groups[i + 1..] {
            assert!(find_isomorphism(g1, g2).is_none(), "{a} vs {b}");
        }
    }
}

#[test]
fn backtracking_alone_separates_catalog_groups() {
    // fingerprints might coincide for distinct groups; the search must then
    // still answer none
    let groups = catalog();
    for (i, (a, g1)) in groups.iter().enumerate() {
        for (b, g2) in &groups[i + 1..] {
            assert!(search_isomorphism(g1, g2).is_none(), "{a} vs {b}");
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_consistent() {
    for entry in catalog_order8().into_iter().chain(catalog_order16()) {
        let a = enumerate(&entry.presentation).unwrap();
        let b = enumerate(&parse_presentation(entry.presentation_text).unwrap()).unwrap();
        assert_eq!(a.group.to_json(), b.group.to_json(), "{}", entry.id);
        assert_eq!(a.group.order(), entry.order);
        assert!(satisfies_relations(&a.group, &a.generators, &entry.presentation));
    }
}
