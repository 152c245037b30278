use std::fmt;

use crate::constructors::{abelian, cyclic, dihedral, direct_product, quaternion_units, semidirect_product, ActionKey};
use crate::group::CayleyTable;
use crate::invariants::CenterType;
use crate::presentation::{parse_presentation, Presentation};

/// How to build a catalog group without its presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    /// Direct product of cyclic groups of the listed orders.
    Abelian(Vec<usize>),
    /// `Z_n ⋊ Z_2` with the inversion action.
    Dihedral(usize),
    QuaternionUnits,
    Direct(Box<Recipe>, Box<Recipe>),
    Semidirect(ActionKey),
}

impl Recipe {
    pub fn build(&self) -> CayleyTable {
        match self {
            Recipe::Abelian(orders) if orders.len() == 1 => cyclic(orders[0]).expect("positive order"),
            Recipe::Abelian(orders) => abelian(orders).expect("positive orders"),
            Recipe::Dihedral(n) => dihedral(*n),
            Recipe::QuaternionUnits => quaternion_units(),
            Recipe::Direct(a, b) => direct_product(&a.build(), &b.build()),
            Recipe::Semidirect(key) => semidirect_product(&key.spec()),
        }
    }

    fn cyclic(n: usize) -> Recipe {
        Recipe::Abelian(vec![n])
    }

    fn direct(a: Recipe, b: Recipe) -> Recipe {
        Recipe::Direct(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Abelian(orders) => {
                let parts: Vec<String> = orders.iter().map(|n| format!("Z{n}")).collect();
                f.write_str(&parts.join("x"))
            }
            Recipe::Dihedral(n) => write!(f, "semidirect(Z{n}, Z2, inversion)"),
            Recipe::QuaternionUnits => f.write_str("quaternion units"),
            Recipe::Direct(a, b) => write!(f, "direct({a}, {b})"),
            Recipe::Semidirect(key) => write!(f, "semidirect({key})"),
        }
    }
}

/// One row of a classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// ASCII identifier, stable across releases.
    pub id: &'static str,
    pub name: &'static str,
    pub order: usize,
    /// Presentation text as enumerated.
    pub presentation_text: &'static str,
    pub presentation: Presentation,
    pub construction: Option<Recipe>,
    pub declared_center: CenterType,
    /// Center members as words in the generators, when listed.
    pub declared_center_members: Option<Vec<&'static str>>,
    pub declared_derived_order: usize,
    pub abelian: bool,
}

struct Row {
    id: &'static str,
    name: &'static str,
    text: &'static str,
    construction: Option<Recipe>,
    center: CenterType,
    members: Option<&'static [&'static str]>,
    derived: usize,
}

fn entry(order: usize, row: Row) -> CatalogEntry {
    let presentation = parse_presentation(row.text)
        .unwrap_or_else(|e| panic!("catalog presentation {}: {e}", row.id))
        .with_expected_order(order);
    CatalogEntry {
        id: row.id,
        name: row.name,
        order,
        presentation_text: row.text,
        presentation,
        construction: row.construction,
        declared_center: row.center,
        declared_center_members: row.members.map(<[_]>::to_vec),
        declared_derived_order: row.derived,
        abelian: row.center == CenterType::WholeGroup,
    }
}

fn abelian_row(id: &'static str, name: &'static str, text: &'static str, orders: &[usize]) -> Row {
    Row {
        id,
        name,
        text,
        construction: Some(Recipe::Abelian(orders.to_vec())),
        center: CenterType::WholeGroup,
        members: None,
        derived: 1,
    }
}

/// The five groups of order 8.
pub fn catalog_order8() -> Vec<CatalogEntry> {
    let rows = [
        abelian_row("Z8", "Z₈", "a^8=e", &[8]),
        abelian_row("Z4xZ2", "Z₄×Z₂", "a^4=b^2=e, abelian", &[4, 2]),
        abelian_row("Z2^3", "(Z₂)³", "a^2=b^2=c^2=e, abelian", &[2, 2, 2]),
        Row {
            id: "D4",
            name: "D₄ ≅ Z₄⋊Z₂",
            text: "a^4=b^2=e, ba=a^3b",
            construction: Some(Recipe::Dihedral(4)),
            center: CenterType::Z2,
            members: Some(&["e", "a^2"]),
            derived: 2,
        },
        Row {
            id: "Q8",
            name: "H",
            text: "a^4=b^4=e, a^2=b^2, ba=a^3b",
            construction: Some(Recipe::QuaternionUnits),
            center: CenterType::Z2,
            members: Some(&["e", "a^2"]),
            derived: 2,
        },
    ];
    rows.into_iter().map(|r| entry(8, r)).collect()
}

/// The fourteen groups of order 16.
pub fn catalog_order16() -> Vec<CatalogEntry> {
    use CenterType::{Z2xZ2, Z2, Z4};
    let semi = |k| Some(Recipe::Semidirect(k));
    let rows = [
        abelian_row("Z16", "Z₁₆", "a^16=e", &[16]),
        abelian_row("Z8xZ2", "Z₈×Z₂", "a^8=b^2=e, ba=ab", &[8, 2]),
        abelian_row("Z4xZ4", "Z₄×Z₄", "a^4=b^4=e, ba=ab", &[4, 4]),
        abelian_row("Z4xZ2^2", "Z₄×(Z₂)²", "a^4=b^2=c^2=e, abelian", &[4, 2, 2]),
        abelian_row("Z2^4", "(Z₂)⁴", "a^2=b^2=c^2=d^2=e, abelian", &[2, 2, 2, 2]),
        Row {
            id: "D4xZ2",
            name: "D₄×Z₂",
            text: "x^4=y^2=z^2=e, yx=x^3y, zx=xz, zy=yz",
            construction: Some(Recipe::direct(Recipe::Dihedral(4), Recipe::cyclic(2))),
            center: Z2xZ2,
            members: Some(&["e", "x^2", "z", "zx^2"]),
            derived: 2,
        },
        Row {
            id: "Z2xZ2:Z4",
            name: "(Z₂×Z₂)⋊Z₄",
            // the squares of both generators are central
            text: "x^4=y^4=e, yx=x^3y^3, central(x^2), central(y^2)",
            construction: semi(ActionKey::KleinByZ4),
            center: Z2xZ2,
            members: Some(&["e", "x^2", "y^2", "x^2y^2"]),
            derived: 2,
        },
        Row {
            id: "Z4:Z4",
            name: "Z₄⋊Z₄",
            text: "x^4=y^4=e, yx=x^3y",
            construction: None,
            center: Z2xZ2,
            members: Some(&["e", "x^2", "y^2", "x^2y^2"]),
            derived: 2,
        },
        Row {
            id: "Q8xZ2",
            name: "H×Z₂",
            text: "x^4=y^4=z^2=e, x^2=y^2, yx=x^3y, zx=xz, zy=yz",
            construction: Some(Recipe::direct(Recipe::QuaternionUnits, Recipe::cyclic(2))),
            center: Z2xZ2,
            members: Some(&["e", "x^2", "z", "x^2z"]),
            derived: 2,
        },
        Row {
            id: "Z4xZ2:Z2",
            name: "(Z₄×Z₂)⋊Z₂",
            text: "x^4=y^2=z^2=e, xy=yx, zx=xz, zy=x^2yz",
            construction: semi(ActionKey::Z4xZ2ByZ2),
            center: Z4,
            members: Some(&["e", "x", "x^2", "x^3"]),
            derived: 2,
        },
        Row {
            id: "Z8:1Z2",
            name: "Z₈⋊φ₁Z₂",
            text: "x^8=y^2=e, yx=x^5y",
            construction: semi(ActionKey::Z8Phi1),
            center: Z4,
            members: Some(&["e", "x^2", "x^4", "x^6"]),
            derived: 2,
        },
        Row {
            id: "Z8:2Z2",
            name: "Z₈⋊φ₂Z₂",
            text: "x^8=y^2=e, yx=x^7y",
            construction: semi(ActionKey::Z8Phi2),
            center: Z2,
            members: Some(&["e", "x^4"]),
            derived: 4,
        },
        Row {
            id: "Z8:3Z2",
            name: "Z₈⋊φ₃Z₂",
            text: "x^8=y^2=e, yx=x^3y",
            construction: semi(ActionKey::Z8Phi3),
            center: Z2,
            members: Some(&["e", "x^4"]),
            derived: 4,
        },
        Row {
            id: "Q16",
            name: "Gen. Quat.",
            text: "x^8=y^4=e, x^4=y^2, yx=x^3y^3",
            construction: None,
            center: Z2,
            members: Some(&["e", "x^4"]),
            derived: 4,
        },
    ];
    rows.into_iter().map(|r| entry(16, r)).collect()
}

/// Catalog for order 8 or 16.
pub fn catalog(order: usize) -> Option<Vec<CatalogEntry>> {
    match order {
        8 => Some(catalog_order8()),
        16 => Some(catalog_order16()),
        _ => None,
    }
}

/// The two-relator form of the `(Z₂×Z₂)⋊Z₄` presentation, without the
/// centrality of the squares.
pub const BARE_KLEIN_BY_Z4: &str = "x^4=y^4=e, yx=x^3y^3";

/// A three-generator presentation of `(Z₂×Z₂)⋊Z₄`.
pub const ALT_KLEIN_BY_Z4: &str = "x^2=y^2=z^4=e, yx=xy, zx=xyz, zy=yz";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{enumerate, evaluate_word};

    #[test]
    fn sizes() {
        let c8 = catalog_order8();
        assert_eq!(c8.len(), 5);
        assert_eq!(c8.iter().filter(|e| e.abelian).count(), 3);
        let c16 = catalog_order16();
        assert_eq!(c16.len(), 14);
        let count = |t| c16.iter().filter(|e| e.declared_center == t).count();
        assert_eq!(count(CenterType::WholeGroup), 5);
        assert_eq!(count(CenterType::Z2xZ2), 4);
        assert_eq!(count(CenterType::Z4), 2);
        assert_eq!(count(CenterType::Z2), 3);
        assert!(catalog(12).is_none());
    }

    #[test]
    fn quaternion_entry_relation() {
        let q8 = &catalog_order8()[4];
        let e = enumerate(&q8.presentation).unwrap();
        let a2 = evaluate_word(&e.group, &e.generators, &q8.presentation.parse_word("a^2").unwrap());
        let b2 = evaluate_word(&e.group, &e.generators, &q8.presentation.parse_word("b^2").unwrap());
        assert_eq!(a2, b2);
    }

    #[test]
    fn recipe_names() {
        let d4 = &catalog_order8()[3];
        assert_eq!(d4.construction.as_ref().unwrap().to_string(), "semidirect(Z4, Z2, inversion)");
        let c16 = catalog_order16();
        assert_eq!(c16[5].construction.as_ref().unwrap().to_string(), "direct(semidirect(Z4, Z2, inversion), Z2)");
        assert_eq!(c16[3].construction.as_ref().unwrap().to_string(), "Z4xZ2xZ2");
        assert!(c16[13].presentation_text.contains("x^4=y^2"));
    }
}
