use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::catalog::{catalog_order16, catalog_order8, CatalogEntry, ALT_KLEIN_BY_Z4, BARE_KLEIN_BY_Z4};
use super::oracle::{enumerate_groups_oracle, ORACLE_MAX_ORDER};
use crate::constructors::{abelian, dihedral, quaternion_units};
use crate::error::{EnumerationError, Error, Result};
use crate::group::{CayleyTable, ElementId, SubgroupMask};
use crate::invariants::{
    all_subgroups, center, conjugacy_classes, correspondence_check, derived_subgroup, fingerprint,
    subgroups_containing, verify_derived_minimal, CenterType,
};
use crate::isomorphism::{find_isomorphism, is_nontrivial_semidirect, search_isomorphism};
use crate::presentation::{enumerate, evaluate_word, parse_presentation, satisfies_relations, Enumeration};

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check_id: String,
    pub subject: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub witness: Option<Vec<ElementId>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn check(
        &mut self,
        check_id: &str,
        subject: &str,
        expected: impl ToString,
        computed: impl ToString,
        pass: bool,
    ) -> &mut CheckRow {
        self.rows.push(CheckRow {
            check_id: check_id.to_string(),
            subject: subject.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            witness: None,
        });
        self.rows.last_mut().expect("just pushed")
    }

    /// Records a check whose expected and computed values compare equal.
    pub fn expect_eq<T: PartialEq + ToString>(&mut self, check_id: &str, subject: &str, expected: T, computed: T) -> &mut CheckRow {
        let pass = expected == computed;
        self.check(check_id, subject, expected, computed, pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn rows_with(&self, check_id: &str) -> impl Iterator<Item = &CheckRow> + '_ {
        let id = check_id.to_string();
        self.rows.iter().filter(move |r| r.check_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let mark = if r.pass { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<22} {:<18} expected {} computed {}", r.check_id, r.subject, r.expected, r.computed)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.rows.len(), failed)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A catalog entry together with its enumerated presentation.
#[derive(Debug, Clone)]
pub struct BuiltEntry {
    pub entry: CatalogEntry,
    pub enumeration: std::result::Result<Enumeration, EnumerationError>,
}

impl BuiltEntry {
    pub fn build(entry: CatalogEntry) -> Self {
        let enumeration = enumerate(&entry.presentation);
        BuiltEntry { entry, enumeration }
    }

    pub fn group(&self) -> Option<&CayleyTable> {
        self.enumeration.as_ref().ok().map(|e| &e.group)
    }

    /// Evaluates a word in the entry's generators.
    pub fn element(&self, word: &str) -> Option<ElementId> {
        let e = self.enumeration.as_ref().ok()?;
        let w = self.entry.presentation.parse_word(word).ok()?;
        Some(evaluate_word(&e.group, &e.generators, &w))
    }
}

pub fn build_catalog(entries: Vec<CatalogEntry>) -> Vec<BuiltEntry> {
    entries.into_iter().map(BuiltEntry::build).collect()
}

fn members_string(g: &CayleyTable, s: impl Iterator<Item = ElementId>) -> String {
    let names: Vec<String> = s.map(|a| g.label(a).into_owned()).collect();
    format!("{{{}}}", names.join(","))
}

/// Per-entry checks plus pairwise non-isomorphism across the list.
pub fn verify_catalog(built: &[BuiltEntry]) -> Report {
    let mut report = Report::new();
    for b in built {
        verify_entry(b, &mut report);
    }
    let fps: Vec<_> = built.iter().map(|b| b.group().map(fingerprint)).collect();
    for i in 0..built.len() {
        for j in i + 1..built.len() {
            let subject = format!("{} / {}", built[i].entry.id, built[j].entry.id);
            let (Some(gi), Some(gj)) = (built[i].group(), built[j].group()) else {
                report.check("non-isomorphic", &subject, "not isomorphic", "group missing", false);
                continue;
            };
            let witness = if fps[i] == fps[j] { search_isomorphism(gi, gj) } else { None };
            let row = report.check(
                "non-isomorphic",
                &subject,
                "not isomorphic",
                if witness.is_some() { "isomorphic" } else { "not isomorphic" },
                witness.is_none(),
            );
            row.witness = witness.map(|w| w.image().to_vec());
        }
    }
    report
}

fn verify_entry(b: &BuiltEntry, report: &mut Report) {
    let e = &b.entry;
    let enumeration = match &b.enumeration {
        Ok(en) => en,
        Err(err) => {
            report.check("order", e.id, e.order, err, false);
            return;
        }
    };
    let g = &enumeration.group;
    report.expect_eq("order", e.id, e.order, g.order());
    report.check(
        "relations",
        e.id,
        "satisfied",
        if satisfies_relations(g, &enumeration.generators, &e.presentation) { "satisfied" } else { "violated" },
        satisfies_relations(g, &enumeration.generators, &e.presentation),
    );

    if let Some(recipe) = &e.construction {
        let built = recipe.build();
        let witness = find_isomorphism(&built, g);
        let row = report.check(
            "construction",
            e.id,
            format!("{recipe} ≅ presentation"),
            if witness.is_some() { "isomorphic" } else { "not isomorphic" },
            witness.is_some(),
        );
        row.witness = witness.map(|w| w.image().to_vec());
    }

    let z = center(g);
    report.expect_eq("center-type", e.id, e.declared_center.to_string(), CenterType::classify(g, &z).to_string());
    if let Some(words) = &e.declared_center_members {
        let declared: Option<BTreeSet<ElementId>> = words.iter().map(|w| b.element(w)).collect();
        let computed: BTreeSet<ElementId> = z.iter().collect();
        let pass = declared.as_ref() == Some(&computed);
        let row = report.check(
            "center-members",
            e.id,
            format!("{{{}}}", words.join(",")),
            members_string(g, z.iter()),
            pass,
        );
        row.witness = Some(z.to_vec());
    }
    report.expect_eq("derived-order", e.id, e.declared_derived_order, derived_subgroup(g).order());
    report.expect_eq("abelian", e.id, yes_no(e.abelian), yes_no(g.is_abelian()));
}

/// The three index-2 subgroups containing the center, and the checks run
/// on them.
#[derive(Debug, Clone)]
pub struct MaximalStructure {
    pub subgroups: Vec<SubgroupMask>,
    pub report: Report,
}

/// Structure of a nonabelian `G` with `G/Z(G) ≅ Z₂×Z₂`.
///
/// With `G₁, G₂, G₃` the index-2 subgroups containing `Z`, checks that
/// (i) `g₁g₂ ∈ G₃ \ Z` for `gᵢ ∈ Gᵢ \ Z`, (ii) such `g₁, g₂` do not
/// commute, (iii) `GᵢGⱼ = G` and `Gᵢ ∩ Gⱼ = Z`. For order 16 it also checks
/// that each `Gᵢ` is abelian and, when all squares are central, that every
/// commutator has order at most 2.
pub fn verify_maximal_structure(g: &CayleyTable, subject: &str) -> Result<MaximalStructure> {
    let z = center(g);
    let (q, _) = g.quotient(&z)?;
    if g.is_abelian() || q.order() != 4 || q.is_cyclic() {
        return Err(Error::PreconditionViolated(format!(
            "{subject}: G/Z(G) has order {} and is {}",
            q.order(),
            if q.is_cyclic() { "cyclic" } else { "not Z2xZ2" }
        )));
    }
    let maximal: Vec<SubgroupMask> = subgroups_containing(g, &z)
        .into_iter()
        .filter(|s| s.index() == 2)
        .collect();
    let mut report = Report::new();
    report.expect_eq("maximal-count", subject, 3, maximal.len());
    if maximal.len() != 3 {
        return Ok(MaximalStructure { subgroups: maximal, report });
    }

    let outside = |s: &SubgroupMask| s.iter().filter(|&a| !z.contains(a)).collect::<Vec<_>>();
    let mut product_ok = true;
    let mut noncommuting = true;
    let mut witness = None;
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let k = 3 - i - j;
            for &a in &outside(&maximal[i]) {
                for &b in &outside(&maximal[j]) {
                    let ab = g.mul(a, b);
                    if !maximal[k].contains(ab) || z.contains(ab) {
                        product_ok = false;
                        witness.get_or_insert(vec![a, b]);
                    }
                    if g.commutes(a, b) {
                        noncommuting = false;
                        witness.get_or_insert(vec![a, b]);
                    }
                }
            }
        }
    }
    report.check("cross-product", subject, "g1g2 in G3\\Z", yes_no(product_ok), product_ok).witness = witness.clone();
    report.check("cross-noncommuting", subject, "g1g2 != g2g1", yes_no(noncommuting), noncommuting).witness = witness;

    let mut spans = true;
    let mut meets = true;
    for i in 0..3 {
        for j in i + 1..3 {
            spans &= g.product_set(&maximal[i], &maximal[j]).len() == g.order();
            meets &= maximal[i].intersection(&maximal[j]) == z;
        }
    }
    report.check("maximal-product", subject, "GiGj = G", yes_no(spans), spans);
    report.check("maximal-intersection", subject, "Gi ∩ Gj = Z(G)", yes_no(meets), meets);

    if g.order() == 16 {
        let all_abelian = maximal.iter().all(|s| s.as_group(g).0.is_abelian());
        report.check("maximal-abelian", subject, "G1,G2,G3 abelian", yes_no(all_abelian), all_abelian);
        let squares_central = g.elements().all(|a| z.contains(g.mul(a, a)));
        if squares_central {
            let bad = g
                .elements()
                .flat_map(|a| g.elements().map(move |b| (a, b)))
                .find(|&(a, b)| g.element_order(g.commutator(a, b)) > 2);
            let row = report.check(
                "commutator-order",
                subject,
                "|[g1,g2]| <= 2",
                if bad.is_none() { "all <= 2" } else { "order 4 found" },
                bad.is_none(),
            );
            row.witness = bad.map(|(a, b)| vec![a, b]);
        }
    }
    Ok(MaximalStructure { subgroups: maximal, report })
}

/// Number of abelian subgroups of index 2.
pub fn abelian_maximal_count(g: &CayleyTable) -> usize {
    all_subgroups(g)
        .into_iter()
        .filter(|s| s.index() == 2 && s.as_group(g).0.is_abelian())
        .count()
}

/// Two abelian subgroups of index 2 force `|Z(G)| ≥ |G|/4`.
pub fn verify_abelian_pair_bound(g: &CayleyTable) -> bool {
    abelian_maximal_count(g) < 2 || 4 * center(g).order() >= g.order()
}

/// Checks on the nonabelian order-16 entries with `|Z(G)| = 2`: the
/// quotient by the center is dihedral of order 8 (never `Z₄×Z₂`, `(Z₂)³`
/// or `Q₈`), and `D(G)` has order 4 and strictly contains `Z(G)`.
pub fn census(built: &[BuiltEntry]) -> Report {
    let mut report = Report::new();
    let shapes = [
        ("D4", dihedral(4)),
        ("Z4xZ2", abelian(&[4, 2]).expect("valid orders")),
        ("Z2^3", abelian(&[2, 2, 2]).expect("valid orders")),
        ("Q8", quaternion_units()),
    ];
    for b in built {
        let Some(g) = b.group() else { continue };
        let z = center(g);
        if g.order() != 16 || z.order() != 2 {
            continue;
        }
        let (q, _) = g.quotient(&z).expect("center is normal");
        let shape = shapes
            .iter()
            .find(|(_, h)| find_isomorphism(&q, h).is_some())
            .map_or("other", |(name, _)| name);
        report.expect_eq("quotient-shape", b.entry.id, "D4", shape);
        report.expect_eq("quotient-nonabelian", b.entry.id, "yes", yes_no(q.order() == 8 && !q.is_abelian()));
        let d = derived_subgroup(g);
        let strict = d.order() == 4 && z.is_subgroup_of(&d) && z != d;
        report.check("derived-strict", b.entry.id, "Z(G) < D(G), |D(G)| = 4", format!("|D(G)| = {}", d.order()), strict);
    }
    report
}

/// Coset budgets tried on the two-relator presentation.
pub const GUARD_BUDGETS: [usize; 3] = [512, 4096, 32768];

/// Outcome of enumerating the two-relator presentation at a budget.
pub fn bare_presentation_outcome(budget: usize) -> std::result::Result<usize, EnumerationError> {
    let p = parse_presentation(BARE_KLEIN_BY_Z4).expect("valid text").with_max_cosets(budget);
    enumerate(&p).map(|e| e.group.order())
}

/// Every group in the test corpus: both catalogs and every oracle group.
pub struct Corpus {
    pub catalog8: Vec<BuiltEntry>,
    pub catalog16: Vec<BuiltEntry>,
    /// Oracle representatives by order, for orders `1..=8`.
    pub oracle: Vec<Vec<CayleyTable>>,
}

impl Corpus {
    pub fn load() -> Result<Self> {
        let oracle = (1..=ORACLE_MAX_ORDER).map(enumerate_groups_oracle).collect::<Result<_>>()?;
        Ok(Corpus {
            catalog8: build_catalog(catalog_order8()),
            catalog16: build_catalog(catalog_order16()),
            oracle,
        })
    }

    pub fn catalog(&self) -> impl Iterator<Item = &BuiltEntry> {
        self.catalog8.iter().chain(&self.catalog16)
    }

    /// `(subject, group)` pairs over catalog and oracle groups.
    pub fn groups(&self) -> Vec<(String, &CayleyTable)> {
        let mut out: Vec<(String, &CayleyTable)> =
            self.catalog().filter_map(|b| b.group().map(|g| (b.entry.id.to_string(), g))).collect();
        for (i, gs) in self.oracle.iter().enumerate() {
            for (j, g) in gs.iter().enumerate() {
                out.push((format!("oracle{}#{}", i + 1, j), g));
            }
        }
        out
    }

    pub fn entry(&self, id: &str) -> Option<&BuiltEntry> {
        self.catalog().find(|b| b.entry.id == id)
    }
}

/// Expected number of groups of each order `1..=8`.
pub const ORACLE_COUNTS: [usize; 8] = [1, 1, 1, 2, 1, 2, 1, 5];

/// Oracle counts and the one-to-one match between the order-8 oracle
/// groups and the order-8 catalog.
pub fn verify_oracle(corpus: &Corpus) -> Report {
    let mut report = Report::new();
    for (i, gs) in corpus.oracle.iter().enumerate() {
        report.expect_eq("oracle-count", &format!("n={}", i + 1), ORACLE_COUNTS[i], gs.len());
    }
    let eights = &corpus.oracle[7];
    let mut matched = vec![0usize; corpus.catalog8.len()];
    for (j, g) in eights.iter().enumerate() {
        let hits: Vec<usize> = corpus
            .catalog8
            .iter()
            .enumerate()
            .filter(|(_, b)| b.group().is_some_and(|h| find_isomorphism(g, h).is_some()))
            .map(|(i, _)| i)
            .collect();
        for &i in &hits {
            matched[i] += 1;
        }
        let names: Vec<&str> = hits.iter().map(|&i| corpus.catalog8[i].entry.id).collect();
        report.check("oracle-match", &format!("oracle8#{j}"), "one catalog entry", names.join(","), hits.len() == 1);
    }
    for (b, m) in corpus.catalog8.iter().zip(matched) {
        report.check("catalog-covered", b.entry.id, "one oracle group", m, m == 1);
    }
    report
}

/// Runs every check: catalogs, oracle, corpus-wide properties, structural
/// propositions, non-split claims, and the presentation guard.
pub fn verify_paper() -> Result<Report> {
    let corpus = Corpus::load()?;
    let mut report = Report::new();
    report.extend(verify_catalog(&corpus.catalog8));
    report.extend(verify_catalog(&corpus.catalog16));
    report.extend(verify_oracle(&corpus));
    report.extend(corpus_properties(&corpus));
    report.extend(structure_checks(&corpus)?);
    report.extend(census(&corpus.catalog16));
    report.extend(non_split_checks(&corpus));
    report.extend(presentation_checks(&corpus));
    Ok(report)
}

/// Burnside at order 4, cyclic quotient by center, class equation,
/// nontrivial centers of 2-groups, `|HK|`, derived minimality, and the
/// correspondence with the center.
pub fn corpus_properties(corpus: &Corpus) -> Report {
    let mut report = Report::new();
    for g in &corpus.oracle[3] {
        report.expect_eq("burnside", "order 4", "abelian", if g.is_abelian() { "abelian" } else { "nonabelian" });
    }
    for (subject, g) in corpus.groups() {
        let z = center(g);
        let (q, _) = g.quotient(&z).expect("center is normal");
        let ok = !q.is_cyclic() || g.is_abelian();
        report.check("cyclic-quotient", &subject, "G/Z cyclic => abelian", yes_no(ok), ok);

        let (_, eq) = conjugacy_classes(g);
        report.check("class-equation", &subject, g.order(), &eq, eq.holds_for(g.order()) && eq.center_size == z.order());

        if g.order() > 1 && g.order().is_power_of_two() {
            report.check("p-group-center", &subject, "|Z(G)| >= 2", z.order(), z.order() >= 2);
        }

        let cert = verify_derived_minimal(g);
        report.check(
            "derived-minimal",
            &subject,
            "D(G) least abelian kernel",
            format!("{} kernels", cert.abelian_kernels.len()),
            cert.holds,
        );
    }
    for b in corpus.catalog() {
        let Some(g) = b.group() else { continue };
        let subs = all_subgroups(g);
        let bad = subs
            .iter()
            .flat_map(|h| subs.iter().map(move |k| (h, k)))
            .find(|(h, k)| g.product_set(h, k).len() * h.intersection(k).order() != h.order() * k.order());
        report.check(
            "product-set",
            b.entry.id,
            "|HK||H∩K| = |H||K|",
            format!("{} pairs", subs.len() * subs.len()),
            bad.is_none(),
        );
        let ok = correspondence_check(g, &center(g)).unwrap_or(false);
        report.check("correspondence", b.entry.id, "bijection over Z(G)", yes_no(ok), ok);
    }
    report
}

const MAXIMAL_SUBJECTS: [&str; 6] = ["D4", "Q8", "D4xZ2", "Z2xZ2:Z4", "Z4:Z4", "Q8xZ2"];

/// Maximal-subgroup structure, the order-8 nonabelian invariants, and the
/// abelian-pair bound.
pub fn structure_checks(corpus: &Corpus) -> Result<Report> {
    let mut report = Report::new();
    for id in MAXIMAL_SUBJECTS {
        let g = corpus
            .entry(id)
            .and_then(BuiltEntry::group)
            .ok_or_else(|| Error::PreconditionViolated(format!("{id} did not enumerate")))?;
        report.extend(verify_maximal_structure(g, id)?.report);
    }
    for b in &corpus.catalog8 {
        let Some(g) = b.group().filter(|g| !g.is_abelian()) else { continue };
        let z = center(g);
        let (q, _) = g.quotient(&z)?;
        report.expect_eq("center-z2", b.entry.id, "Z₂".to_string(), CenterType::classify(g, &z).to_string());
        report.expect_eq("quotient-klein", b.entry.id, "yes", yes_no(q.order() == 4 && !q.is_cyclic()));
        report.expect_eq("derived-is-center", b.entry.id, "yes", yes_no(derived_subgroup(g) == z));
    }
    for b in &corpus.catalog16 {
        let Some(g) = b.group() else { continue };
        let count = abelian_maximal_count(g);
        report.check(
            "abelian-pair-bound",
            b.entry.id,
            "2 abelian maximal => |Z| >= 4",
            format!("{count} abelian maximal, |Z| = {}", center(g).order()),
            verify_abelian_pair_bound(g),
        );
    }
    Ok(report)
}

/// Q₈ and the generalized quaternion group do not split; D₄ and the two
/// order-16 groups with `|Z| = 2` built as semidirect products do.
pub fn non_split_checks(corpus: &Corpus) -> Report {
    let mut report = Report::new();
    for (id, expected) in [("Q8", false), ("Q16", false), ("D4", true), ("Z8:2Z2", true), ("Z8:3Z2", true)] {
        let Some(g) = corpus.entry(id).and_then(BuiltEntry::group) else {
            report.check("split", id, yes_no(expected), "group missing", false);
            continue;
        };
        let w = is_nontrivial_semidirect(g);
        let row = report.expect_eq("split", id, yes_no(expected), yes_no(w.is_some()));
        row.witness = w.map(|w| {
            let mut v = w.normal.to_vec();
            v.extend(w.complement.to_vec());
            v
        });
    }
    report
}

/// The two-relator presentation exhausts every budget, the version with
/// central squares has order 16, and the three-generator presentation
/// gives the same group.
pub fn presentation_checks(corpus: &Corpus) -> Report {
    let mut report = Report::new();
    for budget in GUARD_BUDGETS {
        let outcome = bare_presentation_outcome(budget);
        let computed = match &outcome {
            Ok(n) => format!("order {n}"),
            Err(e) => e.to_string(),
        };
        let pass = matches!(outcome, Err(EnumerationError::CosetBudgetExceeded(b)) if b == budget);
        report.check("bare-presentation", &format!("budget {budget}"), "coset budget exceeded", computed, pass);
    }
    let central = corpus.entry("Z2xZ2:Z4").and_then(BuiltEntry::group);
    report.check(
        "central-presentation",
        "Z2xZ2:Z4",
        16,
        central.map_or("failed".to_string(), |g| g.order().to_string()),
        central.is_some_and(|g| g.order() == 16),
    );
    let alt = parse_presentation(ALT_KLEIN_BY_Z4).map_err(Error::from).and_then(|p| Ok(enumerate(&p)?));
    let witness = match (&alt, central) {
        (Ok(a), Some(g)) => find_isomorphism(&a.group, g),
        _ => None,
    };
    let computed = match &alt {
        Ok(a) if witness.is_some() => format!("order {}, isomorphic", a.group.order()),
        Ok(a) => format!("order {}, not isomorphic", a.group.order()),
        Err(e) => e.to_string(),
    };
    let found = witness.is_some();
    report.check("alt-presentation", "Z2xZ2:Z4", "order 16, isomorphic", computed, found).witness =
        witness.map(|w| w.image().to_vec());
    report
}
