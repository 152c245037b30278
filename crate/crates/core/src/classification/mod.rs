//! The catalogs of groups of order 8 and 16 and their mechanical
//! verification.

mod catalog;
mod oracle;
mod tables;
mod verify;

pub use catalog::{
    catalog, catalog_order16, catalog_order8, CatalogEntry, Recipe, ALT_KLEIN_BY_Z4, BARE_KLEIN_BY_Z4,
};
pub use oracle::{enumerate_groups_oracle, ORACLE_MAX_ORDER};
pub use tables::{emit_table, emit_tables, table_rows, TableFormat, TableRow};
pub use verify::{
    abelian_maximal_count, bare_presentation_outcome, build_catalog, census, corpus_properties, non_split_checks,
    presentation_checks, structure_checks, verify_abelian_pair_bound, verify_catalog, verify_maximal_structure,
    verify_oracle, verify_paper, BuiltEntry, CheckRow, Corpus, MaximalStructure, Report, GUARD_BUDGETS,
    ORACLE_COUNTS,
};

/// Builds and verifies one catalog.
pub fn classify(order: usize) -> Option<(Vec<BuiltEntry>, Report)> {
    let built = build_catalog(catalog(order)?);
    let report = verify_catalog(&built);
    Some((built, report))
}
