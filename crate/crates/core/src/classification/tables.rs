use serde::Serialize;

use super::catalog::{catalog, CatalogEntry};
use super::verify::{build_catalog, BuiltEntry};
use crate::group::GroupFile;
use crate::invariants::{center, CenterType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Json,
}

/// One emitted row; the center is computed from the enumerated group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub id: String,
    pub name: String,
    pub presentation: String,
    pub center: String,
    pub center_members: Vec<String>,
    pub group: Option<GroupFile>,
}

impl TableRow {
    pub fn from_built(b: &BuiltEntry) -> Self {
        let (center_type, members, group) = match b.group() {
            Some(g) => {
                let z = center(g);
                let members = z.iter().map(|a| g.label(a).into_owned()).collect();
                (CenterType::classify(g, &z).to_string(), members, Some(GroupFile::from(g)))
            }
            None => ("not enumerated".to_string(), Vec::new(), None),
        };
        TableRow {
            id: b.entry.id.to_string(),
            name: b.entry.name.to_string(),
            presentation: b.entry.presentation_text.to_string(),
            center: center_type,
            center_members: members,
            group,
        }
    }
}

pub fn table_rows(entries: Vec<CatalogEntry>) -> Vec<TableRow> {
    build_catalog(entries).iter().map(TableRow::from_built).collect()
}

fn markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| Name | Presentation | Center |\n|---|---|---|\n");
    for r in rows {
        out.push_str(&format!("| {} | {} | {} |\n", r.name, r.presentation, r.center));
    }
    out
}

/// Renders the catalog of one order (8 or 16).
pub fn emit_table(order: usize, format: TableFormat) -> Option<String> {
    let rows = table_rows(catalog(order)?);
    Some(match format {
        TableFormat::Markdown => markdown(&rows),
        TableFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize"),
    })
}

/// Renders both catalogs.
pub fn emit_tables(format: TableFormat) -> String {
    let rows8 = table_rows(catalog(8).expect("order 8 catalog"));
    let rows16 = table_rows(catalog(16).expect("order 16 catalog"));
    match format {
        TableFormat::Markdown => {
            format!("## Groups of order 8\n\n{}\n## Groups of order 16\n\n{}", markdown(&rows8), markdown(&rows16))
        }
        TableFormat::Json => {
            let v = serde_json::json!({ "order8": rows8, "order16": rows16 });
            serde_json::to_string_pretty(&v).expect("rows serialize")
        }
    }
}
