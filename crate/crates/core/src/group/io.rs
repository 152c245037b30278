use serde::{Deserialize, Serialize};

use super::{validate_table, CayleyTable};
use crate::error::Result;

/// On-disk group format: `{"order", "table" (row-major), "labels"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<usize>,
    pub labels: Option<Vec<String>>,
}

impl From<&CayleyTable> for GroupFile {
    fn from(g: &CayleyTable) -> Self {
        GroupFile {
            order: g.order(),
            table: g.table.iter().map(|&v| v as usize).collect(),
            labels: g.labels.clone(),
        }
    }
}

impl TryFrom<GroupFile> for CayleyTable {
    type Error = crate::error::Error;

    fn try_from(file: GroupFile) -> Result<Self> {
        let n = file.order;
        if file.table.len() != n * n {
            return Err(crate::error::TableError::NotSquare {
                row: 0,
                len: file.table.len(),
                expected: n * n,
            }
            .into());
        }
        let rows: Vec<Vec<usize>> = file.table.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
        let g = validate_table(&rows)?;
        Ok(match file.labels {
            Some(l) => g.with_labels(l)?,
            None => g,
        })
    }
}

impl CayleyTable {
    /// Compact JSON in the group file format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupFile::from(self)).expect("group file serializes")
    }

    /// Parses and validates a group file.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text)?;
        file.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, quaternion_units};
    use crate::error::{Error, TableError};

    #[test]
    fn round_trip_is_bit_exact() {
        for g in [cyclic(6).unwrap(), quaternion_units()] {
            let text = g.to_json();
            let back = CayleyTable::from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn format_shape() {
        let text = cyclic(2).unwrap().to_json();
        assert_eq!(text, r#"{"order":2,"table":[0,1,1,0],"labels":null}"#);
    }

    #[test]
    fn invalid_files_are_rejected() {
        assert!(matches!(
            CayleyTable::from_json(r#"{"order":2,"table":[0,1,1,1],"labels":null}"#),
            Err(Error::Table(TableError::NotLatin { .. }))
        ));
        assert!(matches!(
            CayleyTable::from_json(r#"{"order":2,"table":[0,1,1],"labels":null}"#),
            Err(Error::Table(TableError::NotSquare { .. }))
        ));
        assert!(matches!(
            CayleyTable::from_json(r#"{"order":2,"table":[0,1,1,0],"labels":["e"]}"#),
            Err(Error::Table(TableError::LabelCount { .. }))
        ));
        assert!(matches!(CayleyTable::from_json("{"), Err(Error::Json(_))));
    }
}
