//! Raw and typed column stores plus schema inference.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    Continuous,
    Categorical,
}

/// Schema entry for one column of a [`Table`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnSpec {
    pub name: String,
    pub kind: ColumnKind,
    pub missing_count: usize,
}

/// Cell storage of a typed column; `None` marks a missing value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ColumnData {
    Continuous(Vec<Option<f64>>),
    Categorical(Vec<Option<String>>),
}

impl ColumnData {
    pub fn len(&self) -> usize {
        match self {
            ColumnData::Continuous(v) => v.len(),
            ColumnData::Categorical(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn missing_count(&self) -> usize {
        match self {
            ColumnData::Continuous(v) => v.iter().filter(|c| c.is_none()).count(),
            ColumnData::Categorical(v) => v.iter().filter(|c| c.is_none()).count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub data: ColumnData,
}

impl Column {
    pub fn kind(&self) -> ColumnKind {
        match self.data {
            ColumnData::Continuous(_) => ColumnKind::Continuous,
            ColumnData::Categorical(_) => ColumnKind::Categorical,
        }
    }

    pub fn spec(&self) -> ColumnSpec {
        ColumnSpec {
            name: self.name.clone(),
            kind: self.kind(),
            missing_count: self.data.missing_count(),
        }
    }
}

/// Typed column store. Continuous cells hold only finite reals; missing
/// values are explicit in both kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    columns: Vec<Column>,
    n_rows: usize,
}

impl Table {
    /// Validates column-name uniqueness, equal lengths, and finiteness of
    /// continuous cells.
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::Schema("table has no columns".to_string()));
        }
        let n_rows = columns[0].data.len();
        let mut seen = BTreeSet::new();
        for col in &columns {
            if !seen.insert(col.name.as_str()) {
                return Err(Error::Schema(format!("duplicate column name '{}'", col.name)));
            }
            if col.data.len() != n_rows {
                return Err(Error::Schema(format!(
                    "column '{}' has {} cells, expected {}",
                    col.name,
                    col.data.len(),
                    n_rows
                )));
            }
            if let ColumnData::Continuous(cells) = &col.data {
                if cells.iter().flatten().any(|v| !v.is_finite()) {
                    return Err(Error::Schema(format!(
                        "column '{}' contains a non-finite value",
                        col.name
                    )));
                }
            }
        }
        Ok(Table { columns, n_rows })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn specs(&self) -> Vec<ColumnSpec> {
        self.columns.iter().map(Column::spec).collect()
    }

    pub fn missing_total(&self) -> usize {
        self.columns.iter().map(|c| c.data.missing_count()).sum()
    }

    pub fn is_fully_imputed(&self) -> bool {
        self.missing_total() == 0
    }

    /// New table keeping every column except `name`.
    pub fn without_column(&self, name: &str) -> Result<Table> {
        let columns: Vec<Column> =
            self.columns.iter().filter(|c| c.name != name).cloned().collect();
        if columns.len() == self.columns.len() {
            return Err(Error::Schema(format!("column '{name}' not found")));
        }
        Table::new(columns)
    }

    /// New table holding the given rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Table {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let data = match &col.data {
                    ColumnData::Continuous(cells) => {
                        ColumnData::Continuous(indices.iter().map(|&i| cells[i]).collect())
                    }
                    ColumnData::Categorical(cells) => {
                        ColumnData::Categorical(indices.iter().map(|&i| cells[i].clone()).collect())
                    }
                };
                Column { name: col.name.clone(), data }
            })
            .collect();
        Table { columns, n_rows: indices.len() }
    }
}

/// Untyped table straight out of a CSV parse: every cell is text or missing.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTable {
    headers: Vec<String>,
    columns: Vec<Vec<Option<String>>>,
    n_rows: usize,
}

impl RawTable {
    /// Builds a raw table from header names and row-major records. Cells
    /// exactly equal to one of `missing_tokens` are marked missing.
    pub fn from_records(
        headers: Vec<String>,
        records: Vec<Vec<String>>,
        missing_tokens: &BTreeSet<String>,
    ) -> Result<Self> {
        if headers.is_empty() {
            return Err(Error::Schema("empty input: no header row".to_string()));
        }
        let mut seen = BTreeSet::new();
        for h in &headers {
            if !seen.insert(h.as_str()) {
                return Err(Error::Schema(format!("duplicate header name '{h}'")));
            }
        }
        let mut columns = alloc::vec![Vec::with_capacity(records.len()); headers.len()];
        for (row_idx, record) in records.into_iter().enumerate() {
            if record.len() != headers.len() {
                return Err(Error::Schema(format!(
                    "row {} has {} fields, expected {}",
                    row_idx + 1,
                    record.len(),
                    headers.len()
                )));
            }
            for (col, cell) in columns.iter_mut().zip(record) {
                col.push(if missing_tokens.contains(&cell) { None } else { Some(cell) });
            }
        }
        let n_rows = columns[0].len();
        Ok(RawTable { headers, columns, n_rows })
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.headers.len()
    }

    pub fn column(&self, idx: usize) -> &[Option<String>] {
        &self.columns[idx]
    }

    pub fn missing_count(&self, idx: usize) -> usize {
        self.columns[idx].iter().filter(|c| c.is_none()).count()
    }
}

fn parse_finite(cell: &str) -> Option<f64> {
    cell.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Types each raw column: Continuous when the fraction of non-missing cells
/// that parse as finite reals is at least `numeric_threshold`, Categorical
/// otherwise. In a Continuous column the (at most `1 - threshold`) cells
/// that do not parse become missing.
pub fn infer_schema(raw: &RawTable, numeric_threshold: f64) -> Result<Table> {
    if !(0.5..=1.0).contains(&numeric_threshold) {
        return Err(Error::Parameter(format!(
            "numeric_threshold must be in [0.5, 1.0], got {numeric_threshold}"
        )));
    }
    if raw.n_rows == 0 {
        return Err(Error::Schema("table has no data rows".to_string()));
    }
    let mut columns = Vec::with_capacity(raw.n_cols());
    for (idx, name) in raw.headers.iter().enumerate() {
        let cells = &raw.columns[idx];
        let present: Vec<&String> = cells.iter().flatten().collect();
        if present.is_empty() {
            return Err(Error::Schema(format!("column '{name}' has no observed values")));
        }
        let numeric = present.iter().filter(|c| parse_finite(c).is_some()).count();
        let data = if (numeric as f64) >= numeric_threshold * present.len() as f64 {
            ColumnData::Continuous(
                cells.iter().map(|c| c.as_deref().and_then(parse_finite)).collect(),
            )
        } else {
            ColumnData::Categorical(cells.clone())
        };
        columns.push(Column { name: name.clone(), data });
    }
    Table::new(columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tokens() -> BTreeSet<String> {
        ["", "?", "NA"].iter().map(|s| s.to_string()).collect()
    }

    fn raw(headers: &[&str], rows: &[&[&str]]) -> RawTable {
        RawTable::from_records(
            headers.iter().map(|s| s.to_string()).collect(),
            rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
            &tokens(),
        )
        .unwrap()
    }

    #[test]
    fn missing_tokens_marked() {
        let t = raw(&["a", "b"], &[&["1", "x"], &["2", "?"]]);
        assert_eq!(t.n_rows(), 2);
        assert_eq!(t.n_cols(), 2);
        assert_eq!(t.missing_count(1), 1);
        assert_eq!(t.missing_count(0), 0);
    }

    #[test]
    fn duplicate_headers_rejected() {
        let err = RawTable::from_records(
            vec!["a".to_string(), "a".to_string()],
            vec![],
            &tokens(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn ragged_row_rejected_with_row_number() {
        let err = RawTable::from_records(
            vec!["a".to_string(), "b".to_string()],
            vec![vec!["1".to_string(), "2".to_string()], vec!["3".to_string()]],
            &tokens(),
        )
        .unwrap_err();
        match err {
            Error::Schema(msg) => assert!(msg.contains("row 2"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn numeric_column_inferred_continuous() {
        let t = infer_schema(&raw(&["x"], &[&["1.5"], &["2"], &["3.25"]]), 1.0).unwrap();
        assert_eq!(t.columns()[0].kind(), ColumnKind::Continuous);
        match &t.columns()[0].data {
            ColumnData::Continuous(v) => assert_eq!(v, &vec![Some(1.5), Some(2.0), Some(3.25)]),
            _ => panic!("expected continuous"),
        }
    }

    #[test]
    fn text_column_inferred_categorical() {
        let t = infer_schema(&raw(&["s"], &[&["G"], &["K"], &["M"]]), 1.0).unwrap();
        assert_eq!(t.columns()[0].kind(), ColumnKind::Categorical);
    }

    #[test]
    fn non_finite_tokens_do_not_count_as_numeric() {
        // "inf" parses as f64 but is not a finite real.
        let t = infer_schema(&raw(&["x"], &[&["1"], &["inf"]]), 1.0).unwrap();
        assert_eq!(t.columns()[0].kind(), ColumnKind::Categorical);
    }

    #[test]
    fn threshold_below_one_converts_stragglers_to_missing() {
        let t = infer_schema(&raw(&["x"], &[&["1"], &["2"], &["3"], &["oops"]]), 0.75).unwrap();
        assert_eq!(t.columns()[0].kind(), ColumnKind::Continuous);
        assert_eq!(t.columns()[0].data.missing_count(), 1);
    }

    #[test]
    fn all_missing_column_is_schema_error() {
        let err = infer_schema(&raw(&["x"], &[&["?"], &["NA"]]), 1.0).unwrap_err();
        match err {
            Error::Schema(msg) => assert!(msg.contains('x')),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bad_threshold_rejected() {
        let t = raw(&["x"], &[&["1"]]);
        assert!(infer_schema(&t, 0.4).is_err());
        assert!(infer_schema(&t, 1.1).is_err());
    }

    #[test]
    fn select_rows_keeps_schema() {
        let t = infer_schema(&raw(&["x", "s"], &[&["1", "a"], &["2", "b"], &["3", "c"]]), 1.0)
            .unwrap();
        let s = t.select_rows(&[2, 0]);
        assert_eq!(s.n_rows(), 2);
        match &s.columns()[1].data {
            ColumnData::Categorical(v) => {
                assert_eq!(v, &vec![Some("c".to_string()), Some("a".to_string())]);
            }
            _ => panic!("expected categorical"),
        }
    }
}
