//! Missing-value imputation: column mean for continuous cells, modal
//! category for categorical cells.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::dataset::table::{Column, ColumnData, Table};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
enum Fill {
    Mean(f64),
    Mode(String),
}

/// Per-column fill values learned from one table and applicable to another
/// with the same schema (used by the leakage-free per-fold mode).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Imputer {
    names: Vec<String>,
    fills: Vec<Fill>,
}

impl Imputer {
    /// Learns fill values. Errors when a column has no observed cells.
    pub fn fit(table: &Table) -> Result<Imputer> {
        let mut names = Vec::with_capacity(table.n_cols());
        let mut fills = Vec::with_capacity(table.n_cols());
        for col in table.columns() {
            let fill = match &col.data {
                ColumnData::Continuous(cells) => {
                    let present: Vec<f64> = cells.iter().flatten().copied().collect();
                    if present.is_empty() {
                        return Err(Error::Imputation(format!(
                            "column '{}' has no observed values",
                            col.name
                        )));
                    }
                    Fill::Mean(present.iter().sum::<f64>() / present.len() as f64)
                }
                ColumnData::Categorical(cells) => {
                    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
                    for cell in cells.iter().flatten() {
                        *counts.entry(cell.as_str()).or_insert(0) += 1;
                    }
                    // BTreeMap iterates keys in order, so keeping a strictly
                    // greater count breaks ties toward the lexicographically
                    // smallest category.
                    let mode = counts
                        .iter()
                        .fold(None::<(&str, usize)>, |best, (&cat, &n)| match best {
                            Some((_, bn)) if bn >= n => best,
                            _ => Some((cat, n)),
                        })
                        .map(|(cat, _)| String::from(cat));
                    match mode {
                        Some(m) => Fill::Mode(m),
                        None => {
                            return Err(Error::Imputation(format!(
                                "column '{}' has no observed values",
                                col.name
                            )))
                        }
                    }
                }
            };
            names.push(col.name.clone());
            fills.push(fill);
        }
        Ok(Imputer { names, fills })
    }

    /// Fills every missing cell of `table`, which must have the same column
    /// names and kinds as the fitted table. Observed cells are unchanged.
    pub fn apply(&self, table: &Table) -> Result<Table> {
        if table.n_cols() != self.names.len() {
            return Err(Error::Schema(format!(
                "imputer fitted on {} columns, table has {}",
                self.names.len(),
                table.n_cols()
            )));
        }
        let mut columns = Vec::with_capacity(table.n_cols());
        for (col, (name, fill)) in table.columns().iter().zip(self.names.iter().zip(&self.fills)) {
            if &col.name != name {
                return Err(Error::Schema(format!(
                    "column order mismatch: expected '{name}', found '{}'",
                    col.name
                )));
            }
            let data = match (&col.data, fill) {
                (ColumnData::Continuous(cells), Fill::Mean(mean)) => ColumnData::Continuous(
                    cells.iter().map(|c| Some(c.unwrap_or(*mean))).collect(),
                ),
                (ColumnData::Categorical(cells), Fill::Mode(mode)) => ColumnData::Categorical(
                    cells.iter().map(|c| Some(c.clone().unwrap_or_else(|| mode.clone()))).collect(),
                ),
                _ => {
                    return Err(Error::Schema(format!(
                        "column '{}' kind does not match the fitted schema",
                        col.name
                    )))
                }
            };
            columns.push(Column { name: col.name.clone(), data });
        }
        Table::new(columns)
    }
}

/// Fills missing cells of `table` from its own statistics.
pub fn impute(table: &Table) -> Result<Table> {
    Imputer::fit(table)?.apply(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn cont(name: &str, cells: Vec<Option<f64>>) -> Column {
        Column { name: name.to_string(), data: ColumnData::Continuous(cells) }
    }

    fn cat(name: &str, cells: Vec<Option<&str>>) -> Column {
        Column {
            name: name.to_string(),
            data: ColumnData::Categorical(
                cells.into_iter().map(|c| c.map(String::from)).collect(),
            ),
        }
    }

    #[test]
    fn mean_fill() {
        let t = Table::new(vec![cont("x", vec![Some(1.0), None, Some(3.0)])]).unwrap();
        let out = impute(&t).unwrap();
        match &out.columns()[0].data {
            ColumnData::Continuous(v) => assert_eq!(v, &vec![Some(1.0), Some(2.0), Some(3.0)]),
            _ => panic!(),
        }
    }

    #[test]
    fn mode_fill() {
        let t =
            Table::new(vec![cat("s", vec![Some("a"), Some("a"), Some("b"), None])]).unwrap();
        let out = impute(&t).unwrap();
        match &out.columns()[0].data {
            ColumnData::Categorical(v) => assert_eq!(v[3].as_deref(), Some("a")),
            _ => panic!(),
        }
    }

    #[test]
    fn mode_tie_breaks_lexicographically() {
        let t = Table::new(vec![cat("s", vec![Some("b"), Some("a"), None])]).unwrap();
        let out = impute(&t).unwrap();
        match &out.columns()[0].data {
            ColumnData::Categorical(v) => assert_eq!(v[2].as_deref(), Some("a")),
            _ => panic!(),
        }
    }

    #[test]
    fn all_missing_column_errors_with_name() {
        let t = Table::new(vec![cont("gap", vec![None, None])]).unwrap();
        match impute(&t).unwrap_err() {
            Error::Imputation(msg) => assert!(msg.contains("gap")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn observed_cells_unchanged_and_idempotent() {
        let t = Table::new(vec![
            cont("x", vec![Some(5.0), None, Some(-1.0), Some(2.0)]),
            cat("s", vec![None, Some("q"), Some("q"), Some("r")]),
        ])
        .unwrap();
        let once = impute(&t).unwrap();
        assert!(once.is_fully_imputed());
        let twice = impute(&once).unwrap();
        assert_eq!(once, twice);
    }
}
