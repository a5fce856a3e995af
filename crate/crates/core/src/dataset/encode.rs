//! Label extraction and the full table-to-dataset encoding pipeline.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::dataset::hash::hash_features;
use crate::dataset::impute::impute;
use crate::dataset::table::{ColumnData, ColumnKind, Table};
use crate::error::{Error, Result};
use crate::matrix::{FeatureMatrix, Matrix};

/// Hashing is skipped by `encode` when the feature block has no categorical
/// columns, so all-continuous catalogs keep their natural width.
pub const MAX_CONTINUOUS_CLASSES: usize = 32;

/// Encoded feature matrix plus integer labels. The imputed feature table is
/// retained for learners that consume categorical cells directly
/// (mixed-mode Naive Bayes).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledDataset {
    pub features: FeatureMatrix,
    pub labels: Vec<usize>,
    pub class_names: Vec<String>,
    pub source: Table,
}

impl LabeledDataset {
    /// Validates the label range and that every class occurs at least once.
    pub fn new(
        features: FeatureMatrix,
        labels: Vec<usize>,
        class_names: Vec<String>,
        source: Table,
    ) -> Result<Self> {
        if labels.len() != features.n_rows() {
            return Err(Error::Parameter("label count does not match rows".to_string()));
        }
        let c = class_names.len();
        if c < 2 {
            return Err(Error::DegenerateLabels(format!("{c} class(es), need at least 2")));
        }
        let mut seen = alloc::vec![false; c];
        for &l in &labels {
            if l >= c {
                return Err(Error::Parameter(format!("label index {l} out of range")));
            }
            seen[l] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::DegenerateLabels("a class has no rows".to_string()));
        }
        Ok(LabeledDataset { features, labels, class_names, source })
    }

    pub fn n_rows(&self) -> usize {
        self.features.n_rows()
    }

    pub fn n_features(&self) -> usize {
        self.features.n_cols()
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    /// Row subset keeping the global class map. Fold subsets may lose
    /// classes, which is allowed here and surfaced as a warning by the
    /// cross-validation harness.
    pub fn select_rows(&self, indices: &[usize]) -> LabeledDataset {
        LabeledDataset {
            features: self.features.select_rows(indices),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_names: self.class_names.clone(),
            source: self.source.select_rows(indices),
        }
    }
}

fn format_class(value: f64) -> String {
    format!("{value}")
}

/// Reads class labels from a fully observed column. Class names are sorted
/// lexicographically and indices assigned in that order. A continuous column
/// is accepted as class codes when it holds at most
/// [`MAX_CONTINUOUS_CLASSES`] distinct values.
pub fn extract_labels(table: &Table, label_column: &str) -> Result<(Vec<usize>, Vec<String>)> {
    let col = table
        .column(label_column)
        .ok_or_else(|| Error::Schema(format!("label column '{label_column}' not found")))?;
    let cells: Vec<String> = match &col.data {
        ColumnData::Categorical(cells) => {
            let mut out = Vec::with_capacity(cells.len());
            for cell in cells {
                match cell {
                    Some(v) => out.push(v.clone()),
                    None => {
                        return Err(Error::Schema(format!(
                            "label column '{label_column}' has missing values"
                        )))
                    }
                }
            }
            out
        }
        ColumnData::Continuous(cells) => {
            let mut out = Vec::with_capacity(cells.len());
            for cell in cells {
                match cell {
                    Some(v) => out.push(format_class(*v)),
                    None => {
                        return Err(Error::Schema(format!(
                            "label column '{label_column}' has missing values"
                        )))
                    }
                }
            }
            let distinct: BTreeSet<&String> = out.iter().collect();
            if distinct.len() > MAX_CONTINUOUS_CLASSES {
                return Err(Error::Schema(format!(
                    "continuous label column '{label_column}' has {} distinct values (max {})",
                    distinct.len(),
                    MAX_CONTINUOUS_CLASSES
                )));
            }
            out
        }
    };
    let names: BTreeSet<&String> = cells.iter().collect();
    if names.len() < 2 {
        return Err(Error::DegenerateLabels(format!(
            "label column '{label_column}' has a single class"
        )));
    }
    let index: BTreeMap<&String, usize> =
        names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let labels = cells.iter().map(|c| index[c]).collect();
    let class_names = names.into_iter().cloned().collect();
    Ok((labels, class_names))
}

/// Full encoding pipeline: impute the table, split off the label column,
/// hash categorical features (signed, `dims` buckets) with continuous
/// columns appended. Tables without categorical feature columns skip the
/// hashed block entirely.
pub fn encode(table: &Table, label_column: &str, dims: usize) -> Result<LabeledDataset> {
    let imputed = impute(table)?;
    let (labels, class_names) = extract_labels(&imputed, label_column)?;
    let features_table = imputed.without_column(label_column)?;
    if features_table.n_cols() == 0 {
        return Err(Error::Schema("no feature columns besides the label".to_string()));
    }
    let has_categorical =
        features_table.columns().iter().any(|c| c.kind() == ColumnKind::Categorical);
    let features = if has_categorical {
        hash_features(&features_table, dims, true)?
    } else {
        continuous_block(&features_table)?
    };
    LabeledDataset::new(features, labels, class_names, features_table)
}

fn continuous_block(table: &Table) -> Result<FeatureMatrix> {
    let mut out = Matrix::zeros(table.n_rows(), table.n_cols());
    let mut names = Vec::with_capacity(table.n_cols());
    for (j, col) in table.columns().iter().enumerate() {
        match &col.data {
            ColumnData::Continuous(cells) => {
                for (i, cell) in cells.iter().enumerate() {
                    out.set(i, j, cell.unwrap_or_default());
                }
            }
            ColumnData::Categorical(_) => {
                return Err(Error::Schema("unexpected categorical column".to_string()))
            }
        }
        names.push(col.name.clone());
    }
    FeatureMatrix::new(out, names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::table::Column;
    use alloc::vec;

    fn cont(name: &str, cells: Vec<f64>) -> Column {
        Column {
            name: name.to_string(),
            data: ColumnData::Continuous(cells.into_iter().map(Some).collect()),
        }
    }

    fn cat(name: &str, cells: Vec<&str>) -> Column {
        Column {
            name: name.to_string(),
            data: ColumnData::Categorical(
                cells.into_iter().map(|c| Some(String::from(c))).collect(),
            ),
        }
    }

    #[test]
    fn labels_sorted_lexicographically() {
        let t = Table::new(vec![
            cont("x", vec![0.0, 1.0, 2.0]),
            cat("y", vec!["no", "yes", "no"]),
        ])
        .unwrap();
        let ds = encode(&t, "y", 8).unwrap();
        assert_eq!(ds.class_names, vec!["no".to_string(), "yes".to_string()]);
        assert_eq!(ds.labels, vec![0, 1, 0]);
        // all-continuous feature block: no hashed columns
        assert_eq!(ds.features.n_cols(), 1);
    }

    #[test]
    fn categorical_features_get_hashed() {
        let t = Table::new(vec![
            cat("s", vec!["a", "b", "a"]),
            cont("x", vec![0.0, 1.0, 2.0]),
            cat("y", vec!["p", "q", "p"]),
        ])
        .unwrap();
        let ds = encode(&t, "y", 8).unwrap();
        assert_eq!(ds.features.n_cols(), 9); // 8 hashed + 1 continuous
        assert_eq!(ds.source.n_cols(), 2); // label removed from the source table
    }

    #[test]
    fn missing_label_column_is_an_error() {
        let t = Table::new(vec![cont("x", vec![0.0, 1.0])]).unwrap();
        assert!(matches!(encode(&t, "label", 8), Err(Error::Schema(_))));
    }

    #[test]
    fn single_class_is_degenerate() {
        let t = Table::new(vec![
            cont("x", vec![0.0, 1.0]),
            cat("y", vec!["same", "same"]),
        ])
        .unwrap();
        assert!(matches!(encode(&t, "y", 8), Err(Error::DegenerateLabels(_))));
    }

    #[test]
    fn continuous_labels_become_class_codes() {
        let t = Table::new(vec![
            cont("x", vec![0.0, 1.0, 2.0]),
            cont("class", vec![2.0, 10.0, 2.0]),
        ])
        .unwrap();
        let ds = encode(&t, "class", 8).unwrap();
        // lexicographic order of the formatted codes: "10" < "2"
        assert_eq!(ds.class_names, vec!["10".to_string(), "2".to_string()]);
        assert_eq!(ds.labels, vec![1, 0, 1]);
    }

    #[test]
    fn select_rows_subsets_everything() {
        let t = Table::new(vec![
            cont("x", vec![0.0, 1.0, 2.0, 3.0]),
            cat("s", vec!["a", "b", "a", "b"]),
            cat("y", vec!["n", "y", "n", "y"]),
        ])
        .unwrap();
        let ds = encode(&t, "y", 8).unwrap();
        let sub = ds.select_rows(&[1, 2]);
        assert_eq!(sub.labels, vec![1, 0]);
        assert_eq!(sub.n_rows(), 2);
        assert_eq!(sub.source.n_rows(), 2);
    }
}
