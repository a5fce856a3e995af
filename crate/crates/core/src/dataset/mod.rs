//! Catalog ingestion: typed tables, schema inference, imputation, feature
//! hashing, label encoding, and cross-validation fold planning.

mod encode;
mod folds;
mod hash;
mod impute;
mod table;

pub use encode::{encode, extract_labels, LabeledDataset};
pub use folds::{make_folds, validate_plan, FoldPlan};
pub use hash::{fnv1a64, hash_features};
pub use impute::{impute, Imputer};
pub use table::{infer_schema, Column, ColumnData, ColumnKind, ColumnSpec, RawTable, Table};
