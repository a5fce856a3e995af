//! Signed feature hashing of categorical columns.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dataset::table::{ColumnData, Table};
use crate::error::{Error, Result};
use crate::matrix::{FeatureMatrix, Matrix};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a 64-bit hash.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Hashes every categorical cell of an imputed table into a `dims`-wide
/// signed block: token `"column=value"` lands in bucket `fnv1a64 mod dims`
/// with sign `+1` when bit 63 of the hash is clear, `-1` otherwise.
/// Continuous columns are appended unchanged after the hashed block when
/// `include_continuous` is set.
pub fn hash_features(table: &Table, dims: usize, include_continuous: bool) -> Result<FeatureMatrix> {
    if dims < 2 {
        return Err(Error::Parameter(format!("hash dims must be >= 2, got {dims}")));
    }
    if !table.is_fully_imputed() {
        return Err(Error::Parameter("table must be imputed before hashing".to_string()));
    }
    let n = table.n_rows();
    let continuous: Vec<usize> = if include_continuous {
        (0..table.n_cols())
            .filter(|&i| matches!(table.columns()[i].data, ColumnData::Continuous(_)))
            .collect()
    } else {
        Vec::new()
    };
    let width = dims + continuous.len();
    let mut out = Matrix::zeros(n, width);

    for col in table.columns() {
        if let ColumnData::Categorical(cells) = &col.data {
            for (row, cell) in cells.iter().enumerate() {
                let value = cell.as_deref().unwrap_or_default();
                let token = format!("{}={}", col.name, value);
                let h = fnv1a64(token.as_bytes());
                let bucket = (h % dims as u64) as usize;
                let sign = if h >> 63 == 0 { 1.0 } else { -1.0 };
                out.set(row, bucket, out.get(row, bucket) + sign);
            }
        }
    }

    let mut names: Vec<String> = (0..dims).map(|i| format!("h{i}")).collect();
    for (offset, &ci) in continuous.iter().enumerate() {
        let col = &table.columns()[ci];
        if let ColumnData::Continuous(cells) = &col.data {
            for (row, cell) in cells.iter().enumerate() {
                out.set(row, dims + offset, cell.unwrap_or_default());
            }
        }
        names.push(col.name.clone());
    }
    FeatureMatrix::new(out, names)
}
