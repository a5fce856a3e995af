//! Cross-validation fold planning.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Assignment of every row to exactly one of `k` folds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldPlan {
    pub assignment: Vec<usize>,
    pub k: usize,
    pub seed: u64,
    pub stratified: bool,
}

impl FoldPlan {
    pub fn n_rows(&self) -> usize {
        self.assignment.len()
    }

    pub fn test_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&i| self.assignment[i] == fold).collect()
    }

    pub fn train_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&i| self.assignment[i] != fold).collect()
    }

    pub fn fold_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0usize; self.k];
        for &f in &self.assignment {
            sizes[f] += 1;
        }
        sizes
    }
}

/// Plans `k` folds over `labels.len()` rows. Unstratified plans shuffle the
/// rows and deal them round-robin; stratified plans shuffle within each
/// class and deal class blocks consecutively, so fold sizes differ by at
/// most one both overall and per class. Deterministic in
/// `(labels, k, seed, stratified)`.
pub fn make_folds(labels: &[usize], k: usize, seed: u64, stratified: bool) -> Result<FoldPlan> {
    let n = labels.len();
    if k < 2 {
        return Err(Error::Parameter(format!("fold count must be >= 2, got {k}")));
    }
    if k > n {
        return Err(Error::Parameter(format!("fold count {k} exceeds {n} rows")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = alloc::vec![0usize; n];
    if stratified {
        let c = labels.iter().max().map_or(0, |&m| m + 1);
        let mut counter = 0usize;
        for class in 0..c {
            let mut members: Vec<usize> =
                (0..n).filter(|&i| labels[i] == class).collect();
            members.shuffle(&mut rng);
            for idx in members {
                assignment[idx] = counter % k;
                counter += 1;
            }
        }
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for (pos, idx) in order.into_iter().enumerate() {
            assignment[idx] = pos % k;
        }
    }
    Ok(FoldPlan { assignment, k, seed, stratified })
}

/// Checks that a plan matches a dataset of `n` rows and references only
/// folds below `k`.
pub fn validate_plan(plan: &FoldPlan, n: usize) -> Result<()> {
    if plan.assignment.len() != n {
        return Err(Error::Parameter(format!(
            "fold plan covers {} rows, dataset has {n}",
            plan.assignment.len()
        )));
    }
    if plan.assignment.iter().any(|&f| f >= plan.k) {
        return Err(Error::Parameter("fold assignment out of range".to_string()));
    }
    Ok(())
}
