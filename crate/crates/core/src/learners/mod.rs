//! The six supervised classifiers behind one fit/predict interface.

mod forest;
mod knn;
mod lda;
mod naive_bayes;
mod svm;
mod tree;

pub use forest::RandomForestModel;
pub use knn::KnnModel;
pub use lda::LdaModel;
pub use naive_bayes::{NaiveBayesModel, NbMode};
pub use svm::{PairMachine, SvmModel};
pub use tree::{DecisionTreeModel, TreeNode};

use alloc::string::ToString;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::dataset::{LabeledDataset, Table};
use crate::error::{Error, Result};
use crate::matrix::{FeatureMatrix, Matrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaiveBayesParams {
    pub mode: NbMode,
    pub var_smoothing: f64,
    pub alpha: f64,
}

impl Default for NaiveBayesParams {
    fn default() -> Self {
        NaiveBayesParams { mode: NbMode::GaussianOnMatrix, var_smoothing: 1e-9, alpha: 1.0 }
    }
}

/// CART growth has no depth or leaf-size limits; Gini is the only split
/// criterion. `feature_subsample` draws that many candidate features per
/// split and exists for the forest.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DecisionTreeParams {
    pub feature_subsample: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomForestParams {
    pub trees: usize,
    pub bootstrap: bool,
    pub feature_subsample: Option<usize>,
}

impl Default for RandomForestParams {
    fn default() -> Self {
        RandomForestParams { trees: 10, bootstrap: true, feature_subsample: None }
    }
}

/// RBF-kernel SVM trained by simplified SMO, one machine per class pair.
/// `gamma <= 0` is the auto sentinel `1/d`. `coef0` is accepted for
/// interface parity and recorded, but the RBF kernel does not use it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvmParams {
    pub c: f64,
    pub gamma: f64,
    pub coef0: f64,
    pub tol: f64,
    pub max_passes: usize,
}

impl Default for SvmParams {
    fn default() -> Self {
        SvmParams { c: 1.0, gamma: 0.0, coef0: 0.0, tol: 1e-3, max_passes: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnnParams {
    pub k: usize,
}

impl Default for KnnParams {
    fn default() -> Self {
        KnnParams { k: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LdaParams {
    pub eigen_floor: f64,
}

impl Default for LdaParams {
    fn default() -> Self {
        LdaParams { eigen_floor: 1e-6 }
    }
}

/// Algorithm choice plus hyperparameters, as echoed into reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "snake_case")]
pub enum AlgorithmSpec {
    NaiveBayes(NaiveBayesParams),
    DecisionTree(DecisionTreeParams),
    RandomForest(RandomForestParams),
    Svm(SvmParams),
    Knn(KnnParams),
    Lda(LdaParams),
}

impl AlgorithmSpec {
    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmSpec::NaiveBayes(_) => "naive_bayes",
            AlgorithmSpec::DecisionTree(_) => "decision_tree",
            AlgorithmSpec::RandomForest(_) => "random_forest",
            AlgorithmSpec::Svm(_) => "svm",
            AlgorithmSpec::Knn(_) => "knn",
            AlgorithmSpec::Lda(_) => "lda",
        }
    }
}

/// A trained classifier. Immutable after fit; predictions never mutate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Model {
    NaiveBayes(NaiveBayesModel),
    DecisionTree(DecisionTreeModel),
    RandomForest(RandomForestModel),
    Svm(SvmModel),
    Knn(KnnModel),
    Lda(LdaModel),
}

/// Fits the requested algorithm. `seed` drives the stochastic fits (forest
/// bootstrap, SMO partner choice) and is recorded; the other variants are
/// seed-free.
pub fn fit(data: &LabeledDataset, spec: &AlgorithmSpec, seed: u64) -> Result<Model> {
    if data.n_features() == 0 {
        return Err(Error::Parameter("dataset has no features".to_string()));
    }
    match spec {
        AlgorithmSpec::NaiveBayes(p) => naive_bayes::fit(data, p).map(Model::NaiveBayes),
        AlgorithmSpec::DecisionTree(p) => tree::fit(data, p).map(Model::DecisionTree),
        AlgorithmSpec::RandomForest(p) => forest::fit(data, p, seed).map(Model::RandomForest),
        AlgorithmSpec::Svm(p) => svm::fit(data, p, seed).map(Model::Svm),
        AlgorithmSpec::Knn(p) => knn::fit(data, p).map(Model::Knn),
        AlgorithmSpec::Lda(p) => lda::fit(data, p).map(Model::Lda),
    }
}

impl Model {
    pub fn variant_name(&self) -> &'static str {
        match self {
            Model::NaiveBayes(_) => "naive_bayes",
            Model::DecisionTree(_) => "decision_tree",
            Model::RandomForest(_) => "random_forest",
            Model::Svm(_) => "svm",
            Model::Knn(_) => "knn",
            Model::Lda(_) => "lda",
        }
    }

    pub fn class_count(&self) -> usize {
        match self {
            Model::NaiveBayes(m) => m.class_count,
            Model::DecisionTree(m) => m.class_count,
            Model::RandomForest(m) => m.class_count,
            Model::Svm(m) => m.class_count,
            Model::Knn(m) => m.class_count,
            Model::Lda(m) => m.class_count,
        }
    }

    pub fn feature_count(&self) -> usize {
        match self {
            Model::NaiveBayes(m) => m.feature_count,
            Model::DecisionTree(m) => m.feature_count,
            Model::RandomForest(m) => m.feature_count,
            Model::Svm(m) => m.feature_count,
            Model::Knn(m) => m.feature_count,
            Model::Lda(m) => m.feature_count,
        }
    }

    /// True for the one variant that scores table rows instead of matrix
    /// rows (mixed-mode Naive Bayes).
    pub fn needs_table(&self) -> bool {
        matches!(self, Model::NaiveBayes(m) if m.mode == NbMode::MixedOnTable)
    }

    /// One class index per matrix row.
    pub fn predict(&self, x: &FeatureMatrix) -> Result<Vec<usize>> {
        let scores = self.predict_scores(x)?;
        Ok(self.decide(&scores))
    }

    /// `n x c` score matrix: posterior probabilities for NB/LDA, class
    /// frequencies for tree leaves, vote fractions for forests/KNN,
    /// normalized pairwise votes for SVM. Row argmax agrees with
    /// [`Model::predict`] under each variant's tie rule.
    pub fn predict_scores(&self, x: &FeatureMatrix) -> Result<Matrix> {
        match self {
            Model::NaiveBayes(m) => m.score_matrix(x),
            Model::DecisionTree(m) => m.score_matrix(x),
            Model::RandomForest(m) => m.score_matrix(x),
            Model::Svm(m) => m.score_matrix(x),
            Model::Knn(m) => m.score_matrix(x),
            Model::Lda(m) => m.score_matrix(x),
        }
    }

    /// Table-row predictions for mixed-mode Naive Bayes.
    pub fn predict_table(&self, table: &Table) -> Result<Vec<usize>> {
        let scores = self.predict_scores_table(table)?;
        Ok(self.decide(&scores))
    }

    pub fn predict_scores_table(&self, table: &Table) -> Result<Matrix> {
        match self {
            Model::NaiveBayes(m) if m.mode == NbMode::MixedOnTable => m.score_table(table),
            _ => Err(Error::Parameter(
                "only mixed-mode naive bayes predicts from a table".to_string(),
            )),
        }
    }

    /// Predicts a dataset with whichever input the variant consumes.
    pub fn predict_dataset(&self, data: &LabeledDataset) -> Result<Vec<usize>> {
        if self.needs_table() {
            self.predict_table(&data.source)
        } else {
            self.predict(&data.features)
        }
    }

    pub fn predict_scores_dataset(&self, data: &LabeledDataset) -> Result<Matrix> {
        if self.needs_table() {
            self.predict_scores_table(&data.source)
        } else {
            self.predict_scores(&data.features)
        }
    }

    fn decide(&self, scores: &Matrix) -> Vec<usize> {
        match self {
            // KNN breaks vote ties by the class of the nearest tied member.
            Model::Knn(m) => m.tie_broken_argmax(scores),
            _ => (0..scores.rows()).map(|i| argmax(scores.row(i))).collect(),
        }
    }
}

/// Index of the largest value; ties go to the lowest index.
pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

pub(crate) fn check_width(expected: usize, x: &FeatureMatrix) -> Result<()> {
    if x.n_cols() != expected {
        return Err(Error::DimensionMismatch { expected, actual: x.n_cols() });
    }
    Ok(())
}
