//! Standardization and principal component analysis.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::math;
use crate::matrix::{FeatureMatrix, Matrix};

/// Column-wise standardizer. Uses the population denominator `n`;
/// zero-variance columns map to 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub means: Vec<f64>,
    pub stdevs: Vec<f64>,
}

pub fn fit_scaler(x: &FeatureMatrix) -> Result<Scaler> {
    if x.n_rows() == 0 || x.n_cols() == 0 {
        return Err(Error::Parameter("cannot fit a scaler on an empty matrix".to_string()));
    }
    let means = x.matrix().column_means();
    let stdevs =
        x.matrix().column_population_variances().iter().map(|&v| math::sqrt(v)).collect();
    Ok(Scaler { means, stdevs })
}

impl Scaler {
    pub fn transform(&self, x: &FeatureMatrix) -> Result<FeatureMatrix> {
        if x.n_cols() != self.means.len() {
            return Err(Error::DimensionMismatch {
                expected: self.means.len(),
                actual: x.n_cols(),
            });
        }
        let mut out = Matrix::zeros(x.n_rows(), x.n_cols());
        for i in 0..x.n_rows() {
            for j in 0..x.n_cols() {
                let s = self.stdevs[j];
                let v = if s == 0.0 { 0.0 } else { (x.get(i, j) - self.means[j]) / s };
                out.set(i, j, v);
            }
        }
        FeatureMatrix::new(out, x.feature_names().to_vec())
    }
}

/// Principal directions of a centered data matrix. Rows of `components` are
/// orthonormal; `explained_variance` is `sigma^2 / (n - 1)`, nonincreasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    pub components: Matrix,
    pub explained_variance: Vec<f64>,
}

/// Fits PCA by SVD of the centered matrix. Each component row is scaled so
/// its largest-magnitude entry is positive (earliest index decides ties),
/// which pins the otherwise arbitrary SVD signs.
pub fn fit_pca(x: &FeatureMatrix, r: usize) -> Result<PcaModel> {
    let n = x.n_rows();
    let d = x.n_cols();
    if n < 2 {
        return Err(Error::Parameter(format!("PCA needs at least 2 rows, got {n}")));
    }
    let max_r = (n - 1).min(d);
    if r < 1 || r > max_r {
        return Err(Error::Parameter(format!(
            "PCA target dimension must be in [1, {max_r}], got {r}"
        )));
    }
    let mean = x.matrix().column_means();
    let mut centered = Matrix::zeros(n, d);
    for i in 0..n {
        for j in 0..d {
            centered.set(i, j, x.get(i, j) - mean[j]);
        }
    }
    let (sigma, v) = linalg::svd_right(&centered);
    let mut components = Matrix::zeros(r, d);
    let mut explained_variance = Vec::with_capacity(r);
    for k in 0..r {
        for j in 0..d {
            components.set(k, j, v.get(j, k));
        }
        explained_variance.push(sigma[k] * sigma[k] / (n as f64 - 1.0));
    }
    apply_sign_convention(&mut components);
    Ok(PcaModel { mean, components, explained_variance })
}

fn apply_sign_convention(components: &mut Matrix) {
    for k in 0..components.rows() {
        let row = components.row(k);
        let mut lead = 0usize;
        for (j, v) in row.iter().enumerate() {
            if v.abs() > row[lead].abs() {
                lead = j;
            }
        }
        if row[lead] < 0.0 {
            for v in components.row_mut(k) {
                *v = -*v;
            }
        }
    }
}

impl PcaModel {
    pub fn n_components(&self) -> usize {
        self.components.rows()
    }

    pub fn input_dim(&self) -> usize {
        self.components.cols()
    }

    /// Projects rows onto the principal directions: `(x - mean) C^T`.
    pub fn transform(&self, x: &FeatureMatrix) -> Result<FeatureMatrix> {
        let d = self.input_dim();
        if x.n_cols() != d {
            return Err(Error::DimensionMismatch { expected: d, actual: x.n_cols() });
        }
        let r = self.n_components();
        let mut out = Matrix::zeros(x.n_rows(), r);
        for i in 0..x.n_rows() {
            let row = x.row(i);
            for k in 0..r {
                let mut s = 0.0;
                for j in 0..d {
                    s += (row[j] - self.mean[j]) * self.components.get(k, j);
                }
                out.set(i, k, s);
            }
        }
        let names = (0..r).map(|k| format!("pc{}", k + 1)).collect();
        FeatureMatrix::new(out, names)
    }

    /// Maps scores back into the original space: `y C + mean`.
    pub fn inverse_transform(&self, scores: &FeatureMatrix) -> Result<FeatureMatrix> {
        let r = self.n_components();
        if scores.n_cols() != r {
            return Err(Error::DimensionMismatch { expected: r, actual: scores.n_cols() });
        }
        let d = self.input_dim();
        let mut out = Matrix::zeros(scores.n_rows(), d);
        for i in 0..scores.n_rows() {
            for j in 0..d {
                let mut s = self.mean[j];
                for k in 0..r {
                    s += scores.get(i, k) * self.components.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        let names = (0..d).map(|j| format!("x{j}")).collect();
        FeatureMatrix::new(out, names)
    }
}

/// Heuristic used before PCA in the CLI paths: standardize when column
/// variances are more than a factor of 10 apart (constant columns count as
/// infinitely far apart).
pub fn should_standardize(x: &FeatureMatrix) -> bool {
    let vars = x.matrix().column_population_variances();
    let max = vars.iter().cloned().fold(0.0f64, f64::max);
    let min = vars.iter().cloned().fold(f64::INFINITY, f64::min);
    max > 0.0 && max > 10.0 * min
}

/// Convenience free function mirroring the model method.
pub fn pca_transform(model: &PcaModel, x: &FeatureMatrix) -> Result<FeatureMatrix> {
    model.transform(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fm(rows: &[Vec<f64>]) -> FeatureMatrix {
        let m = Matrix::from_rows(rows).unwrap();
        let names = (0..m.cols()).map(|j| format!("f{j}")).collect();
        FeatureMatrix::new(m, names).unwrap()
    }

    #[test]
    fn scaler_constant_column_maps_to_zero() {
        let x = fm(&[vec![2.0], vec![2.0], vec![2.0]]);
        let s = fit_scaler(&x).unwrap();
        assert_eq!(s.means, vec![2.0]);
        assert_eq!(s.stdevs, vec![0.0]);
        let t = s.transform(&x).unwrap();
        assert!(t.matrix().data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn scaler_two_point_column() {
        let x = fm(&[vec![0.0], vec![2.0]]);
        let s = fit_scaler(&x).unwrap();
        assert_eq!(s.means, vec![1.0]);
        assert_eq!(s.stdevs, vec![1.0]);
        let t = s.transform(&x).unwrap();
        assert_eq!(t.matrix().data(), &[-1.0, 1.0]);
    }

    #[test]
    fn transformed_columns_have_zero_mean_unit_or_zero_stdev() {
        let x = fm(&[
            vec![1.0, 5.0, 7.0],
            vec![2.0, 5.0, -3.0],
            vec![4.0, 5.0, 0.5],
            vec![-1.0, 5.0, 2.25],
        ]);
        let t = fit_scaler(&x).unwrap().transform(&x).unwrap();
        for (j, mean) in t.matrix().column_means().iter().enumerate() {
            assert!(mean.abs() < 1e-12, "column {j} mean {mean}");
        }
        for v in t.matrix().column_population_variances() {
            let stdev = math::sqrt(v);
            assert!(stdev.abs() < 1e-12 || (stdev - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn empty_matrix_rejected() {
        let m = Matrix::zeros(0, 2);
        let x = FeatureMatrix::new(m, vec!["a".into(), "b".into()]).unwrap();
        assert!(fit_scaler(&x).is_err());
    }

    #[test]
    fn axis_aligned_data_recovers_axes() {
        // sample variances (n-1 denominator): x -> 4, y -> 1, covariance 0
        let x = fm(&[
            vec![2.0, 1.0],
            vec![-2.0, 1.0],
            vec![2.0, -1.0],
            vec![-2.0, -1.0],
            vec![0.0, 0.0],
        ]);
        let p = fit_pca(&x, 2).unwrap();
        assert!((p.explained_variance[0] - 4.0).abs() < 1e-10);
        assert!((p.explained_variance[1] - 1.0).abs() < 1e-10);
        assert!((p.components.get(0, 0) - 1.0).abs() < 1e-9);
        assert!(p.components.get(0, 1).abs() < 1e-9);
        assert!((p.components.get(1, 1) - 1.0).abs() < 1e-9);
        assert!(p.components.get(1, 0).abs() < 1e-9);
    }

    #[test]
    fn full_rank_round_trip_reconstructs() {
        let x = fm(&[
            vec![1.0, 0.5, -2.0],
            vec![0.0, 1.5, 2.0],
            vec![3.0, -1.0, 0.25],
            vec![-2.0, 0.75, 1.0],
            vec![0.5, 2.0, -1.5],
        ]);
        let p = fit_pca(&x, 3).unwrap();
        let scores = p.transform(&x).unwrap();
        let back = p.inverse_transform(&scores).unwrap();
        for i in 0..x.n_rows() {
            for j in 0..x.n_cols() {
                assert!((back.get(i, j) - x.get(i, j)).abs() < 1e-9, "({i},{j})");
            }
        }
    }

    #[test]
    fn transform_of_mean_rows_is_zero() {
        let x = fm(&[vec![1.0, 2.0], vec![3.0, 6.0], vec![5.0, 4.0]]);
        let p = fit_pca(&x, 2).unwrap();
        let mean_rows = fm(&[p.mean.clone(), p.mean.clone()]);
        let scores = p.transform(&mean_rows).unwrap();
        assert!(scores.matrix().data().iter().all(|&v| v.abs() < 1e-12));
    }

    #[test]
    fn scores_are_decorrelated() {
        let x = fm(&[
            vec![1.0, 2.0, 0.5],
            vec![2.0, 1.0, 1.5],
            vec![3.0, 4.0, -0.5],
            vec![4.0, 3.0, 0.25],
            vec![5.0, 6.0, 1.0],
            vec![6.0, 5.0, -1.25],
        ]);
        let p = fit_pca(&x, 3).unwrap();
        let scores = p.transform(&x).unwrap();
        let n = scores.n_rows() as f64;
        let means = scores.matrix().column_means();
        for a in 0..3 {
            for b in (a + 1)..3 {
                let mut cov = 0.0;
                for i in 0..scores.n_rows() {
                    cov += (scores.get(i, a) - means[a]) * (scores.get(i, b) - means[b]);
                }
                cov /= n - 1.0;
                assert!(cov.abs() < 1e-8, "cov({a},{b}) = {cov}");
            }
        }
    }

    #[test]
    fn r_out_of_range_rejected() {
        let x = fm(&[vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.5]]);
        assert!(fit_pca(&x, 0).is_err());
        assert!(fit_pca(&x, 3).is_err()); // r > d
        let two = fm(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!(fit_pca(&two, 2).is_err()); // r > n - 1
    }

    #[test]
    fn standardize_heuristic() {
        assert!(!should_standardize(&fm(&[vec![0.0, 0.0], vec![1.0, 2.0]])));
        assert!(should_standardize(&fm(&[vec![0.0, 0.0], vec![1.0, 200.0]])));
        // constant column alongside a varying one -> infinite ratio
        assert!(should_standardize(&fm(&[vec![5.0, 0.0], vec![5.0, 1.0]])));
        // all-constant matrix has nothing to rescale
        assert!(!should_standardize(&fm(&[vec![5.0, 1.0], vec![5.0, 1.0]])));
    }
}
