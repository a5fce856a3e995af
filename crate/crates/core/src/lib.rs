//! Statistical machine-learning core for tabular astronomical catalogs.
//!
//! The crate covers the full modelling pipeline on in-memory tables: schema
//! inference and imputation, signed feature hashing, standardization and PCA,
//! six supervised classifiers behind one [`Model`] interface, a k-fold
//! cross-validation harness with evaluation artifacts, and deterministic SVG
//! emitters for the data and evaluation plots.
//!
//! Everything here is pure computation over owned buffers: no files, no
//! global state, no threads. Operations take explicit seeds where they are
//! stochastic and are bit-deterministic for fixed inputs. The crate is
//! `no_std`-compatible (it only needs `alloc`); the companion `astromls`
//! crate layers CSV/JSON/SVG file IO and the command-line front end on top.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dataset;
pub mod error;
pub mod eval;
pub mod learners;
pub mod matrix;
pub mod reduce;
pub mod svg;

mod linalg;
mod math;

pub use error::{Error, Result};
pub use matrix::{FeatureMatrix, Matrix};
