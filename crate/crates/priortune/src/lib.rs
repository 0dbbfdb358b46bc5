//! Translate elicited predictive distributions into informative model priors.
//!
//! Given a sampler for a model's prior predictive distribution and an elicited
//! target CDF, this crate searches the hyperparameter box for values whose
//! prior predictive matches the target. Matching is scored by a CDF-based
//! discrepancy (Cramér-von Mises or Anderson-Darling) estimated with an
//! empirical CDF and importance sampling, and is traded off against a
//! dispersion objective that prefers less confident priors. The search runs
//! in two stages: controlled random search (CRS2 with local mutation) seeds a
//! design for Gaussian-process surrogate multi-objective Bayesian
//! optimisation, and the resulting Pareto frontier is scalarised post hoc over
//! a grid of trade-off weights.
//!
//! Entry points:
//! - [`optimizer::run_translation`] drives the whole pipeline for a
//!   [`optimizer::ProblemBundle`].
//! - [`models`] builds ready-made problem bundles (cure-fraction survival,
//!   R² shrinkage priors, Preece-Baines growth curves).
//! - [`cli`] loads TOML run configurations and writes frontier / sweep / run
//!   artifacts; the `priortune` binary is a thin wrapper over it.
//!
//! See the crate's `examples/` directory for one runnable example per major
//! capability.

pub mod cli;
pub mod discrepancy;
pub mod dist;
pub mod ecdf;
pub mod error;
pub mod importance;
pub mod models;
pub mod objectives;
pub mod optimizer;
pub mod rng;
pub mod special;
pub mod target;

pub use error::{Error, Result};
pub use rng::RngState;
