//! Shrinkage estimation for multilevel Normal models.
//!
//! `y_i | μ_i ~ N(μ_i, V_i)` and `μ_i ~ N(x_i'β, A)`. The crate estimates the
//! shrinkage factors `B_i = V_i/(V_i + A)` by James–Stein, conjugate and
//! harmonic priors, Hudson–Berger, likelihood and ADM methods, and evaluates
//! them by Model-II simulation.

// negated comparisons reject NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod equal_var;
pub mod error;
pub mod evaluation;
pub mod fit;
pub mod ingest;
pub mod model;
pub mod numerics;
pub mod report;
pub mod unequal_var;

pub use error::{Error, Result};
pub use fit::{fit_method, FitOptions};
pub use model::{classify_prior, Dataset, Method, PriorClassification, PriorSpec, RiskReport, ShrinkageFit};
