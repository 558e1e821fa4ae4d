//! Numerical building blocks shared by the estimators and the simulation harness.

pub mod optimize;
pub mod quadrature;
pub mod rng;
pub mod special;

pub use optimize::{maximize_1d, maximize_on_interval, MaximizeSpec};
pub use quadrature::{integrate_halfline, integrate_halfline_scaled, integrate_halfline_vec, QuadratureSpec};
pub use rng::{standard_normal_draws, RandomStream};
pub use special::{chisq_cdf, chisq_cdf_ratio, gamma_pq, ln_gamma, ln_gamma_p, normal_cdf};
