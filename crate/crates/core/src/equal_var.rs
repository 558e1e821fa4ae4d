//! Closed-form estimators for equal sampling variances: James–Stein (with
//! regression and truncation), conjugate-prior posterior shrinkage, the SHP
//! posterior moments, and componentwise risk estimates.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Dataset, EqualVarFitExtras, Method, RiskReport, ShrinkageFit};
use crate::numerics::{chisq_cdf_ratio, ln_gamma_p};

/// Ordinary least squares `b = (X'X)⁻¹X'y`.
pub(crate) fn ols(x: &DMatrix<f64>, y: &[f64]) -> Result<DVector<f64>> {
    let yv = DVector::from_column_slice(y);
    let xtx = x.transpose() * x;
    let xty = x.transpose() * yv;
    xtx.cholesky()
        .map(|c| c.solve(&xty))
        .ok_or_else(|| Error::InvalidDataset("X'X is singular".into()))
}

/// `(residuals, fitted values, coefficients)`.
pub(crate) type Residualized = (Vec<f64>, Vec<f64>, Option<Vec<f64>>);

/// Residuals and fitted values against the regression space (or 0 when `r = 0`).
pub(crate) fn residualize(d: &Dataset) -> Result<Residualized> {
    match d.covariates() {
        None => Ok((d.y().to_vec(), vec![0.0; d.k()], None)),
        Some(x) => {
            let b = ols(x, d.y())?;
            let fitted = x * &b;
            let resid = d.y().iter().zip(fitted.iter()).map(|(y, f)| y - f).collect();
            Ok((resid, fitted.iter().copied().collect(), Some(b.iter().copied().collect())))
        }
    }
}

/// James–Stein shrinkage `(k − r − 2)/S` toward 0 or toward the least-squares fit.
pub fn js_fit(d: &Dataset, truncate: bool) -> Result<ShrinkageFit> {
    let v = d.common_variance()?;
    let k = d.k();
    let r = d.r();
    let (resid, fitted, coef) = residualize(d)?;
    let s = resid.iter().map(|e| e * e).sum::<f64>() / v;
    let df = (k - r - 2) as f64;

    let raw = if s > 0.0 {
        df / s
    } else if truncate {
        f64::INFINITY
    } else {
        return Err(Error::Degenerate("S = 0: James–Stein shrinkage is undefined without truncation".into()));
    };
    let b = if truncate { raw.min(1.0) } else { raw };

    let estimates = resid.iter().zip(&fitted).map(|(e, f)| (1.0 - b) * e + f).collect();
    let method = if truncate { Method::JsTruncated } else { Method::Js };
    let mut fit = ShrinkageFit::new(method, vec![b; k], estimates, s);
    fit.coefficients = coef;
    fit.labels = d.labels().map(<[String]>::to_vec);
    if truncate {
        fit.raw_shrinkage = Some(vec![raw; k]);
    } else {
        if b > 1.0 {
            fit.warnings.push(format!("B_JS = {b:.4} exceeds 1; consider --truncate"));
        }
        fit.unbiased_risk = Some(v * (k as f64 - df * b));
    }
    Ok(fit)
}

/// Unbiased risk `V(k − (k−r−2)·B̂_JS)` of an untruncated James–Stein fit.
pub fn js_unbiased_risk(fit: &ShrinkageFit, v: f64, k: usize) -> Result<f64> {
    match fit.method {
        Method::Js => {}
        Method::JsTruncated => {
            return Err(Error::Unsupported(
                "no unbiased risk estimate is available for the truncated James–Stein rule".into(),
            ))
        }
        other => return Err(Error::Unsupported(format!("{other} fit is not a James–Stein fit"))),
    }
    let r = fit.coefficients.as_ref().map_or(0, Vec::len);
    let b = fit.shrinkage.first().copied().ok_or_else(|| Error::Missing("shrinkage".into()))?;
    Ok(v * (k as f64 - (k - r - 2) as f64 * b))
}

/// Posterior mean of `B` under the conjugate-family prior with parameter `u`
/// and prior sum of squares `S0`:
/// `u/(S+S0) · P[χ²_(u+2) ≤ S+S0] / P[χ²_(u) ≤ S+S0]`.
pub fn conjugate_posterior_shrinkage(s: f64, u: f64, s0: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::Domain(format!("conjugate shrinkage requires u > 0 (got {u})")));
    }
    if !(s >= 0.0) || !(s0 >= 0.0) {
        return Err(Error::Domain("S and S0 must be nonnegative".into()));
    }
    let t = s + s0;
    if t == 0.0 {
        return Err(Error::Degenerate("S + S0 = 0".into()));
    }
    Ok(u / t * chisq_cdf_ratio(u, t)?)
}

/// Posterior variance of `B` under the conjugate posterior `B^(u/2−1) e^(−BT/2)` on
/// `(0, 1)`, from the first two moments. Used where the closed form cancels.
fn conjugate_posterior_variance_moments(t: f64, u: f64) -> Result<f64> {
    let a = 0.5 * u;
    if t == 0.0 {
        // Beta(u/2, 1)
        return Ok(a / ((a + 1.0) * (a + 1.0) * (a + 2.0)));
    }
    let l0 = ln_gamma_p(a, 0.5 * t)?;
    let m1 = u / t * (ln_gamma_p(a + 1.0, 0.5 * t)? - l0).exp();
    let m2 = u * (u + 2.0) / (t * t) * (ln_gamma_p(a + 2.0, 0.5 * t)? - l0).exp();
    Ok((m2 - m1 * m1).max(0.0))
}

/// Stein's harmonic prior fit for equal variances, shrinking toward 0.
pub fn shp_fit_equal(d: &Dataset) -> Result<ShrinkageFit> {
    let v = d.common_variance()?;
    if d.r() > 0 {
        return Err(Error::Unsupported("equal-variance SHP fit shrinks toward 0 (r = 0)".into()));
    }
    let k = d.k();
    let u = k as f64 - 2.0;
    let s = d.y().iter().map(|y| y * y).sum::<f64>() / v;
    let mut warnings = Vec::new();

    let (b_js, b_shp, post_var) = if s == 0.0 {
        warnings.push("S = 0: using the S → 0 limit of the SHP shrinkage".to_string());
        (f64::INFINITY, u / (u + 2.0), conjugate_posterior_variance_moments(0.0, u)?)
    } else {
        let b_js = u / s;
        let b = conjugate_posterior_shrinkage(s, u, 0.0)?;
        let closed = 2.0 / u * b * b - (b_js - b) * (1.0 - k as f64 / u * b);
        // the closed form subtracts two large terms when S is tiny
        let pv = if s < 1e-6 { conjugate_posterior_variance_moments(s, u)? } else { closed.max(0.0) };
        (b_js, b, pv)
    };

    let estimates: Vec<f64> = d.y().iter().map(|y| (1.0 - b_shp) * y).collect();
    let sds = d.y().iter().map(|y| (v * (1.0 - b_shp) + post_var * y * y).sqrt()).collect();
    let mut fit = ShrinkageFit::new(Method::Shp, vec![b_shp; k], estimates, s);
    fit.shrinkage_var = Some(vec![post_var; k]);
    fit.posterior_sd = Some(sds);
    fit.extras = Some(EqualVarFitExtras { b_js, b_shp, v: post_var, s });
    fit.labels = d.labels().map(<[String]>::to_vec);
    fit.warnings = warnings;
    Ok(fit)
}

/// Equal-variance shrinkage under a general conjugate-family prior point.
pub fn conjugate_fit(d: &Dataset, u: f64, s0: f64) -> Result<ShrinkageFit> {
    let v = d.common_variance()?;
    if d.r() > 0 {
        return Err(Error::Unsupported("conjugate-prior fit shrinks toward 0 (r = 0)".into()));
    }
    let s = d.y().iter().map(|y| y * y).sum::<f64>() / v;
    let b = conjugate_posterior_shrinkage(s, u, s0)?;
    let pv = conjugate_posterior_variance_moments(s + s0, u)?;
    let estimates = d.y().iter().map(|y| (1.0 - b) * y).collect();
    let sds = d.y().iter().map(|y| (v * (1.0 - b) + pv * y * y).sqrt()).collect();
    let mut fit = ShrinkageFit::new(Method::Conjugate, vec![b; d.k()], estimates, s);
    fit.shrinkage_var = Some(vec![pv; d.k()]);
    fit.posterior_sd = Some(sds);
    fit.labels = d.labels().map(<[String]>::to_vec);
    Ok(fit)
}

/// `⋆R_i = s_i²` and the unbiased `R̂_i = V(1−2B̂) + y_i²(B̂² + 2v)` for an
/// equal-variance SHP fit.
pub fn component_risk_estimates(fit: &ShrinkageFit, d: &Dataset) -> Result<RiskReport> {
    let extras = fit
        .extras
        .ok_or_else(|| Error::Missing("posterior variance v of B (requires an equal-variance SHP fit)".into()))?;
    let sds = fit.posterior_sd.as_ref().ok_or_else(|| Error::Missing("posterior sds".into()))?;
    let v = d.common_variance()?;
    let b = extras.b_shp;
    let posterior: Vec<f64> = sds.iter().map(|s| s * s).collect();
    let unbiased: Vec<f64> = d.y().iter().map(|y| v * (1.0 - 2.0 * b) + y * y * (b * b + 2.0 * extras.v)).collect();
    Ok(RiskReport {
        posterior_total: posterior.iter().sum(),
        unbiased_total: unbiased.iter().sum(),
        posterior_components: posterior,
        unbiased_components: unbiased,
        minimax_benchmark: d.total_variance(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaranchikReport {
    pub u_monotone: bool,
    pub u_bounded: bool,
    pub u_values: Vec<f64>,
    pub bound: f64,
}

/// Evaluates `u(S) = S·B̂(S)` on a grid and checks it is nondecreasing and
/// within `[0, 2(k − r − 2)]`.
pub fn baranchik_check<F>(rule: F, k: usize, r: usize, grid: &[f64]) -> Result<BaranchikReport>
where
    F: Fn(f64) -> Result<f64>,
{
    if grid.is_empty() || grid.iter().any(|s| !(*s > 0.0)) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("S-grid must be positive and strictly increasing".into()));
    }
    if k < r + 3 {
        return Err(Error::Domain(format!("k > r + 2 required (k = {k}, r = {r})")));
    }
    let bound = 2.0 * (k - r - 2) as f64;
    let u_values = grid.iter().map(|&s| rule(s).map(|b| s * b)).collect::<Result<Vec<_>>>()?;
    let u_monotone = u_values.windows(2).all(|w| w[1] >= w[0] - 1e-10 * w[0].abs().max(1.0));
    let u_bounded = u_values.iter().all(|u| *u >= 0.0 && *u <= bound);
    Ok(BaranchikReport { u_monotone, u_bounded, u_values, bound })
}
