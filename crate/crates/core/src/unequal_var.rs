//! Unequal-variance machinery built on the marginal likelihood of the
//! Level-II variance `A`: Hudson–Berger, MLE/REML, ADM, SHP by quadrature, and
//! the harmonic-mean rule of thumb.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Dataset, Method, ShrinkageFit};
use crate::numerics::{integrate_halfline_vec, maximize_1d, MaximizeSpec, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LikelihoodMode {
    /// Shrinkage toward 0; covariates, if any, are ignored (`β = 0`).
    Ml,
    /// `β` integrated out under a flat prior.
    Reml,
}

/// A dataset paired with the likelihood used to learn `A`.
#[derive(Debug, Clone, Copy)]
pub struct LikelihoodContext<'a> {
    dataset: &'a Dataset,
    mode: LikelihoodMode,
}

/// Likelihood pieces at one value of `A`.
struct Evaluation {
    loglik: f64,
    /// GLS coefficients `β̂(A)` (REML only).
    beta: Option<DVector<f64>>,
    /// `(X'D⁻¹X)⁻¹` (REML only).
    cov_beta: Option<DMatrix<f64>>,
}

impl<'a> LikelihoodContext<'a> {
    pub fn new(dataset: &'a Dataset, mode: LikelihoodMode) -> Result<Self> {
        if mode == LikelihoodMode::Reml && dataset.covariates().is_none() {
            return Err(Error::Unsupported("REML requires a covariate matrix".into()));
        }
        Ok(Self { dataset, mode })
    }

    /// ML when the dataset has no covariates, REML otherwise.
    pub fn natural(dataset: &'a Dataset) -> Self {
        let mode = if dataset.covariates().is_some() { LikelihoodMode::Reml } else { LikelihoodMode::Ml };
        Self { dataset, mode }
    }

    pub fn dataset(&self) -> &Dataset {
        self.dataset
    }

    pub fn mode(&self) -> LikelihoodMode {
        self.mode
    }

    /// Regression dimension seen by the likelihood.
    fn r(&self) -> usize {
        match self.mode {
            LikelihoodMode::Ml => 0,
            LikelihoodMode::Reml => self.dataset.r(),
        }
    }

    fn evaluate(&self, a: f64) -> Result<Evaluation> {
        if !(a >= 0.0) {
            return Err(Error::Domain(format!("A must be nonnegative (got {a})")));
        }
        let y = self.dataset.y();
        let v = self.dataset.variances();
        match self.mode {
            LikelihoodMode::Ml => {
                let mut acc = 0.0;
                for (yi, vi) in y.iter().zip(v) {
                    let b = vi / (vi + a);
                    acc += -(yi * yi / vi) * b + b.ln();
                }
                Ok(Evaluation { loglik: 0.5 * acc, beta: None, cov_beta: None })
            }
            LikelihoodMode::Reml => {
                let x = self.dataset.covariates().expect("checked at construction");
                let k = y.len();
                let r = x.ncols();
                let w: Vec<f64> = v.iter().map(|vi| 1.0 / (vi + a)).collect();
                let mut xtwx = DMatrix::<f64>::zeros(r, r);
                let mut xtwy = DVector::<f64>::zeros(r);
                for i in 0..k {
                    for p in 0..r {
                        xtwy[p] += x[(i, p)] * w[i] * y[i];
                        for q in 0..r {
                            xtwx[(p, q)] += x[(i, p)] * w[i] * x[(i, q)];
                        }
                    }
                }
                let chol = xtwx
                    .cholesky()
                    .ok_or_else(|| Error::Domain(format!("X'D⁻¹X is singular at A = {a}")))?;
                let beta = chol.solve(&xtwy);
                let log_det = 2.0 * chol.l().diagonal().iter().map(|d| d.ln()).sum::<f64>();
                let mut quad = 0.0;
                let mut log_var = 0.0;
                for i in 0..k {
                    let fitted: f64 = (0..r).map(|p| x[(i, p)] * beta[p]).sum();
                    let e = y[i] - fitted;
                    quad += w[i] * e * e;
                    log_var -= w[i].ln();
                }
                let cov_beta = chol.inverse();
                Ok(Evaluation {
                    loglik: -0.5 * (log_var + log_det + quad),
                    beta: Some(beta),
                    cov_beta: Some(cov_beta),
                })
            }
        }
    }
}

/// Log marginal likelihood of `A` (A-independent constants dropped).
pub fn marginal_loglik(a: f64, ctx: &LikelihoodContext<'_>) -> Result<f64> {
    ctx.evaluate(a).map(|e| e.loglik)
}

/// `V_H`, the harmonic-mean shrinkage `B_H = V_H/(V_H + Â)`, and `Â`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSummary {
    pub v_h: f64,
    pub b_h: f64,
    pub a_hat: f64,
    /// `(k − r − 2)/S` before clamping to `(0, 1]`.
    pub b_h_raw: f64,
}

/// `S = Σ (y_i − x_i'b)²/V_i` with `b = (X'V⁻¹X)⁻¹X'V⁻¹y`; returns `(S, b, fitted)`.
pub fn weighted_residual_ss(d: &Dataset) -> Result<(f64, Option<Vec<f64>>, Vec<f64>)> {
    let y = d.y();
    let v = d.variances();
    match d.covariates() {
        None => Ok((y.iter().zip(v).map(|(y, v)| y * y / v).sum(), None, vec![0.0; d.k()])),
        Some(x) => {
            let wx = DMatrix::from_fn(x.nrows(), x.ncols(), |i, j| x[(i, j)] / v[i]);
            let xtwx = x.transpose() * &wx;
            let xtwy = wx.transpose() * DVector::from_column_slice(y);
            let b = xtwx
                .cholesky()
                .ok_or_else(|| Error::InvalidDataset("X'V⁻¹X is singular".into()))?
                .solve(&xtwy);
            let fitted: Vec<f64> = (x * &b).iter().copied().collect();
            let s = (0..d.k()).map(|i| (y[i] - fitted[i]).powi(2) / v[i]).sum();
            Ok((s, Some(b.iter().copied().collect()), fitted))
        }
    }
}

fn require_r0(d: &Dataset, what: &str) -> Result<()> {
    if d.r() > 0 {
        return Err(Error::Unsupported(format!("{what} shrinks toward 0 and does not accept covariates")));
    }
    Ok(())
}

/// Hudson–Berger minimax rule `B̂_i = ((k−2)/V_i) / Σ_j (y_j/V_j)²`.
///
/// Shrinkages are truncated at 1; the untruncated values are kept in
/// `raw_shrinkage`, and the unbiased risk `Σ V_i − (k−2)²/Σ (y_j/V_j)²` is
/// computed from them.
pub fn hudson_berger_fit(d: &Dataset) -> Result<ShrinkageFit> {
    require_r0(d, "Hudson–Berger")?;
    let k = d.k();
    let km2 = (k - 2) as f64;
    let q: f64 = d.y().iter().zip(d.variances()).map(|(y, v)| (y / v).powi(2)).sum();
    if q == 0.0 {
        return Err(Error::Degenerate("all y_i = 0: Hudson–Berger denominator vanishes".into()));
    }
    let raw: Vec<f64> = d.variances().iter().map(|v| km2 / v / q).collect();
    let shrink: Vec<f64> = raw.iter().map(|b| b.min(1.0)).collect();
    let estimates = d.y().iter().zip(&shrink).map(|(y, b)| (1.0 - b) * y).collect();
    let s = d.y().iter().zip(d.variances()).map(|(y, v)| y * y / v).sum();

    let mut fit = ShrinkageFit::new(Method::Hb, shrink, estimates, s);
    let truncated: Vec<String> = raw
        .iter()
        .enumerate()
        .filter(|(_, b)| **b > 1.0)
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    if !truncated.is_empty() {
        fit.warnings.push(format!("shrinkage truncated at 1 for components {}", truncated.join(",")));
    }
    fit.unbiased_risk = Some(d.total_variance() - km2 * km2 / q);
    fit.raw_shrinkage = Some(raw);
    fit.labels = d.labels().map(<[String]>::to_vec);
    Ok(fit)
}

fn checked_loglik(ctx: &LikelihoodContext<'_>, a: f64) -> f64 {
    marginal_loglik(a, ctx).unwrap_or(f64::NAN)
}

/// Maximizer of the (RE)ML likelihood over `A ≥ 0`.
pub fn mle_a(ctx: &LikelihoodContext<'_>) -> Result<f64> {
    let spec = MaximizeSpec::default();
    maximize_1d(|a| checked_loglik(ctx, a), ctx.dataset.harmonic_variance(), &spec)
}

/// Maximizer of `A·L(A)` over `A > 0`.
pub fn adm_a(ctx: &LikelihoodContext<'_>) -> Result<f64> {
    let spec = MaximizeSpec::default();
    maximize_1d(|a| a.ln() + checked_loglik(ctx, a), ctx.dataset.harmonic_variance(), &spec)
}

/// Shrinkages, estimates and conditional sds at a plug-in `Â`.
fn plug_in_fit(ctx: &LikelihoodContext<'_>, a_hat: f64, method: Method) -> Result<(ShrinkageFit, Vec<f64>)> {
    let d = ctx.dataset;
    let eval = ctx.evaluate(a_hat)?;
    let fitted: Vec<f64> = match (&eval.beta, d.covariates()) {
        (Some(beta), Some(x)) => (x * beta).iter().copied().collect(),
        _ => vec![0.0; d.k()],
    };
    let shrink: Vec<f64> = d.variances().iter().map(|v| v / (v + a_hat)).collect();
    let estimates = (0..d.k()).map(|i| (1.0 - shrink[i]) * (d.y()[i] - fitted[i]) + fitted[i]).collect();
    let sds = shrink.iter().zip(d.variances()).map(|(b, v)| ((1.0 - b) * v).sqrt()).collect();
    let s = (0..d.k()).map(|i| (d.y()[i] - fitted[i]).powi(2) / d.variances()[i]).sum();
    let mut fit = ShrinkageFit::new(method, shrink, estimates, s);
    fit.posterior_sd = Some(sds);
    fit.a_hat = Some(a_hat);
    fit.coefficients = eval.beta.map(|b| b.iter().copied().collect());
    fit.labels = d.labels().map(<[String]>::to_vec);
    Ok((fit, fitted))
}

/// Plug-in fit at the (RE)ML estimate of `A`.
pub fn mle_fit(ctx: &LikelihoodContext<'_>) -> Result<ShrinkageFit> {
    let a_hat = mle_a(ctx)?;
    let method = match ctx.mode {
        LikelihoodMode::Ml => Method::Mle,
        LikelihoodMode::Reml => Method::Reml,
    };
    let (mut fit, _) = plug_in_fit(ctx, a_hat, method)?;
    if a_hat == 0.0 {
        fit.warnings.push(
            "Â = 0: full shrinkage with zero conditional variances; intervals would claim certainty".into(),
        );
    }
    Ok(fit)
}

/// ADM fit: `Â` maximizes `A·L(A)`.
///
/// Shrinkage variances come from the curvature of `log(A·L(A))` in `α = log A`:
/// `var(α) ≈ −1/ℓ''(α̂)` and `v_i ≈ B_i²(1−B_i)²·var(α)`. Posterior sds then use
/// `V_i(1 − B̂_i) + v_i (y_i − x_i'β̂)²`.
pub fn adm_fit(ctx: &LikelihoodContext<'_>) -> Result<ShrinkageFit> {
    let a_hat = adm_a(ctx)?;
    let (mut fit, fitted) = plug_in_fit(ctx, a_hat, Method::Adm)?;

    let alpha = a_hat.ln();
    let ell = |al: f64| -> Result<f64> { Ok(al + marginal_loglik(al.exp(), ctx)?) };
    let h = 1e-4;
    let curv = (ell(alpha + h)? - 2.0 * ell(alpha)? + ell(alpha - h)?) / (h * h);
    if curv < 0.0 && curv.is_finite() {
        let var_alpha = -1.0 / curv;
        let d = ctx.dataset;
        let vs: Vec<f64> = fit.shrinkage.iter().map(|b| b * b * (1.0 - b) * (1.0 - b) * var_alpha).collect();
        let sds = (0..d.k())
            .map(|i| {
                let e = d.y()[i] - fitted[i];
                (d.variances()[i] * (1.0 - fit.shrinkage[i]) + vs[i] * e * e).sqrt()
            })
            .collect();
        fit.shrinkage_var = Some(vs);
        fit.posterior_sd = Some(sds);
    } else {
        fit.warnings.push("log(A·L(A)) is not concave at Â_ADM; curvature variances omitted".into());
    }
    Ok(fit)
}

/// SHP (flat prior on `A`) posterior moments by quadrature.
///
/// All integrals share one likelihood evaluation per node. With `r = 0`:
/// `B̂_i = E[B_i|y]`, `v_i = Var(B_i|y)`, `μ̂_i = (1−B̂_i) y_i`,
/// `s_i² = V_i(1−B̂_i) + v_i y_i²`. Under REML the posterior mean and variance
/// of `μ_i` also average the GLS fit `x_i'β̂(A)` and its uncertainty.
pub fn shp_fit(ctx: &LikelihoodContext<'_>, quad: &QuadratureSpec) -> Result<ShrinkageFit> {
    let d = ctx.dataset;
    let k = d.k();
    let r = ctx.r();
    if k <= r + 2 {
        return Err(Error::Domain(format!("SHP posterior is improper unless k > r + 2 (k = {k}, r = {r})")));
    }
    let a_mode = mle_a(ctx)?;
    let peak = marginal_loglik(a_mode, ctx)?;
    let y = d.y();
    let v = d.variances();

    let (moments, fail) = match ctx.mode {
        LikelihoodMode::Ml => {
            let mut fail = None;
            let m = integrate_halfline_vec(
                |a, out| {
                    let ll = match marginal_loglik(a, ctx) {
                        Ok(ll) => ll,
                        Err(e) => {
                            fail.get_or_insert(e);
                            out.fill(f64::NAN);
                            return;
                        }
                    };
                    let w = (ll - peak).exp();
                    out[0] = w;
                    for i in 0..k {
                        let b = v[i] / (v[i] + a);
                        out[1 + i] = w * b;
                        out[1 + k + i] = w * b * b;
                    }
                },
                1 + 2 * k,
                d.harmonic_variance(),
                quad,
            );
            (m, fail)
        }
        LikelihoodMode::Reml => {
            let x = d.covariates().expect("REML context has covariates");
            let mut fail = None;
            let m = integrate_halfline_vec(
                |a, out| {
                    let eval = match ctx.evaluate(a) {
                        Ok(e) => e,
                        Err(e) => {
                            fail.get_or_insert(e);
                            out.fill(f64::NAN);
                            return;
                        }
                    };
                    let beta = eval.beta.as_ref().expect("REML");
                    let cov = eval.cov_beta.as_ref().expect("REML");
                    let w = (eval.loglik - peak).exp();
                    out[0] = w;
                    for i in 0..k {
                        let xi = x.row(i).transpose();
                        let fitted = xi.dot(beta);
                        let h = (xi.transpose() * cov * &xi)[(0, 0)];
                        let b = v[i] / (v[i] + a);
                        let m = y[i] - b * (y[i] - fitted);
                        out[1 + i] = w * b;
                        out[1 + k + i] = w * b * b;
                        out[1 + 2 * k + i] = w * m;
                        out[1 + 3 * k + i] = w * m * m;
                        out[1 + 4 * k + i] = w * (v[i] * (1.0 - b) + b * b * h);
                    }
                },
                1 + 5 * k,
                d.harmonic_variance(),
                quad,
            );
            (m, fail)
        }
    };
    if let Some(e) = fail {
        return Err(e);
    }
    let moments = moments?;
    let norm = moments[0];
    let shrink: Vec<f64> = (0..k).map(|i| moments[1 + i] / norm).collect();
    let vars: Vec<f64> = (0..k)
        .map(|i| (moments[1 + k + i] / norm - shrink[i] * shrink[i]).clamp(0.0, 0.25))
        .collect();

    let (estimates, sds): (Vec<f64>, Vec<f64>) = match ctx.mode {
        LikelihoodMode::Ml => (
            (0..k).map(|i| (1.0 - shrink[i]) * y[i]).collect(),
            (0..k).map(|i| (v[i] * (1.0 - shrink[i]) + vars[i] * y[i] * y[i]).sqrt()).collect(),
        ),
        LikelihoodMode::Reml => {
            let mean: Vec<f64> = (0..k).map(|i| moments[1 + 2 * k + i] / norm).collect();
            let sd = (0..k)
                .map(|i| {
                    let spread = (moments[1 + 3 * k + i] / norm - mean[i] * mean[i]).max(0.0);
                    (moments[1 + 4 * k + i] / norm + spread).sqrt()
                })
                .collect();
            (mean, sd)
        }
    };

    let (s, _, _) = weighted_residual_ss(d)?;
    let mut fit = ShrinkageFit::new(Method::Shp, shrink, estimates, s);
    fit.shrinkage_var = Some(vars);
    fit.posterior_sd = Some(sds);
    fit.labels = d.labels().map(<[String]>::to_vec);
    Ok(fit)
}

/// Rule-of-thumb `B̂_H = (k−r−2)/S`, `Â = V_H(1−B̂_H)/B̂_H`, `B̂_i = V_i/(V_i+Â)`.
pub fn rule_of_thumb(d: &Dataset) -> Result<(HarmonicSummary, ShrinkageFit)> {
    let k = d.k();
    let r = d.r();
    let (s, coef, fitted) = weighted_residual_ss(d)?;
    if s == 0.0 {
        return Err(Error::Degenerate("S = 0: the rule of thumb is undefined".into()));
    }
    let raw = (k - r - 2) as f64 / s;
    let mut warnings = Vec::new();
    let b_h = if raw > 1.0 {
        warnings.push(format!("B_H = {raw:.4} exceeds 1; clamped to full shrinkage"));
        1.0
    } else {
        raw
    };
    let v_h = d.harmonic_variance();
    let a_hat = v_h * (1.0 - b_h) / b_h;
    let shrink: Vec<f64> = d.variances().iter().map(|v| v / (v + a_hat)).collect();
    let estimates = (0..k).map(|i| (1.0 - shrink[i]) * (d.y()[i] - fitted[i]) + fitted[i]).collect();
    let sds = shrink.iter().zip(d.variances()).map(|(b, v)| ((1.0 - b) * v).sqrt()).collect();
    let mut fit = ShrinkageFit::new(Method::RuleOfThumb, shrink, estimates, s);
    fit.a_hat = Some(a_hat);
    fit.coefficients = coef;
    fit.posterior_sd = Some(sds);
    fit.labels = d.labels().map(<[String]>::to_vec);
    fit.warnings = warnings;
    Ok((HarmonicSummary { v_h, b_h, a_hat, b_h_raw: raw }, fit))
}
