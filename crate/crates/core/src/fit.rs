//! Method dispatch: one entry point that routes a dataset to the right fitter.

use crate::equal_var::{conjugate_fit, js_fit, shp_fit_equal};
use crate::error::{Error, Result};
use crate::model::{Dataset, Method, PriorSpec, ShrinkageFit};
use crate::numerics::QuadratureSpec;
use crate::unequal_var::{
    adm_fit, hudson_berger_fit, mle_fit, rule_of_thumb, shp_fit, LikelihoodContext, LikelihoodMode,
};

#[derive(Debug, Clone, Default)]
pub struct FitOptions {
    /// Rescale to unit variances before James–Stein, then map estimates back.
    pub standardize: bool,
    /// Prior point for [`Method::Conjugate`].
    pub prior: Option<PriorSpec>,
    pub quadrature: QuadratureSpec,
}

/// Fits `method` to `d`.
///
/// SHP uses the closed form when variances are equal and there are no
/// covariates, and quadrature otherwise.
pub fn fit_method(d: &Dataset, method: Method, opts: &FitOptions) -> Result<ShrinkageFit> {
    match method {
        Method::Js | Method::JsTruncated => {
            let truncate = method == Method::JsTruncated;
            if d.is_equal_variance() {
                return js_fit(d, truncate);
            }
            if !opts.standardize {
                return Err(Error::Unsupported(
                    "James–Stein requires equal variances; pass --standardize to rescale y_i/sd_i first".into(),
                ));
            }
            let mut fit = js_fit(&d.standardized(), truncate)?;
            for (est, v) in fit.estimates.iter_mut().zip(d.variances()) {
                *est *= v.sqrt();
            }
            fit.unbiased_risk = None;
            fit.warnings.push("fitted on standardized data y_i/sd_i; estimates mapped back to the original scale".into());
            Ok(fit)
        }
        Method::Hb => hudson_berger_fit(d),
        Method::Mle => mle_fit(&LikelihoodContext::new(d, LikelihoodMode::Ml)?),
        Method::Reml => mle_fit(&LikelihoodContext::new(d, LikelihoodMode::Reml)?),
        Method::Adm => adm_fit(&LikelihoodContext::natural(d)),
        Method::Shp => {
            if d.is_equal_variance() && d.r() == 0 {
                shp_fit_equal(d)
            } else {
                shp_fit(&LikelihoodContext::natural(d), &opts.quadrature)
            }
        }
        Method::Conjugate => {
            let p = opts
                .prior
                .ok_or_else(|| Error::Missing("conjugate fit needs a prior (u, k0, S0)".into()))?;
            if !d.is_equal_variance() {
                return Err(Error::Unsupported("conjugate-prior fit requires equal variances".into()));
            }
            let mut fit = conjugate_fit(d, p.u, p.s0)?;
            fit.method = Method::Conjugate;
            Ok(fit)
        }
        Method::RuleOfThumb => rule_of_thumb(d).map(|(_, fit)| fit),
    }
}
