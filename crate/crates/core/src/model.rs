//! Datasets, prior specifications, fitted shrinkages, and risk reports.

use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative spread below which variances count as equal.
pub const EQUAL_VARIANCE_TOL: f64 = 1e-9;

const FLAG_TOL: f64 = 1e-12;

/// `k` component estimates with their sampling variances and optional covariates.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    y: Vec<f64>,
    v: Vec<f64>,
    x: Option<DMatrix<f64>>,
    labels: Option<Vec<String>>,
}

impl Dataset {
    /// Builds and validates a dataset without covariates.
    pub fn new(y: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        validate_dataset(Self { y, v, x: None, labels: None })
    }

    /// Builds without validation; pair with [`validate_dataset`].
    pub fn unchecked(y: Vec<f64>, v: Vec<f64>, x: Option<DMatrix<f64>>, labels: Option<Vec<String>>) -> Self {
        Self { y, v, x, labels }
    }

    /// Attaches a `k × r` covariate matrix given as rows.
    pub fn with_covariates(self, rows: &[Vec<f64>]) -> Result<Self> {
        let k = self.k();
        if rows.len() != k {
            return Err(Error::InvalidDataset(format!("covariate rows ({}) must match k = {k}", rows.len())));
        }
        let r = rows.first().map_or(0, Vec::len);
        if r == 0 {
            return Err(Error::InvalidDataset("covariate matrix must have at least one column".into()));
        }
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidDataset("covariate rows have differing lengths".into()));
        }
        let x = DMatrix::from_fn(k, r, |i, j| rows[i][j]);
        validate_dataset(Self { x: Some(x), ..self })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.k() {
            return Err(Error::InvalidDataset(format!("{} labels for k = {}", labels.len(), self.k())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn k(&self) -> usize {
        self.y.len()
    }

    /// Number of covariate columns (0 when shrinking toward 0).
    pub fn r(&self) -> usize {
        self.x.as_ref().map_or(0, |x| x.ncols())
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn variances(&self) -> &[f64] {
        &self.v
    }

    pub fn covariates(&self) -> Option<&DMatrix<f64>> {
        self.x.as_ref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn sd(&self) -> Vec<f64> {
        self.v.iter().map(|v| v.sqrt()).collect()
    }

    /// Harmonic mean `V_H = k / Σ 1/V_i`.
    pub fn harmonic_variance(&self) -> f64 {
        self.k() as f64 / self.v.iter().map(|v| 1.0 / v).sum::<f64>()
    }

    pub fn total_variance(&self) -> f64 {
        self.v.iter().sum()
    }

    pub fn is_equal_variance(&self) -> bool {
        let max = self.v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min = self.v.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min - 1.0 < EQUAL_VARIANCE_TOL
    }

    /// The common variance, or an error when the variances differ.
    pub fn common_variance(&self) -> Result<f64> {
        if !self.is_equal_variance() {
            return Err(Error::Unsupported(
                "equal variances required (max V / min V - 1 must be below 1e-9); use an \
                 unequal-variance method or standardize"
                    .into(),
            ));
        }
        Ok(self.v.iter().sum::<f64>() / self.k() as f64)
    }

    /// `y_i / sd_i` with unit variances: the rescaling that makes James–Stein applicable.
    pub fn standardized(&self) -> Dataset {
        let y = self.y.iter().zip(&self.v).map(|(y, v)| y / v.sqrt()).collect();
        let x = self.x.as_ref().map(|x| {
            DMatrix::from_fn(x.nrows(), x.ncols(), |i, j| x[(i, j)] / self.v[i].sqrt())
        });
        Dataset { y, v: vec![1.0; self.k()], x, labels: self.labels.clone() }
    }
}

/// Checks every dataset invariant and hands the dataset back unchanged.
pub fn validate_dataset(d: Dataset) -> Result<Dataset> {
    let k = d.y.len();
    if d.v.len() != k {
        return Err(Error::InvalidDataset(format!("{} variances for {k} estimates", d.v.len())));
    }
    if k < 3 {
        return Err(Error::InvalidDataset(format!("k ≥ 3 required (got k = {k})")));
    }
    if let Some(i) = d.y.iter().position(|y| !y.is_finite()) {
        return Err(Error::InvalidDataset(format!("estimate {} is not finite", i + 1)));
    }
    if let Some(i) = d.v.iter().position(|v| !(*v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidDataset(format!(
            "variance {} must be positive and finite (got {})",
            i + 1,
            d.v[i]
        )));
    }
    if let Some(x) = &d.x {
        let r = x.ncols();
        if x.nrows() != k {
            return Err(Error::InvalidDataset(format!("covariate matrix has {} rows for k = {k}", x.nrows())));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidDataset("covariates must be finite".into()));
        }
        if k <= r + 2 {
            return Err(Error::InvalidDataset(format!("k > r + 2 required (k = {k}, r = {r})")));
        }
        let svd = x.clone().svd(false, false);
        let smax = svd.singular_values.max();
        let rank = svd.singular_values.iter().filter(|s| **s > 1e-10 * smax.max(f64::MIN_POSITIVE)).count();
        if rank < r {
            return Err(Error::InvalidDataset(format!("covariate matrix is rank deficient (rank {rank} < r = {r})")));
        }
    }
    if let Some(l) = &d.labels {
        if l.len() != k {
            return Err(Error::InvalidDataset(format!("{} labels for k = {k}", l.len())));
        }
    }
    Ok(d)
}

/// A point `(u, k0, S0)` of the three-parameter Beta-type prior family on `B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PriorSpec {
    pub u: f64,
    pub k0: f64,
    pub s0: f64,
}

impl PriorSpec {
    pub fn new(u: f64, k0: f64, s0: f64) -> Result<Self> {
        if !(s0 >= 0.0) {
            return Err(Error::Domain(format!("S0 must be nonnegative (got {s0})")));
        }
        if !u.is_finite() || !k0.is_finite() {
            return Err(Error::Domain("u and k0 must be finite".into()));
        }
        Ok(Self { u, k0, s0 })
    }

    /// Stein's harmonic prior for `k` components: `(k − 2, 0, 0)`.
    pub fn shp(k: usize) -> Self {
        Self { u: k as f64 - 2.0, k0: 0.0, s0: 0.0 }
    }

    /// `c = k + k0 − u`.
    pub fn c(&self, k: usize) -> f64 {
        k as f64 + self.k0 - self.u
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PriorClassification {
    pub proper_prior: bool,
    pub proper_posterior: bool,
    pub minimax_necessary: bool,
    pub scale_invariant: bool,
    pub conjugate_line: bool,
    pub is_shp: bool,
}

impl PriorClassification {
    /// Named regions of the `(u, k0)` plane this prior falls in.
    pub fn annotations(&self, p: &PriorSpec) -> Vec<&'static str> {
        let mut notes = Vec::new();
        if self.is_shp {
            notes.push("SHP");
        }
        if p.u.abs() < FLAG_TOL && p.k0.abs() < FLAG_TOL {
            notes.push("Lebesgue (no shrinkage)");
        }
        if self.proper_prior {
            if self.conjugate_line && p.k0 > 2.0 {
                notes.push("proper prior (Strawderman)");
            } else {
                notes.push("proper prior");
            }
        }
        if self.scale_invariant {
            notes.push("scale-invariant");
        }
        if self.conjugate_line {
            notes.push("conjugate-line");
        }
        if self.proper_posterior {
            notes.push("posterior proper");
        } else {
            notes.push("posterior improper — do not use");
        }
        if self.minimax_necessary {
            if self.proper_prior {
                notes.push("admissible-minimax region");
            } else {
                notes.push("minimax-candidate");
            }
        } else {
            notes.push("not minimax");
        }
        notes
    }
}

/// Places a prior in the propriety/minimaxity regions for `k` components.
///
/// `S0` plays no role in any flag.
pub fn classify_prior(p: &PriorSpec, k: usize) -> PriorClassification {
    let k = k as f64;
    let (u, k0) = (p.u, p.k0);
    let scale_invariant = k0.abs() < FLAG_TOL;
    let conjugate_line = (k0 - (u - (k - 2.0))).abs() < FLAG_TOL;
    PriorClassification {
        proper_prior: k < u && u < k + k0,
        proper_posterior: k0 > u - k && u > 0.0,
        minimax_necessary: (0.0..=2.0 * (k - 2.0)).contains(&u),
        scale_invariant,
        conjugate_line,
        is_shp: scale_invariant && (u - (k - 2.0)).abs() < FLAG_TOL,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Js,
    JsTruncated,
    Hb,
    Mle,
    Reml,
    Adm,
    Shp,
    Conjugate,
    RuleOfThumb,
}

impl Method {
    /// Short column name used in reports.
    pub fn short_name(&self) -> &'static str {
        match self {
            Method::Js => "JS",
            Method::JsTruncated => "JS+",
            Method::Hb => "HB",
            Method::Mle => "MLE",
            Method::Reml => "REML",
            Method::Adm => "ADM",
            Method::Shp => "SHP",
            Method::Conjugate => "CONJ",
            Method::RuleOfThumb => "F",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Extra summaries carried by equal-variance SHP fits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EqualVarFitExtras {
    pub b_js: f64,
    pub b_shp: f64,
    /// Posterior variance of the common shrinkage `B`.
    pub v: f64,
    pub s: f64,
}

/// Per-component shrinkages and estimates from one method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShrinkageFit {
    pub method: Method,
    pub shrinkage: Vec<f64>,
    pub estimates: Vec<f64>,
    /// Posterior variance of each `B_i`, when the method defines one.
    pub shrinkage_var: Option<Vec<f64>>,
    /// Posterior standard deviation of each `μ_i`, when defined.
    pub posterior_sd: Option<Vec<f64>>,
    pub a_hat: Option<f64>,
    pub coefficients: Option<Vec<f64>>,
    /// Standardized residual sum of squares.
    pub s: f64,
    /// Untruncated shrinkages for methods that clamp at 1.
    pub raw_shrinkage: Option<Vec<f64>>,
    pub extras: Option<EqualVarFitExtras>,
    /// Unbiased risk estimate attached by methods that provide one.
    pub unbiased_risk: Option<f64>,
    pub labels: Option<Vec<String>>,
    pub warnings: Vec<String>,
}

impl ShrinkageFit {
    pub(crate) fn new(method: Method, shrinkage: Vec<f64>, estimates: Vec<f64>, s: f64) -> Self {
        Self {
            method,
            shrinkage,
            estimates,
            shrinkage_var: None,
            posterior_sd: None,
            a_hat: None,
            coefficients: None,
            s,
            raw_shrinkage: None,
            extras: None,
            unbiased_risk: None,
            labels: None,
            warnings: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.shrinkage.len()
    }
}

/// Aggregate and componentwise risk for a fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskReport {
    /// `⋆R_i = E[(μ̂_i − μ_i)² | y]`.
    pub posterior_components: Vec<f64>,
    pub posterior_total: f64,
    /// Unbiased estimates `R̂_i` of the componentwise frequentist risk.
    pub unbiased_components: Vec<f64>,
    pub unbiased_total: f64,
    /// `Σ V_i`, the risk of the unshrunken estimates.
    pub minimax_benchmark: f64,
}
