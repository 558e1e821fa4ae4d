//! Model-II Monte Carlo evaluation of componentwise risk and interval coverage.
//!
//! Every replicate draws `y_i ~ N(0, V_i + A)` and conditions on `(y, A)`
//! analytically. Replicates run on the rayon pool but are aggregated in
//! replicate order, so results do not depend on the thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Dataset, ShrinkageFit};
use crate::numerics::{normal_cdf, standard_normal_draws, RandomStream};

pub const DEFAULT_GRID_POINTS: usize = 15;
pub const DEFAULT_REPLICATES: usize = 5_000;
pub const DEFAULT_Z: f64 = 1.96;

/// Fitting procedure evaluated by the harness.
pub type Estimator<'a> = dyn Fn(&Dataset) -> Result<ShrinkageFit> + Sync + 'a;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalGrid {
    pub variances: Vec<f64>,
    pub a_values: Vec<f64>,
    pub replicates: usize,
    pub seed: u64,
    pub z: f64,
    /// Reuse the same normal draws for replicate `j` at every grid point.
    pub common_random_numbers: bool,
}

impl EvalGrid {
    pub fn new(variances: Vec<f64>, a_values: Vec<f64>, replicates: usize, seed: u64) -> Result<Self> {
        let g = Self { variances, a_values, replicates, seed, z: DEFAULT_Z, common_random_numbers: true };
        g.validate()?;
        Ok(g)
    }

    /// Grid given by harmonic-mean shrinkages: `A = V_H(1 − B_H)/B_H`.
    pub fn from_b_h(variances: Vec<f64>, b_h: &[f64], replicates: usize, seed: u64) -> Result<Self> {
        if let Some(b) = b_h.iter().find(|b| !(**b > 0.0 && **b <= 1.0)) {
            return Err(Error::Domain(format!("B_H values must lie in (0, 1] (got {b})")));
        }
        let v_h = harmonic_mean(&variances)?;
        let a = b_h.iter().map(|b| v_h * (1.0 - b) / b).collect();
        Self::new(variances, a, replicates, seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::Domain("replicates must be at least 1".into()));
        }
        if self.variances.len() < 3 {
            return Err(Error::Domain("variance pattern needs k ≥ 3".into()));
        }
        if self.variances.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::Domain("variances must be positive and finite".into()));
        }
        if self.a_values.is_empty() {
            return Err(Error::Domain("grid has no A values".into()));
        }
        if self.a_values.iter().any(|a| !(a.is_finite() && *a >= 0.0)) {
            return Err(Error::Domain("A values must be finite and nonnegative".into()));
        }
        let mut sorted = self.a_values.clone();
        sorted.sort_by(f64::total_cmp);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("A values must be distinct".into()));
        }
        if !(self.z.is_finite() && self.z > 0.0) && self.z != f64::INFINITY {
            return Err(Error::Domain(format!("nominal z must be positive (got {})", self.z)));
        }
        Ok(())
    }

    pub fn harmonic_variance(&self) -> f64 {
        harmonic_mean(&self.variances).unwrap_or(f64::NAN)
    }

    /// `B_H = V_H/(V_H + A)` for each grid point.
    pub fn b_h_values(&self) -> Vec<f64> {
        let v_h = self.harmonic_variance();
        self.a_values.iter().map(|a| v_h / (v_h + a)).collect()
    }

    fn stream(&self, point: usize, rep: usize) -> RandomStream {
        let sub = if self.common_random_numbers { rep as u64 } else { (point * self.replicates + rep) as u64 };
        RandomStream::new(self.seed, sub)
    }
}

fn harmonic_mean(v: &[f64]) -> Result<f64> {
    if v.is_empty() || v.iter().any(|x| !(*x > 0.0)) {
        return Err(Error::Domain("harmonic mean needs positive values".into()));
    }
    Ok(v.len() as f64 / v.iter().map(|x| 1.0 / x).sum::<f64>())
}

/// `n` values of `B_H` log-spaced on `[lo, hi]`, in increasing order.
pub fn log_spaced_b_h(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
        }
    }
}

/// The default 15-point grid on `B_H ∈ [0.02, 0.98]`.
pub fn default_b_h_grid() -> Vec<f64> {
    log_spaced_b_h(DEFAULT_GRID_POINTS, 0.02, 0.98)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    /// `E[r_i | A] / V_i`.
    RiskImprovement,
    Coverage,
}

/// Monte Carlo means and standard errors indexed `[grid point][component]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalCurve {
    pub kind: CurveKind,
    pub a_values: Vec<f64>,
    pub b_h_values: Vec<f64>,
    pub value: Vec<Vec<f64>>,
    pub se: Vec<Vec<f64>>,
    /// Replicates dropped at each grid point because the estimator failed.
    pub failures: Vec<usize>,
    pub replicates: usize,
    pub seed: u64,
}

impl EvalCurve {
    pub fn k(&self) -> usize {
        self.value.first().map_or(0, Vec::len)
    }

    pub fn total_failures(&self) -> usize {
        self.failures.iter().sum()
    }

    /// Smallest value over every component and grid point, with its location.
    pub fn min_value(&self) -> Option<(f64, usize, usize)> {
        let mut best: Option<(f64, usize, usize)> = None;
        for (p, row) in self.value.iter().enumerate() {
            for (i, x) in row.iter().enumerate() {
                if best.is_none_or(|(b, _, _)| *x < b) {
                    best = Some((*x, p, i));
                }
            }
        }
        best
    }
}

impl EvalCurve {
    pub fn all_positive(&self) -> bool {
        self.value.iter().flatten().all(|x| *x > 0.0)
    }

    /// Whether every component is nonincreasing in `A`, allowing rises of up to
    /// `n_se` combined standard errors between adjacent grid points.
    pub fn nonincreasing_in_a(&self, n_se: f64) -> bool {
        let mut order: Vec<usize> = (0..self.a_values.len()).collect();
        order.sort_by(|&i, &j| self.a_values[i].total_cmp(&self.a_values[j]));
        order.windows(2).all(|w| {
            let (p, q) = (w[0], w[1]);
            (0..self.k()).all(|i| {
                let slack = n_se * self.se[p][i].hypot(self.se[q][i]);
                self.value[q][i] <= self.value[p][i] + slack
            })
        })
    }
}

/// `r_i / V_i = (2B_i − B̂_i) B̂_i y_i² / V_i` with `B_i = V_i/(V_i + A)`.
pub fn risk_improvement(y: &[f64], v: &[f64], a: f64, b_hat: &[f64]) -> Vec<f64> {
    y.iter()
        .zip(v)
        .zip(b_hat)
        .map(|((y, v), bh)| {
            let b = v / (v + a);
            (2.0 * b - bh) * bh * y * y / v
        })
        .collect()
}

/// `P(μ_i ∈ μ̂_i ± z·s_i | y, A)` under `μ_i | y, A ~ N((1−B_i) y_i, V_i(1−B_i))`.
pub fn coverage_probability(y: &[f64], v: &[f64], a: f64, fit: &ShrinkageFit, z: f64) -> Result<Vec<f64>> {
    if !(a >= 0.0) {
        return Err(Error::Domain(format!("A must be nonnegative (got {a})")));
    }
    let s = fit
        .posterior_sd
        .as_ref()
        .ok_or_else(|| Error::Missing(format!("{} fit carries no posterior standard deviations", fit.method)))?;
    let out = (0..y.len())
        .map(|i| {
            let b = v[i] / (v[i] + a);
            let m = (1.0 - b) * y[i];
            let w = v[i] * (1.0 - b);
            let half = z * s[i];
            let (lo, hi) = (fit.estimates[i] - half, fit.estimates[i] + half);
            if w <= 0.0 {
                f64::from(lo <= m && m <= hi)
            } else if z.is_infinite() {
                1.0
            } else {
                let sw = w.sqrt();
                (normal_cdf((hi - m) / sw) - normal_cdf((lo - m) / sw)).clamp(0.0, 1.0)
            }
        })
        .collect();
    Ok(out)
}

pub fn simulate_risk_curves(grid: &EvalGrid, estimator: &Estimator<'_>) -> Result<EvalCurve> {
    simulate(grid, estimator, CurveKind::RiskImprovement)
}

pub fn simulate_coverage_curves(grid: &EvalGrid, estimator: &Estimator<'_>) -> Result<EvalCurve> {
    simulate(grid, estimator, CurveKind::Coverage)
}

fn simulate(grid: &EvalGrid, estimator: &Estimator<'_>, kind: CurveKind) -> Result<EvalCurve> {
    grid.validate()?;
    let k = grid.variances.len();
    let mut value = Vec::with_capacity(grid.a_values.len());
    let mut se = Vec::with_capacity(grid.a_values.len());
    let mut failures = Vec::with_capacity(grid.a_values.len());

    for (p, &a) in grid.a_values.iter().enumerate() {
        let per_rep: Vec<Option<Vec<f64>>> = (0..grid.replicates)
            .into_par_iter()
            .map(|j| replicate(grid, estimator, kind, p, a, j))
            .collect::<Result<_>>()?;

        // sequential sums in replicate order keep the result thread-count independent
        let mut n = 0usize;
        let mut sum = vec![0.0; k];
        for x in per_rep.iter().flatten() {
            n += 1;
            sum.iter_mut().zip(x).for_each(|(s, x)| *s += x);
        }
        if n == 0 {
            return Err(Error::Degenerate(format!("estimator failed on every replicate at A = {a}")));
        }
        let mean: Vec<f64> = sum.iter().map(|s| s / n as f64).collect();
        let mut ss = vec![0.0; k];
        for x in per_rep.iter().flatten() {
            ss.iter_mut().zip(x.iter().zip(&mean)).for_each(|(s, (x, m))| *s += (x - m) * (x - m));
        }
        let stderr = if n > 1 {
            ss.iter().map(|s| (s / (n - 1) as f64 / n as f64).sqrt()).collect()
        } else {
            vec![0.0; k]
        };
        value.push(mean);
        se.push(stderr);
        failures.push(grid.replicates - n);
    }

    Ok(EvalCurve {
        kind,
        a_values: grid.a_values.clone(),
        b_h_values: grid.b_h_values(),
        value,
        se,
        failures,
        replicates: grid.replicates,
        seed: grid.seed,
    })
}

/// One replicate; `Ok(None)` marks an estimator failure.
fn replicate(
    grid: &EvalGrid,
    estimator: &Estimator<'_>,
    kind: CurveKind,
    point: usize,
    a: f64,
    rep: usize,
) -> Result<Option<Vec<f64>>> {
    let z = standard_normal_draws(grid.stream(point, rep), grid.variances.len());
    let y: Vec<f64> = z.iter().zip(&grid.variances).map(|(z, v)| z * (v + a).sqrt()).collect();
    let d = Dataset::new(y, grid.variances.clone())?;
    let fit = match estimator(&d) {
        Ok(f) => f,
        Err(_) => return Ok(None),
    };
    match kind {
        CurveKind::RiskImprovement => Ok(Some(risk_improvement(d.y(), d.variances(), a, &fit.shrinkage))),
        CurveKind::Coverage => coverage_probability(d.y(), d.variances(), a, &fit, grid.z).map(Some),
    }
}
