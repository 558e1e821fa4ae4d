//! Adaptive Gauss–Kronrod quadrature over `[0, ∞)`.
//!
//! The half-line is mapped onto `(0, 1)` by `A = c·(t/(1−t))²` for a caller
//! supplied scale `c`, so an `A^(−3/2)` tail stays bounded at `t = 1`, and
//! the mapped integrand is integrated with a globally adaptive 21-point
//! Kronrod rule. The vector form shares every integrand
//! evaluation across components, which is what the posterior-moment integrals
//! need: one likelihood evaluation feeds all `k + 1` integrals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, max_subdivisions: 500 }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = Self { rel_tol, abs_tol, max_subdivisions };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::Domain("quadrature tolerances must be strictly positive".into()));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max-subdivisions must be at least 1".into()));
        }
        Ok(())
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss 10-point weights, paired with XGK[1], XGK[3], ..., XGK[9].
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

struct Segment {
    lo: f64,
    hi: f64,
    value: Vec<f64>,
    error: Vec<f64>,
}

/// Applies the 21-point rule on `[lo, hi]` in the mapped variable.
fn kronrod21<F>(f: &mut F, scale: f64, lo: f64, hi: f64, dim: usize, buf: &mut [f64]) -> Result<Segment>
where
    F: FnMut(f64, &mut [f64]),
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut kron = vec![0.0; dim];
    let mut gauss = vec![0.0; dim];
    let mut res_abs = vec![0.0; dim];
    let mut fvals = vec![0.0; dim * 21];

    let mut eval = |t: f64, out: &mut [f64], buf: &mut [f64]| -> Result<()> {
        let one_minus = 1.0 - t;
        if one_minus <= 0.0 {
            out.iter_mut().for_each(|o| *o = 0.0);
            return Ok(());
        }
        let ratio = t / one_minus;
        let a = scale * ratio * ratio;
        let jac = 2.0 * scale * ratio / (one_minus * one_minus);
        f(a, buf);
        for (o, v) in out.iter_mut().zip(buf.iter()) {
            let w = v * jac;
            if !w.is_finite() {
                return Err(Error::NonFinite { at: a });
            }
            *o = w;
        }
        Ok(())
    };

    for j in 0..11 {
        let dx = half * XGK[j];
        if j == 10 {
            eval(center, &mut fvals[20 * dim..21 * dim], buf)?;
        } else {
            eval(center - dx, &mut fvals[2 * j * dim..(2 * j + 1) * dim], buf)?;
            eval(center + dx, &mut fvals[(2 * j + 1) * dim..(2 * j + 2) * dim], buf)?;
        }
    }

    for c in 0..dim {
        let fc = fvals[20 * dim + c];
        kron[c] = WGK[10] * fc;
        res_abs[c] = WGK[10] * fc.abs();
        for j in 0..10 {
            let f1 = fvals[2 * j * dim + c];
            let f2 = fvals[(2 * j + 1) * dim + c];
            kron[c] += WGK[j] * (f1 + f2);
            res_abs[c] += WGK[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                gauss[c] += WG[j / 2] * (f1 + f2);
            }
        }
    }

    let mut error = vec![0.0; dim];
    for c in 0..dim {
        let mean = 0.5 * kron[c];
        let mut res_asc = WGK[10] * (fvals[20 * dim + c] - mean).abs();
        for j in 0..10 {
            res_asc += WGK[j]
                * ((fvals[2 * j * dim + c] - mean).abs() + (fvals[(2 * j + 1) * dim + c] - mean).abs());
        }
        let res_asc = res_asc * half;
        let res_abs_c = res_abs[c] * half;
        let mut err = ((kron[c] - gauss[c]) * half).abs();
        if res_asc != 0.0 && err != 0.0 {
            err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
        }
        if res_abs_c > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            err = err.max(50.0 * f64::EPSILON * res_abs_c);
        }
        error[c] = err;
        kron[c] *= half;
    }

    Ok(Segment { lo, hi, value: kron, error })
}

/// Integrates a vector-valued integrand `f(A, out)` over `A ∈ [0, ∞)`.
///
/// `scale` sets where the mapped variable places its midpoint (`t = 1/2` ⇔
/// `A = scale`). Convergence requires every component to meet
/// `max(abs_tol, rel_tol·|I_j|)`.
pub fn integrate_halfline_vec<F>(mut f: F, dim: usize, scale: f64, spec: &QuadratureSpec) -> Result<Vec<f64>>
where
    F: FnMut(f64, &mut [f64]),
{
    spec.validate()?;
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain(format!("quadrature scale must be positive and finite (got {scale})")));
    }
    let mut buf = vec![0.0; dim];
    let mut segments = vec![kronrod21(&mut f, scale, 0.0, 1.0, dim, &mut buf)?];

    loop {
        let mut total = vec![0.0; dim];
        let mut total_err = vec![0.0; dim];
        for s in &segments {
            for c in 0..dim {
                total[c] += s.value[c];
                total_err[c] += s.error[c];
            }
        }
        let targets: Vec<f64> = total.iter().map(|v| (spec.rel_tol * v.abs()).max(spec.abs_tol)).collect();
        let worst_ratio = (0..dim).map(|c| total_err[c] / targets[c]).fold(0.0, f64::max);
        if worst_ratio <= 1.0 {
            return Ok(total);
        }
        if segments.len() >= spec.max_subdivisions {
            let worst = (0..dim).map(|c| total_err[c]).fold(0.0, f64::max);
            return Err(Error::QuadratureNonConvergence { subdivisions: segments.len(), error: worst });
        }

        let (idx, _) = segments
            .iter()
            .enumerate()
            .map(|(i, s)| (i, (0..dim).map(|c| s.error[c] / targets[c]).fold(0.0, f64::max)))
            .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
        let seg = segments.swap_remove(idx);
        let mid = 0.5 * (seg.lo + seg.hi);
        if mid <= seg.lo || mid >= seg.hi {
            let worst = (0..dim).map(|c| total_err[c]).fold(0.0, f64::max);
            return Err(Error::QuadratureNonConvergence { subdivisions: segments.len() + 1, error: worst });
        }
        segments.push(kronrod21(&mut f, scale, seg.lo, mid, dim, &mut buf)?);
        segments.push(kronrod21(&mut f, scale, mid, seg.hi, dim, &mut buf)?);
        // keep a deterministic order independent of the swap above
        segments.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    }
}

/// Scalar integral over `[0, ∞)` with mapping scale `s`.
pub fn integrate_halfline_scaled<F>(mut f: F, scale: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let v = integrate_halfline_vec(|a, out| out[0] = f(a), 1, scale, spec)?;
    Ok(v[0])
}

/// Scalar integral over `[0, ∞)` with unit mapping scale.
pub fn integrate_halfline<F>(f: F, spec: &QuadratureSpec) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    integrate_halfline_scaled(f, 1.0, spec)
}
