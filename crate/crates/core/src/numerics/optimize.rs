//! One-dimensional maximization of unimodal functions on `A ≥ 0`.
//!
//! Golden-section search with parabolic steps (Brent), followed by a bisection
//! polish on the sign of a central-difference derivative: function-value
//! comparisons alone cannot place a smooth maximum closer than about
//! `sqrt(eps)·|A|`.

use crate::error::{Error, Result};

const GOLDEN: f64 = 0.381_966_011_250_105_1;
const MAX_ITER: usize = 500;
const MAX_DOUBLINGS: usize = 200;

#[derive(Debug, Clone, Copy)]
pub struct MaximizeSpec {
    /// Absolute tolerance on the argmax.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for MaximizeSpec {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: MAX_ITER }
    }
}

/// `-inf` is a legitimate "infinitely bad" value (e.g. `log A` at 0); NaN and
/// `+inf` are errors.
fn checked<F: FnMut(f64) -> f64>(f: &mut F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_nan() || v == f64::INFINITY {
        return Err(Error::NonFinite { at: x });
    }
    Ok(v)
}

/// Brent maximization on `[lo, hi]`.
pub fn maximize_on_interval<F>(mut f: F, lo: f64, hi: f64, spec: &MaximizeSpec) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(hi > lo) {
        return Err(Error::Domain(format!("empty bracket [{lo}, {hi}]")));
    }
    let mut g = |x: f64| checked(&mut f, x).map(|v| -v);

    let (mut a, mut b) = (lo, hi);
    let mut x = a + GOLDEN * (b - a);
    let (mut w, mut v) = (x, x);
    let mut fx = g(x)?;
    let (mut fw, mut fv) = (fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    let rel = 1e-11;

    let mut converged = false;
    for _ in 0..spec.max_iter {
        let xm = 0.5 * (a + b);
        let tol1 = rel * x.abs() + 0.25 * spec.tol;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            converged = true;
            break;
        }
        let mut golden = true;
        if e.abs() > tol1 && fx.is_finite() && fw.is_finite() && fv.is_finite() {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let etemp = e;
            if p.abs() < (0.5 * q * etemp).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 { x + d } else { x + tol1.copysign(d) };
        let fu = g(u)?;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    if !converged {
        return Err(Error::OptimizerNonConvergence(spec.max_iter));
    }

    let x = polish(&mut f, x, lo, hi)?;
    Ok(x)
}

/// Bisection on the sign of the central difference around a Brent estimate.
fn polish<F: FnMut(f64) -> f64>(f: &mut F, x: f64, lo: f64, hi: f64) -> Result<f64> {
    let width = 1e-5 * x.abs().max(1e-3);
    // wide enough that the difference dominates rounding in f
    let h = 0.5 * width;
    let mut slope = |t: f64| -> Result<f64> {
        let up = checked(f, (t + h).min(hi))?;
        let dn = checked(f, (t - h).max(lo))?;
        Ok(up - dn)
    };
    let mut left = (x - width).max(lo);
    let mut right = (x + width).min(hi);
    let sl = slope(left)?;
    let sr = slope(right)?;
    if !(sl > 0.0 && sr < 0.0) {
        return Ok(x);
    }
    for _ in 0..60 {
        let mid = 0.5 * (left + right);
        if mid <= left || mid >= right {
            break;
        }
        let s = slope(mid)?;
        if s > 0.0 {
            left = mid;
        } else if s < 0.0 {
            right = mid;
        } else {
            return Ok(mid);
        }
    }
    Ok(0.5 * (left + right))
}

/// Maximizes a unimodal `f` over `A ≥ 0`.
///
/// The bracket starts at `[0, initial_hi]` and its right end is doubled until
/// `f` decreases. A maximizer at the boundary returns exactly `0.0`.
pub fn maximize_1d<F>(mut f: F, initial_hi: f64, spec: &MaximizeSpec) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(initial_hi > 0.0) || !initial_hi.is_finite() {
        return Err(Error::Domain(format!("initial bracket end must be positive (got {initial_hi})")));
    }
    let mut lo = 0.0;
    let mut hi = initial_hi;
    let mut f_hi = checked(&mut f, hi)?;
    let mut doublings = 0;
    loop {
        let next = 2.0 * hi;
        let f_next = checked(&mut f, next)?;
        if f_next > f_hi {
            // the peak lies right of `hi`
            lo = hi;
            hi = next;
            f_hi = f_next;
            doublings += 1;
            if doublings >= MAX_DOUBLINGS {
                return Err(Error::OptimizerNonConvergence(MAX_DOUBLINGS));
            }
        } else {
            hi = next;
            break;
        }
    }
    let x = maximize_on_interval(&mut f, lo, hi, spec)?;
    if lo == 0.0 {
        let f0 = checked(&mut f, 0.0)?;
        if f0 >= checked(&mut f, x)? {
            return Ok(0.0);
        }
    }
    Ok(x)
}
