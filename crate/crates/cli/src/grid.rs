//! `--grid` specifications.

use shrinkage::evaluation::{log_spaced_b_h, EvalGrid};
use shrinkage::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    /// Harmonic-mean shrinkages `B_H`.
    BH(Vec<f64>),
    /// Level-II variances `A`.
    A(Vec<f64>),
}

fn values(body: &str) -> Result<Vec<f64>> {
    let bad = |s: &str| Error::Domain(format!("grid: cannot parse `{s}`"));
    let parts: Vec<&str> = body.split(':').collect();
    match parts.as_slice() {
        [lo, hi, n] => {
            let lo: f64 = lo.trim().parse().map_err(|_| bad(lo))?;
            let hi: f64 = hi.trim().parse().map_err(|_| bad(hi))?;
            let n: usize = n.trim().parse().map_err(|_| bad(n))?;
            if !(lo > 0.0 && hi > lo) || n == 0 {
                return Err(Error::Domain(format!("grid range needs 0 < LO < HI and N ≥ 1 (got {body})")));
            }
            Ok(log_spaced_b_h(n, lo, hi))
        }
        [list] => list.split(',').map(|s| s.trim().parse::<f64>().map_err(|_| bad(s))).collect(),
        _ => Err(bad(body)),
    }
}

impl std::str::FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("grid `{s}`: expected bh=... or a=...")))?;
        match kind.trim() {
            "bh" | "BH" | "b" => Ok(GridSpec::BH(values(body)?)),
            "a" | "A" => Ok(GridSpec::A(values(body)?)),
            other => Err(Error::Domain(format!("grid kind `{other}`: expected bh or a"))),
        }
    }
}

impl GridSpec {
    pub fn build(&self, variances: Vec<f64>, replicates: usize, seed: u64) -> Result<EvalGrid> {
        match self {
            GridSpec::BH(b) => EvalGrid::from_b_h(variances, b, replicates, seed),
            GridSpec::A(a) => {
                let mut a = a.clone();
                a.sort_by(f64::total_cmp);
                EvalGrid::new(variances, a, replicates, seed)
            }
        }
    }
}
