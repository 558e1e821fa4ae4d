//! Dataset construction: the arcsine transform of binomial counts, CSV
//! readers and writers, and the embedded hospital fixtures.

use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{validate_dataset, Dataset};

/// Deaths `d` out of caseload `n` for one unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub deaths: u64,
    pub caseload: u64,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformReport {
    /// Scale factor `C = √n̄`.
    pub c: f64,
    pub n_bar: f64,
    /// `Σd / Σn`.
    pub pooled_rate: f64,
    pub v_h_after: f64,
}

/// `y_i = C·(asin(1 − 2d_i/n_i) − asin(1 − 2d̄/n̄))`, `V_i = n̄/n_i`, `C = √n̄`.
///
/// Larger `y_i` means a lower death rate. Rows with `d = 0` or `d = n` are
/// rejected; they need a continuity correction chosen by the analyst.
pub fn arcsine_transform(records: &[CountRecord]) -> Result<(Dataset, TransformReport)> {
    let k = records.len();
    if k < 3 {
        return Err(Error::InvalidDataset(format!("k ≥ 3 required (got k = {k})")));
    }
    for (i, r) in records.iter().enumerate() {
        if r.caseload == 0 {
            return Err(Error::Parse { row: i + 1, message: "caseload n must be positive".into() });
        }
        if r.deaths > r.caseload {
            return Err(Error::Parse {
                row: i + 1,
                message: format!("deaths d = {} exceed caseload n = {}", r.deaths, r.caseload),
            });
        }
        if r.deaths == 0 || r.deaths == r.caseload {
            return Err(Error::Parse {
                row: i + 1,
                message: "d = 0 or d = n sits on the boundary of the transform; adjust the counts manually".into(),
            });
        }
    }
    let total_d: u64 = records.iter().map(|r| r.deaths).sum();
    let total_n: u64 = records.iter().map(|r| r.caseload).sum();
    let n_bar = total_n as f64 / k as f64;
    let pooled = total_d as f64 / total_n as f64;
    let c = n_bar.sqrt();
    let center = (1.0 - 2.0 * pooled).asin();

    let y = records
        .iter()
        .map(|r| c * ((1.0 - 2.0 * r.deaths as f64 / r.caseload as f64).asin() - center))
        .collect();
    let v = records.iter().map(|r| n_bar / r.caseload as f64).collect();
    let labels = records.iter().map(|r| r.label.clone()).collect();
    let d = Dataset::new(y, v)?.with_labels(labels)?;
    let v_h = d.harmonic_variance();
    Ok((d, TransformReport { c, n_bar, pooled_rate: pooled, v_h_after: v_h }))
}

fn find(headers: &csv::StringRecord, name: &str) -> Option<usize> {
    headers.iter().position(|h| h.trim().eq_ignore_ascii_case(name))
}

fn parse_cell(rec: &csv::StringRecord, idx: usize, row: usize, name: &str) -> Result<f64> {
    let raw = rec.get(idx).unwrap_or("").trim();
    raw.parse::<f64>().map_err(|_| Error::Parse { row, message: format!("column `{name}`: cannot parse `{raw}`") })
}

/// Reads the normal-data schema `label?, y, V|sd, x1..xr?`.
pub fn read_normal_csv<R: Read>(reader: R) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Schema(e.to_string()))?.clone();
    let y_idx = find(&headers, "y").ok_or_else(|| Error::Schema("missing `y` column".into()))?;
    let v_idx = find(&headers, "V");
    let sd_idx = find(&headers, "sd");
    let label_idx = find(&headers, "label");
    let (var_idx, is_sd) = match (v_idx, sd_idx) {
        (Some(_), Some(_)) => return Err(Error::Schema("ambiguous variance specification: both `V` and `sd` present".into())),
        (Some(i), None) => (i, false),
        (None, Some(i)) => (i, true),
        (None, None) => return Err(Error::Schema("missing variance column (`V` or `sd`)".into())),
    };
    let mut cov_cols: Vec<(usize, usize)> = Vec::new();
    for (i, h) in headers.iter().enumerate() {
        if i == y_idx || i == var_idx || Some(i) == label_idx {
            continue;
        }
        let h = h.trim();
        match h.strip_prefix('x').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => cov_cols.push((n, i)),
            _ => return Err(Error::Schema(format!("unknown column `{h}`"))),
        }
    }
    cov_cols.sort();
    if cov_cols.iter().enumerate().any(|(j, (n, _))| *n != j + 1) {
        return Err(Error::Schema("covariate columns must be x1..xr without gaps".into()));
    }

    let mut y = Vec::new();
    let mut v = Vec::new();
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 1;
        let rec = rec.map_err(|e| Error::Parse { row, message: e.to_string() })?;
        y.push(parse_cell(&rec, y_idx, row, "y")?);
        let s = parse_cell(&rec, var_idx, row, if is_sd { "sd" } else { "V" })?;
        let var = if is_sd { s * s } else { s };
        if !(var > 0.0) || !var.is_finite() {
            return Err(Error::Parse { row, message: format!("variance must be positive (got {s})") });
        }
        v.push(var);
        if let Some(li) = label_idx {
            labels.push(rec.get(li).unwrap_or("").to_string());
        }
        if !cov_cols.is_empty() {
            let xs = cov_cols
                .iter()
                .map(|(n, idx)| parse_cell(&rec, *idx, row, &format!("x{n}")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(xs);
        }
    }
    let labels = label_idx.map(|_| labels);
    let mut d = validate_dataset(Dataset::unchecked(y, v, None, None))?;
    if !rows.is_empty() {
        d = d.with_covariates(&rows)?;
    }
    if let Some(l) = labels {
        d = d.with_labels(l)?;
    }
    Ok(d)
}

pub fn load_normal_csv(path: impl AsRef<Path>) -> Result<Dataset> {
    let f = std::fs::File::open(path.as_ref())?;
    read_normal_csv(f)
}

/// Writes the normal-data schema with `V` (not `sd`) at round-trip precision.
pub fn write_normal_csv<W: Write>(d: &Dataset, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let mut header = Vec::new();
    if d.labels().is_some() {
        header.push("label".to_string());
    }
    header.push("y".into());
    header.push("V".into());
    for j in 0..d.r() {
        header.push(format!("x{}", j + 1));
    }
    w.write_record(&header).map_err(|e| Error::Io(e.to_string()))?;
    for i in 0..d.k() {
        let mut rec = Vec::new();
        if let Some(l) = d.labels() {
            rec.push(l[i].clone());
        }
        rec.push(format!("{:?}", d.y()[i]));
        rec.push(format!("{:?}", d.variances()[i]));
        if let Some(x) = d.covariates() {
            for j in 0..x.ncols() {
                rec.push(format!("{:?}", x[(i, j)]));
            }
        }
        w.write_record(&rec).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads the count schema `label?, d, n`.
pub fn read_counts_csv<R: Read>(reader: R) -> Result<Vec<CountRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Schema(e.to_string()))?.clone();
    let d_idx = find(&headers, "d").ok_or_else(|| Error::Schema("missing `d` column".into()))?;
    let n_idx = find(&headers, "n").ok_or_else(|| Error::Schema("missing `n` column".into()))?;
    let label_idx = find(&headers, "label");
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 1;
        let rec = rec.map_err(|e| Error::Parse { row, message: e.to_string() })?;
        let get = |idx: usize, name: &str| -> Result<u64> {
            let raw = rec.get(idx).unwrap_or("").trim();
            raw.parse::<u64>()
                .map_err(|_| Error::Parse { row, message: format!("column `{name}`: expected a nonnegative integer, got `{raw}`") })
        };
        let deaths = get(d_idx, "d")?;
        let caseload = get(n_idx, "n")?;
        if deaths > caseload {
            return Err(Error::Parse { row, message: format!("deaths d = {deaths} exceed caseload n = {caseload}") });
        }
        if caseload == 0 {
            return Err(Error::Parse { row, message: "caseload n must be positive".into() });
        }
        let label = label_idx.and_then(|l| rec.get(l)).map_or_else(|| row.to_string(), str::to_string);
        out.push(CountRecord { deaths, caseload, label });
    }
    Ok(out)
}

pub fn load_counts_csv(path: impl AsRef<Path>) -> Result<Vec<CountRecord>> {
    let f = std::fs::File::open(path.as_ref())?;
    read_counts_csv(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fixture {
    /// Ten hospitals with common variance 1.
    Ny10,
    /// Thirty-one hospitals, sorted by caseload, with raw counts.
    Ny31,
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ny10" => Ok(Fixture::Ny10),
            "ny31" => Ok(Fixture::Ny31),
            other => Err(Error::Unsupported(format!("unknown fixture `{other}` (expected ny10 or ny31)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FixtureData {
    pub dataset: Dataset,
    pub counts: Option<Vec<CountRecord>>,
}

const NY10_Y: [f64; 10] = [-2.15, -0.34, -0.08, 0.01, 0.08, 0.57, 0.61, 0.86, 1.11, 2.05];

// (y, sd, d, n) as printed, sorted by caseload.
const NY31: [(f64, f64, u64, u64); 31] = [
    (-2.07, 2.78, 3, 67),
    (-0.22, 2.76, 2, 68),
    (0.58, 1.57, 5, 210),
    (-1.87, 1.42, 11, 256),
    (-0.74, 1.39, 9, 269),
    (-1.97, 1.37, 12, 274),
    (-1.90, 1.36, 12, 278),
    (2.31, 1.32, 4, 295),
    (-0.14, 1.22, 10, 347),
    (-1.21, 1.22, 13, 349),
    (-1.43, 1.20, 14, 358),
    (1.56, 1.14, 7, 396),
    (-0.00, 1.10, 12, 431),
    (0.41, 1.08, 11, 441),
    (0.08, 1.04, 13, 477),
    (-2.15, 1.03, 22, 484),
    (-0.34, 1.02, 15, 494),
    (0.86, 1.02, 11, 501),
    (0.01, 1.01, 14, 505),
    (1.11, 0.98, 11, 540),
    (-0.08, 0.96, 16, 563),
    (0.61, 0.93, 14, 593),
    (2.05, 0.93, 9, 602),
    (0.57, 0.91, 15, 629),
    (1.10, 0.90, 13, 636),
    (-2.42, 0.84, 35, 729),
    (-0.38, 0.78, 26, 849),
    (0.07, 0.75, 25, 914),
    (0.96, 0.74, 20, 940),
    (-0.21, 0.66, 35, 1193),
    (1.14, 0.62, 27, 1340),
];

fn numbered(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

/// The embedded hospital tables, exactly as printed.
///
/// `ny31` carries the printed `y` and `sd` columns; its raw counts are returned
/// alongside for use with [`arcsine_transform`].
pub fn builtin_fixture(name: Fixture) -> FixtureData {
    match name {
        Fixture::Ny10 => {
            let d = Dataset::new(NY10_Y.to_vec(), vec![1.0; 10])
                .and_then(|d| d.with_labels(numbered(10)))
                .expect("embedded fixture is valid");
            FixtureData { dataset: d, counts: None }
        }
        Fixture::Ny31 => {
            let y = NY31.iter().map(|r| r.0).collect();
            let v = NY31.iter().map(|r| r.1 * r.1).collect();
            let d = Dataset::new(y, v).and_then(|d| d.with_labels(numbered(31))).expect("embedded fixture is valid");
            let counts = NY31
                .iter()
                .enumerate()
                .map(|(i, r)| CountRecord { deaths: r.2, caseload: r.3, label: (i + 1).to_string() })
                .collect();
            FixtureData { dataset: d, counts: Some(counts) }
        }
    }
}

/// Published values for scalars reported on a fixture: `(name, value, tolerance)`.
pub fn fixture_references(name: Fixture) -> &'static [(&'static str, f64, f64)] {
    match name {
        Fixture::Ny10 => &[
            ("S", 11.62, 0.01),
            ("B_JS", 0.688, 0.001),
            ("Rhat_JS", 4.496, 0.001),
            ("B_SHP", 0.571, 0.001),
            ("v_SHP", 0.0475, 0.0005),
            ("Rstar_SHP", 4.85, 0.01),
            ("Rhat_SHP", 3.48, 0.01),
        ],
        Fixture::Ny31 => &[
            ("sum_V", 49.06, 0.01),
            ("S", 41.59, 0.02),
            ("B_JS", 0.697, 0.001),
            ("Rhat_HB", 31.25, 0.05),
            ("A_ADM", 0.657, 0.002),
            ("B_H", 0.697, 0.001),
        ],
    }
}
