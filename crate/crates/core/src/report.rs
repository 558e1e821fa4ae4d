//! Report bundles and their deterministic emission as CSV, JSON, or TSV plot data.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluation::{CurveKind, EvalCurve};

/// Rows keyed by component label; values are columns after `label`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(labels: Vec<String>) -> Self {
        let rows = vec![Vec::new(); labels.len()];
        Self { columns: Vec::new(), labels, rows }
    }

    pub fn push_column(&mut self, name: impl Into<String>, values: &[f64]) -> Result<()> {
        if values.len() != self.labels.len() {
            return Err(Error::Schema(format!("column has {} values for {} rows", values.len(), self.labels.len())));
        }
        self.columns.push(name.into());
        self.rows.iter_mut().zip(values).for_each(|(r, v)| r.push(*v));
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

/// A named number with the operation that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scalar {
    pub name: String,
    pub value: f64,
    pub source: String,
    /// Published reference value and tolerance when the scalar reproduces one.
    pub reference: Option<f64>,
    pub tolerance: Option<f64>,
}

impl Scalar {
    pub fn new(name: impl Into<String>, value: f64, source: impl Into<String>) -> Self {
        Self { name: name.into(), value, source: source.into(), reference: None, tolerance: None }
    }

    pub fn with_reference(mut self, reference: f64, tolerance: f64) -> Self {
        self.reference = Some(reference);
        self.tolerance = Some(tolerance);
        self
    }

    pub fn within_tolerance(&self) -> Option<bool> {
        Some((self.value - self.reference?).abs() <= self.tolerance?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedCurve {
    pub name: String,
    pub method: String,
    pub curve: EvalCurve,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub methods: Vec<String>,
    pub seed: Option<u64>,
    pub replicates: Option<usize>,
    pub quadrature_rel_tol: Option<f64>,
    pub quadrature_abs_tol: Option<f64>,
    pub options: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    /// File stem for emitted artifacts.
    pub name: String,
    pub table: Option<Table>,
    pub scalars: Vec<Scalar>,
    pub curves: Vec<NamedCurve>,
    /// Free-form `key: value` verdicts such as minimum coverage.
    pub summary: Vec<(String, String)>,
    pub warnings: Vec<String>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    Csv,
    Json,
    TsvPlotdata,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "tsv-plotdata" | "tsv" => Ok(Format::TsvPlotdata),
            other => Err(Error::Unsupported(format!("unknown format `{other}` (expected csv, json or tsv-plotdata)"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn fixed(x: f64, decimals: usize) -> String {
    if x.is_nan() {
        return "NA".into();
    }
    let s = format!("{x:.decimals$}");
    // avoid "-0.000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Table as CSV with values at 3 decimals.
pub fn table_csv(t: &Table) -> String {
    let mut out = String::from("label");
    for c in &t.columns {
        out.push(',');
        out.push_str(&csv_field(c));
    }
    out.push('\n');
    for (label, row) in t.labels.iter().zip(&t.rows) {
        out.push_str(&csv_field(label));
        for v in row {
            out.push(',');
            out.push_str(&fixed(*v, 3));
        }
        out.push('\n');
    }
    out
}

fn scalars_csv(scalars: &[Scalar]) -> String {
    let mut out = String::from("name,value,reference,tolerance,source\n");
    for s in scalars {
        let opt = |x: Option<f64>| x.map_or_else(String::new, |x| format!("{x}"));
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&s.name),
            fixed(s.value, 4),
            opt(s.reference),
            opt(s.tolerance),
            csv_field(&s.source)
        );
    }
    out
}

/// Long-format curve data: `grid-value, component, value, se`.
///
/// The grid value is `A` for risk curves and `B_H` for coverage curves.
pub fn curve_tsv(c: &EvalCurve) -> String {
    let grid = match c.kind {
        CurveKind::RiskImprovement => &c.a_values,
        CurveKind::Coverage => &c.b_h_values,
    };
    let mut out = String::from("grid-value\tcomponent\tvalue\tse\n");
    for (p, g) in grid.iter().enumerate() {
        for (i, (v, s)) in c.value[p].iter().zip(&c.se[p]).enumerate() {
            let _ = writeln!(out, "{g}\t{}\t{v}\t{s}", i + 1);
        }
    }
    out
}

/// Human-readable rendering for the terminal.
pub fn render_text(b: &ReportBundle) -> String {
    let mut out = String::new();
    if let Some(t) = &b.table {
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(t.rows.len() + 1);
        let mut head = vec!["label".to_string()];
        head.extend(t.columns.iter().cloned());
        cells.push(head);
        for (l, r) in t.labels.iter().zip(&t.rows) {
            let mut row = vec![l.clone()];
            row.extend(r.iter().map(|v| fixed(*v, 3)));
            cells.push(row);
        }
        let ncol = cells[0].len();
        let widths: Vec<usize> =
            (0..ncol).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
    }
    if !b.scalars.is_empty() {
        if !out.is_empty() {
            out.push('\n');
        }
        for s in &b.scalars {
            let _ = writeln!(out, "{} = {}", s.name, fixed(s.value, 4));
        }
    }
    for (k, v) in &b.summary {
        let _ = writeln!(out, "{k}: {v}");
    }
    out
}

/// File names and contents the bundle renders to in `format`.
///
/// Output bytes depend only on the bundle contents.
pub fn render(b: &ReportBundle, format: Format) -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    match format {
        Format::Csv => {
            if let Some(t) = &b.table {
                files.push((format!("{}.csv", b.name), table_csv(t)));
            }
            if !b.scalars.is_empty() {
                files.push((format!("{}_scalars.csv", b.name), scalars_csv(&b.scalars)));
            }
            for c in &b.curves {
                files.push((format!("{}_{}.csv", b.name, c.name), curve_tsv(&c.curve).replace('\t', ",")));
            }
            if !b.summary.is_empty() {
                let mut s = String::from("key,value\n");
                for (k, v) in &b.summary {
                    let _ = writeln!(s, "{},{}", csv_field(k), csv_field(v));
                }
                files.push((format!("{}_summary.csv", b.name), s));
            }
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(b).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            files.push((format!("{}.json", b.name), s));
        }
        Format::TsvPlotdata => {
            if b.curves.is_empty() {
                return Err(Error::Unsupported("tsv-plotdata needs curves; use `evaluate`".into()));
            }
            for c in &b.curves {
                files.push((format!("{}_{}.tsv", b.name, c.name), curve_tsv(&c.curve)));
            }
        }
    }
    Ok(files)
}

/// Writes the rendered bundle under `out_dir` and returns the paths written.
pub fn emit(b: &ReportBundle, format: Format, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let files = render(b, format)?;
    std::fs::create_dir_all(out_dir).map_err(|e| Error::Io(format!("{}: {e}", out_dir.display())))?;
    let mut written = Vec::with_capacity(files.len());
    for (name, contents) in files {
        let path = out_dir.join(name);
        std::fs::write(&path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}
