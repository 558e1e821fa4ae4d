use std::io::Write as _;
use std::path::Path;

use shrinkage::equal_var::component_risk_estimates;
use shrinkage::evaluation::{simulate_coverage_curves, simulate_risk_curves, EvalGrid};
use shrinkage::ingest::{
    arcsine_transform, builtin_fixture, fixture_references, load_counts_csv, load_normal_csv, write_normal_csv,
    Fixture,
};
use shrinkage::numerics::QuadratureSpec;
use shrinkage::report::{emit, render, render_text, Format, NamedCurve, Provenance, ReportBundle, Scalar, Table};
use shrinkage::unequal_var::{rule_of_thumb, weighted_residual_ss};
use shrinkage::{classify_prior, fit_method, Dataset, Error, FitOptions, Method, PriorSpec, Result};

use crate::grid::GridSpec;
use crate::{ClassifyArgs, EvalKind, EvaluateArgs, FitArgs, Output, QuadArgs, Source, TransformArgs};

const TOOL: &str = "shrinkage";
const VERSION: &str = env!("CARGO_PKG_VERSION");

fn parse_method(name: &str, truncate: bool) -> Result<Method> {
    match name.trim().to_ascii_lowercase().as_str() {
        "js" if truncate => Ok(Method::JsTruncated),
        "js" => Ok(Method::Js),
        "js+" => Ok(Method::JsTruncated),
        "shp" => Ok(Method::Shp),
        "hb" => Ok(Method::Hb),
        "f" | "rule-of-thumb" => Ok(Method::RuleOfThumb),
        "mle" => Ok(Method::Mle),
        "reml" => Ok(Method::Reml),
        "adm" => Ok(Method::Adm),
        "conj" => Ok(Method::Conjugate),
        other => Err(Error::Unsupported(format!(
            "unknown method `{other}` (expected js, shp, hb, f, mle, reml, adm, conj)"
        ))),
    }
}

fn parse_prior(s: &str) -> Result<PriorSpec> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| Error::Domain(format!("--prior: cannot parse `{p}`"))))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [u, k0] => PriorSpec::new(*u, *k0, 0.0),
        [u, k0, s0] => PriorSpec::new(*u, *k0, *s0),
        _ => Err(Error::Domain("--prior expects U,K0[,S0]".into())),
    }
}

fn quadrature(q: &QuadArgs) -> Result<QuadratureSpec> {
    QuadratureSpec::new(q.quad_rel_tol, q.quad_abs_tol, q.quad_max_subdivisions)
}

fn load(source: &Source) -> Result<(Dataset, String, Option<Fixture>)> {
    match (&source.fixture, &source.input) {
        (Some(f), None) => Ok((builtin_fixture(*f).dataset, format!("fixture:{f:?}").to_lowercase(), Some(*f))),
        (None, Some(p)) => Ok((load_normal_csv(p)?, p.display().to_string(), None)),
        _ => Err(Error::Missing("a data source: --fixture NAME or --input PATH".into())),
    }
}

fn labels(d: &Dataset) -> Vec<String> {
    d.labels().map_or_else(|| (1..=d.k()).map(|i| i.to_string()).collect(), <[String]>::to_vec)
}

fn warn(msgs: &[String]) {
    for m in msgs {
        eprintln!("warning: {m}");
    }
}

fn deliver(bundle: &ReportBundle, output: &Output, default: Format) -> Result<()> {
    let format = output.format.map_or(default, Format::from);
    match &output.out {
        Some(dir) => {
            for path in emit(bundle, format, dir)? {
                eprintln!("wrote {}", path.display());
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if format == Format::Csv && output.format.is_none() {
                stdout.write_all(render_text(bundle).as_bytes())?;
            } else {
                let files = render(bundle, format)?;
                let many = files.len() > 1;
                for (name, contents) in files {
                    if many {
                        writeln!(stdout, "# {name}")?;
                    }
                    stdout.write_all(contents.as_bytes())?;
                }
            }
        }
    }
    Ok(())
}

fn attach_references(scalars: &mut [Scalar], fixture: Option<Fixture>) {
    let Some(f) = fixture else { return };
    for (name, value, tol) in fixture_references(f) {
        if let Some(s) = scalars.iter_mut().find(|s| s.name == *name) {
            s.reference = Some(*value);
            s.tolerance = Some(*tol);
        }
    }
}

pub fn fit(args: FitArgs) -> Result<()> {
    let (d, input, fixture) = load(&args.source)?;
    let names: Vec<String> = if args.methods.is_empty() {
        let default = if d.is_equal_variance() { "js,shp" } else { "hb,f,mle,adm,shp" };
        default.split(',').map(str::to_string).collect()
    } else {
        args.methods.clone()
    };
    let methods: Vec<Method> = names.iter().map(|m| parse_method(m, args.truncate)).collect::<Result<_>>()?;
    let prior = args.prior.as_deref().map(parse_prior).transpose()?;
    let opts = FitOptions { standardize: args.standardize, prior, quadrature: quadrature(&args.quad)? };

    let fits = methods.iter().map(|m| fit_method(&d, *m, &opts)).collect::<Result<Vec<_>>>()?;
    let mut warnings = Vec::new();
    for f in &fits {
        warnings.extend(f.warnings.iter().map(|w| format!("{}: {w}", f.method)));
    }
    warn(&warnings);

    let mut table = Table::new(labels(&d));
    table.push_column("y", d.y())?;
    table.push_column("sd", &d.sd())?;
    table.push_column("V", d.variances())?;
    for f in &fits {
        table.push_column(format!("B_{}", f.method), &f.shrinkage)?;
    }
    for f in &fits {
        if let Some(v) = &f.shrinkage_var {
            let sd: Vec<f64> = v.iter().map(|x| x.sqrt()).collect();
            table.push_column(format!("sqrt_v_{}", f.method), &sd)?;
        }
    }
    for f in &fits {
        table.push_column(format!("mu_{}", f.method), &f.estimates)?;
    }
    for f in &fits {
        if let Some(s) = &f.posterior_sd {
            table.push_column(format!("s_{}", f.method), s)?;
        }
    }

    let (s, _, _) = weighted_residual_ss(&d)?;
    let df = (d.k() - d.r() - 2) as f64;
    let mut scalars = vec![
        Scalar::new("S", s, "weighted_residual_ss"),
        Scalar::new("sum_V", d.total_variance(), "dataset"),
        Scalar::new("V_H", d.harmonic_variance(), "dataset"),
        Scalar::new("B_JS", df / s, "(k - r - 2) / S"),
    ];
    if let Ok((h, _)) = rule_of_thumb(&d) {
        scalars.push(Scalar::new("B_H", h.b_h, "rule_of_thumb"));
    }
    for f in &fits {
        let tag = f.method.short_name();
        match f.method {
            Method::Js | Method::JsTruncated | Method::Hb => {
                if let Some(r) = f.unbiased_risk {
                    scalars.push(Scalar::new(format!("Rhat_{tag}"), r, format!("{tag} unbiased risk")));
                }
            }
            Method::Shp if f.extras.is_some() => {
                let extras = f.extras.expect("checked");
                let risk = component_risk_estimates(f, &d)?;
                scalars.push(Scalar::new("B_SHP", extras.b_shp, "shp_fit_equal"));
                scalars.push(Scalar::new("v_SHP", extras.v, "shp_fit_equal"));
                scalars.push(Scalar::new("Rstar_SHP", risk.posterior_total, "component_risk_estimates"));
                scalars.push(Scalar::new("Rhat_SHP", risk.unbiased_total, "component_risk_estimates"));
                table.push_column("Rstar_SHP", &risk.posterior_components)?;
                table.push_column("Rhat_SHP", &risk.unbiased_components)?;
            }
            Method::Conjugate => scalars.push(Scalar::new("B_CONJ", f.shrinkage[0], "conjugate_fit")),
            _ => {}
        }
        if let Some(a) = f.a_hat {
            scalars.push(Scalar::new(format!("A_{tag}"), a, format!("{tag} fit")));
        }
    }
    attach_references(&mut scalars, fixture);

    let quad = opts.quadrature;
    let mut options = vec![
        ("truncate".to_string(), args.truncate.to_string()),
        ("standardize".to_string(), args.standardize.to_string()),
    ];
    if let Some(p) = prior {
        options.push(("prior".into(), format!("{},{},{}", p.u, p.k0, p.s0)));
    }
    let bundle = ReportBundle {
        name: "fit".into(),
        table: Some(table),
        scalars,
        curves: Vec::new(),
        summary: Vec::new(),
        warnings,
        provenance: Provenance {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "fit".into(),
            input,
            methods: methods.iter().map(|m| m.short_name().to_string()).collect(),
            seed: None,
            replicates: None,
            quadrature_rel_tol: Some(quad.rel_tol),
            quadrature_abs_tol: Some(quad.abs_tol),
            options,
        },
    };
    deliver(&bundle, &args.output, Format::Csv)
}

pub fn classify(args: ClassifyArgs) -> Result<()> {
    let p = match (&args.prior, args.u, args.k0) {
        (Some(s), None, None) => parse_prior(s)?,
        (None, Some(u), Some(k0)) => PriorSpec::new(u, k0, 0.0)?,
        _ => return Err(Error::Missing("a prior point: --u U --k0 K0, or --prior U,K0[,S0]".into())),
    };
    if args.k < 3 {
        return Err(Error::Domain(format!("k ≥ 3 required (got k = {})", args.k)));
    }
    let c = classify_prior(&p, args.k);
    let mut out = std::io::stdout().lock();
    writeln!(out, "{}", c.annotations(&p).join("; "))?;
    writeln!(out, "proper_prior={}", c.proper_prior)?;
    writeln!(out, "proper_posterior={}", c.proper_posterior)?;
    writeln!(out, "minimax_necessary={}", c.minimax_necessary)?;
    writeln!(out, "scale_invariant={}", c.scale_invariant)?;
    writeln!(out, "conjugate_line={}", c.conjugate_line)?;
    writeln!(out, "is_shp={}", c.is_shp)?;
    Ok(())
}

pub fn evaluate(args: EvaluateArgs) -> Result<()> {
    if let Some(n) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    }
    let (variances, input) = if args.equal {
        let k = args.k.ok_or_else(|| Error::Missing("--k with --equal".into()))?;
        (vec![1.0; k], format!("equal:k={k}"))
    } else {
        let (d, input, _) = load(&args.source)?;
        (d.variances().to_vec(), input)
    };
    let method = parse_method(&args.method, false)?;
    let spec: GridSpec = args.grid.parse()?;
    let mut grid: EvalGrid = spec.build(variances, args.reps, args.seed)?;
    grid.z = args.z;
    grid.common_random_numbers = !args.independent_draws;
    grid.validate()?;

    let opts = FitOptions { standardize: false, prior: None, quadrature: quadrature(&args.quad)? };
    let estimator = |d: &Dataset| fit_method(d, method, &opts);
    let (name, curve) = match args.kind {
        EvalKind::Risk => ("risk", simulate_risk_curves(&grid, &estimator)?),
        EvalKind::Coverage => ("coverage", simulate_coverage_curves(&grid, &estimator)?),
    };

    let mut summary = vec![("failures".to_string(), curve.total_failures().to_string())];
    if let Some((min, p, i)) = curve.min_value() {
        let key = if args.kind == EvalKind::Coverage { "min_coverage" } else { "min_risk_improvement" };
        summary.push((key.into(), format!("{min:.4}")));
        summary.push((format!("{key}_at_A"), format!("{:.6}", curve.a_values[p])));
        summary.push((format!("{key}_at_B_H"), format!("{:.6}", curve.b_h_values[p])));
        summary.push((format!("{key}_component"), (i + 1).to_string()));
    }
    if args.kind == EvalKind::Risk {
        summary.push(("all_positive".into(), curve.all_positive().to_string()));
        summary.push(("nonincreasing_within_3se".into(), curve.nonincreasing_in_a(3.0).to_string()));
    }
    let warnings = if curve.total_failures() > 0 {
        vec![format!("{} replicates dropped after estimator failures", curve.total_failures())]
    } else {
        Vec::new()
    };
    warn(&warnings);

    let quad = opts.quadrature;
    let bundle = ReportBundle {
        name: "evaluate".into(),
        table: None,
        scalars: Vec::new(),
        curves: vec![NamedCurve { name: name.into(), method: method.short_name().into(), curve }],
        summary,
        warnings,
        provenance: Provenance {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: format!("evaluate {name}"),
            input,
            methods: vec![method.short_name().into()],
            seed: Some(args.seed),
            replicates: Some(args.reps),
            quadrature_rel_tol: Some(quad.rel_tol),
            quadrature_abs_tol: Some(quad.abs_tol),
            options: vec![
                ("grid".into(), args.grid.clone()),
                ("z".into(), args.z.to_string()),
                ("common_random_numbers".into(), grid.common_random_numbers.to_string()),
            ],
        },
    };
    if args.output.out.is_none() && args.output.format.is_none() {
        let mut out = std::io::stdout().lock();
        for (k, v) in &bundle.summary {
            writeln!(out, "{k}: {v}")?;
        }
        return Ok(());
    }
    deliver(&bundle, &args.output, Format::TsvPlotdata)
}

pub fn transform(args: TransformArgs) -> Result<()> {
    let (records, input) = match (&args.input, args.fixture) {
        (Some(p), None) => (load_counts_csv(p)?, p.display().to_string()),
        (None, Some(f)) => {
            let counts = builtin_fixture(f)
                .counts
                .ok_or_else(|| Error::Missing(format!("fixture {f:?} has no raw counts")))?;
            (counts, format!("fixture:{f:?}").to_lowercase())
        }
        _ => return Err(Error::Missing("a counts source: --input PATH or --fixture ny31".into())),
    };
    let (d, rep) = arcsine_transform(&records)?;
    let scalars = vec![
        Scalar::new("C", rep.c, "arcsine_transform"),
        Scalar::new("n_bar", rep.n_bar, "arcsine_transform"),
        Scalar::new("pooled_rate", rep.pooled_rate, "arcsine_transform"),
        Scalar::new("V_H", rep.v_h_after, "arcsine_transform"),
    ];
    match &args.output.out {
        None => {
            let mut out = std::io::stdout().lock();
            write_normal_csv(&d, &mut out)?;
            for s in &scalars {
                eprintln!("info: {} = {}", s.name, s.value);
            }
            Ok(())
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = Path::new(dir).join("transformed.csv");
            let file = std::fs::File::create(&path)?;
            write_normal_csv(&d, file)?;
            eprintln!("wrote {}", path.display());
            let mut table = Table::new(labels(&d));
            table.push_column("y", d.y())?;
            table.push_column("sd", &d.sd())?;
            table.push_column("V", d.variances())?;
            let bundle = ReportBundle {
                name: "transform".into(),
                table: Some(table),
                scalars,
                provenance: Provenance {
                    tool: TOOL.into(),
                    version: VERSION.into(),
                    command: "transform".into(),
                    input,
                    ..Default::default()
                },
                ..Default::default()
            };
            deliver(&bundle, &args.output, Format::Csv)
        }
    }
}
