use anyhow::{anyhow, bail, Result};
use momentpoly::calculus::{fractional_residual, q_residual, FractionalPolynomial};
use momentpoly::classical::classical;
use momentpoly::confluence::{q_laguerre_bound, root_bound, sweep, BoundReport, SweepResult};
use momentpoly::families::{build, build_equation, eigenvalue};
use momentpoly::grid::{default_interval, Grid, ParamKind, RESIDUAL_POINTS};
use momentpoly::serial::PolynomialDoc;
use momentpoly::{FamilySpec, Mode, MomentPolynomial, MomentSequence, Scalar, SequenceKind, StandardPolynomial};
use num::BigRational;
use num::Complex;
use serde_json::{json, Map, Value};

use crate::args::{self, FamilyArgs, Format, SeqArgs};
use crate::{csv, svg};

pub const DEFAULT_TOL: f64 = 1e-8;

/// Rendered command output plus whether the checks it ran passed.
pub struct Outcome {
    pub body: String,
    pub format: Format,
    pub pass: bool,
    /// Human-readable lines for stderr.
    pub summary: Vec<String>,
}

fn config_block(command: &str, spec: Option<&FamilySpec>, extra: Map<String, Value>) -> Value {
    let mut m = spec.map(args::spec_json).unwrap_or_default();
    m.insert("command".into(), json!(command));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.extend(extra);
    Value::Object(m)
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn complex_json(zs: &[Complex<f64>]) -> Value {
    json!(zs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

pub fn gen(fam: &FamilyArgs, seq_args: &SeqArgs, format: Format) -> Result<Outcome> {
    let mode = fam.mode();
    let spec = fam.spec()?;
    let seq = seq_args.sequence(mode)?;
    let y = build(&spec, &seq)?;
    let standard = y.to_standard()?;
    let lambda = eigenvalue(&spec, &seq)?;
    let body = match format {
        Format::Json => {
            let mut extra = Map::new();
            extra.insert("sequence".into(), args::sequence_json(&seq));
            extra.insert("mode".into(), json!(mode_name(mode)));
            to_json(&json!({
                "config": config_block("gen", Some(&spec), extra),
                "eigenvalue": lambda.to_string(),
                "moment": PolynomialDoc::from_moment(&y),
                "standard": PolynomialDoc::from_standard(&standard, Some(&seq)),
            }))
        }
        Format::Csv => csv::coefficients(&y, &standard),
        Format::Svg => bail!("--format svg is only available for sweep"),
    };
    Ok(Outcome { body, format, pass: true, summary: vec![] })
}

/// One verification path and its worst residual.
struct Check {
    path: &'static str,
    max_abs: f64,
    scale: f64,
    exact_zero: Option<bool>,
    tol: f64,
}

impl Check {
    fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.max_abs
        } else {
            self.max_abs / self.scale
        }
    }

    fn pass(&self) -> bool {
        match self.exact_zero {
            Some(zero) => zero,
            None => self.relative() <= self.tol,
        }
    }

    fn json(&self) -> Value {
        json!({
            "path": self.path,
            "max_abs": self.max_abs,
            "scale": self.scale,
            "relative": self.relative(),
            "exact": self.exact_zero.is_some(),
            "pass": self.pass(),
        })
    }
}

fn residual_points(spec: &FamilySpec, kind: ParamKind) -> Result<Vec<f64>> {
    let (a, b) = default_interval(spec.family, kind);
    Ok(Grid::new(a, b, RESIDUAL_POINTS)?.chebyshev_points())
}

/// σy″ + τy′ + λy at each point with ordinary derivatives.
fn classical_pointwise(spec: &FamilySpec, y: &StandardPolynomial, xs: &[f64]) -> Result<(f64, f64)> {
    let eq = build_equation(spec, &MomentSequence::factorial())?;
    let (d1, d2) = (y.derivative(), y.derivative().derivative());
    let lambda = eq.lambda.to_f64();
    let (mut worst, mut scale) = (0.0_f64, 0.0_f64);
    for &x in xs {
        let r = eq.sigma.evaluate(x) * d2.evaluate(x) + eq.tau.evaluate(x) * d1.evaluate(x) + lambda * y.evaluate(x);
        let s = eq.sigma.evaluate_abs(x.abs()) * d2.evaluate_abs(x.abs())
            + eq.tau.evaluate_abs(x.abs()) * d1.evaluate_abs(x.abs())
            + lambda.abs() * y.evaluate_abs(x.abs());
        worst = worst.max(r.abs());
        scale = scale.max(s);
    }
    Ok((worst, scale))
}

/// Reads either a `gen` JSON document or a bare polynomial document.
fn read_polynomial(text: &str, fallback: Option<MomentSequence>) -> Result<(MomentPolynomial, Option<Value>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| anyhow!("--input is not valid JSON: {e}"))?;
    let (doc, config) = match v.get("moment") {
        Some(inner) => (inner.clone(), v.get("config").cloned()),
        None => (v.clone(), v.get("config").cloned()),
    };
    let mut doc: PolynomialDoc = serde_json::from_value(doc).map_err(|e| anyhow!("--input: {e}"))?;
    if doc.sequence.is_none() {
        doc.sequence = fallback.map(|s| s.kind().clone());
    }
    Ok((doc.to_moment()?, config))
}

pub fn verify(fam: &FamilyArgs, seq_args: &SeqArgs, input: &str, tol: f64) -> Result<Outcome> {
    let text = args::read_input(input)?;
    let mode = fam.mode();
    let flag_seq = match seq_args.seq {
        args::SeqArg::Factorial => None,
        _ => Some(seq_args.sequence(mode)?),
    };
    let (y, config) = read_polynomial(&text, flag_seq.clone().or_else(|| Some(MomentSequence::factorial())))?;
    if let Some(s) = &flag_seq {
        if s != y.sequence() {
            bail!("--seq does not match the sequence stored in --input");
        }
    }
    let spec = if fam.is_given() {
        fam.spec()?
    } else {
        let config = config.ok_or_else(|| anyhow!("--family is required when --input has no config block"))?;
        args::spec_from_json(&config, mode)?
    };
    let seq = y.sequence().clone();

    let mut checks = Vec::new();
    let eq = build_equation(&spec, &seq)?;
    let r = eq.apply(&y)?;
    let all_exact = y.coeffs().iter().all(Scalar::is_exact) && eq.lambda.is_exact();
    checks.push(Check {
        path: "symbolic_moment",
        max_abs: r.max_abs_coeff(),
        scale: y.max_abs_coeff(),
        exact_zero: all_exact.then(|| r.is_zero()),
        tol,
    });
    match seq.kind() {
        SequenceKind::Factorial => {
            let xs = residual_points(&spec, ParamKind::Q)?;
            let (max_abs, scale) = classical_pointwise(&spec, &y.to_standard()?, &xs)?;
            checks.push(Check { path: "realized_derivative", max_abs, scale, exact_zero: None, tol });
        }
        SequenceKind::GammaPower { mu } => {
            let xs = residual_points(&spec, ParamKind::Fractional)?;
            let rep = fractional_residual(&spec, mu, &FractionalPolynomial::from_moment(&y)?, &xs)?;
            checks.push(Check { path: "realized_caputo", max_abs: rep.max_abs, scale: rep.scale, exact_zero: None, tol });
        }
        SequenceKind::QFactorial { q } => {
            let xs = residual_points(&spec, ParamKind::Q)?;
            let std = y.to_standard()?;
            let rep = q_residual(&spec, &Scalar::Exact(q.clone()), &std, &xs)?;
            checks.push(Check {
                path: "realized_jackson_symbolic",
                max_abs: rep.symbolic_max_abs,
                scale: std.max_abs_coeff(),
                exact_zero: std.is_exact().then(|| rep.symbolic.is_zero()),
                tol,
            });
            checks.push(Check {
                path: "realized_jackson_numeric",
                max_abs: rep.numeric_max_abs,
                scale: rep.scale,
                exact_zero: None,
                tol,
            });
        }
        SequenceKind::Custom { .. } => {}
    }

    let pass = checks.iter().all(Check::pass);
    let mut extra = Map::new();
    extra.insert("sequence".into(), args::sequence_json(&seq));
    extra.insert("tol".into(), json!(tol));
    extra.insert("input".into(), json!(input));
    let body = to_json(&json!({
        "config": config_block("verify", Some(&spec), extra),
        "checks": checks.iter().map(Check::json).collect::<Vec<_>>(),
        "pass": pass,
    }));
    let summary = checks
        .iter()
        .map(|c| format!("{:<28} max {:.3e}  relative {:.3e}  {}", c.path, c.max_abs, c.relative(), if c.pass() { "ok" } else { "FAIL" }))
        .collect();
    Ok(Outcome { body, format: Format::Json, pass, summary })
}

pub fn sweep_cmd(fam: &FamilyArgs, seq_args: &SeqArgs, params: &str, grid: Option<&str>, format: Format) -> Result<Outcome> {
    let spec = fam.spec()?;
    let kind = seq_args.param_kind()?;
    let params = args::parse_rational_list("params", params)?;
    if params.is_empty() {
        bail!("--params is empty");
    }
    let grid = match grid {
        Some(g) => g.parse::<Grid>().map_err(|e| anyhow!("--grid: {e}"))?,
        None => Grid::default_for(spec.family, kind),
    };
    if kind == ParamKind::Fractional && grid.start < 0.0 {
        bail!("--grid: fractional sweeps need start >= 0, got {}", grid.start);
    }
    let result = sweep(&spec, kind, &params, &grid)?;
    let body = match format {
        Format::Csv => csv::sweep(&result),
        Format::Json => to_json(&sweep_json(&result)),
        Format::Svg => svg::sweep(&result),
    };
    let summary = result
        .rows
        .iter()
        .map(|r| {
            format!(
                "{} = {}  sup {:.6e}  relative {:.6e}  roots {:.6e}",
                result.kind,
                r.param,
                r.sup_distance,
                r.sup_distance / result.classical_sup,
                r.root_distance
            )
        })
        .collect();
    Ok(Outcome { body, format, pass: true, summary })
}

fn sweep_json(r: &SweepResult) -> Value {
    let mut extra = Map::new();
    extra.insert("seq_kind".into(), json!(r.kind.to_string()));
    extra.insert("params".into(), json!(r.rows.iter().map(|row| row.param.to_string()).collect::<Vec<_>>()));
    extra.insert("grid".into(), json!(r.grid.to_string()));
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "param": row.param.to_string(),
                "coeffs": row.coeffs.coeffs(),
                "sup_distance": row.sup_distance,
                "relative_sup_distance": row.sup_distance / r.classical_sup,
                "root_distance": row.root_distance,
                "values": row.values,
                "abs_diff": row.abs_diff,
            })
        })
        .collect();
    json!({
        "config": config_block("sweep", Some(&r.spec), extra),
        "normalization": r.normalization_tag(),
        "classical": r.classical.coeffs(),
        "classical_sup": r.classical_sup,
        "x": r.xs,
        "y_classical": r.classical_values,
        "rows": rows,
    })
}

fn bound_json(report: &BoundReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("degree".into(), json!(report.degree));
    m.insert("roots_f".into(), complex_json(&report.roots_f));
    m.insert("roots_g".into(), complex_json(&report.roots_g));
    m.insert("matched_distance".into(), json!(report.matched_distance));
    m.insert("bound".into(), json!(report.bound));
    m.insert("gamma".into(), json!(report.gamma));
    m.insert("coefficient_differences".into(), json!(report.coefficient_differences));
    m.insert("leading_f".into(), json!(report.leading_f));
    m.insert("leading_g".into(), json!(report.leading_g));
    m.insert("holds".into(), json!(report.holds()));
    m
}

fn bound_summary(report: &BoundReport) -> Vec<String> {
    vec![format!(
        "matched {:.6e}  bound {:.6e}  {}",
        report.matched_distance,
        report.bound,
        if report.holds() { "ok" } else { "FAIL" }
    )]
}

/// Roots of the generalized polynomial (f) against the classical one (g).
/// Under a Γ(1 + pμ) sequence the roots are in t = x^μ.
pub fn roots(fam: &FamilyArgs, seq_args: &SeqArgs) -> Result<Outcome> {
    let mode = fam.mode();
    let spec = fam.spec()?;
    let seq = seq_args.sequence(mode)?;
    let f = build(&spec, &seq)?.to_standard()?;
    let g = classical(&spec)?;
    let report = root_bound(&f, &g)?;
    let mut extra = Map::new();
    extra.insert("sequence".into(), args::sequence_json(&seq));
    extra.insert("mode".into(), json!(mode_name(mode)));
    let mut out = Map::new();
    out.insert("config".into(), config_block("roots", Some(&spec), extra));
    let variable = match seq.kind() {
        SequenceKind::GammaPower { .. } => "x^mu",
        _ => "x",
    };
    out.insert("variable".into(), json!(variable));
    out.extend(bound_json(&report));
    Ok(Outcome {
        body: to_json(&Value::Object(out)),
        format: Format::Json,
        pass: report.holds(),
        summary: bound_summary(&report),
    })
}

pub fn bound(f: Option<&str>, g: Option<&str>, q_laguerre: Option<usize>, q: Option<&str>) -> Result<Outcome> {
    let mut out = Map::new();
    let mut extra = Map::new();
    let report = match (f, g, q_laguerre) {
        (Some(f), Some(g), None) => {
            extra.insert("f".into(), json!(f));
            extra.insert("g".into(), json!(g));
            let f = StandardPolynomial::new(args::parse_scalar_list("f", f)?);
            let g = StandardPolynomial::new(args::parse_scalar_list("g", g)?);
            root_bound(&f, &g)?
        }
        (None, None, Some(n)) => {
            let q: BigRational = args::parse_rational_flag("q", q.ok_or_else(|| anyhow!("--q-laguerre needs --q"))?)?;
            extra.insert("q_laguerre".into(), json!(n));
            extra.insert("q".into(), json!(q.to_string()));
            let spec = FamilySpec::laguerre(n, Scalar::zero());
            let f = build(&spec, &MomentSequence::q_factorial(q.clone())?)?.to_standard()?;
            let report = root_bound(&f, &classical(&spec)?)?;
            out.insert("closed_form_bound".into(), json!(q_laguerre_bound(n, &q)?));
            report
        }
        _ => bail!("bound needs either --f and --g, or --q-laguerre with --q"),
    };
    let mut body = Map::new();
    body.insert("config".into(), config_block("bound", None, extra));
    body.extend(bound_json(&report));
    body.extend(out);
    Ok(Outcome {
        body: to_json(&Value::Object(body)),
        format: Format::Json,
        pass: report.holds(),
        summary: bound_summary(&report),
    })
}
