use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use momentpoly::grid::ParamKind;
use momentpoly::scalar::parse_rational;
use momentpoly::{Family, FamilySpec, Mode, MomentSequence, Scalar, SequenceKind};
use num::BigRational;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    Factorial,
    Q,
    Gamma,
    Custom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// laguerre, hermite, jacobi or bessel
    #[arg(long)]
    pub family: Option<Family>,
    /// Degree
    #[arg(long)]
    pub n: Option<usize>,
    /// Laguerre/Jacobi parameter (> -1)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Jacobi parameter (> -1)
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Free constant a0
    #[arg(long, allow_hyphen_values = true)]
    pub a0: Option<String>,
    /// Free constant a1 (odd Hermite, Jacobi)
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ModeArg,
}

#[derive(Args, Debug, Clone)]
pub struct SeqArgs {
    /// Moment sequence
    #[arg(long, value_enum, default_value = "factorial")]
    pub seq: SeqArg,
    /// q for --seq q (rational, e.g. 9/10 or 0.9)
    #[arg(long)]
    pub q: Option<String>,
    /// mu for --seq gamma (rational)
    #[arg(long)]
    pub mu: Option<String>,
    /// Comma-separated moments m(0), m(1), ... for --seq custom
    #[arg(long, allow_hyphen_values = true)]
    pub table: Option<String>,
}

fn parse_scalar(flag: &str, s: &str, mode: Mode) -> Result<Scalar> {
    match mode {
        Mode::Exact => Ok(Scalar::Exact(
            parse_rational(s).map_err(|e| anyhow!("--{flag}: {e}"))?,
        )),
        Mode::Float => {
            let v: f64 = s
                .trim()
                .parse()
                .or_else(|_| parse_rational(s).map(|r| Scalar::Exact(r).to_f64()))
                .map_err(|_| anyhow!("--{flag}: cannot parse {s:?}"))?;
            Ok(Scalar::float(v))
        }
    }
}

pub fn parse_rational_flag(flag: &str, s: &str) -> Result<BigRational> {
    parse_rational(s).map_err(|e| anyhow!("--{flag}: {e}"))
}

/// Comma-separated rationals, e.g. `0.8,0.9,19/20`.
pub fn parse_rational_list(flag: &str, s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_rational_flag(flag, t.trim()))
        .collect()
}

/// Comma-separated scalars, exact unless they look like floats.
pub fn parse_scalar_list(flag: &str, s: &str) -> Result<Vec<Scalar>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<Scalar>().map_err(|e| anyhow!("--{flag}: {e}")))
        .collect()
}

impl FamilyArgs {
    pub fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }

    pub fn is_given(&self) -> bool {
        self.family.is_some()
    }

    pub fn spec(&self) -> Result<FamilySpec> {
        let mode = self.mode();
        let family = self.family.ok_or_else(|| anyhow!("--family is required"))?;
        let n = self.n.ok_or_else(|| anyhow!("--n is required"))?;
        let param = |flag: &str, v: &Option<String>| -> Result<Scalar> {
            match v {
                Some(s) => parse_scalar(flag, s, mode),
                None if mode == Mode::Float => Ok(Scalar::float(0.0)),
                None => Ok(Scalar::zero()),
            }
        };
        let constant = |flag: &str, v: &Option<String>| v.as_deref().map(|s| parse_scalar(flag, s, mode)).transpose();
        let mut spec = FamilySpec::new(family, n);
        spec.alpha = param("alpha", &self.alpha)?;
        spec.beta = param("beta", &self.beta)?;
        spec.a0 = constant("a0", &self.a0)?;
        spec.a1 = constant("a1", &self.a1)?;
        if mode == Mode::Float {
            // float mode fixes the free constants too, so nothing stays exact
            match family {
                Family::Hermite if n % 2 == 1 => {
                    spec.a1.get_or_insert(Scalar::float(1.0));
                }
                Family::Jacobi if spec.a0.is_none() && spec.a1.is_none() => {}
                _ => {
                    spec.a0.get_or_insert(Scalar::float(1.0));
                }
            }
        }
        spec.validate().map_err(|e| anyhow!("{e}"))?;
        Ok(spec)
    }
}

impl SeqArgs {
    pub fn sequence(&self, mode: Mode) -> Result<MomentSequence> {
        let kind = match self.seq {
            SeqArg::Factorial => SequenceKind::Factorial,
            SeqArg::Q => SequenceKind::QFactorial {
                q: parse_rational_flag("q", self.q.as_deref().ok_or_else(|| anyhow!("--seq q needs --q"))?)?,
            },
            SeqArg::Gamma => SequenceKind::GammaPower {
                mu: parse_rational_flag("mu", self.mu.as_deref().ok_or_else(|| anyhow!("--seq gamma needs --mu"))?)?,
            },
            SeqArg::Custom => {
                let table = parse_scalar_list("table", self.table.as_deref().ok_or_else(|| anyhow!("--seq custom needs --table"))?)?;
                let table = if mode == Mode::Float { table.iter().map(Scalar::to_float).collect() } else { table };
                SequenceKind::Custom { table }
            }
        };
        MomentSequence::new(kind).map_err(|e| anyhow!("--seq: {e}"))
    }

    /// The sweep realization chosen by `--seq`.
    pub fn param_kind(&self) -> Result<ParamKind> {
        match self.seq {
            SeqArg::Q => Ok(ParamKind::Q),
            SeqArg::Gamma => Ok(ParamKind::Fractional),
            other => bail!("--seq must be q or gamma here, got {other:?}"),
        }
    }
}

pub fn sequence_json(seq: &MomentSequence) -> Value {
    serde_json::to_value(seq.kind()).expect("sequence kinds serialize")
}

pub fn spec_json(spec: &FamilySpec) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("family".into(), json!(spec.family.name()));
    m.insert("n".into(), json!(spec.n));
    m.insert("alpha".into(), json!(spec.alpha.to_string()));
    m.insert("beta".into(), json!(spec.beta.to_string()));
    if let Some(a0) = &spec.a0 {
        m.insert("a0".into(), json!(a0.to_string()));
    }
    if let Some(a1) = &spec.a1 {
        m.insert("a1".into(), json!(a1.to_string()));
    }
    m
}

/// Reads a family spec back from a `config` block written by `gen`.
pub fn spec_from_json(config: &Value, mode: Mode) -> Result<FamilySpec> {
    let get = |k: &str| config.get(k).and_then(Value::as_str);
    let family: Family = get("family")
        .ok_or_else(|| anyhow!("config block has no family"))?
        .parse()
        .map_err(|e| anyhow!("{e}"))?;
    let n = config
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("config block has no n"))? as usize;
    let scalar = |k: &str| -> Result<Option<Scalar>> {
        get(k)
            .map(|s| {
                let v: Scalar = s.parse().map_err(|e| anyhow!("config {k}: {e}"))?;
                Ok(if mode == Mode::Float { v.to_float() } else { v })
            })
            .transpose()
    };
    let mut spec = FamilySpec::new(family, n);
    spec.alpha = scalar("alpha")?.unwrap_or_else(Scalar::zero);
    spec.beta = scalar("beta")?.unwrap_or_else(Scalar::zero);
    spec.a0 = scalar("a0")?;
    spec.a1 = scalar("a1")?;
    spec.validate().map_err(|e| anyhow!("{e}"))?;
    Ok(spec)
}

pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}
