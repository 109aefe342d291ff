//! Confluence to the classical polynomials as μ → 1 or q → 1: parameter
//! sweeps with sup-norm distances, root sets and root-distance bounds.

mod bound;
mod roots;

pub use bound::{q_laguerre_bound, root_bound, perturbation_bound, BoundReport};
pub use roots::{bottleneck_match, exhaustive_match, find_roots, root_match, RootSet};

use num::{BigRational, One};
use rayon::prelude::*;

use crate::classical::classical;
use crate::error::{Error, Result};
use crate::families::{build, Family, FamilySpec};
use crate::grid::{Grid, ParamKind};
use crate::poly::StandardPolynomial;
use crate::scalar::Scalar;
use crate::sequence::MomentSequence;

/// Coefficients below this fraction of the largest one are treated as zero
/// when choosing the normalization index.
const NEGLIGIBLE: f64 = 1e-12;

/// Index of the standard coefficient used to align a generalized polynomial
/// with its classical counterpart: the lowest non-negligible coefficient of
/// the classical polynomial. That is the constant term for Laguerre, Bessel
/// and (generically) Jacobi, and c₀ or c₁ for Hermite by parity.
pub fn normalization_index(reference: &StandardPolynomial) -> Option<usize> {
    let scale = reference.max_abs_coeff();
    reference.coeffs().iter().position(|c| c.to_f64().abs() > NEGLIGIBLE * scale)
}

/// Scales `p` so that its coefficient at [`normalization_index`] equals the
/// reference's.
pub fn normalize_to(p: &StandardPolynomial, reference: &StandardPolynomial) -> Result<StandardPolynomial> {
    let k = normalization_index(reference)
        .ok_or_else(|| Error::InvalidParameter("cannot normalize against the zero polynomial".into()))?;
    let pk = p.coeff(k);
    if pk.is_zero() || (!pk.is_exact() && pk.to_f64().abs() <= NEGLIGIBLE * p.max_abs_coeff()) {
        return Err(Error::Inconsistent(format!("coefficient c{k} vanishes; cannot normalize")));
    }
    Ok(p.scale(&(reference.coeff(k) / pk)))
}

/// Moment sequence for a sweep parameter; 1 maps to the factorial sequence.
pub fn sweep_sequence(kind: ParamKind, param: &BigRational) -> Result<MomentSequence> {
    if param.is_one() {
        return Ok(MomentSequence::factorial());
    }
    match kind {
        ParamKind::Fractional => MomentSequence::gamma_power(param.clone()),
        ParamKind::Q => MomentSequence::q_factorial(param.clone()),
    }
}

/// Generalized polynomial for one sweep parameter, normalized against the
/// classical one, in standard coefficients (in powers of x^μ for the
/// fractional kind).
pub fn normalized_generalized(spec: &FamilySpec, kind: ParamKind, param: &BigRational) -> Result<StandardPolynomial> {
    let seq = sweep_sequence(kind, param)?;
    let reference = classical(spec)?;
    normalize_to(&build(spec, &seq)?.to_standard()?, &reference)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: BigRational,
    /// Normalized standard coefficients of the generalized polynomial.
    pub coeffs: StandardPolynomial,
    pub values: Vec<f64>,
    pub abs_diff: Vec<f64>,
    pub sup_distance: f64,
    /// Bottleneck distance between generalized and classical roots.
    pub root_distance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub spec: FamilySpec,
    pub kind: ParamKind,
    pub grid: Grid,
    pub xs: Vec<f64>,
    pub classical: StandardPolynomial,
    pub classical_values: Vec<f64>,
    /// max |classical| over the grid.
    pub classical_sup: f64,
    /// Index of the matched coefficient (see [`normalization_index`]).
    pub normalization: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn normalization_tag(&self) -> String {
        format!("c{}", self.normalization)
    }
}

fn evaluate(p: &StandardPolynomial, kind: ParamKind, param: &BigRational, x: f64) -> Result<f64> {
    match kind {
        ParamKind::Fractional => p.evaluate_fractional(param, x),
        ParamKind::Q => Ok(p.evaluate(x)),
    }
}

/// Builds, normalizes and evaluates the generalized polynomial for every
/// parameter on `grid`, alongside the classical polynomial. Rows come back
/// sorted by parameter; cells run in parallel.
pub fn sweep(spec: &FamilySpec, kind: ParamKind, params: &[BigRational], grid: &Grid) -> Result<SweepResult> {
    spec.validate()?;
    if params.is_empty() {
        return Err(Error::InvalidParameter("sweep needs at least one parameter".into()));
    }
    if kind == ParamKind::Fractional && grid.start < 0.0 {
        return Err(Error::Domain(format!(
            "fractional sweeps need a nonnegative grid, got start {}",
            grid.start
        )));
    }
    let mut params = params.to_vec();
    params.sort();
    params.dedup();

    let reference = classical(spec)?;
    let normalization = normalization_index(&reference)
        .ok_or_else(|| Error::Inconsistent("classical polynomial vanishes".into()))?;
    let xs = grid.points();
    let classical_values: Vec<f64> = xs.iter().map(|&x| reference.evaluate(x)).collect();
    let classical_sup = classical_values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let classical_roots = find_roots(&reference)?;

    let rows = params
        .par_iter()
        .map(|param| {
            let coeffs = normalized_generalized(spec, kind, param)?;
            let values = xs.iter().map(|&x| evaluate(&coeffs, kind, param, x)).collect::<Result<Vec<f64>>>()?;
            let abs_diff: Vec<f64> = values.iter().zip(&classical_values).map(|(g, c)| (g - c).abs()).collect();
            let sup_distance = abs_diff.iter().copied().fold(0.0, f64::max);
            let root_distance = root_match(&find_roots(&coeffs)?, &classical_roots)?;
            Ok(SweepRow {
                param: param.clone(),
                coeffs,
                values,
                abs_diff,
                sup_distance,
                root_distance,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepResult {
        spec: spec.clone(),
        kind,
        grid: *grid,
        xs,
        classical: reference,
        classical_values,
        classical_sup,
        normalization,
        rows,
    })
}

/// |λ(param) − λ(factorial)|, the distance between the equations'
/// eigenvalues.
pub fn eigenvalue_gap(spec: &FamilySpec, kind: ParamKind, param: &BigRational) -> Result<f64> {
    let seq = sweep_sequence(kind, param)?;
    let gen = crate::families::eigenvalue(spec, &seq)?;
    let classical = crate::families::eigenvalue(spec, &MomentSequence::factorial())?;
    Ok((gen - classical).abs().to_f64())
}

/// Family configurations of the confluence figures.
pub fn figure_configs() -> Vec<FamilySpec> {
    vec![
        FamilySpec::laguerre(5, Scalar::zero()),
        FamilySpec::hermite(6),
        FamilySpec::jacobi(6, Scalar::one(), Scalar::ratio(3, 4)),
        FamilySpec::bessel(5),
    ]
}

/// Figure configuration for one family.
pub fn figure_config(family: Family) -> FamilySpec {
    figure_configs()
        .into_iter()
        .find(|s| s.family == family)
        .expect("every family has a figure configuration")
}
