//! Concrete realizations of the moment derivative.
//!
//! Under m(p) = Γ(1 + pμ) the moment derivative acts on Σ c_ν x^{μν} as the
//! Caputo derivative of order μ; under m(p) = [p]_q! it is the Jackson
//! q-derivative. The residual functions evaluate the realized equations
//! pointwise, independently of the symbolic moment-basis residual.

use num::{BigRational, One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::families::{build_equation, FamilySpec};
use crate::poly::{MomentEquation, MomentPolynomial, StandardPolynomial};
use crate::scalar::Scalar;
use crate::sequence::{MomentSequence, SequenceKind};
use crate::special::{ln_gamma, q_number};

/// Σ c_ν x^{μν} on x ≥ 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalPolynomial {
    pub mu: BigRational,
    pub coeffs: StandardPolynomial,
}

impl FractionalPolynomial {
    pub fn new(mu: BigRational, coeffs: StandardPolynomial) -> Result<Self> {
        if !mu.is_positive() {
            return Err(Error::InvalidParameter(format!("mu must be positive, got {mu}")));
        }
        Ok(FractionalPolynomial { mu, coeffs })
    }

    /// Reads a moment polynomial over Γ(1 + pμ) as a polynomial in x^μ.
    pub fn from_moment(p: &MomentPolynomial) -> Result<Self> {
        match p.sequence().kind() {
            SequenceKind::GammaPower { mu } => Self::new(mu.clone(), p.to_standard()?),
            SequenceKind::Factorial => Self::new(BigRational::one(), p.to_standard()?),
            _ => Err(Error::SequenceMismatch),
        }
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        self.coeffs.evaluate_fractional(&self.mu, x)
    }

    /// Σ |c_ν| x^{μν}.
    pub fn evaluate_abs(&self, x: f64) -> Result<f64> {
        let t = self.to_t(x)?;
        Ok(self.coeffs.evaluate_abs(t))
    }

    fn to_t(&self, x: f64) -> Result<f64> {
        StandardPolynomial::monomial(1).evaluate_fractional(&self.mu, x)
    }
}

/// Result of applying the Caputo derivative to x^s: `coefficient`·x^`exponent`,
/// or zero when `exponent` is `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaputoTerm {
    pub coefficient: f64,
    pub exponent: Option<BigRational>,
}

/// Caputo derivative of order μ of x^s.
///
/// Zero when s is a nonnegative integer below ⌈μ⌉; otherwise
/// Γ(s+1)/Γ(s−μ+1)·x^{s−μ}, evaluated in log space.
pub fn caputo_power(s: &BigRational, mu: &BigRational) -> Result<CaputoTerm> {
    if !mu.is_positive() {
        return Err(Error::InvalidParameter(format!("mu must be positive, got {mu}")));
    }
    if s.is_negative() {
        return Err(Error::Domain(format!("power {s} is negative")));
    }
    if s.is_integer() && s < &mu.ceil() {
        return Ok(CaputoTerm { coefficient: 0.0, exponent: None });
    }
    let exponent = s - mu;
    let sf = s.to_f64().unwrap_or(f64::NAN);
    let arg = exponent.to_f64().unwrap_or(f64::NAN) + 1.0;
    if arg <= 0.0 {
        return Err(Error::Domain(format!("Γ({arg}) in the Caputo power rule for x^{s}")));
    }
    let coefficient = (ln_gamma(sf + 1.0)? - ln_gamma(arg)?).exp();
    Ok(CaputoTerm { coefficient, exponent: Some(exponent) })
}

/// Termwise Caputo derivative; μ = 1 reduces to the exact classical derivative.
pub fn caputo_apply(p: &FractionalPolynomial) -> Result<FractionalPolynomial> {
    if p.mu.is_one() {
        return FractionalPolynomial::new(p.mu.clone(), p.coeffs.derivative());
    }
    let mut out = Vec::with_capacity(p.coeffs.coeffs().len().saturating_sub(1));
    for (nu, c) in p.coeffs.coeffs().iter().enumerate().skip(1) {
        let s = &p.mu * BigRational::from_integer(nu.into());
        let term = caputo_power(&s, &p.mu)?;
        debug_assert!(term.exponent.as_ref() == Some(&(&p.mu * BigRational::from_integer((nu - 1).into()))));
        out.push(c * Scalar::float(term.coefficient));
    }
    FractionalPolynomial::new(p.mu.clone(), StandardPolynomial::new(out))
}

/// D_q on monomial coefficients: c_ν x^ν ↦ [ν]_q c_ν x^{ν−1}.
pub fn jackson_derivative(p: &StandardPolynomial, q: &Scalar) -> Result<StandardPolynomial> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(nu, c)| Ok(q_number(q, nu)? * c))
        .collect::<Result<Vec<_>>>()?;
    Ok(StandardPolynomial::new(coeffs))
}

/// (f(qx) − f(x)) / ((q − 1)x).
pub fn jackson_numeric(f: impl Fn(f64) -> f64, q: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Domain("Jackson difference quotient is undefined at x = 0".into()));
    }
    if q == 1.0 || q <= 0.0 {
        return Err(Error::Domain(format!("q must be positive and different from 1, got {q}")));
    }
    Ok((f(q * x) - f(x)) / ((q - 1.0) * x))
}

/// Worst pointwise residual of a realized equation and the magnitude it is
/// measured against (largest Σ|term| over the grid).
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub scale: f64,
}

impl ResidualReport {
    /// max_abs / scale, or 0 for an identically vanishing input.
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.max_abs
        } else {
            self.max_abs / self.scale
        }
    }
}

/// Symbolic and numeric residuals of a realized q-difference equation.
#[derive(Clone, Debug, PartialEq)]
pub struct QResidualReport {
    /// σ·D_q²y + τ·D_q y + λy as a polynomial.
    pub symbolic: StandardPolynomial,
    pub symbolic_max_abs: f64,
    pub numeric_max_abs: f64,
    pub scale: f64,
}

fn gamma_sequence(mu: &BigRational) -> Result<MomentSequence> {
    if mu.is_one() {
        Ok(MomentSequence::factorial())
    } else {
        MomentSequence::gamma_power(mu.clone())
    }
}

/// σ(x^μ)·(ᶜD^μ)²y + τ(x^μ)·ᶜD^μ y + λy at each x, with (σ, τ, λ) the
/// family's moment equation under Γ(1 + pμ).
pub fn fractional_residual(spec: &FamilySpec, mu: &BigRational, y: &FractionalPolynomial, xs: &[f64]) -> Result<ResidualReport> {
    if &y.mu != mu {
        return Err(Error::SequenceMismatch);
    }
    let eq = build_equation(spec, &gamma_sequence(mu)?)?;
    let d1 = caputo_apply(y)?;
    let d2 = caputo_apply(&d1)?;
    let lambda = eq.lambda.to_f64();
    let mut report = ResidualReport { max_abs: 0.0, scale: 0.0 };
    for &x in xs {
        let t = y.to_t(x)?;
        let r = eq.sigma.evaluate(t) * d2.evaluate(x)? + eq.tau.evaluate(t) * d1.evaluate(x)? + lambda * y.evaluate(x)?;
        let s = eq.sigma.evaluate_abs(t) * d2.evaluate_abs(x)?
            + eq.tau.evaluate_abs(t) * d1.evaluate_abs(x)?
            + lambda.abs() * y.evaluate_abs(x)?;
        report.max_abs = report.max_abs.max(r.abs());
        report.scale = report.scale.max(s);
    }
    Ok(report)
}

/// The family's equation under [p]_q! (σ, τ, λ).
pub fn q_equation(spec: &FamilySpec, q: &Scalar) -> Result<MomentEquation> {
    let q = q
        .as_rational()
        .ok_or_else(|| Error::InvalidParameter(format!("q must be rational, got {q}")))?;
    build_equation(spec, &MomentSequence::q_factorial(q.clone())?)
}

/// Residual of the realized q-difference equation, both symbolically (via
/// [`jackson_derivative`]) and pointwise (via [`jackson_numeric`], falling
/// back to the symbolic value at x = 0).
pub fn q_residual(spec: &FamilySpec, q: &Scalar, y: &StandardPolynomial, xs: &[f64]) -> Result<QResidualReport> {
    let eq = q_equation(spec, q)?;
    let d1 = jackson_derivative(y, q)?;
    let d2 = jackson_derivative(&d1, q)?;
    let symbolic = &(&(&eq.sigma * &d2) + &(&eq.tau * &d1)) + &y.scale(&eq.lambda);
    let (qf, lambda) = (q.to_f64(), eq.lambda.to_f64());
    let mut report = QResidualReport {
        symbolic,
        symbolic_max_abs: 0.0,
        numeric_max_abs: 0.0,
        scale: 0.0,
    };
    let dy = |x: f64| jackson_numeric(|t| y.evaluate(t), qf, x).unwrap_or_else(|_| d1.evaluate(x));
    for &x in xs {
        let (n1, n2) = if x == 0.0 {
            (d1.evaluate(0.0), d2.evaluate(0.0))
        } else {
            (dy(x), jackson_numeric(dy, qf, x)?)
        };
        let numeric = eq.sigma.evaluate(x) * n2 + eq.tau.evaluate(x) * n1 + lambda * y.evaluate(x);
        let scale = eq.sigma.evaluate_abs(x) * d2.evaluate_abs(x)
            + eq.tau.evaluate_abs(x) * d1.evaluate_abs(x)
            + lambda.abs() * y.evaluate_abs(x);
        report.symbolic_max_abs = report.symbolic_max_abs.max(report.symbolic.evaluate(x).abs());
        report.numeric_max_abs = report.numeric_max_abs.max(numeric.abs());
        report.scale = report.scale.max(scale);
    }
    Ok(report)
}
