//! Moment analogs of the Laguerre, Hermite, Jacobi and Bessel polynomials.
//!
//! Every builder runs the forward coefficient recursion obtained by plugging
//! Σ a_p x^p/m(p) into the family's moment equation. The eigenvalue is chosen
//! so that the recursion produces a_{n+1} = a_{n+2} = 0, which leaves a
//! polynomial of degree exactly n. The closed product formulas for the
//! coefficients live in [`closed_form`] and are checked against the
//! recursion in debug builds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MomentEquation, MomentPolynomial, StandardPolynomial};
use crate::scalar::Scalar;
use crate::sequence::MomentSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Laguerre,
    Hermite,
    Jacobi,
    Bessel,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Laguerre, Family::Hermite, Family::Jacobi, Family::Bessel];

    pub fn name(self) -> &'static str {
        match self {
            Family::Laguerre => "laguerre",
            Family::Hermite => "hermite",
            Family::Jacobi => "jacobi",
            Family::Bessel => "bessel",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "laguerre" => Ok(Family::Laguerre),
            "hermite" => Ok(Family::Hermite),
            "jacobi" => Ok(Family::Jacobi),
            "bessel" => Ok(Family::Bessel),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Family, degree, parameters and optional free constants a_0, a_1.
///
/// `alpha` is used by Laguerre and Jacobi, `beta` by Jacobi only.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub a0: Option<Scalar>,
    pub a1: Option<Scalar>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            alpha: Scalar::zero(),
            beta: Scalar::zero(),
            a0: None,
            a1: None,
        }
    }

    pub fn laguerre(n: usize, alpha: Scalar) -> Self {
        FamilySpec { alpha, ..Self::new(Family::Laguerre, n) }
    }

    pub fn hermite(n: usize) -> Self {
        Self::new(Family::Hermite, n)
    }

    pub fn jacobi(n: usize, alpha: Scalar, beta: Scalar) -> Self {
        FamilySpec { alpha, beta, ..Self::new(Family::Jacobi, n) }
    }

    pub fn bessel(n: usize) -> Self {
        Self::new(Family::Bessel, n)
    }

    pub fn with_a0(mut self, a0: Scalar) -> Self {
        self.a0 = Some(a0);
        self
    }

    pub fn with_a1(mut self, a1: Scalar) -> Self {
        self.a1 = Some(a1);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter(format!("{} needs n >= 1", self.family)));
        }
        let minus_one = Scalar::int(-1);
        if matches!(self.family, Family::Laguerre | Family::Jacobi) && self.alpha <= minus_one {
            return Err(Error::InvalidParameter(format!("alpha must exceed -1, got {}", self.alpha)));
        }
        if self.family == Family::Jacobi && self.beta <= minus_one {
            return Err(Error::InvalidParameter(format!("beta must exceed -1, got {}", self.beta)));
        }
        Ok(())
    }
}

/// r(k)·(r(k−1) + shift) with the r(k−1) term absent for k = 1 and the whole
/// bracket zero for k = 0. Shared by the Jacobi (shift = α+β+2) and Bessel
/// (shift = 2) recursions and eigenvalues.
fn bracket(seq: &MomentSequence, k: usize, shift: &Scalar) -> Result<Scalar> {
    match k {
        0 => Ok(Scalar::zero()),
        1 => Ok(seq.ratio(1)? * shift),
        _ => Ok(seq.ratio(k)? * (seq.ratio(k - 1)? + shift)),
    }
}

fn jacobi_shift(spec: &FamilySpec) -> Scalar {
    &spec.alpha + &spec.beta + Scalar::int(2)
}

/// λ_n of the family's moment equation. For Bessel with n = 1 this is m(1),
/// the coefficient of the first-order equation.
pub fn eigenvalue(spec: &FamilySpec, seq: &MomentSequence) -> Result<Scalar> {
    spec.validate()?;
    let n = spec.n;
    match spec.family {
        Family::Laguerre => seq.ratio(n),
        Family::Hermite => Ok(Scalar::int(2) * seq.ratio(n)?),
        Family::Jacobi => bracket(seq, n, &jacobi_shift(spec)),
        Family::Bessel if n == 1 => seq.moment(1),
        Family::Bessel => bracket(seq, n, &Scalar::int(2)),
    }
}

/// (σ, τ, λ) of the family's moment equation.
///
/// The Bessel equation carries −λ_n; for n = 1 it is the first-order
/// equation (x + 1)∂_m y − m(1) y = 0, encoded with σ = 0.
pub fn build_equation(spec: &FamilySpec, seq: &MomentSequence) -> Result<MomentEquation> {
    let lambda = eigenvalue(spec, seq)?;
    let x = StandardPolynomial::monomial(1);
    let (sigma, tau, lambda) = match spec.family {
        Family::Laguerre => (
            x.clone(),
            StandardPolynomial::new(vec![&spec.alpha + Scalar::one(), Scalar::int(-1)]),
            lambda,
        ),
        Family::Hermite => (
            StandardPolynomial::from_ints(&[1]),
            StandardPolynomial::from_ints(&[0, -2]),
            lambda,
        ),
        Family::Jacobi => (
            StandardPolynomial::from_ints(&[1, 0, -1]),
            StandardPolynomial::new(vec![&spec.beta - &spec.alpha, -jacobi_shift(spec)]),
            lambda,
        ),
        Family::Bessel if spec.n == 1 => (StandardPolynomial::zero(), StandardPolynomial::from_ints(&[1, 1]), -lambda),
        Family::Bessel => (
            StandardPolynomial::monomial(2),
            StandardPolynomial::from_ints(&[2, 2]),
            -lambda,
        ),
    };
    MomentEquation::new(sigma, tau, lambda, seq.clone())
}

fn nonzero(a: &Scalar, what: &str) -> Result<()> {
    if a.is_zero() {
        Err(Error::InvalidParameter(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

fn finish(seq: &MomentSequence, mut extended: Vec<Scalar>, n: usize) -> Result<MomentPolynomial> {
    debug_assert!(extended.len() == n + 3);
    debug_assert!(extended[n + 1..].iter().all(|a| !a.is_exact() || a.is_zero()));
    extended.truncate(n + 1);
    let p = MomentPolynomial::new(seq.clone(), extended);
    if p.degree() != Some(n) {
        return Err(Error::Inconsistent(format!(
            "recursion produced degree {:?} instead of {n}",
            p.degree()
        )));
    }
    Ok(p)
}

fn laguerre_series(seq: &MomentSequence, n: usize, alpha: &Scalar, a0: &Scalar) -> Result<Vec<Scalar>> {
    let spec = FamilySpec::laguerre(n, alpha.clone());
    let lambda = eigenvalue(&spec, seq)?;
    let alpha1 = alpha + Scalar::one();
    let mut a = Vec::with_capacity(n + 3);
    a.push(a0.clone());
    a.push(-(&lambda / &alpha1) * a0);
    for k in 1..=n + 1 {
        let r = seq.ratio(k)?;
        let next = (&r - &lambda) / (&r + &alpha1) * &a[k];
        a.push(next);
    }
    Ok(a)
}

/// Moment-analog Laguerre polynomial of degree n.
pub fn build_laguerre(seq: &MomentSequence, n: usize, alpha: &Scalar, a0: &Scalar) -> Result<MomentPolynomial> {
    FamilySpec::laguerre(n, alpha.clone()).validate()?;
    nonzero(a0, "a0")?;
    let a = laguerre_series(seq, n, alpha, a0)?;
    let p = finish(seq, a, n)?;
    debug_assert!(closed_form::agrees(&p, &closed_form::laguerre(seq, n, alpha, a0)?));
    Ok(p)
}

fn hermite_series(seq: &MomentSequence, n: usize, a0: &Scalar, a1: &Scalar) -> Result<Vec<Scalar>> {
    let lambda = eigenvalue(&FamilySpec::hermite(n), seq)?;
    let two = Scalar::int(2);
    let mut a = vec![a0.clone(), a1.clone()];
    for k in 0..=n {
        let factor = if k == 0 { -&lambda } else { &two * seq.ratio(k)? - &lambda };
        let next = factor * &a[k];
        a.push(next);
    }
    Ok(a)
}

/// Moment-analog Hermite polynomial of degree n.
///
/// Even n takes a nonzero `a0` (and forces a_1 = 0); odd n takes a nonzero
/// `a1` (and forces a_0 = 0).
pub fn build_hermite(seq: &MomentSequence, n: usize, a0: Option<&Scalar>, a1: Option<&Scalar>) -> Result<MomentPolynomial> {
    FamilySpec::hermite(n).validate()?;
    let zero = Scalar::zero();
    let wrong = |name: &str| {
        Error::InvalidParameter(format!(
            "Hermite n = {n} is {} and takes only {name}",
            if n % 2 == 0 { "even" } else { "odd" }
        ))
    };
    let (start0, start1) = if n % 2 == 0 {
        if a1.is_some_and(|a| !a.is_zero()) {
            return Err(wrong("a0"));
        }
        let a0 = a0.ok_or_else(|| wrong("a0"))?;
        nonzero(a0, "a0")?;
        (a0.clone(), zero)
    } else {
        if a0.is_some_and(|a| !a.is_zero()) {
            return Err(wrong("a1"));
        }
        let a1 = a1.ok_or_else(|| wrong("a1"))?;
        nonzero(a1, "a1")?;
        (zero, a1.clone())
    };
    let a = hermite_series(seq, n, &start0, &start1)?;
    let p = finish(seq, a, n)?;
    debug_assert!(closed_form::agrees(&p, &closed_form::hermite(seq, n, &start0, &start1)?));
    Ok(p)
}

fn jacobi_series(
    seq: &MomentSequence,
    spec: &FamilySpec,
    lambda: &Scalar,
    a0: &Scalar,
    a1: &Scalar,
) -> Result<Vec<Scalar>> {
    let shift = jacobi_shift(spec);
    let skew = &spec.beta - &spec.alpha;
    let mut a = vec![a0.clone(), a1.clone()];
    for k in 0..=spec.n {
        let next = -(&skew * &a[k + 1]) + (bracket(seq, k, &shift)? - lambda) * &a[k];
        a.push(next);
    }
    Ok(a)
}

/// Moment-analog Jacobi polynomial of degree n.
///
/// The recursion leaves two free constants; a polynomial of degree n needs
/// the single linear condition a_{n+1} = κ₀a₀ + κ₁a₁ = 0. Supplying only
/// `a0` (or only `a1`) solves for the other; supplying both requires the
/// pair to satisfy the condition.
pub fn build_jacobi(
    seq: &MomentSequence,
    n: usize,
    alpha: &Scalar,
    beta: &Scalar,
    a0: Option<&Scalar>,
    a1: Option<&Scalar>,
) -> Result<MomentPolynomial> {
    let spec = FamilySpec::jacobi(n, alpha.clone(), beta.clone());
    let extended = jacobi_extended(seq, &spec, a0, a1)?;
    finish(seq, extended, n)
}

fn jacobi_extended(seq: &MomentSequence, spec: &FamilySpec, a0: Option<&Scalar>, a1: Option<&Scalar>) -> Result<Vec<Scalar>> {
    spec.validate()?;
    let n = spec.n;
    let lambda = eigenvalue(spec, seq)?;
    let (zero, one) = (Scalar::zero(), Scalar::one());
    let even = jacobi_series(seq, spec, &lambda, &one, &zero)?;
    let odd = jacobi_series(seq, spec, &lambda, &zero, &one)?;
    let (k0, k1) = (&even[n + 1], &odd[n + 1]);

    let (c0, c1) = match (a0, a1) {
        (None, None) => return Err(Error::InvalidParameter("Jacobi needs a0 or a1".into())),
        _ if k0.is_zero() && k1.is_zero() => (a0.cloned().unwrap_or_else(Scalar::zero), a1.cloned().unwrap_or_else(Scalar::zero)),
        (Some(a0), None) => {
            if k1.is_zero() {
                return Err(Error::Inconsistent(format!("degree {n} forces a0 = 0; supply a1 instead")));
            }
            (a0.clone(), -(k0 * a0) / k1)
        }
        (None, Some(a1)) => {
            if k0.is_zero() {
                return Err(Error::Inconsistent(format!("degree {n} forces a1 = 0; supply a0 instead")));
            }
            (-(k1 * a1) / k0, a1.clone())
        }
        (Some(a0), Some(a1)) => {
            let (t0, t1) = (k0 * a0, k1 * a1);
            let defect = &t0 + &t1;
            let ok = if defect.is_exact() {
                defect.is_zero()
            } else {
                defect.to_f64().abs() <= 1e-10 * (t0.to_f64().abs() + t1.to_f64().abs())
            };
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "a0 = {a0}, a1 = {a1} do not give a terminating series (a_(n+1) = {defect})"
                )));
            }
            (a0.clone(), a1.clone())
        }
    };
    if c0.is_zero() && c1.is_zero() {
        return Err(Error::InvalidParameter("a0 and a1 cannot both vanish".into()));
    }
    let mut combined: Vec<Scalar> = even.iter().zip(&odd).map(|(e, o)| &c0 * e + &c1 * o).collect();
    // Float round-off leaves a_{n+1} ≈ 0; the exact condition holds by construction.
    if !combined[n + 1].is_exact() {
        combined[n + 1] = Scalar::float(0.0);
        combined[n + 2] = Scalar::float(0.0);
    }
    Ok(combined)
}

fn bessel_series(seq: &MomentSequence, n: usize, a0: &Scalar) -> Result<Vec<Scalar>> {
    if n == 1 {
        return Ok(vec![a0.clone(), a0 * seq.moment(1)?, Scalar::zero(), Scalar::zero()]);
    }
    let two = Scalar::int(2);
    let lambda = eigenvalue(&FamilySpec::bessel(n), seq)?;
    let mut a = vec![a0.clone(), &lambda / &two * a0];
    for k in 1..=n + 1 {
        let next = (&lambda - bracket(seq, k, &two)?) / &two * &a[k];
        a.push(next);
    }
    Ok(a)
}

/// Moment-analog Bessel polynomial of degree n; n = 1 gives a0(1 + x).
pub fn build_bessel(seq: &MomentSequence, n: usize, a0: &Scalar) -> Result<MomentPolynomial> {
    FamilySpec::bessel(n).validate()?;
    nonzero(a0, "a0")?;
    let a = bessel_series(seq, n, a0)?;
    let p = finish(seq, a, n)?;
    debug_assert!(closed_form::agrees(&p, &closed_form::bessel(seq, n, a0)?));
    Ok(p)
}

/// Moment coefficients a_0..a_{n+2} before truncation, with the free constants
/// from `spec` (or the defaults). The last two entries vanish.
pub fn build_extended(spec: &FamilySpec, seq: &MomentSequence) -> Result<Vec<Scalar>> {
    spec.validate()?;
    let one = Scalar::one();
    let n = spec.n;
    match spec.family {
        Family::Laguerre => laguerre_series(seq, n, &spec.alpha, spec.a0.as_ref().unwrap_or(&one)),
        Family::Hermite => {
            let zero = Scalar::zero();
            let (a0, a1) = if n % 2 == 0 {
                (spec.a0.clone().unwrap_or(one), zero)
            } else {
                (zero, spec.a1.clone().unwrap_or(one))
            };
            hermite_series(seq, n, &a0, &a1)
        }
        Family::Jacobi => match (&spec.a0, &spec.a1) {
            (None, None) => jacobi_extended(seq, spec, Some(&one), None)
                .or_else(|_| jacobi_extended(seq, spec, None, Some(&one))),
            (a0, a1) => jacobi_extended(seq, spec, a0.as_ref(), a1.as_ref()),
        },
        Family::Bessel => {
            let mut a = bessel_series(seq, n, spec.a0.as_ref().unwrap_or(&one))?;
            a.resize(n + 3, Scalar::zero());
            Ok(a)
        }
    }
}

/// Builds the family polynomial for `spec`. Unspecified free constants
/// default to 1: a_0 for Laguerre, Bessel and even Hermite; a_1 for odd
/// Hermite; for Jacobi a_0 = 1 when the degree allows it, otherwise a_1 = 1.
pub fn build(spec: &FamilySpec, seq: &MomentSequence) -> Result<MomentPolynomial> {
    spec.validate()?;
    let one = Scalar::one();
    let n = spec.n;
    match spec.family {
        Family::Laguerre => build_laguerre(seq, n, &spec.alpha, spec.a0.as_ref().unwrap_or(&one)),
        Family::Hermite => {
            let (a0, a1) = match (&spec.a0, &spec.a1) {
                (None, None) if n % 2 == 0 => (Some(&one), None),
                (None, None) => (None, Some(&one)),
                (a0, a1) => (a0.as_ref(), a1.as_ref()),
            };
            build_hermite(seq, n, a0, a1)
        }
        Family::Jacobi => finish(seq, build_extended(spec, seq)?, n),
        Family::Bessel => build_bessel(seq, n, spec.a0.as_ref().unwrap_or(&one)),
    }
}

/// Closed product formulas for the coefficients, returned as monomial-basis
/// coefficients. Independent of the recursions above except for the shared
/// eigenvalue.
pub mod closed_form {
    use super::*;

    pub(crate) fn agrees(p: &MomentPolynomial, closed: &StandardPolynomial) -> bool {
        let Ok(rec) = p.to_standard() else { return false };
        if rec.is_exact() && closed.is_exact() {
            return &rec == closed;
        }
        let scale = rec.max_abs_coeff().max(closed.max_abs_coeff());
        let len = rec.coeffs().len().max(closed.coeffs().len());
        (0..len).all(|i| (rec.coeff(i).to_f64() - closed.coeff(i).to_f64()).abs() <= 1e-12 * scale)
    }

    /// a_p = −m(p)λ/(m(1)(α+1)) a_0 Π_{j=1}^{p−1} (r_j − λ)/(r_{j+1}(r_j + α + 1)).
    pub fn laguerre(seq: &MomentSequence, n: usize, alpha: &Scalar, a0: &Scalar) -> Result<StandardPolynomial> {
        let lambda = eigenvalue(&FamilySpec::laguerre(n, alpha.clone()), seq)?;
        let alpha1 = alpha + Scalar::one();
        let lead = -(&lambda / (seq.moment(1)? * &alpha1)) * a0;
        let mut a = vec![a0.clone(), -(&lambda / &alpha1) * a0];
        for p in 2..=n {
            let mut prod = Scalar::one();
            for j in 1..p {
                let r = seq.ratio(j)?;
                prod *= &((&r - &lambda) / (seq.ratio(j + 1)? * (&r + &alpha1)));
            }
            a.push(seq.moment(p)? * &lead * prod);
        }
        MomentPolynomial::new(seq.clone(), a).to_standard()
    }

    /// Even: a_{2k} = −m(2k)λa_0/m(2) Π_{j=1}^{k−1} m(2j)(2r_{2j} − λ)/m(2j+2).
    /// Odd:  a_{2k+1} = m(2k+1)a_1/m(1) Π_{j=0}^{k−1} m(2j+1)(2r_{2j+1} − λ)/m(2j+3).
    pub fn hermite(seq: &MomentSequence, n: usize, a0: &Scalar, a1: &Scalar) -> Result<StandardPolynomial> {
        let lambda = eigenvalue(&FamilySpec::hermite(n), seq)?;
        let two = Scalar::int(2);
        let mut a = vec![Scalar::zero(); n + 1];
        if n % 2 == 0 {
            a[0] = a0.clone();
            for k in 1..=n / 2 {
                let mut prod = Scalar::one();
                for j in 1..k {
                    prod *= &(seq.moment(2 * j)? * (&two * seq.ratio(2 * j)? - &lambda) / seq.moment(2 * j + 2)?);
                }
                a[2 * k] = -(seq.moment(2 * k)? * &lambda * a0 / seq.moment(2)?) * prod;
            }
        } else {
            a[1] = a1.clone();
            for k in 1..=n / 2 {
                let mut prod = Scalar::one();
                for j in 0..k {
                    prod *= &(seq.moment(2 * j + 1)? * (&two * seq.ratio(2 * j + 1)? - &lambda) / seq.moment(2 * j + 3)?);
                }
                a[2 * k + 1] = seq.moment(2 * k + 1)? * a1 / seq.moment(1)? * prod;
            }
        }
        MomentPolynomial::new(seq.clone(), a).to_standard()
    }

    /// n = 1: a_0(1 + x). n = 2: the explicit quadratic in m(1), m(2).
    /// n ≥ 3: c_p = λ(λ − 2m(1))/(4m(2)) Π_{j=2}^{p−1} (λ − r_j(r_{j−1} + 2))/(2r_{j+1}).
    pub fn bessel(seq: &MomentSequence, n: usize, a0: &Scalar) -> Result<StandardPolynomial> {
        let (m1, m2) = (seq.moment(1)?, seq.moment(2)?);
        let two = Scalar::int(2);
        let four = Scalar::int(4);
        let coeffs = match n {
            1 => vec![Scalar::one(), Scalar::one()],
            2 => {
                let s = &two + &m1;
                vec![
                    Scalar::one(),
                    &s * &m2 / (&two * &m1 * &m1),
                    &s * (-(&two * &m1 * &m1) + &s * &m2) / (&four * &m1 * &m1),
                ]
            }
            _ => {
                let lambda = eigenvalue(&FamilySpec::bessel(n), seq)?;
                let c2 = &lambda * (&lambda - &two * &m1) / (&four * &m2);
                let mut c = vec![Scalar::one(), &lambda / (&two * &m1), c2.clone()];
                for p in 3..=n {
                    let mut prod = c2.clone();
                    for j in 2..p {
                        prod *= &((&lambda - bracket(seq, j, &two)?) / (&two * seq.ratio(j + 1)?));
                    }
                    c.push(prod);
                }
                c
            }
        };
        Ok(StandardPolynomial::new(coeffs).scale(a0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn q(n: i64, d: i64) -> MomentSequence {
        MomentSequence::q_factorial(rat(n, d)).unwrap()
    }

    fn std_of(p: &MomentPolynomial) -> StandardPolynomial {
        p.to_standard().unwrap()
    }

    fn half_ints(c: &[(i64, i64)]) -> StandardPolynomial {
        StandardPolynomial::new(c.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
    }

    #[test]
    fn eigenvalue_examples() {
        let f = MomentSequence::factorial();
        for n in 1..8 {
            assert_eq!(eigenvalue(&FamilySpec::laguerre(n, Scalar::zero()), &f).unwrap(), Scalar::from(n));
        }
        let jac = FamilySpec::jacobi(2, Scalar::zero(), Scalar::zero());
        assert_eq!(eigenvalue(&jac, &f).unwrap(), Scalar::int(6));
        // classical γ(n) = n(n + α + β + 1) for every n, including n = 1
        let (a, b) = (Scalar::ratio(1, 3), Scalar::ratio(-1, 2));
        for n in 1..9 {
            let spec = FamilySpec::jacobi(n, a.clone(), b.clone());
            let gamma_n = Scalar::from(n) * (Scalar::from(n) + &a + &b + Scalar::one());
            assert_eq!(eigenvalue(&spec, &f).unwrap(), gamma_n);
        }
        assert_eq!(eigenvalue(&FamilySpec::hermite(2), &q(2, 1)).unwrap(), Scalar::int(6));
        assert!(eigenvalue(&FamilySpec::hermite(0), &f).is_err());
    }

    #[test]
    fn equation_coefficients() {
        let f = MomentSequence::factorial();
        let eq = build_equation(&FamilySpec::laguerre(3, Scalar::ratio(1, 2)), &f).unwrap();
        assert_eq!(eq.sigma, StandardPolynomial::monomial(1));
        assert_eq!(eq.tau, half_ints(&[(3, 2), (-1, 1)]));
        assert_eq!(eq.lambda, Scalar::int(3));

        let eq = build_equation(&FamilySpec::hermite(4), &f).unwrap();
        assert_eq!(eq.sigma, StandardPolynomial::from_ints(&[1]));
        assert_eq!(eq.tau, StandardPolynomial::from_ints(&[0, -2]));
        assert_eq!(eq.lambda, Scalar::int(8));

        let eq = build_equation(&FamilySpec::bessel(3), &f).unwrap();
        assert_eq!(eq.sigma, StandardPolynomial::monomial(2));
        assert_eq!(eq.tau, StandardPolynomial::from_ints(&[2, 2]));
        assert_eq!(eq.lambda, Scalar::int(-12));

        let eq = build_equation(&FamilySpec::bessel(1), &q(3, 2)).unwrap();
        assert!(eq.sigma.is_zero());
        assert_eq!(eq.lambda, Scalar::int(-1));
    }

    #[test]
    fn laguerre_examples() {
        let f = MomentSequence::factorial();
        let one = Scalar::one();
        let p = build_laguerre(&f, 2, &Scalar::zero(), &one).unwrap();
        assert_eq!(std_of(&p), half_ints(&[(1, 1), (-2, 1), (1, 2)]));
        let p = build_laguerre(&q(2, 1), 2, &Scalar::zero(), &one).unwrap();
        assert_eq!(std_of(&p), StandardPolynomial::from_ints(&[1, -3, 1]));
        let g = MomentSequence::gamma_power(rat(1, 2)).unwrap();
        for seq in [f.clone(), q(2, 1), q(1, 3), g] {
            let p = build_laguerre(&seq, 1, &Scalar::zero(), &one).unwrap();
            let s = std_of(&p);
            assert_eq!(s.coeff(0).to_f64(), 1.0);
            assert!((s.coeff(1).to_f64() + 1.0).abs() < 1e-15);
        }
        assert!(build_laguerre(&f, 2, &Scalar::int(-1), &one).is_err());
        assert!(build_laguerre(&f, 2, &Scalar::zero(), &Scalar::zero()).is_err());
    }

    #[test]
    fn hermite_examples() {
        let f = MomentSequence::factorial();
        let one = Scalar::one();
        let p = build_hermite(&f, 2, Some(&one), None).unwrap();
        assert_eq!(p.coeffs(), &[Scalar::one(), Scalar::zero(), Scalar::int(-4)]);
        assert_eq!(std_of(&p), StandardPolynomial::from_ints(&[1, 0, -2]));
        let p = build_hermite(&q(2, 1), 2, Some(&one), None).unwrap();
        assert_eq!(p.coeffs()[2], Scalar::int(-6));
        assert_eq!(std_of(&p), StandardPolynomial::from_ints(&[1, 0, -2]));
        let p = std_of(&build_hermite(&f, 3, None, Some(&one)).unwrap());
        assert_eq!(p.degree(), Some(3));
        assert!(p.coeff(0).is_zero() && p.coeff(2).is_zero());

        assert!(build_hermite(&f, 3, Some(&one), None).is_err());
        assert!(build_hermite(&f, 2, None, Some(&one)).is_err());
        assert!(build_hermite(&f, 2, Some(&one), Some(&one)).is_err());
    }

    #[test]
    fn jacobi_examples() {
        let f = MomentSequence::factorial();
        let (zero, one) = (Scalar::zero(), Scalar::one());
        let p = build_jacobi(&f, 2, &zero, &zero, Some(&one), Some(&zero)).unwrap();
        assert_eq!(std_of(&p), StandardPolynomial::from_ints(&[1, 0, -3]));
        let p = std_of(&build_jacobi(&f, 2, &one, &one, Some(&one), Some(&zero)).unwrap());
        assert_eq!(p.degree(), Some(2));
        assert!(p.coeff(1).is_zero());
        // α = β: odd n gives an odd polynomial, which needs a1
        let p = std_of(&build_jacobi(&f, 5, &Scalar::ratio(2, 3), &Scalar::ratio(2, 3), None, Some(&one)).unwrap());
        assert!((0..=5).step_by(2).all(|i| p.coeff(i).is_zero()));
        assert!(matches!(
            build_jacobi(&f, 5, &one, &one, Some(&one), None),
            Err(Error::Inconsistent(_))
        ));
        // an arbitrary pair is rejected when α ≠ β
        assert!(matches!(
            build_jacobi(&f, 3, &Scalar::ratio(1, 2), &Scalar::int(2), Some(&one), Some(&one)),
            Err(Error::Inconsistent(_))
        ));
        assert!(build_jacobi(&f, 3, &one, &one, None, None).is_err());
    }

    #[test]
    fn jacobi_solved_constant_terminates() {
        let seq = q(9, 10);
        let spec = FamilySpec::jacobi(6, Scalar::ratio(1, 1), Scalar::ratio(3, 4));
        let ext = build_extended(&spec, &seq).unwrap();
        assert!(ext[7].is_zero() && ext[8].is_zero());
        assert!(!ext[6].is_zero());
    }

    #[test]
    fn bessel_examples() {
        let f = MomentSequence::factorial();
        let one = Scalar::one();
        for seq in [f.clone(), q(2, 1), q(1, 2), MomentSequence::gamma_power(rat(3, 4)).unwrap()] {
            let p = std_of(&build_bessel(&seq, 1, &one).unwrap());
            assert_eq!(p.to_f64_vec(), vec![1.0, 1.0]);
        }
        assert_eq!(std_of(&build_bessel(&f, 2, &one).unwrap()), StandardPolynomial::from_ints(&[1, 3, 3]));
        assert_eq!(std_of(&build_bessel(&f, 3, &one).unwrap()), StandardPolynomial::from_ints(&[1, 6, 15, 15]));
    }

    #[test]
    fn closed_forms_match_recursions() {
        let seqs = [
            MomentSequence::factorial(),
            q(2, 1),
            q(9, 10),
            q(1, 2),
            MomentSequence::gamma_power(rat(1, 2)).unwrap(),
            MomentSequence::custom((0..14).map(|p: i64| Scalar::ratio(1 + p * p * p, 1 + p)).collect()).unwrap(),
        ];
        let a0 = Scalar::ratio(3, 2);
        for seq in &seqs {
            for n in 1..=10 {
                let alpha = Scalar::ratio(1, 3);
                let p = build_laguerre(seq, n, &alpha, &a0).unwrap();
                assert!(closed_form::agrees(&p, &closed_form::laguerre(seq, n, &alpha, &a0).unwrap()), "L n={n}");
                let (s0, s1) = if n % 2 == 0 { (a0.clone(), Scalar::zero()) } else { (Scalar::zero(), a0.clone()) };
                let p = build_hermite(seq, n, Some(&s0), Some(&s1)).unwrap();
                assert!(closed_form::agrees(&p, &closed_form::hermite(seq, n, &s0, &s1).unwrap()), "H n={n}");
                let p = build_bessel(seq, n, &a0).unwrap();
                assert!(closed_form::agrees(&p, &closed_form::bessel(seq, n, &a0).unwrap()), "B n={n}");
            }
        }
    }

    #[test]
    fn bessel_quadratic_display_matches_recursion_for_custom_moments() {
        // The explicit n = 2 coefficients in terms of m(1), m(2).
        let seq = MomentSequence::custom(vec![Scalar::one(), Scalar::ratio(5, 3), Scalar::ratio(7, 2), Scalar::int(11), Scalar::int(40)]).unwrap();
        let p = std_of(&build_bessel(&seq, 2, &Scalar::one()).unwrap());
        let (m1, m2) = (Scalar::ratio(5, 3), Scalar::ratio(7, 2));
        let two = Scalar::int(2);
        let c1 = (&two + &m1) * &m2 / (&two * &m1 * &m1);
        let c2 = (&two + &m1) * (&m2 * (&two + &m1) - &two * &m1 * &m1) / (Scalar::int(4) * &m1 * &m1);
        assert_eq!(p, StandardPolynomial::new(vec![Scalar::one(), c1, c2]));
    }

    #[test]
    fn custom_table_length_requirement() {
        // recursions reach m(n+1); a table of n+2 entries is enough, n+1 is not
        let table: Vec<Scalar> = [1, 2, 5, 9, 30, 70].iter().map(|&v| Scalar::int(v)).collect();
        let seq = MomentSequence::custom(table.clone()).unwrap();
        assert!(build_laguerre(&seq, 4, &Scalar::zero(), &Scalar::one()).is_ok());
        let short = MomentSequence::custom(table[..5].to_vec()).unwrap();
        assert!(matches!(
            build_laguerre(&short, 4, &Scalar::zero(), &Scalar::one()),
            Err(Error::OutOfRange { .. })
        ));
    }
}
