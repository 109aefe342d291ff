//! Classical Laguerre, Hermite, Jacobi and Bessel polynomials, used as
//! oracles for the moment analogs, and the classical differential equations
//! they satisfy.

use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::poly::StandardPolynomial;
use crate::scalar::Scalar;

/// Argument substitution t(x) applied to a hypergeometric series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Argument {
    /// t = x
    Identity,
    /// t = (1 − x)/2
    HalfOneMinus,
    /// t = x²
    Square,
    /// t = −x/2
    MinusHalf,
}

impl Argument {
    pub fn polynomial(self) -> StandardPolynomial {
        match self {
            Argument::Identity => StandardPolynomial::monomial(1),
            Argument::HalfOneMinus => StandardPolynomial::new(vec![Scalar::ratio(1, 2), Scalar::ratio(-1, 2)]),
            Argument::Square => StandardPolynomial::monomial(2),
            Argument::MinusHalf => StandardPolynomial::new(vec![Scalar::zero(), Scalar::ratio(-1, 2)]),
        }
    }
}

/// A terminating series pFq(upper; lower; t(x)).
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec {
    pub upper: Vec<Scalar>,
    pub lower: Vec<Scalar>,
    pub argument: Argument,
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<Scalar>, lower: Vec<Scalar>, argument: Argument) -> Self {
        HypergeometricSpec { upper, lower, argument }
    }

    /// Index n of the last term: the smallest n with −n among the upper
    /// parameters.
    pub fn termination(&self) -> Result<usize> {
        self.upper
            .iter()
            .filter_map(|u| u.to_integer().filter(|&k| k <= 0 && u.is_exact()))
            .map(|k| k.unsigned_abs() as usize)
            .min()
            .ok_or_else(|| Error::InvalidParameter("no nonpositive integer upper parameter; series does not terminate".into()))
    }

    /// Coefficients of the series in powers of t.
    pub fn coefficients(&self) -> Result<StandardPolynomial> {
        let n = self.termination()?;
        let mut term = Scalar::one();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(term.clone());
        for k in 0..n {
            let kk = Scalar::from(k);
            let mut den = Scalar::from(k + 1);
            for l in &self.lower {
                let shifted = l + &kk;
                if shifted.is_zero() {
                    return Err(Error::Domain(format!("lower parameter {l} hits a pole at term {}", k + 1)));
                }
                den *= &shifted;
            }
            let num: Scalar = self.upper.iter().map(|u| u + &kk).product();
            term = term * num / den;
            coeffs.push(term.clone());
        }
        Ok(StandardPolynomial::new(coeffs))
    }

    /// The series as a polynomial in x.
    pub fn polynomial(&self) -> Result<StandardPolynomial> {
        Ok(self.coefficients()?.compose(&self.argument.polynomial()))
    }
}

/// Σ_k Π(upper)_k / Π(lower)_k · t^k / k! at t = t(x).
pub fn hyp_terminating(spec: &HypergeometricSpec, x: &Scalar) -> Result<Scalar> {
    let t = spec.argument.polynomial().evaluate_at(x);
    Ok(spec.coefficients()?.evaluate_at(&t))
}

/// L_n^(α) scaled to constant term 1: ₁F₁(−n; α+1; x).
pub fn classical_laguerre(n: usize, alpha: &Scalar) -> Result<StandardPolynomial> {
    HypergeometricSpec::new(vec![-Scalar::from(n)], vec![alpha + Scalar::one()], Argument::Identity).polynomial()
}

/// Physicists' H_n from H_{k+1} = 2xH_k − 2kH_{k−1}.
pub fn classical_hermite(n: usize) -> StandardPolynomial {
    let two_x = StandardPolynomial::from_ints(&[0, 2]);
    let mut prev = StandardPolynomial::from_ints(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&Scalar::from(2 * k));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// ₂F₁(−n, n+1+α+β; 1+α; (1−x)/2), which takes the value 1 at x = 1.
pub fn classical_jacobi(n: usize, alpha: &Scalar, beta: &Scalar) -> Result<StandardPolynomial> {
    let spec = HypergeometricSpec::new(
        vec![-Scalar::from(n), Scalar::from(n + 1) + alpha + beta],
        vec![Scalar::one() + alpha],
        Argument::HalfOneMinus,
    );
    // Σ d_k t^k with t = −(x − 1)/2: rescale to powers of u = x − 1, then
    // shift back to powers of x.
    let half = Scalar::ratio(-1, 2);
    let in_u: Vec<Scalar> = spec
        .coefficients()?
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, d)| d * half.powi(k as u32))
        .collect();
    Ok(StandardPolynomial::new(in_u).recenter(&Scalar::int(-1)))
}

/// Bessel polynomial y_n = ₂F₀(−n, n+1; ; −x/2).
pub fn classical_bessel(n: usize) -> Result<StandardPolynomial> {
    HypergeometricSpec::new(vec![-Scalar::from(n), Scalar::from(n + 1)], vec![], Argument::MinusHalf).polynomial()
}

/// Classical counterpart of a family spec (parameters taken from `spec`).
pub fn classical(spec: &FamilySpec) -> Result<StandardPolynomial> {
    match spec.family {
        Family::Laguerre => classical_laguerre(spec.n, &spec.alpha),
        Family::Hermite => Ok(classical_hermite(spec.n)),
        Family::Jacobi => classical_jacobi(spec.n, &spec.alpha, &spec.beta),
        Family::Bessel => classical_bessel(spec.n),
    }
}

/// σy'' + τy' + λy for the classical equation of the family:
///
/// * Laguerre: x y'' + (α + 1 − x) y' + n y
/// * Hermite:  y'' − 2x y' + 2n y
/// * Jacobi:   (1 − x²) y'' + (β − α − (α + β + 2)x) y' + n(n + α + β + 1) y
/// * Bessel:   x² y'' + 2(x + 1) y' − n(n + 1) y
pub fn classical_residual(
    family: Family,
    n: usize,
    alpha: &Scalar,
    beta: &Scalar,
    p: &StandardPolynomial,
) -> StandardPolynomial {
    let nn = Scalar::from(n);
    let one = Scalar::one();
    let (sigma, tau, lambda) = match family {
        Family::Laguerre => (
            StandardPolynomial::monomial(1),
            StandardPolynomial::new(vec![alpha + &one, -one.clone()]),
            nn,
        ),
        Family::Hermite => (
            StandardPolynomial::from_ints(&[1]),
            StandardPolynomial::from_ints(&[0, -2]),
            Scalar::int(2) * nn,
        ),
        Family::Jacobi => {
            let s = alpha + beta;
            (
                StandardPolynomial::from_ints(&[1, 0, -1]),
                StandardPolynomial::new(vec![beta - alpha, -(&s + Scalar::int(2))]),
                &nn * (&nn + &s + &one),
            )
        }
        Family::Bessel => (
            StandardPolynomial::monomial(2),
            StandardPolynomial::from_ints(&[2, 2]),
            -(&nn * (&nn + &one)),
        ),
    };
    let d1 = p.derivative();
    let d2 = d1.derivative();
    &(&(&sigma * &d2) + &(&tau * &d1)) + &p.scale(&lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergeometric_examples() {
        let f11 = HypergeometricSpec::new(vec![Scalar::int(-1)], vec![Scalar::one()], Argument::Identity);
        assert_eq!(f11.polynomial().unwrap(), StandardPolynomial::from_ints(&[1, -1]));
        let f21 = HypergeometricSpec::new(vec![Scalar::int(-2), Scalar::int(3)], vec![Scalar::one()], Argument::Identity);
        assert_eq!(f21.coefficients().unwrap(), StandardPolynomial::from_ints(&[1, -6, 6]));
        let f20 = HypergeometricSpec::new(vec![Scalar::int(-1), Scalar::int(2)], vec![], Argument::MinusHalf);
        assert_eq!(f20.polynomial().unwrap(), StandardPolynomial::from_ints(&[1, 1]));
        assert_eq!(hyp_terminating(&f21, &Scalar::ratio(1, 2)).unwrap(), Scalar::ratio(-1, 2));
        let sq = HypergeometricSpec::new(vec![Scalar::int(-1)], vec![Scalar::ratio(1, 2)], Argument::Square);
        assert_eq!(sq.polynomial().unwrap(), StandardPolynomial::from_ints(&[1, 0, -2]));
    }

    #[test]
    fn hypergeometric_errors() {
        let no_stop = HypergeometricSpec::new(vec![Scalar::ratio(1, 2)], vec![Scalar::one()], Argument::Identity);
        assert!(no_stop.coefficients().is_err());
        let pole = HypergeometricSpec::new(vec![Scalar::int(-3)], vec![Scalar::int(-1)], Argument::Identity);
        assert!(matches!(pole.coefficients(), Err(Error::Domain(_))));
        // pole past the termination index is harmless
        let late = HypergeometricSpec::new(vec![Scalar::int(-1)], vec![Scalar::int(-1)], Argument::Identity);
        assert_eq!(late.polynomial().unwrap(), StandardPolynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn term_ratios_follow_pochhammer_recurrence() {
        let (a, b, c) = (Scalar::int(-6), Scalar::ratio(7, 3), Scalar::ratio(5, 4));
        let spec = HypergeometricSpec::new(vec![a.clone(), b.clone()], vec![c.clone()], Argument::Identity);
        let t = spec.coefficients().unwrap();
        assert_eq!(t.coeffs().len(), 7);
        for k in 0..6 {
            let kk = Scalar::from(k);
            let expected = (&a + &kk) * (&b + &kk) / ((&c + &kk) * Scalar::from(k + 1));
            assert_eq!(t.coeff(k + 1) / t.coeff(k), expected);
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(classical_laguerre(1, &Scalar::zero()).unwrap(), StandardPolynomial::from_ints(&[1, -1]));
        assert_eq!(
            classical_laguerre(2, &Scalar::zero()).unwrap(),
            StandardPolynomial::new(vec![Scalar::one(), Scalar::int(-2), Scalar::ratio(1, 2)])
        );
        assert_eq!(classical_laguerre(0, &Scalar::ratio(3, 2)).unwrap(), StandardPolynomial::from_ints(&[1]));
        assert_eq!(classical_hermite(1), StandardPolynomial::from_ints(&[0, 2]));
        assert_eq!(classical_hermite(2), StandardPolynomial::from_ints(&[-2, 0, 4]));
        assert_eq!(classical_hermite(3), StandardPolynomial::from_ints(&[0, -12, 0, 8]));
        assert_eq!(
            classical_jacobi(2, &Scalar::zero(), &Scalar::zero()).unwrap(),
            StandardPolynomial::new(vec![Scalar::ratio(-1, 2), Scalar::zero(), Scalar::ratio(3, 2)])
        );
        assert_eq!(classical_jacobi(0, &Scalar::one(), &Scalar::int(2)).unwrap(), StandardPolynomial::from_ints(&[1]));
        assert_eq!(classical_bessel(1).unwrap(), StandardPolynomial::from_ints(&[1, 1]));
        assert_eq!(classical_bessel(2).unwrap(), StandardPolynomial::from_ints(&[1, 3, 3]));
        assert_eq!(classical_bessel(3).unwrap(), StandardPolynomial::from_ints(&[1, 6, 15, 15]));
    }

    #[test]
    fn jacobi_value_at_one() {
        for n in 0..8 {
            let p = classical_jacobi(n, &Scalar::ratio(1, 3), &Scalar::ratio(-1, 2)).unwrap();
            assert_eq!(p.evaluate_at(&Scalar::one()), Scalar::one());
        }
    }

    #[test]
    fn jacobi_composition_matches_recentering() {
        let (a, b) = (Scalar::ratio(2, 5), Scalar::ratio(7, 3));
        for n in 0..9 {
            let spec = HypergeometricSpec::new(
                vec![-Scalar::from(n), Scalar::from(n + 1) + &a + &b],
                vec![Scalar::one() + &a],
                Argument::HalfOneMinus,
            );
            assert_eq!(spec.polynomial().unwrap(), classical_jacobi(n, &a, &b).unwrap());
        }
    }

    #[test]
    fn oracles_satisfy_classical_equations() {
        let params = [
            (Scalar::zero(), Scalar::zero()),
            (Scalar::ratio(1, 2), Scalar::ratio(-1, 3)),
            (Scalar::ratio(-9, 10), Scalar::int(3)),
        ];
        for n in 0..=12 {
            for (a, b) in &params {
                let l = classical_laguerre(n, a).unwrap();
                assert!(classical_residual(Family::Laguerre, n, a, b, &l).is_zero(), "L n={n}");
                let j = classical_jacobi(n, a, b).unwrap();
                assert!(classical_residual(Family::Jacobi, n, a, b, &j).is_zero(), "J n={n}");
            }
            let (z, z2) = (Scalar::zero(), Scalar::zero());
            assert!(classical_residual(Family::Hermite, n, &z, &z2, &classical_hermite(n)).is_zero(), "H n={n}");
            let y = classical_bessel(n).unwrap();
            assert!(classical_residual(Family::Bessel, n, &z, &z2, &y).is_zero(), "B n={n}");
        }
        assert!(classical_residual(Family::Hermite, 3, &Scalar::zero(), &Scalar::zero(), &StandardPolynomial::zero()).is_zero());
        // a wrong degree leaves a residual
        let l2 = classical_laguerre(2, &Scalar::zero()).unwrap();
        assert!(!classical_residual(Family::Laguerre, 3, &Scalar::zero(), &Scalar::zero(), &l2).is_zero());
    }
}
