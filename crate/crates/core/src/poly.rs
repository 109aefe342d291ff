//! Polynomials in the monomial basis and in the moment basis x^p/m(p), the
//! moment derivative ∂_m, and moment differential equations
//! σ·∂_m²y + τ·∂_m y + λ·y = 0.

use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::MomentSequence;

fn trim(coeffs: &mut Vec<Scalar>) {
    while coeffs.last().is_some_and(Scalar::is_zero) {
        coeffs.pop();
    }
}

/// Polynomial Σ c_p x^p. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardPolynomial {
    coeffs: Vec<Scalar>,
}

impl StandardPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        trim(&mut coeffs);
        StandardPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        StandardPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Scalar::int(c)).collect())
    }

    /// x^k.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Scalar::zero(); k + 1];
        c[k] = Scalar::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_exact)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }

    pub fn to_float(&self) -> Self {
        Self::new(self.coeffs.iter().map(Scalar::to_float).collect())
    }

    /// max_p |c_p| as a float; 0 for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Classical derivative d/dx.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(p, c)| c * Scalar::from(p))
                .collect(),
        )
    }

    /// Horner evaluation in `f64`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// Horner evaluation in scalar arithmetic; exact for exact inputs.
    pub fn evaluate_at(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Σ |c_p| |x|^p, the magnitude scale of an evaluation at x.
    pub fn evaluate_abs(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * ax + c.to_f64().abs())
    }

    /// Σ c_ν x^{μν} for x ≥ 0.
    pub fn evaluate_fractional(&self, mu: &BigRational, x: f64) -> Result<f64> {
        if x < 0.0 || x.is_nan() {
            return Err(Error::Domain(format!("fractional evaluation needs x >= 0, got {x}")));
        }
        if !mu.is_positive() {
            return Err(Error::Domain(format!("mu must be positive, got {mu}")));
        }
        let t = if mu.is_integer() {
            x.powi(mu.to_integer().to_i32().unwrap_or(i32::MAX))
        } else {
            x.powf(mu.to_f64().unwrap_or(f64::NAN))
        };
        Ok(self.evaluate(t))
    }

    /// Coefficients of the same polynomial in powers of (x − c).
    pub fn recenter(&self, c: &Scalar) -> Self {
        // Repeated synthetic division by (x − c) (Taylor shift).
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += &t;
            }
        }
        Self::new(a)
    }

    /// p(x) ↦ p(r(x)) for another polynomial r.
    pub fn compose(&self, inner: &StandardPolynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(StandardPolynomial::zero(), |acc, c| &(&acc * inner) + &StandardPolynomial::constant(c.clone()))
    }
}

impl Add for &StandardPolynomial {
    type Output = StandardPolynomial;
    fn add(self, rhs: &StandardPolynomial) -> StandardPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        StandardPolynomial::new((0..len).map(|p| self.coeff(p) + rhs.coeff(p)).collect())
    }
}

impl Sub for &StandardPolynomial {
    type Output = StandardPolynomial;
    fn sub(self, rhs: &StandardPolynomial) -> StandardPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        StandardPolynomial::new((0..len).map(|p| self.coeff(p) - rhs.coeff(p)).collect())
    }
}

impl Mul for &StandardPolynomial {
    type Output = StandardPolynomial;
    fn mul(self, rhs: &StandardPolynomial) -> StandardPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return StandardPolynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        StandardPolynomial::new(out)
    }
}

impl Neg for &StandardPolynomial {
    type Output = StandardPolynomial;
    fn neg(self) -> StandardPolynomial {
        StandardPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Polynomial Σ a_p x^p/m(p) tied to a moment sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentPolynomial {
    seq: MomentSequence,
    coeffs: Vec<Scalar>,
}

impl MomentPolynomial {
    pub fn new(seq: MomentSequence, mut coeffs: Vec<Scalar>) -> Self {
        trim(&mut coeffs);
        MomentPolynomial { seq, coeffs }
    }

    pub fn zero(seq: MomentSequence) -> Self {
        Self::new(seq, Vec::new())
    }

    /// a_p = c_p · m(p).
    pub fn from_standard(p: &StandardPolynomial, seq: MomentSequence) -> Result<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| Ok(c * seq.moment(i)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(seq, coeffs))
    }

    pub fn sequence(&self) -> &MomentSequence {
        &self.seq
    }

    /// Moment-basis coefficients a_0..a_n.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// max_p |a_p| as a float.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.seq.clone(), self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Linear combination `alpha·self + beta·other` over the same sequence.
    pub fn combine(&self, alpha: &Scalar, other: &MomentPolynomial, beta: &Scalar) -> Result<Self> {
        if self.seq != other.seq {
            return Err(Error::SequenceMismatch);
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            self.seq.clone(),
            (0..len).map(|p| alpha * self.coeff(p) + beta * other.coeff(p)).collect(),
        ))
    }

    /// ∂_m: Σ a_p x^p/m(p) ↦ Σ a_{p+1} x^p/m(p).
    pub fn moment_derivative(&self) -> Self {
        Self::new(self.seq.clone(), self.coeffs.iter().skip(1).cloned().collect())
    }

    /// c_p = a_p/m(p).
    pub fn to_standard(&self) -> Result<StandardPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(p, a)| Ok(a / self.seq.moment(p)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(StandardPolynomial::new(coeffs))
    }
}

/// σ·∂_m²y + τ·∂_m y + λ·y = 0 with deg σ ≤ 2 and deg τ ≤ 1.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentEquation {
    pub sigma: StandardPolynomial,
    pub tau: StandardPolynomial,
    pub lambda: Scalar,
    pub seq: MomentSequence,
}

impl MomentEquation {
    pub fn new(
        sigma: StandardPolynomial,
        tau: StandardPolynomial,
        lambda: Scalar,
        seq: MomentSequence,
    ) -> Result<Self> {
        if sigma.degree().unwrap_or(0) > 2 || tau.degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidParameter("need deg sigma <= 2 and deg tau <= 1".into()));
        }
        Ok(MomentEquation { sigma, tau, lambda, seq })
    }

    /// The left-hand side applied to `y`; the zero polynomial iff `y` solves
    /// the equation. Products with σ and τ are formed in the monomial basis.
    pub fn apply(&self, y: &MomentPolynomial) -> Result<MomentPolynomial> {
        if y.seq != self.seq {
            return Err(Error::SequenceMismatch);
        }
        let d1 = y.moment_derivative();
        let d2 = d1.moment_derivative();
        let lhs = &(&(&self.sigma * &d2.to_standard()?) + &(&self.tau * &d1.to_standard()?))
            + &y.to_standard()?.scale(&self.lambda);
        MomentPolynomial::from_standard(&lhs, self.seq.clone())
    }
}

/// Free-function form of [`MomentEquation::apply`].
pub fn apply_equation(eq: &MomentEquation, y: &MomentPolynomial) -> Result<MomentPolynomial> {
    eq.apply(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn std_poly(c: &[(i64, i64)]) -> StandardPolynomial {
        StandardPolynomial::new(c.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
    }

    #[test]
    fn moment_derivative_examples() {
        let f = MomentSequence::factorial();
        let constant = MomentPolynomial::from_standard(&StandardPolynomial::from_ints(&[5]), f.clone()).unwrap();
        assert!(constant.moment_derivative().is_zero());

        let cube = MomentPolynomial::from_standard(&StandardPolynomial::monomial(3), f.clone()).unwrap();
        assert_eq!(
            cube.moment_derivative().to_standard().unwrap(),
            StandardPolynomial::from_ints(&[0, 0, 3])
        );

        let q2 = MomentSequence::q_factorial(rat(2, 1)).unwrap();
        let sq = MomentPolynomial::from_standard(&StandardPolynomial::monomial(2), q2).unwrap();
        assert_eq!(
            sq.moment_derivative().to_standard().unwrap(),
            StandardPolynomial::from_ints(&[0, 3])
        );
    }

    #[test]
    fn to_standard_examples() {
        let f = MomentSequence::factorial();
        let q2 = MomentSequence::q_factorial(rat(2, 1)).unwrap();
        let g = MomentSequence::gamma_power(rat(1, 3)).unwrap();
        for seq in [f.clone(), q2.clone(), g] {
            let p = MomentPolynomial::new(seq, vec![Scalar::one()]);
            assert_eq!(p.to_standard().unwrap().coeffs()[0].to_f64(), 1.0);
        }
        let p = MomentPolynomial::new(f, vec![Scalar::zero(), Scalar::zero(), Scalar::int(-4)]);
        assert_eq!(p.to_standard().unwrap(), StandardPolynomial::from_ints(&[0, 0, -2]));
        let p = MomentPolynomial::new(q2, vec![Scalar::one(), Scalar::int(-3)]);
        assert_eq!(p.to_standard().unwrap(), StandardPolynomial::from_ints(&[1, -3]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(StandardPolynomial::from_ints(&[1, -1]).evaluate(1.0), 0.0);
        assert_eq!(std_poly(&[(1, 1), (-2, 1), (1, 2)]).evaluate(0.0), 1.0);
        assert_eq!(StandardPolynomial::from_ints(&[1, 3, 3]).evaluate(1.0), 7.0);
        let p = std_poly(&[(1, 1), (-2, 1), (1, 2)]);
        assert_eq!(p.evaluate_at(&Scalar::ratio(1, 3)), Scalar::ratio(7, 18));
    }

    #[test]
    fn evaluate_fractional_examples() {
        let p = StandardPolynomial::from_ints(&[0, 1]);
        assert_eq!(p.evaluate_fractional(&rat(1, 2), 4.0).unwrap(), 2.0);
        let q = StandardPolynomial::from_ints(&[3, -2, 5]);
        assert_eq!(q.evaluate_fractional(&rat(2, 3), 0.0).unwrap(), 3.0);
        for x in [0.0, 0.3, 1.7, 4.0] {
            assert_eq!(q.evaluate_fractional(&rat(1, 1), x).unwrap(), q.evaluate(x));
        }
        assert!(q.evaluate_fractional(&rat(1, 2), -1.0).is_err());
    }

    #[test]
    fn recenter_examples() {
        let one = Scalar::one();
        assert_eq!(StandardPolynomial::monomial(2).recenter(&one), StandardPolynomial::from_ints(&[1, 2, 1]));
        assert_eq!(StandardPolynomial::from_ints(&[7]).recenter(&Scalar::int(5)), StandardPolynomial::from_ints(&[7]));
        assert_eq!(StandardPolynomial::monomial(3).recenter(&one), StandardPolynomial::from_ints(&[1, 3, 3, 1]));
        let p = std_poly(&[(2, 3), (-1, 1), (0, 1), (5, 4), (1, 7)]);
        let c = Scalar::ratio(-3, 2);
        let shifted = p.recenter(&c);
        // shifted is a polynomial in u = x − c; substituting u = x + c restores p.
        assert_eq!(shifted.recenter(&-&c), p);
        let x = Scalar::ratio(5, 11);
        assert_eq!(p.evaluate_at(&x), shifted.evaluate_at(&(&x - &c)));
    }

    #[test]
    fn apply_equation_examples() {
        let f = MomentSequence::factorial();
        // x y'' + (1 − x) y' + 1·y applied to 1 − x.
        let eq = MomentEquation::new(
            StandardPolynomial::from_ints(&[0, 1]),
            StandardPolynomial::from_ints(&[1, -1]),
            Scalar::one(),
            f.clone(),
        )
        .unwrap();
        let y = MomentPolynomial::from_standard(&StandardPolynomial::from_ints(&[1, -1]), f.clone()).unwrap();
        assert!(eq.apply(&y).unwrap().is_zero());
        assert!(eq.apply(&MomentPolynomial::zero(f.clone())).unwrap().is_zero());

        // (x + 1) ∂y − m(1) y applied to a0 (1 + x) for a q-sequence.
        let q = MomentSequence::q_factorial(rat(3, 5)).unwrap();
        let eq = MomentEquation::new(
            StandardPolynomial::zero(),
            StandardPolynomial::from_ints(&[1, 1]),
            -q.moment(1).unwrap(),
            q.clone(),
        )
        .unwrap();
        let y = MomentPolynomial::from_standard(&std_poly(&[(7, 2), (7, 2)]), q.clone()).unwrap();
        assert!(eq.apply(&y).unwrap().is_zero());

        let other = MomentPolynomial::from_standard(&StandardPolynomial::from_ints(&[1]), f).unwrap();
        assert_eq!(eq.apply(&other), Err(Error::SequenceMismatch));
    }

    #[test]
    fn equation_rejects_high_degree_coefficients() {
        let f = MomentSequence::factorial();
        assert!(MomentEquation::new(StandardPolynomial::monomial(3), StandardPolynomial::zero(), Scalar::one(), f.clone()).is_err());
        assert!(MomentEquation::new(StandardPolynomial::zero(), StandardPolynomial::monomial(2), Scalar::one(), f).is_err());
    }
}
