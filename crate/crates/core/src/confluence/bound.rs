//! Coefficient bound on the distance between the roots of two monic
//! polynomials of equal degree, and its closed form for the q-Laguerre
//! polynomials against the classical ones.
//!
//! For f(z) = zⁿ + a₁zⁿ⁻¹ + … + aₙ and g(z) = zⁿ + b₁zⁿ⁻¹ + … + bₙ the roots
//! can be paired so that every pair is within
//! 2^{2−1/n} (Σ_k |a_k − b_k| γ^{n−k})^{1/n},  γ = 2 max_k(|a_k|^{1/k}, |b_k|^{1/k}).

use num::complex::Complex64;
use num::BigRational;

use super::roots::{find_roots, root_match};
use crate::error::{Error, Result};
use crate::poly::StandardPolynomial;
use crate::scalar::Scalar;
use crate::special::q_number;

/// Relative slack when comparing the matched distance to the bound.
const HOLDS_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub degree: usize,
    pub roots_f: Vec<Complex64>,
    pub roots_g: Vec<Complex64>,
    pub matched_distance: f64,
    pub bound: f64,
    pub gamma: f64,
    /// |a_k − b_k| for k = 1..=n.
    pub coefficient_differences: Vec<f64>,
    /// Leading coefficients divided out before the comparison.
    pub leading_f: f64,
    pub leading_g: f64,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.matched_distance <= self.bound * (1.0 + HOLDS_SLACK) + HOLDS_SLACK
    }
}

/// a_k = c_{n−k}/c_n for k = 1..=n, computed in scalar arithmetic.
fn monic_tail(p: &StandardPolynomial) -> Result<Vec<f64>> {
    let n = p.degree().ok_or_else(|| Error::InvalidParameter("zero polynomial".into()))?;
    let lead = p.coeff(n);
    Ok((1..=n).map(|k| (p.coeff(n - k) / &lead).to_f64()).collect())
}

/// (bound, γ, |a_k − b_k|) for monic coefficient tails a_1..a_n, b_1..b_n.
pub fn perturbation_bound(a: &[f64], b: &[f64]) -> Result<(f64, f64, Vec<f64>)> {
    if a.len() != b.len() {
        return Err(Error::DegreeMismatch(a.len(), b.len()));
    }
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let root_k = |v: f64, k: usize| v.abs().powf(1.0 / k as f64);
    let gamma = 2.0
        * (1..=n)
            .map(|k| root_k(a[k - 1], k).max(root_k(b[k - 1], k)))
            .fold(0.0_f64, f64::max);
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| (x - y).abs()).collect();
    let sum: f64 = diffs.iter().enumerate().map(|(i, d)| d * gamma.powi((n - i - 1) as i32)).sum();
    let nf = n as f64;
    Ok((2f64.powf(2.0 - 1.0 / nf) * sum.powf(1.0 / nf), gamma, diffs))
}

/// Compares the roots of `f` and `g` (same degree ≥ 1) with the bound,
/// after dividing both by their leading coefficients.
pub fn root_bound(f: &StandardPolynomial, g: &StandardPolynomial) -> Result<BoundReport> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if df != dg {
        return Err(Error::DegreeMismatch(df, dg));
    }
    if df == 0 {
        return Err(Error::InvalidParameter("root bound needs degree at least 1".into()));
    }
    let (a, b) = (monic_tail(f)?, monic_tail(g)?);
    let (bound, gamma, coefficient_differences) = perturbation_bound(&a, &b)?;
    let (rf, rg) = (find_roots(f)?, find_roots(g)?);
    let matched_distance = root_match(&rf, &rg)?;
    Ok(BoundReport {
        degree: df,
        roots_f: rf.roots,
        roots_g: rg.roots,
        matched_distance,
        bound,
        gamma,
        coefficient_differences,
        leading_f: f.coeff(df).to_f64(),
        leading_g: g.coeff(dg).to_f64(),
    })
}

/// The bound for the q-Laguerre polynomial (α = 0) of degree n against the
/// classical Laguerre polynomial, from the explicit monic coefficients
///
/// A_k = Π_{j=n−k}^{n−1} [j+1]_q([j]_q + 1)/([j]_q − [n]_q),
/// B_k = (−1)^k (n!)² / (k! ((n−k)!)²).
pub fn q_laguerre_bound(n: usize, q: &BigRational) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let q = Scalar::Exact(q.clone());
    let qn = q_number(&q, n)?;
    let one = Scalar::one();
    let mut a = Vec::with_capacity(n);
    let mut prod = Scalar::one();
    for k in 1..=n {
        let j = n - k;
        let qj = q_number(&q, j)?;
        prod *= &(q_number(&q, j + 1)? * (&qj + &one) / (&qj - &qn));
        a.push(prod.to_f64());
    }
    let fact = |m: usize| -> Scalar { (1..=m).map(Scalar::from).product() };
    let b: Vec<f64> = (1..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
            (sign * fact(n).powi(2) / (fact(k) * fact(n - k).powi(2))).to_f64()
        })
        .collect();
    Ok(perturbation_bound(&a, &b)?.0)
}
