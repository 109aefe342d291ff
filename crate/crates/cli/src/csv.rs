//! CSV emitters. Floats use 17 significant digits, exact values `p/q`.

use std::fmt::Write;

use momentpoly::confluence::SweepResult;
use momentpoly::{MomentPolynomial, Scalar, StandardPolynomial};

pub const SWEEP_HEADER: &str = "family,seq_kind,param,n,x,y_generalized,y_classical,abs_diff";

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn scalar(s: &Scalar) -> String {
    match s {
        Scalar::Exact(r) => r.to_string(),
        Scalar::Float(x) => float(*x),
    }
}

pub fn sweep(r: &SweepResult) -> String {
    let mut out = String::with_capacity(r.rows.len() * r.xs.len() * 96);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in &r.rows {
        for (i, &x) in r.xs.iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.spec.family,
                r.kind,
                row.param,
                r.spec.n,
                float(x),
                float(row.values[i]),
                float(r.classical_values[i]),
                float(row.abs_diff[i]),
            )
            .expect("writing to a String");
        }
    }
    out
}

/// `p,moment,standard` per power.
pub fn coefficients(y: &MomentPolynomial, standard: &StandardPolynomial) -> String {
    let mut out = String::from("p,moment,standard\n");
    let len = y.coeffs().len().max(standard.coeffs().len());
    for p in 0..len {
        writeln!(out, "{p},{},{}", scalar(&y.coeff(p)), scalar(&standard.coeff(p))).expect("writing to a String");
    }
    out
}
