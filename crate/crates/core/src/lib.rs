//! Moment-derivative generalizations of the classical orthogonal polynomials.
//!
//! A moment sequence m(p) defines the derivative ∂_m x^p = (m(p)/m(p−1)) x^{p−1}.
//! The factorial sequence gives d/dx, Γ(1 + pμ) the Caputo derivative of
//! order μ (acting in x^μ) and [p]_q! the Jackson q-derivative.

pub mod calculus;
pub mod classical;
pub mod confluence;
pub mod error;
pub mod families;
pub mod grid;
pub mod poly;
pub mod scalar;
pub mod sequence;
pub mod serial;
pub mod special;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use poly::{MomentEquation, MomentPolynomial, StandardPolynomial};
pub use scalar::{Mode, Scalar};
pub use sequence::{MomentSequence, SequenceKind};
