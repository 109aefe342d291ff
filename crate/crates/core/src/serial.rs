//! JSON form of polynomials:
//! `{"basis": "moment"|"standard", "sequence": {...}, "coeffs": ["p/q" | "1.25", ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MomentPolynomial, StandardPolynomial};
use crate::scalar::Scalar;
use crate::sequence::{MomentSequence, SequenceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Moment,
    Standard,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub basis: Basis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<SequenceKind>,
    pub coeffs: Vec<Scalar>,
}

impl PolynomialDoc {
    pub fn from_moment(p: &MomentPolynomial) -> Self {
        PolynomialDoc {
            basis: Basis::Moment,
            sequence: Some(p.sequence().kind().clone()),
            coeffs: p.coeffs().to_vec(),
        }
    }

    pub fn from_standard(p: &StandardPolynomial, seq: Option<&MomentSequence>) -> Self {
        PolynomialDoc {
            basis: Basis::Standard,
            sequence: seq.map(|s| s.kind().clone()),
            coeffs: p.coeffs().to_vec(),
        }
    }

    pub fn sequence(&self) -> Result<Option<MomentSequence>> {
        self.sequence.clone().map(MomentSequence::new).transpose()
    }

    /// The polynomial in the moment basis; standard-basis documents are
    /// converted with their own sequence.
    pub fn to_moment(&self) -> Result<MomentPolynomial> {
        let seq = self
            .sequence()?
            .ok_or_else(|| Error::Parse("polynomial document has no sequence".into()))?;
        match self.basis {
            Basis::Moment => Ok(MomentPolynomial::new(seq, self.coeffs.clone())),
            Basis::Standard => MomentPolynomial::from_standard(&StandardPolynomial::new(self.coeffs.clone()), seq),
        }
    }

    pub fn to_standard(&self) -> Result<StandardPolynomial> {
        match self.basis {
            Basis::Standard => Ok(StandardPolynomial::new(self.coeffs.clone())),
            Basis::Moment => self.to_moment()?.to_standard(),
        }
    }
}
