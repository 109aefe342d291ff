//! Moment sequences m = (m(p))_{p ≥ 0} with m(0) = 1 and m(p) > 0.

use std::sync::Arc;

use num::{BigRational, One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::{gamma_fn, q_number};

/// Number of moments computed eagerly at construction.
const CACHE_LEN: usize = 32;

/// How the moments are generated.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceKind {
    /// m(p) = p!, the classical derivative.
    Factorial,
    /// m(p) = Γ(1 + pμ); realized by the Caputo derivative of order μ.
    GammaPower {
        #[serde(with = "rational_string")]
        mu: BigRational,
    },
    /// m(p) = [p]_q!; realized by the Jackson q-derivative.
    QFactorial {
        #[serde(with = "rational_string")]
        q: BigRational,
    },
    /// A finite user table.
    Custom { table: Vec<Scalar> },
}

/// A validated moment sequence with a construction-time cache.
///
/// Equality compares the generating kind only.
#[derive(Clone, Debug)]
pub struct MomentSequence {
    kind: SequenceKind,
    cache: Arc<[Scalar]>,
}

impl PartialEq for MomentSequence {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl MomentSequence {
    pub fn new(kind: SequenceKind) -> Result<Self> {
        match &kind {
            SequenceKind::Factorial => {}
            SequenceKind::GammaPower { mu } => {
                if !mu.is_positive() {
                    return Err(Error::InvalidParameter(format!("mu must be positive, got {mu}")));
                }
            }
            SequenceKind::QFactorial { q } => {
                if !q.is_positive() || q.is_one() {
                    return Err(Error::InvalidParameter(format!(
                        "q must be positive and different from 1, got {q}"
                    )));
                }
            }
            SequenceKind::Custom { table } => {
                match table.first() {
                    Some(m0) if m0.is_one() => {}
                    _ => return Err(Error::InvalidParameter("custom table must start with m(0) = 1".into())),
                }
                if let Some(p) = table.iter().position(|m| !m.is_positive()) {
                    return Err(Error::InvalidParameter(format!("custom moment m({p}) is not positive")));
                }
            }
        }
        let len = match &kind {
            SequenceKind::Custom { table } => table.len(),
            _ => CACHE_LEN,
        };
        let mut cache = Vec::with_capacity(len);
        for p in 0..len {
            let m = compute(&kind, p, cache.last())?;
            cache.push(m);
        }
        Ok(MomentSequence {
            kind,
            cache: cache.into(),
        })
    }

    pub fn factorial() -> Self {
        Self::new(SequenceKind::Factorial).expect("factorial sequence is always valid")
    }

    pub fn gamma_power(mu: BigRational) -> Result<Self> {
        Self::new(SequenceKind::GammaPower { mu })
    }

    pub fn q_factorial(q: BigRational) -> Result<Self> {
        Self::new(SequenceKind::QFactorial { q })
    }

    pub fn custom(table: Vec<Scalar>) -> Result<Self> {
        Self::new(SequenceKind::Custom { table })
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    /// Short tag used in reports: `factorial`, `gamma`, `q` or `custom`.
    pub fn tag(&self) -> &'static str {
        match self.kind {
            SequenceKind::Factorial => "factorial",
            SequenceKind::GammaPower { .. } => "gamma",
            SequenceKind::QFactorial { .. } => "q",
            SequenceKind::Custom { .. } => "custom",
        }
    }

    /// m(p).
    pub fn moment(&self, p: usize) -> Result<Scalar> {
        if let Some(m) = self.cache.get(p) {
            return Ok(m.clone());
        }
        if let SequenceKind::Custom { table } = &self.kind {
            return Err(Error::OutOfRange {
                index: p,
                len: table.len(),
            });
        }
        let last = self.cache.len() - 1;
        let mut m = self.cache[last].clone();
        for i in last + 1..=p {
            m = compute(&self.kind, i, Some(&m))?;
        }
        Ok(m)
    }

    /// m(p)/m(p−1), the factor ∂_m attaches to x^p.
    pub fn ratio(&self, p: usize) -> Result<Scalar> {
        if p == 0 {
            return Err(Error::Domain("moment ratio is defined for p >= 1".into()));
        }
        Ok(self.moment(p)? / self.moment(p - 1)?)
    }
}

fn compute(kind: &SequenceKind, p: usize, prev: Option<&Scalar>) -> Result<Scalar> {
    if p == 0 {
        return Ok(match kind {
            SequenceKind::GammaPower { .. } => Scalar::float(1.0),
            SequenceKind::Custom { table } => table[0].clone(),
            _ => Scalar::one(),
        });
    }
    let prev = prev.expect("moments are generated in order");
    Ok(match kind {
        SequenceKind::Factorial => prev * Scalar::from(p),
        SequenceKind::QFactorial { q } => prev * q_number(&Scalar::Exact(q.clone()), p)?,
        SequenceKind::GammaPower { mu } => {
            let arg = Scalar::one() + Scalar::from(p) * Scalar::Exact(mu.clone());
            Scalar::float(gamma_fn(arg.to_f64())?)
        }
        SequenceKind::Custom { table } => table[p].clone(),
    })
}

pub(crate) mod rational_string {
    use num::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::{parse_rational, Scalar};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&Scalar::Exact(r.clone()).to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rel_close, Mode};
    use crate::special::beta_fn;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn moment_examples() {
        assert_eq!(MomentSequence::factorial().moment(4).unwrap(), Scalar::int(24));
        let q2 = MomentSequence::q_factorial(rat(2, 1)).unwrap();
        assert_eq!(q2.moment(3).unwrap(), Scalar::int(21));
        let g = MomentSequence::gamma_power(rat(1, 2)).unwrap();
        assert_eq!(g.moment(2).unwrap(), Scalar::float(1.0));
        assert!(rel_close(g.moment(1).unwrap().to_f64(), 0.886_226_925_452_758, 1e-13));
        assert_eq!(g.moment(1).unwrap().mode(), Mode::Float);
        assert_eq!(q2.moment(3).unwrap().mode(), Mode::Exact);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(MomentSequence::factorial().ratio(5).unwrap(), Scalar::int(5));
        let q2 = MomentSequence::q_factorial(rat(2, 1)).unwrap();
        assert_eq!(q2.ratio(3).unwrap(), Scalar::int(7));
        assert!(q2.ratio(0).is_err());
    }

    #[test]
    fn gamma_ratio_matches_beta_identity() {
        for (num, den) in [(1, 4), (1, 3), (1, 2), (3, 4), (1, 1), (3, 2), (2, 1)] {
            let mu = num as f64 / den as f64;
            let seq = MomentSequence::gamma_power(rat(num, den)).unwrap();
            for n in 1..=12 {
                let via_beta = crate::special::gamma_fn(mu).unwrap()
                    / beta_fn(1.0 + mu * (n as f64 - 1.0), mu).unwrap();
                let r = seq.ratio(n).unwrap().to_f64();
                assert!(rel_close(r, via_beta, 1e-12), "mu={mu} n={n}: {r} vs {via_beta}");
            }
        }
    }

    #[test]
    fn gamma_power_one_is_factorial() {
        let g = MomentSequence::gamma_power(rat(1, 1)).unwrap();
        let f = MomentSequence::factorial();
        for p in 0..=20 {
            assert_eq!(g.moment(p).unwrap().to_f64(), f.moment(p).unwrap().to_f64(), "p={p}");
        }
    }

    #[test]
    fn q_factorial_approaches_factorial() {
        let f = MomentSequence::factorial();
        for p in 0..=10 {
            let exact = f.moment(p).unwrap().to_f64();
            let mut last = f64::INFINITY;
            for (n, d) in [(11, 10), (101, 100), (1001, 1000)] {
                let m = MomentSequence::q_factorial(rat(n, d)).unwrap().moment(p).unwrap().to_f64();
                let err = (m - exact).abs();
                assert!(p < 2 || err < last, "p={p} q={n}/{d}");
                last = err;
            }
            for (n, d) in [(9, 10), (99, 100), (999, 1000)] {
                let m = MomentSequence::q_factorial(rat(n, d)).unwrap().moment(p).unwrap().to_f64();
                assert!((m - exact).abs() <= 0.5 * exact * (1.0 - n as f64 / d as f64) * (p * p) as f64);
            }
        }
    }

    #[test]
    fn moments_beyond_cache_are_consistent() {
        let q = MomentSequence::q_factorial(rat(3, 2)).unwrap();
        for p in 1..=40 {
            assert_eq!(q.moment(p).unwrap(), q.ratio(p).unwrap() * q.moment(p - 1).unwrap());
        }
        let f = MomentSequence::factorial();
        assert_eq!(f.moment(35).unwrap(), f.moment(34).unwrap() * Scalar::int(35));
    }

    #[test]
    fn custom_tables() {
        let t = MomentSequence::custom(vec![Scalar::one(), Scalar::ratio(3, 2), Scalar::int(5)]).unwrap();
        assert_eq!(t.ratio(2).unwrap(), Scalar::ratio(10, 3));
        assert_eq!(t.moment(3), Err(Error::OutOfRange { index: 3, len: 3 }));
        assert!(MomentSequence::custom(vec![Scalar::int(2)]).is_err());
        assert!(MomentSequence::custom(vec![Scalar::one(), Scalar::int(-1)]).is_err());
        assert!(MomentSequence::custom(vec![]).is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(MomentSequence::q_factorial(rat(1, 1)).is_err());
        assert!(MomentSequence::q_factorial(rat(-1, 2)).is_err());
        assert!(MomentSequence::gamma_power(rat(0, 1)).is_err());
    }

    #[test]
    fn kind_serializes_with_tag() {
        let kind = SequenceKind::QFactorial { q: rat(9, 10) };
        let json = serde_json::to_string(&kind).unwrap();
        assert_eq!(json, r#"{"kind":"q_factorial","q":"9/10"}"#);
        let back: SequenceKind = serde_json::from_str(&json).unwrap();
        assert_eq!(back, kind);
    }
}
