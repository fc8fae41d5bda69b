use serde::{Deserialize, Serialize};

use super::invariants::*;
use super::pairs::HnSeq;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A standard pair sequence with its invariants computed once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CuspType {
    seq: HnSeq,
    lambda: u64,
    ind: Rational,
    m: u64,
    i: u64,
    r: u64,
    s: u64,
    tau: u64,
    b0_delta: u64,
    b0_delta_minus: u64,
    delta_minus: Rational,
    multiplicities: Vec<u64>,
    semi_ordinary: bool,
}

impl CuspType {
    pub fn new(seq: HnSeq) -> Result<Self> {
        seq.validate().map_err(Error::NonStandard)?;
        let (b0_delta_minus, delta_minus) = delta_minus_info(&seq)?;
        let t = CuspType {
            lambda: lambda_formula(&seq)?,
            ind: ind_formula(&seq)?,
            m: m_of(&seq)?,
            i: i_of(&seq)?,
            r: r_formula(&seq)?,
            s: s_formula(&seq)?,
            tau: tau_of(&seq)?,
            b0_delta: b0_delta_formula(&seq)?,
            b0_delta_minus,
            delta_minus,
            multiplicities: mult_sequence(&seq)?,
            semi_ordinary: is_semi_ordinary(&seq)?,
            seq,
        };
        if t.tau < t.s + 1 {
            return Err(Error::Invalid(format!("tau* < 0 for {}", t.seq)));
        }
        Ok(t)
    }

    pub fn parse(s: &str) -> Result<Self> {
        CuspType::new(s.parse()?)
    }

    pub fn seq(&self) -> &HnSeq {
        &self.seq
    }
    pub fn h(&self) -> usize {
        self.seq.h()
    }
    pub fn lambda(&self) -> u64 {
        self.lambda
    }
    pub fn ind(&self) -> &Rational {
        &self.ind
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn i(&self) -> u64 {
        self.i
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn s(&self) -> u64 {
        self.s
    }
    pub fn tau(&self) -> u64 {
        self.tau
    }
    pub fn tau_star(&self) -> u64 {
        self.tau - self.s - 1
    }
    pub fn b0_delta(&self) -> u64 {
        self.b0_delta
    }
    pub fn b0_delta_minus(&self) -> u64 {
        self.b0_delta_minus
    }
    pub fn delta_minus(&self) -> &Rational {
        &self.delta_minus
    }
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }
    /// Multiplicity of the singular point.
    pub fn mu(&self) -> u64 {
        self.multiplicities[0]
    }
    /// Second entry of the multiplicity sequence.
    pub fn mu_prime(&self) -> u64 {
        self.multiplicities.get(1).copied().unwrap_or(1)
    }
    pub fn semi_ordinary(&self) -> bool {
        self.semi_ordinary
    }
    pub fn components(&self) -> u64 {
        self.seq.components()
    }

    pub fn record(&self) -> CuspRecord {
        let ms: Vec<String> = self.multiplicities.iter().map(u64::to_string).collect();
        CuspRecord {
            pairs: self.seq.to_string(),
            lambda: self.lambda,
            ind: self.ind.clone(),
            m: self.m,
            i: self.i,
            r: self.r,
            s: self.s,
            tau: self.tau,
            b0_delta: self.b0_delta,
            b0_delta_minus: self.b0_delta_minus,
            tau_star: self.tau_star(),
            delta_minus: self.delta_minus.clone(),
            h: self.h() as u64,
            components: self.components(),
            multiplicities: format!("({})", ms.join(",")),
            semi_ordinary: self.semi_ordinary,
        }
    }
}

/// Flat serialized form of a [`CuspType`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspRecord {
    pub pairs: String,
    pub lambda: u64,
    pub ind: Rational,
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(rename = "I")]
    pub i: u64,
    pub r: u64,
    pub s: u64,
    pub tau: u64,
    pub b0_delta: u64,
    pub b0_delta_minus: u64,
    pub tau_star: u64,
    pub delta_minus: Rational,
    pub h: u64,
    pub components: u64,
    pub multiplicities: String,
    pub semi_ordinary: bool,
}

impl CuspRecord {
    /// Rebuilds the cusp type and checks every field against it.
    pub fn to_cusp_type(&self) -> Result<CuspType> {
        let t = CuspType::parse(&self.pairs)?;
        if t.record() != *self {
            return Err(Error::Invalid(format!("record for {} has stale fields", self.pairs)));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_cusp() {
        let t = CuspType::parse("(10,4)(2,3)").unwrap();
        assert_eq!((t.m(), t.i(), t.r(), t.lambda()), (16, 46, 4, 4));
        assert_eq!(t.mu(), 4);
    }

    #[test]
    fn record_round_trip() {
        let t = CuspType::parse("(15,6)(3,2)").unwrap();
        let j = serde_json::to_string(&t.record()).unwrap();
        assert!(j.starts_with("{\"pairs\":\"(15,6)(3,2)\",\"lambda\":"));
        let back: CuspRecord = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_cusp_type().unwrap(), t);
    }

    #[test]
    fn rejects_non_standard() {
        assert!(CuspType::parse("(4,2)").is_err());
    }
}
