use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::graph::DualGraph;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Ordered list of weights of a path graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Chain(Vec<i64>);

impl Chain {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w < 1) {
            return Err(Error::InvalidWeight(w));
        }
        Ok(Chain(weights))
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Chain {
        Chain(self.0.iter().rev().copied().collect())
    }

    /// All weights at least two.
    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(|&w| w >= 2)
    }

    /// `out[i] = d([a_i, ..., a_k])`, with `out[len] = 1`.
    pub fn suffix_discriminants(&self) -> Vec<BigInt> {
        let n = self.0.len();
        let mut out = vec![BigInt::one(); n + 1];
        for i in (0..n).rev() {
            let next2 = if i + 2 <= n { out[i + 2].clone() } else { BigInt::from(0) };
            out[i] = BigInt::from(self.0[i]) * &out[i + 1] - next2;
        }
        out
    }

    pub fn discriminant(&self) -> BigInt {
        self.suffix_discriminants().swap_remove(0)
    }

    /// Coefficients of the bark of this twig, read tip-first.
    ///
    /// Coefficient `i` is `d(T_{i+1} + ... + T_k) / d(T)`.
    pub fn bark(&self) -> Result<Vec<Rational>> {
        let suf = self.suffix_discriminants();
        let d = suf[0].clone();
        if d <= BigInt::from(0) {
            return Err(Error::Invalid(format!("twig {self} is not negative definite")));
        }
        Ok((1..=self.len()).map(|i| Rational::from(num_rational::BigRational::new(suf[i].clone(), d.clone()))).collect())
    }

    /// `d(T - T_1) / d(T)` for a twig read tip-first.
    pub fn inductance(&self) -> Result<Rational> {
        if self.is_empty() {
            return Ok(Rational::zero());
        }
        if !self.is_admissible() {
            return Err(Error::Invalid(format!("twig {self} is not admissible")));
        }
        let suf = self.suffix_discriminants();
        Rational::new(suf[1].clone(), suf[0].clone())
    }

    /// Inductance of an admissible chain counted from both of its ends.
    pub fn inductance_both_ends(&self) -> Result<Rational> {
        if self.is_empty() {
            return Ok(Rational::zero());
        }
        if !self.is_admissible() {
            return Err(Error::Invalid(format!("chain {self} is not admissible")));
        }
        let d = self.discriminant();
        let left = Chain(self.0[1..].to_vec()).discriminant();
        let right = Chain(self.0[..self.len() - 1].to_vec()).discriminant();
        Rational::new(left + right + BigInt::from(2), d)
    }

    pub fn to_graph(&self) -> DualGraph {
        DualGraph::path(&self.0).expect("chain weights are positive")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Chain::default());
        }
        let ws = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Chain::new(ws)
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Chain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &str) -> Chain {
        s.parse().unwrap()
    }

    #[test]
    fn discriminant_recurrence() {
        assert_eq!(ch("[2,3]").discriminant(), BigInt::from(5));
        assert_eq!(ch("[3,2,2,2,2]").discriminant(), BigInt::from(11));
        assert_eq!(ch("[]").discriminant(), BigInt::from(1));
    }

    #[test]
    fn twig_inductance() {
        assert_eq!(ch("[2,2]").inductance().unwrap(), Rational::frac(2, 3));
        assert_eq!(ch("[3,2]").inductance().unwrap(), Rational::frac(2, 5));
        assert!(ch("[2,1]").inductance().is_err());
    }

    #[test]
    fn both_ends() {
        assert_eq!(ch("[2]").inductance_both_ends().unwrap(), Rational::from_integer(2));
        assert_eq!(ch("[3,2,2,2,2]").inductance_both_ends().unwrap(), Rational::frac(16, 11));
    }

    #[test]
    fn bark_coefficients() {
        let b = ch("[2,3]").bark().unwrap();
        assert_eq!(b, vec![Rational::frac(3, 5), Rational::frac(1, 5)]);
    }
}
