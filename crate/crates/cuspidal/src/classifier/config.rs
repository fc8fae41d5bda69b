use std::cmp::Reverse;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hn::CuspType;
use crate::rational::Rational;

/// Cusps of a curve, sorted by `lambda` descending, then by pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    cusps: Vec<CuspType>,
}

impl Configuration {
    pub fn new(mut cusps: Vec<CuspType>) -> Result<Self> {
        if cusps.len() < 4 {
            return Err(Error::Invalid(format!("need at least 4 cusps, got {}", cusps.len())));
        }
        cusps.sort_by(|a, b| (Reverse(a.lambda()), a.seq()).cmp(&(Reverse(b.lambda()), b.seq())));
        Ok(Configuration { cusps })
    }

    pub fn parse(items: &[&str]) -> Result<Self> {
        Configuration::new(items.iter().map(|s| CuspType::parse(s)).collect::<Result<_>>()?)
    }

    pub fn cusps(&self) -> &[CuspType] {
        &self.cusps
    }

    pub fn c(&self) -> usize {
        self.cusps.len()
    }

    pub fn lambdas(&self) -> Vec<u64> {
        self.cusps.iter().map(CuspType::lambda).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.cusps.iter().map(|t| t.seq().to_string()).collect()
    }

    pub fn globals(&self) -> DerivedGlobals {
        let d = degree_of(self);
        DerivedGlobals {
            d,
            p2: d.map(|d| p2_of(self, d)),
            ind_sum: self.cusps.iter().map(|t| t.ind().clone()).sum(),
            lambda_sum: self.cusps.iter().map(CuspType::lambda).sum(),
            b0_delta_minus: self.cusps.iter().map(CuspType::b0_delta_minus).sum(),
            delta: self.cusps.iter().map(|t| t.delta_minus().clone()).sum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedGlobals {
    pub d: Option<u64>,
    pub p2: Option<i64>,
    pub ind_sum: Rational,
    pub lambda_sum: u64,
    pub b0_delta_minus: u64,
    pub delta: Rational,
}

/// Degree of a rational curve with these cusps, from
/// `(d-1)(d-2) = sum(I - M)`; `None` when there is no integral solution.
pub fn degree_of(cfg: &Configuration) -> Option<u64> {
    let s: u64 = cfg.cusps.iter().map(|t| t.i() - t.m()).sum();
    let disc = 1 + 4 * s;
    let root = disc.sqrt();
    if root * root != disc || root % 2 == 0 {
        return None;
    }
    let d = (3 + root) / 2;
    (d >= 3).then_some(d)
}

/// `p2 = 9 - 2c + sum(M - r) - 3d`.
pub fn p2_of(cfg: &Configuration, d: u64) -> i64 {
    let sum: i64 = cfg.cusps.iter().map(|t| t.m() as i64 - t.r() as i64).sum();
    9 - 2 * cfg.c() as i64 + sum - 3 * d as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let b = Configuration::parse(&["(7,2)", "(3,2)", "(3,2)", "(3,2)"]).unwrap();
        assert_eq!(degree_of(&b), Some(5));
        assert_eq!(p2_of(&b, 5), 0);
        let e = Configuration::parse(&["(3,2)", "(7,3)", "(8,3)", "(3,2)"]).unwrap();
        assert_eq!(degree_of(&e), Some(7));
        assert_eq!(e.names()[0], "(8,3)");
        let five = Configuration::parse(&["(9,5)", "(3,2)", "(3,2)", "(3,2)", "(3,2)"]).unwrap();
        assert_eq!(degree_of(&five), None);
    }

    #[test]
    fn p2_values() {
        let h = Configuration::parse(&["(15,2)", "(3,2)", "(3,2)", "(3,2)"]).unwrap();
        assert_eq!(degree_of(&h).map(|d| p2_of(&h, d)), Some(1));
        let c = Configuration::parse(&["(7,2)", "(4,3)", "(4,3)", "(3,2)"]).unwrap();
        assert_eq!(degree_of(&c).map(|d| p2_of(&c, d)), Some(1));
    }
}
