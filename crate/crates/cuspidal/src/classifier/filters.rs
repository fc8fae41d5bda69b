use serde::{Deserialize, Serialize};

use super::config::Configuration;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessEq,
}

/// One evaluated inequality `lhs rel rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub holds: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let holds = match relation {
            Relation::Less => lhs < rhs,
            Relation::LessEq => lhs <= rhs,
        };
        Check { label: label.into(), lhs, relation, rhs, holds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl FilterVerdict {
    fn from_checks(checks: Vec<Check>) -> Self {
        FilterVerdict { passed: checks.iter().all(|c| c.holds), checks }
    }

    pub fn label(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Projection from each cusp `i` in turn:
/// `sum_{j != i} (mu_j - 1) + (mu'_i - 1) <= 2 (d - mu_i - 1)`.
pub fn hurwitz_projection_filter(cfg: &Configuration, d: u64) -> FilterVerdict {
    let mus: Vec<i64> = cfg.cusps().iter().map(|t| t.mu() as i64).collect();
    let total: i64 = mus.iter().map(|m| m - 1).sum();
    let checks = cfg
        .cusps()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let lhs = total - (mus[i] - 1) + t.mu_prime() as i64 - 1;
            let rhs = 2 * (d as i64 - mus[i] - 1);
            Check::new(format!("projection from {}", t.seq()), int(lhs), Relation::LessEq, int(rhs))
        })
        .collect();
    FilterVerdict::from_checks(checks)
}

/// `d < 3 max mu`.
pub fn matsuoka_sakai_filter(cfg: &Configuration, d: u64) -> FilterVerdict {
    let max_mu = cfg.cusps().iter().map(|t| t.mu()).max().unwrap_or(0);
    FilterVerdict::from_checks(vec![Check::new(
        "degree against 3 max mu",
        int(d as i64),
        Relation::Less,
        int(3 * max_mu as i64),
    )])
}
