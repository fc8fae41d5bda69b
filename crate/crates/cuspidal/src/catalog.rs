//! Enumeration of standard pair sequences by `lambda`.
//!
//! Sequences are generated from shape tuples of reduced pairs
//! `(a_k, b_k)`; scaling `c_k = a_k * prod_{l>k} a_l`,
//! `p_k = b_k * prod_{l>k} a_l` gives a standard sequence by construction.
//! The number of components and the contributions to `lambda` only depend
//! on the reduced pairs, which makes pruning cheap.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hn::{expand, steps, CuspRecord, CuspType, HnPair, HnSeq};
use crate::lattice::render_compact;
use crate::rational::Rational;

pub const MAX_LAMBDA: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShapeTuple {
    pub pairs: Vec<HnPair>,
}

impl ShapeTuple {
    pub fn to_seq(&self) -> Result<HnSeq> {
        let mut out = Vec::with_capacity(self.pairs.len());
        let mut scale = 1u64;
        for q in self.pairs.iter().rev() {
            out.push(q.scaled(scale)?);
            scale = scale.checked_mul(q.c).ok_or(Error::Overflow("shape scaling"))?;
        }
        out.reverse();
        HnSeq::new(out)
    }

    pub fn components(&self) -> u64 {
        self.pairs.iter().map(|q| steps(q.c, q.p)).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogQuery {
    pub lambda: u64,
    pub max_ind: Option<Rational>,
    pub require_delta_minus_zero: bool,
    /// Defaults to `2 * lambda`, or 3 when `lambda = 1`.
    pub max_components: Option<u64>,
}

impl CatalogQuery {
    pub fn new(lambda: u64) -> Self {
        CatalogQuery { lambda, max_ind: None, require_delta_minus_zero: false, max_components: None }
    }

    pub fn max_ind(mut self, bound: Rational) -> Self {
        self.max_ind = Some(bound);
        self
    }

    pub fn delta_minus_zero(mut self) -> Self {
        self.require_delta_minus_zero = true;
        self
    }

    pub fn max_components(mut self, n: u64) -> Self {
        self.max_components = Some(n);
        self
    }

    pub fn component_bound(&self) -> u64 {
        self.max_components.unwrap_or(default_component_bound(self.lambda))
    }

    fn check(&self) -> Result<()> {
        if self.lambda == 0 || self.lambda > MAX_LAMBDA {
            return Err(Error::UnsupportedLambda(self.lambda as u32));
        }
        if self.component_bound() < self.lambda {
            return Err(Error::Invalid("max_components must be at least lambda".into()));
        }
        Ok(())
    }

    fn accepts(&self, t: &CuspType) -> bool {
        t.lambda() == self.lambda
            && t.components() <= self.component_bound()
            && self.max_ind.as_ref().is_none_or(|b| t.ind() <= b)
            && (!self.require_delta_minus_zero || t.b0_delta_minus() == 0)
    }
}

/// The ordinary cusp `[2,1,3]` has three components and `lambda = 1`.
pub fn default_component_bound(lambda: u64) -> u64 {
    (2 * lambda).max(3)
}

/// Coprime pairs `(c, p)` with `c >= p` whose subtractive Euclid takes
/// exactly `k` steps, generated from `(1,1)` by
/// `(c, p) -> (c+p, p), (c+p, c)`.
pub fn coprime_pairs_with_steps(k: u64) -> Vec<(u64, u64)> {
    if k == 0 {
        return Vec::new();
    }
    let mut level = vec![(1u64, 1u64)];
    for _ in 1..k {
        let mut next: Vec<(u64, u64)> = level.iter().flat_map(|&(c, p)| [(c + p, p), (c + p, c)]).collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

fn b_minus(q: HnPair) -> u64 {
    let r = q.c % q.p;
    u64::from(r > 0 && q.p >= 2 * r)
}

fn b_plus(q: HnPair) -> u64 {
    let r = q.p % q.c;
    u64::from(r > 0 && q.c >= 2 * r)
}

/// Candidate reduced pairs grouped by step count.
struct PairTable {
    first: Vec<(HnPair, u64, u64)>,
    later: Vec<(HnPair, u64, u64)>,
}

impl PairTable {
    /// Entries are `(pair, steps, lambda contribution)`.
    fn new(max_steps: u64) -> Self {
        let mut first = Vec::new();
        let mut later = Vec::new();
        for k in 2..=max_steps {
            for (c, p) in coprime_pairs_with_steps(k) {
                let q = HnPair::new(c, p);
                if p >= 2 {
                    first.push((q, k, k - b_plus(q) - b_minus(q)));
                }
                later.push((q, k, k - b_plus(q)));
                if p >= 2 {
                    let r = HnPair::new(p, c);
                    later.push((r, k, k - b_plus(r)));
                }
            }
        }
        PairTable { first, later }
    }
}

/// Walks all shape tuples with at most `budget` components whose
/// `lambda` (when `target` is set) equals the target.
fn shapes(budget: u64, target: Option<u64>, jobs: Option<usize>) -> Vec<ShapeTuple> {
    let table = PairTable::new(budget);
    let lam_cap = target.unwrap_or(u64::MAX);
    let work = |&(q, s, l): &(HnPair, u64, u64)| {
        let mut out = Vec::new();
        let mut stack = vec![q];
        extend(&table, &mut stack, s, l, budget, target, lam_cap, &mut out);
        out
    };
    let run = || -> Vec<ShapeTuple> { table.first.par_iter().flat_map_iter(work).collect() };
    let mut out = crate::par::install(jobs, run);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    table: &PairTable,
    stack: &mut Vec<HnPair>,
    used: u64,
    lam: u64,
    budget: u64,
    target: Option<u64>,
    lam_cap: u64,
    out: &mut Vec<ShapeTuple>,
) {
    let ordinary = stack.len() == 1 && stack[0] == HnPair::new(3, 2);
    let lambda = lam - u64::from(ordinary);
    if target.is_none_or(|t| t == lambda) {
        out.push(ShapeTuple { pairs: stack.clone() });
    }
    // Every further pair adds at least one to lambda.
    if lam >= lam_cap {
        return;
    }
    for &(q, s, l) in &table.later {
        if used + s <= budget && lam + l <= lam_cap {
            stack.push(q);
            extend(table, stack, used + s, lam + l, budget, target, lam_cap, out);
            stack.pop();
        }
    }
}

fn canonical_key(seq: &HnSeq) -> (usize, Vec<u64>) {
    (seq.h(), seq.pairs().iter().flat_map(|q| [q.c, q.p]).collect())
}

fn sort_canonical(v: &mut [CuspType]) {
    v.sort_by_cached_key(|t| canonical_key(t.seq()));
}

/// Every standard sequence whose expansion has at most `max_components`
/// vertices, in canonical order.
pub fn all_standard_sequences(max_components: u64) -> Result<Vec<HnSeq>> {
    let mut v = shapes(max_components, None, None)
        .iter()
        .map(ShapeTuple::to_seq)
        .collect::<Result<Vec<_>>>()?;
    v.sort_by_cached_key(canonical_key);
    Ok(v)
}

pub fn sequences_with_lambda(q: &CatalogQuery, jobs: Option<usize>) -> Result<Vec<CuspType>> {
    q.check()?;
    let shapes = shapes(q.component_bound(), Some(q.lambda), jobs);
    let mut out = Vec::new();
    for s in shapes {
        let t = CuspType::new(s.to_seq()?)?;
        if q.accepts(&t) {
            out.push(t);
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Compact rendering of the expansion of a cusp type.
pub fn expansion_text(t: &CuspType) -> String {
    render_compact(&expand(t.seq()).expect("catalog entries are standard").graph)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizerReport {
    pub lambda: u64,
    pub cusp: CuspRecord,
    pub expansion: String,
    pub ind: Rational,
    pub nu: Rational,
    /// Number of sequences attaining the minimum.
    pub attained_by: u64,
}

/// Sequence of smallest `ind` among those with the given `lambda`.
pub fn minimizer(lambda: u64) -> Result<MinimizerReport> {
    let all = sequences_with_lambda(&CatalogQuery::new(lambda), None)?;
    let best = all.iter().map(|t| t.ind().clone()).min().ok_or_else(|| Error::Invalid("empty catalog".into()))?;
    let argmin: Vec<&CuspType> = all.iter().filter(|t| *t.ind() == best).collect();
    let t = argmin[0];
    Ok(MinimizerReport {
        lambda,
        cusp: t.record(),
        expansion: expansion_text(t),
        ind: best,
        nu: crate::hn::nu(lambda)?,
        attained_by: argmin.len() as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyEntry {
    pub lambda: u64,
    pub pairs: String,
    pub expansion: String,
    pub ind: Rational,
}

/// All sequences with `lambda <= lambda_max` and `ind <= bound`.
pub fn low_inductance_survey(lambda_max: u64, bound: &Rational) -> Result<Vec<SurveyEntry>> {
    let mut out = Vec::new();
    for l in 1..=lambda_max {
        for t in sequences_with_lambda(&CatalogQuery::new(l).max_ind(bound.clone()), None)? {
            out.push(SurveyEntry {
                lambda: l,
                pairs: t.seq().to_string(),
                expansion: expansion_text(&t),
                ind: t.ind().clone(),
            });
        }
    }
    Ok(out)
}

/// Sequences with the given `lambda` whose component count exceeds the
/// default bound by at most `margin`.
pub fn beyond_search_bound(lambda: u64, margin: u64) -> Result<Vec<CuspType>> {
    let bound = default_component_bound(lambda);
    let q = CatalogQuery::new(lambda).max_components(bound + margin);
    q.check()?;
    let mut out = Vec::new();
    for s in shapes(q.component_bound(), Some(lambda), None) {
        if s.components() > bound {
            out.push(CuspType::new(s.to_seq()?)?);
        }
    }
    Ok(out)
}

/// Catalog sizes per `lambda`, for summaries.
pub fn catalog_sizes(max_lambda: u64) -> Result<BTreeMap<u64, usize>> {
    (1..=max_lambda)
        .map(|l| Ok((l, sequences_with_lambda(&CatalogQuery::new(l), None)?.len())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_generation() {
        assert_eq!(coprime_pairs_with_steps(1), vec![(1, 1)]);
        assert_eq!(coprime_pairs_with_steps(3), vec![(3, 1), (3, 2)]);
        let k4 = coprime_pairs_with_steps(4);
        assert!(k4.contains(&(5, 2)) && k4.contains(&(4, 3)));
        for k in 1..10 {
            for (c, p) in coprime_pairs_with_steps(k) {
                assert_eq!(steps(c, p), k);
            }
        }
    }

    #[test]
    fn small_catalogs() {
        let names = |l| -> Vec<String> {
            sequences_with_lambda(&CatalogQuery::new(l), None)
                .unwrap()
                .iter()
                .map(|t| t.seq().to_string())
                .collect()
        };
        assert_eq!(names(1), vec!["(3,2)"]);
        assert_eq!(names(2), vec!["(5,2)"]);
        assert_eq!(names(3), vec!["(4,3)", "(7,2)", "(7,3)", "(6,4)(2,1)", "(10,4)(2,1)"]);
    }

    #[test]
    fn unsupported_lambda() {
        assert_eq!(sequences_with_lambda(&CatalogQuery::new(9), None).unwrap_err(), Error::UnsupportedLambda(9));
    }
}
