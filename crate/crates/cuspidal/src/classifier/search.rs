//! Assignment of catalog cusp types to feasible `lambda`-tuples.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::audit::{audit_case, AuditCase, AuditReport};
use super::config::{Configuration, DerivedGlobals};
use super::feasible::feasible_lambda_tuples;
use super::filters::{hurwitz_projection_filter, matsuoka_sakai_filter, Check, FilterVerdict, Relation};
use crate::catalog::{sequences_with_lambda, CatalogQuery, MAX_LAMBDA};
use crate::error::{Error, Result};
use crate::expected;
use crate::hn::CuspType;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Draw unfiltered catalogs and skip the `h1 <= 2` restriction.
    pub strict: bool,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleEntry {
    pub p2: u64,
    pub lambdas: Vec<u64>,
    /// Whether cusp types were assigned; tuples with `p2 = 2` are not,
    /// since the recomputed `p2` must match and lie in `{0, 1}`.
    pub assigned: bool,
    pub assignments: u64,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterLabels {
    pub hurwitz: String,
    pub matsuoka_sakai: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub hurwitz: FilterVerdict,
    pub matsuoka_sakai: FilterVerdict,
    /// `delta <= 7 + 3 p2 - sum lambda`, reported but not applied.
    pub delta_bound: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub cusps: Vec<String>,
    pub d: u64,
    pub p2: i64,
    pub filters: FilterLabels,
    pub status: String,
    pub eliminated_by: Option<String>,
    pub lambdas: Vec<u64>,
    pub ind_sum: Rational,
    pub lambda_sum: u64,
    pub b0_delta_minus: u64,
    pub delta: Rational,
    pub witnesses: Witnesses,
    pub audit: Option<AuditReport>,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn passes_filters(&self) -> bool {
        self.witnesses.hurwitz.passed && self.witnesses.matsuoka_sakai.passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub c: usize,
    pub strict: bool,
    pub tuples: Vec<TupleEntry>,
    pub cases: Vec<CaseReport>,
}

impl Classification {
    pub fn mechanized_survivors(&self) -> Vec<&CaseReport> {
        self.cases.iter().filter(|r| r.passes_filters()).collect()
    }

    pub fn survivors(&self) -> Vec<&CaseReport> {
        self.cases.iter().filter(|r| r.status == "survivor").collect()
    }

    /// Differences from the reference tables; empty on exact reproduction.
    pub fn mismatches(&self) -> Vec<String> {
        match self.c {
            4 => four_cusp_mismatches(self),
            5 => five_cusp_mismatches(self),
            _ => vec![format!("no reference for c = {}", self.c)],
        }
    }
}

fn letters_where(cl: &Classification, f: impl Fn(&CaseReport) -> bool) -> BTreeSet<String> {
    cl.cases.iter().filter(|r| f(r)).map(|r| r.case.clone()).collect()
}

fn char_set(cs: &[char]) -> BTreeSet<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

fn four_cusp_mismatches(cl: &Classification) -> Vec<String> {
    let mut out = Vec::new();
    if cl.cases.len() != expected::FOUR_CUSP_CASES.len() {
        out.push(format!("expected {} cases, got {}", expected::FOUR_CUSP_CASES.len(), cl.cases.len()));
    }
    for r in &cl.cases {
        match expected::FOUR_CUSP_CASES.iter().find(|c| c.letter.to_string() == r.case) {
            None => out.push(format!("unexpected case {}", r.cusps.join(" "))),
            Some(c) if (c.d, c.p2 as i64) != (r.d, r.p2) => {
                out.push(format!("case {}: (d,p2) = ({},{}), expected ({},{})", r.case, r.d, r.p2, c.d, c.p2))
            }
            Some(_) => {}
        }
    }
    let checks = [
        ("hurwitz failures", letters_where(cl, |r| !r.witnesses.hurwitz.passed), char_set(expected::HURWITZ_FAILS)),
        (
            "matsuoka-sakai failures",
            letters_where(cl, |r| !r.witnesses.matsuoka_sakai.passed),
            char_set(expected::MATSUOKA_SAKAI_FAILS),
        ),
        (
            "survivors",
            letters_where(cl, |r| r.status == "survivor"),
            char_set(&[expected::FINAL_SURVIVOR]),
        ),
    ];
    for (name, got, want) in checks {
        if got != want {
            out.push(format!("{name}: got {got:?}, expected {want:?}"));
        }
    }
    out
}

fn five_cusp_mismatches(cl: &Classification) -> Vec<String> {
    let mut out = Vec::new();
    let got: BTreeSet<(u64, Vec<u64>)> = cl.tuples.iter().map(|t| (t.p2, t.lambdas.clone())).collect();
    let want: BTreeSet<(u64, Vec<u64>)> = expected::FIVE_CUSP_TUPLES.iter().map(|(p, t)| (*p, t.to_vec())).collect();
    if got != want {
        out.push(format!("lambda-tuples: got {got:?}, expected {want:?}"));
    }
    let n = cl.mechanized_survivors().len();
    if n != 0 {
        out.push(format!("expected no survivors, got {n}"));
    }
    out
}

/// Catalog pool for one `lambda`, with the side conditions under which
/// the lists are stated unless `strict`.
fn pool(lambda: u64, strict: bool, jobs: Option<usize>) -> Result<Vec<CuspType>> {
    let mut q = CatalogQuery::new(lambda);
    if !strict {
        if lambda == 6 {
            q = q.max_ind(Rational::frac(3, 2));
        }
        if lambda == 7 {
            q = q.delta_minus_zero();
        }
    }
    sequences_with_lambda(&q, jobs)
}

/// Multisets of size `k` drawn from `0..n`, as non-decreasing index lists.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All configurations for one tuple, before global filters.
fn assignments(lambdas: &[u64], pools: &BTreeMap<u64, Vec<CuspType>>) -> Vec<Vec<CuspType>> {
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for &l in lambdas {
        match groups.last_mut() {
            Some((g, n)) if *g == l => *n += 1,
            _ => groups.push((l, 1)),
        }
    }
    let mut acc: Vec<Vec<CuspType>> = vec![Vec::new()];
    for (l, k) in groups {
        let p = &pools[&l];
        let picks = multisets(p.len(), k);
        acc = acc
            .iter()
            .flat_map(|base| {
                picks.iter().map(move |ix| {
                    let mut v = base.clone();
                    v.extend(ix.iter().map(|&i| p[i].clone()));
                    v
                })
            })
            .collect();
    }
    acc
}

fn h1_ok(cfg: &Configuration) -> bool {
    let top = cfg.lambdas()[0];
    cfg.cusps().iter().filter(|t| t.lambda() == top).all(|t| t.h() <= 2)
}

/// The global conditions: integral degree, recomputed `p2` equal to the
/// assumed one and in `{0, 1}`, `sum ind <= 5 - p2`, and
/// `b0(Delta^-) != 0 => sum lambda < 7 + 3 p2`.
pub fn passes_global(g: &DerivedGlobals, p2: u64) -> bool {
    let (Some(_), Some(q)) = (g.d, g.p2) else {
        return false;
    };
    q == p2 as i64
        && (0..=1).contains(&q)
        && g.ind_sum <= Rational::from_integer(5 - q)
        && (g.b0_delta_minus == 0 || (g.lambda_sum as i64) < 7 + 3 * q)
}

pub fn run_classification(c: usize, opts: ClassifyOptions) -> Result<Classification> {
    if !(4..=5).contains(&c) {
        return Err(Error::Invalid(format!("number of cusps must be 4 or 5, got {c}")));
    }
    let mut tuples: Vec<(u64, Vec<u64>)> = Vec::new();
    for p2 in 0..=2 {
        tuples.extend(feasible_lambda_tuples(c, p2)?.into_iter().map(|t| (p2, t)));
    }
    let needed: BTreeSet<u64> = tuples.iter().filter(|(p2, _)| *p2 <= 1).flat_map(|(_, t)| t.clone()).collect();
    let mut pools = BTreeMap::new();
    for l in needed {
        if l > MAX_LAMBDA {
            return Err(Error::UnsupportedLambda(l as u32));
        }
        pools.insert(l, pool(l, opts.strict, opts.jobs)?);
    }
    let work = |(p2, lambdas): &(u64, Vec<u64>)| -> (TupleEntry, Vec<Configuration>) {
        let mut entry = TupleEntry { p2: *p2, lambdas: lambdas.clone(), assigned: false, assignments: 0, candidates: 0 };
        let mut found = Vec::new();
        if *p2 <= 1 {
            entry.assigned = true;
            for cusps in assignments(lambdas, &pools) {
                entry.assignments += 1;
                let cfg = Configuration::new(cusps).expect("at least four cusps");
                if c == 4 && !opts.strict && !h1_ok(&cfg) {
                    continue;
                }
                if passes_global(&cfg.globals(), *p2) {
                    found.push(cfg);
                }
            }
            entry.candidates = found.len() as u64;
        }
        (entry, found)
    };
    let results: Vec<(TupleEntry, Vec<Configuration>)> =
        crate::par::install(opts.jobs, || tuples.par_iter().map(work).collect());
    let mut entries = Vec::new();
    let mut configs: Vec<Configuration> = Vec::new();
    for (e, f) in results {
        entries.push(e);
        configs.extend(f);
    }
    configs.sort_by_cached_key(|cfg| {
        (cfg.lambdas().into_iter().map(Reverse).collect::<Vec<_>>(), cfg.cusps().iter().map(|t| t.seq().clone()).collect::<Vec<_>>())
    });
    configs.dedup();
    let cases = configs.iter().map(|cfg| report(cfg, c)).collect::<Result<Vec<_>>>()?;
    Ok(Classification { c, strict: opts.strict, tuples: entries, cases })
}

fn report(cfg: &Configuration, c: usize) -> Result<CaseReport> {
    let g = cfg.globals();
    let d = g.d.expect("filtered on integral degree");
    let p2 = g.p2.expect("present with d");
    let hurwitz = hurwitz_projection_filter(cfg, d);
    let ms = matsuoka_sakai_filter(cfg, d);
    let delta_bound = Check::new(
        "delta against 7 + 3 p2 - sum lambda",
        g.delta.clone(),
        Relation::LessEq,
        Rational::from_integer(7 + 3 * p2 - g.lambda_sum as i64),
    );
    let names = cfg.names();
    let letter = if c == 4 { expected::case_letter(&names) } else { None };
    let mut notes = Vec::new();
    let mut audit = None;
    let (status, by) = if !hurwitz.passed {
        ("eliminated", Some("hurwitz"))
    } else if !ms.passed {
        ("eliminated", Some("matsuoka_sakai"))
    } else if let Some(a) = letter.and_then(AuditCase::from_letter) {
        let r = audit_case(a, &a.fixture_graph()?)?;
        notes.push(format!("paper-assisted: {}", r.paper_assisted));
        let eliminated = r.contradiction;
        audit = Some(r);
        if eliminated {
            ("eliminated", Some("audit"))
        } else {
            ("unresolved", None)
        }
    } else if letter == Some('a') {
        notes.push(
            "paper-assisted: the Hurwitz formula for a 2-section of a P1-fibration with three ramification points"
                .into(),
        );
        ("eliminated", Some("paper_assisted"))
    } else if letter == Some(expected::FINAL_SURVIVOR) {
        notes.push("realized by the rational cuspidal quintic with four cusps".into());
        ("survivor", None)
    } else {
        ("unresolved", None)
    };
    Ok(CaseReport {
        case: letter.map_or_else(|| "?".to_string(), |l| l.to_string()),
        cusps: names,
        d,
        p2,
        filters: FilterLabels { hurwitz: hurwitz.label().into(), matsuoka_sakai: ms.label().into() },
        status: status.into(),
        eliminated_by: by.map(str::to_string),
        lambdas: cfg.lambdas(),
        ind_sum: g.ind_sum,
        lambda_sum: g.lambda_sum,
        b0_delta_minus: g.b0_delta_minus,
        delta: g.delta,
        witnesses: Witnesses { hurwitz, matsuoka_sakai: ms, delta_bound },
        audit,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(1, 4), vec![vec![0, 0, 0, 0]]);
    }
}
