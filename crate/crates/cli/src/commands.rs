use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use cuspidal::catalog::{expansion_text, low_inductance_survey, minimizer, sequences_with_lambda, CatalogQuery, MinimizerReport, SurveyEntry};
use cuspidal::classifier::{
    audit_case, check_parametrization, quintic, run_classification, verify_perturbed_quintic, AuditCase, AuditReport,
    CaseReport, Classification, ClassifyOptions, IntPolynomial, QUINTIC_PARAMETRIZATION,
};
use cuspidal::expected;
use cuspidal::hn::{expand, CuspRecord, CuspType, HnSeq};
use cuspidal::lattice::{parse_graph, render_adjacency, Chain};
use cuspidal::{Error, Rational};

use crate::render::{json_lines, render, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "cuspidal", version, about = "Exact invariants, catalogs and case analysis for cuspidal plane curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Worker threads for catalog and classification searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the run manifest to this file instead of stderr.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolution graph of a pair sequence such as "(15,6)(3,2)".
    Expand { pairs: String },
    /// Invariants of a pair sequence.
    Invariants { pairs: String },
    /// Standard sequences with a given lambda.
    Catalog(CatalogArgs),
    /// Sequences of minimal inductance for each lambda.
    Minimizer {
        /// Single lambda; all of 3..=7 when omitted.
        #[arg(long)]
        lambda: Option<u64>,
    },
    /// Sequences with small lambda and small inductance.
    Survey {
        #[arg(long, default_value_t = 7)]
        lambda_max: u64,
        /// Inclusive upper bound for ind, as p/q.
        #[arg(long, default_value = "2/3")]
        bound: Rational,
    },
    /// Configurations of 4 or 5 cusps passing the numerical filters.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=5))]
        cusps: u64,
        /// Unfiltered catalogs and no restriction on h1.
        #[arg(long)]
        strict: bool,
    },
    /// Inductance audit of case c, d, e, f or g.
    Audit {
        #[arg(long)]
        case: AuditCase,
        /// Adjacency-format forest; the built-in fixture when omitted.
        #[arg(long)]
        forest: Option<PathBuf>,
    },
    /// Checks the parametrization of the four-cusp quintic.
    VerifyQuintic,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long)]
    pub lambda: u64,
    /// Keep sequences with ind at most this bound, as p/q.
    #[arg(long)]
    pub max_ind: Option<Rational>,
    /// Keep sequences without (-2)-twigs away from the (-1)-curve.
    #[arg(long)]
    pub no_delta_minus: bool,
    /// Component bound of the search; defaults to max(2 lambda, 3).
    #[arg(long)]
    pub max_components: Option<u64>,
}

/// Result of one command before it is written out.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    /// Differences from the built-in reference values.
    pub mismatches: Vec<String>,
    /// Named inputs, digested into the manifest.
    pub inputs: Vec<(String, String)>,
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let f = cli.format;
    match &cli.command {
        Command::Expand { pairs } => expand_cmd(pairs, f),
        Command::Invariants { pairs } => invariants_cmd(pairs, f),
        Command::Catalog(a) => catalog_cmd(a, f, cli.jobs),
        Command::Minimizer { lambda } => minimizer_cmd(*lambda, f),
        Command::Survey { lambda_max, bound } => survey_cmd(*lambda_max, bound, f),
        Command::Classify { cusps, strict } => classify_cmd(*cusps as usize, *strict, f, cli.jobs),
        Command::Audit { case, forest } => audit_cmd(*case, forest.as_ref(), f),
        Command::VerifyQuintic => quintic_cmd(f),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandRecord {
    pub pairs: String,
    pub expansion: String,
    pub adjacency: String,
    pub components: u64,
    pub outer_blowups: u64,
    pub multiplicities: String,
}

fn tuple_text(v: &[u64]) -> String {
    format!("({})", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
}

fn expand_cmd(pairs: &str, f: Format) -> Result<Outcome, Error> {
    let seq: HnSeq = pairs.parse()?;
    let e = expand(&seq)?;
    let rec = ExpandRecord {
        pairs: seq.to_string(),
        expansion: cuspidal::lattice::render_compact(&e.graph),
        adjacency: render_adjacency(&e.graph),
        components: e.graph.len() as u64,
        outer_blowups: e.outer_blowups,
        multiplicities: tuple_text(&e.multiplicities),
    };
    let stdout = match f {
        Format::Table => format!("{}\n", rec.expansion),
        _ => render(f, std::slice::from_ref(&rec), |rs| {
            let mut t = Table::new(&["pairs", "expansion", "components", "outer_blowups", "multiplicities"]);
            for r in rs {
                t.push(vec![
                    r.pairs.clone(),
                    r.expansion.clone(),
                    r.components.to_string(),
                    r.outer_blowups.to_string(),
                    r.multiplicities.clone(),
                ]);
            }
            t
        }),
    };
    Ok(Outcome { stdout, inputs: vec![("pairs".into(), pairs.into())], ..Default::default() })
}

const RECORD_HEADERS: &[&str] = &[
    "pairs",
    "lambda",
    "ind",
    "M",
    "I",
    "r",
    "s",
    "tau",
    "b0_delta",
    "b0_delta_minus",
    "tau_star",
    "delta_minus",
    "h",
    "components",
    "multiplicities",
    "semi_ordinary",
];

fn record_row(r: &CuspRecord) -> Vec<String> {
    vec![
        r.pairs.clone(),
        r.lambda.to_string(),
        r.ind.to_string(),
        r.m.to_string(),
        r.i.to_string(),
        r.r.to_string(),
        r.s.to_string(),
        r.tau.to_string(),
        r.b0_delta.to_string(),
        r.b0_delta_minus.to_string(),
        r.tau_star.to_string(),
        r.delta_minus.to_string(),
        r.h.to_string(),
        r.components.to_string(),
        r.multiplicities.clone(),
        r.semi_ordinary.to_string(),
    ]
}

fn record_table(rs: &[CuspRecord]) -> Table {
    let mut t = Table::new(RECORD_HEADERS);
    for r in rs {
        t.push(record_row(r));
    }
    t
}

fn invariants_cmd(pairs: &str, f: Format) -> Result<Outcome, Error> {
    let t = CuspType::parse(pairs)?;
    let rec = t.record();
    let stdout = match f {
        Format::Table => {
            let row = record_row(&rec);
            let kv: Vec<String> = RECORD_HEADERS[1..]
                .iter()
                .zip(&row[1..])
                .map(|(k, v)| format!("{}={v}", if *k == "lambda" { "λ" } else { k }))
                .collect();
            format!("{} {}\n", rec.pairs, reorder_kv(&kv))
        }
        _ => render(f, std::slice::from_ref(&rec), record_table),
    };
    Ok(Outcome { stdout, inputs: vec![("pairs".into(), pairs.into())], ..Default::default() })
}

/// Puts `M I r λ` first.
fn reorder_kv(kv: &[String]) -> String {
    let lead = ["M=", "I=", "r=", "λ="];
    let mut out: Vec<&str> = lead.iter().filter_map(|p| kv.iter().find(|s| s.starts_with(p)).map(String::as_str)).collect();
    out.extend(kv.iter().filter(|s| !lead.iter().any(|p| s.starts_with(p))).map(String::as_str));
    out.join(" ")
}

/// Whether the query is the one the reference list for `lambda` answers.
fn reference_query(a: &CatalogArgs) -> bool {
    let six = Rational::frac(3, 2);
    a.max_components.is_none()
        && match a.lambda {
            1..=5 => a.max_ind.is_none() && !a.no_delta_minus,
            6 => a.max_ind.as_ref() == Some(&six) && !a.no_delta_minus,
            7 => a.max_ind.is_none() && a.no_delta_minus,
            _ => false,
        }
}

fn multiset_mismatch(label: &str, got: &[String], want: &[String]) -> Option<String> {
    let mut g = got.to_vec();
    let mut w = want.to_vec();
    g.sort();
    w.sort();
    if g == w {
        return None;
    }
    let gs: BTreeSet<&String> = g.iter().collect();
    let ws: BTreeSet<&String> = w.iter().collect();
    let extra: Vec<&&String> = gs.difference(&ws).collect();
    let missing: Vec<&&String> = ws.difference(&gs).collect();
    Some(format!("{label}: {} entries, expected {}; extra {extra:?}, missing {missing:?}", g.len(), w.len()))
}

fn catalog_cmd(a: &CatalogArgs, f: Format, jobs: Option<usize>) -> Result<Outcome, Error> {
    let mut q = CatalogQuery::new(a.lambda);
    if let Some(b) = &a.max_ind {
        q = q.max_ind(b.clone());
    }
    if a.no_delta_minus {
        q = q.delta_minus_zero();
    }
    if let Some(n) = a.max_components {
        q = q.max_components(n);
    }
    let types = sequences_with_lambda(&q, jobs)?;
    let recs: Vec<CuspRecord> = types.iter().map(CuspType::record).collect();
    let mut mismatches = Vec::new();
    if reference_query(a) {
        let want: Vec<String> = expected::catalog(a.lambda).unwrap_or_default().iter().map(|s| s.to_string()).collect();
        let got: Vec<String> = recs.iter().map(|r| r.pairs.clone()).collect();
        mismatches.extend(multiset_mismatch(&format!("catalog lambda={}", a.lambda), &got, &want));
    }
    let stdout = match f {
        Format::Table => {
            let mut t = Table::new(&["pairs", "lambda", "ind", "M", "I", "r", "s", "b0_delta_minus", "expansion"]);
            for (r, ty) in recs.iter().zip(&types) {
                t.push(vec![
                    r.pairs.clone(),
                    r.lambda.to_string(),
                    r.ind.to_string(),
                    r.m.to_string(),
                    r.i.to_string(),
                    r.r.to_string(),
                    r.s.to_string(),
                    r.b0_delta_minus.to_string(),
                    expansion_text(ty),
                ]);
            }
            t.aligned()
        }
        _ => render(f, &recs, record_table),
    };
    Ok(Outcome { stdout, mismatches, inputs: Vec::new() })
}

fn same_chain(text: &str, weights: &[i64]) -> bool {
    text.parse::<Chain>().is_ok_and(|c| {
        let w = c.weights().to_vec();
        let mut r = w.clone();
        r.reverse();
        w == weights || r == weights
    })
}

fn minimizer_cmd(lambda: Option<u64>, f: Format) -> Result<Outcome, Error> {
    let lambdas: Vec<u64> = match lambda {
        Some(l) => vec![l],
        None => (3..=7).collect(),
    };
    let reports = lambdas.iter().map(|&l| minimizer(l)).collect::<Result<Vec<_>, _>>()?;
    let mut mismatches = Vec::new();
    for r in &reports {
        if r.ind != r.nu {
            mismatches.push(format!("lambda={}: min ind {} differs from nu {}", r.lambda, r.ind, r.nu));
        }
        if r.lambda >= 3 && !same_chain(&r.expansion, &expected::minimizing_chain(r.lambda)) {
            mismatches.push(format!("lambda={}: minimizer {} is not the expected chain", r.lambda, r.expansion));
        }
        if r.attained_by != 1 {
            mismatches.push(format!("lambda={}: minimum attained {} times", r.lambda, r.attained_by));
        }
    }
    let stdout = render(f, &reports, |rs: &[MinimizerReport]| {
        let mut t = Table::new(&["lambda", "nu", "ind", "expansion", "pairs", "attained_by"]);
        for r in rs {
            t.push(vec![
                r.lambda.to_string(),
                r.nu.to_string(),
                r.ind.to_string(),
                r.expansion.clone(),
                r.cusp.pairs.clone(),
                r.attained_by.to_string(),
            ]);
        }
        t
    });
    Ok(Outcome { stdout, mismatches, inputs: Vec::new() })
}

fn survey_cmd(lambda_max: u64, bound: &Rational, f: Format) -> Result<Outcome, Error> {
    let entries = low_inductance_survey(lambda_max, bound)?;
    let mut mismatches = Vec::new();
    if lambda_max == 7 && *bound == Rational::frac(2, 3) {
        let ok = entries.len() == expected::SURVEY.len()
            && expected::SURVEY.iter().all(|s| {
                let w: Vec<i64> = s.chain.parse::<Chain>().map(|c| c.weights().to_vec()).unwrap_or_default();
                entries.iter().any(|e| e.lambda == s.lambda && e.ind == s.ind() && same_chain(&e.expansion, &w))
            });
        if !ok {
            mismatches.push(format!("survey: {} entries do not match the reference divisors", entries.len()));
        }
    }
    let stdout = render(f, &entries, |es: &[SurveyEntry]| {
        let mut t = Table::new(&["lambda", "ind", "expansion", "pairs"]);
        for e in es {
            t.push(vec![e.lambda.to_string(), e.ind.to_string(), e.expansion.clone(), e.pairs.clone()]);
        }
        t
    });
    Ok(Outcome { stdout, mismatches, inputs: vec![("bound".into(), bound.to_string())] })
}

/// Final line of `classify` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifySummary {
    pub c: usize,
    pub cases: usize,
    pub mechanized_survivors: Vec<String>,
    pub survivors: Vec<String>,
}

pub fn summarize(cl: &Classification) -> ClassifySummary {
    ClassifySummary {
        c: cl.c,
        cases: cl.cases.len(),
        mechanized_survivors: cl.mechanized_survivors().iter().map(|r| r.case.clone()).collect(),
        survivors: cl.survivors().iter().map(|r| r.case.clone()).collect(),
    }
}

fn case_table(rs: &[CaseReport]) -> Table {
    let mut t = Table::new(&[
        "case",
        "cusps",
        "d",
        "p2",
        "hurwitz",
        "matsuoka_sakai",
        "status",
        "eliminated_by",
        "ind_sum",
        "lambda_sum",
    ]);
    for r in rs {
        t.push(vec![
            r.case.clone(),
            r.cusps.join(" "),
            r.d.to_string(),
            r.p2.to_string(),
            r.filters.hurwitz.clone(),
            r.filters.matsuoka_sakai.clone(),
            r.status.clone(),
            r.eliminated_by.clone().unwrap_or_default(),
            r.ind_sum.to_string(),
            r.lambda_sum.to_string(),
        ]);
    }
    t
}

fn classify_cmd(c: usize, strict: bool, f: Format, jobs: Option<usize>) -> Result<Outcome, Error> {
    let cl = run_classification(c, ClassifyOptions { strict, jobs })?;
    let summary = summarize(&cl);
    let names = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(", ") };
    let stdout = match f {
        Format::Json => json_lines(&cl.cases) + &json_lines(std::slice::from_ref(&summary)),
        Format::Csv => case_table(&cl.cases).csv(),
        Format::Table => format!(
            "{}mechanized survivors: {}\nsurvivor: {}\n",
            case_table(&cl.cases).aligned(),
            names(&summary.mechanized_survivors),
            names(&summary.survivors)
        ),
    };
    Ok(Outcome {
        stdout,
        mismatches: cl.mismatches(),
        inputs: vec![("cusps".into(), c.to_string()), ("strict".into(), strict.to_string())],
    })
}

fn audit_cmd(case: AuditCase, forest: Option<&PathBuf>, f: Format) -> Result<Outcome, Error> {
    let (text, builtin) = match forest {
        Some(p) => (
            std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", p.display())))?,
            false,
        ),
        None => (case.fixture().to_string(), true),
    };
    let g = parse_graph(&text)?;
    let r = audit_case(case, &g)?;
    let mut mismatches = Vec::new();
    if builtin {
        mismatches.extend(audit_mismatch(&r));
    }
    let stdout = render(f, std::slice::from_ref(&r), |rs: &[AuditReport]| {
        let mut t = Table::new(&["case", "group", "ind"]);
        for r in rs {
            for g in &r.groups {
                t.push(vec![r.case.to_string(), g.group.clone(), g.ind.to_string()]);
            }
            t.push(vec![r.case.to_string(), r.divisor.clone(), r.ind.to_string()]);
            if let Some(b) = &r.ind_bound {
                t.push(vec![r.case.to_string(), "bound".into(), b.to_string()]);
            }
            if let Some(b) = &r.bmy {
                t.push(vec![r.case.to_string(), "(K+B-Bk B)^2".into(), b.square.to_string()]);
                t.push(vec![r.case.to_string(), "bmy bound".into(), b.bound.to_string()]);
            }
            t.push(vec![r.case.to_string(), "contradiction".into(), r.contradiction.to_string()]);
        }
        t
    });
    Ok(Outcome { stdout, mismatches, inputs: vec![("forest".into(), text)] })
}

fn audit_mismatch(r: &AuditReport) -> Option<String> {
    let want = |s: &str| s.parse::<Rational>().expect("reference literal");
    let ok = match r.case {
        AuditCase::G => {
            let g = expected::AUDIT_G;
            let grp = |n: &str| r.groups.iter().find(|x| x.group == n).map(|x| x.ind.clone());
            r.bmy.as_ref().is_some_and(|b| b.square == want(g.square) && b.bound == want(g.bmy))
                && grp("q1") == Some(want(g.q1))
                && grp("q2") == Some(want(g.q2))
                && r.ind == want(g.b)
        }
        c => expected::AUDIT_IND
            .iter()
            .find(|(l, _)| *l == c.letter())
            .is_some_and(|(_, v)| r.ind == want(v)),
    };
    (!ok || !r.contradiction).then(|| format!("audit {}: values differ from the reference", r.case))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinticReport {
    pub polynomial: String,
    pub parametrization: Vec<String>,
    pub identity: bool,
    pub singular_point: String,
    pub singular: bool,
    pub perturbed_holds: bool,
}

fn quintic_cmd(f: Format) -> Result<Outcome, Error> {
    let phi = QUINTIC_PARAMETRIZATION.map(|s| s.parse::<IntPolynomial>().expect("built-in"));
    let c = check_parametrization(&quintic(), &phi)?;
    let rep = QuinticReport {
        polynomial: quintic().to_string(),
        parametrization: phi.iter().map(ToString::to_string).collect(),
        identity: c.composed.is_zero(),
        singular_point: format!("[{}:{}:{}]", c.point[0], c.point[1], c.point[2]),
        singular: c.value == 0.into() && c.gradient.iter().all(|g| *g == 0.into()),
        perturbed_holds: verify_perturbed_quintic(),
    };
    let mut mismatches = Vec::new();
    if !(rep.identity && rep.singular) {
        mismatches.push("quintic check failed".into());
    }
    if rep.perturbed_holds {
        mismatches.push("perturbed quintic passes the check".into());
    }
    let stdout = render(f, std::slice::from_ref(&rep), |rs: &[QuinticReport]| {
        let mut t = Table::new(&["check", "value"]);
        for r in rs {
            t.push(vec!["F".into(), r.polynomial.clone()]);
            t.push(vec!["phi".into(), format!("[{}]", r.parametrization.join(" : "))]);
            t.push(vec!["F(phi) = 0".into(), r.identity.to_string()]);
            t.push(vec![format!("singular at {}", r.singular_point), r.singular.to_string()]);
            t.push(vec!["perturbed control holds".into(), r.perturbed_holds.to_string()]);
        }
        t
    });
    Ok(Outcome { stdout, mismatches, inputs: Vec::new() })
}
