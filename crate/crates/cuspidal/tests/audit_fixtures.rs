//! Rebuilds the audit fixtures from the cusp types and compares them with
//! the shipped files. Set `BLESS=1` to rewrite the files.

use cuspidal::classifier::{audit_case, AuditCase};
use cuspidal::hn::{expand, HnSeq};
use cuspidal::lattice::{parse_graph, render_adjacency, DualGraph};

struct Spec {
    case: AuditCase,
    cusps: [&'static str; 4],
    e_weight: i64,
    /// Vertices met by `A`, or empty for the forest `B`.
    a_meets: &'static [&'static str],
    header: &'static str,
}

const SPECS: &[Spec] = &[
    Spec {
        case: AuditCase::C,
        cusps: ["(7,2)", "(4,3)", "(4,3)", "(3,2)"],
        e_weight: 8,
        a_meets: &["q2_e1", "q3_e1"],
        header: "D+A, A the line through q2 and q3 meeting the (-4)-tips",
    },
    Spec {
        case: AuditCase::D,
        cusps: ["(5,3)", "(7,2)", "(5,2)", "(3,2)"],
        e_weight: 9,
        a_meets: &["q1_e2", "E"],
        header: "D+A, A the tangent line at q1",
    },
    Spec {
        case: AuditCase::E,
        cusps: ["(8,3)", "(7,3)", "(3,2)", "(3,2)"],
        e_weight: 8,
        a_meets: &["q1_e2", "E"],
        header: "D+A, A the tangent line at q1",
    },
    Spec {
        case: AuditCase::F,
        cusps: ["(9,2)", "(5,3)", "(3,2)", "(3,2)"],
        e_weight: 9,
        a_meets: &["q2_e2", "E"],
        header: "D+A, A the tangent line at q2",
    },
    Spec {
        case: AuditCase::G,
        cusps: ["(11,2)", "(4,3)", "(3,2)", "(3,2)"],
        e_weight: 10,
        a_meets: &[],
        header: "B = D minus the (-1)-curves over q1 and q2",
    },
];

fn build(spec: &Spec) -> DualGraph {
    let mut g = DualGraph::new();
    g.add_vertex("E", spec.e_weight).unwrap();
    let mut ls = Vec::new();
    for (j, c) in spec.cusps.iter().enumerate() {
        let seq: HnSeq = c.parse().unwrap();
        let e = expand(&seq).unwrap();
        let prefix = format!("q{}_", j + 1);
        ls.push(format!("{prefix}{}", e.graph.label(e.l)));
        g = g.disjoint_union(&e.graph.relabel(&prefix)).unwrap();
    }
    let ei = g.index_of("E").unwrap();
    for l in &ls {
        let v = g.index_of(l).unwrap();
        g.add_edge(ei, v).unwrap();
    }
    if spec.a_meets.is_empty() {
        let drop: Vec<usize> = ls[..2].iter().map(|l| g.index_of(l).unwrap()).collect();
        g = g.without(&drop);
    } else {
        let a = g.add_vertex("A", 1).unwrap();
        for n in spec.a_meets {
            let v = g.index_of(n).unwrap();
            g.add_edge(a, v).unwrap();
        }
    }
    g
}

fn text(spec: &Spec) -> String {
    format!(
        "# case {}: {}\n# cusps q1..q4: {}\n{}",
        spec.case,
        spec.header,
        spec.cusps.join(" "),
        render_adjacency(&build(spec))
    )
}

#[test]
fn fixtures_match_construction() {
    let bless = std::env::var_os("BLESS").is_some();
    for spec in SPECS {
        let want = text(spec);
        if bless {
            let path = format!("{}/fixtures/audit_{}.txt", env!("CARGO_MANIFEST_DIR"), spec.case);
            std::fs::write(path, &want).unwrap();
            continue;
        }
        assert_eq!(spec.case.fixture(), want, "fixture for case {}", spec.case);
        assert_eq!(parse_graph(spec.case.fixture()).unwrap(), build(spec));
    }
}

#[test]
fn built_forests_audit() {
    for spec in SPECS {
        let r = audit_case(spec.case, &build(spec)).unwrap();
        assert!(r.contradiction, "case {}", spec.case);
    }
}
