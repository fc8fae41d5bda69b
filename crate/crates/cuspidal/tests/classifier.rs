use cuspidal::classifier::{
    degree_of, hurwitz_projection_filter, matsuoka_sakai_filter, p2_of, run_classification, ClassifyOptions,
    Configuration,
};
use cuspidal::expected::FOUR_CUSP_CASES;

#[test]
fn printed_degrees_and_p2() {
    for case in FOUR_CUSP_CASES {
        let cfg = Configuration::parse(&case.cusps).unwrap();
        let d = degree_of(&cfg).unwrap();
        assert_eq!(d, case.d, "case {}", case.letter);
        assert_eq!(p2_of(&cfg, d), case.p2 as i64, "case {}", case.letter);
    }
}

#[test]
fn non_integral_degree() {
    let cfg = Configuration::parse(&["(3,2)", "(3,2)", "(3,2)", "(3,2)"]).unwrap();
    assert_eq!(degree_of(&cfg), None);
}

#[test]
fn filters_are_monotone_in_degree() {
    for case in FOUR_CUSP_CASES {
        let cfg = Configuration::parse(&case.cusps).unwrap();
        for d in 3..20 {
            if hurwitz_projection_filter(&cfg, d).passed {
                assert!(hurwitz_projection_filter(&cfg, d + 1).passed, "case {} d={d}", case.letter);
            }
            if !matsuoka_sakai_filter(&cfg, d).passed {
                assert!(!matsuoka_sakai_filter(&cfg, d + 1).passed, "case {} d={d}", case.letter);
            }
        }
    }
}

#[test]
fn independent_of_worker_count() {
    for c in [4, 5] {
        let one = run_classification(c, ClassifyOptions { strict: false, jobs: Some(1) }).unwrap();
        let many = run_classification(c, ClassifyOptions { strict: false, jobs: Some(4) }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
    }
}

#[test]
fn strict_mode_agrees_on_four_cusps() {
    let loose = run_classification(4, ClassifyOptions::default()).unwrap();
    let strict = run_classification(4, ClassifyOptions { strict: true, jobs: None }).unwrap();
    let letters = |cl: &cuspidal::classifier::Classification| -> Vec<String> {
        let mut v: Vec<String> = cl.cases.iter().map(|r| format!("{}{}", r.case, r.status)).collect();
        v.sort();
        v
    };
    assert_eq!(letters(&loose), letters(&strict));
    assert!(strict.mismatches().is_empty());
}
