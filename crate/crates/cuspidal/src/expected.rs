//! Reference values the computations are checked against.
//!
//! The tables are literal transcriptions: catalogs of cusp types by
//! `lambda`, the minimizing chains, the low-inductance divisors, the
//! lettered four-cusp cases with their filter outcomes, the five-cusp
//! `lambda`-tuples and the audit fractions.

use crate::hn::HnSeq;
use crate::rational::Rational;

const LAMBDA_1: &[&str] = &[
    "(3,2)",
];

const LAMBDA_2: &[&str] = &[
    "(5,2)",
];

const LAMBDA_3: &[&str] = &[
    "(4,3)", "(7,2)", "(7,3)", "(6,4)(2,1)", "(10,4)(2,1)",
];

const LAMBDA_4: &[&str] = &[
    "(5,3)", "(5,4)", "(7,5)", "(8,3)", "(9,2)", "(9,4)", "(10,3)", "(12,5)", "(6,4)(2,3)",
    "(10,4)(2,3)", "(9,6)(3,1)", "(15,6)(3,1)", "(8,6)(2,1)", "(14,4)(2,1)", "(14,6)(2,1)",
    "(12,8)(4,2)(2,1)", "(20,8)(4,2)(2,1)",
];

const LAMBDA_5: &[&str] = &[
    "(7,4)", "(8,5)", "(6,5)", "(9,7)", "(10,7)", "(11,3)", "(11,4)", "(11,8)", "(13,5)", "(11,2)",
    "(11,5)", "(13,3)", "(13,4)", "(16,7)", "(17,5)", "(17,7)", "(19,8)", "(6,4)(2,5)",
    "(10,4)(2,5)", "(9,6)(3,2)", "(15,6)(3,2)", "(9,6)(3,4)", "(15,6)(3,4)", "(12,8)(4,1)",
    "(20,8)(4,1)", "(15,10)(5,2)", "(25,10)(5,2)", "(8,6)(2,3)", "(14,4)(2,3)", "(14,6)(2,3)",
    "(12,9)(3,1)", "(21,6)(3,1)", "(21,9)(3,1)", "(10,6)(2,1)", "(10,8)(2,1)", "(14,10)(2,1)",
    "(16,6)(2,1)", "(18,4)(2,1)", "(18,8)(2,1)", "(20,6)(2,1)", "(24,10)(2,1)", "(12,8)(4,2)(2,3)",
    "(20,8)(4,2)(2,3)", "(18,12)(6,3)(3,1)", "(30,12)(6,3)(3,1)", "(12,8)(4,6)(2,1)",
    "(20,8)(4,6)(2,1)", "(18,12)(6,2)(2,1)", "(30,12)(6,2)(2,1)", "(16,12)(4,2)(2,1)",
    "(28,8)(4,2)(2,1)", "(28,12)(4,2)(2,1)", "(24,16)(8,4)(4,2)(2,1)", "(40,16)(8,4)(4,2)(2,1)",
];

const LAMBDA_6: &[&str] = &[
    "(9,5)", "(11,7)", "(12,7)", "(13,8)", "(7,6)", "(11,9)", "(13,9)", "(13,10)", "(14,3)",
    "(14,5)", "(14,11)", "(15,4)", "(15,11)", "(17,12)", "(18,5)", "(18,7)", "(18,13)", "(19,7)",
    "(21,8)", "(13,2)", "(13,6)", "(16,3)", "(16,5)", "(20,9)", "(22,5)", "(22,9)", "(23,7)",
    "(23,10)", "(24,7)", "(25,11)", "(26,11)", "(27,8)", "(29,12)", "(31,13)", "(6,4)(2,7)",
    "(9,6)(3,5)", "(15,6)(3,5)", "(9,6)(3,7)", "(12,8)(4,3)", "(20,8)(4,3)", "(15,10)(5,3)",
    "(25,10)(5,3)", "(15,10)(5,7)", "(21,14)(7,3)", "(24,16)(8,3)", "(8,6)(2,5)", "(12,9)(3,2)",
    "(10,6)(2,3)", "(10,8)(2,3)", "(14,10)(2,3)", "(16,6)(2,3)", "(15,9)(3,1)", "(14,8)(2,1)",
    "(16,10)(2,1)", "(12,10)(2,1)", "(18,14)(2,1)", "(20,14)(2,1)", "(22,8)(2,1)", "(22,16)(2,1)",
];

const LAMBDA_7: &[&str] = &[
    "(11,6)", "(14,9)", "(16,9)", "(17,10)", "(18,11)", "(19,11)", "(19,12)", "(21,13)", "(8,7)",
    "(15,2)", "(10,6)(2,5)", "(15,9)(3,2)", "(15,9)(3,4)", "(20,12)(4,1)", "(14,8)(2,3)",
    "(16,10)(2,3)", "(21,12)(3,1)", "(24,15)(3,1)", "(18,10)(2,1)", "(22,14)(2,1)", "(24,14)(2,1)",
    "(26,16)(2,1)",
];

/// Catalog for `lambda` in `1..=7`. For 6 the list is restricted to
/// `ind <= 3/2`, for 7 to `b0(Delta^-) = 0`.
pub fn catalog(lambda: u64) -> Option<&'static [&'static str]> {
    Some(match lambda {
        1 => LAMBDA_1,
        2 => LAMBDA_2,
        3 => LAMBDA_3,
        4 => LAMBDA_4,
        5 => LAMBDA_5,
        6 => LAMBDA_6,
        7 => LAMBDA_7,
        _ => return None,
    })
}

/// Canonically sorted catalog entries.
pub fn catalog_sorted(lambda: u64) -> Option<Vec<HnSeq>> {
    let mut v: Vec<HnSeq> = catalog(lambda)?.iter().map(|s| s.parse().expect("valid literal")).collect();
    v.sort_by_cached_key(|s| (s.h(), s.pairs().iter().flat_map(|q| [q.c, q.p]).collect::<Vec<_>>()));
    Some(v)
}

/// `nu(lambda)` for `lambda` in `3..=7`.
pub const NU: &[(u64, &str)] = &[(3, "11/12"), (4, "11/15"), (5, "19/28"), (6, "29/45"), (7, "41/66")];

/// Chain of minimal inductance for `lambda >= 3`.
pub fn minimizing_chain(lambda: u64) -> Vec<i64> {
    if lambda == 3 {
        return vec![4, 1, 2, 2];
    }
    let mut w = vec![lambda as i64 - 1, 1];
    w.extend(std::iter::repeat_n(2, lambda as usize - 3));
    w.push(3);
    w
}

pub struct SurveyExpectation {
    pub chain: &'static str,
    pub lambda: u64,
    /// `2/3 - 1/k`.
    pub deficit: i64,
}

impl SurveyExpectation {
    pub fn ind(&self) -> Rational {
        Rational::frac(2, 3) - Rational::frac(1, self.deficit)
    }
}

/// Divisors with `lambda <= 7` and `ind < 2/3`.
pub const SURVEY: &[SurveyExpectation] = &[
    SurveyExpectation { chain: "[5,1,2,2,2,3]", lambda: 6, deficit: 45 },
    SurveyExpectation { chain: "[6,1,2,2,2,2,3]", lambda: 7, deficit: 22 },
    SurveyExpectation { chain: "[5,2,1,3,2,2,3]", lambda: 7, deficit: 144 },
];

pub struct PaperCase {
    pub letter: char,
    pub cusps: [&'static str; 4],
    pub d: u64,
    pub p2: u64,
}

macro_rules! case {
    ($l:literal, [$($c:literal),*], $d:literal, $p:literal) => {
        PaperCase { letter: $l, cusps: [$($c),*], d: $d, p2: $p }
    };
}

/// Four-cusp configurations passing the global numerical filters.
pub const FOUR_CUSP_CASES: &[PaperCase] = &[
    case!('a', ["(5,2)", "(5,2)", "(3,2)", "(3,2)"], 5, 0),
    case!('b', ["(7,2)", "(3,2)", "(3,2)", "(3,2)"], 5, 0),
    case!('c', ["(7,2)", "(4,3)", "(4,3)", "(3,2)"], 6, 1),
    case!('d', ["(5,3)", "(7,2)", "(5,2)", "(3,2)"], 6, 1),
    case!('e', ["(8,3)", "(7,3)", "(3,2)", "(3,2)"], 7, 1),
    case!('f', ["(9,2)", "(5,3)", "(3,2)", "(3,2)"], 6, 1),
    case!('g', ["(11,2)", "(4,3)", "(3,2)", "(3,2)"], 6, 1),
    case!('h', ["(15,2)", "(3,2)", "(3,2)", "(3,2)"], 6, 1),
    case!('i', ["(4,3)", "(3,2)", "(3,2)", "(3,2)"], 5, 0),
    case!('j', ["(4,3)", "(4,3)", "(4,3)", "(3,2)"], 6, 1),
    case!('k', ["(5,3)", "(5,2)", "(4,3)", "(3,2)"], 6, 1),
    case!('l', ["(5,3)", "(5,3)", "(3,2)", "(3,2)"], 6, 1),
];

pub const HURWITZ_FAILS: &[char] = &['i', 'j', 'k', 'l'];
pub const MATSUOKA_SAKAI_FAILS: &[char] = &['h'];
/// Cases eliminated by an inductance audit.
pub const AUDITED: &[char] = &['c', 'd', 'e', 'f', 'g'];
/// The only case left after every elimination.
pub const FINAL_SURVIVOR: char = 'b';

/// Letter of the case with the given cusps, in any order.
pub fn case_letter(cusps: &[String]) -> Option<char> {
    let mut want: Vec<&str> = cusps.iter().map(String::as_str).collect();
    want.sort_unstable();
    FOUR_CUSP_CASES.iter().find_map(|c| {
        let mut have = c.cusps.to_vec();
        have.sort_unstable();
        (have == want).then_some(c.letter)
    })
}

/// `(p2, lambda-tuple)` for five cusps.
pub const FIVE_CUSP_TUPLES: &[(u64, &[u64])] = &[
    (1, &[6, 1, 1, 1, 1]),
    (0, &[3, 1, 1, 1, 1]),
    (0, &[1, 1, 1, 1, 1]),
    (0, &[2, 1, 1, 1, 1]),
    (0, &[2, 2, 1, 1, 1]),
];

/// `ind(D+A)` for the cases eliminated with an auxiliary curve.
pub const AUDIT_IND: &[(char, &str)] = &[('c', "71/21"), ('d', "149/42"), ('e', "157/42"), ('f', "301/90")];

pub struct CaseGAudit {
    pub q1: &'static str,
    pub q2: &'static str,
    pub b: &'static str,
    pub square: &'static str,
    pub bmy: &'static str,
}

pub const AUDIT_G: CaseGAudit = CaseGAudit { q1: "38/11", q2: "3", b: "268/33", square: "37/33", bmy: "23/44" };

pub struct ExampleCusp {
    pub pairs: &'static str,
    pub m: u64,
    pub i: u64,
    pub r: u64,
    pub expansion: &'static str,
}

pub const EXAMPLE_CUSPS: &[ExampleCusp] = &[
    ExampleCusp { pairs: "(15,6)(3,2)", m: 22, i: 96, r: 3, expansion: "B(3){[2,3],[2],[3,1,2]}" },
    ExampleCusp { pairs: "(10,4)(2,3)", m: 16, i: 46, r: 4, expansion: "B(2){[2,3],[2],[2,1,3]}" },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        let sizes: Vec<usize> = (1..=7).map(|l| catalog(l).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 1, 5, 17, 54, 59, 22]);
        assert_eq!(FOUR_CUSP_CASES.len(), 12);
        assert_eq!(minimizing_chain(5), vec![4, 1, 2, 2, 3]);
        assert_eq!(SURVEY[2].ind(), Rational::frac(95, 144));
    }

    #[test]
    fn letters() {
        let v: Vec<String> = ["(3,2)", "(7,2)", "(3,2)", "(3,2)"].iter().map(|s| s.to_string()).collect();
        assert_eq!(case_letter(&v), Some('b'));
    }
}
