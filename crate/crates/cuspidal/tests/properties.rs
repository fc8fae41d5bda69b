use num_bigint::BigInt;
use proptest::prelude::*;

use cuspidal::catalog::{all_standard_sequences, sequences_with_lambda, CatalogQuery};
use cuspidal::hn::{
    b0_delta_formula, expand, i_of, ind_formula, lambda_formula, m_of, mult_sequence, pairs_from_tree, r_formula,
    s_formula, tree_invariants, CuspType, HnSeq,
};
use cuspidal::lattice::{parse_graph, render_compact, Chain, DualGraph};
use cuspidal::Rational;

fn chain(ws: &[i64]) -> Chain {
    Chain::new(ws.to_vec()).unwrap()
}

#[test]
fn formulas_agree_with_trees() {
    let all = all_standard_sequences(12).unwrap();
    assert!(all.len() > 1000);
    for s in &all {
        let e = expand(s).unwrap();
        let t = tree_invariants(&e).unwrap();
        assert_eq!(t.ind, ind_formula(s).unwrap(), "ind {s}");
        assert_eq!(t.lambda, lambda_formula(s).unwrap(), "lambda {s}");
        assert_eq!(t.s, s_formula(s).unwrap(), "s {s}");
        assert_eq!(t.b0_delta, b0_delta_formula(s).unwrap(), "b0 {s}");
        assert_eq!(t.r, r_formula(s).unwrap(), "r {s}");
        assert_eq!(t.components, s.components());
    }
}

#[test]
fn expansions_round_trip() {
    for s in all_standard_sequences(12).unwrap() {
        let g = expand(&s).unwrap().graph;
        assert!(g.contracts_to_smooth_point(), "{s}");
        assert_eq!(g.weights().iter().filter(|&&w| w == 1).count(), 1, "{s}");
        assert_eq!(pairs_from_tree(&g).unwrap(), s);
        let text = render_compact(&g);
        assert_eq!(pairs_from_tree(&parse_graph(&text).unwrap()).unwrap(), s, "{text}");
    }
}

#[test]
fn moment_identities() {
    for s in all_standard_sequences(12).unwrap() {
        let mu = mult_sequence(&s).unwrap();
        assert_eq!(m_of(&s).unwrap(), mu.iter().sum::<u64>(), "{s}");
        assert_eq!(i_of(&s).unwrap(), mu.iter().map(|m| m * m).sum::<u64>(), "{s}");
        assert_eq!(expand(&s).unwrap().multiplicities, mu);
    }
}

#[test]
fn minus_two_chains() {
    for k in 0..40usize {
        assert_eq!(chain(&vec![2; k]).discriminant(), BigInt::from(k + 1));
    }
}

#[test]
fn catalog_is_independent_of_jobs() {
    for l in 1..=5 {
        let q = CatalogQuery::new(l);
        let a = sequences_with_lambda(&q, Some(1)).unwrap();
        let b = sequences_with_lambda(&q, Some(3)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn e8_is_unimodular_without_minus_one() {
    let g = parse_graph("B(2){[2],[2,2],[2,2,2,2]}").unwrap();
    assert!(g.is_negative_definite());
    assert_eq!(g.discriminant(), BigInt::from(1));
    assert!(!g.contracts_to_smooth_point());
}

fn admissible() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..8, 1..9)
}

proptest! {
    #[test]
    fn splice(a in admissible(), b in admissible()) {
        let joined: Vec<i64> = a.iter().chain(&b).copied().collect();
        let lhs = chain(&joined).discriminant();
        let rhs = chain(&a).discriminant() * chain(&b).discriminant()
            - chain(&a[..a.len() - 1]).discriminant() * chain(&b[1..]).discriminant();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn discriminant_is_symmetric_and_monotone(a in admissible(), i in 0usize..8) {
        let c = chain(&a);
        prop_assert_eq!(c.discriminant(), c.reversed().discriminant());
        let mut up = a.clone();
        let i = i % a.len();
        up[i] += 1;
        prop_assert!(chain(&up).discriminant() > c.discriminant());
        prop_assert_eq!(c.to_graph().discriminant(), c.discriminant());
        prop_assert!(c.to_graph().is_negative_definite());
    }

    #[test]
    fn bark_solves_its_equations(a in admissible()) {
        let c = chain(&a);
        let bk = c.bark().unwrap();
        let k = a.len();
        for j in 0..k {
            let mut dot = -Rational::from(a[j]) * bk[j].clone();
            if j > 0 { dot += bk[j - 1].clone(); }
            if j + 1 < k { dot += bk[j + 1].clone(); }
            let want = if j == 0 { Rational::from(-1) } else { Rational::zero() };
            prop_assert_eq!(dot, want);
        }
        prop_assert_eq!(bk[0].clone(), c.inductance().unwrap());
        prop_assert!(bk.iter().all(|b| b.is_positive() && *b <= 1));
    }

    #[test]
    fn inductance_lies_in_unit_interval(a in admissible()) {
        let ind = chain(&a).inductance().unwrap();
        prop_assert!(ind.is_positive() && ind < 1);
        let both = chain(&a).inductance_both_ends().unwrap();
        prop_assert!(both.is_positive());
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::frac(n, d);
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn pair_sequences_round_trip(c in 3u64..60, p in 2u64..60) {
        prop_assume!(c > p && num_integer::gcd(c, p) == 1);
        let s: HnSeq = format!("({c},{p})").parse().unwrap();
        let t = CuspType::new(s.clone()).unwrap();
        let g: DualGraph = expand(&s).unwrap().graph;
        prop_assert_eq!(pairs_from_tree(&g).unwrap(), s);
        prop_assert_eq!(t.components(), g.len() as u64);
    }
}
