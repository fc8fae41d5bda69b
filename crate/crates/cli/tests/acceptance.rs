//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p cuspidal-cli --test acceptance -- --nocapture`
//! to see the report.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::Parser;
use serde_json::Value;

use cuspidal::catalog::all_standard_sequences;
use cuspidal::classifier::{run_classification, ClassifyOptions};
use cuspidal::expected;
use cuspidal::hn::{expand, i_of, m_of, mult_sequence, pairs_from_tree, tree_invariants, CuspType};
use cuspidal::lattice::{Chain, DualGraph};
use cuspidal::Rational;
use cuspidal_cli::{run, Cli};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn cli(args: &[&str]) -> Result<Vec<Value>, String> {
    let mut argv = vec!["cuspidal", "--format", "json"];
    argv.extend_from_slice(args);
    let parsed = Cli::try_parse_from(&argv).map_err(|e| e.to_string())?;
    let out = run(&parsed).map_err(|e| e.to_string())?;
    if !out.mismatches.is_empty() {
        return Err(out.mismatches.join("; "));
    }
    out.stdout.lines().map(|l| serde_json::from_str(l).map_err(|e| e.to_string())).collect()
}

fn field<'a>(v: &'a Value, key: &str) -> &'a str {
    v[key].as_str().unwrap_or_default()
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn multiset(items: impl IntoIterator<Item = String>) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for s in items {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

fn catalogs() -> Check {
    let runs: [(u64, &[&str], usize); 7] = [
        (1, &[], 1),
        (2, &[], 1),
        (3, &[], 5),
        (4, &[], 17),
        (5, &[], 54),
        (6, &["--max-ind", "3/2"], 0),
        (7, &["--no-delta-minus"], 0),
    ];
    let mut sizes = Vec::new();
    for (l, extra, size) in runs {
        let ls = l.to_string();
        let mut args = vec!["catalog", "--lambda", ls.as_str()];
        args.extend_from_slice(extra);
        let got = multiset(cli(&args)?.iter().map(|v| field(v, "pairs").to_string()));
        let want = multiset(expected::catalog(l).unwrap().iter().map(|s| s.to_string()));
        ensure(got == want, || format!("lambda={l} differs from the reference list"))?;
        ensure(size == 0 || want.values().sum::<usize>() == size, || format!("lambda={l} has the wrong size"))?;
        sizes.push(format!("{l}:{}", want.values().sum::<usize>()));
    }
    ensure(cli(&["catalog", "--lambda", "1"])?[0]["pairs"] == "(3,2)", || "lambda=1".into())?;
    ensure(cli(&["catalog", "--lambda", "2"])?[0]["pairs"] == "(5,2)", || "lambda=2".into())?;
    Ok(format!("sizes {}", sizes.join(" ")))
}

fn minima() -> Check {
    let want = [
        (3, "11/12", vec![4, 1, 2, 2]),
        (4, "11/15", vec![3, 1, 2, 3]),
        (5, "19/28", vec![4, 1, 2, 2, 3]),
        (6, "29/45", vec![5, 1, 2, 2, 2, 3]),
        (7, "41/66", vec![6, 1, 2, 2, 2, 2, 3]),
    ];
    for (l, nu, chain) in want {
        let v = &cli(&["minimizer", "--lambda", &l.to_string()])?[0];
        ensure(q(field(v, "ind")) == q(nu) && q(field(v, "nu")) == q(nu), || format!("lambda={l}: value"))?;
        let c = Chain::new(chain).unwrap();
        let e = field(v, "expansion");
        ensure(e == c.to_string() || e == c.reversed().to_string(), || format!("lambda={l}: chain {e}"))?;
        ensure(v["attained_by"] == 1, || format!("lambda={l}: not unique"))?;
    }
    Ok("11/12 11/15 19/28 29/45 41/66, each attained once".into())
}

fn survey() -> Check {
    let rows = cli(&["survey"])?;
    let got: Vec<Rational> = rows.iter().map(|v| q(field(v, "ind"))).collect();
    let two_thirds = Rational::frac(2, 3);
    let want: Vec<Rational> =
        [45, 22, 144].iter().map(|&k| two_thirds.clone() - Rational::frac(1, k)).collect();
    ensure(multiset(got.iter().map(Rational::to_string)) == multiset(want.iter().map(Rational::to_string)), || {
        format!("got {}", got.iter().map(Rational::to_string).collect::<Vec<_>>().join(", "))
    })?;
    Ok(rows.iter().map(|v| format!("{} {}", field(v, "expansion"), field(v, "ind"))).collect::<Vec<_>>().join(", "))
}

fn examples() -> Check {
    let cases = [("(15,6)(3,2)", (22, 96, 3), "B(3){[2,3],[2],[3,1,2]}"), ("(10,4)(2,3)", (16, 46, 4), "B(2){[2,3],[2],[2,1,3]}")];
    for (pairs, (m, i, r), fork) in cases {
        let v = &cli(&["invariants", pairs])?[0];
        ensure(v["M"] == m && v["I"] == i && v["r"] == r, || format!("{pairs}: M, I, r"))?;
        let e = &cli(&["expand", pairs])?[0];
        ensure(field(e, "expansion") == fork, || format!("{pairs}: {}", field(e, "expansion")))?;
    }
    Ok("(15,6)(3,2) M=22 I=96 r=3, (10,4)(2,3) M=16 I=46 r=4".into())
}

fn four_cusps() -> Check {
    let rows = cli(&["classify", "--cusps", "4"])?;
    let (summary, cases) = rows.split_last().ok_or("no output")?;
    ensure(cases.len() == 12, || format!("{} cases", cases.len()))?;
    let printed: BTreeMap<char, (u64, u64)> =
        expected::FOUR_CUSP_CASES.iter().map(|c| (c.letter, (c.d, c.p2))).collect();
    let mut hurwitz = Vec::new();
    let mut ms = Vec::new();
    let mut mechanized = Vec::new();
    for v in cases {
        let letter = field(v, "case").chars().next().unwrap();
        let dp = (v["d"].as_u64().unwrap(), v["p2"].as_u64().unwrap());
        ensure(printed.get(&letter) == Some(&dp), || format!("case {letter}: (d,p2)={dp:?}"))?;
        let h = v["filters"]["hurwitz"] == "pass";
        let m = v["filters"]["matsuoka_sakai"] == "pass";
        if !h {
            hurwitz.push(letter);
        }
        if !m {
            ms.push(letter);
        }
        if h && m {
            mechanized.push(letter);
        }
    }
    hurwitz.sort();
    ms.sort();
    mechanized.sort();
    ensure(hurwitz == ['i', 'j', 'k', 'l'], || format!("Hurwitz fails {hurwitz:?}"))?;
    ensure(ms == ['h'], || format!("Matsuoka-Sakai fails {ms:?}"))?;
    ensure(mechanized == ['a', 'b', 'c', 'd', 'e', 'f', 'g'], || format!("survivors {mechanized:?}"))?;
    ensure(summary["survivors"] == serde_json::json!(["b"]), || "final survivor".into())?;
    Ok("12 cases, Hurwitz {i,j,k,l}, Matsuoka-Sakai {h}, mechanized {a..g}".into())
}

fn five_cusps() -> Check {
    let rows = cli(&["classify", "--cusps", "5"])?;
    let summary = rows.last().ok_or("no output")?;
    ensure(summary["mechanized_survivors"] == serde_json::json!([]), || "survivors remain".into())?;
    let cl = run_classification(5, ClassifyOptions { strict: false, jobs: None }).map_err(|e| e.to_string())?;
    let mut got: Vec<(u64, Vec<u64>)> = cl.tuples.iter().map(|t| (t.p2, t.lambdas.clone())).collect();
    let mut want: Vec<(u64, Vec<u64>)> = vec![
        (1, vec![6, 1, 1, 1, 1]),
        (0, vec![3, 1, 1, 1, 1]),
        (0, vec![2, 2, 1, 1, 1]),
        (0, vec![2, 1, 1, 1, 1]),
        (0, vec![1, 1, 1, 1, 1]),
    ];
    got.sort();
    want.sort();
    ensure(got == want, || format!("tuples {got:?}"))?;
    Ok(format!("{} tuples, {} candidate(s), 0 survivors", got.len(), rows.len() - 1))
}

fn audits() -> Check {
    for (case, ind) in [("c", "71/21"), ("d", "149/42"), ("e", "157/42"), ("f", "301/90")] {
        let v = &cli(&["audit", "--case", case])?[0];
        ensure(q(field(v, "ind")) == q(ind) && q(ind) > 3, || format!("case {case}: {}", field(v, "ind")))?;
    }
    let v = &cli(&["audit", "--case", "g"])?[0];
    let group = |name: &str| {
        v["groups"].as_array().unwrap().iter().find(|g| g["group"] == name).map(|g| q(field(g, "ind")))
    };
    ensure(group("q1") == Some(q("38/11")), || "ind(Q1'-C1')".into())?;
    ensure(group("q2") == Some(q("3")), || "ind(Q2'-C2')".into())?;
    ensure(q(field(v, "ind")) == q("268/33"), || "ind(B)".into())?;
    let sq = q(field(&v["bmy"], "square"));
    let bound = q(field(&v["bmy"], "bound"));
    ensure(sq == q("37/33") && bound == q("23/44") && sq > bound, || format!("square {sq}, bound {bound}"))?;
    Ok("71/21 149/42 157/42 301/90; 38/11 3 268/33, 37/33 > 23/44".into())
}

fn quintic() -> Check {
    let v = &cli(&["verify-quintic"])?[0];
    ensure(v["identity"] == true && v["singular"] == true, || "identity or singularity".into())?;
    ensure(v["perturbed_holds"] == false, || "perturbed control holds".into())?;
    Ok("identity and singular point hold, perturbed control fails".into())
}

/// Unlabelled trees on `n` vertices as parent arrays.
fn trees(n: usize) -> Vec<Vec<usize>> {
    fn code(par: &[usize]) -> String {
        let n = par.len();
        let mut adj = vec![Vec::new(); n];
        for i in 1..n {
            adj[i].push(par[i]);
            adj[par[i]].push(i);
        }
        fn enc(adj: &[Vec<usize>], v: usize, p: usize) -> String {
            let mut c: Vec<String> = adj[v].iter().filter(|&&u| u != p).map(|&u| enc(adj, u, v)).collect();
            c.sort();
            format!("({})", c.concat())
        }
        (0..n).map(|r| enc(&adj, r, usize::MAX)).min().unwrap()
    }
    fn rec(i: usize, par: &mut Vec<usize>, seen: &mut BTreeMap<String, Vec<usize>>) {
        if i == par.len() {
            seen.entry(code(par)).or_insert_with(|| par.clone());
            return;
        }
        for j in 0..i {
            par[i] = j;
            rec(i + 1, par, seen);
        }
    }
    let mut seen = BTreeMap::new();
    rec(1, &mut vec![0; n], &mut seen);
    seen.into_values().collect()
}

/// First weighted tree, by vertex count, where contraction and
/// `negative definite with d = 1` disagree.
fn contraction_counterexample(max_n: usize, max_w: i64) -> Option<DualGraph> {
    for n in 1..=max_n {
        for par in trees(n) {
            let mut g = DualGraph::new();
            for i in 0..n {
                g.add_vertex(format!("v{i}"), 1).unwrap();
            }
            for (i, &p) in par.iter().enumerate().skip(1) {
                g.add_edge(p, i).unwrap();
            }
            let mut w = vec![1i64; n];
            loop {
                for (i, &x) in w.iter().enumerate() {
                    g.set_weight(i, x).unwrap();
                }
                let unimodular = g.is_negative_definite() && g.discriminant() == 1.into();
                if g.contracts_to_smooth_point() != unimodular {
                    return Some(g);
                }
                let Some(k) = w.iter().position(|&x| x < max_w) else { break };
                w[..k].fill(1);
                w[k] += 1;
            }
        }
    }
    None
}

fn properties() -> Check {
    let all = all_standard_sequences(12).map_err(|e| e.to_string())?;
    for s in &all {
        let t = CuspType::new(s.clone()).map_err(|e| e.to_string())?;
        let e = expand(s).map_err(|e| e.to_string())?;
        let tree = tree_invariants(&e).map_err(|e| e.to_string())?;
        ensure(
            tree.ind == *t.ind()
                && tree.lambda == t.lambda()
                && tree.s == t.s()
                && tree.b0_delta == t.b0_delta()
                && tree.r == t.r(),
            || format!("{s}: formula and tree differ"),
        )?;
        ensure(pairs_from_tree(&e.graph).ok().as_ref() == Some(s), || format!("{s}: round trip"))?;
        let mu = mult_sequence(s).unwrap();
        ensure(m_of(s).unwrap() == mu.iter().sum::<u64>(), || format!("{s}: M"))?;
        ensure(i_of(s).unwrap() == mu.iter().map(|m| m * m).sum::<u64>(), || format!("{s}: I"))?;
    }
    for a in 2..7i64 {
        for b in 2..7i64 {
            for c in 2..7i64 {
                let ch = Chain::new(vec![a, b, c]).unwrap();
                let bk = ch.bark().unwrap();
                let dots = [
                    -Rational::from(a) * bk[0].clone() + bk[1].clone(),
                    bk[0].clone() - Rational::from(b) * bk[1].clone() + bk[2].clone(),
                    bk[1].clone() - Rational::from(c) * bk[2].clone(),
                ];
                ensure(dots == [Rational::from(-1), Rational::zero(), Rational::zero()], || format!("bark of {ch}"))?;
            }
        }
    }
    if let Some(g) = contraction_counterexample(8, 6) {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        return Err(format!(
            "{} standard sequences agree; contraction and negative definiteness with d=1 disagree on weights {:?}, edges {}",
            all.len(),
            g.weights(),
            edges.join(" ")
        ));
    }
    Ok(format!("{} standard sequences, barks, contraction equivalence", all.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("catalog reproduction", catalogs),
        ("nu minima", minima),
        ("low-inductance survey", survey),
        ("example values", examples),
        ("four cusps", four_cusps),
        ("five cusps", five_cusps),
        ("audits", audits),
        ("quintic", quintic),
        ("property suites", properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let ms = start.elapsed().as_millis();
        match r {
            Ok(detail) => println!("criterion {}: PASS {name} ({ms} ms): {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name} ({ms} ms): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
