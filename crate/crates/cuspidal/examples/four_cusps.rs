use cuspidal::classifier::{run_classification, ClassifyOptions};

fn main() {
    let cl = run_classification(4, ClassifyOptions::default()).expect("classification runs");
    for r in &cl.cases {
        println!("({}) {} d={} p2={} {}", r.case, r.cusps.join(" "), r.d, r.p2, r.status);
    }
}
