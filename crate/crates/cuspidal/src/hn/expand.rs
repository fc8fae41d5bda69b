//! Resolution graphs from pair sequences by simulating the blow-ups.
//!
//! The germ sits at the intersection of two tracked curves, each either an
//! exceptional curve already created or a virtual curve that never appears
//! in the graph. Each tracked curve carries the intersection number of the
//! germ with it. A blow-up creates a curve of multiplicity equal to the
//! smaller number and replaces the curve with the larger number, whose
//! number drops by the smaller one. Equal numbers end the pair: the germ
//! moves to a free point of the last curve.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::pairs::{HnPair, HnSeq};
use crate::error::{Error, Result};
use crate::lattice::{Chain, DualGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Curve {
    Real(usize),
    Virtual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    /// Vertices `e1, e2, ...` in creation order; the last one is marked.
    pub graph: DualGraph,
    /// The (-1)-vertex, where the proper transform of the germ meets.
    pub l: usize,
    /// Blow-ups at a point lying on exactly one exceptional curve.
    pub outer_blowups: u64,
    /// Multiplicity of the germ at each blown-up point.
    pub multiplicities: Vec<u64>,
    /// Vertices created by each pair.
    pub pair_vertices: Vec<Vec<usize>>,
}

struct Sim {
    graph: DualGraph,
    outer: u64,
    mults: Vec<u64>,
}

impl Sim {
    fn blow_up(&mut self, x: Curve, y: Curve, mult: u64) -> Result<usize> {
        let n = self.graph.len();
        let v = self.graph.add_vertex(format!("e{}", n + 1), 1)?;
        self.mults.push(mult);
        match (x, y) {
            (Curve::Real(a), Curve::Real(b)) => {
                // Node: the new curve separates the two.
                let mut g = std::mem::take(&mut self.graph);
                g = relink(&g, a, b, v)?;
                self.graph = g;
                self.bump(a)?;
                self.bump(b)?;
            }
            (Curve::Real(a), Curve::Virtual) | (Curve::Virtual, Curve::Real(a)) => {
                self.outer += 1;
                self.graph.add_edge(a, v)?;
                self.bump(a)?;
            }
            (Curve::Virtual, Curve::Virtual) => {}
        }
        Ok(v)
    }

    fn bump(&mut self, v: usize) -> Result<()> {
        let w = self.graph.weight(v);
        self.graph.set_weight(v, w + 1)
    }

    /// Runs one pair from state `(x: a, y: b)` and returns the last curve.
    fn run_pair(&mut self, mut x: Curve, mut a: u64, mut y: Curve, mut b: u64, scale: u64) -> Result<usize> {
        loop {
            let m = a.min(b);
            let mult = m.checked_mul(scale).ok_or(Error::Overflow("multiplicity"))?;
            let n = self.blow_up(x, y, mult)?;
            if a == b {
                return Ok(n);
            }
            if a > b {
                a -= b;
                y = Curve::Real(n);
            } else {
                b -= a;
                x = Curve::Real(n);
            }
        }
    }
}

fn relink(g: &DualGraph, a: usize, b: usize, v: usize) -> Result<DualGraph> {
    let mut out = DualGraph::new();
    for u in 0..g.len() {
        out.add_vertex(g.label(u).to_string(), g.weight(u))?;
    }
    for (x, y) in g.edges() {
        if (x, y) != (a.min(b), a.max(b)) {
            out.add_edge(x, y)?;
        }
    }
    out.add_edge(a, v)?;
    out.add_edge(v, b)?;
    Ok(out)
}

/// Expands a standard sequence into its resolution graph.
pub fn expand(seq: &HnSeq) -> Result<Expansion> {
    seq.validate().map_err(Error::NonStandard)?;
    Ok(simulate(&seq.reduced(), |k| seq.scale_of(k)))
}

fn simulate(reduced: &[HnPair], scale_of: impl Fn(usize) -> u64) -> Expansion {
    let mut sim = Sim { graph: DualGraph::new(), outer: 0, mults: Vec::new() };
    let mut pair_vertices = Vec::new();
    let mut l = None;
    for (k, q) in reduced.iter().enumerate() {
        let start = sim.graph.len();
        let prev = l.map_or(Curve::Virtual, Curve::Real);
        let last = sim
            .run_pair(prev, q.c, Curve::Virtual, q.p, scale_of(k))
            .expect("weights stay positive and sizes are checked");
        pair_vertices.push((start..sim.graph.len()).collect());
        l = Some(last);
    }
    let l = l.expect("nonempty sequence");
    sim.graph.set_marked(Some(l));
    Expansion { graph: sim.graph, l, outer_blowups: sim.outer, multiplicities: sim.mults, pair_vertices }
}

/// The contractible chain `[A, 1, B]` of a single pair, with
/// `d(A) = p/g` and `d(B) = c/g`.
pub fn chain_of_pair(c: u64, p: u64) -> Result<Chain> {
    if c == 0 || p == 0 {
        return Err(Error::Invalid(format!("invalid pair ({c},{p})")));
    }
    let g = num_integer::gcd(c, p);
    let q = HnPair::new(c / g, p / g);
    let e = simulate(&[q], |_| 1);
    let order = e.graph.chain_order().expect("single pair gives a chain");
    let i = order.iter().position(|&v| v == e.l).expect("L on chain");
    let ws: Vec<i64> = order.iter().map(|&v| e.graph.weight(v)).collect();
    let left = Chain::new(ws[..i].to_vec())?;
    let chain = Chain::new(ws)?;
    Ok(if left.discriminant() == BigInt::from(q.p) { chain } else { chain.reversed() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::render_compact;

    fn exp(s: &str) -> Expansion {
        expand(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn single_pair_chains() {
        assert_eq!(chain_of_pair(3, 2).unwrap().to_string(), "[2,1,3]");
        assert_eq!(chain_of_pair(5, 2).unwrap().to_string(), "[2,1,3,2]");
        assert_eq!(chain_of_pair(1, 1).unwrap().to_string(), "[1]");
        assert_eq!(chain_of_pair(4, 3).unwrap().to_string(), "[2,2,1,4]");
        assert_eq!(chain_of_pair(2, 1).unwrap().to_string(), "[1,2]");
    }

    #[test]
    fn forks() {
        assert_eq!(render_compact(&exp("(15,6)(3,2)").graph), "B(3){[2,3],[2],[3,1,2]}");
        assert_eq!(render_compact(&exp("(10,4)(2,3)").graph), "B(2){[2,3],[2],[2,1,3]}");
        assert_eq!(render_compact(&exp("(6,4)(2,1)").graph), "B(3){[3],[2],[2,1]}");
    }

    #[test]
    fn bookkeeping() {
        let e = exp("(10,4)(2,3)");
        assert_eq!(e.outer_blowups, 4);
        assert_eq!(e.multiplicities.iter().sum::<u64>(), 16);
        assert_eq!(e.graph.label(e.l), "e7");
        assert_eq!(exp("(15,6)(3,2)").outer_blowups, 3);
    }
}
