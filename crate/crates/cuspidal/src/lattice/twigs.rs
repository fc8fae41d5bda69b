use serde::{Deserialize, Serialize};

use super::chain::Chain;
use super::graph::DualGraph;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Twig {
    /// Vertex indices, tip first.
    pub vertices: Vec<usize>,
    pub chain: Chain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwigDecomposition {
    pub twigs: Vec<Twig>,
    pub residual: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InductanceMode {
    /// Sum over maximal admissible twigs.
    Twigs,
    /// Every component is an admissible chain, counted from both ends.
    BothEnds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusTwoTwig {
    pub vertices: Vec<usize>,
    pub meets_l: bool,
}

fn chain_of(g: &DualGraph, vs: &[usize]) -> Chain {
    Chain::new(vs.iter().map(|&v| g.weight(v)).collect()).expect("graph weights are positive")
}

/// Walks from tip `t` while `keep` accepts the next vertex and that vertex
/// has degree two. Returns the visited vertices and the first rejected one.
fn walk_from_tip(g: &DualGraph, t: usize, keep: impl Fn(usize) -> bool) -> (Vec<usize>, Option<usize>) {
    let mut out = vec![t];
    let mut prev = t;
    let mut cur = g.neighbors(t).next();
    while let Some(c) = cur {
        if g.degree(c) != 2 || !keep(c) || out.contains(&c) {
            return (out, Some(c));
        }
        out.push(c);
        let next = g.neighbors(c).find(|&u| u != prev);
        prev = c;
        cur = next;
    }
    (out, None)
}

fn is_admissible_chain_component(g: &DualGraph, comp: &[usize]) -> bool {
    let sub = g.induced(comp);
    sub.chain_order().is_some() && comp.iter().all(|&v| g.weight(v) >= 2)
}

fn is_admissible_fork_component(g: &DualGraph, comp: &[usize]) -> bool {
    let sub = g.induced(comp);
    sub.is_tree()
        && comp.iter().filter(|&&v| g.degree(v) >= 3).count() == 1
        && comp.iter().all(|&v| g.degree(v) <= 3 && g.weight(v) >= 2)
        && sub.is_negative_definite()
}

/// Maximal admissible twigs of `g`.
///
/// Components that are a single (-1)-vertex, an admissible chain or an
/// admissible fork have no well defined twig structure here and are
/// rejected.
pub fn twig_decomposition(g: &DualGraph) -> Result<TwigDecomposition> {
    for comp in g.components() {
        let shape = if comp.len() == 1 && g.weight(comp[0]) == 1 {
            Some("[1]")
        } else if is_admissible_chain_component(g, &comp) {
            Some("admissible chain")
        } else if is_admissible_fork_component(g, &comp) {
            Some("admissible fork")
        } else {
            None
        };
        if let Some(shape) = shape {
            let labels: Vec<&str> = comp.iter().map(|&v| g.label(v)).collect();
            return Err(Error::UnsupportedComponent(format!("{shape} on {{{}}}", labels.join(","))));
        }
    }
    let mut in_twig = vec![false; g.len()];
    let mut twigs = Vec::new();
    for t in 0..g.len() {
        if g.degree(t) > 1 || g.weight(t) < 2 || in_twig[t] {
            continue;
        }
        let (vs, _) = walk_from_tip(g, t, |v| g.weight(v) >= 2);
        for &v in &vs {
            in_twig[v] = true;
        }
        twigs.push(Twig { chain: chain_of(g, &vs), vertices: vs });
    }
    let residual = (0..g.len()).filter(|&v| !in_twig[v]).collect();
    Ok(TwigDecomposition { twigs, residual })
}

pub fn inductance_forest(g: &DualGraph, mode: InductanceMode) -> Result<Rational> {
    match mode {
        InductanceMode::Twigs => {
            let dec = twig_decomposition(g)?;
            dec.twigs.iter().map(|t| t.chain.inductance()).sum()
        }
        InductanceMode::BothEnds => g
            .components()
            .iter()
            .map(|comp| {
                let sub = g.induced(comp);
                let order = sub
                    .chain_order()
                    .ok_or_else(|| Error::Invalid("component is not a chain".into()))?;
                chain_of(&sub, &order).inductance_both_ends()
            })
            .sum(),
    }
}

/// Maximal twigs made of weight-two vertices, flagged by whether the
/// inner end is adjacent to the (-1)-vertex.
pub fn minus_two_twigs(g: &DualGraph) -> Result<Vec<MinusTwoTwig>> {
    let l = g.minus_one()?;
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for t in 0..g.len() {
        if g.degree(t) > 1 || g.weight(t) != 2 || seen[t] {
            continue;
        }
        let (vs, stop) = walk_from_tip(g, t, |v| g.weight(v) == 2);
        // A component that is one chain of weight-two vertices is reached
        // from both of its tips; extend through the far tip once.
        let mut vs = vs;
        if let Some(s) = stop {
            if g.degree(s) == 1 && g.weight(s) == 2 && !vs.contains(&s) {
                vs.push(s);
            }
        }
        for &v in &vs {
            seen[v] = true;
        }
        let last = *vs.last().expect("nonempty");
        let meets_l = g.neighbors(last).any(|u| u == l) && !vs.contains(&l);
        out.push(MinusTwoTwig { vertices: vs, meets_l });
    }
    Ok(out)
}

/// `sum 1/d(T)` over admissible chains.
pub fn delta_of(chains: &[Chain]) -> Result<Rational> {
    chains
        .iter()
        .map(|c| {
            if !c.is_admissible() {
                return Err(Error::Invalid(format!("chain {c} is not admissible")));
            }
            Rational::new(1, c.discriminant())
        })
        .sum()
}
