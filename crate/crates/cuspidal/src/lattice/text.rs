//! Text formats for graphs.
//!
//! Three forms are accepted:
//!
//! * chain literal `[2,1,3]`;
//! * fork `B(3){[2,3],[2],[3,1,2]}`: branch weight, then tip-first twigs
//!   whose last entry meets the branch vertex;
//! * adjacency lines `label:weight -> n1, n2`, separated by newlines or `;`.
//!   Edges may be listed from either side. `@L label` marks the (-1)-vertex
//!   and `#` starts a comment.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::chain::Chain;
use super::graph::DualGraph;
use crate::error::{Error, Result};

pub fn parse_graph(s: &str) -> Result<DualGraph> {
    let t = s.trim();
    let mut g = if t.starts_with('[') {
        t.parse::<Chain>()?.to_graph()
    } else if t.starts_with("B(") {
        parse_fork(t)?
    } else {
        return parse_adjacency(t);
    };
    if let Ok(l) = g.minus_one() {
        g.set_marked(Some(l));
    }
    Ok(g)
}

fn parse_fork(t: &str) -> Result<DualGraph> {
    let bad = || Error::Parse(format!("malformed fork {t:?}"));
    let rest = t.strip_prefix("B(").ok_or_else(bad)?;
    let (w, rest) = rest.split_once(')').ok_or_else(bad)?;
    let w: i64 = w.trim().parse().map_err(|_| bad())?;
    let body = rest
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut g = DualGraph::new();
    let b = g.add_vertex("b", w)?;
    let mut depth = 0;
    let mut start = 0;
    let mut twigs = Vec::new();
    for (i, ch) in body.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    twigs.push(body[start..=i].parse::<Chain>()?);
                }
            }
            _ => {}
        }
    }
    if depth != 0 || twigs.is_empty() {
        return Err(bad());
    }
    for (k, tw) in twigs.iter().enumerate() {
        let mut prev = None;
        for (i, &a) in tw.weights().iter().enumerate() {
            let v = g.add_vertex(format!("t{}_{}", k + 1, i + 1), a)?;
            if let Some(p) = prev {
                g.add_edge(p, v)?;
            }
            prev = Some(v);
        }
        if let Some(p) = prev {
            g.add_edge(p, b)?;
        }
    }
    Ok(g)
}

fn parse_adjacency(t: &str) -> Result<DualGraph> {
    let mut weights: BTreeMap<String, i64> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut mark: Option<String> = None;
    for raw in t.split(['\n', ';']) {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(m) = line.strip_prefix("@L") {
            mark = Some(m.trim().to_string());
            continue;
        }
        let (head, tail) = match line.split_once("->") {
            Some((h, t)) => (h.trim(), t.trim()),
            None => (line, ""),
        };
        let (name, w) = head
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected label:weight in {line:?}")))?;
        let name = name.trim().to_string();
        let w: i64 = w
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight in {line:?}")))?;
        if weights.insert(name.clone(), w).is_some() {
            return Err(Error::Parse(format!("vertex {name} declared twice")));
        }
        order.push(name.clone());
        for n in tail.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            edges.push((name.clone(), n.to_string()));
        }
    }
    let mut g = DualGraph::new();
    for name in &order {
        g.add_vertex(name.clone(), weights[name])?;
    }
    for (a, b) in edges {
        let u = g.index_of(&a).expect("declared");
        let v = g
            .index_of(&b)
            .ok_or_else(|| Error::Parse(format!("undeclared neighbor {b}")))?;
        if !g.adjacent(u, v) {
            g.add_edge(u, v)?;
        }
    }
    if let Some(m) = mark {
        let v = g
            .index_of(&m)
            .ok_or_else(|| Error::Parse(format!("unknown marked vertex {m}")))?;
        g.set_marked(Some(v));
    }
    Ok(g)
}

pub fn render_adjacency(g: &DualGraph) -> String {
    let mut out = String::new();
    for v in 0..g.len() {
        let ns: Vec<&str> = g.neighbors(v).map(|u| g.label(u)).collect();
        out.push_str(&format!("{}:{} -> {}\n", g.label(v), g.weight(v), ns.join(", ")));
    }
    if let Some(m) = g.marked() {
        out.push_str(&format!("@L {}\n", g.label(m)));
    }
    out
}

fn weights_of(g: &DualGraph, vs: &[usize]) -> Chain {
    Chain::new(vs.iter().map(|&v| g.weight(v)).collect()).expect("positive weights")
}

/// Compact rendering: a chain literal, a fork, or adjacency lines.
///
/// A chain with a (-1)-vertex is read starting from the side of smaller
/// discriminant. Fork twigs are tip-first, the twig through the (-1)-vertex
/// last and the others by decreasing discriminant.
pub fn render_compact(g: &DualGraph) -> String {
    if let Some(order) = g.chain_order() {
        return orient_chain(g, order).to_string();
    }
    if let Some(s) = render_fork(g) {
        return s;
    }
    render_adjacency(g)
}

fn orient_chain(g: &DualGraph, order: Vec<usize>) -> Chain {
    let fwd = weights_of(g, &order);
    let rev = fwd.reversed();
    if let Ok(l) = g.minus_one() {
        let i = order.iter().position(|&v| v == l).expect("in chain");
        let left = Chain::new(fwd.weights()[..i].to_vec()).expect("positive");
        let right = Chain::new(fwd.weights()[i + 1..].to_vec()).expect("positive");
        let (dl, dr) = (left.discriminant(), right.discriminant());
        if dl != dr {
            return if dl < dr { fwd } else { rev };
        }
    }
    std::cmp::min(fwd, rev)
}

fn render_fork(g: &DualGraph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let branch: Vec<usize> = (0..g.len()).filter(|&v| g.degree(v) >= 3).collect();
    let [b] = branch[..] else { return None };
    let l = g.minus_one().ok();
    let mut twigs: Vec<(bool, BigInt, Chain)> = Vec::new();
    for start in g.neighbors(b) {
        let mut arm = vec![start];
        let mut prev = b;
        let mut cur = start;
        while let Some(n) = g.neighbors(cur).find(|&u| u != prev) {
            arm.push(n);
            prev = cur;
            cur = n;
        }
        arm.reverse();
        let has_l = l.is_some_and(|l| arm.contains(&l));
        let c = weights_of(g, &arm);
        twigs.push((has_l, c.discriminant(), c));
    }
    twigs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
    let parts: Vec<String> = twigs.iter().map(|t| t.2.to_string()).collect();
    Some(format!("B({}){{{}}}", g.weight(b), parts.join(",")))
}
