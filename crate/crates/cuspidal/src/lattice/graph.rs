use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weighted dual graph of a divisor with rational components.
///
/// A weight `a` stands for a curve of self-intersection `-a`, so a weight of
/// one is a (-1)-curve. Graphs are simple: no loops, no multiple edges.
/// Cycles are allowed, but only the forest operations are defined for them
/// where noted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DualGraph {
    labels: Vec<String>,
    weights: Vec<i64>,
    adj: Vec<BTreeSet<usize>>,
    marked: Option<usize>,
}

impl DualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, weight: i64) -> Result<usize> {
        if weight < 1 {
            return Err(Error::InvalidWeight(weight));
        }
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(Error::InvalidGraph(format!("duplicate vertex {label}")));
        }
        self.labels.push(label);
        self.weights.push(weight);
        self.adj.push(BTreeSet::new());
        Ok(self.labels.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.len() || v >= self.len() {
            return Err(Error::InvalidGraph("edge endpoint out of range".into()));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at {}", self.labels[u])));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge {} - {}",
                self.labels[u], self.labels[v]
            )));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    /// Path graph with the given weights, vertices labelled `v1, v2, ...`.
    pub fn path(weights: &[i64]) -> Result<Self> {
        let mut g = DualGraph::new();
        for (i, &w) in weights.iter().enumerate() {
            let v = g.add_vertex(format!("v{}", i + 1), w)?;
            if i > 0 {
                g.add_edge(v - 1, v)?;
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn set_weight(&mut self, v: usize, w: i64) -> Result<()> {
        if w < 1 {
            return Err(Error::InvalidWeight(w));
        }
        self.weights[v] = w;
        Ok(())
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// The marked (-1)-vertex, if one was set.
    pub fn marked(&self) -> Option<usize> {
        self.marked
    }

    pub fn set_marked(&mut self, v: Option<usize>) {
        self.marked = v;
    }

    /// The marked vertex, or else the unique vertex of weight one.
    pub fn minus_one(&self) -> Result<usize> {
        if let Some(v) = self.marked {
            return Ok(v);
        }
        let ones: Vec<usize> = (0..self.len()).filter(|&v| self.weights[v] == 1).collect();
        match ones.as_slice() {
            [v] => Ok(*v),
            _ => Err(Error::NoMinusOne),
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected()
    }

    /// Vertices of a connected path graph, read from one end.
    ///
    /// Returns `None` unless the graph is a nonempty chain.
    pub fn chain_order(&self) -> Option<Vec<usize>> {
        if self.is_empty() || !self.is_tree() || self.adj.iter().any(|n| n.len() > 2) {
            return None;
        }
        let start = (0..self.len()).find(|&v| self.degree(v) <= 1)?;
        Some(self.walk_path(start))
    }

    fn walk_path(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur].iter().copied().find(|&u| u != prev);
            match next {
                Some(n) if !order.contains(&n) => {
                    order.push(n);
                    prev = cur;
                    cur = n;
                }
                _ => break,
            }
        }
        order
    }

    /// Subgraph induced on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> DualGraph {
        let mut index = HashMap::new();
        for (i, &v) in keep.iter().enumerate() {
            index.insert(v, i);
        }
        let mut g = DualGraph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
            adj: vec![BTreeSet::new(); keep.len()],
            marked: self.marked.and_then(|m| index.get(&m).copied()),
        };
        for (i, &v) in keep.iter().enumerate() {
            for u in &self.adj[v] {
                if let Some(&j) = index.get(u) {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Subgraph with the given vertices deleted.
    pub fn without(&self, remove: &[usize]) -> DualGraph {
        let keep: Vec<usize> = (0..self.len()).filter(|v| !remove.contains(v)).collect();
        self.induced(&keep)
    }

    /// Copy with every label prefixed by `prefix`.
    pub fn relabel(&self, prefix: &str) -> DualGraph {
        let mut g = self.clone();
        for l in &mut g.labels {
            *l = format!("{prefix}{l}");
        }
        g
    }

    /// Disjoint union; labels of `other` must not collide.
    pub fn disjoint_union(&self, other: &DualGraph) -> Result<DualGraph> {
        let mut g = self.clone();
        let off = g.len();
        for v in 0..other.len() {
            g.add_vertex(other.labels[v].clone(), other.weights[v])?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)?;
        }
        Ok(g)
    }

    /// The matrix `-Q`: weights on the diagonal, `-1` for each edge.
    pub fn neg_intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (v, row) in m.iter_mut().enumerate() {
            row[v] = self.weights[v];
            for &u in &self.adj[v] {
                row[u] = -1;
            }
        }
        m
    }

    /// `d = det(-Q)`, with `d` of the empty graph equal to one.
    pub fn discriminant(&self) -> BigInt {
        if self.is_forest() {
            match forest_discriminant::<i128>(self) {
                Some((d, _)) => BigInt::from(d),
                None => forest_discriminant::<BigInt>(self).expect("exact").0,
            }
        } else {
            bareiss_determinant(&self.neg_intersection_matrix())
        }
    }

    /// Whether `Q` is negative definite, by the signs of the leading
    /// principal minors of `-Q`.
    pub fn is_negative_definite(&self) -> bool {
        if self.is_forest() {
            return match forest_discriminant::<i128>(self) {
                Some((_, p)) => p,
                None => forest_discriminant::<BigInt>(self).expect("exact").1,
            };
        }
        let m = self.neg_intersection_matrix();
        match leading_minors_positive::<i128>(&m) {
            Some(b) => b,
            None => leading_minors_positive::<BigInt>(&m).expect("exact"),
        }
    }

    /// Whether repeated contraction of (-1)-vertices of degree at most two
    /// empties the graph.
    pub fn contracts_to_smooth_point(&self) -> bool {
        if !self.is_forest() {
            return false;
        }
        let mut w = Contraction::new(self);
        let all = vec![true; self.len()];
        w.run(&all);
        w.alive_count() == 0
    }

    /// Contracts (-1)-vertices of degree at most two lying in `allowed`
    /// until none remains. Returns the contracted graph and, for every
    /// surviving vertex, its index in `self`.
    pub fn contract_within(&self, allowed: &[bool]) -> Result<(DualGraph, Vec<usize>)> {
        if !self.is_forest() {
            return Err(Error::InvalidGraph("contraction needs a forest".into()));
        }
        let mut w = Contraction::new(self);
        w.run(allowed);
        w.into_graph(self)
    }
}

struct Contraction {
    weights: Vec<i64>,
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl Contraction {
    fn new(g: &DualGraph) -> Self {
        Contraction {
            weights: g.weights.clone(),
            adj: g.adj.clone(),
            alive: vec![true; g.len()],
        }
    }

    fn alive_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn run(&mut self, allowed: &[bool]) {
        while let Some(v) = (0..self.weights.len())
            .find(|&v| self.alive[v] && allowed[v] && self.weights[v] == 1 && self.adj[v].len() <= 2)
        {
            self.blow_down(v);
        }
    }

    fn blow_down(&mut self, v: usize) {
        let ns: Vec<usize> = std::mem::take(&mut self.adj[v]).into_iter().collect();
        self.alive[v] = false;
        for &u in &ns {
            self.adj[u].remove(&v);
            self.weights[u] -= 1;
        }
        if let [a, b] = ns[..] {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    fn into_graph(self, g: &DualGraph) -> Result<(DualGraph, Vec<usize>)> {
        let keep: Vec<usize> = (0..g.len()).filter(|&v| self.alive[v]).collect();
        let mut out = DualGraph::new();
        for &v in &keep {
            out.add_vertex(g.labels[v].clone(), self.weights[v])?;
        }
        for (i, &v) in keep.iter().enumerate() {
            for (j, &u) in keep.iter().enumerate().skip(i + 1) {
                if self.adj[v].contains(&u) {
                    out.add_edge(i, j)?;
                }
            }
        }
        Ok((out, keep))
    }
}

/// Integer arithmetic that may report overflow.
trait Exact: Sized + Clone + PartialOrd {
    fn lift(x: i64) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn positive(&self) -> bool;
}

impl Exact for i128 {
    fn lift(x: i64) -> Self {
        x as i128
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.checked_div(*o)
    }
    fn positive(&self) -> bool {
        *self > 0
    }
}

impl Exact for BigInt {
    fn lift(x: i64) -> Self {
        BigInt::from(x)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn positive(&self) -> bool {
        self.is_positive()
    }
}

/// Leaf-to-root recursion `d(T_v) = a_v prod d(T_c) - sum_c d(T_c - c) prod_{c' != c} d(T_c')`.
///
/// Also reports whether every rooted subtree has positive discriminant,
/// which holds exactly when the forest is negative definite.
fn forest_discriminant<T: Exact>(g: &DualGraph) -> Option<(T, bool)> {
    let n = g.len();
    let mut full: Vec<Option<T>> = vec![None; n];
    let mut cut: Vec<Option<T>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut total = T::lift(1);
    let mut definite = true;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        let mut order = vec![root];
        visited[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &u in &g.adj[v] {
                if !visited[u] {
                    visited[u] = true;
                    parent[u] = v;
                    order.push(u);
                }
            }
        }
        for &v in order.iter().rev() {
            let children: Vec<usize> = g.adj[v].iter().copied().filter(|&u| parent[u] == v).collect();
            let mut prod = T::lift(1);
            for &c in &children {
                prod = prod.mul(full[c].as_ref()?)?;
            }
            let mut d = T::lift(g.weights[v]).mul(&prod)?;
            for &c in &children {
                let mut term = cut[c].clone()?;
                for &o in &children {
                    if o != c {
                        term = term.mul(full[o].as_ref()?)?;
                    }
                }
                d = d.sub(&term)?;
            }
            definite &= d.positive();
            full[v] = Some(d);
            cut[v] = Some(prod);
        }
        total = total.mul(full[root].as_ref()?)?;
    }
    Some((total, definite))
}

fn leading_minors_positive<T: Exact>(m: &[Vec<i64>]) -> Option<bool> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.iter().map(|r| r.iter().map(|&x| T::lift(x)).collect()).collect();
    let mut prev = T::lift(1);
    for k in 0..n {
        if !a[k][k].positive() {
            return Some(false);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j].mul(&a[k][k])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = x.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Some(true)
}

/// Determinant by fraction-free elimination with row pivoting.
pub fn bareiss_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = x / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_discriminants() {
        assert_eq!(DualGraph::path(&[2, 1, 3]).unwrap().discriminant(), BigInt::from(1));
        assert_eq!(DualGraph::path(&[2, 2]).unwrap().discriminant(), BigInt::from(3));
        assert_eq!(DualGraph::new().discriminant(), BigInt::from(1));
    }

    #[test]
    fn e8_is_unimodular_and_definite() {
        let mut g = DualGraph::path(&[2; 7]).unwrap();
        let v = g.add_vertex("x", 2).unwrap();
        g.add_edge(v, 4).unwrap();
        assert_eq!(g.discriminant(), BigInt::from(1));
        assert!(g.is_negative_definite());
        assert!(!g.contracts_to_smooth_point());
    }

    #[test]
    fn cycle_uses_general_determinant() {
        let mut g = DualGraph::path(&[3, 3, 3]).unwrap();
        g.add_edge(0, 2).unwrap();
        assert!(!g.is_forest());
        assert_eq!(g.discriminant(), bareiss_determinant(&g.neg_intersection_matrix()));
        assert_eq!(g.discriminant(), BigInt::from(16));
    }

    #[test]
    fn contraction_of_chain() {
        assert!(DualGraph::path(&[2, 1, 3, 2]).unwrap().contracts_to_smooth_point());
        assert!(!DualGraph::path(&[2, 1, 2]).unwrap().contracts_to_smooth_point());
        assert!(DualGraph::path(&[1]).unwrap().contracts_to_smooth_point());
    }

    #[test]
    fn forest_definiteness_matches_minors() {
        let shapes: [&[(usize, usize)]; 3] = [&[(0, 1), (1, 2), (2, 3)], &[(0, 1), (0, 2), (0, 3)], &[(0, 1), (2, 3)]];
        for edges in shapes {
            for code in 0..4usize.pow(4) {
                let mut g = DualGraph::new();
                for i in 0..4 {
                    g.add_vertex(format!("v{i}"), (code / 4usize.pow(i as u32) % 4) as i64 + 1).unwrap();
                }
                for &(u, v) in edges {
                    g.add_edge(u, v).unwrap();
                }
                let minors = leading_minors_positive::<BigInt>(&g.neg_intersection_matrix()).unwrap();
                assert_eq!(g.is_negative_definite(), minors, "{:?}", g.weights());
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let mut g = DualGraph::path(&[2, 2]).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 1).is_err());
        assert!(g.add_vertex("z", 0).is_err());
    }
}
