//! Finite Hasse quivers with DOT and JSON export.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{Display, Write};

use serde::Serialize;

/// Vertices plus covering arrows `(from, to, letter)` directed from the larger
/// element to the smaller one. `letter` is the generator or mutation index.
#[derive(Clone, Debug)]
pub struct HassePoset<L> {
    pub vertices: Vec<L>,
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    extra: Option<String>,
}

#[derive(Serialize)]
struct JsonEdge {
    from: usize,
    to: usize,
    letter: usize,
}

#[derive(Serialize)]
struct JsonPoset {
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

impl<L> HassePoset<L> {
    pub fn new(vertices: Vec<L>, mut edges: Vec<(usize, usize, usize)>) -> Self {
        edges.sort();
        edges.dedup();
        HassePoset { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Arrow set without letters.
    pub fn arrow_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(a, b, _)| (a, b)).collect()
    }

    /// Number of arrows incident to each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for &(a, b, _) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.vertices.len()];
        for &(_, b, _) in &self.edges {
            has_in[b] = true;
        }
        (0..self.vertices.len()).filter(|&v| !has_in[v]).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.vertices.len()];
        for &(a, _, _) in &self.edges {
            has_out[a] = true;
        }
        (0..self.vertices.len()).filter(|&v| !has_out[v]).collect()
    }

    /// True iff `phi` (a bijection of vertex indices onto `other`'s) maps the
    /// arrows of `self` exactly onto the reversed arrows of `other`.
    pub fn is_anti_isomorphic_via<M>(&self, other: &HassePoset<M>, phi: &[usize]) -> bool {
        if phi.len() != self.vertices.len() || other.vertices.len() != self.vertices.len() {
            return false;
        }
        let image: BTreeSet<usize> = phi.iter().copied().collect();
        if image.len() != phi.len() {
            return false;
        }
        let mapped: BTreeSet<(usize, usize)> = self.edges.iter().map(|&(a, b, _)| (phi[b], phi[a])).collect();
        mapped == other.arrow_set() && mapped.len() == self.edges.len()
    }

    pub fn is_isomorphic_via<M>(&self, other: &HassePoset<M>, phi: &[usize]) -> bool {
        if phi.len() != self.vertices.len() || other.vertices.len() != self.vertices.len() {
            return false;
        }
        let image: BTreeSet<usize> = phi.iter().copied().collect();
        if image.len() != phi.len() {
            return false;
        }
        let mapped: BTreeSet<(usize, usize)> = self.edges.iter().map(|&(a, b, _)| (phi[a], phi[b])).collect();
        mapped == other.arrow_set() && mapped.len() == self.edges.len()
    }

    /// Reflexive-transitive closure: `reach[a][b]` iff b ≤ a.
    pub fn order_closure(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut out: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(a, b, _) in &self.edges {
            out.entry(a).or_default().push(b);
        }
        let mut reach = vec![vec![false; n]; n];
        for s in 0..n {
            let mut stack = vec![s];
            reach[s][s] = true;
            while let Some(v) = stack.pop() {
                for &w in out.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                    if !reach[s][w] {
                        reach[s][w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach
    }
}

impl<L: Display> HassePoset<L> {
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with(name, |_| None)
    }

    /// DOT digraph; `extra` may append a second label line per vertex.
    pub fn to_dot_with(&self, name: &str, extra: impl Fn(usize) -> Option<String>) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        writeln!(s, "  rankdir=TB;").unwrap();
        for (k, v) in self.vertices.iter().enumerate() {
            match extra(k) {
                Some(e) => writeln!(s, "  v{k} [label=\"w={v}\\n{e}\"];").unwrap(),
                None => writeln!(s, "  v{k} [label=\"w={v}\"];").unwrap(),
            }
        }
        for &(a, b, i) in &self.edges {
            writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];").unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }

    pub fn to_json_value(&self, extra: impl Fn(usize) -> Option<String>) -> serde_json::Value {
        let poset = JsonPoset {
            vertex_count: self.vertices.len(),
            edge_count: self.edges.len(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex { id, label: v.to_string(), extra: extra(id) })
                .collect(),
            edges: self.edges.iter().map(|&(from, to, letter)| JsonEdge { from, to, letter }).collect(),
        };
        serde_json::to_value(poset).expect("poset serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_closure_and_dot() {
        let h = HassePoset::new(vec!["a", "b", "c"], vec![(0, 1, 1), (1, 2, 2)]);
        let r = h.order_closure();
        assert!(r[0][2] && !r[2][0]);
        assert_eq!(h.sources(), vec![0]);
        assert_eq!(h.sinks(), vec![2]);
        let dot = h.to_dot("t");
        assert!(dot.contains("v0 -> v1"));
        assert!(dot.contains("w=a"));
        let rev = HassePoset::new(vec![1, 2, 3], vec![(2, 1, 0), (1, 0, 0)]);
        assert!(h.is_anti_isomorphic_via(&rev, &[0, 1, 2]));
    }
}
