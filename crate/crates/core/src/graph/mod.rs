//! Undirected simple graphs on dense vertex labels `0..n-1`, plus the
//! fixture catalogue and induced subgraphs.

mod generate;
pub mod io;
mod spectral;

pub use generate::gen_random_regular;
pub use spectral::{mixing_check, spectral_gap, MixingCheck, SpectralMode, SpectralReport};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An undirected simple graph. Vertices are `0..n-1`; the edge set and
/// the per-vertex neighbour lists are kept consistent at all times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Parameter(format!("self-loop at {u}")));
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.has_edge(a, b) {
            return Err(Error::Parameter(format!("duplicate edge ({a},{b})")));
        }
        self.edges.push((a, b));
        self.adj[a].push(b);
        self.adj[b].push(a);
        // keep neighbour order canonical so every traversal is deterministic
        self.adj[a].sort_unstable();
        self.adj[b].sort_unstable();
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Removes an existing edge.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (a, b) = (u.min(v), u.max(v));
        let pos = self
            .edges
            .iter()
            .position(|&e| e == (a, b))
            .ok_or_else(|| Error::Parameter(format!("edge ({a},{b}) not present")))?;
        self.edges.swap_remove(pos);
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
        Ok(())
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True when the degree sum equals twice the edge count; cheap
    /// conservation audit run after generation and mutation.
    pub fn degree_sum_consistent(&self) -> bool {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() == 2 * self.edges.len()
    }
}

/// An induced subgraph together with the label translation back to the
/// host graph: vertex `i` of `graph` is `to_host[i]` in the original.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub to_host: Vec<usize>,
}

impl InducedSubgraph {
    pub fn host_vertex(&self, local: usize) -> usize {
        self.to_host[local]
    }

    pub fn local_vertex(&self, host: usize) -> Option<usize> {
        self.to_host.binary_search(&host).ok()
    }
}

/// Subgraph induced by `w`, with vertices relabelled `0..|w|-1` in
/// ascending host order.
pub fn induced_subgraph(g: &Graph, w: &BTreeSet<usize>) -> Result<InducedSubgraph> {
    if let Some(&bad) = w.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::Parameter(format!(
            "vertex {bad} out of range for n={}",
            g.vertex_count()
        )));
    }
    let to_host: Vec<usize> = w.iter().copied().collect();
    let mut sub = Graph::new(to_host.len());
    for (i, &u) in to_host.iter().enumerate() {
        for &v in g.neighbors(u) {
            if v > u {
                if let Ok(j) = to_host.binary_search(&v) {
                    sub.add_edge(i, j)?;
                }
            }
        }
    }
    Ok(InducedSubgraph {
        graph: sub,
        to_host,
    })
}

/// Fixture catalogue: `K<n>`, `C<n>`, `P<n>` (path), and `petersen`.
///
/// Labellings are fixed: `K<n>` and `P<n>` use `0..n-1` in order, `C<n>`
/// joins `i` to `(i+1) mod n`, and the Petersen graph places the outer
/// 5-cycle on `0..4`, the inner 5-cycle (step two) on `5..9`, and spokes
/// `i -(5+i)`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5)?;
            g.add_edge(5 + i, 5 + (i + 2) % 5)?;
            g.add_edge(i, 5 + i)?;
        }
        return Ok(g);
    }
    let (kind, num) = lower.split_at(1);
    let n: usize = num
        .parse()
        .map_err(|_| Error::UnknownName(name.to_string()))?;
    match kind {
        "k" if n >= 1 => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        "c" if n >= 3 => {
            let mut g = Graph::new(n);
            for i in 0..n {
                g.add_edge(i, (i + 1) % n)?;
            }
            Ok(g)
        }
        "p" if n >= 1 => {
            let mut g = Graph::new(n);
            for i in 0..n.saturating_sub(1) {
                g.add_edge(i, i + 1)?;
            }
            Ok(g)
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_fixtures_have_expected_shape() {
        let k4 = named_graph("K4").unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);

        let c5 = named_graph("C5").unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let pet = named_graph("petersen").unwrap();
        assert_eq!(pet.vertex_count(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert_eq!(pet.regular_degree(), Some(3));
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(named_graph("Q3"), Err(Error::UnknownName(_))));
        assert!(matches!(named_graph("K"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn induced_subgraph_of_k4_is_k3() {
        let k4 = named_graph("K4").unwrap();
        let w: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let sub = induced_subgraph(&k4, &w).unwrap();
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_of_c5_keeps_single_edge() {
        let c5 = named_graph("C5").unwrap();
        let w: BTreeSet<usize> = [0, 1].into_iter().collect();
        let sub = induced_subgraph(&c5, &w).unwrap();
        assert_eq!(sub.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn petersen_outer_cycle_induces_c5() {
        let pet = named_graph("petersen").unwrap();
        let w: BTreeSet<usize> = (0..5).collect();
        let sub = induced_subgraph(&pet, &w).unwrap();
        assert_eq!(sub.graph.edge_count(), 5);
        assert!((0..5).all(|v| sub.graph.degree(v) == 2));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let k4 = named_graph("K4").unwrap();
        let w: BTreeSet<usize> = [0, 7].into_iter().collect();
        assert!(induced_subgraph(&k4, &w).is_err());
    }

    #[test]
    fn duplicate_and_loop_edges_rejected() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(2, 2).is_err());
    }
}
