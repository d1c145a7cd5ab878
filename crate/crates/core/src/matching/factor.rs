//! Spanning f-regular subgraphs by the gadget reduction to perfect
//! matching: each vertex becomes one external node per incident edge
//! plus `deg - f` internal nodes joined completely to them; a perfect
//! matching of the gadget matches exactly `f` externals per vertex
//! across original edges, and those edges form the factor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{perfect_matching, Matching};

/// A spanning subgraph in which every vertex has degree exactly `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSubgraph {
    pub f: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FactorSubgraph {
    /// Degree audit against the host graph.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut deg = vec![0usize; g.vertex_count()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&x| x == self.f)
    }
}

/// Finds a spanning `f`-regular subgraph, or `None` when no f-factor
/// exists. `f` must be even and at most the minimum degree; `f = 0`
/// yields the empty spanning subgraph.
pub fn f_factor(g: &Graph, f: usize) -> Result<Option<FactorSubgraph>> {
    if f % 2 != 0 {
        return Err(Error::Parameter(format!("f = {f} must be even")));
    }
    if f == 0 {
        return Ok(Some(FactorSubgraph {
            f: 0,
            edges: Vec::new(),
        }));
    }
    if f > g.min_degree() {
        return Err(Error::Parameter(format!(
            "f = {f} exceeds minimum degree {}",
            g.min_degree()
        )));
    }

    let n = g.vertex_count();
    let edges = g.edges();

    // gadget layout: per vertex, externals then internals, consecutive
    let mut external_base = vec![0usize; n];
    let mut internal_base = vec![0usize; n];
    let mut next = 0usize;
    for v in 0..n {
        external_base[v] = next;
        next += g.degree(v);
        internal_base[v] = next;
        next += g.degree(v) - f;
    }
    let gadget_n = next;

    // external slot of vertex v for its incident edge (by position in
    // the sorted neighbour list)
    let slot = |v: usize, other: usize| -> usize {
        let pos = g
            .neighbors(v)
            .binary_search(&other)
            .expect("edge endpoint in neighbour list");
        external_base[v] + pos
    };

    let mut gadget = Graph::new(gadget_n);
    for &(u, v) in &edges {
        gadget
            .add_edge(slot(u, v), slot(v, u))
            .expect("distinct gadget slots");
    }
    for v in 0..n {
        for i in 0..g.degree(v) {
            for j in 0..g.degree(v) - f {
                gadget
                    .add_edge(external_base[v] + i, internal_base[v] + j)
                    .expect("distinct gadget slots");
            }
        }
    }

    let pm = match perfect_matching(&gadget) {
        Some(m) => m,
        None => return Ok(None),
    };
    let chosen: std::collections::HashSet<(usize, usize)> = pm.edges.iter().copied().collect();
    let factor_edges: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let a = slot(u, v);
            let b = slot(v, u);
            chosen.contains(&(a.min(b), a.max(b)))
        })
        .collect();

    let factor = FactorSubgraph {
        f,
        edges: factor_edges,
    };
    debug_assert!(factor.is_valid(g));
    Ok(Some(factor))
}

/// Convenience view of a perfect matching as a factor with `f = 1`;
/// used by reports.
pub fn matching_as_factor(m: &Matching) -> FactorSubgraph {
    FactorSubgraph {
        f: 1,
        edges: m.edges.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn cycle_two_factor_is_the_cycle() {
        let g = named_graph("C7").unwrap();
        let f = f_factor(&g, 2).unwrap().unwrap();
        assert_eq!(f.edges.len(), 7);
        assert!(f.is_valid(&g));
    }

    #[test]
    fn zero_factor_is_empty_and_spanning() {
        let g = named_graph("petersen").unwrap();
        let f = f_factor(&g, 0).unwrap().unwrap();
        assert!(f.edges.is_empty());
        assert!(f.is_valid(&g));
    }

    #[test]
    fn k5_two_factor_is_a_five_cycle() {
        let g = named_graph("K5").unwrap();
        let f = f_factor(&g, 2).unwrap().unwrap();
        assert!(f.is_valid(&g));
        assert_eq!(f.edges.len(), 5);
        // 2-regular on 5 vertices must be a single 5-cycle
        let sub = Graph::from_edges(5, f.edges.iter().copied()).unwrap();
        assert_eq!(sub.component_count(), 1);
    }

    #[test]
    fn odd_f_rejected_and_large_f_rejected() {
        let g = named_graph("K4").unwrap();
        assert!(f_factor(&g, 1).is_err());
        assert!(f_factor(&g, 4).is_err());
    }

    #[test]
    fn no_two_factor_in_a_tree() {
        let g = named_graph("P5").unwrap();
        // min degree 1 < 2: parameter error per the contract
        assert!(f_factor(&g, 2).is_err());
    }

    #[test]
    fn star_plus_matching_has_no_two_factor() {
        // bowtie missing an edge: vertices 0-1-2 triangle, 2-3, 3-4, 2-4 triangle
        // remove (3,4): min degree 2 but vertex 3,4 can't both reach degree 2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        // this one actually has a 2-factor (two triangles sharing vertex 2? no,
        // that would give vertex 2 degree 4) — verify the engine agrees with
        // brute force instead of guessing
        let brute = crate::matching::oracle::has_f_factor_bruteforce(&g, 2).unwrap();
        let engine = f_factor(&g, 2).unwrap().is_some();
        assert_eq!(brute, engine);
    }

    use crate::graph::Graph;
}
