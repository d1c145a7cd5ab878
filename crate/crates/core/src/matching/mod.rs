//! Perfect matchings, Tutte-style component audits, and regular
//! spanning subgraphs.

mod blossom;
mod factor;
pub mod oracle;
mod tutte;

pub use factor::{f_factor, FactorSubgraph};
pub use tutte::{
    pm_lemma_check, tutte_all_components_check, tutte_generalized_check, GeneralizedTutteReport,
    PmLemmaReport, TutteReport,
};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A matching: pairwise disjoint edges, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn covers_all(&self, g: &Graph) -> bool {
        2 * self.edges.len() == g.vertex_count()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || seen[u] || seen[v] {
                return false;
            }
            seen[u] = true;
            seen[v] = true;
        }
        true
    }
}

fn mate_to_matching(mate: &[Option<usize>]) -> Matching {
    let mut edges: Vec<(usize, usize)> = mate
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.map(|u| (v.min(u), v.max(u))))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Matching { edges }
}

/// Maximum matching via blossom contraction.
pub fn maximum_matching(g: &Graph) -> Matching {
    mate_to_matching(&blossom::maximum_matching(g))
}

/// A perfect matching when one exists, `None` otherwise.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    let m = maximum_matching(g);
    m.covers_all(g).then_some(m)
}
