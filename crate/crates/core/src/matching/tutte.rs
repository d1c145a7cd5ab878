//! Exhaustive component-count audits: the all-components variants of
//! Tutte's criterion, its f-factor generalization, and the induced
//! subgraph form used by the matching stage of the reduction.
//!
//! All three read the empty deletion set as a connectivity requirement;
//! the literal `q(G) ≤ 0` reading is unsatisfiable for nonempty graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const SUBSET_GUARD: usize = 20;
const PAIR_GUARD: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TutteReport {
    pub ok: bool,
    /// First violating deletion set, when any.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneralizedTutteReport {
    pub ok: bool,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PmLemmaReport {
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
    /// Reported preconditions, not assumed.
    pub min_degree: usize,
    pub min_degree_ok: bool,
    pub lambda_ok: bool,
}

/// Adjacency bitmasks for subgraphs on at most 32 vertices.
fn adjacency_masks(g: &Graph, verts: &[usize]) -> Vec<u32> {
    let index = |v: usize| verts.binary_search(&v).ok();
    let mut masks = vec![0u32; verts.len()];
    for (i, &u) in verts.iter().enumerate() {
        for &w in g.neighbors(u) {
            if let Some(j) = index(w) {
                masks[i] |= 1 << j;
            }
        }
    }
    masks
}

fn component_count(masks: &[u32], mut alive: u32) -> usize {
    let mut count = 0;
    while alive != 0 {
        count += 1;
        let start = alive.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        loop {
            let mut frontier = 0u32;
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                frontier |= masks[v] & alive;
            }
            let grown = comp | frontier;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        alive &= !comp;
    }
    count
}

fn mask_to_vertices(mask: u32, verts: &[usize]) -> Vec<usize> {
    (0..verts.len())
        .filter(|&i| mask & (1 << i) != 0)
        .map(|i| verts[i])
        .collect()
}

/// For every `S ⊆ V`: `q(G \ S) ≤ |S|`, with `S = ∅` demanding a
/// connected graph.
pub fn tutte_all_components_check(g: &Graph) -> Result<TutteReport> {
    let n = g.vertex_count();
    if n > SUBSET_GUARD {
        return Err(Error::SizeGuard {
            what: "tutte_all_components_check vertices".into(),
            limit: SUBSET_GUARD,
            actual: n,
        });
    }
    let verts: Vec<usize> = (0..n).collect();
    let masks = adjacency_masks(g, &verts);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for s in 0..=full {
        let q = component_count(&masks, full & !s);
        let bound = if s == 0 { 1 } else { s.count_ones() as usize };
        if q > bound {
            return Ok(TutteReport {
                ok: false,
                witness: Some(mask_to_vertices(s, &verts)),
            });
        }
        if s == full {
            break;
        }
    }
    Ok(TutteReport {
        ok: true,
        witness: None,
    })
}

/// For every pair of disjoint `S, T`:
/// `q(G \ (S ∪ T)) ≤ |S|·f - Σ_{w∈T} (f - |N(w) \ S|)`,
/// with `S = T = ∅` demanding a connected graph.
pub fn tutte_generalized_check(g: &Graph, f: usize) -> Result<GeneralizedTutteReport> {
    if f % 2 != 0 {
        return Err(Error::Parameter(format!("f = {f} must be even")));
    }
    let n = g.vertex_count();
    if n > PAIR_GUARD {
        return Err(Error::SizeGuard {
            what: "tutte_generalized_check vertices".into(),
            limit: PAIR_GUARD,
            actual: n,
        });
    }
    let verts: Vec<usize> = (0..n).collect();
    let masks = adjacency_masks(g, &verts);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for s in 0..=full {
        let rest = full & !s;
        // enumerate T over subsets of the complement of S
        let mut t = rest;
        loop {
            let ok = if s == 0 && t == 0 {
                component_count(&masks, full) <= 1
            } else {
                let q = component_count(&masks, full & !(s | t)) as i64;
                let mut rhs = s.count_ones() as i64 * f as i64;
                let mut tv = t;
                while tv != 0 {
                    let w = tv.trailing_zeros() as usize;
                    tv &= tv - 1;
                    let nbrs_outside_s = (masks[w] & !s).count_ones() as i64;
                    rhs -= f as i64 - nbrs_outside_s;
                }
                q <= rhs
            };
            if !ok {
                return Ok(GeneralizedTutteReport {
                    ok: false,
                    witness: Some((mask_to_vertices(s, &verts), mask_to_vertices(t, &verts))),
                });
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        if s == full {
            break;
        }
    }
    Ok(GeneralizedTutteReport {
        ok: true,
        witness: None,
    })
}

/// Brute-force audit of the matching-stage conclusion: for every
/// `S ⊆ U`, the graph `G[U \ S]` has at most `|S|` components (one for
/// `S = ∅`). The minimum-degree and spectral preconditions are reported
/// alongside, not assumed.
pub fn pm_lemma_check(
    g: &Graph,
    d: usize,
    lambda: f64,
    u_set: &BTreeSet<usize>,
) -> Result<PmLemmaReport> {
    let verts: Vec<usize> = u_set.iter().copied().collect();
    let k = verts.len();
    if k > SUBSET_GUARD {
        return Err(Error::SizeGuard {
            what: "pm_lemma_check subset size".into(),
            limit: SUBSET_GUARD,
            actual: k,
        });
    }
    if let Some(&bad) = verts.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::Parameter(format!("vertex {bad} outside the graph")));
    }
    let masks = adjacency_masks(g, &verts);
    let min_degree = (0..k)
        .map(|i| masks[i].count_ones() as usize)
        .min()
        .unwrap_or(0);
    let min_degree_ok = (min_degree as f64) >= 0.9 * d as f64 - 1e-9;
    let lambda_ok = lambda < d as f64 / 50.0;

    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut witness = None;
    if k > 0 {
        for s in 0..=full {
            let q = component_count(&masks, full & !s);
            let bound = if s == 0 { 1 } else { s.count_ones() as usize };
            if q > bound {
                witness = Some(mask_to_vertices(s, &verts));
                break;
            }
            if s == full {
                break;
            }
        }
    }
    Ok(PmLemmaReport {
        ok: witness.is_none(),
        witness,
        min_degree,
        min_degree_ok,
        lambda_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn k4_passes_all_components_check() {
        let g = named_graph("K4").unwrap();
        assert!(tutte_all_components_check(&g).unwrap().ok);
    }

    #[test]
    fn star_center_is_a_witness() {
        // K_{1,3}: removing the center leaves three components
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rep = tutte_all_components_check(&g).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.witness, Some(vec![0]));
    }

    #[test]
    fn petersen_passes_exhaustively() {
        let g = named_graph("petersen").unwrap();
        assert!(tutte_all_components_check(&g).unwrap().ok);
    }

    #[test]
    fn generalized_check_passes_on_c6_f2() {
        let g = named_graph("C6").unwrap();
        assert!(tutte_generalized_check(&g, 2).unwrap().ok);
    }

    #[test]
    fn generalized_check_fails_on_path_endpoints() {
        let g = named_graph("P4").unwrap();
        let rep = tutte_generalized_check(&g, 2).unwrap();
        assert!(!rep.ok);
        let (s, t) = rep.witness.unwrap();
        assert!(s.is_empty() || !t.is_empty());
    }

    #[test]
    fn generalized_check_passes_on_k5_f2() {
        let g = named_graph("K5").unwrap();
        assert!(tutte_generalized_check(&g, 2).unwrap().ok);
    }

    #[test]
    fn odd_f_is_a_parameter_error() {
        let g = named_graph("K4").unwrap();
        assert!(matches!(
            tutte_generalized_check(&g, 3),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn pm_lemma_on_k6_is_ok() {
        let g = named_graph("K6").unwrap();
        let u: BTreeSet<usize> = (0..6).collect();
        let rep = pm_lemma_check(&g, 5, 1.0, &u).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.min_degree, 5);
    }

    #[test]
    fn disconnected_union_witnessed_by_empty_set() {
        // two disjoint triangles
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let u: BTreeSet<usize> = (0..6).collect();
        let rep = pm_lemma_check(&g, 2, 1.0, &u).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.witness, Some(vec![]));
    }

    #[test]
    fn pm_lemma_on_petersen_is_ok() {
        let g = named_graph("petersen").unwrap();
        let u: BTreeSet<usize> = (0..10).collect();
        assert!(pm_lemma_check(&g, 3, 2.0, &u).unwrap().ok);
    }

    use crate::graph::Graph;
}
