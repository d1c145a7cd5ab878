//! Spectral gap computation and the expander mixing inequality.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::jacobi_eigen;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralMode {
    Dense,
    Iterative,
}

/// Outcome of a spectral gap computation.
///
/// `lambda` is the largest magnitude among non-principal adjacency
/// eigenvalues; for a regular graph this is the usual expansion
/// parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralReport {
    /// Regularity degree, absent when the graph is irregular.
    pub d: Option<usize>,
    pub lambda: f64,
    /// Full spectrum sorted descending; dense mode only.
    pub eigenvalues: Option<Vec<f64>>,
    /// "dense-jacobi" or "power-deflate".
    pub method: String,
    pub tol: f64,
}

/// Computes the second-largest absolute adjacency eigenvalue.
///
/// Dense mode runs cyclic Jacobi sweeps on the full adjacency matrix.
/// Iterative mode deflates the top eigenvector (the all-ones direction
/// for regular graphs) and power-iterates on the squared adjacency
/// operator, which converges on the eigenvalue magnitude regardless of
/// its sign.
pub fn spectral_gap(g: &Graph, mode: SpectralMode, tol: f64) -> Result<SpectralReport> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Parameter("empty graph has no spectrum".into()));
    }
    let d = g.regular_degree();
    match mode {
        SpectralMode::Dense => {
            let mut a = vec![vec![0.0f64; n]; n];
            for (u, v) in g.edges() {
                a[u][v] = 1.0;
                a[v][u] = 1.0;
            }
            let eig = jacobi_eigen(&a, tol.min(1e-10), 200)?;
            let mut desc: Vec<f64> = eig.values.clone();
            desc.reverse();
            let lambda = desc
                .iter()
                .skip(1)
                .fold(0.0f64, |acc, &x| acc.max(x.abs()));
            Ok(SpectralReport {
                d,
                lambda,
                eigenvalues: Some(desc),
                method: "dense-jacobi".into(),
                tol,
            })
        }
        SpectralMode::Iterative => {
            let lambda = power_deflate(g, tol)?;
            Ok(SpectralReport {
                d,
                lambda,
                eigenvalues: None,
                method: "power-deflate".into(),
                tol,
            })
        }
    }
}

/// Power iteration on A² with the principal direction projected out each
/// step. For regular graphs the principal eigenvector is all-ones; for
/// irregular input it is estimated first by plain power iteration on a
/// shifted operator.
fn power_deflate(g: &Graph, tol: f64) -> Result<f64> {
    let n = g.vertex_count();
    if n == 1 {
        return Ok(0.0);
    }
    let top: Vec<f64> = match g.regular_degree() {
        Some(_) => vec![1.0 / (n as f64).sqrt(); n],
        None => principal_vector(g, tol)?,
    };

    // deterministic pseudo-random start, orthogonal to the top direction
    let mut v: Vec<f64> = (0..n)
        .map(|i| {
            let x = ((i as u64).wrapping_mul(0x9E3779B97F4A7C15) >> 11) as f64;
            x / (1u64 << 53) as f64 - 0.5
        })
        .collect();
    project_out(&mut v, &top);
    normalize(&mut v)?;

    let max_iters = 20_000;
    let mut prev = f64::INFINITY;
    for _ in 0..max_iters {
        let mut w = apply_adj(g, &v);
        project_out(&mut w, &top);
        let mut w2 = apply_adj(g, &w);
        project_out(&mut w2, &top);
        let sq = dot(&v, &w2).max(0.0); // Rayleigh quotient of A², PSD on the complement
        let lambda = sq.sqrt();
        let norm = norm2(&w2);
        if norm < 1e-300 {
            return Ok(0.0); // complement of the top direction is in the kernel
        }
        for x in w2.iter_mut() {
            *x /= norm;
        }
        v = w2;
        if (lambda - prev).abs() <= tol * lambda.max(1.0) {
            return Ok(lambda);
        }
        prev = lambda;
    }
    Err(Error::NumericNonConvergence("power-deflate".into()))
}

fn principal_vector(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    let shift = g.max_degree() as f64; // A + shift*I is PSD-dominant
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut prev = f64::INFINITY;
    for _ in 0..20_000 {
        let mut w = apply_adj(g, &v);
        for (wi, vi) in w.iter_mut().zip(v.iter()) {
            *wi += shift * vi;
        }
        let lambda = dot(&v, &w);
        let norm = norm2(&w);
        if norm < 1e-300 {
            return Ok(v);
        }
        for x in w.iter_mut() {
            *x /= norm;
        }
        v = w;
        if (lambda - prev).abs() <= tol * lambda.abs().max(1.0) {
            return Ok(v);
        }
        prev = lambda;
    }
    Err(Error::NumericNonConvergence("principal-vector".into()))
}

fn apply_adj(g: &Graph, v: &[f64]) -> Vec<f64> {
    let n = g.vertex_count();
    let mut w = vec![0.0; n];
    for u in 0..n {
        let mut acc = 0.0;
        for &x in g.neighbors(u) {
            acc += v[x];
        }
        w[u] = acc;
    }
    w
}

fn project_out(v: &mut [f64], dir: &[f64]) {
    let c = dot(v, dir);
    for (vi, di) in v.iter_mut().zip(dir.iter()) {
        *vi -= c * di;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(v: &mut [f64]) -> Result<()> {
    let n = norm2(v);
    if n < 1e-300 {
        return Err(Error::NumericNonConvergence("degenerate start vector".into()));
    }
    for x in v.iter_mut() {
        *x /= n;
    }
    Ok(())
}

/// Result of one expander-mixing inequality evaluation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixingCheck {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub cut_edges: usize,
}

/// Checks `|e(S,T) - (d/n)|S||T|| <= lambda * sqrt(|S||T|)`.
///
/// `e(S,T)` counts ordered incidences: an edge with both endpoints in
/// `S ∩ T` contributes twice.
pub fn mixing_check(
    g: &Graph,
    d: usize,
    lambda: f64,
    s: &BTreeSet<usize>,
    t: &BTreeSet<usize>,
) -> MixingCheck {
    let n = g.vertex_count() as f64;
    let mut cut = 0usize;
    for (u, v) in g.edges() {
        if s.contains(&u) && t.contains(&v) {
            cut += 1;
        }
        if s.contains(&v) && t.contains(&u) {
            cut += 1;
        }
    }
    let expected = d as f64 / n * (s.len() * t.len()) as f64;
    let lhs = (cut as f64 - expected).abs();
    let rhs = lambda * ((s.len() * t.len()) as f64).sqrt();
    MixingCheck {
        holds: lhs <= rhs + 1e-9,
        lhs,
        rhs,
        cut_edges: cut,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_random_regular, named_graph};

    fn dense_lambda(name: &str) -> f64 {
        let g = named_graph(name).unwrap();
        spectral_gap(&g, SpectralMode::Dense, 1e-10).unwrap().lambda
    }

    #[test]
    fn complete_graph_lambda_is_one() {
        assert!((dense_lambda("K4") - 1.0).abs() < 1e-9);
        let rep = spectral_gap(&named_graph("K4").unwrap(), SpectralMode::Dense, 1e-10).unwrap();
        let ev = rep.eigenvalues.unwrap();
        assert!((ev[0] - 3.0).abs() < 1e-9);
        assert!(ev[1..].iter().all(|&x| (x + 1.0).abs() < 1e-9));
    }

    #[test]
    fn four_cycle_lambda_is_two() {
        assert!((dense_lambda("C4") - 2.0).abs() < 1e-9);
    }

    #[test]
    fn petersen_lambda_is_two() {
        assert!((dense_lambda("petersen") - 2.0).abs() < 1e-9);
    }

    #[test]
    fn iterative_agrees_with_dense() {
        for name in ["K4", "C5", "C6", "petersen", "K7", "P5"] {
            let g = named_graph(name).unwrap();
            let dense = spectral_gap(&g, SpectralMode::Dense, 1e-10).unwrap();
            let iter = spectral_gap(&g, SpectralMode::Iterative, 1e-10).unwrap();
            assert!(
                (dense.lambda - iter.lambda).abs() <= 1e-9,
                "{name}: dense {} vs iterative {}",
                dense.lambda,
                iter.lambda
            );
        }
        let g = gen_random_regular(80, 6, 3).unwrap();
        let dense = spectral_gap(&g, SpectralMode::Dense, 1e-10).unwrap();
        let iter = spectral_gap(&g, SpectralMode::Iterative, 1e-10).unwrap();
        assert!((dense.lambda - iter.lambda).abs() <= 1e-8);
    }

    #[test]
    fn mixing_on_empty_sets_holds_with_zero_bounds() {
        let g = named_graph("petersen").unwrap();
        let s = BTreeSet::new();
        let t = (0..10).collect();
        let r = mixing_check(&g, 3, 2.0, &s, &t);
        assert!(r.holds);
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.rhs, 0.0);
    }

    #[test]
    fn mixing_on_petersen_halves() {
        let g = named_graph("petersen").unwrap();
        let s: BTreeSet<usize> = (0..5).collect();
        let t: BTreeSet<usize> = (5..10).collect();
        let r = mixing_check(&g, 3, 2.0, &s, &t);
        assert_eq!(r.cut_edges, 5);
        assert!((r.lhs - 2.5).abs() < 1e-12);
        assert!((r.rhs - 10.0).abs() < 1e-12);
        assert!(r.holds);
    }

    #[test]
    fn mixing_counts_inside_overlap_twice() {
        // S = T = V(K4): e(S,T) = 2|E| = 12, expected = 3/4*16 = 12
        let g = named_graph("K4").unwrap();
        let all: BTreeSet<usize> = (0..4).collect();
        let r = mixing_check(&g, 3, 1.0, &all, &all);
        assert_eq!(r.cut_edges, 12);
        assert!(r.lhs < 1e-12);
        assert!(r.holds);
    }
}
