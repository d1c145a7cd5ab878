//! Independent brute-force oracles the matching engines are audited
//! against. Deliberately naive; guarded to small sizes.

use crate::error::{Error, Result};
use crate::graph::Graph;

const VERTEX_GUARD: usize = 20;
const EDGE_GUARD: usize = 26;

/// Maximum matching size by memoized search over covered-vertex masks.
pub fn max_matching_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > VERTEX_GUARD {
        return Err(Error::SizeGuard {
            what: "max_matching_bruteforce vertices".into(),
            limit: VERTEX_GUARD,
            actual: n,
        });
    }
    let mut memo = vec![u8::MAX; 1usize << n];
    Ok(best(g, 0, &mut memo) as usize)
}

fn best(g: &Graph, used: u32, memo: &mut [u8]) -> u8 {
    let n = g.vertex_count();
    let key = used as usize;
    if memo[key] != u8::MAX {
        return memo[key];
    }
    // lowest uncovered vertex either stays uncovered or matches a neighbour
    let mut v = n;
    for i in 0..n {
        if used & (1 << i) == 0 {
            v = i;
            break;
        }
    }
    if v == n {
        memo[key] = 0;
        return 0;
    }
    let mut result = best(g, used | (1 << v), memo);
    for &u in g.neighbors(v) {
        if used & (1 << u) == 0 {
            let r = 1 + best(g, used | (1 << v) | (1 << u), memo);
            result = result.max(r);
        }
    }
    memo[key] = result;
    result
}

/// Classical Tutte criterion with odd components: a perfect matching
/// exists iff `odd(G - S) ≤ |S|` for every `S`.
pub fn tutte_classical_check(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > VERTEX_GUARD {
        return Err(Error::SizeGuard {
            what: "tutte_classical_check vertices".into(),
            limit: VERTEX_GUARD,
            actual: n,
        });
    }
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for s in 0..=full {
        let alive = full & !s;
        let mut odd = 0usize;
        let mut rest = alive;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            loop {
                let mut frontier = 0u32;
                let mut inner = comp;
                while inner != 0 {
                    let v = inner.trailing_zeros() as usize;
                    inner &= inner - 1;
                    frontier |= adj[v] & alive;
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            if comp.count_ones() % 2 == 1 {
                odd += 1;
            }
            rest &= !comp;
        }
        if odd > s.count_ones() as usize {
            return Ok(false);
        }
        if s == full {
            break;
        }
    }
    Ok(true)
}

/// Exhaustively decides whether a spanning f-regular subgraph exists,
/// by recursion over edges with degree pruning.
pub fn has_f_factor_bruteforce(g: &Graph, f: usize) -> Result<bool> {
    let m = g.edge_count();
    if m > EDGE_GUARD {
        return Err(Error::SizeGuard {
            what: "has_f_factor_bruteforce edges".into(),
            limit: EDGE_GUARD,
            actual: m,
        });
    }
    let edges = g.edges();
    let mut remaining = vec![0usize; g.vertex_count()];
    for &(u, v) in &edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut deg = vec![0usize; g.vertex_count()];
    Ok(factor_search(&edges, 0, f, &mut deg, &mut remaining))
}

fn factor_search(
    edges: &[(usize, usize)],
    i: usize,
    f: usize,
    deg: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
) -> bool {
    if i == edges.len() {
        return deg.iter().all(|&d| d == f);
    }
    let (u, v) = edges[i];
    remaining[u] -= 1;
    remaining[v] -= 1;
    // skip the edge if both endpoints can still reach f without it
    if deg[u] + remaining[u] >= f
        && deg[v] + remaining[v] >= f
        && factor_search(edges, i + 1, f, deg, remaining)
    {
        remaining[u] += 1;
        remaining[v] += 1;
        return true;
    }
    // take the edge if neither endpoint overshoots
    let mut found = false;
    if deg[u] < f && deg[v] < f {
        deg[u] += 1;
        deg[v] += 1;
        found = factor_search(edges, i + 1, f, deg, remaining);
        deg[u] -= 1;
        deg[v] -= 1;
    }
    remaining[u] += 1;
    remaining[v] += 1;
    found
}
