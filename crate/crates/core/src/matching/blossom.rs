//! Maximum matching in general graphs by blossom contraction.
//!
//! Classic O(V³) formulation: grow an alternating BFS tree from each
//! free vertex, contract odd cycles onto their base, and flip the
//! matching along any augmenting path found. Seeded with a greedy
//! matching so dense inputs need few phases.

use std::collections::VecDeque;

use crate::graph::Graph;

pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        if mate[v].is_some() {
            continue;
        }
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| mate[u].is_none()) {
            mate[v] = Some(u);
            mate[u] = Some(v);
        }
    }
    let mut m = Matcher {
        g,
        mate,
        parent: vec![None; n],
        base: (0..n).collect(),
        used: vec![false; n],
    };
    for v in 0..n {
        if m.mate[v].is_none() {
            m.find_augmenting_path(v);
        }
    }
    m.mate
}

struct Matcher<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn find_augmenting_path(&mut self, root: usize) -> bool {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::new();
        queue.push_back(root);

        let g = self.g;
        while let Some(v) = queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root
                    || self
                        .mate[to]
                        .map(|m| self.parent[m].is_some())
                        .unwrap_or(false);
                if to_is_outer {
                    let cur_base = self.lca(v, to);
                    let mut blossom = vec![false; n];
                    self.mark_path(&mut blossom, v, cur_base, to);
                    self.mark_path(&mut blossom, to, cur_base, v);
                    for i in 0..n {
                        if blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => {
                            self.augment(to);
                            return true;
                        }
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        false
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.g.vertex_count();
        let mut on_path = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            match self.mate[v] {
                None => break, // reached the root
                Some(m) => v = self.parent[m].expect("tree vertex has a parent"),
            }
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if on_path[v] {
                return v;
            }
            v = self.parent[self.mate[v].expect("inner vertex is matched")]
                .expect("tree vertex has a parent");
        }
    }

    fn mark_path(&mut self, blossom: &mut [bool], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom vertices are matched");
            blossom[self.base[v]] = true;
            blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("tree vertex has a parent");
        }
    }

    fn augment(&mut self, mut v: usize) {
        loop {
            let pv = self.parent[v].expect("augmenting path reaches the root");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(x) => v = x,
                None => break,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Graph};

    fn matching_size(mate: &[Option<usize>]) -> usize {
        mate.iter().flatten().count() / 2
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let g = named_graph("petersen").unwrap();
        assert_eq!(matching_size(&maximum_matching(&g)), 5);
    }

    #[test]
    fn odd_cycle_leaves_one_vertex_free() {
        let g = named_graph("C5").unwrap();
        assert_eq!(matching_size(&maximum_matching(&g)), 2);
    }

    #[test]
    fn blossom_contraction_case() {
        // triangle with two pendant edges hanging off distinct vertices:
        // maximum matching is 2 and needs the odd cycle handled
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(matching_size(&maximum_matching(&g)), 2);
    }

    #[test]
    fn two_triangles_joined_by_a_bridge() {
        // classic blossom exercise: 6 vertices, perfect matching exists
        let mut g = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(matching_size(&maximum_matching(&g)), 3);
    }
}
