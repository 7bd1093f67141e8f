//! Simple undirected graphs, centralizer / co-centralizer construction,
//! BFS distance matrices and complete-multipartite recognition.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::group::CentralizerFamily;
use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// A simple undirected graph on vertices 0..n (no loops, symmetric adjacency).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|u| (u + 1..self.n).filter(|&v| self.has_edge(u, v)).count())
            .sum()
    }

    /// Complete multipartite graph with the given part sizes (used as the
    /// brute-force side of the multipartite charpoly identity checks).
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Centralizer graph: one vertex per distinct proper centralizer,
    /// adjacent iff cardinalities are identical. A disjoint union of
    /// cliques, one per cardinality class.
    pub fn centralizer_graph(fam: &CentralizerFamily) -> Self {
        let n = fam.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if fam.cardinalities[u] == fam.cardinalities[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let dist = self.bfs(0);
        dist.iter().all(|&d| d >= 0)
    }

    fn bfs(&self, src: usize) -> Vec<i64> {
        let mut dist = vec![-1i64; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if self.has_edge(u, v) && dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Exact distance matrix via BFS from every vertex.
    pub fn distance_matrix(&self) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.n);
        for u in 0..self.n {
            let dist = self.bfs(u);
            for v in 0..self.n {
                if dist[v] < 0 {
                    return Err(Error::Disconnected);
                }
                m.set(u, v, dist[v]);
            }
        }
        Ok(m)
    }

    /// Recognize a complete multipartite graph. Parts are the connected
    /// components of the complement; recognition succeeds iff every such
    /// component is a clique in the complement. Parts are reported in
    /// vertex order (for co-centralizer graphs that is descending
    /// cardinality-class order).
    pub fn recognize_complete_multipartite(&self) -> Option<Vec<usize>> {
        let comp = self.complement();
        let mut part_of = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if part_of[s] != usize::MAX {
                continue;
            }
            let dist = comp.bfs(s);
            let members: Vec<usize> = (0..self.n).filter(|&v| dist[v] >= 0).collect();
            for &v in &members {
                part_of[v] = parts.len();
            }
            // component must be a clique in the complement
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !comp.has_edge(u, v) {
                        return None;
                    }
                }
            }
            parts.push(members);
        }
        Some(parts.iter().map(|p| p.len()).collect())
    }

    /// DIMACS-like edge list: header "p <n> <m>" then "e u v" lines,
    /// 1-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p {} {}", self.n, self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    let _ = writeln!(s, "e {} {}", u + 1, v + 1);
                }
            }
        }
        s
    }
}

/// Row sums of a distance matrix.
pub fn transmissions(d: &IntMatrix) -> Vec<i64> {
    (0..d.dim()).map(|u| d.row_sum(u)).collect()
}

/// Distance Laplacian: diag(transmissions) - D. Rows sum to zero.
pub fn dl_matrix(d: &IntMatrix) -> IntMatrix {
    tr_combine(d, -1)
}

/// Distance signless Laplacian: diag(transmissions) + D.
pub fn dq_matrix(d: &IntMatrix) -> IntMatrix {
    tr_combine(d, 1)
}

fn tr_combine(d: &IntMatrix, sign: i64) -> IntMatrix {
    let n = d.dim();
    let tr = transmissions(d);
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            let val = if u == v { tr[u] } else { sign * d.get(u, v) };
            m.set(u, v, val);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> Graph {
        Graph::complete_multipartite(&[1, n])
    }

    #[test]
    fn complement_of_cliques_is_multipartite() {
        // K_3 u K_1: three mutually adjacent vertices plus an isolated one
        let mut g = Graph::empty(4);
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        g.add_edge(2, 3);
        let c = g.complement();
        assert_eq!(c.recognize_complete_multipartite(), Some(vec![1, 3]));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn connectivity() {
        assert!(star(3).is_connected());
        let mut g = Graph::empty(4); // K_3 u K_1
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        assert!(!g.is_connected());
        assert!(!Graph::empty(3).is_connected());
        assert_eq!(g.distance_matrix().unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn k2_matrices() {
        let d = Graph::complete_multipartite(&[1, 1]).distance_matrix().unwrap();
        assert_eq!(d.entries(), &[0, 1, 1, 0]);
        assert_eq!(transmissions(&d), vec![1, 1]);
        assert_eq!(dl_matrix(&d).entries(), &[1, -1, -1, 1]);
        assert_eq!(dq_matrix(&d).entries(), &[1, 1, 1, 1]);
    }

    #[test]
    fn star_distances() {
        let d = star(3).distance_matrix().unwrap();
        for v in 1..4 {
            assert_eq!(d.get(0, v), 1);
        }
        for u in 1..4 {
            for v in 1..4 {
                assert_eq!(d.get(u, v), if u == v { 0 } else { 2 });
            }
        }
        assert_eq!(transmissions(&d), vec![3, 5, 5, 5]);
    }

    #[test]
    fn tripartite_transmissions() {
        let g = Graph::complete_multipartite(&[5, 10, 6]);
        let d = g.distance_matrix().unwrap();
        let tr = transmissions(&d);
        assert!(tr[..5].iter().all(|&t| t == 24));
        assert!(tr[5..15].iter().all(|&t| t == 29));
        assert!(tr[15..].iter().all(|&t| t == 25));
    }

    #[test]
    fn recognition_rejects_c5() {
        let mut c5 = Graph::empty(5);
        for i in 0..5 {
            c5.add_edge(i, (i + 1) % 5);
        }
        assert_eq!(c5.recognize_complete_multipartite(), None);
    }

    #[test]
    fn recognition_star_and_tripartite() {
        assert_eq!(star(3).recognize_complete_multipartite(), Some(vec![1, 3]));
        let g = Graph::complete_multipartite(&[5, 10, 6]);
        assert_eq!(g.recognize_complete_multipartite(), Some(vec![5, 10, 6]));
    }

    #[test]
    fn dl_rows_sum_to_zero() {
        let d = Graph::complete_multipartite(&[2, 3, 4]).distance_matrix().unwrap();
        let dl = dl_matrix(&d);
        for u in 0..dl.dim() {
            assert_eq!(dl.row_sum(u), 0);
        }
    }

    #[test]
    fn edge_list_format() {
        let g = star(2); // path P3 with the center first
        let s = g.to_edge_list();
        assert_eq!(s, "p 3 2\ne 1 2\ne 1 3\n");
    }
}
