//! Finite multigraphs stored as half-edges.
//!
//! Edge `i` (in insertion order) owns half-edges `2i` and `2i + 1`. Half-edge
//! `2i` runs from the first endpoint to the second, `2i + 1` runs back, so the
//! involution `inv` is `h ^ 1`. A loop `u u` therefore contributes two
//! half-edges at `u` and degree 2, and `A[u][u] = 2` per loop.

mod io;
mod two_core;

use std::collections::VecDeque;

use serde::Serialize;

pub use two_core::{two_core, CoreDecomposition};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type HalfEdge = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incident: Vec<Vec<HalfEdge>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CyclomaticClass {
    Tree,
    Unicyclic,
    Multicyclic,
}

impl CyclomaticClass {
    pub fn name(self) -> &'static str {
        match self {
            CyclomaticClass::Tree => "tree",
            CyclomaticClass::Unicyclic => "unicyclic",
            CyclomaticClass::Multicyclic => "multicyclic",
        }
    }
}

impl std::fmt::Display for CyclomaticClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// An induced neighbourhood together with its embedding into the host graph.
#[derive(Debug, Clone)]
pub struct Ball {
    pub graph: MultiGraph,
    /// `map[i]` is the host vertex of local vertex `i`.
    pub map: Vec<Vertex>,
    /// `edge_map[e]` is the host edge of local edge `e`.
    pub edge_map: Vec<usize>,
    /// Local index of the centre.
    pub root: Vertex,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            incident[u].push(2 * i);
            incident[v].push(2 * i + 1);
        }
        Ok(MultiGraph { n, edges, incident })
    }

    /// Convenience constructor for literals in tests and generators.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(n, edges.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_half_edges(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn inv(&self, h: HalfEdge) -> HalfEdge {
        h ^ 1
    }

    #[inline]
    pub fn source(&self, h: HalfEdge) -> Vertex {
        let (u, v) = self.edges[h >> 1];
        if h & 1 == 0 {
            u
        } else {
            v
        }
    }

    #[inline]
    pub fn target(&self, h: HalfEdge) -> Vertex {
        self.source(h ^ 1)
    }

    #[inline]
    pub fn edge_of(&self, h: HalfEdge) -> usize {
        h >> 1
    }

    /// Half-edges with source `v`, in increasing id order.
    #[inline]
    pub fn half_edges_at(&self, v: Vertex) -> &[HalfEdge] {
        &self.incident[v]
    }

    /// Half-edges leaving `target(h)` other than `inv(h)`: the non-backtracking
    /// continuations of `h`.
    pub fn continuations(&self, h: HalfEdge) -> impl Iterator<Item = HalfEdge> + '_ {
        let back = h ^ 1;
        self.incident[self.target(h)].iter().copied().filter(move |&c| c != back)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of half-edges from `u` to `v`; loops count twice.
    pub fn adjacency_count(&self, u: Vertex, v: Vertex) -> usize {
        self.incident[u].iter().filter(|&&h| self.target(h) == v).count()
    }

    pub fn num_loops(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    pub fn is_simple(&self) -> bool {
        if self.num_loops() > 0 {
            return false;
        }
        let mut seen: Vec<(Vertex, Vertex)> =
            self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// BFS distances from a set of sources; `None` marks unreachable vertices.
    pub fn distances_from_set(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &h in &self.incident[u] {
                let w = self.target(h);
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances_from(&self, v: Vertex) -> Vec<Option<usize>> {
        self.distances_from_set(&[v])
    }

    /// Vertices within distance `r` of `v`, in BFS order, with their distances.
    pub fn bfs_within(&self, v: Vertex, r: usize) -> Vec<(Vertex, usize)> {
        let mut dist = vec![usize::MAX; self.n];
        let mut order = vec![(v, 0)];
        dist[v] = 0;
        let mut head = 0;
        while head < order.len() {
            let (u, du) = order[head];
            head += 1;
            if du == r {
                continue;
            }
            for &h in &self.incident[u] {
                let w = self.target(h);
                if dist[w] == usize::MAX {
                    dist[w] = du + 1;
                    order.push((w, du + 1));
                }
            }
        }
        order
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &h in &self.incident[u] {
                    let w = self.target(h);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_within(0, usize::MAX).len() == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected { components: self.components().len() })
        }
    }

    /// Subgraph induced on `vertices` (all parallel edges and loops among them
    /// kept, edge order inherited). Local vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (MultiGraph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        let g = MultiGraph::new(vertices.len(), edges).expect("induced subgraph of a valid graph");
        (g, vertices.to_vec())
    }

    /// The `r`-neighbourhood of `v` as an induced subgraph.
    pub fn ball(&self, v: Vertex, r: usize) -> Ball {
        let verts: Vec<Vertex> = self.bfs_within(v, r).into_iter().map(|(u, _)| u).collect();
        let (graph, map) = self.induced_subgraph(&verts);
        let mut inside = vec![false; self.n];
        for &v in &verts {
            inside[v] = true;
        }
        let edge_map = (0..self.edges.len())
            .filter(|&e| inside[self.edges[e].0] && inside[self.edges[e].1])
            .collect();
        Ball { graph, map, edge_map, root: 0 }
    }

    /// Edge count of the `r`-ball around `v` without building it.
    pub(crate) fn ball_size(&self, v: Vertex, r: usize, mark: &mut [bool]) -> (usize, usize) {
        let verts = self.bfs_within(v, r);
        for &(u, _) in &verts {
            mark[u] = true;
        }
        let mut half = 0;
        for &(u, _) in &verts {
            half += self.incident[u].iter().filter(|&&h| mark[self.target(h)]).count();
        }
        for &(u, _) in &verts {
            mark[u] = false;
        }
        (verts.len(), half / 2)
    }

    /// Tree / unicyclic / multicyclic by comparing `m` with `n`.
    pub fn cyclomatic_class(&self) -> Result<CyclomaticClass> {
        self.require_connected()?;
        let (m, n) = (self.num_edges(), self.n);
        Ok(if m + 1 == n {
            CyclomaticClass::Tree
        } else if m == n {
            CyclomaticClass::Unicyclic
        } else {
            CyclomaticClass::Multicyclic
        })
    }

    pub fn is_tree(&self) -> bool {
        self.num_edges() + 1 == self.n && self.is_connected()
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> MultiGraph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        MultiGraph::new(self.n, edges).expect("relabelling keeps vertices in range")
    }

    /// Sorted list of normalised `(min, max)` endpoint pairs.
    pub fn sorted_edge_list(&self) -> Vec<(Vertex, Vertex)> {
        let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> MultiGraph {
        MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn loop_has_degree_two_and_diagonal_two() {
        let g = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.adjacency_count(0, 0), 2);
        assert_eq!(g.target(0), 0);
        assert_eq!(g.inv(0), 1);
    }

    #[test]
    fn parallel_edges_count_in_adjacency() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.adjacency_count(0, 1), 2);
        assert_eq!(g.degrees(), vec![2, 2]);
        assert!(!g.is_simple());
    }

    #[test]
    fn inv_is_fixed_point_free_involution() {
        let g = bowtie();
        for h in 0..g.num_half_edges() {
            assert_ne!(g.inv(h), h);
            assert_eq!(g.inv(g.inv(h)), h);
            assert_eq!(g.source(g.inv(h)), g.target(h));
        }
    }

    #[test]
    fn cyclomatic_classes() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.cyclomatic_class().unwrap(), CyclomaticClass::Tree);
        let c5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.cyclomatic_class().unwrap(), CyclomaticClass::Unicyclic);
        assert_eq!(bowtie().cyclomatic_class().unwrap(), CyclomaticClass::Multicyclic);
        let disconnected = MultiGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(disconnected.cyclomatic_class(), Err(Error::Disconnected { components: 2 })));
    }

    #[test]
    fn ball_of_c6_is_path_of_five() {
        let c6 =
            MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let b = c6.ball(0, 2);
        assert_eq!(b.graph.n(), 5);
        assert_eq!(b.graph.num_edges(), 4);
        assert!(b.graph.is_tree());
        assert_eq!(b.map[b.root], 0);
        let mut deg = b.graph.degrees();
        deg.sort_unstable();
        assert_eq!(deg, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn ball_of_triangle_and_bowtie_are_whole_graph() {
        let tri = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.ball(1, 1).graph.num_edges(), 3);
        let b = bowtie().ball(0, 1);
        assert_eq!((b.graph.n(), b.graph.num_edges()), (5, 6));
    }

    #[test]
    fn radius_zero_keeps_loops() {
        let g = MultiGraph::from_edges(2, &[(0, 0), (0, 1), (0, 0)]).unwrap();
        let b = g.ball(0, 0);
        assert_eq!((b.graph.n(), b.graph.num_edges(), b.graph.degree(0)), (1, 2, 4));
    }

    #[test]
    fn components_and_empty() {
        assert_eq!(MultiGraph::new(0, vec![]), Err(Error::EmptyGraph));
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1, 3]]);
    }
}
