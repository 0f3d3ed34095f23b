use std::collections::VecDeque;

use super::{HalfEdge, MultiGraph, Vertex};
use crate::error::{Error, Result};

/// The 2-core of a connected graph and the orientation of everything hanging
/// off it.
///
/// Core edges appear in `int_half_edges` in both directions. Every other edge
/// appears once in `ext_half_edges`, directed away from the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_vertices: Vec<Vertex>,
    pub ext_vertices: Vec<Vertex>,
    pub int_half_edges: Vec<HalfEdge>,
    pub ext_half_edges: Vec<HalfEdge>,
    in_core: Vec<bool>,
    is_int: Vec<bool>,
    is_ext: Vec<bool>,
    core_degree: Vec<usize>,
    depth: Vec<usize>,
}

impl CoreDecomposition {
    pub fn is_core(&self, v: Vertex) -> bool {
        self.in_core[v]
    }

    pub fn is_int(&self, h: HalfEdge) -> bool {
        self.is_int[h]
    }

    pub fn is_ext(&self, h: HalfEdge) -> bool {
        self.is_ext[h]
    }

    /// Number of interior half-edges sourced at `v` (0 off the core).
    pub fn core_degree(&self, v: Vertex) -> usize {
        self.core_degree[v]
    }

    /// Distance from `v` to the core.
    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    /// The core as a graph, with the map from local to host vertices.
    pub fn core_graph(&self, g: &MultiGraph) -> (MultiGraph, Vec<Vertex>) {
        g.induced_subgraph(&self.core_vertices)
    }
}

/// Iterated leaf removal followed by a multi-source BFS from the core to
/// orient the remaining edges.
pub fn two_core(g: &MultiGraph) -> Result<CoreDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut edge_alive = vec![true; g.num_edges()];
    let mut leaves: VecDeque<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();

    while let Some(v) = leaves.pop_front() {
        if removed[v] || deg[v] != 1 {
            continue;
        }
        removed[v] = true;
        deg[v] = 0;
        let h = *g
            .half_edges_at(v)
            .iter()
            .find(|&&h| edge_alive[g.edge_of(h)])
            .expect("a leaf has one live edge");
        edge_alive[g.edge_of(h)] = false;
        let w = g.target(h);
        deg[w] -= 1;
        if deg[w] == 1 {
            leaves.push_back(w);
        }
    }

    let core_vertices: Vec<Vertex> = (0..n).filter(|&v| !removed[v] && deg[v] >= 2).collect();
    if core_vertices.is_empty() {
        return Err(Error::NoCycle);
    }
    let mut in_core = vec![false; n];
    for &v in &core_vertices {
        in_core[v] = true;
    }
    let ext_vertices: Vec<Vertex> = (0..n).filter(|&v| !in_core[v]).collect();

    let depth: Vec<usize> = g
        .distances_from_set(&core_vertices)
        .into_iter()
        .map(|d| d.expect("connected"))
        .collect();

    let nh = g.num_half_edges();
    let mut is_int = vec![false; nh];
    let mut is_ext = vec![false; nh];
    let mut core_degree = vec![0; n];
    for h in 0..nh {
        let (s, t) = (g.source(h), g.target(h));
        if in_core[s] && in_core[t] {
            is_int[h] = true;
            core_degree[s] += 1;
        } else if depth[t] == depth[s] + 1 {
            is_ext[h] = true;
        } else {
            debug_assert_eq!(depth[s], depth[t] + 1, "non-core edge must step away from the core");
        }
    }
    let int_half_edges = (0..nh).filter(|&h| is_int[h]).collect();
    let ext_half_edges = (0..nh).filter(|&h| is_ext[h]).collect();

    Ok(CoreDecomposition {
        core_vertices,
        ext_vertices,
        int_half_edges,
        ext_half_edges,
        in_core,
        is_int,
        is_ext,
        core_degree,
        depth,
    })
}
