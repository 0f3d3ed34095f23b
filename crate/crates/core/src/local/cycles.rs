use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::graph::{HalfEdge, MultiGraph, Vertex};

/// A cycle through distinct vertices and distinct edges. Loops are 1-cycles
/// and a pair of parallel edges is a 2-cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    /// Edge ids, sorted; these identify the cycle.
    pub edges: Vec<usize>,
    /// Vertices in traversal order, starting from the smallest.
    pub vertices: Vec<Vertex>,
}

/// All `ℓ`-cycles, each once, sorted by edge set.
pub fn cycles(g: &MultiGraph, len: usize) -> Vec<Cycle> {
    let mut found = BTreeMap::new();
    if len == 0 {
        return Vec::new();
    }
    let mut on_path = vec![false; g.n()];
    let mut path: Vec<HalfEdge> = Vec::with_capacity(len);
    for s in 0..g.n() {
        on_path[s] = true;
        extend(g, s, s, len, &mut path, &mut on_path, &mut found);
        on_path[s] = false;
    }
    found.into_iter().map(|(edges, vertices)| Cycle { edges, vertices }).collect()
}

fn extend(
    g: &MultiGraph,
    start: Vertex,
    at: Vertex,
    len: usize,
    path: &mut Vec<HalfEdge>,
    on_path: &mut [bool],
    found: &mut BTreeMap<Vec<usize>, Vec<Vertex>>,
) {
    for &h in g.half_edges_at(at) {
        let e = g.edge_of(h);
        if path.iter().any(|&p| g.edge_of(p) == e) {
            continue;
        }
        let w = g.target(h);
        if path.len() + 1 == len {
            if w == start {
                let mut edges: Vec<usize> = path.iter().map(|&p| g.edge_of(p)).collect();
                edges.push(e);
                edges.sort_unstable();
                let vertices: Vec<Vertex> =
                    std::iter::once(start).chain(path.iter().map(|&p| g.target(p))).collect();
                found.entry(edges).or_insert(vertices);
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(h);
            extend(g, start, w, len, path, on_path, found);
            path.pop();
            on_path[w] = false;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleStats {
    pub length: usize,
    pub count: usize,
    /// Fraction of vertices on at least one `ℓ`-cycle.
    pub fraction: f64,
    /// Number of `ℓ`-cycles through each vertex.
    pub per_vertex: Vec<usize>,
    pub max_per_vertex: usize,
    /// `Δ^ℓ`, the a priori bound on `max_per_vertex`.
    #[serde(serialize_with = "crate::bigmath::serialize_decimal")]
    pub bound: BigUint,
}

impl CycleStats {
    pub fn within_bound(&self) -> bool {
        BigUint::from(self.max_per_vertex) <= self.bound
    }
}

pub fn cycle_stats(g: &MultiGraph, len: usize) -> CycleStats {
    let cs = cycles(g, len);
    let mut per_vertex = vec![0usize; g.n()];
    for c in &cs {
        for &v in &c.vertices {
            per_vertex[v] += 1;
        }
    }
    let on = per_vertex.iter().filter(|&&c| c > 0).count();
    CycleStats {
        length: len,
        count: cs.len(),
        fraction: on as f64 / g.n() as f64,
        max_per_vertex: per_vertex.iter().copied().max().unwrap_or(0),
        per_vertex,
        bound: BigUint::from(g.max_degree()).pow(len as u32),
    }
}
