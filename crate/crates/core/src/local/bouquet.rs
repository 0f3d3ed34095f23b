use serde::Serialize;

use super::cycles::{cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bouquet {
    pub first: Cycle,
    pub second: Cycle,
    /// Distances from the root to each cycle.
    pub distances: (usize, usize),
}

/// Two vertex-disjoint `ℓ`-cycles at distance at most `k − ℓ` from `v`.
///
/// Among valid pairs the one with the smallest `(max distance, first, second)`
/// is returned, so the answer is deterministic.
pub fn find_bouquet(g: &MultiGraph, v: Vertex, k: usize, len: usize) -> Result<Option<Bouquet>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if k < len {
        return Err(Error::InvalidArgument(format!("need k >= l, got k = {k}, l = {len}")));
    }
    let reach = k - len;
    // A cycle within distance `reach` lies inside the (reach + len/2)-ball.
    let ball = g.ball(v, reach + len / 2);
    let dist = ball.graph.distances_from(ball.root);
    let near: Vec<(usize, Cycle)> = cycles(&ball.graph, len)
        .into_iter()
        .filter_map(|c| {
            let d = c.vertices.iter().filter_map(|&u| dist[u]).min()?;
            (d <= reach).then(|| {
                let vertices = c.vertices.iter().map(|&u| ball.map[u]).collect();
                let mut edges: Vec<usize> = c.edges.iter().map(|&e| ball.edge_map[e]).collect();
                edges.sort_unstable();
                (d, Cycle { edges, vertices })
            })
        })
        .collect();

    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..near.len() {
        for j in i + 1..near.len() {
            let disjoint = near[i].1.vertices.iter().all(|u| !near[j].1.vertices.contains(u));
            if !disjoint {
                continue;
            }
            let key = (near[i].0.max(near[j].0), i, j);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
    }
    Ok(best.map(|(_, i, j)| {
        let mut pair = [near[i].clone(), near[j].clone()];
        pair.sort_by(|a, b| a.1.cmp(&b.1));
        let [(d1, first), (d2, second)] = pair;
        Bouquet { first, second, distances: (d1, d2) }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_none() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(find_bouquet(&g, 0, 3, 3).unwrap(), None);
    }

    #[test]
    fn dumbbell_has_one() {
        // Triangles 0-1-2 and 4-5-6 joined by 2-3-4; midpoint 3.
        let g = MultiGraph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)],
        )
        .unwrap();
        let b = find_bouquet(&g, 3, 4, 3).unwrap().unwrap();
        assert_eq!(b.distances, (1, 1));
        assert_eq!(b.first.edges, vec![0, 1, 2]);
        assert_eq!(b.second.edges, vec![5, 6, 7]);
        assert_eq!(find_bouquet(&g, 3, 3, 3).unwrap(), None);
    }

    #[test]
    fn octagon_has_none() {
        let g = MultiGraph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).collect()).unwrap();
        assert_eq!(find_bouquet(&g, 0, 6, 3).unwrap(), None);
    }

    #[test]
    fn bad_arguments() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_bouquet(&g, 0, 2, 3).unwrap_err().kind(), "invalid-argument");
        assert_eq!(find_bouquet(&g, 5, 3, 3).unwrap_err().kind(), "vertex-out-of-range");
    }
}
