use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{HalfEdge, MultiGraph, Vertex};

/// Default node cap for materialised tree balls.
pub const DEFAULT_BALL_CAP: usize = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Image under the cover map.
    pub pi: Vertex,
    /// Half-edge of the base graph this node was reached by; `None` at the root.
    pub in_half_edge: Option<HalfEdge>,
    pub parent: Option<usize>,
    /// Children are stored contiguously in breadth-first order.
    pub children: Range<usize>,
    pub depth: usize,
}

/// `B_R(T, v̂)` with cover-map labels. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeBall {
    pub radius: usize,
    pub nodes: Vec<TreeNode>,
}

/// Exact node count of `B_R(T, v̂)` (as a float so that huge balls can be
/// reported without overflow).
pub fn tree_ball_size(g: &MultiGraph, v: Vertex, radius: usize) -> f64 {
    if radius == 0 {
        return 1.0;
    }
    // below[h] = size of the subtree entered through h, truncated at the
    // current remaining depth.
    let nh = g.num_half_edges();
    let mut below = vec![1.0f64; nh];
    for _ in 1..radius {
        below = (0..nh).map(|h| 1.0 + g.continuations(h).map(|c| below[c]).sum::<f64>()).collect();
    }
    1.0 + g.half_edges_at(v).iter().map(|&h| below[h]).sum::<f64>()
}

pub fn tree_ball(g: &MultiGraph, v: Vertex, radius: usize) -> Result<TreeBall> {
    tree_ball_with_cap(g, v, radius, DEFAULT_BALL_CAP)
}

pub fn tree_ball_with_cap(g: &MultiGraph, v: Vertex, radius: usize, cap: usize) -> Result<TreeBall> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let estimate = tree_ball_size(g, v, radius);
    if estimate > cap as f64 {
        return Err(Error::BallTooLarge { radius, estimate, cap });
    }
    let mut nodes = Vec::with_capacity(estimate as usize);
    nodes.push(TreeNode { pi: v, in_half_edge: None, parent: None, children: 0..0, depth: 0 });
    let mut head = 0;
    while head < nodes.len() {
        let (pi, in_h, depth) = (nodes[head].pi, nodes[head].in_half_edge, nodes[head].depth);
        if depth < radius {
            let start = nodes.len();
            let back = in_h.map(|h| g.inv(h));
            for &h in g.half_edges_at(pi) {
                if Some(h) == back {
                    continue;
                }
                nodes.push(TreeNode {
                    pi: g.target(h),
                    in_half_edge: Some(h),
                    parent: Some(head),
                    children: 0..0,
                    depth: depth + 1,
                });
            }
            nodes[head].children = start..nodes.len();
        }
        head += 1;
    }
    Ok(TreeBall { radius, nodes })
}

impl TreeBall {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn to_graph(&self) -> MultiGraph {
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .filter_map(|(i, node)| node.parent.map(|p| (p, i)))
            .collect();
        MultiGraph::new(self.nodes.len(), edges).expect("tree ball is a valid graph")
    }

    /// Closed walks at the root of length `0..=k_max`, counted directly on
    /// the materialised tree.
    pub fn root_closed_walk_counts(&self, k_max: usize) -> Vec<BigUint> {
        let n = self.nodes.len();
        let mut x = vec![BigUint::zero(); n];
        x[0] = BigUint::one();
        let mut out = vec![BigUint::one()];
        for _ in 0..k_max {
            let mut y = vec![BigUint::zero(); n];
            for (i, node) in self.nodes.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                if let Some(p) = node.parent {
                    y[p] += &x[i];
                }
                for c in node.children.clone() {
                    y[c] += &x[i];
                }
            }
            x = y;
            out.push(x[0].clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_ball_is_a_path() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = tree_ball(&g, 0, 2).unwrap();
        assert_eq!(b.len(), 5);
        assert!(b.to_graph().is_tree());
        assert_eq!(tree_ball_size(&g, 0, 2), 5.0);
    }

    #[test]
    fn cubic_ball_growth() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(tree_ball(&k4, 0, 2).unwrap().len(), 10);
    }

    #[test]
    fn loop_vertex_has_two_directions() {
        let g = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        let b = tree_ball(&g, 0, 1).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.nodes[1].in_half_edge, Some(0));
        assert_eq!(b.nodes[2].in_half_edge, Some(1));
    }

    #[test]
    fn cover_map_is_locally_bijective() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)]).unwrap();
        let b = tree_ball(&g, 1, 4).unwrap();
        for node in &b.nodes {
            if node.depth == b.radius {
                continue;
            }
            // Children plus parent correspond to the half-edges at pi.
            let mut hs: Vec<HalfEdge> =
                node.children.clone().map(|c| b.nodes[c].in_half_edge.unwrap()).collect();
            if let Some(h) = node.in_half_edge {
                hs.push(g.inv(h));
            }
            hs.sort_unstable();
            assert_eq!(hs, g.half_edges_at(node.pi).to_vec());
        }
        // Node count bound for max degree 4 (loop at 3 gives degree 3; the
        // double edge gives degree 4 at 0 and 1).
        let d = g.max_degree() as f64;
        let bound = 1.0 + d * ((d - 1.0).powi(4) - 1.0) / (d - 2.0);
        assert!(b.len() as f64 <= bound);
    }

    #[test]
    fn cap_is_enforced() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let err = tree_ball_with_cap(&k4, 0, 10, 100).unwrap_err();
        assert_eq!(err.kind(), "ball-too-large");
    }
}
