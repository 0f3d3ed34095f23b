use std::collections::BTreeMap;

use crate::graph::{HalfEdge, MultiGraph, Vertex};

/// Stable colouring of half-edges under "same colour and same multiset of
/// continuation colours".
///
/// Two half-edges in one class root isomorphic branches of the universal
/// cover, so any quantity defined by a recursion over branches is constant on
/// classes and can be solved on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdgeClasses {
    pub class_of: Vec<usize>,
    /// For each class, `(child class, multiplicity)` pairs, sorted by class.
    pub children: Vec<Vec<(usize, usize)>>,
    /// A representative half-edge for each class.
    pub representative: Vec<HalfEdge>,
}

impl HalfEdgeClasses {
    pub fn compute(g: &MultiGraph) -> Self {
        let nh = g.num_half_edges();
        let mut color = vec![0usize; nh];
        let mut count = usize::from(nh > 0);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..nh)
                .map(|h| {
                    let mut c: Vec<usize> = g.continuations(h).map(|c| color[c]).collect();
                    c.sort_unstable();
                    (color[h], c)
                })
                .collect();
            let mut ids = BTreeMap::new();
            for s in &sigs {
                ids.entry(s.clone()).or_insert(0);
            }
            for (i, v) in ids.values_mut().enumerate() {
                *v = i;
            }
            let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
            let new_count = ids.len();
            color = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }

        let mut representative = vec![usize::MAX; count];
        for h in (0..nh).rev() {
            representative[color[h]] = h;
        }
        let children = representative
            .iter()
            .map(|&h| tally(g.continuations(h).map(|c| color[c])))
            .collect();
        HalfEdgeClasses { class_of: color, children, representative }
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// `(class, multiplicity)` of the half-edges leaving `v`.
    pub fn root_profile(&self, g: &MultiGraph, v: Vertex) -> Vec<(usize, usize)> {
        tally(g.half_edges_at(v).iter().map(|&h| self.class_of[h]))
    }
}

fn tally(it: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut m = BTreeMap::new();
    for c in it {
        *m.entry(c).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_graph_has_one_class() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = HalfEdgeClasses::compute(&k4);
        assert_eq!(c.len(), 1);
        assert_eq!(c.children[0], vec![(0, 2)]);
    }

    #[test]
    fn classes_are_equitable() {
        let g = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 4), (3, 5)])
            .unwrap();
        let c = HalfEdgeClasses::compute(&g);
        for h in 0..g.num_half_edges() {
            let got = tally(g.continuations(h).map(|x| c.class_of[x]));
            assert_eq!(got, c.children[c.class_of[h]]);
        }
    }
}
