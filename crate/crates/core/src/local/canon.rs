//! Canonical codes for rooted multigraphs.
//!
//! Hanging trees (everything removable by stripping non-root leaves) are
//! encoded bottom-up as nested parentheses and folded into a label on their
//! attachment vertex. The remaining kernel is canonised by colour refinement
//! with individualisation, keeping the smallest code over all branches. Twins
//! (vertices swappable by a transposition) are branched on only once.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

/// Largest rooted graph accepted by [`canonical_code`].
pub const DEFAULT_CANON_CAP: usize = 64;
/// Search leaves explored before giving up.
const LEAF_BUDGET: usize = 200_000;

/// Canonical string for `(g, root)`: two rooted multigraphs get the same code
/// exactly when they are isomorphic by a root-preserving map.
pub fn canonical_code(g: &MultiGraph, root: Vertex, cap: usize) -> Result<String> {
    let n = g.n();
    if n > cap {
        return Err(Error::CanonicalizationCap { size: n, cap });
    }

    // Strip hanging trees.
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut hanging: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| v != root && deg[v] == 1).collect();
    let mut alive_edge = vec![true; g.num_edges()];
    while let Some(v) = stack.pop() {
        if removed[v] || deg[v] != 1 {
            continue;
        }
        removed[v] = true;
        let h = *g
            .half_edges_at(v)
            .iter()
            .find(|&&h| alive_edge[g.edge_of(h)])
            .expect("leaf has a live edge");
        alive_edge[g.edge_of(h)] = false;
        let mut kids = std::mem::take(&mut hanging[v]);
        kids.sort();
        let code = format!("({})", kids.concat());
        let w = g.target(h);
        hanging[w].push(code);
        deg[w] -= 1;
        if w != root && deg[w] == 1 {
            stack.push(w);
        }
    }

    let kernel: Vec<Vertex> = (0..n).filter(|&v| !removed[v]).collect();
    let labels: Vec<String> = kernel
        .iter()
        .map(|&v| {
            let mut kids = hanging[v].clone();
            kids.sort();
            kids.concat()
        })
        .collect();
    if kernel.len() == 1 {
        return Ok(format!("t({})", labels[0]));
    }

    let (k, _) = g.induced_subgraph(&kernel);
    let root_local = kernel.iter().position(|&v| v == root).expect("root is never stripped");
    let dist = k.distances_from(root_local);
    let keys: Vec<(usize, &str)> = (0..k.n())
        .map(|v| (dist[v].expect("kernel is connected"), labels[v].as_str()))
        .collect();
    let colors = rank(&keys);
    let mut search = Search { g: &k, best: None, leaves: 0 };
    search.run(refine(&k, colors))?;
    let (perm, edges) = search.best.expect("search reaches at least one leaf");

    let mut out = format!("k{}|", k.n());
    for &v in &perm {
        out.push_str(&format!("{}:{};", keys[v].0, keys[v].1));
    }
    out.push('|');
    for (a, b) in edges {
        out.push_str(&format!("{a}-{b},"));
    }
    Ok(out)
}

/// Dense ranks of `keys` in sorted order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut ids: BTreeMap<K, usize> = keys.iter().cloned().map(|k| (k, 0)).collect();
    for (i, id) in ids.values_mut().enumerate() {
        *id = i;
    }
    keys.iter().map(|k| ids[k]).collect()
}

/// Colour refinement preserving the order of existing colours.
fn refine(g: &MultiGraph, mut colors: Vec<usize>) -> Vec<usize> {
    let mut count = colors.iter().copied().max().map_or(0, |m| m + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<usize> =
                    g.half_edges_at(v).iter().map(|&h| colors[g.target(h)]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        colors = rank(&sigs);
        let next = colors.iter().copied().max().map_or(0, |m| m + 1);
        if next == count {
            return colors;
        }
        count = next;
    }
}

type Leaf = (Vec<Vertex>, Vec<(usize, usize)>);

struct Search<'a> {
    g: &'a MultiGraph,
    best: Option<Leaf>,
    leaves: usize,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<usize>) -> Result<()> {
        let n = self.g.n();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return Ok(());
        };
        let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let split: Vec<usize> = (0..n)
                .map(|x| 2 * colors[x] + usize::from(colors[x] == target && x != v))
                .collect();
            self.run(refine(self.g, rank(&split)))?;
            if self.leaves > LEAF_BUDGET {
                return Err(Error::CanonicalizationBudget { size: n, leaves: LEAF_BUDGET });
            }
        }
        Ok(())
    }

    fn leaf(&mut self, colors: &[usize]) {
        self.leaves += 1;
        let g = self.g;
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (colors[a], colors[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let mut perm = vec![0; g.n()];
        for (v, &c) in colors.iter().enumerate() {
            perm[c] = v;
        }
        let candidate = (perm, edges);
        if self.best.as_ref().map_or(true, |b| candidate.1 < b.1) {
            self.best = Some(candidate);
        }
    }

    /// The transposition `(v w)` is an automorphism.
    fn twins(&self, v: Vertex, w: Vertex) -> bool {
        let g = self.g;
        let nb = |x: Vertex, other: Vertex| {
            let mut out: Vec<Vertex> = g
                .half_edges_at(x)
                .iter()
                .map(|&h| g.target(h))
                .map(|t| if t == x { usize::MAX } else if t == other { usize::MAX - 1 } else { t })
                .collect();
            out.sort_unstable();
            out
        };
        nb(v, w) == nb(w, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(g: &MultiGraph, r: Vertex) -> String {
        canonical_code(g, r, 64).unwrap()
    }

    #[test]
    fn trees_use_nested_parentheses() {
        let star = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(code(&star, 0), "t(()()())");
        assert_eq!(code(&star, 1), "t((()()))");
    }

    #[test]
    fn root_matters() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_ne!(code(&g, 0), code(&g, 2));
        assert_ne!(code(&g, 0), code(&g, 3));
        assert_eq!(code(&g, 0), code(&g, 1));
    }

    #[test]
    fn multiplicity_matters() {
        let a = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        let b = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 2)]).unwrap();
        assert_ne!(code(&a, 0), code(&b, 0));
        assert_eq!(code(&a, 2), code(&b, 0));
        let l = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 0)]).unwrap();
        assert_ne!(code(&l, 0), code(&l, 1));
    }

    #[test]
    fn cap() {
        let g = MultiGraph::new(70, (0..69).map(|i| (i, i + 1)).collect()).unwrap();
        assert_eq!(canonical_code(&g, 0, 64).unwrap_err().kind(), "canonicalization-cap");
    }

    fn arb_graph() -> impl Strategy<Value = (MultiGraph, Vec<usize>)> {
        (2usize..8)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    prop::collection::vec((0..n, 0..n), 1..12),
                    Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                )
            })
            .prop_filter_map("connected", |(n, edges, perm)| {
                let g = MultiGraph::new(n, edges).ok()?;
                g.is_connected().then_some((g, perm))
            })
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling((g, perm) in arb_graph()) {
            let h = g.relabel(&perm);
            for (v, &pv) in perm.iter().enumerate() {
                prop_assert_eq!(code(&g, v), code(&h, pv));
            }
        }
    }
}
