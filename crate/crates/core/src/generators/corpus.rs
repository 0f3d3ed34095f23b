use std::collections::BTreeSet;

use crate::graph::{MultiGraph, Vertex};

pub const CORPUS_MAX_VERTICES: usize = 5;
pub const CORPUS_MAX_EDGES: usize = 7;

fn permutations(n: usize) -> Vec<Vec<Vertex>> {
    fn go(prefix: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical_with(edges: &[(Vertex, Vertex)], perms: &[Vec<Vertex>]) -> Vec<(Vertex, Vertex)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Smallest sorted edge list over all vertex relabellings. Only meant for
/// tiny graphs: it tries all `n!` permutations.
pub fn canonical_form(g: &MultiGraph) -> Vec<(Vertex, Vertex)> {
    canonical_with(g.edges(), &permutations(g.n()))
}

/// Every connected multigraph (loops and parallel edges allowed) with at
/// most `max_n` vertices and `max_m` edges, one per isomorphism class,
/// ordered by `(n, m, canonical edge list)`.
pub fn corpus(max_n: usize, max_m: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        let slots: Vec<(Vertex, Vertex)> =
            (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        // All graphs on n vertices with m edges, up to isomorphism, grown one
        // edge at a time.
        let mut level: BTreeSet<Vec<(Vertex, Vertex)>> = BTreeSet::from([Vec::new()]);
        for m in 0..=max_m {
            for edges in &level {
                let g = MultiGraph::new(n, edges.clone()).expect("valid corpus graph");
                if g.is_connected() {
                    out.push(g);
                }
            }
            if m == max_m {
                break;
            }
            let mut next = BTreeSet::new();
            for edges in &level {
                for &s in &slots {
                    let mut e = edges.clone();
                    e.push(s);
                    next.insert(canonical_with(&e, &perms));
                }
            }
            level = next;
        }
    }
    out
}
