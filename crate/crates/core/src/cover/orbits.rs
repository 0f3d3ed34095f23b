use std::collections::BTreeMap;

use crate::graph::{MultiGraph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitClass {
    /// Smallest member; stands for `v̂_j` via any lift.
    pub representative: Vertex,
    pub members: Vec<Vertex>,
    pub p: f64,
}

/// Vertices grouped by the isomorphism type of their rooted universal cover.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitDistribution {
    /// Ordered by representative.
    pub classes: Vec<OrbitClass>,
    /// `coloring[v]` is the index of `v`'s class.
    pub coloring: Vec<usize>,
    /// Number of refinement rounds that split a class.
    pub rounds: usize,
}

impl OrbitDistribution {
    /// Class sizes over `n`, as exact `(size, n)` pairs.
    pub fn proportions(&self) -> Vec<(usize, usize)> {
        let n = self.coloring.len();
        self.classes.iter().map(|c| (c.members.len(), n)).collect()
    }

    /// Same-class vertices see the same multiset of neighbour classes.
    pub fn is_equitable(&self, g: &MultiGraph) -> bool {
        let profile = |v: Vertex| {
            let mut p: Vec<usize> =
                g.half_edges_at(v).iter().map(|&h| self.coloring[g.target(h)]).collect();
            p.sort_unstable();
            p
        };
        self.classes
            .iter()
            .all(|c| c.members.windows(2).all(|w| profile(w[0]) == profile(w[1])))
    }
}

/// Coarsest equitable partition by colour refinement from the trivial
/// colouring. Rooted covers `(T, v̂)` and `(T, û)` are isomorphic exactly when
/// `v` and `u` end in the same class.
pub fn orbit_distribution(g: &MultiGraph) -> OrbitDistribution {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut count = 1;
    let mut rounds = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> =
                    g.half_edges_at(v).iter().map(|&h| color[g.target(h)]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &sigs {
            ids.entry(s.clone()).or_insert(0usize);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        color = sigs.iter().map(|s| ids[s]).collect();
        if ids.len() == count {
            break;
        }
        count = ids.len();
        rounds += 1;
    }

    // Renumber classes by smallest member.
    let mut renumber = vec![usize::MAX; count];
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        if renumber[color[v]] == usize::MAX {
            renumber[color[v]] = members.len();
            members.push(Vec::new());
        }
        members[renumber[color[v]]].push(v);
    }
    let coloring = color.iter().map(|&c| renumber[c]).collect();
    let classes = members
        .into_iter()
        .map(|m| OrbitClass { representative: m[0], p: m.len() as f64 / n as f64, members: m })
        .collect();
    OrbitDistribution { classes, coloring, rounds }
}
