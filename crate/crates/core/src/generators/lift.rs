use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

#[derive(Debug, Clone, PartialEq)]
pub struct Lift {
    pub graph: MultiGraph,
    pub degree: usize,
    pub seed: u64,
    /// One permutation per base edge, indexed by edge id.
    pub permutations: Vec<Vec<usize>>,
    pub components: usize,
}

/// Uniform permutation `n`-lift. Vertex `(u, i)` is `u·n + i`; base edge
/// `{u, v}` with permutation `σ` becomes the edges `{(u, i), (v, σ(i))}`.
pub fn random_lift(base: &MultiGraph, n: usize, seed: u64) -> Result<Lift> {
    if n == 0 {
        return Err(Error::InvalidArgument("lift degree must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut permutations = Vec::with_capacity(base.num_edges());
    let mut edges = Vec::with_capacity(base.num_edges() * n);
    for &(u, v) in base.edges() {
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        for (i, &j) in sigma.iter().enumerate() {
            edges.push((u * n + i, v * n + j));
        }
        permutations.push(sigma);
    }
    let graph = MultiGraph::new(base.n() * n, edges)?;
    let components = graph.components().len();
    Ok(Lift { graph, degree: n, seed, permutations, components })
}
