//! The Γ and Δ edge weightings on the 2-core and the trees hanging off it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{CoreDecomposition, HalfEdge, MultiGraph};

/// Exact weights keyed by half-edge id.
pub type Weights = BTreeMap<HalfEdge, BigRational>;

#[derive(Debug, Clone, PartialEq)]
pub struct GammaAssignment {
    /// Step added along each degree-2 chain.
    pub epsilon: BigRational,
    pub weights: Weights,
}

/// Γ on interior half-edges: 1 out of every core vertex of core-degree > 2,
/// then `+ε` per step along degree-2 chains.
///
/// Fails unless every cycle of the core passes through a vertex of
/// core-degree > 2, which holds exactly for multicyclic graphs.
pub fn gamma_assignment(g: &MultiGraph, core: &CoreDecomposition) -> Result<GammaAssignment> {
    let n_int = core.int_half_edges.len();
    let epsilon = BigRational::new(BigInt::one(), BigInt::from(2 * n_int.max(1)));
    let mut weights = Weights::new();

    for &start in &core.int_half_edges {
        if core.core_degree(g.source(start)) <= 2 {
            continue;
        }
        let mut h = start;
        let mut value = BigRational::one();
        weights.insert(h, value.clone());
        while core.core_degree(g.target(h)) == 2 {
            let next = g
                .continuations(h)
                .find(|&c| core.is_int(c))
                .expect("a core-degree-2 vertex has a second interior half-edge");
            value += &epsilon;
            if weights.insert(next, value.clone()).is_some() {
                break;
            }
            h = next;
        }
    }

    if weights.len() != n_int {
        let missing = core.int_half_edges.iter().find(|h| !weights.contains_key(h));
        return Err(Error::Weighting(format!(
            "interior half-edge {} lies on a cycle without a branch vertex; \
             the graph has at most one cycle",
            missing.copied().unwrap_or_default()
        )));
    }
    Ok(GammaAssignment { epsilon, weights })
}

/// Δ on exterior half-edges: 1 out of the core, and a node with `d`
/// exterior children hands each `1/(d+1)` of its own weight.
pub fn delta_assignment(g: &MultiGraph, core: &CoreDecomposition) -> Weights {
    let mut weights = Weights::new();
    let mut stack: Vec<HalfEdge> = Vec::new();
    for &h in &core.ext_half_edges {
        if core.is_core(g.source(h)) {
            weights.insert(h, BigRational::one());
            stack.push(h);
        }
    }
    while let Some(h) = stack.pop() {
        let children: Vec<HalfEdge> = g.continuations(h).filter(|&c| core.is_ext(c)).collect();
        let share = &weights[&h] / BigRational::from_integer(BigInt::from(children.len() + 1));
        for c in children {
            weights.insert(c, share.clone());
            stack.push(c);
        }
    }
    weights
}

/// `Σ_{h' int, h' continues h} Γ(h') > Γ(h)` for every interior `h`, and
/// every value in `[1, 2)`.
pub fn gamma_inequality_holds(g: &MultiGraph, core: &CoreDecomposition, gamma: &Weights) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    core.int_half_edges.iter().all(|&h| {
        let Some(own) = gamma.get(&h) else { return false };
        let next: BigRational = g
            .continuations(h)
            .filter(|&c| core.is_int(c))
            .map(|c| gamma.get(&c).cloned().unwrap_or_else(BigRational::zero))
            .sum();
        *own >= BigRational::one() && *own < two && next > *own
    })
}

/// `Σ_{h' ext, h' continues h} Δ(h') < Δ(h)` for every exterior `h`, and
/// every value in `(0, 1]`.
pub fn delta_inequality_holds(g: &MultiGraph, core: &CoreDecomposition, delta: &Weights) -> bool {
    core.ext_half_edges.iter().all(|&h| {
        let Some(own) = delta.get(&h) else { return false };
        let next: BigRational = g
            .continuations(h)
            .filter(|&c| core.is_ext(c))
            .map(|c| delta.get(&c).cloned().unwrap_or_else(BigRational::zero))
            .sum();
        own.is_positive() && *own <= BigRational::one() && next < *own
    })
}
