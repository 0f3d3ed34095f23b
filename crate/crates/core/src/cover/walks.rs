//! Purely backtracking closed walks, i.e. closed walks at a lift of `v` in
//! the universal cover.
//!
//! A branch entered through half-edge `h` has a generating function (in
//! `u = z²`) for closed walks at its top node that never visit the parent:
//!
//! ```text
//! P_h(u) = 1 / (1 - u · Σ_{h' continues h} P_{h'}(u))
//! ```
//!
//! and the root count is `1 / (1 - u · Σ_{h at v} P_h(u))`. After `i` rounds
//! of the recursion started from `P = 1`, coefficients up to `u^i` are exact.
//! Branches only depend on the half-edge class, so the recursion runs on the
//! quotient.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::HalfEdgeClasses;
use crate::graph::{MultiGraph, Vertex};

/// `1 / (1 - u·s(u))` truncated to `len` coefficients.
fn inverse_one_minus_shifted(s: &[BigUint], len: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = Vec::with_capacity(len);
    c.push(BigUint::one());
    for n in 1..len {
        let mut acc = BigUint::zero();
        for j in 1..=n {
            if let Some(q) = s.get(j - 1) {
                if !q.is_zero() && !c[n - j].is_zero() {
                    acc += q * &c[n - j];
                }
            }
        }
        c.push(acc);
    }
    c
}

fn weighted_sum(profile: &[(usize, usize)], p: &[Vec<BigUint>], len: usize) -> Vec<BigUint> {
    let mut s = vec![BigUint::zero(); len];
    for &(c, m) in profile {
        let m = BigUint::from(m);
        for (acc, x) in s.iter_mut().zip(&p[c]) {
            *acc += x * &m;
        }
    }
    s
}

/// Branch generating functions for every half-edge class, exact up to `u^half`.
fn branch_series(classes: &HalfEdgeClasses, half: usize) -> Vec<Vec<BigUint>> {
    let len = half + 1;
    let mut p: Vec<Vec<BigUint>> = (0..classes.len())
        .map(|_| {
            let mut v = vec![BigUint::zero(); len];
            v[0] = BigUint::one();
            v
        })
        .collect();
    for _ in 0..half {
        p = classes
            .children
            .iter()
            .map(|profile| inverse_one_minus_shifted(&weighted_sum(profile, &p, len), len))
            .collect();
    }
    p
}

/// `N_j(G, v)` for `j = 0..=k_max`; odd lengths are zero.
pub fn backtracking_walk_counts(g: &MultiGraph, v: Vertex, k_max: usize) -> Vec<BigUint> {
    let classes = HalfEdgeClasses::compute(g);
    backtracking_walk_counts_with(g, &classes, v, k_max)
}

pub fn backtracking_walk_counts_with(
    g: &MultiGraph,
    classes: &HalfEdgeClasses,
    v: Vertex,
    k_max: usize,
) -> Vec<BigUint> {
    let half = k_max / 2;
    let p = branch_series(classes, half);
    let len = half + 1;
    let root = inverse_one_minus_shifted(&weighted_sum(&classes.root_profile(g, v), &p, len), len);
    let mut out = vec![BigUint::zero(); k_max + 1];
    for (j, c) in root.into_iter().enumerate() {
        out[2 * j] = c;
    }
    out
}

/// Number of purely backtracking closed walks of length `k` at `v`.
pub fn backtracking_walk_count(g: &MultiGraph, v: Vertex, k: usize) -> BigUint {
    backtracking_walk_counts(g, v, k).pop().expect("non-empty")
}
