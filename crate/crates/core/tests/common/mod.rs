//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::sync::OnceLock;

use cover_spectra::generators::{corpus as build_corpus, CORPUS_MAX_EDGES, CORPUS_MAX_VERTICES};
use cover_spectra::{HalfEdge, MultiGraph, Vertex};
use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn corpus() -> &'static [MultiGraph] {
    static CORPUS: OnceLock<Vec<MultiGraph>> = OnceLock::new();
    CORPUS.get_or_init(|| build_corpus(CORPUS_MAX_VERTICES, CORPUS_MAX_EDGES))
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::from_edges(n, edges).unwrap()
}

pub fn bowtie() -> MultiGraph {
    graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

pub fn k4() -> MultiGraph {
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn cycle(n: usize) -> MultiGraph {
    MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

/// `out[v]` lists `(half-edge, head)` for every half-edge leaving `v`, read
/// straight from the edge list: edge `i` is `2i` forwards and `2i + 1`
/// backwards.
fn out_half_edges(g: &MultiGraph) -> Vec<Vec<(HalfEdge, Vertex)>> {
    let mut out = vec![Vec::new(); g.n()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        out[a].push((2 * i, b));
        out[b].push((2 * i + 1, a));
    }
    out
}

/// Closed walks of length `k` at `v` whose half-edge word reduces to the
/// empty word under cancellation of `h · h⁻¹`, by plain enumeration with a
/// reduction stack.
pub fn brute_force_backtracking(g: &MultiGraph, v: Vertex, k: usize) -> BigUint {
    fn go(out: &[Vec<(HalfEdge, Vertex)>], at: Vertex, left: usize, stack: &mut Vec<HalfEdge>) -> u64 {
        if stack.len() > left {
            return 0;
        }
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &(h, w) in &out[at] {
            if stack.last() == Some(&(h ^ 1)) {
                stack.pop();
                total += go(out, w, left - 1, stack);
                stack.push(h ^ 1);
            } else {
                stack.push(h);
                total += go(out, w, left - 1, stack);
                stack.pop();
            }
        }
        total
    }
    BigUint::from(go(&out_half_edges(g), v, k, &mut Vec::new()))
}

/// Reducing closed walks by excursion decomposition on raw half-edges: an
/// excursion over `h` crosses `h`, makes excursions at its head that avoid
/// `h⁻¹`, and crosses back; a reducing closed walk is a run of excursions.
pub fn excursion_counts(g: &MultiGraph, v: Vertex, k_max: usize) -> Vec<BigUint> {
    let out = out_half_edges(g);
    let m2 = 2 * g.num_edges();
    let head = |h: HalfEdge| {
        let (a, b) = g.edges()[h / 2];
        if h % 2 == 0 { b } else { a }
    };
    // exc[h][s]: excursions over h of length s. runs[h][s]: runs of
    // excursions at head(h), none over h ^ 1, of total length s.
    let mut exc = vec![vec![BigUint::zero(); k_max + 1]; m2];
    let mut runs = vec![vec![BigUint::zero(); k_max + 1]; m2];
    for r in runs.iter_mut() {
        r[0] = BigUint::one();
    }
    for s in 1..=k_max {
        for h in 0..m2 {
            if s >= 2 {
                exc[h][s] = runs[h][s - 2].clone();
            }
        }
        for h in 0..m2 {
            let mut total = BigUint::zero();
            for &(c, _) in &out[head(h)] {
                if c != h ^ 1 {
                    for first in 2..=s {
                        total += &exc[c][first] * &runs[h][s - first];
                    }
                }
            }
            runs[h][s] = total;
        }
    }
    let mut root = vec![BigUint::zero(); k_max + 1];
    root[0] = BigUint::one();
    for s in 1..=k_max {
        let mut total = BigUint::zero();
        for &(c, _) in &out[v] {
            for first in 2..=s {
                total += &exc[c][first] * &root[s - first];
            }
        }
        root[s] = total;
    }
    root
}

/// Closed walk counts from repeated multiplication by the adjacency matrix.
pub fn matrix_walk_counts(g: &MultiGraph, v: Vertex, k_max: usize) -> Vec<BigUint> {
    let n = g.n();
    let mut a = vec![vec![0u64; n]; n];
    for &(x, y) in g.edges() {
        if x == y {
            a[x][x] += 2;
        } else {
            a[x][y] += 1;
            a[y][x] += 1;
        }
    }
    let mut x = vec![BigUint::zero(); n];
    x[v] = BigUint::one();
    let mut out = vec![x[v].clone()];
    for _ in 0..k_max {
        x = (0..n)
            .map(|i| (0..n).filter(|&j| a[i][j] > 0).map(|j| &x[j] * a[i][j]).sum())
            .collect();
        out.push(x[v].clone());
    }
    out
}

/// Connected components as standalone graphs.
pub fn components(g: &MultiGraph) -> Vec<MultiGraph> {
    g.components().iter().map(|c| g.induced_subgraph(c).0).collect()
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

/// All-pairs BFS distances.
pub fn distance_matrix(g: &MultiGraph) -> Vec<Vec<Option<usize>>> {
    (0..g.n()).map(|v| g.distances_from(v)).collect()
}
