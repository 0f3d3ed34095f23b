//! Adjacency spectra and exact closed-walk counts.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

/// Largest `n` handled by the dense symmetric eigensolver.
pub const DENSE_CAP: usize = 4096;

/// Default slack added to `rho` when counting eigenvalues inside `[-rho, rho]`.
pub const DEFAULT_ETA: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Nonincreasing, with multiplicity. Only `[lambda1]` when `partial`.
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    /// Positive unit Perron vector.
    pub perron: Vec<f64>,
    /// Set when the graph exceeded the dense cap and only the top eigenpair
    /// was computed.
    pub partial: bool,
}

/// Dense adjacency matrix with the loop-counts-twice convention.
pub fn adjacency_matrix(g: &MultiGraph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for h in 0..g.num_half_edges() {
        a[(g.source(h), g.target(h))] += 1.0;
    }
    a
}

/// All adjacency eigenvalues, nonincreasing. Does not require connectivity.
pub fn adjacency_eigenvalues(g: &MultiGraph) -> Vec<f64> {
    let mut ev: Vec<f64> = adjacency_matrix(g).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

pub fn eigen_spectrum(g: &MultiGraph) -> Result<Spectrum> {
    eigen_spectrum_with_cap(g, DENSE_CAP)
}

pub fn eigen_spectrum_with_cap(g: &MultiGraph, dense_cap: usize) -> Result<Spectrum> {
    g.require_connected()?;
    if g.n() > dense_cap {
        let (lambda1, perron) = perron_by_power_iteration(g, 1e-13, 1_000_000)?;
        return Ok(Spectrum { eigenvalues: vec![lambda1], lambda1, perron, partial: true });
    }
    let eig = SymmetricEigen::new(adjacency_matrix(g));
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let top = eig.eigenvectors.column(order[0]);
    let perron = positive_unit(top.iter().copied().collect())?;
    Ok(Spectrum { lambda1: eigenvalues[0], eigenvalues, perron, partial: false })
}

fn positive_unit(mut y: Vec<f64>) -> Result<Vec<f64>> {
    if y.iter().sum::<f64>() < 0.0 {
        y.iter_mut().for_each(|x| *x = -*x);
    }
    let norm = y.iter().map(|x| x * x).sum::<f64>().sqrt();
    y.iter_mut().for_each(|x| *x /= norm);
    if let Some(bad) = y.iter().position(|&x| x <= 0.0) {
        return Err(Error::Numerical(format!(
            "Perron vector entry {bad} is not positive ({})",
            y[bad]
        )));
    }
    Ok(y)
}

/// Power iteration on `A + Δ I`, which has a positive dominant eigenvalue
/// separated from `-λ1 + Δ` for connected graphs.
pub fn perron_by_power_iteration(
    g: &MultiGraph,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, Vec<f64>)> {
    g.require_connected()?;
    let n = g.n();
    let shift = g.max_degree() as f64;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let ax = apply_adjacency(g, &x);
        let next_lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let diff = y.iter().zip(&x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        x = y;
        let done = (next_lambda - lambda).abs() <= tol * shift.max(1.0) && diff < 1e-11;
        lambda = next_lambda;
        if done {
            break;
        }
    }
    let x = positive_unit(x)?;
    let ax = apply_adjacency(g, &x);
    let lambda = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    Ok((lambda, x))
}

pub fn apply_adjacency(g: &MultiGraph, x: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|u| g.half_edges_at(u).iter().map(|&h| x[g.target(h)]).sum())
        .collect()
}

/// `‖A y − λ y‖₂`.
pub fn eigen_residual(g: &MultiGraph, lambda: f64, y: &[f64]) -> f64 {
    apply_adjacency(g, y)
        .iter()
        .zip(y)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Fraction of eigenvalues (with multiplicity) with `|λ| ≤ rho + eta`.
pub fn wr_fraction_of(eigenvalues: &[f64], rho: f64, eta: f64) -> Result<f64> {
    if rho.is_nan() || rho <= 0.0 || eta.is_nan() || eta < 0.0 {
        return Err(Error::InvalidArgument(format!("need rho > 0 and eta >= 0, got {rho}, {eta}")));
    }
    if eigenvalues.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let inside = eigenvalues.iter().filter(|l| l.abs() <= rho + eta).count();
    Ok(inside as f64 / eigenvalues.len() as f64)
}

pub fn wr_fraction(s: &Spectrum, rho: f64, eta: f64) -> Result<f64> {
    if s.partial {
        return Err(Error::PartialSpectrum { n: s.perron.len() });
    }
    wr_fraction_of(&s.eigenvalues, rho, eta)
}

/// `(A^j)[v][v]` for `j = 0..=k_max`, exactly.
pub fn closed_walk_counts(g: &MultiGraph, v: Vertex, k_max: usize) -> Vec<BigUint> {
    let mut x = vec![BigUint::zero(); g.n()];
    x[v] = BigUint::one();
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(BigUint::one());
    for _ in 0..k_max {
        x = (0..g.n())
            .map(|u| g.half_edges_at(u).iter().map(|&h| &x[g.target(h)]).sum())
            .collect();
        out.push(x[v].clone());
    }
    out
}

/// Number of closed walks of length `k` at `v`.
pub fn closed_walk_count(g: &MultiGraph, v: Vertex, k: usize) -> BigUint {
    closed_walk_counts(g, v, k).pop().expect("non-empty")
}
