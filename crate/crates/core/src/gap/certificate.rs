use num_traits::ToPrimitive;
use serde::Serialize;

use super::weights::{
    delta_assignment, delta_inequality_holds, gamma_assignment, gamma_inequality_holds, Weights,
};
use crate::error::{Error, Result};
use crate::graph::{two_core, CoreDecomposition, CyclomaticClass, HalfEdge, MultiGraph, Vertex};
use crate::rho::rho_tree;
use crate::spectra::eigen_spectrum;

/// Which cover-vertex type a bound value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexType {
    /// A lift of a core vertex used as the root: children only.
    Root { vertex: Vertex },
    /// Entered from its parent through an interior half-edge.
    Int { half_edge: HalfEdge },
    /// Entered from its parent through an exterior half-edge.
    Ext { half_edge: HalfEdge },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GValue {
    #[serde(flatten)]
    pub at: VertexType,
    pub value: f64,
}

/// Float copies of the exact weights, indexed by half-edge.
struct Factors<'a> {
    g: &'a MultiGraph,
    core: &'a CoreDecomposition,
    y: &'a [f64],
    gamma_w: Vec<f64>,
    delta_w: Vec<f64>,
}

impl<'a> Factors<'a> {
    fn new(
        g: &'a MultiGraph,
        core: &'a CoreDecomposition,
        y: &'a [f64],
        gamma_w: &Weights,
        delta_w: &Weights,
    ) -> Self {
        let mut gw = vec![0.0; g.num_half_edges()];
        let mut dw = vec![0.0; g.num_half_edges()];
        for (&h, w) in gamma_w {
            gw[h] = w.to_f64().unwrap_or(f64::NAN);
        }
        for (&h, w) in delta_w {
            dw[h] = w.to_f64().unwrap_or(f64::NAN);
        }
        Factors { g, core, y, gamma_w: gw, delta_w: dw }
    }

    /// Contribution of the child reached through `h` to its parent's bound.
    fn child_term(&self, h: HalfEdge, gamma: f64, delta: f64) -> f64 {
        let (u, c) = (self.g.source(h), self.g.target(h));
        let ratio = self.y[c] / self.y[u];
        let scale = self.y[u] * self.y[c];
        if self.core.is_int(h) {
            ratio / (1.0 + self.gamma_w[h] * gamma / scale)
        } else {
            ratio * (1.0 + self.delta_w[h] * delta / scale)
        }
    }

    /// Contribution of the parent edge `h = (p → u)` to the bound at `u`.
    fn parent_term(&self, h: HalfEdge, gamma: f64, delta: f64) -> f64 {
        let (p, u) = (self.g.source(h), self.g.target(h));
        let ratio = self.y[p] / self.y[u];
        let scale = self.y[p] * self.y[u];
        if self.core.is_int(h) {
            ratio * (1.0 + self.gamma_w[h] * gamma / scale)
        } else {
            ratio / (1.0 + self.delta_w[h] * delta / scale)
        }
    }

    fn values(&self, gamma: f64, delta: f64) -> Vec<GValue> {
        let g = self.g;
        let mut out = Vec::new();
        for &v in &self.core.core_vertices {
            let value = g.half_edges_at(v).iter().map(|&h| self.child_term(h, gamma, delta)).sum();
            out.push(GValue { at: VertexType::Root { vertex: v }, value });
        }
        let parents = self.core.int_half_edges.iter().chain(&self.core.ext_half_edges);
        for &h in parents {
            let value = self.parent_term(h, gamma, delta)
                + g.continuations(h).map(|c| self.child_term(c, gamma, delta)).sum::<f64>();
            let at = if self.core.is_int(h) {
                VertexType::Int { half_edge: h }
            } else {
                VertexType::Ext { half_edge: h }
            };
            out.push(GValue { at, value });
        }
        out.sort_by_key(|v| v.at);
        out
    }
}

/// The bound function `g` for every cover-vertex type, evaluated with the
/// exact `(1 + x)^{±1}` factors.
pub fn g_values(
    g: &MultiGraph,
    core: &CoreDecomposition,
    y: &[f64],
    gamma_w: &Weights,
    delta_w: &Weights,
    gamma: f64,
    delta: f64,
) -> Vec<GValue> {
    Factors::new(g, core, y, gamma_w, delta_w).values(gamma, delta)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapCertificate {
    pub gamma: f64,
    pub delta: f64,
    /// Exact chain step `ε` used by Γ, as `(numerator, denominator)`.
    pub epsilon_chain_step: (u64, u64),
    pub gamma_weights: Weights,
    pub delta_weights: Weights,
    pub g_values: Vec<GValue>,
    pub g_max: f64,
    /// `ρ(G)`.
    pub lambda1: f64,
    pub perron: Vec<f64>,
    /// Largest deviation from the eigenvector identity; already subtracted
    /// from `margin`.
    pub eigen_residual: f64,
    /// `ρ(G) − g_max − eigen_residual`; positive means `ρ(T) ≤ ρ(G) − margin`.
    pub margin: f64,
    pub rho_upper_implied: f64,
    /// Upper end of the independent `rho_tree` bracket.
    pub rho_tree_hi: f64,
}

/// `(γ, δ)` candidates: `γ = 2^{-i}` for `i = 1..=40`, `δ ∈ {γ, γ², γ³}`.
pub fn search_schedule() -> Vec<(f64, f64)> {
    (1..=40)
        .flat_map(|i| {
            let gamma = 0.5f64.powi(i);
            [gamma, gamma * gamma, gamma * gamma * gamma].map(|d| (gamma, d))
        })
        .collect()
}

/// Certify `ρ(T) < ρ(G)` for a connected multicyclic graph.
///
/// The certificate is cross-checked against `rho_tree`: its upper bracket end
/// must not exceed the implied bound by more than `tol`.
pub fn certify_gap(g: &MultiGraph, tol: f64) -> Result<GapCertificate> {
    let class = g.cyclomatic_class()?;
    if class != CyclomaticClass::Multicyclic {
        return Err(Error::WrongCyclomaticClass { expected: "multicyclic", found: class.name() });
    }
    let spectrum = eigen_spectrum(g)?;
    let y = &spectrum.perron;
    let lambda1 = spectrum.lambda1;
    let core = two_core(g)?;
    let gamma_a = gamma_assignment(g, &core)?;
    let delta_w = delta_assignment(g, &core);
    if !gamma_inequality_holds(g, &core, &gamma_a.weights) {
        return Err(Error::Weighting("Γ violates its flow inequality".into()));
    }
    if !delta_inequality_holds(g, &core, &delta_w) {
        return Err(Error::Weighting("Δ violates its flow inequality".into()));
    }

    let eigen_residual = (0..g.n())
        .map(|u| {
            let s: f64 = g.half_edges_at(u).iter().map(|&h| y[g.target(h)]).sum::<f64>() / y[u];
            (s - lambda1).abs()
        })
        .fold(0.0, f64::max);

    let factors = Factors::new(g, &core, y, &gamma_a.weights, &delta_w);
    let mut best: Option<(f64, f64, f64)> = None;
    for (gamma, delta) in search_schedule() {
        let g_max = factors.values(gamma, delta).iter().map(|v| v.value).fold(f64::MIN, f64::max);
        let margin = lambda1 - g_max - eigen_residual;
        if best.map_or(true, |(m, _, _)| margin > m) {
            best = Some((margin, gamma, delta));
        }
    }
    let (margin, gamma, delta) = best.expect("schedule is non-empty");
    if margin.is_nan() || margin <= 0.0 {
        return Err(Error::NoCertificate);
    }
    let values = factors.values(gamma, delta);
    let g_max = values.iter().map(|v| v.value).fold(f64::MIN, f64::max);
    let rho_upper_implied = lambda1 - margin;

    let rho = rho_tree(g, tol)?;
    if rho.hi > rho_upper_implied + tol {
        return Err(Error::CertificateInconsistent { rho_hi: rho.hi, implied: rho_upper_implied });
    }

    let eps = &gamma_a.epsilon;
    Ok(GapCertificate {
        gamma,
        delta,
        epsilon_chain_step: (
            eps.numer().to_u64().unwrap_or(0),
            eps.denom().to_u64().unwrap_or(0),
        ),
        gamma_weights: gamma_a.weights,
        delta_weights: delta_w,
        g_values: values,
        g_max,
        lambda1,
        perron: y.clone(),
        eigen_residual,
        margin,
        rho_upper_implied,
        rho_tree_hi: rho.hi,
    })
}
