//! JSON report shapes shared by the command-line tool.
//!
//! Every report carries `"schema": "cover-spectra/1"`. Exact rationals are
//! written as `"p/q"` strings.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::cover::OrbitDistribution;
use crate::gap::{GValue, GapCertificate, UnicyclicDefect};
use crate::graph::{CoreDecomposition, HalfEdge, MultiGraph, Vertex};
use crate::rho::{ProbeStatus, RhoResult};
use crate::spectra::Spectrum;

pub const SCHEMA: &str = "cover-spectra/1";

fn schema() -> &'static str {
    SCHEMA
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectraReport {
    pub schema: &'static str,
    pub n: usize,
    pub m: usize,
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    pub wr_fraction: Option<f64>,
    pub rho_used: Option<f64>,
    pub eta: f64,
    pub partial: bool,
}

impl SpectraReport {
    pub fn new(g: &MultiGraph, s: &Spectrum, wr: Option<(f64, f64)>, eta: f64) -> Self {
        SpectraReport {
            schema: schema(),
            n: g.n(),
            m: g.num_edges(),
            eigenvalues: s.eigenvalues.clone(),
            lambda1: s.lambda1,
            wr_fraction: wr.map(|(_, f)| f),
            rho_used: wr.map(|(r, _)| r),
            eta,
            partial: s.partial,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RhoReport {
    pub schema: &'static str,
    pub rho: f64,
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
    pub iterations_per_probe: Vec<usize>,
    pub probe_status: Vec<ProbeStatus>,
    pub vertex_slack_min: f64,
    pub ambiguous_probes: usize,
}

impl From<&RhoResult> for RhoReport {
    fn from(r: &RhoResult) -> Self {
        RhoReport {
            schema: schema(),
            rho: r.value,
            lo: r.lo,
            hi: r.hi,
            tol: r.tol,
            iterations_per_probe: r.iterations_per_probe(),
            probe_status: r.probes.iter().map(|p| p.status).collect(),
            vertex_slack_min: r.vertex_slack_min,
            ambiguous_probes: r.ambiguous_probes,
        }
    }
}

fn ratio(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub schema: &'static str,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon_chain_step: String,
    pub margin: f64,
    pub gamma_weights: BTreeMap<HalfEdge, String>,
    pub delta_weights: BTreeMap<HalfEdge, String>,
    pub g_max: f64,
    pub rho_upper_implied: f64,
    pub lambda1: f64,
    pub eigen_residual: f64,
    pub rho_tree_hi: f64,
    pub g_values: Vec<GValue>,
}

impl From<&GapCertificate> for CertificateReport {
    fn from(c: &GapCertificate) -> Self {
        let weights =
            |w: &BTreeMap<HalfEdge, BigRational>| w.iter().map(|(h, x)| (*h, ratio(x))).collect();
        CertificateReport {
            schema: schema(),
            gamma: c.gamma,
            delta: c.delta,
            epsilon_chain_step: format!("{}/{}", c.epsilon_chain_step.0, c.epsilon_chain_step.1),
            margin: c.margin,
            gamma_weights: weights(&c.gamma_weights),
            delta_weights: weights(&c.delta_weights),
            g_max: c.g_max,
            rho_upper_implied: c.rho_upper_implied,
            lambda1: c.lambda1,
            eigen_residual: c.eigen_residual,
            rho_tree_hi: c.rho_tree_hi,
            g_values: c.g_values.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UnicyclicReport {
    pub schema: &'static str,
    pub value: f64,
    pub lambda1: f64,
    pub cut_edge: (usize, usize),
    pub copies: u64,
    pub rho_tree: Option<f64>,
}

impl UnicyclicReport {
    pub fn new(d: &UnicyclicDefect, rho_tree: Option<f64>) -> Self {
        UnicyclicReport {
            schema: schema(),
            value: d.value,
            lambda1: d.lambda1,
            cut_edge: d.cut_edge,
            copies: d.copies,
            rho_tree,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitClassReport {
    pub representative: Vertex,
    pub size: usize,
    pub p: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub schema: &'static str,
    pub classes: Vec<OrbitClassReport>,
    pub rounds: usize,
}

impl From<&OrbitDistribution> for OrbitReport {
    fn from(o: &OrbitDistribution) -> Self {
        OrbitReport {
            schema: schema(),
            classes: o
                .classes
                .iter()
                .map(|c| OrbitClassReport { representative: c.representative, size: c.members.len(), p: c.p })
                .collect(),
            rounds: o.rounds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreReport {
    pub schema: &'static str,
    pub core_vertices: Vec<Vertex>,
    pub ext_vertices: Vec<Vertex>,
    pub int_half_edges: Vec<HalfEdge>,
    pub ext_half_edges: Vec<HalfEdge>,
    pub core_degrees: Vec<usize>,
    pub depths: Vec<usize>,
}

impl CoreReport {
    pub fn new(g: &MultiGraph, c: &CoreDecomposition) -> Self {
        CoreReport {
            schema: schema(),
            core_vertices: c.core_vertices.clone(),
            ext_vertices: c.ext_vertices.clone(),
            int_half_edges: c.int_half_edges.clone(),
            ext_half_edges: c.ext_half_edges.clone(),
            core_degrees: (0..g.n()).map(|v| c.core_degree(v)).collect(),
            depths: (0..g.n()).map(|v| c.depth(v)).collect(),
        }
    }
}

/// Wraps any serializable payload with the schema tag.
#[derive(Debug, Clone, Serialize)]
pub struct Tagged<T: Serialize> {
    pub schema: &'static str,
    #[serde(flatten)]
    pub body: T,
}

pub fn tagged<T: Serialize>(body: T) -> Tagged<T> {
    Tagged { schema: schema(), body }
}
