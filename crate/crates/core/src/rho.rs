//! Spectral radius of the universal cover tree.
//!
//! For `t > ρ(T)` the branch Green's functions of `T` satisfy
//!
//! ```text
//! F_h = 1 / (t - Σ_{h' continues h} F_{h'})
//! ```
//!
//! and depend only on the projected half-edge. A positive solution with
//! `Σ_{h at v} F_h ≤ t` at every vertex gives a positive function `φ` on `T`
//! (multiply by `F_h` when stepping down through `h`) with `Aφ ≤ tφ`, and the
//! Schur test then gives `ρ(T) ≤ t`. `rho_tree` bisects on `t` with that
//! feasibility test.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::bigmath::big_root;
use crate::cover::{backtracking_walk_counts_with, tree_ball_size, tree_ball_with_cap, HalfEdgeClasses};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_ITERATION_CAP: usize = 100_000;
/// Residual `‖Φ(F) − F‖∞` below which a probe counts as converged.
pub const CONVERGENCE_TOL: f64 = 1e-12;
/// Walk-count half-lengths used to seed the lower end of the bracket.
pub const SEED_HALF_LENGTH: usize = 8;
/// Longest sequence `rho_lower_sequence` will compute.
pub const MAX_HALF_LENGTH: usize = 1024;
/// Largest ball `rho_ball_power` materialises for power iteration.
pub const POWER_NODE_CAP: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoOptions {
    pub tol: f64,
    pub iteration_cap: usize,
    pub seed_half_length: usize,
}

impl Default for RhoOptions {
    fn default() -> Self {
        RhoOptions {
            tol: DEFAULT_TOL,
            iteration_cap: DEFAULT_ITERATION_CAP,
            seed_half_length: SEED_HALF_LENGTH,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeStatus {
    Feasible,
    /// A denominator reached zero, or the linearisation lost its
    /// nonnegative inverse: no fixed point below.
    Diverged,
    /// Fixed point found but some vertex slack is negative.
    VertexSlack,
    /// Iteration cap hit without a verdict; treated as infeasible.
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Probe {
    pub t: f64,
    pub status: ProbeStatus,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhoResult {
    /// Midpoint of the bracket.
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
    /// Fixed point at `t = hi`, one entry per half-edge.
    pub fixed_point: Vec<f64>,
    /// `hi − Σ_{h at v} F_h` for each vertex.
    pub vertex_slacks: Vec<f64>,
    pub vertex_slack_min: f64,
    pub probes: Vec<Probe>,
    pub ambiguous_probes: usize,
}

impl RhoResult {
    pub fn iterations_per_probe(&self) -> Vec<usize> {
        self.probes.iter().map(|p| p.iterations).collect()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// The half-edge system reduced to half-edge classes.
struct Quotient {
    classes: HalfEdgeClasses,
    /// Distinct vertex profiles `(class, multiplicity)`.
    vertex_profiles: Vec<Vec<(usize, usize)>>,
}

impl Quotient {
    fn new(g: &MultiGraph) -> Self {
        let classes = HalfEdgeClasses::compute(g);
        let mut vertex_profiles: Vec<_> = (0..g.n()).map(|v| classes.root_profile(g, v)).collect();
        vertex_profiles.sort();
        vertex_profiles.dedup();
        Quotient { classes, vertex_profiles }
    }

    fn sums(&self, x: &[f64]) -> Vec<f64> {
        self.classes
            .children
            .iter()
            .map(|p| p.iter().map(|&(c, m)| m as f64 * x[c]).sum())
            .collect()
    }
}

enum Solve {
    Converged(Vec<f64>, usize),
    Diverged(usize),
    CapHit(usize),
}

/// Newton's method from `F = 0` on `F = Φ(F)`. `Φ` is increasing and convex
/// on its domain, so the iterates increase monotonically to the least fixed
/// point when one exists.
fn solve_fixed_point(q: &Quotient, t: f64, cap: usize) -> Solve {
    let k = q.classes.len();
    let mut x = vec![0.0f64; k];
    for it in 1..=cap {
        let s = q.sums(&x);
        if s.iter().any(|&s| t - s <= 0.0) {
            return Solve::Diverged(it);
        }
        let phi: Vec<f64> = s.iter().map(|&s| 1.0 / (t - s)).collect();
        let residual = phi.iter().zip(&x).map(|(p, x)| (p - x).abs()).fold(0.0, f64::max);
        if residual < CONVERGENCE_TOL {
            return Solve::Converged(phi, it);
        }
        // (I − diag(Φ²)M) d = Φ − x
        let mut jac = DMatrix::<f64>::identity(k, k);
        for (c, profile) in q.classes.children.iter().enumerate() {
            for &(c2, m) in profile {
                jac[(c, c2)] -= phi[c] * phi[c] * m as f64;
            }
        }
        let rhs = DVector::from_iterator(k, phi.iter().zip(&x).map(|(p, x)| p - x));
        let Some(d) = jac.lu().solve(&rhs) else {
            return Solve::Diverged(it);
        };
        if d.iter().zip(&x).any(|(d, x)| !d.is_finite() || *d < -1e-9 * x.max(1.0)) {
            return Solve::Diverged(it);
        }
        for (x, d) in x.iter_mut().zip(d.iter()) {
            *x = (*x + d).max(0.0);
        }
    }
    Solve::CapHit(cap)
}

fn probe(q: &Quotient, t: f64, cap: usize) -> (Probe, Option<Vec<f64>>) {
    match solve_fixed_point(q, t, cap) {
        Solve::Converged(f, iterations) => {
            let ok = q
                .vertex_profiles
                .iter()
                .all(|p| t - p.iter().map(|&(c, m)| m as f64 * f[c]).sum::<f64>() >= 0.0);
            let status = if ok { ProbeStatus::Feasible } else { ProbeStatus::VertexSlack };
            (Probe { t, status, iterations }, ok.then_some(f))
        }
        Solve::Diverged(iterations) => (Probe { t, status: ProbeStatus::Diverged, iterations }, None),
        Solve::CapHit(iterations) => (Probe { t, status: ProbeStatus::Ambiguous, iterations }, None),
    }
}

/// Whether `t` passes the feasibility test, i.e. certifies `ρ(T) ≤ t`.
pub fn is_feasible(g: &MultiGraph, t: f64) -> bool {
    let q = Quotient::new(g);
    probe(&q, t, DEFAULT_ITERATION_CAP).0.status == ProbeStatus::Feasible
}

pub fn rho_tree(g: &MultiGraph, tol: f64) -> Result<RhoResult> {
    rho_tree_with(g, &RhoOptions { tol, ..RhoOptions::default() })
}

pub fn rho_tree_with(g: &MultiGraph, opts: &RhoOptions) -> Result<RhoResult> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {}", opts.tol)));
    }
    g.require_connected()?;
    let delta = g.max_degree() as f64;
    if g.num_half_edges() == 0 {
        return Ok(RhoResult {
            value: 0.0,
            lo: 0.0,
            hi: 0.0,
            tol: opts.tol,
            fixed_point: Vec::new(),
            vertex_slacks: vec![0.0; g.n()],
            vertex_slack_min: 0.0,
            probes: Vec::new(),
            ambiguous_probes: 0,
        });
    }

    let q = Quotient::new(g);
    let mut lo = 0.0f64;
    for v in 0..g.n() {
        let counts = backtracking_walk_counts_with(g, &q.classes, v, 2 * opts.seed_half_length);
        for k in 1..=opts.seed_half_length {
            lo = lo.max(big_root(&counts[2 * k], 2 * k as u32));
        }
    }
    let mut hi = delta;
    lo = lo.min(hi);

    let mut probes = Vec::new();
    let (p, f) = probe(&q, hi, opts.iteration_cap);
    probes.push(p);
    // t = Δ is feasible in exact arithmetic; if the numerics disagree the
    // bracket is still valid but there is no fixed point to report.
    let mut best = f;
    while hi - lo > opts.tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (p, f) = probe(&q, mid, opts.iteration_cap);
        probes.push(p);
        match f {
            Some(f) => {
                hi = mid;
                best = Some(f);
            }
            None => lo = mid,
        }
    }

    let class_values = best.ok_or_else(|| {
        Error::Numerical(format!("feasibility test rejected the trivial bound t = {delta}"))
    })?;
    let fixed_point: Vec<f64> = q.classes.class_of.iter().map(|&c| class_values[c]).collect();
    let vertex_slacks: Vec<f64> = (0..g.n())
        .map(|v| hi - g.half_edges_at(v).iter().map(|&h| fixed_point[h]).sum::<f64>())
        .collect();
    let vertex_slack_min = vertex_slacks.iter().copied().fold(f64::INFINITY, f64::min);
    let ambiguous_probes = probes.iter().filter(|p| p.status == ProbeStatus::Ambiguous).count();
    Ok(RhoResult {
        value: 0.5 * (lo + hi),
        lo,
        hi,
        tol: opts.tol,
        fixed_point,
        vertex_slacks,
        vertex_slack_min,
        probes,
        ambiguous_probes,
    })
}

/// `(N_{2k}(G, v))^{1/2k}` for `k = 1..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerSequence {
    pub values: Vec<f64>,
    /// Set when `K` exceeded [`MAX_HALF_LENGTH`] and the list was cut short.
    pub truncated: bool,
}

impl LowerSequence {
    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }
}

pub fn rho_lower_sequence(g: &MultiGraph, v: Vertex, k: usize) -> Result<LowerSequence> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let truncated = k > MAX_HALF_LENGTH;
    let k = k.min(MAX_HALF_LENGTH);
    let classes = HalfEdgeClasses::compute(g);
    let counts = backtracking_walk_counts_with(g, &classes, v, 2 * k);
    let values = (1..=k).map(|j| big_root(&counts[2 * j], 2 * j as u32)).collect();
    Ok(LowerSequence { values, truncated })
}

/// How `rho_ball_power` evaluated the ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BallMethod {
    /// Power iteration on the materialised ball.
    Power,
    /// Leaf-to-root elimination on the depth × half-edge-class quotient.
    Inertia,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BallEstimate {
    /// A lower bound on `λ1(B_R(T, v̂))`, itself a lower bound on `ρ(T)`.
    pub value: f64,
    pub method: BallMethod,
    pub nodes: f64,
}

/// `λ1` of the truncated cover ball `B_R(T, v̂)`.
pub fn rho_ball_power(g: &MultiGraph, v: Vertex, radius: usize) -> Result<f64> {
    rho_ball(g, v, radius).map(|b| b.value)
}

pub fn rho_ball(g: &MultiGraph, v: Vertex, radius: usize) -> Result<BallEstimate> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let nodes = tree_ball_size(g, v, radius);
    if nodes <= POWER_NODE_CAP as f64 {
        let ball = tree_ball_with_cap(g, v, radius, POWER_NODE_CAP)?;
        let value = ball_power_iteration(&ball.to_graph());
        Ok(BallEstimate { value, method: BallMethod::Power, nodes })
    } else {
        let value = ball_inertia(g, v, radius);
        Ok(BallEstimate { value, method: BallMethod::Inertia, nodes })
    }
}

/// Power iteration on `A + I` from the all-ones vector; returns the Rayleigh
/// quotient, which never exceeds `λ1`.
fn ball_power_iteration(t: &MultiGraph) -> f64 {
    let n = t.n();
    if n == 1 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut theta = 0.0;
    let cap = 200_000usize.max(50 * n).min(2_000_000);
    for _ in 0..cap {
        let mut y = vec![0.0; n];
        for (u, w) in t.edges() {
            y[*u] += x[*w];
            y[*w] += x[*u];
        }
        theta = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - theta * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= 1e-11 {
            break;
        }
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    theta
}

/// For a finite tree, `λ > λ1` exactly when every pivot of the leaf-to-root
/// elimination of `λI − A` is positive. Nodes of one depth entered through
/// one half-edge class share their pivot, so the elimination runs on
/// `depth × class`. Returns the lower end of a bisection bracket.
fn ball_inertia(g: &MultiGraph, v: Vertex, radius: usize) -> f64 {
    let classes = HalfEdgeClasses::compute(g);
    let root = classes.root_profile(g, v);
    let above = |lambda: f64| -> bool {
        // r[c] = 1 / pivot for a node entered through class c at the current depth.
        let mut r = vec![1.0 / lambda; classes.len()];
        for _ in 1..radius {
            let mut next = Vec::with_capacity(r.len());
            for profile in &classes.children {
                let pivot = lambda - profile.iter().map(|&(c, m)| m as f64 * r[c]).sum::<f64>();
                if pivot <= 0.0 {
                    return false;
                }
                next.push(1.0 / pivot);
            }
            r = next;
        }
        lambda - root.iter().map(|&(c, m)| m as f64 * r[c]).sum::<f64>() > 0.0
    };
    if radius == 0 || root.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, g.max_degree() as f64 + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if above(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}
