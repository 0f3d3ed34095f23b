//! Local statistics: tree neighbourhoods, short cycles, bouquets, mass
//! transport and radius-`r` neighbourhood histograms.

mod bouquet;
mod canon;
mod cycles;
mod transport;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bouquet::{find_bouquet, Bouquet};
pub use canon::{canonical_code, DEFAULT_CANON_CAP};
pub use cycles::{cycle_stats, cycles, Cycle, CycleStats};
pub use transport::{mass_transport_check, MassTransport};

use crate::cover::{orbit_distribution, tree_ball};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Fraction of vertices whose induced `r`-ball is a tree.
pub fn tree_fraction(g: &MultiGraph, r: usize) -> Result<f64> {
    if r == 0 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let mut mark = vec![false; g.n()];
    let trees = (0..g.n())
        .filter(|&v| {
            let (verts, edges) = g.ball_size(v, r, &mut mark);
            edges + 1 == verts
        })
        .count();
    Ok(trees as f64 / g.n() as f64)
}

/// Counts of rooted `r`-ball isomorphism types over all vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub radius: usize,
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
}

impl Histogram {
    pub fn probability(&self, code: &str) -> f64 {
        self.counts.get(code).map_or(0.0, |&c| c as f64 / self.total as f64)
    }

    /// `code,count` rows with a header, in code order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("code,count\n");
        for (code, count) in &self.counts {
            out.push_str(&format!("\"{code}\",{count}\n"));
        }
        out
    }
}

pub fn bs_histogram(g: &MultiGraph, r: usize) -> Result<Histogram> {
    bs_histogram_with_cap(g, r, DEFAULT_CANON_CAP)
}

pub fn bs_histogram_with_cap(g: &MultiGraph, r: usize, cap: usize) -> Result<Histogram> {
    let mut counts = BTreeMap::new();
    for v in 0..g.n() {
        let ball = g.ball(v, r);
        let code = canonical_code(&ball.graph, ball.root, cap)?;
        *counts.entry(code).or_insert(0) += 1;
    }
    Ok(Histogram { radius: r, total: g.n(), counts })
}

/// Distribution of `B_r(T, v̂)` types when `v` is uniform in `g`: the limit
/// of `bs_histogram` along lifts with growing girth.
pub fn tree_ball_distribution(g: &MultiGraph, r: usize) -> Result<Histogram> {
    let orbits = orbit_distribution(g);
    let mut counts = BTreeMap::new();
    for class in &orbits.classes {
        let ball = tree_ball(g, class.representative, r)?;
        let code = canonical_code(&ball.to_graph(), 0, usize::MAX)?;
        *counts.entry(code).or_insert(0) += class.members.len();
    }
    Ok(Histogram { radius: r, total: g.n(), counts })
}

/// `½ Σ |p − q|` over the union of codes.
pub fn tv_distance(a: &Histogram, b: &Histogram) -> f64 {
    let codes: std::collections::BTreeSet<&String> = a.counts.keys().chain(b.counts.keys()).collect();
    0.5 * codes.iter().map(|c| (a.probability(c) - b.probability(c)).abs()).sum::<f64>()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalStatsReport {
    pub radius: usize,
    pub histogram: Histogram,
    pub tree_fraction: f64,
    pub cycles: Vec<CycleStats>,
}

pub fn local_stats(g: &MultiGraph, r: usize, lengths: &[usize]) -> Result<LocalStatsReport> {
    Ok(LocalStatsReport {
        radius: r,
        histogram: bs_histogram(g, r)?,
        tree_fraction: tree_fraction(g, r)?,
        cycles: lengths.iter().map(|&l| cycle_stats(g, l)).collect(),
    })
}
