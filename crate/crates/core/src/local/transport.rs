use serde::Serialize;

use super::cycles::cycles;
use crate::graph::MultiGraph;

/// Finite mass transport for `F(u, v) = 1{dist(u, v) ≤ R and u on an ℓ-cycle}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MassTransport {
    pub radius: usize,
    pub length: usize,
    pub n: usize,
    /// `Σ_o Σ_v F(o, v)`: mass sent. Divide by `n` for the expectation.
    pub sent: u64,
    /// `Σ_o Σ_v F(v, o)`: mass received.
    pub received: u64,
    /// Vertices on at least one `ℓ`-cycle.
    pub on_cycle: u64,
    /// `Σ_v N_R(v)`, where `N_R(v)` counts `ℓ`-cycles meeting the `R`-ball at `v`.
    pub cycle_visits: u64,
    /// Whether every `R`-ball has at least `R` vertices.
    pub balls_large_enough: bool,
    /// `ℓ · Σ N_R ≥ R · on_cycle`; `None` when the ball hypothesis fails.
    pub bound_holds: Option<bool>,
}

impl MassTransport {
    pub fn balanced(&self) -> bool {
        self.sent == self.received
    }
}

pub fn mass_transport_check(g: &MultiGraph, radius: usize, len: usize) -> MassTransport {
    let n = g.n();
    let cs = cycles(g, len);
    let mut on = vec![false; n];
    for c in &cs {
        for &v in &c.vertices {
            on[v] = true;
        }
    }
    let mut sent = 0u64;
    let mut received = 0u64;
    let mut cycle_visits = 0u64;
    let mut large = true;
    let mut seen = vec![false; n];
    for o in 0..n {
        let ball = g.bfs_within(o, radius);
        large &= ball.len() >= radius;
        if on[o] {
            sent += ball.len() as u64;
        }
        received += ball.iter().filter(|&&(v, _)| on[v]).count() as u64;
        for &(v, _) in &ball {
            seen[v] = true;
        }
        cycle_visits += cs.iter().filter(|c| c.vertices.iter().any(|&v| seen[v])).count() as u64;
        for &(v, _) in &ball {
            seen[v] = false;
        }
    }
    let on_cycle = on.iter().filter(|&&b| b).count() as u64;
    let bound_holds =
        large.then(|| len as u64 * cycle_visits >= radius as u64 * on_cycle);
    MassTransport {
        radius,
        length: len,
        n,
        sent,
        received,
        on_cycle,
        cycle_visits,
        balls_large_enough: large,
        bound_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_cycle() {
        let g = MultiGraph::new(12, (0..12).map(|i| (i, (i + 1) % 12)).collect()).unwrap();
        let m = mass_transport_check(&g, 6, 12);
        assert!(m.balanced());
        assert_eq!(m.cycle_visits, 12);
        assert_eq!(m.on_cycle, 12);
        assert_eq!(m.bound_holds, Some(true));
    }

    #[test]
    fn bowtie() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let m = mass_transport_check(&g, 2, 3);
        assert!(m.balanced());
        assert_eq!(m.cycle_visits, 10);
        assert_eq!(m.bound_holds, Some(true));
    }

    #[test]
    fn small_balls_skip_the_bound() {
        let g = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let m = mass_transport_check(&g, 3, 3);
        assert_eq!(m.bound_holds, None);
        assert!(m.balanced());
    }
}
