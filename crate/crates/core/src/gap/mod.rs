//! Certificates that `ρ(T) < ρ(G)` for multicyclic graphs, and the matching
//! lower bound for unicyclic ones.
//!
//! For a test vector `x` on the cover, `2|x_u x_v|` is split between the two
//! endpoints with a weight tilted by `Γγ` on core edges and `Δδ` on edges
//! hanging off the core. Summing gives `|⟨x, Ax⟩| ≤ Σ_u g(u) x_u²`, so
//! `sup g < ρ(G)` bounds `ρ(T)` away from `ρ(G)`. The tilt only depends on
//! the projected half-edge, so `g` takes finitely many values.

mod certificate;
mod unicyclic;
mod weights;

pub use certificate::{certify_gap, g_values, search_schedule, GValue, GapCertificate, VertexType};
pub use unicyclic::{unicyclic_defect, UnicyclicDefect};
pub use weights::{
    delta_assignment, delta_inequality_holds, gamma_assignment, gamma_inequality_holds,
    GammaAssignment, Weights,
};
