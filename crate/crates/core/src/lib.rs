//! Adjacency spectra of finite multigraphs against the spectral radius of
//! their universal cover tree.

pub mod bigmath;
pub mod cover;
pub mod error;
pub mod gap;
pub mod generators;
pub mod graph;
pub mod local;
pub mod report;
pub mod rho;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{two_core, CoreDecomposition, CyclomaticClass, HalfEdge, MultiGraph, Vertex};
pub use cover::{backtracking_walk_count, orbit_distribution, tree_ball, HalfEdgeClasses, OrbitDistribution};
pub use gap::{certify_gap, unicyclic_defect, GapCertificate, UnicyclicDefect};
pub use generators::{make, random_lift, Family, Lift};
pub use local::{canonical_code, find_bouquet, mass_transport_check, tree_fraction};
pub use rho::{rho_ball_power, rho_lower_sequence, rho_tree, RhoResult};
pub use spectra::{closed_walk_count, eigen_spectrum, wr_fraction, Spectrum};
