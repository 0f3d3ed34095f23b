//! Universal cover machinery: tree balls with the cover map, purely
//! backtracking walk counts and the root-type distribution.

mod classes;
mod orbits;
mod tree_ball;
mod walks;

pub use classes::HalfEdgeClasses;
pub use orbits::{orbit_distribution, OrbitClass, OrbitDistribution};
pub use tree_ball::{
    tree_ball, tree_ball_size, tree_ball_with_cap, TreeBall, TreeNode, DEFAULT_BALL_CAP,
};
pub use walks::{backtracking_walk_count, backtracking_walk_counts, backtracking_walk_counts_with};
