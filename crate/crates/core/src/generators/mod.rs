//! Graph families, random lifts and the exhaustive small-multigraph corpus.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so outputs are
//! reproducible across platforms.

mod corpus;
mod families;
mod lift;

pub use corpus::{canonical_form, corpus, CORPUS_MAX_EDGES, CORPUS_MAX_VERTICES};
pub use families::{make, Family, Generated};
pub use lift::{random_lift, Lift};
