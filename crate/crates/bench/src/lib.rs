//! Shared inputs for the criterion benches in `benches/`.

use cover_spectra::generators::{make, random_lift, Family};
use cover_spectra::MultiGraph;

/// Named graphs of increasing size with nontrivial covers.
pub fn fixtures() -> Vec<(&'static str, MultiGraph)> {
    let get = |f: Family| make(&f).expect("fixture family").graph;
    let bowtie = get(Family::Bowtie);
    let lift = (0..)
        .map(|seed| random_lift(&bowtie, 64, seed).expect("lift"))
        .find(|l| l.components == 1)
        .expect("some lift is connected")
        .graph;
    vec![
        ("bowtie", bowtie.clone()),
        ("theta-3-4-5", get(Family::Theta { a: 3, b: 4, c: 5 })),
        ("bowtie-lift-64", lift),
        ("cubic-500", get(Family::RandomRegular { n: 500, d: 3, seed: 1 })),
    ]
}
