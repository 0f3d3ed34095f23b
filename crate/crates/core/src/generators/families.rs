use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lift::random_lift;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Attempts before `random_regular` gives up on a simple connected sample.
const REGULAR_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// `K_{1,k}`.
    Star { k: usize },
    /// Two triangles sharing a vertex.
    Bowtie,
    /// Two vertices joined by internally disjoint paths with `a`, `b`, `c` edges.
    Theta { a: usize, b: usize, c: usize },
    /// Random `lift`-fold lift of `K_{b,a}`: degree `a` on one side and `b`
    /// on the other, so the cover is the `(a, b)`-biregular tree.
    Biregular { a: usize, b: usize, lift: usize, seed: u64 },
    /// Configuration model, resampled until simple and connected.
    RandomRegular { n: usize, d: usize, seed: u64 },
    /// Cycles of lengths `p` and `q` sharing one vertex.
    TwoCyclesGlued { p: usize, q: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Path { n } => write!(f, "path({n})"),
            Family::Complete { n } => write!(f, "complete({n})"),
            Family::Star { k } => write!(f, "star({k})"),
            Family::Bowtie => write!(f, "bowtie"),
            Family::Theta { a, b, c } => write!(f, "theta({a},{b},{c})"),
            Family::Biregular { a, b, lift, seed } => write!(f, "biregular({a},{b},{lift},{seed})"),
            Family::RandomRegular { n, d, seed } => write!(f, "random_regular({n},{d},{seed})"),
            Family::TwoCyclesGlued { p, q } => write!(f, "two_cycles_glued({p},{q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub graph: MultiGraph,
    /// Set when a random family returned a sample that misses its target
    /// (not simple or not connected) after exhausting its attempts.
    pub fallback: bool,
}

fn invalid(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

/// A closed walk through `first`, then `rest`, and back to `first`.
fn push_cycle(edges: &mut Vec<(usize, usize)>, first: usize, rest: &[usize]) {
    let mut prev = first;
    for &v in rest {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, first));
}

pub fn make(family: &Family) -> Result<Generated> {
    let exact = |graph| Ok(Generated { graph, fallback: false });
    match *family {
        Family::Cycle { n } => {
            if n == 0 {
                return Err(invalid("cycle needs n >= 1".into()));
            }
            exact(MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())?)
        }
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid("path needs n >= 1".into()));
            }
            exact(MultiGraph::new(n, (1..n).map(|i| (i - 1, i)).collect())?)
        }
        Family::Complete { n } => {
            if n == 0 {
                return Err(invalid("complete graph needs n >= 1".into()));
            }
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            exact(MultiGraph::new(n, edges)?)
        }
        Family::Star { k } => exact(MultiGraph::new(k + 1, (1..=k).map(|i| (0, i)).collect())?),
        Family::Bowtie => exact(MultiGraph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        )?),
        Family::Theta { a, b, c } => {
            if a == 0 || b == 0 || c == 0 {
                return Err(invalid("theta paths need at least one edge each".into()));
            }
            let mut edges = Vec::new();
            let mut next = 2;
            for len in [a, b, c] {
                let mut prev = 0;
                for _ in 1..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            exact(MultiGraph::new(next, edges)?)
        }
        Family::Biregular { a, b, lift, seed } => {
            if a == 0 || b == 0 || lift == 0 {
                return Err(invalid("biregular needs a, b, lift >= 1".into()));
            }
            // Side X has b vertices of degree a, side Y has a vertices of degree b.
            let edges = (0..b).flat_map(|x| (0..a).map(move |y| (x, b + y))).collect();
            let base = MultiGraph::new(a + b, edges)?;
            let l = random_lift(&base, lift, seed)?;
            Ok(Generated { fallback: l.components > 1, graph: l.graph })
        }
        Family::RandomRegular { n, d, seed } => random_regular(n, d, seed),
        Family::TwoCyclesGlued { p, q } => {
            if p == 0 || q == 0 {
                return Err(invalid("cycle lengths must be >= 1".into()));
            }
            let mut edges = Vec::new();
            push_cycle(&mut edges, 0, &(1..p).collect::<Vec<_>>());
            push_cycle(&mut edges, 0, &(p..p + q - 1).collect::<Vec<_>>());
            exact(MultiGraph::new(p + q - 1, edges)?)
        }
    }
}

fn random_regular(n: usize, d: usize, seed: u64) -> Result<Generated> {
    if n == 0 || (n * d) % 2 == 1 {
        return Err(invalid(format!("random_regular needs n >= 1 and n*d even, got n = {n}, d = {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    let mut last = None;
    for _ in 0..REGULAR_ATTEMPTS {
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
        let g = MultiGraph::new(n, edges)?;
        if g.is_simple() && g.is_connected() {
            return Ok(Generated { graph: g, fallback: false });
        }
        last = Some(g);
    }
    Ok(Generated { graph: last.expect("at least one attempt"), fallback: true })
}
