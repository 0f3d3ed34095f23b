use crate::error::{Error, Result};
use crate::graph::{two_core, CyclomaticClass, MultiGraph};
use crate::spectra::eigen_spectrum;

#[derive(Debug, Clone, PartialEq)]
pub struct UnicyclicDefect {
    /// `ρ(G) − (2/N) y_a y_b`, a lower bound for `ρ(T)`.
    pub value: f64,
    pub lambda1: f64,
    /// Endpoints of the cycle edge that was cut.
    pub cut_edge: (usize, usize),
    pub copies: u64,
}

/// Rayleigh quotient of `N` consecutive copies of the Perron vector laid
/// along the cover of a unicyclic graph. The cycle edge whose endpoints have
/// the smallest Perron product is cut, which gives the best bound.
pub fn unicyclic_defect(g: &MultiGraph, copies: u64) -> Result<UnicyclicDefect> {
    let class = g.cyclomatic_class()?;
    if class != CyclomaticClass::Unicyclic {
        return Err(Error::WrongCyclomaticClass { expected: "unicyclic", found: class.name() });
    }
    if copies == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let s = eigen_spectrum(g)?;
    let y = &s.perron;
    let core = two_core(g)?;
    let (a, b) = core
        .int_half_edges
        .iter()
        .filter(|&&h| h & 1 == 0)
        .map(|&h| (g.source(h), g.target(h)))
        .min_by(|p, q| (y[p.0] * y[p.1]).total_cmp(&(y[q.0] * y[q.1])))
        .expect("a unicyclic graph has a cycle edge");
    Ok(UnicyclicDefect {
        value: s.lambda1 - 2.0 * y[a] * y[b] / copies as f64,
        lambda1: s.lambda1,
        cut_edge: (a, b),
        copies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!((unicyclic_defect(&g, 1).unwrap().value - 4.0 / 3.0).abs() < 1e-12);
        assert!((unicyclic_defect(&g, 1_000_000).unwrap().value - 2.0).abs() < 1e-6);
    }

    #[test]
    fn loop_vertex_with_tail() {
        let g = MultiGraph::from_edges(2, &[(0, 0), (0, 1)]).unwrap();
        let d = unicyclic_defect(&g, 10).unwrap();
        assert_eq!(d.cut_edge, (0, 0));
        assert!(d.value < d.lambda1);
    }

    #[test]
    fn rejects_other_classes() {
        let bowtie =
            MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(unicyclic_defect(&bowtie, 5).unwrap_err().kind(), "wrong-cyclomatic-class");
        let tri = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(unicyclic_defect(&tri, 0).unwrap_err().kind(), "invalid-argument");
    }
}
