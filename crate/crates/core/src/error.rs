use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph is a tree and has an empty 2-core")]
    NoCycle,

    #[error("expected a {expected} graph, found a {found} graph")]
    WrongCyclomaticClass { expected: &'static str, found: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("tree ball of radius {radius} would have {estimate} nodes, cap is {cap}; use a smaller radius")]
    BallTooLarge { radius: usize, estimate: f64, cap: usize },

    #[error("rooted ball has {size} vertices, canonicalization cap is {cap}")]
    CanonicalizationCap { size: usize, cap: usize },

    #[error("canonical search on {size} vertices exceeded {leaves} leaves")]
    CanonicalizationBudget { size: usize, leaves: usize },

    #[error("spectrum only has the extreme eigenvalue (n = {n} exceeds the dense cap)")]
    PartialSpectrum { n: usize },

    #[error("no positive spectral-gap margin found over the (gamma, delta) schedule")]
    NoCertificate,

    #[error("certificate inconsistent with bisection: rho upper bracket {rho_hi} > implied bound {implied}")]
    CertificateInconsistent { rho_hi: f64, implied: f64 },

    #[error("weight assignment failed: {0}")]
    Weighting(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::EmptyGraph => "empty-graph",
            Error::Disconnected { .. } => "disconnected",
            Error::NoCycle => "no-cycle",
            Error::WrongCyclomaticClass { .. } => "wrong-cyclomatic-class",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::BallTooLarge { .. } => "ball-too-large",
            Error::CanonicalizationCap { .. } | Error::CanonicalizationBudget { .. } => {
                "canonicalization-cap"
            }
            Error::PartialSpectrum { .. } => "partial-spectrum",
            Error::NoCertificate => "no-certificate",
            Error::CertificateInconsistent { .. } => "certificate-inconsistent",
            Error::Weighting(_) => "weighting",
            Error::Numerical(_) => "numerical",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
