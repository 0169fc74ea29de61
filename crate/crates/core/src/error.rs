use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("not a Cartan matrix: {0}")]
    NotCartan(String),

    #[error("not of finite type: leading principal minor of order {order} of the symmetrized matrix is {value}")]
    NotFiniteType { order: usize, value: String },

    #[error("Weyl group exceeds the element cap of {cap}")]
    WeylGroupTooLarge { cap: usize },

    #[error("weight {weight} is not dominant integral: pairing with coroot of simple root {root} is {pairing}")]
    NotDominantIntegral { weight: String, root: String, pairing: String },

    #[error("embedding matrix does not have full column rank ({rank} < {cols})")]
    EmbedRank { rank: usize, cols: usize },

    #[error("non-containment: k-weight {weight} has multiplicity {k_mult} in ch_t(k) but only {g_mult} in ch_t(g)")]
    NonContainment { weight: String, k_mult: u64, g_mult: u64 },

    #[error("degenerate form on t*: {0}")]
    DegenerateForm(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("minimality failure: nonzero t-weight {0} has zero lexicographic value")]
    MinimalityFailure(String),

    #[error("omega mismatch: restriction of kappa is {found}, expected mu - 2 rho_perp_n = {expected}")]
    OmegaMismatch { expected: String, found: String },

    #[error("kappa {kappa} is not dominant integral on the Levi factor: pairing with coroot of {root} is {pairing}")]
    NotDominantOnLevi { kappa: String, root: String, pairing: String },

    #[error("desk-scale guard: {0}")]
    Guard(String),

    #[error("config error in {field}: {message}")]
    Config { field: String, message: String },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { field: field.into(), message: message.into() }
    }
}
