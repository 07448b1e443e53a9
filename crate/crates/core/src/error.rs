use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by group construction and the matrix kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The dihedral order parameter must satisfy n >= 2.
    #[error("group order must be at least 2, got {0}")]
    InvalidOrder(usize),

    /// A rotation/mirror/site index fell outside [0, n).
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// Two elements (or an element and a point) live over different D_n.
    #[error("incompatible group parameters: order {0} vs order {1}")]
    OrderMismatch(usize, usize),

    /// Vector or matrix dimensions disagree.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// Input to the involution projector formula fails V^2 = I.
    #[error("matrix is not an involution: max|V^2 - I| = {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotInvolution { deviation: f64, tolerance: f64 },

    /// The scalar function handed to the Lagrange-Sylvester formula is not
    /// defined at a spectral point (branch cut, pole, ...).
    #[error("scalar function undefined at eigenvalue {0} (derivative order {1})")]
    FunctionUndefined(Complex64, usize),

    /// Spectral data violate one of the projector identities.
    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),

    /// Two coherent states (or labels) cannot be combined.
    #[error("mismatched state labels: {0}")]
    LabelMismatch(String),

    /// A textual element spec such as "R3" or "M0" failed to parse.
    #[error("cannot parse group element {0:?}: expected R<index> or M<index> with index < order")]
    ParseElement(String),
}
