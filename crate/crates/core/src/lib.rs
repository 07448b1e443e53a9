//! Quantum kinematics on the periodic chain `Z_n` with the dihedral group
//! `D_n` as symmetry group.
//!
//! The configuration space is the cyclic group `Z_n` (the vertices of a
//! regular n-gon), acted on transitively by `D_n`. This crate builds the two
//! irreducible systems of imprimitivity `(V_1, E)` and `(V_2, E)` on `C^n`,
//! the position/momentum/parity observables they define, the generalized Weyl
//! operators over `Z_n x D_n`, and the n families of coherent states, and it
//! numerically verifies every claimed identity: the homomorphism property,
//! imprimitivity covariance, spectra and multiplicities, exponential
//! reconstruction of the representations, and the resolution of unity
//! `sum |a,g><a,g| = 2n * I`.
//!
//! Modules:
//! - [`dihedral`]: exact integer model of `D_n`, its action on `Z_n`, and the
//!   coset decomposition used for induction.
//! - [`linalg`]: dense complex matrix kernel, DFT eigenvectors, circulant and
//!   involution spectral projectors, Lagrange-Sylvester matrix functions.
//! - [`kinematics`]: the standard projection-valued measure, induced
//!   representations, covariance verification, and the observables.
//! - [`coherent`]: Weyl operators, vacuum vectors, coherent-state families
//!   and their verified properties.
//! - [`verify`]: the full numeric check suite with auditable tolerances.

pub mod coherent;
pub mod dihedral;
mod error;
pub mod kinematics;
pub mod linalg;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
