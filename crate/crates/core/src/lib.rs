//! Natural frequencies of an annular membrane and identification of its
//! boundary conditions from three of them.
//!
//! The forward direction ([`forward::find_eigenvalues`]) locates the zeros of
//! the characteristic determinant for a given 2×4 boundary matrix. The
//! inverse direction ([`inverse::identify_boundary_conditions`]) recovers the
//! boundary matrix, up to row equivalence, from three eigenvalues via its
//! Plücker coordinates.

pub mod bessel;
pub mod cli;
pub mod error;
pub mod forward;
pub mod inverse;
pub mod plucker;
pub mod spectral;

pub use error::{Error, Result};
pub use forward::{find_eigenvalues, refine_root, SearchConfig};
pub use inverse::{identify_boundary_conditions, stability_probe, IdentificationResult};
pub use plucker::{equivalent, minors_of, project_to_quadric, reconstruct_matrix, PluckerVector};
pub use spectral::{characteristic_determinant, Annulus, BoundaryConditions, Spectrum};
