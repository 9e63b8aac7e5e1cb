//! Exact integral-lattice computations for OG10-type moduli spaces on cubic
//! fourfolds: Mukai lattices, the `Γ_λ` overlattice of the desingularised
//! moduli space, factoriality, Hassett discriminant conditions and the
//! Picard-lattice criteria for birationality to K3 moduli spaces and LSV
//! varieties.
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`).

pub mod catalog;
pub mod document;
pub mod hassett;
pub mod lattice;
pub mod matrix;
pub mod nikulin;
pub mod og10;

pub use catalog::{MarkedMukaiLattice, K3MukaiLattice};
pub use document::{DocumentError, LatticeDocument};
pub use lattice::{DiscriminantGroup, GlueVector, IntegralLattice, LatticeError, Sublattice};
pub use matrix::{IntMatrix, LinalgError, RatMatrix, Signature, SmithDecomposition};
pub use og10::{GammaLattice, MukaiVector, Og10Error, PicardLpz, UEmbedding};
