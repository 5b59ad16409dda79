//! Symbol spaces for Gamma0(N): generators indexed by the projective line
//! over Z/N, Hecke operators, paths between cusps, level-lowering maps,
//! and the decomposition of the boundary kernel into simple pieces.

pub mod decompose;
pub mod hecke;
pub mod p1;
pub mod paths;
pub mod space;

pub use decompose::{decompose, decompose_with_probes, Decomposition, IsogenyFactor};
pub use hecke::{hecke_operator, heilbronn_matrices, restrict_operator, star_involution};
pub use p1::P1;
pub use paths::{degeneracy_matrix, new_subspace, path_vector};
pub use space::SymbolSpace;
