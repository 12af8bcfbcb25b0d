//! Connectivity bounds, exact homology and homotopy types of independence
//! complexes of hypergraphs.

pub mod chains;
pub mod complex;
pub mod domination;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod generate;
pub mod graphs;
pub mod homology;
pub mod homotopy;
pub mod hypergraph;
pub mod io;
pub mod psi;
pub mod verify;
pub mod vertex_set;

pub use complex::{independence_complex, SimplicialComplex};
pub use error::{Error, Result};
pub use ext::{ExtInt, ExtNat};
pub use homology::{conn_h, reduced_homology, HomologyProfile};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
pub use psi::{degree_bound, psi, psi_naive, PsiSolver};
