//! Integral homology, fundamental-group presentations and connectivity.

mod chain;
mod connectivity;
mod homology;
mod pi1;
mod snf;

pub use chain::{check_boundary_squared, CellComplex, IntegerChainComplex};
pub use connectivity::{homological_connectivity, Connectivity, ACYCLIC};
pub use homology::{full_homology, homology, HomologyGroup, HomologyResult, SkeletonView};
pub use pi1::{abelianization, pi1_presentation, Abelianization, GroupPresentation, Letter};
pub use snf::{
    smith_from_columns, smith_normal_form, smith_normal_form_dense, SmithForm, SparseMatrix,
};
