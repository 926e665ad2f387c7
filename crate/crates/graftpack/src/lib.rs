//! Exact solvers and verifiers for packing and covering odd T-joins in
//! signed grafts with at most two terminals.
//!
//! A signed graft (G, Σ, T) couples a signed graph with a terminal set of
//! even size; its odd T-joins are the T-joins meeting Σ oddly. The crate
//! computes exact τ (minimum cover), ν (maximum disjoint packing) and ν*
//! (fractional packing) with checkable certificates, detects the two
//! excluded minors K̃5 and F7, carries the corollary reductions
//! (odd-circuit packing, T-join packing for |T| ≤ 4, two-commodity paths,
//! plane duals, cut covers), and exhaustively verifies the packing
//! theorem and the clutter conjectures at desk scale.

pub mod clutter;
pub mod error;
pub mod gf2;
pub mod graft;
pub mod graph;
pub mod json;
pub mod enumerate;
pub mod obstruction;
pub mod reduce;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graft::{CoverKind, SignedGraft};
pub use graph::{EdgeSet, Multigraph, VertexSet};
