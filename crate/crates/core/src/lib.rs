//! Deformation-theoretic invariants of Stanley-Reisner schemes of
//! simplicial complexes: graded cotangent cohomology, manifold dimension
//! formulas, an independent algebraic cross-check, and versal deformation
//! equations for low-valency surface triangulations.

pub mod complex;
pub mod cotangent;
pub mod degree;
pub mod error;
pub mod families;
pub mod homology;
pub mod named;
pub mod oracle;
pub mod poly;
pub mod versal;
pub mod sheaf;
pub mod vset;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use vset::VertexSet;
