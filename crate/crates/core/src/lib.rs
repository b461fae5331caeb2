//! Exact-arithmetic workbench for finite-dimensional Lie algebras given by
//! structure constants: centers, derivation algebras, holomorphs, derivation
//! towers, and certified completeness checks, over Q or a prime field.

pub mod catalog;
pub mod certificate;
pub mod derivations;
pub mod error;
pub mod field;
pub mod forms;
pub mod holomorph;
pub mod io;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod torus;

pub use certificate::{Certificate, Claim, Verdict, Witness};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use lattice::IntMat;
pub use lie::LieAlgebra;
pub use linalg::{Mat, Subspace};
