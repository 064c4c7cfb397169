//! Computational engine for tilting and support τ-tilting modules over the
//! Auslander algebra Λ of K[x]/(x^n) and the preprojective algebra Λ/L.

pub mod algebra;
pub mod error;
pub mod gamma;
pub mod ideal;
pub mod linalg;
mod par;
pub mod poset;
pub mod rep;
pub mod report;
pub mod stt;
pub mod symgroup;
pub mod verify;

pub use algebra::{build_auslander, AssocAlgebra, Monomial, TwoSidedIdeal};
pub use error::{AtlasError, Result};
pub use linalg::{Matrix, Subspace};
pub use poset::HassePoset;
pub use rep::{ModuleMap, QuiverRep};
pub use report::{Check, Report};
pub use symgroup::{GenWord, Permutation, RootVector};
