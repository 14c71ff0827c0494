//! Omega-model structures on categories of finite-dimensional modules over
//! monomial quiver algebras with prime-field coefficients.

pub mod budget;
pub mod catalog;
pub mod combinations;
pub mod cotorsion;
pub mod decision;
pub mod error;
pub mod homological;
pub mod homotopy;
pub mod linalg;
pub mod model;
pub mod module;
pub mod quiver;
pub mod verifier;

pub use budget::Budget;
pub use error::{AlgebraError, LiftError, LinalgError, ModelError, ModuleError, Undecided};
pub use linalg::{Field, Matrix};
pub use module::{Conflation, ModMorphism, Module, SubcatSpec};
pub use quiver::{build_algebra, Algebra, Arrow, MonomialRelationSet, Path, PathBasis, Quiver};
