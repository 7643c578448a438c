//! Exact arithmetic in G-algebras (PBW algebras): presentations with
//! straightening relations, the noncommutative product, opposite
//! algebras, and commutative gcd machinery for coefficient and block
//! polynomial data.

pub mod coeff;
pub mod commutative;
pub mod element;
pub mod error;
pub mod exponent;
pub mod mpoly;
pub mod opposite;
pub mod order;
pub mod parampoly;
pub mod presentation;
pub mod zoo;

pub use coeff::{Coefficient, FieldSpec};
pub use element::Element;
pub use error::GAlgebraError;
pub use exponent::ExpVec;
pub use order::MonomialOrder;
pub use presentation::{
    GAlgebra, PresentationData, Relation, RelationInput, ValidationReport, Violation,
    WeylStructure,
};

/// Shared handle to a validated presentation.
pub type AlgebraRef = std::sync::Arc<GAlgebra>;
