//! Insertion on planar binary trees, the calculi of insertion terms, and a
//! typed arrow-term engine for the category Γ (associativity presented as a
//! commutativity) and the free monoidal category without unit.
//!
//! * [`tree`]: trees and insertion.
//! * [`insertion`]: insertion terms, rewriting to normal form, equality.
//! * [`arrow`]: arrow terms, axiom schemata, proof scripts.
//! * [`theories`]: the axiom catalogs and built-in proofs.
//! * [`coherence`]: the functors between Γ and Â, arrow equality.
//! * [`enumerate`]: exhaustive lists of small arrow terms.
//! * [`polytopes`]: Tamari and permutohedron graphs.

pub mod arrow;
pub mod coherence;
pub mod enumerate;
pub mod insertion;
pub mod polytopes;
mod syntax;
pub mod theories;
pub mod tree;

pub use arrow::{ArrowTerm, Direction, Endpoints, Object, Path, ProofScript, TheoryKind};
pub use insertion::{Calculus, ITerm, NormalType};
pub use polytopes::SkeletonGraph;
pub use syntax::ParseError;
pub use tree::Tree;
