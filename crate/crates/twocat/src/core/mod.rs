//! Finite categories and finite 2-categories as explicit tables.

pub mod catuni;
pub mod congruence;
pub mod equivalence;
pub mod fincat;
pub mod report;
pub mod traits;
pub mod twocat;

pub use catuni::{CatUniverse, FinFunctor, NatTrans};
pub use congruence::{quotient, Congruence, Quotient};
pub use equivalence::{equivalence_of_categories, EquivalenceDecision, EquivalenceFailure};
pub use fincat::{validate_fincat, CatLaw, FinCat, FinCatBuilder, Mor};
pub use report::{Report, Violation};
pub use traits::{Enumerable, Op, TwoCategory};
pub use twocat::{hom_category, validate_twocat, Entry, Table, TwoCat, TwoCatLaw};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("dangling id: {0}")]
    DanglingId(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("relation on non-parallel morphisms: {0}")]
    NotParallel(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
}
