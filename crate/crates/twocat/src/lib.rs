//! Finite 2-categories, pseudo-functors, 2-filtered pseudo-colimits of
//! categories, 2-pro-objects and the lifting calculus of 2-model structures,
//! all as explicit tables checked by exhaustive search.
//!
//! ```
//! use twocat::core::{validate_twocat, TwoCat};
//!
//! let two = TwoCat::two();
//! assert!(validate_twocat(&two).is_ok());
//! ```

pub mod core;
pub mod fixtures;
pub mod kan;
pub mod pro;
pub mod maps;
pub mod model;
pub mod pasting;
pub mod shape;

#[cfg(doctest)]
mod doctest;
