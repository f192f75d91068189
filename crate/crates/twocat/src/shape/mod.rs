//! Index shapes: 2-filteredness, 2-cofinality, the poset `M(J)` of finite
//! diagrams with `Φ: M(J) -> J`, and the tuple 2-category `Â` with
//! `T: A -> Â`.

pub mod filtered;
pub mod hat;
pub mod mj;

use thiserror::Error;

pub use filtered::{
    check_2cofinal, check_2cofinal_in, check_2filtered, check_2filtered_in, recheck_filtered, AxiomCheck, Coequalizer,
    CofinalReport, CofinalReportOf, Cospan, FilteredReport, FilteredReportOf, Merge, Outcome, Reach,
};
pub use hat::{build_hat, transport_along_hat, HatCell, HatTwoCat, Tuple};
pub use mj::{build_mj, MJDiagram, MJReport, MJTruncation, MJ};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("NotFiltered: {0}")]
    NotFiltered(String),
    #[error("bound {bound} exceeds the enumeration limit {max}")]
    BoundTooLarge { bound: usize, max: usize },
    #[error("BoundTooSmall: {0}")]
    BoundTooSmall(String),
    #[error("the 2-category has no terminal object")]
    NoTerminalObject,
}
