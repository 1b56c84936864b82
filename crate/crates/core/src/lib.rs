//! Finite closed categories and closed multicategories, with every axiom and
//! derived identity checked by exhaustive evaluation, and the constructions
//! relating the two kinds of structure run as algorithms.

pub mod budget;
pub mod category;
pub mod closed;
pub mod closed_multi;
pub mod correspondence;
pub mod enriched;
pub mod error;
pub mod hf;
pub mod instances;
pub mod interchange;
pub mod multicat;
pub mod report;
pub mod suite;

pub use budget::{Caps, SizeBudget};
pub use error::{Error, Result};
pub use hf::Hf;
pub use report::{Item, Report, Status};
