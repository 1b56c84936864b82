//! Shipped structures: positive instances and negative fixtures.

pub mod closed;
pub mod multi;
pub mod registry;
