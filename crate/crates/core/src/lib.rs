//! Cayley graphs of finite semigroups and monoids: recognition, explicit
//! constructions of algebraic witnesses, and certificates for negative
//! instances.

pub mod algebra;
pub mod digraph;
pub mod embed;
pub mod error;
pub mod families;
mod flow;
pub mod graph;
pub mod invariants;
pub mod par;
pub mod recognize;
pub mod record;
pub mod trees;
pub mod witness;
pub mod zelinka;

pub use error::{Error, Result};
