//! Exact computations with finite groupoids and their bisection groups.
//!
//! Conventions used throughout:
//!
//! * a groupoid product `g·h` is defined iff `α(g) = β(h)` and means "first
//!   `h`, then `g`"; so `α(g·h) = α(h)` and `β(g·h) = β(g)`;
//! * groups, groupoids and actions are full tables over dense indices; labels
//!   are only for display and serialization;
//! * every morphism is a plain table, compared extensionally.

pub mod action;
pub mod algebra;
pub mod bisection;
pub mod error;
pub mod groupoid;
pub mod harness;
pub mod transitive;

pub use error::{Error, Result};

/// Search guardrails. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Backtracking nodes per enumeration.
    pub search_nodes: usize,
    /// Largest group built as a full table.
    pub group_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_nodes: 1_000_000,
            group_order: 720,
        }
    }
}
