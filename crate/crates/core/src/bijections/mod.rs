//! Constructive bijections on ascent sequences and the master bijection Phi.

use thiserror::Error;

pub mod f54;
pub mod g53;
pub mod phi;
pub mod reverse;
pub mod rules;
pub mod simple;

pub use f54::{f54_case, F54Case};
pub use g53::{f53, f53_inv, g53, g53_case, in_b1, G53Case};
pub use phi::{f5, f5_inv, phi, phi_inv};
pub use reverse::{f54, f54_inv, g53_inv};
pub use rules::{insert_r3, insert_r4, substitute_r1, substitute_r1_steps, substitute_r2, substitute_r2_steps};
pub use simple::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("rule precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl MapError {
    pub(crate) fn domain(m: String) -> Self {
        MapError::Domain(m)
    }
    pub(crate) fn precondition(m: String) -> Self {
        MapError::Precondition(m)
    }
    pub(crate) fn internal(m: String) -> Self {
        MapError::Internal(m)
    }
}
