//! Module actions of `L_K(E)`.
//!
//! [`SfcSpec`] fixes a simple closed path `c` based at `v` and an irreducible
//! `f = 1 − x·f_1`, and describes the cyclic module generated by `z` subject
//! to `z = c·f_1(c)·z`. Its elements are stored as sums `Σ α·u(c)·z` with
//! `r(α) = v`, `α` not ending in `c`, and `u ∈ K[x]/(f)`; a trailing `c` on an
//! index is absorbed as multiplication by `x̄`.
//!
//! [`ChenModule`] is the span of the infinite paths tail-equivalent to `c^∞`.

mod chen;
mod sfc;

use thiserror::Error;

use crate::graph::GraphError;
use crate::lpa::LpaError;
use crate::morphisms::MorphismError;
use crate::scalars::ScalarError;

pub use chen::{sfc_to_chen_compat_check, ChenElement, ChenModule};
pub use sfc::{SfcElement, SfcSpec, SfcTwist};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{0} is not a simple closed path")]
    NotSimpleClosed(String),
    #[error("polynomial field {0} differs from the algebra field {1}")]
    FieldMismatch(String, String),
    #[error("index {0} does not end at the base vertex")]
    RangeMismatch(String),
    #[error("{0} is not in C_s(R_n)")]
    NotInCs(String),
    #[error("{0} is not in the subalgebra A(e1, e2)")]
    NotInSubalgebra(String),
    #[error("the Chen comparison needs f = 1 - x")]
    NotOneMinusX,
    #[error("the zero element has no witness")]
    ZeroElement,
    #[error("witness construction failed its own check")]
    WitnessFailed,
    #[error("elements belong to different modules")]
    ModuleMismatch,
    #[error("{0} is not tail-equivalent to the module's path")]
    NotTailEquivalent(String),
    #[error(transparent)]
    Lpa(#[from] LpaError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
