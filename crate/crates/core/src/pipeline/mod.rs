//! End-to-end checks built from the other modules: the verification
//! pipeline for one instance, the staircase suite and the random duality
//! suite.

mod random;
mod staircase;
mod verify;

use thiserror::Error;

use crate::field::FieldError;
use crate::groebner::GroebnerError;
use crate::rees::ReesError;
use crate::ring::AlgebraError;
use crate::squarefree::SquareFreeError;

pub use random::{random_square_free_ideal, random_suite, PropertyTally, RandomSuiteOptions, RandomSuiteReport};
pub use staircase::{staircase_check, staircase_suite, StaircaseReport};
pub use verify::{
    verify, Cause, OracleRoute, Stage, Stages, VerificationReport, Verdict, VerifyOptions, EXIT_EXHAUSTED,
    EXIT_REFUTED, EXIT_UNSUPPORTED, EXIT_VERIFIED,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    SquareFree(#[from] SquareFreeError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
