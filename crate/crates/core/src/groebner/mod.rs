//! Division, S-polynomials, Buchberger's algorithm, Groebner certification,
//! initial ideals and elimination.

mod buchberger;
mod certify;
mod ideal;
mod reduce;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::FieldError;
use crate::ring::AlgebraError;

pub use buchberger::{buchberger, interreduce};
pub use certify::{is_groebner_basis, is_groebner_basis_within, FailingPair, GbCertificate};
pub use ideal::{eliminate, ideal_membership, initial_ideal, Ideal, MonomialIdeal};
pub use reduce::{reduce, s_polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("budget exhausted: {what} exceeded the cap of {limit}")]
    Budget { what: BudgetKind, limit: u64 },
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("generator list is not a Groebner basis (pair {0}, {1} leaves a remainder)")]
    NotGroebner(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetKind {
    Pairs,
    Terms,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetKind::Pairs => write!(f, "S-pairs processed"),
            BudgetKind::Terms => write!(f, "polynomial size"),
        }
    }
}

/// Resource caps for Groebner computations. `None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbBudget {
    pub max_pairs: Option<u64>,
    pub max_terms: Option<usize>,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget { max_pairs: Some(2_000_000), max_terms: Some(200_000) }
    }
}

impl GbBudget {
    pub fn unbounded() -> Self {
        GbBudget { max_pairs: None, max_terms: None }
    }

    pub fn pairs(limit: u64) -> Self {
        GbBudget { max_pairs: Some(limit), ..Self::default() }
    }

    pub(crate) fn check_terms(&self, len: usize) -> Result<(), GroebnerError> {
        match self.max_terms {
            Some(limit) if len > limit => {
                Err(GroebnerError::Budget { what: BudgetKind::Terms, limit: limit as u64 })
            }
            _ => Ok(()),
        }
    }
}

/// Machine-readable trace of a Buchberger run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbLog {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub pairs_skipped_by_criteria: u64,
    /// `(pairs processed so far, current basis size)` after every insertion.
    pub basis_size_trace: Vec<(u64, usize)>,
    pub final_basis_size: usize,
}
