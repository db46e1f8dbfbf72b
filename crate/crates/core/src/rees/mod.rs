//! The Rees ideal of the diagonal of a tensor product of two determinantal
//! rings: instances, the elimination oracle, the explicit generator
//! families and the predicted initial ideal.

mod blocks;
mod families;
mod instance;
mod oracle;

use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::ring::AlgebraError;

pub use families::{
    admissible_indices, check_index, predicted_monomial, unresolved_for, ConstraintRow, FamilyBuilder,
    FamilyElement, FamilyTag, CONSTRAINT_TABLE,
};
pub use instance::{Instance, NormalizedInstance, Orientation};
pub use oracle::{
    candidate_basis, determinantal_ideals, diagonal_generators, family_generators, initial_families,
    member_by_substitution, predicted_initial_ideal, rees_ideal_oracle, InitialFamily, SubstitutionCheck,
};

/// How the generator and initial-ideal families are read where their
/// displayed form leaves room. Copied verbatim into every report.
pub const READING_NOTES: &[&str] = &[
    "stacked block matrices take their rows top to bottom in display order; empty blocks contribute no rows",
    "X and Y are exchanged when s1 < s2, or s1 = s2 and t1 > t2; results refer to the exchanged instance",
    "f and f^{l,k} use columns 1..min(t1,t2)",
    "f^{l,k} and its monomial family use l <= k",
    "U: p runs over 1..s1, q over 1..n, columns over 1..t1; row p carries x on columns <= q and y on columns > q",
    "W: a_p replaces a_(p-1), the missing upper bound on b is t2, and p <= s2 - 1",
    "V: the x block is rows 1..l-1, k <= s2 - 1, and the column b_(k+1) lies above min(t1,t2)",
    "H: the correction sum runs over every column above q",
    "signs inside the W, V and H sums are fixed by cancelling leading terms",
    "family (11) I^{l,k,q} contributes no minimal generator",
    "families (7), (9) and (12) are empty for s2 = 2 and are not constructed for s2 >= 3",
    "the ideal L in the duality and regularity statements is the Rees ideal K",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReesError {
    #[error("instance violates {0}")]
    Constraint(&'static str),
    #[error("index {index:?} is not admissible for family {tag}: {rule}")]
    Index { tag: FamilyTag, index: Vec<usize>, rule: &'static str },
    #[error("family {tag} has no resolved construction for instance {instance} (needs s2 = 2)")]
    UnresolvedFamily { tag: FamilyTag, instance: Instance },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}
