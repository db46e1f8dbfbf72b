//! Square-free monomial ideals: Alexander duality (by minimal transversals,
//! by intersecting primes, and in closed form for staircases), graded Betti
//! numbers through simplicial homology, regularity, and the Eagon-Reiner
//! and Reisner tests for Cohen-Macaulayness.

mod betti;
mod complex;
mod dual;
mod homology;
mod ideal;
mod staircase;

use thiserror::Error;

use crate::field::Rationals;
use crate::rees::{initial_families, predicted_initial_ideal, Instance, ReesError};
use crate::ring::AlgebraError;
use crate::variable::Variable;

pub use betti::{
    betti_numbers, betti_numbers_capped, has_linear_resolution, regularity, BettiEntry, BettiTable,
    DEFAULT_VERTEX_CAP,
};
pub use complex::{
    eagon_reiner_cm, eagon_reiner_cm_capped, reisner_cm, reisner_cm_capped, restrict_to_support,
    stanley_reisner_complex, SimplicialComplex,
};
pub use dual::{alexander_dual, dual_by_intersection, intersect, is_minimal_cover, minimal_transversals};
pub use ideal::{SquareFreeIdeal, VertexSet, MAX_VERTICES};
pub use staircase::{staircase_dual_closed_form, staircase_ideal};

/// Conventions of the duality and homology computations, copied verbatim
/// into every report.
pub const COMPUTATION_NOTES: &[&str] = &[
    "Alexander duals come from minimal transversals; the displayed component closed forms are not used",
    "Betti numbers are computed only in degrees of the lcm lattice of the generators",
    "homology ranks are exact over the field stamped on the report",
    "the dual degree is compared with mn-1+t1-(s1-1)+t2-(s2-1), and with m*m+t2-(s2-1) when that fails",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareFreeError {
    #[error("`{0}` is not square-free")]
    NotSquareFree(String),
    #[error("the zero ideal and the unit ideal are not accepted here")]
    Degenerate,
    #[error("{count} vertices exceed the cap of {cap}")]
    VertexCap { count: usize, cap: usize },
    #[error("vertex list has a repeated variable")]
    DuplicateVertex,
    #[error("{0} is not a vertex of the ideal")]
    UnknownVertex(Variable),
    #[error("ideals live on different vertex lists")]
    VertexMismatch,
    #[error("staircase parameters violate {0}")]
    Staircase(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The predicted initial ideal of an instance on all `3mn` variables.
pub fn initial_ideal_of_instance(inst: &Instance) -> Result<SquareFreeIdeal, SquareFreeError> {
    let ring = inst.ring(Rationals)?;
    SquareFreeIdeal::from_monomial_ideal(&ring, &predicted_initial_ideal(inst, &ring)?)
}

/// Alexander dual of the predicted initial ideal, by minimal transversals.
pub fn dual_of_initial_ideal(inst: &Instance) -> Result<SquareFreeIdeal, SquareFreeError> {
    alexander_dual(&initial_ideal_of_instance(inst)?)
}

/// The same dual as the intersection of the duals of the twelve families,
/// each computed on its own. Empty families contribute the unit ideal.
pub fn dual_by_components(inst: &Instance) -> Result<SquareFreeIdeal, SquareFreeError> {
    let vertices = inst.variables();
    let mut acc: Option<SquareFreeIdeal> = None;
    for fam in initial_families(inst)? {
        if fam.monomials.is_empty() {
            continue;
        }
        let part = alexander_dual(&SquareFreeIdeal::from_generators(&vertices, &fam.monomials)?)?;
        acc = Some(match acc {
            None => part,
            Some(a) => intersect(&a, &part)?,
        });
    }
    acc.ok_or(SquareFreeError::Degenerate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;

    #[test]
    fn smallest_instance_dual() {
        let inst = Instance::new(2, 2, 2, 2, 2, 2).unwrap();
        let dual = dual_of_initial_ideal(&inst).unwrap();
        assert_eq!(dual.degrees(), vec![inst.dual_degree_formula() as usize]);
        assert_eq!(dual, dual_by_components(&inst).unwrap());
        assert_eq!(alexander_dual(&dual).unwrap(), initial_ideal_of_instance(&inst).unwrap());
        let table = betti_numbers(&dual, FieldKind::Rationals).unwrap();
        assert!(table.is_linear());
        assert_eq!(table.regularity(), Some(5));
    }
}
