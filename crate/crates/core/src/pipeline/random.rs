use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldKind;
use crate::squarefree::{
    alexander_dual, betti_numbers, dual_by_intersection, eagon_reiner_cm, is_minimal_cover, reisner_cm,
    SquareFreeError, SquareFreeIdeal,
};
use crate::variable::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomSuiteOptions {
    pub seed: u64,
    pub count: usize,
    /// At most 8 keeps the brute-force checks cheap.
    pub max_vertices: usize,
    pub max_generators: usize,
    pub field: FieldKind,
    /// Second field whose Betti tables are compared with `field`'s.
    pub compare_field: Option<FieldKind>,
}

impl Default for RandomSuiteOptions {
    fn default() -> Self {
        RandomSuiteOptions {
            seed: 20240607,
            count: 200,
            max_vertices: 8,
            max_generators: 10,
            field: FieldKind::Rationals,
            compare_field: Some(FieldKind::PrimeField(32003)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub passed: usize,
    pub failed: usize,
}

impl PropertyTally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomSuiteReport {
    pub options: RandomSuiteOptions,
    pub involution: PropertyTally,
    pub dual_matches_intersection: PropertyTally,
    pub dual_generators_are_minimal_covers: PropertyTally,
    pub terai: PropertyTally,
    pub eagon_reiner_matches_reisner: PropertyTally,
    pub fields_agree: PropertyTally,
    pub cohen_macaulay: usize,
    /// Exchange-format text of every ideal that failed a property.
    pub failures: Vec<String>,
}

impl RandomSuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A random square-free ideal on `x[1,1] .. x[1,v]` with `2 <= v <= max_vertices`
/// and between 1 and `max_generators` generators of degree 2 to 4.
pub fn random_square_free_ideal<R: Rng>(rng: &mut R, max_vertices: usize, max_generators: usize) -> SquareFreeIdeal {
    let v = rng.gen_range(2..=max_vertices.max(2));
    let vertices: Vec<Variable> = (1..=v).map(|j| Variable::x(1, j)).collect();
    let count = rng.gen_range(1..=max_generators.max(1));
    let gens: Vec<Vec<Variable>> = (0..count)
        .map(|_| {
            let d = rng.gen_range(2..=v.min(4));
            sample(rng, v, d).into_iter().map(|i| vertices[i]).collect()
        })
        .collect();
    SquareFreeIdeal::from_generators(&vertices, &gens).expect("distinct vertices from the same list")
}

struct Outcome {
    checks: [bool; 6],
    cm: bool,
}

fn check_one(ideal: &SquareFreeIdeal, options: &RandomSuiteOptions) -> Result<Outcome, SquareFreeError> {
    let field = options.field;
    let dual = alexander_dual(ideal)?;
    let involution = alexander_dual(&dual)? == *ideal;
    let intersection = dual_by_intersection(ideal)? == dual;
    let covers = dual.generators().iter().all(|&c| is_minimal_cover(ideal, c));
    let primal = betti_numbers(ideal, field)?;
    let dual_table = betti_numbers(&dual, field)?;
    // reg(I*) = pd(R/I) = pd(I) + 1
    let terai = dual_table.regularity() == primal.projective_dimension().map(|p| p + 1);
    let er = eagon_reiner_cm(ideal, field)?;
    let agree = er == reisner_cm(ideal, field)?;
    let fields = match options.compare_field {
        Some(other) => betti_numbers(ideal, other)?.entries() == primal.entries(),
        None => true,
    };
    Ok(Outcome { checks: [involution, intersection, covers, terai, agree, fields], cm: er })
}

/// Duality and Cohen-Macaulay cross-checks on seeded random ideals.
pub fn random_suite(options: &RandomSuiteOptions) -> Result<RandomSuiteReport, SquareFreeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let ideals: Vec<SquareFreeIdeal> = (0..options.count)
        .map(|_| random_square_free_ideal(&mut rng, options.max_vertices, options.max_generators))
        .collect();
    let outcomes: Vec<Outcome> = ideals.par_iter().map(|i| check_one(i, options)).collect::<Result<_, _>>()?;
    let mut report = RandomSuiteReport {
        options: options.clone(),
        involution: PropertyTally::default(),
        dual_matches_intersection: PropertyTally::default(),
        dual_generators_are_minimal_covers: PropertyTally::default(),
        terai: PropertyTally::default(),
        eagon_reiner_matches_reisner: PropertyTally::default(),
        fields_agree: PropertyTally::default(),
        cohen_macaulay: 0,
        failures: Vec::new(),
    };
    for (ideal, out) in ideals.iter().zip(&outcomes) {
        let [a, b, c, d, e, f] = out.checks;
        report.involution.record(a);
        report.dual_matches_intersection.record(b);
        report.dual_generators_are_minimal_covers.record(c);
        report.terai.record(d);
        report.eagon_reiner_matches_reisner.record(e);
        report.fields_agree.record(f);
        report.cohen_macaulay += out.cm as usize;
        if !out.checks.iter().all(|&ok| ok) {
            report.failures.push(ideal.to_exchange());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5).map(|_| random_square_free_ideal(&mut rng, 8, 6).to_exchange()).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn short_suite_passes() {
        let report = random_suite(&RandomSuiteOptions { count: 20, ..Default::default() }).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures);
        assert_eq!(report.involution.passed, 20);
    }
}
