use serde::Serialize;

use crate::field::FieldKind;
use crate::squarefree::{
    alexander_dual, betti_numbers_capped, staircase_dual_closed_form, staircase_ideal, SquareFreeError,
};

/// Closed-form versus generic dual of one staircase ideal, with the
/// regularity of the dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaircaseReport {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub field: String,
    pub ideal_generators: usize,
    pub dual_generators: usize,
    pub closed_form_generators: usize,
    pub closed_form_matches: bool,
    pub degrees: Vec<usize>,
    /// `n - (m - 2)`
    pub expected_degree: usize,
    pub regularity: Option<usize>,
    pub linear: bool,
    pub verified: bool,
}

pub fn staircase_check(m: usize, n: usize, l: usize, field: FieldKind, cap: usize) -> Result<StaircaseReport, SquareFreeError> {
    let ideal = staircase_ideal(m, n, l)?;
    let generic = alexander_dual(&ideal)?;
    let closed = staircase_dual_closed_form(m, n, l)?;
    let table = betti_numbers_capped(&generic, field, cap)?;
    let expected_degree = n + 2 - m;
    let closed_form_matches = closed == generic;
    let regularity = table.regularity();
    let linear = table.is_linear();
    Ok(StaircaseReport {
        m,
        n,
        l,
        field: field.to_string(),
        ideal_generators: ideal.len(),
        dual_generators: generic.len(),
        closed_form_generators: closed.len(),
        closed_form_matches,
        degrees: generic.degrees(),
        expected_degree,
        regularity,
        linear,
        verified: closed_form_matches && linear && regularity == Some(expected_degree),
    })
}

/// Every `(m, n, l)` with `2 <= m <= max_m`, `m <= n <= max_n`, `1 <= l < m`.
pub fn staircase_suite(max_m: usize, max_n: usize, field: FieldKind, cap: usize) -> Result<Vec<StaircaseReport>, SquareFreeError> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for n in m..=max_n {
            for l in 1..m {
                out.push(staircase_check(m, n, l, field, cap)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for (m, n, l) in [(2, 3, 1), (3, 4, 2), (2, 2, 1)] {
            let r = staircase_check(m, n, l, FieldKind::Rationals, 24).unwrap();
            assert!(r.verified, "{r:?}");
            assert_eq!(r.regularity, Some(n + 2 - m));
        }
    }
}
