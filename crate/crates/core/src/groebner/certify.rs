use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::ring::{PolyRing, Polynomial};

use super::reduce::{reduce_refs, s_polynomial};
use super::{BudgetKind, GbBudget, GroebnerError};

/// Outcome of the Buchberger criterion on a fixed generator list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GbCertificate {
    pub is_gb: bool,
    pub pairs_checked: u64,
    /// Pairs with coprime leading monomials (they reduce to zero by Buchberger's first criterion).
    pub pairs_skipped_coprime: u64,
    /// First failing pair in index order with the rendered nonzero remainder.
    pub failure: Option<FailingPair>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub remainder: String,
    pub remainder_leading_monomial: String,
}

/// Check that every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis<F: Field>(
    ring: &PolyRing<F>,
    basis: &[Polynomial<F::Elem>],
) -> GbCertificate {
    is_groebner_basis_within(ring, basis, &GbBudget::unbounded()).expect("unbounded check cannot exhaust")
}

/// [`is_groebner_basis`] under a budget: more non-coprime pairs than
/// `max_pairs`, or an intermediate remainder above `max_terms`, is reported
/// as exhaustion rather than as a verdict.
pub fn is_groebner_basis_within<F: Field>(
    ring: &PolyRing<F>,
    basis: &[Polynomial<F::Elem>],
    budget: &GbBudget,
) -> Result<GbCertificate, GroebnerError> {
    let refs: Vec<&Polynomial<F::Elem>> = basis.iter().filter(|p| !p.is_zero()).collect();
    let n = refs.len();
    let mut pairs = Vec::new();
    let mut skipped = 0u64;
    for j in 0..n {
        for i in 0..j {
            let li = refs[i].leading_monomial().unwrap();
            let lj = refs[j].leading_monomial().unwrap();
            if li.is_coprime(lj) {
                skipped += 1;
            } else {
                pairs.push((i, j));
            }
        }
    }
    if let Some(limit) = budget.max_pairs {
        if pairs.len() as u64 > limit {
            return Err(GroebnerError::Budget { what: BudgetKind::Pairs, limit });
        }
    }
    let outcome = pairs.par_iter().find_map_first(|&(i, j)| {
        let s = s_polynomial(ring, refs[i], refs[j]).expect("nonzero inputs");
        match reduce_refs(ring, &s, &refs, budget) {
            Err(e) => Some(Err(e)),
            Ok(r) if r.is_zero() => None,
            Ok(r) => Some(Ok(FailingPair {
                i,
                j,
                remainder_leading_monomial: ring.render_monomial(r.leading_monomial().unwrap()),
                remainder: ring.render(&r),
            })),
        }
    });
    let failure = outcome.transpose()?;
    Ok(GbCertificate {
        is_gb: failure.is_none(),
        pairs_checked: pairs.len() as u64,
        pairs_skipped_coprime: skipped,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::variable::Variable;

    #[test]
    fn coprime_leads_certify() {
        let r = PolyRing::matrix_lex(Rationals, &[Variable::x(1, 1), Variable::y(1, 1)]).unwrap();
        let g = vec![r.parse("x[1,1]").unwrap(), r.parse("y[1,1]").unwrap()];
        let cert = is_groebner_basis(&r, &g);
        assert!(cert.is_gb);
        assert_eq!(cert.pairs_skipped_coprime, 1);
    }

    #[test]
    fn leftover_constant_refutes() {
        let r = PolyRing::matrix_lex(Rationals, &[Variable::x(1, 1), Variable::y(1, 1)]).unwrap();
        let g = vec![r.parse("x[1,1]y[1,1] - 1").unwrap(), r.parse("x[1,1]").unwrap()];
        let cert = is_groebner_basis(&r, &g);
        assert!(!cert.is_gb);
        let f = cert.failure.unwrap();
        assert_eq!(f.remainder, "-1");
    }
}
