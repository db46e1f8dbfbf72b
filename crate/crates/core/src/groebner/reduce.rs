use crate::field::Field;
use crate::ring::{PolyRing, Polynomial};

use super::{GbBudget, GroebnerError};

/// Full normal form of `f` modulo `basis`: no term of the result is divisible
/// by a leading monomial of `basis`. Zero divisors in `basis` are ignored.
pub fn reduce<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    reduce_with_budget(ring, f, basis, &GbBudget::unbounded()).expect("unbounded reduction")
}

pub(crate) fn reduce_with_budget<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    budget: &GbBudget,
) -> Result<Polynomial<F::Elem>, GroebnerError> {
    let refs: Vec<&Polynomial<F::Elem>> = basis.iter().filter(|g| !g.is_zero()).collect();
    reduce_refs(ring, f, &refs, budget)
}

pub(crate) fn reduce_refs<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[&Polynomial<F::Elem>],
    budget: &GbBudget,
) -> Result<Polynomial<F::Elem>, GroebnerError> {
    let field = ring.field();
    // terms[..head] are final remainder terms; reduction only ever touches
    // terms below the current head, so the prefix is never disturbed.
    let mut terms: Vec<(F::Elem, crate::monomial::Monomial)> = f.terms().to_vec();
    let mut head = 0;
    let inverses: Vec<F::Elem> = basis
        .iter()
        .map(|g| field.inv(g.leading_coefficient().expect("nonzero divisor")).expect("nonzero lc"))
        .collect();
    while head < terms.len() {
        let (c, m) = &terms[head];
        let divisor = basis
            .iter()
            .position(|g| g.leading_monomial().expect("nonzero divisor").divides(m));
        match divisor {
            None => head += 1,
            Some(k) => {
                let g = basis[k];
                let q = g.leading_monomial().unwrap().quotient_of(m);
                let coef = field.mul(c, &inverses[k]);
                let tail = Polynomial::from_sorted_unchecked(terms.split_off(head));
                let reduced = ring.sub_scaled_shifted(&tail, &coef, &q, g);
                terms.extend(reduced.into_terms());
                budget.check_terms(terms.len())?;
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(terms))
}

/// `S(f, g) = (L/lt f) f - (L/lt g) g` with `L = lcm(lm f, lm g)`, both leading
/// coefficients scaled to one.
pub fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
) -> Result<Polynomial<F::Elem>, GroebnerError> {
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Err(GroebnerError::ZeroInput);
    };
    let field = ring.field();
    let l = lf.lcm(lg);
    let cf = field.inv(f.leading_coefficient().unwrap())?;
    let cg = field.inv(g.leading_coefficient().unwrap())?;
    let left = ring.mul_term(f, &cf, &lf.quotient_of(&l));
    Ok(ring.sub_scaled_shifted(&left, &cg, &lg.quotient_of(&l), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::variable::Variable;
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing<Rationals>> {
        let vars: Vec<_> = (1..=2)
            .flat_map(|i| (1..=3).flat_map(move |j| [Variable::x(i, j), Variable::y(i, j), Variable::z(i, j)]))
            .collect();
        PolyRing::matrix_lex(Rationals, &vars).unwrap()
    }

    #[test]
    fn trivial_reductions() {
        let r = ring();
        let x = r.parse("x[1,1]").unwrap();
        let x2 = r.parse("x[1,1]^2").unwrap();
        assert!(reduce(&r, &x2, std::slice::from_ref(&x)).is_zero());
        assert_eq!(reduce(&r, &x, &[x2]), x);
        let g = r.parse("z[1,1]x[1,2] - z[1,1]y[1,2] - z[1,2]x[1,1] + z[1,2]y[1,1]").unwrap();
        assert!(reduce(&r, &g, std::slice::from_ref(&g)).is_zero());
    }

    #[test]
    fn remainder_has_no_divisible_terms() {
        let r = ring();
        let basis = vec![r.parse("x[1,2] - y[1,1]").unwrap(), r.parse("y[1,1]^2 - z[1,1]").unwrap()];
        let f = r.parse("x[1,2]^3 + x[1,2]y[2,2] + 5").unwrap();
        let rem = reduce(&r, &f, &basis);
        for (_, m) in rem.terms() {
            for g in &basis {
                assert!(!g.leading_monomial().unwrap().divides(m));
            }
        }
        assert_eq!(reduce(&r, &rem, &basis), rem);
    }

    #[test]
    fn s_polynomial_of_self_and_zero() {
        let r = ring();
        let f = r.parse("x[1,1]y[1,1] - 1").unwrap();
        assert!(s_polynomial(&r, &f, &f).unwrap().is_zero());
        assert_eq!(s_polynomial(&r, &f, &r.zero()), Err(GroebnerError::ZeroInput));
    }

    #[test]
    fn adjacent_minor_s_polynomial_reduces_to_zero() {
        let r = ring();
        let m12 = r.parse("x[1,2]x[2,1] - x[1,1]x[2,2]").unwrap();
        let m13 = r.parse("x[1,3]x[2,1] - x[1,1]x[2,3]").unwrap();
        let m23 = r.parse("x[1,3]x[2,2] - x[1,2]x[2,3]").unwrap();
        let s = s_polynomial(&r, &m12, &m13).unwrap();
        assert!(!s.is_zero());
        assert!(reduce(&r, &s, &[m12, m13, m23]).is_zero());
    }
}
