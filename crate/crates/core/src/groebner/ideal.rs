use std::sync::Arc;

use crate::field::Field;
use crate::monomial::Monomial;
use crate::ring::{PolyRing, Polynomial, TermOrder};
use crate::variable::Variable;

use super::buchberger::buchberger;
use super::certify::is_groebner_basis;
use super::reduce::reduce;
use super::{GbBudget, GbLog, GroebnerError};

/// Generators in a fixed ring, with a cached Groebner basis under the ring's order.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    generators: Vec<Polynomial<F::Elem>>,
    gb: Option<(TermOrder, Vec<Polynomial<F::Elem>>)>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Arc<PolyRing<F>>, generators: Vec<Polynomial<F::Elem>>) -> Self {
        Ideal { ring, generators, gb: None }
    }

    /// An ideal whose generators are already known to form a Groebner basis.
    pub fn from_groebner_basis(ring: Arc<PolyRing<F>>, basis: Vec<Polynomial<F::Elem>>) -> Self {
        let order = ring.order();
        Ideal { ring, generators: basis.clone(), gb: Some((order, basis)) }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.generators
    }

    pub fn cached_basis(&self) -> Option<&[Polynomial<F::Elem>]> {
        self.gb.as_ref().map(|(_, b)| b.as_slice())
    }

    /// Compute (or fetch) the reduced Groebner basis under the ring's order.
    pub fn groebner_basis(
        &mut self,
        budget: &GbBudget,
    ) -> Result<(&[Polynomial<F::Elem>], Option<GbLog>), GroebnerError> {
        let mut log = None;
        if self.gb.is_none() {
            let (basis, l) = buchberger(&self.ring, &self.generators, budget)?;
            self.gb = Some((self.ring.order(), basis));
            log = Some(l);
        }
        Ok((self.gb.as_ref().unwrap().1.as_slice(), log))
    }
}

/// Minimal generators of a monomial ideal, sorted decreasingly in the term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize and sort an arbitrary generator list.
    pub fn new(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = monomials.into_iter().collect();
        all.sort_by_key(|m| m.degree());
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in all {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.retain(|g| !m.divides(g));
                minimal.push(m);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Minimal generators of the leading-term ideal of `basis`. With `check`, the
/// Buchberger criterion is verified first.
pub fn initial_ideal<F: Field>(
    ring: &PolyRing<F>,
    basis: &[Polynomial<F::Elem>],
    check: bool,
) -> Result<MonomialIdeal, GroebnerError> {
    if check {
        let cert = is_groebner_basis(ring, basis);
        if let Some(f) = cert.failure {
            return Err(GroebnerError::NotGroebner(f.i, f.j));
        }
    }
    Ok(MonomialIdeal::new(basis.iter().filter_map(|p| p.leading_monomial().cloned())))
}

/// `I ∩ k[vars \ drop]`: Groebner basis under an elimination order with the
/// dropped block on top, keeping the elements free of dropped variables.
/// Returns the subring (under matrix-lex) with the eliminated ideal's reduced basis.
pub fn eliminate<F: Field>(
    ideal: &Ideal<F>,
    drop: &[Variable],
    budget: &GbBudget,
) -> Result<(Ideal<F>, GbLog), GroebnerError> {
    let source = ideal.ring();
    for v in drop {
        source.var_index(v)?;
    }
    let rest: Vec<Variable> =
        source.variables().iter().copied().filter(|v| !drop.contains(v)).collect();
    let elim_ring = PolyRing::elimination(source.field().clone(), drop, &rest)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| elim_ring.map_from(source, g))
        .collect::<Result<Vec<_>, _>>()?;
    let (basis, log) = buchberger(&elim_ring, &gens, budget)?;
    let sub_ring = PolyRing::matrix_lex(source.field().clone(), &rest)?;
    let kept = basis
        .iter()
        .filter(|p| !drop.iter().any(|v| elim_ring.involves(p, v)))
        .map(|p| sub_ring.map_from(&elim_ring, p))
        .collect::<Result<Vec<_>, _>>()?;
    // a lex basis restricted to an initial-segment complement is a basis of
    // the elimination ideal; re-sort under the subring's own order
    let kept = super::buchberger::interreduce(&sub_ring, kept);
    Ok((Ideal::from_groebner_basis(sub_ring, kept), log))
}

/// `f ∈ I`, decided by reduction against the (cached) Groebner basis.
pub fn ideal_membership<F: Field>(
    f: &Polynomial<F::Elem>,
    ideal: &mut Ideal<F>,
    budget: &GbBudget,
) -> Result<bool, GroebnerError> {
    let ring = ideal.ring().clone();
    let (basis, _) = ideal.groebner_basis(budget)?;
    Ok(reduce(&ring, f, basis).is_zero())
}
