use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::field::Field;
use crate::groebner::{eliminate, reduce, GbBudget, GbLog, Ideal, MonomialIdeal};
use crate::ring::{PolyRing, Polynomial};
use crate::variable::Variable;

use super::blocks::{block_det, rows, RowKind};
use super::families::{admissible_indices, predicted_monomial, unresolved_for, FamilyBuilder, FamilyElement, FamilyTag};
use super::{Instance, ReesError};

type Poly<F> = Polynomial<<F as Field>::Elem>;

/// Maximal minors of the leading `s1 x t1` block of X and of the leading
/// `s2 x t2` block of Y, in any ring containing those variables.
pub fn determinantal_ideals<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
) -> Result<(Vec<Poly<F>>, Vec<Poly<F>>), ReesError> {
    let xs = (1..=inst.t1)
        .combinations(inst.s1)
        .map(|c| block_det(ring, &rows(RowKind::X, 1, inst.s1), &c))
        .collect::<Result<Vec<_>, _>>()?;
    let ys = (1..=inst.t2)
        .combinations(inst.s2)
        .map(|c| block_det(ring, &rows(RowKind::Y, 1, inst.s2), &c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((xs, ys))
}

/// `x_ij - y_ij` for all `m * n` positions, row by row.
pub fn diagonal_generators<F: Field>(inst: &Instance, ring: &PolyRing<F>) -> Result<Vec<Poly<F>>, ReesError> {
    let mut out = Vec::with_capacity(inst.m * inst.n);
    for i in 1..=inst.m {
        for j in 1..=inst.n {
            out.push(ring.sub(&ring.var(Variable::x(i, j))?, &ring.var(Variable::y(i, j))?));
        }
    }
    Ok(out)
}

/// The Rees ideal as the kernel of `z_ij -> t (x_ij - y_ij)` modulo the two
/// determinantal ideals: eliminate `t` from `(I, J, z_ij - t (x_ij - y_ij))`.
/// The returned ideal carries its reduced Groebner basis under matrix-lex.
pub fn rees_ideal_oracle<F: Field>(
    inst: &Instance,
    field: F,
    budget: &GbBudget,
) -> Result<(Ideal<F>, GbLog), ReesError> {
    let ring = inst.elimination_ring(field)?;
    let (xs, ys) = determinantal_ideals(inst, &ring)?;
    let t = ring.var(Variable::T)?;
    let mut gens = xs;
    gens.extend(ys);
    for (i, j) in itertools::iproduct!(1..=inst.m, 1..=inst.n) {
        let d = ring.sub(&ring.var(Variable::x(i, j))?, &ring.var(Variable::y(i, j))?);
        gens.push(ring.sub(&ring.var(Variable::z(i, j))?, &ring.mul(&t, &d)));
    }
    let ideal = Ideal::new(ring, gens);
    Ok(eliminate(&ideal, &[Variable::T], budget)?)
}

/// Membership in the Rees ideal without elimination: substitute
/// `z_ij = t (x_ij - y_ij)` and reduce modulo the union of the maximal
/// minors, which is a Groebner basis under every term order.
pub struct SubstitutionCheck<F: Field> {
    ring: Arc<PolyRing<F>>,
    image: HashMap<Variable, Poly<F>>,
    minors: Vec<Poly<F>>,
}

impl<F: Field> SubstitutionCheck<F> {
    pub fn new(inst: &Instance, field: F) -> Result<Self, ReesError> {
        let mut vars = inst.variables();
        vars.push(Variable::T);
        let ring = PolyRing::matrix_lex(field, &vars)?;
        let (mut minors, ys) = determinantal_ideals(inst, &ring)?;
        minors.extend(ys);
        let t = ring.var(Variable::T)?;
        let mut image = HashMap::new();
        for (i, j) in itertools::iproduct!(1..=inst.m, 1..=inst.n) {
            let d = ring.sub(&ring.var(Variable::x(i, j))?, &ring.var(Variable::y(i, j))?);
            image.insert(Variable::z(i, j), ring.mul(&t, &d));
        }
        Ok(SubstitutionCheck { ring, image, minors })
    }

    pub fn contains(&self, source: &PolyRing<F>, f: &Poly<F>) -> Result<bool, ReesError> {
        let lifted = self.ring.map_from(source, f)?;
        let substituted = self.ring.substitute(&lifted, &self.image);
        Ok(reduce(&self.ring, &substituted, &self.minors).is_zero())
    }
}

/// One-shot form of [`SubstitutionCheck::contains`].
pub fn member_by_substitution<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
    f: &Poly<F>,
) -> Result<bool, ReesError> {
    SubstitutionCheck::new(inst, ring.field().clone())?.contains(ring, f)
}

/// Elements of one explicit family.
pub fn family_generators<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
    tag: FamilyTag,
) -> Result<Vec<FamilyElement<F::Elem>>, ReesError> {
    FamilyBuilder::new(*inst, ring).family(tag)
}

/// Union of all families (the candidate Groebner basis), in tag order.
pub fn candidate_basis<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
) -> Result<Vec<FamilyElement<F::Elem>>, ReesError> {
    if let Some(&tag) = unresolved_for(inst).first() {
        return Err(ReesError::UnresolvedFamily { tag, instance: *inst });
    }
    let builder = FamilyBuilder::new(*inst, ring);
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        out.extend(builder.family(tag)?);
    }
    Ok(out)
}

/// One of the twelve monomial families of the predicted initial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialFamily {
    pub number: usize,
    pub tag: FamilyTag,
    /// Each monomial as its list of variables.
    pub monomials: Vec<Vec<Variable>>,
}

/// The twelve monomial families, each the image of its index domain.
pub fn initial_families(inst: &Instance) -> Result<Vec<InitialFamily>, ReesError> {
    if let Some(&tag) = unresolved_for(inst).first() {
        return Err(ReesError::UnresolvedFamily { tag, instance: *inst });
    }
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        if tag == FamilyTag::F {
            continue;
        }
        let monomials = admissible_indices(inst, tag)?
            .iter()
            .map(|idx| predicted_monomial(inst, tag, idx))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(InitialFamily { number: tag.initial_family(), tag, monomials });
    }
    Ok(out)
}

/// Minimal generators of the sum of the twelve families.
pub fn predicted_initial_ideal<F: Field>(inst: &Instance, ring: &PolyRing<F>) -> Result<MonomialIdeal, ReesError> {
    let mut all = Vec::new();
    for fam in initial_families(inst)? {
        for vars in &fam.monomials {
            all.push(ring.monomial_from_vars(vars)?);
        }
    }
    Ok(MonomialIdeal::new(all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::initial_ideal;

    #[test]
    fn oracle_smallest_instance() {
        let inst = Instance::new(2, 2, 2, 2, 2, 2).unwrap();
        let (ideal, _) = rees_ideal_oracle(&inst, Rationals, &GbBudget::default()).unwrap();
        let ring = ideal.ring().clone();
        let init = initial_ideal(&ring, ideal.generators(), false).unwrap();
        let predicted = predicted_initial_ideal(&inst, &ring).unwrap();
        assert_eq!(init, predicted);
    }

    #[test]
    fn substitution_membership() {
        let inst = Instance::new(2, 2, 2, 2, 2, 2).unwrap();
        let ring = inst.ring(Rationals).unwrap();
        let check = SubstitutionCheck::new(&inst, Rationals).unwrap();
        for e in candidate_basis(&inst, &ring).unwrap() {
            assert!(check.contains(&ring, &e.value).unwrap(), "{} {:?}", e.tag, e.index);
        }
        assert!(!check.contains(&ring, &ring.parse("z[1,1]").unwrap()).unwrap());
    }

    #[test]
    fn oracle_agrees_across_fields() {
        let inst = Instance::new(2, 3, 2, 2, 2, 3).unwrap();
        let (q, _) = rees_ideal_oracle(&inst, Rationals, &GbBudget::default()).unwrap();
        let (p, _) = rees_ideal_oracle(&inst, PrimeField::new(32003).unwrap(), &GbBudget::default()).unwrap();
        let iq = initial_ideal(q.ring(), q.generators(), false).unwrap();
        let ip = initial_ideal(p.ring(), p.generators(), false).unwrap();
        assert_eq!(iq.generators(), ip.generators());
    }
}
