//! Randomized invariants of the algebra kernel, the Groebner layer, the
//! family builders and the square-free layer.

use std::collections::HashMap;
use std::sync::Arc;

use proptest::prelude::*;
use rees_cm::field::{Field, FieldKind, PrimeField, Rationals};
use rees_cm::groebner::{buchberger, initial_ideal, interreduce, is_groebner_basis, reduce, GbBudget};
use rees_cm::matrix::{determinant, PolyMatrix};
use rees_cm::monomial::Monomial;
use rees_cm::rees::{family_generators, FamilyTag, Instance};
use rees_cm::ring::{PolyRing, Polynomial};
use rees_cm::squarefree::{
    alexander_dual, betti_numbers, eagon_reiner_cm, is_minimal_cover, reisner_cm, SquareFreeIdeal,
};
use rees_cm::variable::Variable;

type Q = num_rational::BigRational;

const NVARS: usize = 6;

fn ring() -> Arc<PolyRing<Rationals>> {
    let vars: Vec<Variable> = (1..=2).flat_map(|i| (1..=3).map(move |j| Variable::x(i, j))).collect();
    PolyRing::matrix_lex(Rationals, &vars).unwrap()
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..3, NVARS).prop_map(Monomial::from_exponents)
}

fn polynomial() -> impl Strategy<Value = Vec<(i64, Monomial)>> {
    prop::collection::vec((-4i64..=4, monomial()), 1..6)
}

fn build(ring: &PolyRing<Rationals>, terms: &[(i64, Monomial)]) -> Polynomial<Q> {
    ring.from_terms(terms.iter().map(|(c, m)| (ring.field().from_i64(*c), m.clone())).collect())
}

fn minors(ring: &PolyRing<Rationals>) -> Vec<Polynomial<Q>> {
    ["x[1,1]x[2,2] - x[1,2]x[2,1]", "x[1,1]x[2,3] - x[1,3]x[2,1]", "x[1,2]x[2,3] - x[1,3]x[2,2]"]
        .iter()
        .map(|s| ring.parse(s).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn order_is_multiplicative(a in monomial(), b in monomial(), c in monomial()) {
        let r = ring();
        let before = r.compare_monomials(&a, &b);
        prop_assert_eq!(before, r.compare_monomials(&a.mul(&c), &b.mul(&c)));
    }

    #[test]
    fn leading_monomial_of_product(a in polynomial(), b in polynomial()) {
        let r = ring();
        let (pa, pb) = (build(&r, &a), build(&r, &b));
        prop_assume!(!pa.is_zero() && !pb.is_zero());
        let product = r.mul(&pa, &pb);
        let want = pa.leading_monomial().unwrap().mul(pb.leading_monomial().unwrap());
        prop_assert_eq!(product.leading_monomial(), Some(&want));
    }

    #[test]
    fn determinant_alternates(entries in prop::collection::vec(polynomial(), 9), a in 0usize..3, b in 0usize..3) {
        prop_assume!(a != b);
        let r = ring();
        let polys: Vec<Polynomial<Q>> = entries.iter().map(|t| build(&r, t)).collect();
        let rows: Vec<Vec<Polynomial<Q>>> = polys.chunks(3).map(|c| c.to_vec()).collect();
        let m = PolyMatrix::from_rows(rows).unwrap();
        let d = determinant(&r, &m).unwrap();
        let swapped = determinant(&r, &m.swap_rows(a, b)).unwrap();
        prop_assert_eq!(r.neg(&d), swapped);
    }

    #[test]
    fn determinant_is_linear_in_a_row(entries in prop::collection::vec(polynomial(), 9), extra in prop::collection::vec(polynomial(), 3)) {
        let r = ring();
        let polys: Vec<Polynomial<Q>> = entries.iter().map(|t| build(&r, t)).collect();
        let extra: Vec<Polynomial<Q>> = extra.iter().map(|t| build(&r, t)).collect();
        let with_row = |first: Vec<Polynomial<Q>>| {
            let mut rows = vec![first];
            rows.extend(polys[3..].chunks(3).map(|c| c.to_vec()));
            determinant(&r, &PolyMatrix::from_rows(rows).unwrap()).unwrap()
        };
        let summed: Vec<Polynomial<Q>> = polys[..3].iter().zip(&extra).map(|(p, e)| r.add(p, e)).collect();
        prop_assert_eq!(with_row(summed), r.add(&with_row(polys[..3].to_vec()), &with_row(extra)));
    }

    #[test]
    fn reduce_is_idempotent(f in polynomial()) {
        let r = ring();
        let g = minors(&r);
        let once = reduce(&r, &build(&r, &f), &g);
        prop_assert_eq!(reduce(&r, &once, &g), once);
    }

    #[test]
    fn buchberger_output_certifies(gens in prop::collection::vec(prop::collection::vec((-2i64..=2, prop::collection::vec(0u16..2, NVARS).prop_map(Monomial::from_exponents)), 1..3), 1..4)) {
        let r = ring();
        let polys: Vec<Polynomial<Q>> = gens.iter().map(|t| build(&r, t)).collect();
        let (basis, _) = buchberger(&r, &polys, &GbBudget::pairs(20_000)).unwrap();
        prop_assert!(is_groebner_basis(&r, &basis).is_gb);
        for p in &polys {
            prop_assert!(reduce(&r, p, &basis).is_zero());
        }
        // a redundant, unreduced basis of the same ideal has the same initial ideal
        let mut padded = basis.clone();
        padded.extend(polys.iter().cloned());
        let redundant = interreduce(&r, padded);
        prop_assert_eq!(initial_ideal(&r, &basis, false).unwrap(), initial_ideal(&r, &redundant, true).unwrap());
    }

    #[test]
    fn dual_is_an_involution_of_minimal_covers(sets in prop::collection::vec(1u8..=255, 1..8)) {
        let vs: Vec<Variable> = (1..=8).map(|j| Variable::x(1, j)).collect();
        let gens: Vec<Vec<Variable>> =
            sets.iter().map(|&s| (0..8).filter(|b| s >> b & 1 == 1).map(|b| vs[b]).collect()).collect();
        let ideal = SquareFreeIdeal::from_generators(&vs, &gens).unwrap();
        let dual = alexander_dual(&ideal).unwrap();
        prop_assert_eq!(alexander_dual(&dual).unwrap(), ideal.clone());
        for &c in dual.generators() {
            prop_assert!(is_minimal_cover(&ideal, c));
        }
        let q = FieldKind::Rationals;
        let reg = betti_numbers(&dual, q).unwrap().regularity();
        let pd = betti_numbers(&ideal, q).unwrap().projective_dimension();
        prop_assert_eq!(reg, pd.map(|p| p + 1));
        prop_assert_eq!(eagon_reiner_cm(&ideal, q).unwrap(), reisner_cm(&ideal, q).unwrap());
    }
}

/// Coefficients of a family built over QQ, reduced mod p, against the same
/// family built directly over GF(p).
fn fields_agree(inst: Instance, tag: FamilyTag) -> bool {
    let gf = PrimeField::new(32003).unwrap();
    let rq = inst.ring(Rationals).unwrap();
    let rp = inst.ring(gf).unwrap();
    let over_q = family_generators(&inst, &rq, tag).unwrap();
    let over_p = family_generators(&inst, &rp, tag).unwrap();
    over_q.len() == over_p.len()
        && over_q.iter().zip(&over_p).all(|(a, b)| {
            let reduced: Vec<(u32, Monomial)> =
                a.value.terms().iter().map(|(c, m)| (gf.reduce_rational(c).unwrap(), m.clone())).collect();
            a.index == b.index && reduced == b.value.terms().to_vec()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn prime_and_rational_families_agree(pick in 0usize..4, tag in prop::sample::select(FamilyTag::ALL.to_vec())) {
        let instances = [
            Instance::new(2, 3, 2, 2, 2, 3).unwrap(),
            Instance::new(2, 4, 2, 3, 2, 4).unwrap(),
            Instance::new(3, 3, 2, 3, 2, 3).unwrap(),
            Instance::new(3, 4, 3, 3, 2, 2).unwrap(),
        ];
        prop_assert!(fields_agree(instances[pick], tag));
    }
}

#[test]
fn g_vanishes_when_y_equals_x() {
    let inst = Instance::new(2, 4, 2, 4, 2, 4).unwrap();
    let r = inst.ring(Rationals).unwrap();
    let map: HashMap<Variable, Polynomial<Q>> = (1..=2)
        .flat_map(|i| (1..=4).map(move |j| (i, j)))
        .map(|(i, j)| (Variable::y(i, j), r.var(Variable::x(i, j)).unwrap()))
        .collect();
    let gs = family_generators(&inst, &r, FamilyTag::G).unwrap();
    assert!(!gs.is_empty());
    for g in gs {
        assert!(r.substitute(&g.value, &map).is_zero(), "{}", r.render(&g.value));
    }
}

#[test]
fn every_leading_monomial_is_square_free() {
    for inst in [Instance::new(2, 4, 2, 3, 2, 4).unwrap(), Instance::new(3, 4, 2, 4, 2, 4).unwrap()] {
        let r = inst.ring(Rationals).unwrap();
        let basis = rees_cm::rees::candidate_basis(&inst, &r).unwrap();
        for e in basis {
            assert!(e.value.leading_monomial().unwrap().is_square_free(), "{}{:?}", e.tag, e.index);
        }
    }
}
