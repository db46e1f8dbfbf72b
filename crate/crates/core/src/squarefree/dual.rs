use rayon::prelude::*;

use super::ideal::{bit, members, minimalize, VertexSet};
use super::{SquareFreeError, SquareFreeIdeal};

/// Minimal transversals (minimal vertex covers) of a hypergraph, by the
/// MMCS branch-and-bound of Murakami and Uno. Root branches run in parallel.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let edges = minimalize(edges.to_vec());
    let universe = edges.iter().fold(0, |a, &e| a | e);
    if edges.is_empty() {
        return vec![0];
    }
    // the root step unrolled so its branches can be spread over threads
    let first = pick_uncovered(&edges, 0, universe).expect("non-empty edge list");
    let choices: Vec<usize> = members(first & universe).collect();
    let mut branches = Vec::with_capacity(choices.len());
    let mut cand = universe & !first;
    for &v in &choices {
        branches.push((bit(v), cand));
        cand |= bit(v);
    }
    let mut out: Vec<VertexSet> = branches
        .into_par_iter()
        .flat_map_iter(|(s, cand)| {
            let mut found = Vec::new();
            search(&edges, s, cand, &mut found);
            found
        })
        .collect();
    out.sort_unstable();
    out
}

fn pick_uncovered(edges: &[VertexSet], s: VertexSet, cand: VertexSet) -> Option<VertexSet> {
    edges
        .iter()
        .filter(|&&e| e & s == 0)
        .min_by_key(|&&e| (e & cand).count_ones())
        .copied()
}

/// Every vertex of `s` still owns an edge that no other vertex of `s` hits.
fn all_critical(edges: &[VertexSet], s: VertexSet) -> bool {
    let mut critical: VertexSet = 0;
    for &e in edges {
        let hit = e & s;
        if hit != 0 && hit & (hit - 1) == 0 {
            critical |= hit;
            if critical == s {
                return true;
            }
        }
    }
    critical == s
}

fn search(edges: &[VertexSet], s: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
    if !all_critical(edges, s) {
        return;
    }
    let Some(f) = pick_uncovered(edges, s, cand) else {
        out.push(s);
        return;
    };
    let choices = f & cand;
    let mut cand = cand & !choices;
    for v in members(choices) {
        search(edges, s | bit(v), cand, out);
        cand |= bit(v);
    }
}

fn nondegenerate(ideal: &SquareFreeIdeal) -> Result<(), SquareFreeError> {
    if ideal.is_empty() || ideal.is_unit() {
        Err(SquareFreeError::Degenerate)
    } else {
        Ok(())
    }
}

/// The Alexander dual: the intersection of the primes generated by the
/// variables of each generator, read off as the minimal vertex covers of
/// the generator supports. The zero and unit ideals are rejected.
pub fn alexander_dual(ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal, SquareFreeError> {
    nondegenerate(ideal)?;
    Ok(SquareFreeIdeal::from_sets(ideal.vertices().to_vec(), minimal_transversals(ideal.generators())))
}

/// The Alexander dual computed by intersecting the prime components one
/// at a time. Exponential in the worst case; kept as an independent check.
pub fn dual_by_intersection(ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal, SquareFreeError> {
    nondegenerate(ideal)?;
    let mut acc: Vec<VertexSet> = vec![0];
    for &g in ideal.generators() {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for &m in &acc {
            if m & g != 0 {
                next.push(m);
            } else {
                next.extend(members(g).map(|v| m | bit(v)));
            }
        }
        acc = minimalize(next);
    }
    Ok(SquareFreeIdeal::from_sets(ideal.vertices().to_vec(), acc))
}

/// Intersection of two square-free ideals on the same vertex list.
pub fn intersect(a: &SquareFreeIdeal, b: &SquareFreeIdeal) -> Result<SquareFreeIdeal, SquareFreeError> {
    if a.vertices() != b.vertices() {
        return Err(SquareFreeError::VertexMismatch);
    }
    let mut sets = Vec::with_capacity(a.len() * b.len());
    for &g in a.generators() {
        for &h in b.generators() {
            sets.push(g | h);
        }
    }
    Ok(SquareFreeIdeal::from_sets(a.vertices().to_vec(), sets))
}

/// Whether `cover` meets every generator and no proper subset does.
pub fn is_minimal_cover(ideal: &SquareFreeIdeal, cover: VertexSet) -> bool {
    let gens = ideal.generators();
    gens.iter().all(|&g| g & cover != 0)
        && members(cover).all(|v| gens.iter().any(|&g| g & cover == bit(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variable::Variable;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
        let vs: Vec<Variable> = (1..=n).map(|j| Variable::x(1, j)).collect();
        let gens: Vec<Vec<Variable>> = gens.iter().map(|g| g.iter().map(|&j| Variable::x(1, j)).collect()).collect();
        SquareFreeIdeal::from_generators(&vs, &gens).unwrap()
    }

    #[test]
    fn principal_and_maximal() {
        assert_eq!(alexander_dual(&ideal(2, &[&[1, 2]])).unwrap(), ideal(2, &[&[1], &[2]]));
        assert_eq!(alexander_dual(&ideal(2, &[&[1], &[2]])).unwrap(), ideal(2, &[&[1, 2]]));
    }

    #[test]
    fn degenerate_rejected() {
        assert_eq!(alexander_dual(&ideal(2, &[])), Err(SquareFreeError::Degenerate));
        assert_eq!(alexander_dual(&ideal(2, &[&[]])), Err(SquareFreeError::Degenerate));
    }

    #[test]
    fn routes_agree_on_cycle() {
        // five-cycle edge ideal
        let c5 = ideal(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let a = alexander_dual(&c5).unwrap();
        assert_eq!(a, dual_by_intersection(&c5).unwrap());
        assert_eq!(a.len(), 5);
        assert!(a.generators().iter().all(|&c| is_minimal_cover(&c5, c)));
        assert_eq!(alexander_dual(&a).unwrap(), c5);
    }

    #[test]
    fn intersection_of_primes() {
        let p = ideal(3, &[&[1], &[2]]);
        let q = ideal(3, &[&[2], &[3]]);
        assert_eq!(intersect(&p, &q).unwrap(), ideal(3, &[&[2], &[1, 3]]));
    }
}
