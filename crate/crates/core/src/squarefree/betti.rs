use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::FieldKind;

use super::homology::reduced_homology;
use super::ideal::{size, VertexSet};
use super::{SquareFreeError, SquareFreeIdeal};

/// Default cap on the number of vertices in the support of an ideal whose
/// homology is computed.
pub const DEFAULT_VERTEX_CAP: usize = 24;

/// One nonzero entry `beta_{i,j}` of a Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
}

/// Graded Betti numbers of an ideal (not of its quotient): `beta_{0,j}`
/// counts minimal generators of degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldKind,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &rank)| BettiEntry { i, j, rank }).collect()
    }

    /// `max { j - i : beta_{i,j} != 0 }`; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Degrees of the minimal generators, ascending.
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.entries.keys().filter(|&&(i, _)| i == 0).map(|&(_, j)| j).collect()
    }

    /// All generators in one degree `d` and regularity `d`.
    pub fn is_linear(&self) -> bool {
        match self.generator_degrees().as_slice() {
            [d] => self.regularity() == Some(*d),
            _ => false,
        }
    }

    /// The JSON form: the field and a list of `{i, j, rank}` triples.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "field": self.field, "entries": self.entries() })
    }
}

fn check_cap(ideal: &SquareFreeIdeal, cap: usize) -> Result<(), SquareFreeError> {
    let count = size(ideal.support());
    if count > cap {
        Err(SquareFreeError::VertexCap { count, cap })
    } else {
        Ok(())
    }
}

/// Unions of generator supports (the atoms and joins of the lcm lattice).
fn lcm_lattice(gens: &[VertexSet]) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = gens.iter().copied().collect();
    let mut frontier: Vec<VertexSet> = seen.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for &g in gens {
                let u = s | g;
                if u != s && seen.insert(u) {
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<VertexSet> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Graded Betti numbers by Hochster's formula in its upper-Koszul form:
/// `beta_{i,sigma} = dim H~_{i-1}(K^sigma)`, where `K^sigma` is generated by
/// the faces `sigma \ g` for generators `g` inside `sigma`. Only degrees in
/// the lcm lattice are visited.
pub fn betti_numbers(ideal: &SquareFreeIdeal, field: FieldKind) -> Result<BettiTable, SquareFreeError> {
    betti_numbers_capped(ideal, field, DEFAULT_VERTEX_CAP)
}

pub fn betti_numbers_capped(
    ideal: &SquareFreeIdeal,
    field: FieldKind,
    cap: usize,
) -> Result<BettiTable, SquareFreeError> {
    check_cap(ideal, cap)?;
    let gens = ideal.generators();
    let lattice = lcm_lattice(gens);
    let per_degree: Vec<Vec<(usize, usize)>> = lattice
        .par_iter()
        .map(|&sigma| {
            let facets: Vec<VertexSet> = gens.iter().filter(|&&g| g & !sigma == 0).map(|&g| sigma & !g).collect();
            let h = reduced_homology(&facets, field);
            // h[d + 1] = dim H~_d, and H~_{i-1} gives beta_i
            h.iter().enumerate().filter(|(_, &r)| r > 0).map(|(i, &r)| (i, r)).collect()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (sigma, ranks) in lattice.iter().zip(per_degree) {
        for (i, r) in ranks {
            *entries.entry((i, size(*sigma))).or_insert(0) += r;
        }
    }
    Ok(BettiTable { field, entries })
}

/// Castelnuovo-Mumford regularity of the ideal.
pub fn regularity(ideal: &SquareFreeIdeal, field: FieldKind) -> Result<usize, SquareFreeError> {
    betti_numbers(ideal, field)?.regularity().ok_or(SquareFreeError::Degenerate)
}

pub fn has_linear_resolution(ideal: &SquareFreeIdeal, field: FieldKind) -> Result<bool, SquareFreeError> {
    Ok(betti_numbers(ideal, field)?.is_linear())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variable::Variable;

    const Q: FieldKind = FieldKind::Rationals;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
        let vs: Vec<Variable> = (1..=n).map(|j| Variable::x(1, j)).collect();
        let gens: Vec<Vec<Variable>> = gens.iter().map(|g| g.iter().map(|&j| Variable::x(1, j)).collect()).collect();
        SquareFreeIdeal::from_generators(&vs, &gens).unwrap()
    }

    fn table(t: &BettiTable) -> Vec<(usize, usize, usize)> {
        t.entries().iter().map(|e| (e.i, e.j, e.rank)).collect()
    }

    #[test]
    fn principal() {
        let t = betti_numbers(&ideal(2, &[&[1, 2]]), Q).unwrap();
        assert_eq!(table(&t), vec![(0, 2, 1)]);
    }

    #[test]
    fn triangle_edges() {
        let t = betti_numbers(&ideal(3, &[&[1, 2], &[2, 3], &[1, 3]]), Q).unwrap();
        assert_eq!(table(&t), vec![(0, 2, 3), (1, 3, 2)]);
        assert!(t.is_linear());
    }

    #[test]
    fn two_disjoint_products() {
        let i = ideal(4, &[&[1, 2], &[3, 4]]);
        let t = betti_numbers(&i, Q).unwrap();
        assert_eq!(table(&t), vec![(0, 2, 2), (1, 4, 1)]);
        assert_eq!(regularity(&i, Q).unwrap(), 3);
        assert!(!has_linear_resolution(&i, Q).unwrap());
    }

    #[test]
    fn json_triples() {
        let t = betti_numbers(&ideal(2, &[&[1], &[2]]), Q).unwrap();
        assert_eq!(
            t.to_json(),
            serde_json::json!({
                "field": {"kind": "rationals"},
                "entries": [{"i": 0, "j": 1, "rank": 2}, {"i": 1, "j": 2, "rank": 1}]
            })
        );
    }

    #[test]
    fn cap_enforced() {
        let gens: Vec<Vec<usize>> = (1..=13).map(|j| vec![2 * j - 1, 2 * j]).collect();
        let refs: Vec<&[usize]> = gens.iter().map(|g| g.as_slice()).collect();
        let i = ideal(26, &refs);
        assert_eq!(betti_numbers(&i, Q), Err(SquareFreeError::VertexCap { count: 26, cap: 24 }));
    }
}
