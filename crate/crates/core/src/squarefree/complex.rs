use std::collections::HashSet;

use rayon::prelude::*;

use crate::field::FieldKind;
use crate::variable::Variable;

use super::betti::{betti_numbers_capped, DEFAULT_VERTEX_CAP};
use super::dual::alexander_dual;
use super::homology::reduced_homology;
use super::ideal::{bit, members, size, VertexSet};
use super::{SquareFreeError, SquareFreeIdeal};

/// A simplicial complex on a vertex list, stored by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Variable>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn vertices(&self) -> &[Variable] {
        &self.vertices
    }

    /// Facets sorted ascending as bitsets.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_variables(&self) -> Vec<Vec<Variable>> {
        self.facets.iter().map(|&f| members(f).map(|i| self.vertices[i]).collect()).collect()
    }

    /// `max |F| - 1`, or `-1` for the complex whose only face is empty.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|&f| size(f) as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let sizes: HashSet<usize> = self.facets.iter().map(|&f| size(f)).collect();
        sizes.len() <= 1
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Facets of the link of `face`, empty when `face` is not a face.
    pub fn link(&self, face: VertexSet) -> Vec<VertexSet> {
        self.facets.iter().filter(|&&f| face & !f == 0).map(|&f| f & !face).collect()
    }

    /// Minimal non-faces, the generators of the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let all: VertexSet = if self.vertices.len() == 128 { !0 } else { bit(self.vertices.len()) - 1 };
        let mut out = Vec::new();
        // a minimal non-face is a non-face all of whose codimension-one
        // subsets are faces; grow from faces one vertex at a time
        let mut seen = HashSet::new();
        let mut stack: Vec<VertexSet> = vec![0];
        while let Some(face) = stack.pop() {
            if !seen.insert(face) {
                continue;
            }
            for v in members(all & !face) {
                let s = face | bit(v);
                if self.contains(s) {
                    stack.push(s);
                } else if members(s).all(|u| self.contains(s & !bit(u))) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The Stanley-Reisner complex of a square-free ideal: the sets containing
/// no generator. Facets are found by a direct search for maximal
/// independent sets, without going through the Alexander dual.
pub fn stanley_reisner_complex(ideal: &SquareFreeIdeal, cap: usize) -> Result<SimplicialComplex, SquareFreeError> {
    let n = ideal.nvertices();
    if n > cap {
        return Err(SquareFreeError::VertexCap { count: n, cap });
    }
    let gens = ideal.generators();
    let mut facets = Vec::new();
    grow(gens, n, 0, 0, &mut facets);
    facets.sort_unstable();
    Ok(SimplicialComplex { vertices: ideal.vertices().to_vec(), facets })
}

fn independent(gens: &[VertexSet], s: VertexSet) -> bool {
    !gens.iter().any(|&g| g & !s == 0)
}

/// Depth-first over vertices in order; a leaf is kept when no skipped
/// vertex could be added.
fn grow(gens: &[VertexSet], n: usize, next: usize, face: VertexSet, out: &mut Vec<VertexSet>) {
    if next == n {
        if (0..n).all(|v| face & bit(v) != 0 || !independent(gens, face | bit(v))) {
            out.push(face);
        }
        return;
    }
    // skipping `next` is only useful if some later choice can block it
    let with = face | bit(next);
    if independent(gens, with) {
        grow(gens, n, next + 1, with, out);
        let blockable = gens.iter().any(|&g| g & bit(next) != 0);
        if blockable {
            grow(gens, n, next + 1, face, out);
        }
    } else {
        grow(gens, n, next + 1, face, out);
    }
}

/// Reisner's criterion: the link of every face has reduced homology only
/// in its top dimension. Links of faces that are not intersections of
/// facets are cones, so only those intersections are visited.
pub fn reisner_cm(ideal: &SquareFreeIdeal, field: FieldKind) -> Result<bool, SquareFreeError> {
    reisner_cm_capped(ideal, field, DEFAULT_VERTEX_CAP)
}

pub fn reisner_cm_capped(ideal: &SquareFreeIdeal, field: FieldKind, cap: usize) -> Result<bool, SquareFreeError> {
    if ideal.is_empty() || ideal.is_unit() {
        return Err(SquareFreeError::Degenerate);
    }
    let restricted = restrict_to_support(ideal)?;
    let complex = stanley_reisner_complex(&restricted, cap)?;
    let facets = complex.facets();
    let mut faces: HashSet<VertexSet> = facets.iter().copied().collect();
    faces.insert(0);
    let mut frontier: Vec<VertexSet> = faces.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &f in facets {
                let c = a & f;
                if faces.insert(c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let faces: Vec<VertexSet> = faces.into_iter().collect();
    Ok(faces.par_iter().all(|&face| {
        let link = complex.link(face);
        let h = reduced_homology(&link, field);
        // h[d + 1] is dimension d; everything below the top must vanish
        h.len() < 2 || h[..h.len() - 1].iter().all(|&r| r == 0)
    }))
}

/// Eagon-Reiner: the quotient is Cohen-Macaulay iff the Alexander dual has
/// a linear resolution.
pub fn eagon_reiner_cm(ideal: &SquareFreeIdeal, field: FieldKind) -> Result<bool, SquareFreeError> {
    eagon_reiner_cm_capped(ideal, field, DEFAULT_VERTEX_CAP)
}

pub fn eagon_reiner_cm_capped(ideal: &SquareFreeIdeal, field: FieldKind, cap: usize) -> Result<bool, SquareFreeError> {
    let dual = alexander_dual(ideal)?;
    Ok(betti_numbers_capped(&dual, field, cap)?.is_linear())
}

/// The ideal on the vertices its generators use. Cone vertices change
/// neither Cohen-Macaulayness nor the Betti numbers.
pub fn restrict_to_support(ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal, SquareFreeError> {
    let used: Vec<Variable> = members(ideal.support()).map(|i| ideal.vertices()[i]).collect();
    ideal.with_vertices(&used)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rationals;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
        let vs: Vec<Variable> = (1..=n).map(|j| Variable::x(1, j)).collect();
        let gens: Vec<Vec<Variable>> = gens.iter().map(|g| g.iter().map(|&j| Variable::x(1, j)).collect()).collect();
        SquareFreeIdeal::from_generators(&vs, &gens).unwrap()
    }

    #[test]
    fn hollow_triangle_is_cm() {
        let i = ideal(3, &[&[1, 2, 3]]);
        let c = stanley_reisner_complex(&i, 24).unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.dimension(), 1);
        assert!(reisner_cm(&i, Q).unwrap());
        assert!(eagon_reiner_cm(&i, Q).unwrap());
    }

    #[test]
    fn two_disjoint_edges_are_not_cm() {
        // x1 x2 and x3 x4 are the edges; the ideal lists the non-edges
        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let c = stanley_reisner_complex(&i, 24).unwrap();
        assert!(c.is_pure());
        assert_eq!(c.minimal_nonfaces().len(), 4);
        assert!(!reisner_cm(&i, Q).unwrap());
        assert!(!eagon_reiner_cm(&i, Q).unwrap());
    }

    #[test]
    fn principal_is_cm() {
        assert!(eagon_reiner_cm(&ideal(2, &[&[1, 2]]), Q).unwrap());
        assert!(reisner_cm(&ideal(2, &[&[1, 2]]), Q).unwrap());
    }

    #[test]
    fn nonpure_fails_reisner() {
        // a triangle with a dangling edge
        let i = ideal(4, &[&[1, 4], &[2, 4]]);
        assert!(!stanley_reisner_complex(&i, 24).unwrap().is_pure());
        assert!(!reisner_cm(&i, Q).unwrap());
        assert!(!eagon_reiner_cm(&i, Q).unwrap());
    }
}
