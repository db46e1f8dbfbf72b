use std::cmp::Ordering;

use crate::field::Field;
use crate::groebner::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use crate::variable::{compare_variables, Variable};

use super::SquareFreeError;

/// A set of vertices, bit `i` standing for the `i`-th vertex of its ideal.
pub type VertexSet = u128;

/// Hard limit of the bitset representation.
pub const MAX_VERTICES: usize = 128;

pub(crate) fn bit(i: usize) -> VertexSet {
    1u128 << i
}

/// Indices of the set bits, ascending.
pub(crate) fn members(mut s: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

pub(crate) fn size(s: VertexSet) -> usize {
    s.count_ones() as usize
}

/// Term-order comparison of square-free monomials over a vertex list sorted
/// decreasingly: the lowest differing vertex decides.
pub(crate) fn compare_sets(a: VertexSet, b: VertexSet) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        Ordering::Equal
    } else if a & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Inclusion-minimal elements, sorted decreasingly in the term order.
pub(crate) fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&g| g & !s == 0) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| compare_sets(*b, *a));
    out
}

/// Square-free monomial ideal on a fixed vertex list (sorted decreasingly
/// under matrix-lex), stored as the supports of its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeIdeal {
    vertices: Vec<Variable>,
    generators: Vec<VertexSet>,
}

impl SquareFreeIdeal {
    /// Supports are bitsets over `vertices`, which must already be sorted
    /// decreasingly. Non-minimal generators are dropped.
    pub(crate) fn from_sets(vertices: Vec<Variable>, supports: Vec<VertexSet>) -> Self {
        SquareFreeIdeal { vertices, generators: minimalize(supports) }
    }

    /// Build from generators given as variable lists. The vertex list is
    /// sorted; duplicates in it are rejected.
    pub fn from_generators(vertices: &[Variable], generators: &[Vec<Variable>]) -> Result<Self, SquareFreeError> {
        let mut vs = vertices.to_vec();
        vs.sort_by(|a, b| compare_variables(b, a));
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(SquareFreeError::DuplicateVertex);
        }
        if vs.len() > MAX_VERTICES {
            return Err(SquareFreeError::VertexCap { count: vs.len(), cap: MAX_VERTICES });
        }
        let mut sets = Vec::with_capacity(generators.len());
        for g in generators {
            let mut s: VertexSet = 0;
            for v in g {
                let i = vs.iter().position(|w| w == v).ok_or(SquareFreeError::UnknownVertex(*v))?;
                if s & bit(i) != 0 {
                    return Err(SquareFreeError::NotSquareFree(format!("{v}^2")));
                }
                s |= bit(i);
            }
            sets.push(s);
        }
        Ok(SquareFreeIdeal::from_sets(vs, sets))
    }

    /// Convert a monomial ideal of `ring`; every vertex of the ring is kept.
    pub fn from_monomial_ideal<F: Field>(ring: &PolyRing<F>, ideal: &MonomialIdeal) -> Result<Self, SquareFreeError> {
        if ring.nvars() > MAX_VERTICES {
            return Err(SquareFreeError::VertexCap { count: ring.nvars(), cap: MAX_VERTICES });
        }
        let mut sets = Vec::with_capacity(ideal.len());
        for m in ideal.generators() {
            if !m.is_square_free() {
                return Err(SquareFreeError::NotSquareFree(ring.render_monomial(m)));
            }
            sets.push(m.support().fold(0, |s, i| s | bit(i)));
        }
        Ok(SquareFreeIdeal::from_sets(ring.variables().to_vec(), sets))
    }

    /// The same ideal as a [`MonomialIdeal`] of `ring`, which must contain
    /// every vertex.
    pub fn to_monomial_ideal<F: Field>(&self, ring: &PolyRing<F>) -> Result<MonomialIdeal, SquareFreeError> {
        let mut out = Vec::with_capacity(self.generators.len());
        for &g in &self.generators {
            let mut exps = vec![0u16; ring.nvars()];
            for v in self.generator_variables(g) {
                exps[ring.var_index(&v)?] = 1;
            }
            out.push(Monomial::from_exponents(exps));
        }
        Ok(MonomialIdeal::new(out))
    }

    pub fn vertices(&self) -> &[Variable] {
        &self.vertices
    }

    pub fn nvertices(&self) -> usize {
        self.vertices.len()
    }

    /// Minimal generator supports, decreasing in the term order.
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The unit ideal has the empty set as a generator.
    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&0)
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VertexSet {
        self.generators.iter().fold(0, |a, &g| a | g)
    }

    /// Generator degrees, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.generators.iter().map(|&g| size(g)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Whether the square-free monomial with support `s` lies in the ideal.
    pub fn contains_set(&self, s: VertexSet) -> bool {
        self.generators.iter().any(|&g| g & !s == 0)
    }

    pub fn generator_variables(&self, g: VertexSet) -> Vec<Variable> {
        members(g).map(|i| self.vertices[i]).collect()
    }

    pub fn render_generator(&self, g: VertexSet) -> String {
        if g == 0 {
            return "1".to_string();
        }
        members(g).map(|i| self.vertices[i].to_string()).collect()
    }

    /// Exchange format: one generator per line, decreasing term order.
    pub fn to_exchange(&self) -> String {
        let mut out = String::new();
        for &g in &self.generators {
            out.push_str(&self.render_generator(g));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`SquareFreeIdeal::to_exchange`]. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_exchange(vertices: &[Variable], text: &str) -> Result<Self, SquareFreeError> {
        let mut gens = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parsed = parse_product(line).map_err(|message| SquareFreeError::Parse { line: no + 1, message })?;
            gens.push(parsed);
        }
        SquareFreeIdeal::from_generators(vertices, &gens)
    }

    /// [`SquareFreeIdeal::parse_exchange`] on exactly the variables that
    /// occur in `text`.
    pub fn parse_exchange_inferred(text: &str) -> Result<Self, SquareFreeError> {
        let mut seen: Vec<Variable> = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parsed = parse_product(line).map_err(|message| SquareFreeError::Parse { line: no + 1, message })?;
            for v in parsed {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        SquareFreeIdeal::parse_exchange(&seen, text)
    }

    /// The same generators on a different vertex list containing the support.
    pub fn with_vertices(&self, vertices: &[Variable]) -> Result<Self, SquareFreeError> {
        let gens: Vec<Vec<Variable>> = self.generators.iter().map(|&g| self.generator_variables(g)).collect();
        SquareFreeIdeal::from_generators(vertices, &gens)
    }
}

fn parse_product(text: &str) -> Result<Vec<Variable>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let end = rest.find(']').ok_or_else(|| format!("unterminated variable in `{text}`"))?;
        let v: Variable = rest[..=end].parse().map_err(|e| format!("{e}"))?;
        out.push(v);
        rest = &rest[end + 1..];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn row_vars(n: usize) -> Vec<Variable> {
        (1..=n).map(|j| Variable::x(1, j)).collect()
    }

    #[test]
    fn minimal_and_sorted() {
        let vs = row_vars(3);
        let i = SquareFreeIdeal::from_generators(
            &vs,
            &[vec![vs[2]], vec![vs[0], vs[1]], vec![vs[0], vs[2]]],
        )
        .unwrap();
        assert_eq!(i.to_exchange(), "x[1,3]\nx[1,2]x[1,1]\n");
    }

    #[test]
    fn inferred_vertices() {
        let i = SquareFreeIdeal::parse_exchange_inferred("# comment\nx[1,2]z[1,1]\n\ny[2,1]\n").unwrap();
        assert_eq!(i.nvertices(), 3);
        assert_eq!(i.len(), 2);
    }

    #[test]
    fn exchange_round_trip() {
        let vs = row_vars(4);
        let i = SquareFreeIdeal::parse_exchange(&vs, "x[1,1]x[1,3]\n\n# comment\nx[1,2] x[1,4]\n").unwrap();
        assert_eq!(SquareFreeIdeal::parse_exchange(&vs, &i.to_exchange()).unwrap(), i);
        assert!(matches!(
            SquareFreeIdeal::parse_exchange(&vs, "x[1,1]x[1,1]"),
            Err(SquareFreeError::NotSquareFree(_))
        ));
        assert!(matches!(
            SquareFreeIdeal::parse_exchange(&vs, "x[1,9]"),
            Err(SquareFreeError::UnknownVertex(_))
        ));
        assert!(matches!(SquareFreeIdeal::parse_exchange(&vs, "x[1,"), Err(SquareFreeError::Parse { line: 1, .. })));
    }

    #[test]
    fn monomial_ideal_round_trip() {
        let vs = row_vars(3);
        let ring = PolyRing::matrix_lex(Rationals, &vs).unwrap();
        let mono = MonomialIdeal::new(vec![
            ring.monomial_from_vars(&[vs[0], vs[1]]).unwrap(),
            ring.monomial_from_vars(&[vs[2]]).unwrap(),
        ]);
        let sf = SquareFreeIdeal::from_monomial_ideal(&ring, &mono).unwrap();
        assert_eq!(sf.to_monomial_ideal(&ring).unwrap(), mono);
        let square = MonomialIdeal::new(vec![ring.monomial_of(&[(vs[0], 2)]).unwrap()]);
        assert!(SquareFreeIdeal::from_monomial_ideal(&ring, &square).is_err());
    }

    #[test]
    fn set_order_matches_monomial_order() {
        let vs = row_vars(4);
        let ring = PolyRing::matrix_lex(Rationals, &vs).unwrap();
        let sets: Vec<VertexSet> = (1..16).collect();
        for &a in &sets {
            for &b in &sets {
                let ma = ring.monomial_from_vars(&members(a).map(|i| ring.variables()[i]).collect::<Vec<_>>()).unwrap();
                let mb = ring.monomial_from_vars(&members(b).map(|i| ring.variables()[i]).collect::<Vec<_>>()).unwrap();
                assert_eq!(compare_sets(a, b), ring.compare_monomials(&ma, &mb));
            }
        }
    }
}
