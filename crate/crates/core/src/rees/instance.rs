use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::ring::{AlgebraError, PolyRing};
use crate::variable::Variable;

use super::ReesError;

/// Which way the two matrices were assigned after normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    AsGiven,
    /// The input's X-data and Y-data were exchanged. The Rees ideal is carried
    /// along by `x <-> y` (with `t -> -t`, `z` fixed), an isomorphism.
    Swapped,
}

/// Validated instance: `I` = maximal minors of the leading `s1 x t1` block
/// of X, `J` = maximal minors of the leading `s2 x t2` block of Y, inside
/// `m x n` generic matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Instance {
    pub m: usize,
    pub n: usize,
    pub s1: usize,
    pub t1: usize,
    pub s2: usize,
    pub t2: usize,
}

/// Normalized instance plus the record of how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedInstance {
    pub requested: Instance,
    pub instance: Instance,
    pub orientation: Orientation,
    pub notices: Vec<String>,
}

impl Instance {
    /// Validate `(m, n, s1, t1, s2, t2)` without normalizing.
    pub fn new(m: usize, n: usize, s1: usize, t1: usize, s2: usize, t2: usize) -> Result<Self, ReesError> {
        let checks: [(bool, &'static str); 8] = [
            (m >= 2, "2 <= m"),
            (m <= n, "m <= n"),
            (s1 >= 2, "2 <= s1"),
            (s1 <= t1, "s1 <= t1"),
            (t1 <= n, "t1 <= n"),
            (s2 >= 2 && s2 <= t2, "2 <= s2 <= t2"),
            (t2 <= n, "t2 <= n"),
            (s1 <= m && s2 <= m, if s1 > m { "s1 <= m" } else { "s2 <= m" }),
        ];
        for (ok, name) in checks {
            if !ok {
                return Err(ReesError::Constraint(name));
            }
        }
        if n > 16 {
            return Err(ReesError::Constraint("n <= 16 (engine limit)"));
        }
        Ok(Instance { m, n, s1, t1, s2, t2 })
    }

    /// Validate and normalize: `s1 >= s2`, and `t1 <= t2` when `s1 = s2`.
    pub fn build(m: usize, n: usize, s1: usize, t1: usize, s2: usize, t2: usize) -> Result<NormalizedInstance, ReesError> {
        let requested = Instance::new(m, n, s1, t1, s2, t2)?;
        let swap = s1 < s2 || (s1 == s2 && t1 > t2);
        let mut notices = Vec::new();
        let (instance, orientation) = if swap {
            let reason = if s1 < s2 { "s1 < s2" } else { "s1 = s2 and t1 > t2" };
            notices.push(format!(
                "swapped X and Y ({reason}): ({m},{n},{s1},{t1},{s2},{t2}) -> ({m},{n},{s2},{t2},{s1},{t1}); \
                 results are stated for the swapped instance, the Rees ideals correspond under x <-> y"
            ));
            (Instance { m, n, s1: s2, t1: t2, s2: s1, t2: t1 }, Orientation::Swapped)
        } else {
            (requested, Orientation::AsGiven)
        };
        if instance.s1 == instance.s2 {
            notices.push("s1 = s2: accepted (flagged, the regularity proof is written for s1 > s2)".into());
        }
        Ok(NormalizedInstance { requested, instance, orientation, notices })
    }

    /// Common width `min(t1, t2)` of the f-type families.
    pub fn common_width(&self) -> usize {
        self.t1.min(self.t2)
    }

    /// All `3mn` variables of `k[X, Y, Z]`.
    pub fn variables(&self) -> Vec<Variable> {
        let mut v = Vec::with_capacity(3 * self.m * self.n);
        for i in 1..=self.m {
            for j in 1..=self.n {
                v.push(Variable::x(i, j));
                v.push(Variable::y(i, j));
                v.push(Variable::z(i, j));
            }
        }
        v
    }

    pub fn ring<F: Field>(&self, field: F) -> Result<Arc<PolyRing<F>>, AlgebraError> {
        PolyRing::matrix_lex(field, &self.variables())
    }

    /// `k[X, Y, Z, t]` under the elimination order with `t` on top.
    pub fn elimination_ring<F: Field>(&self, field: F) -> Result<Arc<PolyRing<F>>, AlgebraError> {
        PolyRing::elimination(field, &[Variable::T], &self.variables())
    }

    /// Predicted common degree of the minimal generators of the dual of
    /// the initial ideal: `mn - 1 + t1 - (s1 - 1) + t2 - (s2 - 1)`.
    pub fn dual_degree_formula(&self) -> i64 {
        let (m, n, s1, t1, s2, t2) = self.as_i64();
        m * n - 1 + t1 - (s1 - 1) + t2 - (s2 - 1)
    }

    /// The base-case expression `1 + m*m - 1 + t2 - (s2 - 1)` appearing in
    /// the regularity argument; reported when it, rather than the stated
    /// formula, matches the computation.
    pub fn dual_degree_variant(&self) -> i64 {
        let (m, _, _, _, s2, t2) = self.as_i64();
        1 + m * m - 1 + t2 - (s2 - 1)
    }

    fn as_i64(&self) -> (i64, i64, i64, i64, i64, i64) {
        (
            self.m as i64,
            self.n as i64,
            self.s1 as i64,
            self.t1 as i64,
            self.s2 as i64,
            self.t2 as i64,
        )
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{},{})", self.m, self.n, self.s1, self.t1, self.s2, self.t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legal_instances() {
        assert!(Instance::build(2, 2, 2, 2, 2, 2).is_ok());
        assert!(Instance::build(2, 3, 2, 2, 2, 2).is_ok());
    }

    #[test]
    fn violated_inequality_is_named() {
        assert_eq!(Instance::build(2, 3, 3, 3, 2, 2).unwrap_err(), ReesError::Constraint("s1 <= m"));
        assert_eq!(Instance::build(2, 3, 2, 4, 2, 2).unwrap_err(), ReesError::Constraint("t1 <= n"));
        assert_eq!(Instance::build(3, 2, 2, 2, 2, 2).unwrap_err(), ReesError::Constraint("m <= n"));
    }

    #[test]
    fn normalization_swaps() {
        let a = Instance::build(3, 3, 2, 2, 3, 3).unwrap();
        assert_eq!(a.orientation, Orientation::Swapped);
        assert_eq!(a.instance, Instance { m: 3, n: 3, s1: 3, t1: 3, s2: 2, t2: 2 });
        let b = Instance::build(2, 3, 2, 3, 2, 2).unwrap();
        assert_eq!(b.orientation, Orientation::Swapped);
        assert_eq!(b.instance, Instance { m: 2, n: 3, s1: 2, t1: 2, s2: 2, t2: 3 });
        let c = Instance::build(2, 3, 2, 2, 2, 3).unwrap();
        assert_eq!(c.orientation, Orientation::AsGiven);
    }

    #[test]
    fn degree_formulas() {
        let i = Instance::new(2, 2, 2, 2, 2, 2).unwrap();
        assert_eq!(i.dual_degree_formula(), 5);
        assert_eq!(i.dual_degree_variant(), 5);
        let j = Instance::new(2, 3, 2, 2, 2, 2).unwrap();
        assert_eq!(j.dual_degree_formula(), 7);
        assert_eq!(j.dual_degree_variant(), 5);
    }
}
