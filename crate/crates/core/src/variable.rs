//! Indexed variables `x[i,j]`, `y[i,j]`, `z[i,j]` and the auxiliary `t`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarFamily {
    X,
    Y,
    Z,
    T,
}

impl VarFamily {
    fn letter(self) -> char {
        match self {
            VarFamily::X => 'x',
            VarFamily::Y => 'y',
            VarFamily::Z => 'z',
            VarFamily::T => 't',
        }
    }

    /// Rank of the family in the matrix-lex order: z above x above y; `t` sits
    /// below everything (it only ever appears in elimination rings, where it
    /// is moved to the front explicitly).
    fn rank(self) -> u8 {
        match self {
            VarFamily::Z => 3,
            VarFamily::X => 2,
            VarFamily::Y => 1,
            VarFamily::T => 0,
        }
    }
}

/// A variable of `k[X, Y, Z]` (1-based indices) or the auxiliary `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub family: VarFamily,
    pub row: u16,
    pub col: u16,
}

impl Variable {
    pub const T: Variable = Variable { family: VarFamily::T, row: 0, col: 0 };

    pub fn x(row: usize, col: usize) -> Self {
        Self::indexed(VarFamily::X, row, col)
    }
    pub fn y(row: usize, col: usize) -> Self {
        Self::indexed(VarFamily::Y, row, col)
    }
    pub fn z(row: usize, col: usize) -> Self {
        Self::indexed(VarFamily::Z, row, col)
    }

    pub fn indexed(family: VarFamily, row: usize, col: usize) -> Self {
        assert!(family != VarFamily::T, "t carries no indices");
        assert!(row >= 1 && col >= 1, "indices are 1-based");
        Variable { family, row: row as u16, col: col as u16 }
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }
    pub fn col(&self) -> usize {
        self.col as usize
    }

    /// The same position in the other matrix (`x <-> y`); `z` and `t` are fixed.
    pub fn swap_xy(self) -> Self {
        let family = match self.family {
            VarFamily::X => VarFamily::Y,
            VarFamily::Y => VarFamily::X,
            other => other,
        };
        Variable { family, ..self }
    }
}

/// The matrix-lex variable order.
///
/// Within `x` (and `y`): `x[i,j] < x[l,k]` iff `i > l`, or `i = l` and `j < k`.
/// Within `z`: `z[i,j] < z[l,k]` iff `i > l`, or `i = l` and `j > k`.
pub fn compare_variables(a: &Variable, b: &Variable) -> Ordering {
    let fa = a.family.rank();
    let fb = b.family.rank();
    if fa != fb {
        return fa.cmp(&fb);
    }
    // smaller row index is larger in every family
    match b.row.cmp(&a.row) {
        Ordering::Equal => {}
        other => return other,
    }
    match a.family {
        VarFamily::Z => b.col.cmp(&a.col),
        _ => a.col.cmp(&b.col),
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            VarFamily::T => write!(f, "t"),
            fam => write!(f, "{}[{},{}]", fam.letter(), self.row, self.col),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse variable `{0}`")]
pub struct VariableParseError(pub String);

impl FromStr for Variable {
    type Err = VariableParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || VariableParseError(s.to_string());
        let s = s.trim();
        if s == "t" {
            return Ok(Variable::T);
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('x') => VarFamily::X,
            Some('y') => VarFamily::Y,
            Some('z') => VarFamily::Z,
            _ => return Err(err()),
        };
        let rest = chars.as_str();
        let inner = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(err)?;
        let (r, c) = inner.split_once(',').ok_or_else(err)?;
        let row: usize = r.trim().parse().map_err(|_| err())?;
        let col: usize = c.trim().parse().map_err(|_| err())?;
        if row == 0 || col == 0 || row > u16::MAX as usize || col > u16::MAX as usize {
            return Err(err());
        }
        Ok(Variable::indexed(family, row, col))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_ranks() {
        assert_eq!(compare_variables(&Variable::z(1, 1), &Variable::x(3, 7)), Ordering::Greater);
        assert_eq!(compare_variables(&Variable::x(3, 7), &Variable::y(1, 1)), Ordering::Greater);
    }

    #[test]
    fn within_family_orders() {
        assert_eq!(compare_variables(&Variable::x(1, 1), &Variable::x(1, 2)), Ordering::Less);
        assert_eq!(compare_variables(&Variable::x(2, 5), &Variable::x(1, 1)), Ordering::Less);
        assert_eq!(compare_variables(&Variable::z(1, 1), &Variable::z(1, 2)), Ordering::Greater);
        assert_eq!(compare_variables(&Variable::z(2, 1), &Variable::z(1, 3)), Ordering::Less);
        assert_eq!(compare_variables(&Variable::y(1, 2), &Variable::y(1, 1)), Ordering::Greater);
    }

    #[test]
    fn display_round_trip() {
        for v in [Variable::x(1, 2), Variable::y(3, 4), Variable::z(2, 10), Variable::T] {
            let s = v.to_string();
            assert_eq!(s.parse::<Variable>().unwrap(), v);
        }
        assert!("w[1,1]".parse::<Variable>().is_err());
        assert!("x[0,1]".parse::<Variable>().is_err());
    }
}
