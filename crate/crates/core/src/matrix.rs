//! Rectangular matrices of polynomials, submatrix selection and determinants.

use std::collections::HashMap;

use crate::field::Field;
use crate::ring::{AlgebraError, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<E>>,
}

impl<E: Clone> PolyMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<Polynomial<E>>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::Parse("ragged matrix rows".into()));
        }
        Ok(PolyMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    /// A `0 x cols` matrix (an empty block).
    pub fn empty(cols: usize) -> Self {
        PolyMatrix { rows: 0, cols, entries: Vec::new() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial<E> {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Polynomial<E>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Select rows and columns (0-based), keeping the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, AlgebraError> {
        for &r in rows {
            if r >= self.rows {
                return Err(AlgebraError::IndexOutOfRange { index: r + 1, bound: self.rows });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(AlgebraError::IndexOutOfRange { index: c + 1, bound: self.cols });
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.entry(r, c).clone());
            }
        }
        Ok(PolyMatrix { rows: rows.len(), cols: cols.len(), entries })
    }

    /// Stack blocks top to bottom; all blocks need the same column count.
    pub fn stack(blocks: &[PolyMatrix<E>]) -> Result<Self, AlgebraError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(AlgebraError::Parse("blocks with different widths".into()));
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries.swap(a * self.cols + c, b * self.cols + c);
        }
        out
    }
}

/// Determinant by Laplace expansion down the rows, memoized on the set of
/// columns still free. The empty matrix has determinant one.
pub fn determinant<F: Field>(
    ring: &PolyRing<F>,
    m: &PolyMatrix<F::Elem>,
) -> Result<Polynomial<F::Elem>, AlgebraError> {
    if m.rows != m.cols {
        return Err(AlgebraError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    assert!(n <= 24, "determinant size {n} too large for subset memoization");
    let mut memo: HashMap<u32, Polynomial<F::Elem>> = HashMap::new();
    Ok(minor_from(ring, m, 0, (1u32 << n) - 1, &mut memo))
}

/// Determinant of rows `row..n` against the column set `free`.
fn minor_from<F: Field>(
    ring: &PolyRing<F>,
    m: &PolyMatrix<F::Elem>,
    row: usize,
    free: u32,
    memo: &mut HashMap<u32, Polynomial<F::Elem>>,
) -> Polynomial<F::Elem> {
    if row == m.rows {
        return ring.one();
    }
    if let Some(p) = memo.get(&free) {
        return p.clone();
    }
    let mut acc = ring.zero();
    let mut sign_positive = true;
    for c in 0..m.cols {
        if free & (1 << c) == 0 {
            continue;
        }
        let e = m.entry(row, c);
        if !e.is_zero() {
            let rest = minor_from(ring, m, row + 1, free & !(1 << c), memo);
            let prod = ring.mul(e, &rest);
            acc = if sign_positive { ring.add(&acc, &prod) } else { ring.sub(&acc, &prod) };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(free, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::variable::Variable;
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing<Rationals>> {
        let mut vars = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                vars.push(Variable::x(i, j));
                vars.push(Variable::y(i, j));
                vars.push(Variable::z(i, j));
            }
        }
        PolyRing::matrix_lex(Rationals, &vars).unwrap()
    }

    fn generic_x(r: &PolyRing<Rationals>, rows: usize, cols: usize) -> PolyMatrix<num_rational::BigRational> {
        let grid = (1..=rows)
            .map(|i| (1..=cols).map(|j| r.var(Variable::x(i, j)).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(grid).unwrap()
    }

    #[test]
    fn one_by_one_and_empty() {
        let r = ring();
        let m = generic_x(&r, 1, 1);
        assert_eq!(r.render(&determinant(&r, &m).unwrap()), "x[1,1]");
        let e = PolyMatrix::empty(0);
        assert_eq!(determinant(&r, &e).unwrap(), r.one());
    }

    #[test]
    fn two_by_two_g_element() {
        let r = ring();
        let row1 = vec![r.var(Variable::z(1, 1)).unwrap(), r.var(Variable::z(1, 2)).unwrap()];
        let d = |i, j| r.sub(&r.var(Variable::x(i, j)).unwrap(), &r.var(Variable::y(i, j)).unwrap());
        let row2 = vec![d(1, 1), d(1, 2)];
        let m = PolyMatrix::from_rows(vec![row1, row2]).unwrap();
        let det = determinant(&r, &m).unwrap();
        assert_eq!(
            r.render(&det),
            "z[1,1]x[1,2] - z[1,1]y[1,2] - z[1,2]x[1,1] + z[1,2]y[1,1]"
        );
    }

    #[test]
    fn repeated_row_and_non_square() {
        let r = ring();
        let m = generic_x(&r, 2, 3);
        let rep = m.submatrix(&[0, 0], &[0, 2]).unwrap();
        assert!(determinant(&r, &rep).unwrap().is_zero());
        assert_eq!(
            determinant(&r, &m),
            Err(AlgebraError::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn submatrix_selection() {
        let r = ring();
        let m = generic_x(&r, 2, 3);
        assert_eq!(m.submatrix(&[0, 1], &[0, 1, 2]).unwrap(), m);
        let s = m.submatrix(&[1], &[0, 2]).unwrap();
        assert_eq!(s.row(0), &[r.var(Variable::x(2, 1)).unwrap(), r.var(Variable::x(2, 3)).unwrap()]);
        let empty = m.submatrix(&[], &[0, 1]).unwrap();
        assert_eq!((empty.nrows(), empty.ncols()), (0, 2));
        assert!(m.submatrix(&[2], &[0]).is_err());
    }

    #[test]
    fn three_by_three_matches_leibniz() {
        let r = ring();
        let m = generic_x(&r, 3, 3);
        let det = determinant(&r, &m).unwrap();
        assert_eq!(det.len(), 6);
        let swapped = determinant(&r, &m.swap_rows(0, 2)).unwrap();
        assert_eq!(swapped, r.neg(&det));
    }
}
