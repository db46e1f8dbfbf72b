//! Stacked row blocks of the generic matrices and their determinants.

use crate::field::Field;
use crate::matrix::{determinant, PolyMatrix};
use crate::ring::{AlgebraError, PolyRing, Polynomial};
use crate::variable::Variable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RowKind {
    X,
    Y,
    Z,
    /// `x - y`
    Diff,
    /// `x` in columns `<= q`, `y` in columns `> q`
    Split(usize),
}

/// Row `index` (1-based) of the matrix selected by `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Row {
    pub kind: RowKind,
    pub index: usize,
}

/// Rows `lo..=hi` of one kind; empty when `lo > hi`.
pub(crate) fn rows(kind: RowKind, lo: usize, hi: usize) -> Vec<Row> {
    (lo..=hi).map(|index| Row { kind, index }).collect()
}

pub(crate) fn row(kind: RowKind, index: usize) -> Vec<Row> {
    vec![Row { kind, index }]
}

pub(crate) fn concat(parts: &[Vec<Row>]) -> Vec<Row> {
    parts.iter().flatten().copied().collect()
}

pub(crate) fn entry<F: Field>(
    ring: &PolyRing<F>,
    r: Row,
    col: usize,
) -> Result<Polynomial<F::Elem>, AlgebraError> {
    let (i, j) = (r.index, col);
    match r.kind {
        RowKind::X => ring.var(Variable::x(i, j)),
        RowKind::Y => ring.var(Variable::y(i, j)),
        RowKind::Z => ring.var(Variable::z(i, j)),
        RowKind::Diff => Ok(ring.sub(&ring.var(Variable::x(i, j))?, &ring.var(Variable::y(i, j))?)),
        RowKind::Split(q) if j <= q => ring.var(Variable::x(i, j)),
        RowKind::Split(_) => ring.var(Variable::y(i, j)),
    }
}

/// Determinant of the stacked rows against ascending columns.
pub(crate) fn block_det<F: Field>(
    ring: &PolyRing<F>,
    rows: &[Row],
    cols: &[usize],
) -> Result<Polynomial<F::Elem>, AlgebraError> {
    let entries = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| entry(ring, r, c)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let m = if entries.is_empty() { PolyMatrix::empty(cols.len()) } else { PolyMatrix::from_rows(entries)? };
    determinant(ring, &m)
}
