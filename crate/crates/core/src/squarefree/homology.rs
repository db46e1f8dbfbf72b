//! Reduced simplicial homology of complexes given by their facets, with
//! exact ranks over the rationals or a prime field.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::FieldKind;

use super::ideal::{members, size, VertexSet};

/// Reduced Betti numbers: entry `d + 1` is the rank of the reduced homology
/// in dimension `d`, for `d = -1 ..= dim`. The void complex (no faces at
/// all) yields an empty vector.
pub(crate) fn reduced_homology(facets: &[VertexSet], field: FieldKind) -> Vec<usize> {
    let facets = maximal_sets(facets);
    if facets.is_empty() {
        return Vec::new();
    }
    let top = facets.iter().map(|&f| size(f)).max().unwrap_or(0);
    let common = facets.iter().fold(!0u128, |a, &f| a & f);
    if common != 0 {
        // a cone is acyclic
        return vec![0; top + 1];
    }
    let levels = faces_by_size(&facets, top);
    let index: Vec<HashMap<VertexSet, u32>> = levels
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect())
        .collect();

    // rank[k] = rank of the boundary from faces of size k to faces of size k - 1
    let mut rank = vec![0usize; top + 2];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..=top).rev() {
        let skip = std::mem::take(&mut cleared);
        let columns: Vec<Vec<(u32, i64)>> = levels[k]
            .iter()
            .enumerate()
            .map(|(c, &face)| if skip.get(c).copied().unwrap_or(false) { Vec::new() } else { boundary(face, &index[k - 1]) })
            .collect();
        let (r, pivot_rows) = column_rank(columns, field);
        rank[k] = r;
        cleared = vec![false; levels[k - 1].len()];
        for row in pivot_rows {
            cleared[row as usize] = true;
        }
    }
    (0..=top).map(|k| levels[k].len() - rank[k] - rank[k + 1]).collect()
}

fn maximal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sorted.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !out.iter().any(|&f| s & !f == 0) {
            out.push(s);
        }
    }
    out
}

/// All faces grouped by cardinality, each level sorted ascending.
fn faces_by_size(facets: &[VertexSet], top: usize) -> Vec<Vec<VertexSet>> {
    let mut levels: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in facets {
        levels[size(f)].push(f);
    }
    for k in (1..=top).rev() {
        let mut below = std::mem::take(&mut levels[k - 1]);
        levels[k].sort_unstable();
        levels[k].dedup();
        for &f in &levels[k] {
            below.extend(members(f).map(|v| f & !(1u128 << v)));
        }
        levels[k - 1] = below;
    }
    levels[0].sort_unstable();
    levels[0].dedup();
    levels
}

/// Boundary of `face` as (row, sign) pairs sorted by row.
fn boundary(face: VertexSet, rows: &HashMap<VertexSet, u32>) -> Vec<(u32, i64)> {
    let mut col: Vec<(u32, i64)> = members(face)
        .enumerate()
        .map(|(pos, v)| {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            (rows[&(face & !(1u128 << v))], sign)
        })
        .collect();
    col.sort_unstable_by_key(|e| e.0);
    col
}

/// Rank of a sparse matrix given by columns, and the pivot row of every
/// independent column. Pivots sit at the largest row index of a column.
pub(crate) fn column_rank(columns: Vec<Vec<(u32, i64)>>, field: FieldKind) -> (usize, Vec<u32>) {
    match field {
        FieldKind::PrimeField(p) => rank_mod_p(columns, p as u64),
        FieldKind::Rationals => match rank_integer::<i64>(&columns) {
            Some(r) => r,
            None => rank_integer::<BigInt>(&columns).expect("big integers do not overflow"),
        },
    }
}

fn rank_mod_p(columns: Vec<Vec<(u32, i64)>>, p: u64) -> (usize, Vec<u32>) {
    let to_p = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(u32, u64)> = col.into_iter().map(|(r, v)| (r, to_p(v))).filter(|e| e.1 != 0).collect();
        while let Some(&(low, a)) = c.last() {
            match pivots.get(&low) {
                None => {
                    let inv = pow_mod(a, p - 2, p);
                    for e in c.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(low, c);
                    break;
                }
                // pivot columns are stored monic
                Some(pc) => c = axpy_mod(&c, pc, p - a, p),
            }
        }
    }
    let rows: Vec<u32> = pivots.keys().copied().collect();
    (rows.len(), rows)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `c + k * pc` over `F_p`, dropping zeros.
fn axpy_mod(c: &[(u32, u64)], pc: &[(u32, u64)], k: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(c.len() + pc.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < pc.len() {
        let take_c = j >= pc.len() || (i < c.len() && c[i].0 < pc[j].0);
        let take_p = i >= c.len() || (j < pc.len() && pc[j].0 < c[i].0);
        if take_c {
            out.push(c[i]);
            i += 1;
        } else if take_p {
            out.push((pc[j].0, k * pc[j].1 % p));
            j += 1;
        } else {
            let v = (c[i].1 + k * pc[j].1) % p;
            if v != 0 {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Integer arithmetic for fraction-free elimination; `None` on overflow.
trait Exact: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn exact_div(&self, d: &Self) -> Self;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

/// Rank over the rationals by fraction-free column elimination with
/// content removal.
fn rank_integer<T: Exact>(columns: &[Vec<(u32, i64)>]) -> Option<(usize, Vec<u32>)> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(u32, T)> = col.iter().filter(|e| e.1 != 0).map(|&(r, v)| (r, T::from_i64(v))).collect();
        while let Some((low, a)) = c.last().cloned() {
            match pivots.get(&low) {
                None => {
                    pivots.insert(low, c);
                    break;
                }
                Some(pc) => {
                    let b = pc.last().expect("stored pivots are non-empty").1.clone();
                    c = combine(&c, &b, pc, &a)?;
                    remove_content(&mut c);
                }
            }
        }
    }
    let rows: Vec<u32> = pivots.keys().copied().collect();
    Some((rows.len(), rows))
}

/// `b * c - a * pc`, dropping zeros.
fn combine<T: Exact>(c: &[(u32, T)], b: &T, pc: &[(u32, T)], a: &T) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(c.len() + pc.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < pc.len() {
        let take_c = j >= pc.len() || (i < c.len() && c[i].0 < pc[j].0);
        let take_p = i >= c.len() || (j < pc.len() && pc[j].0 < c[i].0);
        let (row, v) = if take_c {
            i += 1;
            (c[i - 1].0, T::cross(b, &c[i - 1].1, a, &zero)?)
        } else if take_p {
            j += 1;
            (pc[j - 1].0, T::cross(b, &zero, a, &pc[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (c[i - 1].0, T::cross(b, &c[i - 1].1, a, &pc[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Some(out)
}

fn remove_content<T: Exact>(c: &mut [(u32, T)]) {
    let Some(first) = c.first() else { return };
    let mut g = first.1.clone();
    for e in c.iter() {
        if g.is_unit() {
            return;
        }
        g = g.gcd(&e.1);
    }
    if !g.is_unit() && !g.is_zero() {
        for e in c.iter_mut() {
            e.1 = e.1.exact_div(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rationals;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().fold(0, |a, &v| a | 1u128 << v)
    }

    #[test]
    fn spheres_and_points() {
        // hollow triangle: H_1 = 1
        let circle = [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])];
        assert_eq!(reduced_homology(&circle, Q), vec![0, 0, 1]);
        // two points: reduced H_0 = 1
        assert_eq!(reduced_homology(&[set(&[0]), set(&[1])], Q), vec![0, 1]);
        // the complex {empty face}
        assert_eq!(reduced_homology(&[0], Q), vec![1]);
        assert!(reduced_homology(&[], Q).is_empty());
        // boundary of the tetrahedron
        let sphere: Vec<VertexSet> = (0..4).map(|v| set(&[0, 1, 2, 3]) & !(1 << v)).collect();
        assert_eq!(reduced_homology(&sphere, Q), vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<VertexSet> = tri.iter().map(|t| set(t)).collect();
        assert_eq!(reduced_homology(&facets, Q), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology(&facets, FieldKind::PrimeField(3)), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology(&facets, FieldKind::PrimeField(2)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn integer_fallback_matches() {
        let cols = vec![vec![(0, 3), (1, 5)], vec![(0, 7), (1, 11)], vec![(0, 1), (1, 1)]];
        let small = rank_integer::<i64>(&cols).unwrap();
        let big = rank_integer::<BigInt>(&cols).unwrap();
        assert_eq!(small.0, 2);
        assert_eq!(big.0, 2);
        let overflow = vec![vec![(0, i64::MAX), (1, 3)], vec![(0, i64::MAX - 1), (1, 5)]];
        assert!(rank_integer::<i64>(&overflow).is_none());
        assert_eq!(column_rank(overflow, Q).0, 2);
    }
}
