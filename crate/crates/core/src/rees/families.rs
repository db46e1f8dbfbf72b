//! The explicit generator families of the Rees ideal, their index domains
//! and the leading monomial each index predicts.
//!
//! Every family is described once, by three functions sharing one index
//! layout: `candidates` proposes index tuples of the right shape,
//! [`check_index`] decides admissibility (the enumerator filters with it and
//! external validation calls it directly), and [`predicted_monomial`] maps
//! an index to the monomial listed for it in the initial-ideal families.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::ring::{PolyRing, Polynomial};
use crate::variable::Variable;

use super::blocks::{block_det, concat, row, rows, Row, RowKind};
use super::{Instance, ReesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    #[serde(rename = "minorX")]
    MinorX,
    #[serde(rename = "minorY")]
    MinorY,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "f_lk")]
    FLk,
    #[serde(rename = "U")]
    U,
    #[serde(rename = "W")]
    W,
    #[serde(rename = "W_pv")]
    WPv,
    #[serde(rename = "V")]
    V,
    #[serde(rename = "V_kw")]
    VKw,
    #[serde(rename = "H")]
    H,
    #[serde(rename = "I_lkq")]
    ILkq,
    #[serde(rename = "I_kw")]
    IKw,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 13] = [
        FamilyTag::MinorX,
        FamilyTag::MinorY,
        FamilyTag::G,
        FamilyTag::F,
        FamilyTag::FLk,
        FamilyTag::U,
        FamilyTag::W,
        FamilyTag::WPv,
        FamilyTag::V,
        FamilyTag::VKw,
        FamilyTag::H,
        FamilyTag::ILkq,
        FamilyTag::IKw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::MinorX => "minorX",
            FamilyTag::MinorY => "minorY",
            FamilyTag::G => "g",
            FamilyTag::F => "f",
            FamilyTag::FLk => "f_lk",
            FamilyTag::U => "U",
            FamilyTag::W => "W",
            FamilyTag::WPv => "W_pv",
            FamilyTag::V => "V",
            FamilyTag::VKw => "V_kw",
            FamilyTag::H => "H",
            FamilyTag::ILkq => "I_lkq",
            FamilyTag::IKw => "I_kw",
        }
    }

    pub fn parse(text: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.into_iter().find(|t| t.name() == text)
    }

    /// Name of the monomial family this tag feeds (`hX`, `hY`, `hg`, ...).
    /// `f` has none of its own.
    pub fn initial_name(self) -> Option<&'static str> {
        Some(match self {
            FamilyTag::MinorX => "hX",
            FamilyTag::MinorY => "hY",
            FamilyTag::G => "hg",
            FamilyTag::F => return None,
            FamilyTag::FLk => "hf",
            FamilyTag::U => "hU",
            FamilyTag::W => "hW",
            FamilyTag::WPv => "hW_pv",
            FamilyTag::V => "hV",
            FamilyTag::VKw => "hV_kw",
            FamilyTag::H => "hH",
            FamilyTag::ILkq => "hI",
            FamilyTag::IKw => "hI_kw",
        })
    }

    pub fn parse_initial(text: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.into_iter().find(|t| t.initial_name() == Some(text))
    }

    /// Number (1 to 12) of the initial-ideal family that this generator
    /// family feeds. `f` lands inside the `g` family.
    pub fn initial_family(self) -> usize {
        match self {
            FamilyTag::MinorX => 1,
            FamilyTag::MinorY => 2,
            FamilyTag::G | FamilyTag::F => 3,
            FamilyTag::FLk => 4,
            FamilyTag::U => 5,
            FamilyTag::W => 6,
            FamilyTag::WPv => 7,
            FamilyTag::V => 8,
            FamilyTag::VKw => 9,
            FamilyTag::H => 10,
            FamilyTag::ILkq => 11,
            FamilyTag::IKw => 12,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One explicit generator: its family, index tuple (layout in
/// [`CONSTRAINT_TABLE`]) and polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyElement<E> {
    pub tag: FamilyTag,
    pub index: Vec<usize>,
    pub value: Polynomial<E>,
}

/// Index layout and admissibility rules of one family, as enforced by
/// [`check_index`]. Column lists are 1-based.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConstraintRow {
    pub tag: FamilyTag,
    pub layout: &'static str,
    pub rules: &'static str,
}

/// `T` below is `min(t1, t2)`.
pub const CONSTRAINT_TABLE: &[ConstraintRow] = &[
    ConstraintRow { tag: FamilyTag::MinorX, layout: "c_1..c_s1", rules: "1 <= c_1 < .. < c_s1 <= t1" },
    ConstraintRow { tag: FamilyTag::MinorY, layout: "c_1..c_s2", rules: "1 <= c_1 < .. < c_s2 <= t2" },
    ConstraintRow {
        tag: FamilyTag::G,
        layout: "i, j, l, k",
        rules: "rows in 1..=m, columns in 1..=n, z[i,j] > z[l,k] (i < l, or i = l and j < k)",
    },
    ConstraintRow { tag: FamilyTag::F, layout: "c_1..c_s1", rules: "1 <= c_1 < .. < c_s1 <= T" },
    ConstraintRow {
        tag: FamilyTag::FLk,
        layout: "l, k, c_1..c_(s1+k-1)",
        rules: "1 <= l <= k <= s2, 1 <= c_1 < .. <= T",
    },
    ConstraintRow {
        tag: FamilyTag::U,
        layout: "p, q, c_1..c_s1",
        rules: "1 <= p <= s1, 1 <= q <= n, 1 <= c_1 < .. < c_s1 <= t1",
    },
    ConstraintRow {
        tag: FamilyTag::W,
        layout: "p, i, q, a_1..a_p, a_(s2+1)..a_s1, b_1..b_s2",
        rules: "1 <= i <= p <= s2 - 1, q <= n, t1 >= a_1 > .. > a_p > a_(s2+1) > .. > a_s1 >= 1, a_p <= q, \
                t2 >= b_1 > .. > b_s2 > a_(s2+1), b_(i+1) < a_p <= b_i",
    },
    ConstraintRow {
        tag: FamilyTag::WPv,
        layout: "(needs s2 >= 3)",
        rules: "empty for s2 = 2; unresolved for s2 >= 3",
    },
    ConstraintRow {
        tag: FamilyTag::V,
        layout: "l, k, q_l..q_k, a_1..a_(l-1), b_1..b_s1",
        rules: "1 <= l <= k <= s2 - 1, q_l < .. < q_k < b_s1 < .. < b_(k+2) < b_k < b_(k-1) < .. < b_1 \
                < a_(l-1) < .. < a_1 <= T, T < b_(k+1) <= t2 - k + 1",
    },
    ConstraintRow {
        tag: FamilyTag::VKw,
        layout: "(needs s2 >= 3)",
        rules: "empty for s2 = 2; unresolved for s2 >= 3",
    },
    ConstraintRow {
        tag: FamilyTag::H,
        layout: "l, k, q, c_1..c_(s1+k-1)",
        rules: "2 <= l <= k <= s2, q <= n, 1 <= c_1 < .. <= T, c_1 < q, between l-1 and s1+k-3 columns \
                exceed q, c_(k-l+2) <= q",
    },
    ConstraintRow {
        tag: FamilyTag::ILkq,
        layout: "(no admissible index)",
        rules: "every candidate monomial is divisible by an H monomial; the family contributes nothing",
    },
    ConstraintRow {
        tag: FamilyTag::IKw,
        layout: "(needs s2 >= 3)",
        rules: "empty for s2 = 2; unresolved for s2 >= 3",
    },
];

/// Families whose defining recursions only start at `s2 >= 3`.
pub fn unresolved_for(inst: &Instance) -> Vec<FamilyTag> {
    if inst.s2 >= 3 {
        vec![FamilyTag::WPv, FamilyTag::VKw, FamilyTag::IKw]
    } else {
        Vec::new()
    }
}

fn ensure(ok: bool, rule: &'static str) -> Result<(), &'static str> {
    if ok {
        Ok(())
    } else {
        Err(rule)
    }
}

fn increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

fn in_range(v: &[usize], hi: usize) -> bool {
    v.iter().all(|&c| c >= 1 && c <= hi)
}

fn columns(v: &[usize], len: usize, hi: usize) -> Result<(), &'static str> {
    ensure(v.len() == len, "wrong number of columns")?;
    ensure(increasing(v), "columns must increase")?;
    ensure(in_range(v, hi), "column out of range")
}

/// Split of a `W` index into its parts: `(p, i, q, a_top, a_tail, b)`.
struct WIndex<'a> {
    p: usize,
    i: usize,
    q: usize,
    top: &'a [usize],
    tail: &'a [usize],
    b: &'a [usize],
}

fn split_w<'a>(inst: &Instance, idx: &'a [usize]) -> Result<WIndex<'a>, &'static str> {
    ensure(idx.len() >= 3, "index too short")?;
    let (p, i, q) = (idx[0], idx[1], idx[2]);
    let ntail = inst.s1 - inst.s2;
    ensure(idx.len() == 3 + p + ntail + inst.s2, "wrong index length")?;
    let top = &idx[3..3 + p];
    let tail = &idx[3 + p..3 + p + ntail];
    let b = &idx[3 + p + ntail..];
    Ok(WIndex { p, i, q, top, tail, b })
}

struct VIndex<'a> {
    l: usize,
    k: usize,
    zcols: &'a [usize],
    xcols: &'a [usize],
    b: &'a [usize],
}

fn split_v<'a>(inst: &Instance, idx: &'a [usize]) -> Result<VIndex<'a>, &'static str> {
    ensure(idx.len() >= 2, "index too short")?;
    let (l, k) = (idx[0], idx[1]);
    ensure(l >= 1 && l <= k, "need 1 <= l <= k")?;
    ensure(idx.len() == 2 + (k - l + 1) + (l - 1) + inst.s1, "wrong index length")?;
    let zcols = &idx[2..2 + k - l + 1];
    let xcols = &idx[2 + k - l + 1..2 + k];
    let b = &idx[2 + k..];
    Ok(VIndex { l, k, zcols, xcols, b })
}

/// Admissibility of an index tuple, the single source of the index
/// constraints. The error names the violated rule.
pub fn check_index(inst: &Instance, tag: FamilyTag, idx: &[usize]) -> Result<(), ReesError> {
    check_inner(inst, tag, idx).map_err(|rule| ReesError::Index { tag, index: idx.to_vec(), rule })
}

fn check_inner(inst: &Instance, tag: FamilyTag, idx: &[usize]) -> Result<(), &'static str> {
    let Instance { m, n, s1, t1, s2, t2 } = *inst;
    let big_t = inst.common_width();
    match tag {
        FamilyTag::MinorX => columns(idx, s1, t1),
        FamilyTag::MinorY => columns(idx, s2, t2),
        FamilyTag::F => columns(idx, s1, big_t),
        FamilyTag::G => {
            ensure(idx.len() == 4, "wrong index length")?;
            let (i, j, l, k) = (idx[0], idx[1], idx[2], idx[3]);
            ensure((1..=m).contains(&i) && (1..=m).contains(&l), "row out of range")?;
            ensure((1..=n).contains(&j) && (1..=n).contains(&k), "column out of range")?;
            ensure(i < l || (i == l && j < k), "need z[i,j] > z[l,k]")
        }
        FamilyTag::FLk => {
            ensure(idx.len() >= 2, "index too short")?;
            let (l, k) = (idx[0], idx[1]);
            ensure(1 <= l && l <= k && k <= s2, "need 1 <= l <= k <= s2")?;
            columns(&idx[2..], s1 + k - 1, big_t)
        }
        FamilyTag::U => {
            ensure(idx.len() == 2 + s1, "wrong index length")?;
            ensure((1..=s1).contains(&idx[0]), "need 1 <= p <= s1")?;
            ensure((1..=n).contains(&idx[1]), "need 1 <= q <= n")?;
            columns(&idx[2..], s1, t1)
        }
        FamilyTag::W => {
            let w = split_w(inst, idx)?;
            ensure(1 <= w.i && w.i <= w.p && w.p < s2, "need 1 <= i <= p <= s2 - 1")?;
            ensure((1..=n).contains(&w.q), "need 1 <= q <= n")?;
            ensure(decreasing(w.top) && in_range(w.top, t1), "a_1 > .. > a_p within 1..=t1")?;
            ensure(decreasing(w.tail) && in_range(w.tail, t1), "tail columns decrease within 1..=t1")?;
            let ap = w.top[w.p - 1];
            ensure(w.tail.first().is_none_or(|&c| c < ap), "need a_(s2+1) < a_p")?;
            ensure(ap <= w.q, "need a_p <= q")?;
            ensure(decreasing(w.b) && in_range(w.b, t2), "b_1 > .. > b_s2 within 1..=t2")?;
            ensure(
                w.tail.first().is_none_or(|&c| c < w.b[s2 - 1]),
                "need a_(s2+1) < b_s2",
            )?;
            ensure(w.b[w.i] < ap && ap <= w.b[w.i - 1], "need b_(i+1) < a_p <= b_i")
        }
        FamilyTag::V => {
            let v = split_v(inst, idx)?;
            ensure(v.k < s2, "need k <= s2 - 1")?;
            let k = v.k;
            // chain rows: s1, .., k+2, k, k-1, .., 1 (ascending columns)
            let mut chain: Vec<usize> = v.zcols.to_vec();
            chain.extend((1..=s1).rev().filter(|&r| r != k + 1).map(|r| v.b[r - 1]));
            chain.extend(v.xcols.iter().rev());
            ensure(increasing(&chain), "chain q_l < .. < b_s1 < .. < b_1 < a_(l-1) < .. < a_1 broken")?;
            ensure(in_range(&chain, big_t), "chain columns must lie in 1..=T")?;
            let floating = v.b[k];
            ensure(floating > big_t && floating + k <= t2 + 1, "need T < b_(k+1) <= t2 - k + 1")?;
            Ok(())
        }
        FamilyTag::H => {
            ensure(idx.len() >= 3, "index too short")?;
            let (l, k, q) = (idx[0], idx[1], idx[2]);
            ensure(2 <= l && l <= k && k <= s2, "need 2 <= l <= k <= s2")?;
            ensure((1..=n).contains(&q), "need 1 <= q <= n")?;
            let cols = &idx[3..];
            columns(cols, s1 + k - 1, big_t)?;
            ensure(cols[0] < q, "need smallest column < q")?;
            let above = cols.iter().filter(|&&c| c > q).count();
            ensure(above + 1 >= l && above + 3 <= s1 + k, "between l-1 and s1+k-3 columns must exceed q")?;
            ensure(cols[k - l + 1] <= q, "need a column <= q outside the z block")
        }
        FamilyTag::WPv | FamilyTag::VKw | FamilyTag::IKw => {
            if s2 >= 3 {
                Err("recursive family unresolved for s2 >= 3")
            } else {
                Err("family is empty for s2 = 2")
            }
        }
        FamilyTag::ILkq => Err("family contributes no admissible index"),
    }
}

fn subsets(range: std::ops::RangeInclusive<usize>, k: usize) -> Vec<Vec<usize>> {
    range.combinations(k).collect()
}

fn desc_subsets(range: std::ops::RangeInclusive<usize>, k: usize) -> Vec<Vec<usize>> {
    range.combinations(k).map(|mut v| {
        v.reverse();
        v
    }).collect()
}

/// Index tuples of the right shape, before admissibility filtering.
fn candidates(inst: &Instance, tag: FamilyTag) -> Vec<Vec<usize>> {
    let Instance { m, n, s1, t1, s2, t2 } = *inst;
    let big_t = inst.common_width();
    let mut out = Vec::new();
    match tag {
        FamilyTag::MinorX => out = subsets(1..=t1, s1),
        FamilyTag::MinorY => out = subsets(1..=t2, s2),
        FamilyTag::F => out = subsets(1..=big_t, s1),
        FamilyTag::G => {
            for (i, j, l, k) in itertools::iproduct!(1..=m, 1..=n, 1..=m, 1..=n) {
                out.push(vec![i, j, l, k]);
            }
        }
        FamilyTag::FLk => {
            for l in 1..=s2 {
                for k in l..=s2 {
                    for c in subsets(1..=big_t, s1 + k - 1) {
                        out.push([vec![l, k], c].concat());
                    }
                }
            }
        }
        FamilyTag::U => {
            for p in 1..=s1 {
                for q in 1..=n {
                    for c in subsets(1..=t1, s1) {
                        out.push([vec![p, q], c].concat());
                    }
                }
            }
        }
        FamilyTag::W => {
            for p in 1..s2 {
                for i in 1..=p {
                    for q in 1..=n {
                        for top in desc_subsets(1..=t1, p) {
                            for tail in desc_subsets(1..=t1, s1 - s2) {
                                for b in desc_subsets(1..=t2, s2) {
                                    out.push([vec![p, i, q], top.clone(), tail.clone(), b].concat());
                                }
                            }
                        }
                    }
                }
            }
        }
        FamilyTag::V => {
            for k in 1..s2.min(s1) {
                for l in 1..=k {
                    for zc in subsets(1..=n, k - l + 1) {
                        for xc in desc_subsets(1..=n, l - 1) {
                            // b without b_(k+1), in chain order, then the floating b_(k+1)
                            for chain in subsets(1..=n, s1 - 1) {
                                for floating in 1..=t2 {
                                    let mut b = vec![0; s1];
                                    // chain is ascending and matches rows s1, .., k+2, k, .., 1
                                    let order: Vec<usize> =
                                        (1..=s1).rev().filter(|&r| r != k + 1).collect();
                                    for (c, r) in chain.iter().zip(order) {
                                        b[r - 1] = *c;
                                    }
                                    b[k] = floating;
                                    out.push([vec![l, k], zc.clone(), xc.clone(), b].concat());
                                }
                            }
                        }
                    }
                }
            }
        }
        FamilyTag::H => {
            for l in 2..=s2 {
                for k in l..=s2 {
                    for q in 1..=n {
                        for c in subsets(1..=big_t, s1 + k - 1) {
                            out.push([vec![l, k, q], c].concat());
                        }
                    }
                }
            }
        }
        FamilyTag::WPv | FamilyTag::VKw | FamilyTag::IKw | FamilyTag::ILkq => {}
    }
    out
}

/// All admissible index tuples of a family. Errors for the recursive
/// families when `s2 >= 3`.
pub fn admissible_indices(inst: &Instance, tag: FamilyTag) -> Result<Vec<Vec<usize>>, ReesError> {
    if unresolved_for(inst).contains(&tag) {
        return Err(ReesError::UnresolvedFamily { tag, instance: *inst });
    }
    Ok(candidates(inst, tag).into_iter().filter(|idx| check_inner(inst, tag, idx).is_ok()).collect())
}

/// The monomial the initial-ideal families list for this index (as a
/// variable list, one entry per factor).
pub fn predicted_monomial(inst: &Instance, tag: FamilyTag, idx: &[usize]) -> Result<Vec<Variable>, ReesError> {
    check_index(inst, tag, idx)?;
    let Instance { s1, s2, .. } = *inst;
    let mut out = Vec::new();
    let antidiagonal = |out: &mut Vec<Variable>, make: fn(usize, usize) -> Variable, first_row: usize, cols_asc: &[usize]| {
        // largest column on the first row
        for (off, &c) in cols_asc.iter().rev().enumerate() {
            out.push(make(first_row + off, c));
        }
    };
    match tag {
        FamilyTag::MinorX => antidiagonal(&mut out, Variable::x, 1, idx),
        FamilyTag::MinorY => antidiagonal(&mut out, Variable::y, 1, idx),
        FamilyTag::G => {
            out.push(Variable::z(idx[0], idx[1]));
            out.push(Variable::x(idx[2], idx[3]));
        }
        FamilyTag::F => {
            out.push(Variable::z(1, idx[0]));
            antidiagonal(&mut out, Variable::x, 2, &idx[1..]);
        }
        FamilyTag::FLk => {
            let (l, k) = (idx[0], idx[1]);
            f_monomial(&mut out, s1, l, k, &idx[2..]);
        }
        FamilyTag::U => {
            let (p, q) = (idx[0], idx[1]);
            out.push(Variable::z(p, q));
            let desc: Vec<usize> = idx[2..].iter().rev().copied().collect();
            for (r, &c) in desc[..p - 1].iter().enumerate() {
                out.push(Variable::x(r + 1, c));
            }
            let rest = &desc[p - 1..];
            match rest.iter().copied().find(|&c| c <= q) {
                Some(c) => {
                    out.push(Variable::x(p, c));
                    for (off, &d) in rest.iter().filter(|&&d| d != c).enumerate() {
                        out.push(Variable::y(p + 1 + off, d));
                    }
                }
                None => {
                    for (off, &d) in rest.iter().enumerate() {
                        out.push(Variable::y(p + off, d));
                    }
                }
            }
        }
        FamilyTag::W => {
            let w = split_w(inst, idx).expect("checked");
            out.push(Variable::z(w.p, w.q));
            for (r, &c) in w.top.iter().enumerate() {
                out.push(Variable::x(r + 1, c));
            }
            for (off, &c) in w.tail.iter().enumerate() {
                out.push(Variable::y(s2 + 1 + off, c));
            }
            // rows 1..i-1, then p+1, then i..p, then p+2..s2 take b_1 > b_2 > ..
            let order = (1..w.i).chain([w.p + 1]).chain(w.i..=w.p).chain(w.p + 2..=s2);
            for (r, &c) in order.zip(w.b) {
                out.push(Variable::y(r, c));
            }
        }
        FamilyTag::V => {
            let v = split_v(inst, idx).expect("checked");
            for (off, &c) in v.zcols.iter().enumerate() {
                out.push(Variable::z(v.l + off, c));
            }
            for (r, &c) in v.xcols.iter().enumerate() {
                out.push(Variable::x(r + 1, c));
            }
            for (r, &c) in v.b.iter().enumerate() {
                out.push(Variable::y(r + 1, c));
            }
        }
        FamilyTag::H => {
            let (l, k, q) = (idx[0], idx[1], idx[2]);
            let cols = &idx[3..];
            out.push(Variable::z(l - 1, q));
            let nz = k - l + 1;
            for (off, &c) in cols[..nz].iter().enumerate() {
                out.push(Variable::z(l + off, c));
            }
            let rest = &cols[nz..];
            let pivot = *rest.iter().rev().find(|&&c| c <= q).expect("checked");
            out.push(Variable::x(l - 1, pivot));
            let rest: Vec<usize> = rest.iter().copied().filter(|&c| c != pivot).collect();
            let y_rows: Vec<usize> = (1..=s1).rev().filter(|&r| r != k).collect();
            for (&c, r) in rest.iter().zip(&y_rows) {
                out.push(Variable::y(*r, c));
            }
            let x_rows = (1..l - 1).rev();
            for (&c, r) in rest[y_rows.len()..].iter().zip(x_rows) {
                out.push(Variable::x(r, c));
            }
        }
        FamilyTag::WPv | FamilyTag::VKw | FamilyTag::IKw | FamilyTag::ILkq => {
            unreachable!("no admissible index")
        }
    }
    Ok(out)
}

/// `z` rows `l..k` on the smallest columns, then `y` rows `s1, .., k+1,
/// k-1, .., 1`, then `x` rows `l-1, .., 1`, each on ascending columns.
fn f_monomial(out: &mut Vec<Variable>, s1: usize, l: usize, k: usize, cols: &[usize]) {
    let nz = k - l + 1;
    for (off, &c) in cols[..nz].iter().enumerate() {
        out.push(Variable::z(l + off, c));
    }
    let y_rows: Vec<usize> = (1..=s1).rev().filter(|&r| r != k).collect();
    for (&c, r) in cols[nz..].iter().zip(&y_rows) {
        out.push(Variable::y(*r, c));
    }
    for (&c, r) in cols[nz + y_rows.len()..].iter().zip((1..l).rev()) {
        out.push(Variable::x(r, c));
    }
}

/// Builder of family polynomials in `k[X, Y, Z]`.
pub struct FamilyBuilder<'a, F: Field> {
    inst: Instance,
    ring: &'a PolyRing<F>,
}

type Poly<F> = Polynomial<<F as Field>::Elem>;

impl<'a, F: Field> FamilyBuilder<'a, F> {
    pub fn new(inst: Instance, ring: &'a PolyRing<F>) -> Self {
        FamilyBuilder { inst, ring }
    }

    fn var(&self, v: Variable) -> Result<Poly<F>, ReesError> {
        Ok(self.ring.var(v)?)
    }

    fn det(&self, rows: &[Row], cols: &[usize]) -> Result<Poly<F>, ReesError> {
        Ok(block_det(self.ring, rows, cols)?)
    }

    fn diff(&self, i: usize, j: usize) -> Result<Poly<F>, ReesError> {
        Ok(self.ring.sub(&self.var(Variable::x(i, j))?, &self.var(Variable::y(i, j))?))
    }

    fn sign(&self, p: Poly<F>, positive: bool) -> Poly<F> {
        if positive {
            p
        } else {
            self.ring.neg(&p)
        }
    }

    /// `g_{ij,lk} = z_ij (x_lk - y_lk) - z_lk (x_ij - y_ij)`.
    pub fn g(&self, i: usize, j: usize, l: usize, k: usize) -> Result<Poly<F>, ReesError> {
        let r = self.ring;
        let a = r.mul(&self.var(Variable::z(i, j))?, &self.diff(l, k)?);
        let b = r.mul(&self.var(Variable::z(l, k))?, &self.diff(i, j)?);
        Ok(r.sub(&a, &b))
    }

    /// The `f` generators of the Rees ideal's presentation.
    pub fn f(&self, cols: &[usize]) -> Result<Poly<F>, ReesError> {
        let Instance { s1, s2, .. } = self.inst;
        let mut acc = self.ring.zero();
        for q in 1..=s2 {
            let rs = concat(&[row(RowKind::Z, q), rows(RowKind::Y, 1, q - 1), rows(RowKind::X, q + 1, s1)]);
            let d = self.sign(self.det(&rs, cols)?, q % 2 == 1);
            acc = self.ring.add(&acc, &d);
        }
        Ok(acc)
    }

    /// Signed row stacks whose determinants sum to `f^{l,k}`; `drop_x` removes
    /// one `X` row from every stack.
    fn f_lk_stacks(&self, l: usize, k: usize, drop_x: Option<usize>) -> Vec<(bool, Vec<Row>)> {
        let Instance { s1, s2, .. } = self.inst;
        let x_top: Vec<Row> = rows(RowKind::X, 1, l - 1)
            .into_iter()
            .filter(|r| Some(r.index) != drop_x)
            .collect();
        let mut out = Vec::new();
        for r in k..=s2 {
            let positive = r % 2 == 1;
            out.push((
                positive,
                concat(&[
                    rows(RowKind::Z, l, k - 1),
                    row(RowKind::Z, r),
                    x_top.clone(),
                    rows(RowKind::Y, 1, r - 1),
                    rows(RowKind::Y, r + 1, s1),
                ]),
            ));
            for u in r + 1..=s1 {
                out.push((
                    positive,
                    concat(&[
                        rows(RowKind::Z, l, k - 1),
                        row(RowKind::Diff, r),
                        x_top.clone(),
                        rows(RowKind::Y, 1, r - 1),
                        rows(RowKind::Y, r + 1, u - 1),
                        row(RowKind::Z, u),
                        rows(RowKind::X, u + 1, s1),
                    ]),
                ));
            }
        }
        out
    }

    fn sum_stacks(&self, stacks: &[(bool, Vec<Row>)], cols: &[usize]) -> Result<Poly<F>, ReesError> {
        let mut acc = self.ring.zero();
        for (positive, rs) in stacks {
            let d = self.det(rs, cols)?;
            acc = if *positive { self.ring.add(&acc, &d) } else { self.ring.sub(&acc, &d) };
        }
        Ok(acc)
    }

    pub fn f_lk(&self, l: usize, k: usize, cols: &[usize]) -> Result<Poly<F>, ReesError> {
        self.sum_stacks(&self.f_lk_stacks(l, k, None), cols)
    }

    /// `U_{p,q,cols}`: the split row `p` carries `x` up to column `q` and `y` beyond.
    pub fn u(&self, p: usize, q: usize, cols: &[usize]) -> Result<Poly<F>, ReesError> {
        let s1 = self.inst.s1;
        let r = self.ring;
        let d = self.diff(p, q)?;
        let head = rows(RowKind::X, 1, p - 1);
        let split = row(RowKind::Split(q), p);
        let mut acc = r.mul(
            &self.var(Variable::z(p, q))?,
            &self.det(&concat(&[head.clone(), split.clone(), rows(RowKind::Y, p + 1, s1)]), cols)?,
        );
        let other_rows: Vec<Row> =
            (1..=s1).filter(|&i| i != p).map(|index| Row { kind: RowKind::X, index }).collect();
        for (pos, &c) in cols.iter().enumerate() {
            if c <= q {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det(&other_rows, &rest)?;
            let t = r.mul(&r.mul(&d, &self.var(Variable::z(p, c))?), &minor);
            acc = if (p - 1 + pos).is_multiple_of(2) { r.add(&acc, &t) } else { r.sub(&acc, &t) };
        }
        for u in p + 1..=s1 {
            let rs = concat(&[
                head.clone(),
                split.clone(),
                rows(RowKind::Y, p + 1, u - 1),
                row(RowKind::Z, u),
                rows(RowKind::X, u + 1, s1),
            ]);
            acc = r.add(&acc, &r.mul(&d, &self.det(&rs, cols)?));
        }
        Ok(acc)
    }

    /// `base - sum(c_t * t)` with each `c_t` chosen so that the leading
    /// monomial of `t` cancels in the running difference.
    fn subtract_matched(&self, base: Poly<F>, terms: Vec<Poly<F>>) -> Poly<F> {
        let r = self.ring;
        let field = r.field();
        let mut acc = base;
        for t in terms {
            let Some(lm) = t.leading_monomial() else { continue };
            let lc = t.leading_coefficient().unwrap();
            let present = acc.terms().iter().find(|(_, m)| m == lm).map(|(c, _)| c.clone());
            let scale = match present {
                Some(c) => field.div(&c, lc).expect("nonzero leading coefficient"),
                None => field.one(),
            };
            acc = r.sub(&acc, &r.scale(&t, &scale));
        }
        acc
    }

    fn w(&self, idx: &[usize]) -> Result<Poly<F>, ReesError> {
        let Instance { s1, s2, .. } = self.inst;
        let w = split_w(&self.inst, idx).expect("checked");
        let r = self.ring;
        let asc = |v: &[usize]| -> Vec<usize> { v.iter().copied().sorted().collect() };
        let ap = w.top[w.p - 1];
        let m12_cols = asc(&[&w.top[..w.p - 1], w.tail].concat());
        let m12 = r.mul(
            &r.mul(&self.var(Variable::z(w.p, w.q))?, &self.var(Variable::x(w.p, ap))?),
            &self.det(&concat(&[rows(RowKind::X, 1, w.p - 1), rows(RowKind::Y, s2 + 1, s1)]), &m12_cols)?,
        );
        let base = r.mul(&m12, &self.det(&rows(RowKind::Y, 1, s2), &asc(w.b))?);
        let head = self.det(&rows(RowKind::Y, 1, w.i), &asc(&w.b[..w.i]))?;
        let lower = &w.b[w.i..];
        let mut terms = Vec::new();
        for chosen in lower.iter().copied().combinations(w.p - w.i) {
            let rest: Vec<usize> = lower.iter().copied().filter(|c| !chosen.contains(c)).collect();
            let mid = self.det(&rows(RowKind::Y, w.i + 1, w.p), &asc(&chosen))?;
            let u_cols = asc(&[w.top, &rest, w.tail].concat());
            let u = self.u(w.p, w.q, &u_cols)?;
            terms.push(r.mul(&r.mul(&head, &mid), &u));
        }
        Ok(self.subtract_matched(base, terms))
    }

    fn v(&self, idx: &[usize]) -> Result<Poly<F>, ReesError> {
        let Instance { s1, s2, .. } = self.inst;
        let big_t = self.inst.common_width();
        let v = split_v(&self.inst, idx).expect("checked");
        let r = self.ring;
        let tail = &v.b[s2..];
        let m12_cols: Vec<usize> = [v.zcols, v.xcols, tail].concat().into_iter().sorted().collect();
        let m12 = self.det(
            &concat(&[rows(RowKind::Z, v.l, v.k), rows(RowKind::X, 1, v.l - 1), rows(RowKind::Y, s2 + 1, s1)]),
            &m12_cols,
        )?;
        let head_b: Vec<usize> = v.b[..s2].iter().copied().sorted().collect();
        let base = r.mul(&m12, &self.det(&rows(RowKind::Y, 1, s2), &head_b)?);
        let mut terms = Vec::new();
        for &e in &v.b[v.k - 1..s2] {
            let cols: Vec<usize> = [v.zcols, v.xcols, &v.b[..s2], tail]
                .concat()
                .into_iter()
                .filter(|&c| c != e)
                .sorted()
                .collect();
            if cols.iter().any(|&c| c > big_t) {
                continue;
            }
            terms.push(r.mul(&self.var(Variable::y(v.k, e))?, &self.f_lk(v.l, v.k, &cols)?));
        }
        Ok(self.subtract_matched(base, terms))
    }

    fn h(&self, l: usize, k: usize, q: usize, cols: &[usize]) -> Result<Poly<F>, ReesError> {
        let r = self.ring;
        let base = r.mul(&self.var(Variable::z(l - 1, q))?, &self.f_lk(l, k, cols)?);
        let reduced = self.f_lk_stacks(l, k, Some(l - 1));
        let mut terms = Vec::new();
        for &c in cols.iter().filter(|&&c| c > q) {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let fbar = self.sum_stacks(&reduced, &rest)?;
            terms.push(r.mul(&self.g(l - 1, q, l - 1, c)?, &fbar));
        }
        Ok(self.subtract_matched(base, terms))
    }

    /// Polynomial of an admissible index.
    pub fn element(&self, tag: FamilyTag, idx: &[usize]) -> Result<FamilyElement<F::Elem>, ReesError> {
        check_index(&self.inst, tag, idx)?;
        let Instance { s1, s2, .. } = self.inst;
        let value = match tag {
            FamilyTag::MinorX => self.det(&rows(RowKind::X, 1, s1), idx)?,
            FamilyTag::MinorY => self.det(&rows(RowKind::Y, 1, s2), idx)?,
            FamilyTag::G => self.g(idx[0], idx[1], idx[2], idx[3])?,
            FamilyTag::F => self.f(idx)?,
            FamilyTag::FLk => self.f_lk(idx[0], idx[1], &idx[2..])?,
            FamilyTag::U => self.u(idx[0], idx[1], &idx[2..])?,
            FamilyTag::W => self.w(idx)?,
            FamilyTag::V => self.v(idx)?,
            FamilyTag::H => self.h(idx[0], idx[1], idx[2], &idx[3..])?,
            FamilyTag::WPv | FamilyTag::VKw | FamilyTag::IKw | FamilyTag::ILkq => {
                unreachable!("no admissible index")
            }
        };
        Ok(FamilyElement { tag, index: idx.to_vec(), value })
    }

    /// All elements of one family, in index order; zero polynomials are kept
    /// out.
    pub fn family(&self, tag: FamilyTag) -> Result<Vec<FamilyElement<F::Elem>>, ReesError> {
        let mut out = Vec::new();
        for idx in admissible_indices(&self.inst, tag)? {
            let e = self.element(tag, &idx)?;
            if !e.value.is_zero() {
                out.push(e);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn inst(m: usize, n: usize, s1: usize, t1: usize, s2: usize, t2: usize) -> Instance {
        Instance::new(m, n, s1, t1, s2, t2).unwrap()
    }

    #[test]
    fn tag_names_round_trip() {
        for t in FamilyTag::ALL {
            assert_eq!(FamilyTag::parse(t.name()), Some(t));
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.name()));
        }
        assert_eq!(CONSTRAINT_TABLE.len(), 13);
    }

    #[test]
    fn g_element_text() {
        let i = inst(2, 2, 2, 2, 2, 2);
        let ring = i.ring(Rationals).unwrap();
        let b = FamilyBuilder::new(i, &ring);
        let g = b.element(FamilyTag::G, &[1, 1, 1, 2]).unwrap();
        assert_eq!(
            ring.render(&g.value),
            "z[1,1]x[1,2] - z[1,1]y[1,2] - z[1,2]x[1,1] + z[1,2]y[1,1]"
        );
    }

    #[test]
    fn index_violations_are_named() {
        let i = inst(2, 3, 2, 2, 2, 3);
        let err = check_index(&i, FamilyTag::MinorX, &[1, 3]).unwrap_err();
        assert!(matches!(err, ReesError::Index { rule: "column out of range", .. }));
        let err = check_index(&i, FamilyTag::G, &[2, 1, 1, 1]).unwrap_err();
        assert!(matches!(err, ReesError::Index { rule: "need z[i,j] > z[l,k]", .. }));
    }

    #[test]
    fn family_sizes_small_instance() {
        let i = inst(2, 2, 2, 2, 2, 2);
        let count = |t| admissible_indices(&i, t).unwrap().len();
        assert_eq!(count(FamilyTag::MinorX), 1);
        assert_eq!(count(FamilyTag::G), 6);
        assert_eq!(count(FamilyTag::FLk), 1);
        assert_eq!(count(FamilyTag::V), 0);
        assert!(admissible_indices(&inst(3, 3, 3, 3, 3, 3), FamilyTag::VKw).is_err());
    }

    #[test]
    fn leading_monomials_match_predictions() {
        for i in [inst(2, 2, 2, 2, 2, 2), inst(2, 3, 2, 2, 2, 3), inst(2, 4, 2, 3, 2, 4)] {
            let ring = i.ring(Rationals).unwrap();
            let b = FamilyBuilder::new(i, &ring);
            for tag in FamilyTag::ALL {
                for e in b.family(tag).unwrap() {
                    let predicted = predicted_monomial(&i, tag, &e.index).unwrap();
                    let predicted = ring.monomial_from_vars(&predicted).unwrap();
                    assert_eq!(
                        e.value.leading_monomial(),
                        Some(&predicted),
                        "{i} {tag} {:?}: {}",
                        e.index,
                        ring.render(&e.value)
                    );
                }
            }
        }
    }
}
