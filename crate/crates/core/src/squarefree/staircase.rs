//! Staircase ideals of a generic `m x n` matrix and their closed-form duals.

use crate::variable::Variable;

use super::{SquareFreeError, SquareFreeIdeal};

/// Chains `c_1 .. c_len` with `c_1 >= lo`, `c_len <= hi`, strictly increasing
/// except for the single weak step from `c_weak` to `c_{weak+1}`.
fn chains(len: usize, lo: i64, hi: i64, weak: usize) -> Vec<Vec<i64>> {
    fn rec(len: usize, hi: i64, weak: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let prev = *cur.last().expect("seeded with the first entry");
        let step = if cur.len() == weak { 0 } else { 1 };
        for c in prev + step..=hi {
            cur.push(c);
            rec(len, hi, weak, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        let mut cur = vec![first];
        rec(len, hi, weak, &mut cur, &mut out);
    }
    out
}

fn validate(m: usize, n: usize, l: usize) -> Result<(), SquareFreeError> {
    if m < 2 {
        return Err(SquareFreeError::Staircase("2 <= m"));
    }
    if m > n {
        return Err(SquareFreeError::Staircase("m <= n"));
    }
    if l == 0 || l >= m {
        return Err(SquareFreeError::Staircase("1 <= l <= m - 1"));
    }
    if m * n > super::MAX_VERTICES {
        return Err(SquareFreeError::Staircase("m * n <= 128"));
    }
    Ok(())
}

fn matrix_vertices(m: usize, n: usize) -> Vec<Variable> {
    itertools::iproduct!(1..=m, 1..=n).map(|(i, j)| Variable::x(i, j)).collect()
}

/// The ideal generated by `x[1,a_1] .. x[m,a_m]` over column sequences with
/// `a_1 < .. < a_l <= a_{l+1} < .. < a_m`.
pub fn staircase_ideal(m: usize, n: usize, l: usize) -> Result<SquareFreeIdeal, SquareFreeError> {
    validate(m, n, l)?;
    let gens: Vec<Vec<Variable>> = chains(m, 1, n as i64, l)
        .into_iter()
        .map(|a| a.iter().enumerate().map(|(i, &c)| Variable::x(i + 1, c as usize)).collect())
        .collect();
    SquareFreeIdeal::from_generators(&matrix_vertices(m, n), &gens)
}

/// The displayed product formula for the dual of [`staircase_ideal`]: for
/// thresholds `0 <= k_1 < .. < k_l <= k_{l+1} < .. < k_{m-1}` with
/// `k_m = n`, row `i` contributes the columns from `k_{i-1} + 2` to `k_i`,
/// except that row 1 starts at column 1 and row `l + 1` at `k_l + 1`.
pub fn staircase_dual_closed_form(m: usize, n: usize, l: usize) -> Result<SquareFreeIdeal, SquareFreeError> {
    validate(m, n, l)?;
    let gens: Vec<Vec<Variable>> = chains(m, 0, n as i64, l)
        .into_iter()
        .filter(|k| k[m - 1] == n as i64)
        .map(|k| {
            let mut g = Vec::new();
            for row in 1..=m {
                let start = match row {
                    1 => 1,
                    r if r == l + 1 => k[r - 2] + 1,
                    r => k[r - 2] + 2,
                };
                for col in start..=k[row - 1] {
                    g.push(Variable::x(row, col as usize));
                }
            }
            g
        })
        .collect();
    SquareFreeIdeal::from_generators(&matrix_vertices(m, n), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squarefree::alexander_dual;

    fn rendered(i: &SquareFreeIdeal) -> Vec<String> {
        i.generators().iter().map(|&g| i.render_generator(g)).collect()
    }

    #[test]
    fn two_by_two() {
        let i = staircase_ideal(2, 2, 1).unwrap();
        assert_eq!(rendered(&i), vec!["x[1,2]x[2,2]", "x[1,1]x[2,2]", "x[1,1]x[2,1]"]);
        let closed = staircase_dual_closed_form(2, 2, 1).unwrap();
        assert_eq!(closed, alexander_dual(&i).unwrap());
        assert_eq!(rendered(&closed), vec!["x[1,2]x[1,1]", "x[1,1]x[2,2]", "x[2,2]x[2,1]"]);
    }

    #[test]
    fn two_by_three_has_four_dual_generators() {
        let closed = staircase_dual_closed_form(2, 3, 1).unwrap();
        assert_eq!(closed.len(), 4);
        assert_eq!(closed.degrees(), vec![3]);
        assert_eq!(closed, alexander_dual(&staircase_ideal(2, 3, 1).unwrap()).unwrap());
    }

    #[test]
    fn parameter_ranges() {
        assert_eq!(staircase_ideal(3, 2, 1), Err(SquareFreeError::Staircase("m <= n")));
        assert_eq!(staircase_ideal(3, 4, 3), Err(SquareFreeError::Staircase("1 <= l <= m - 1")));
        assert_eq!(staircase_dual_closed_form(1, 4, 1), Err(SquareFreeError::Staircase("2 <= m")));
    }
}
