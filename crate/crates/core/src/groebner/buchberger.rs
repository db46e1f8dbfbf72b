use rayon::prelude::*;

use crate::field::Field;
use crate::monomial::Monomial;
use crate::ring::{PolyRing, Polynomial};

use super::reduce::{reduce_refs, s_polynomial};
use super::{BudgetKind, GbBudget, GbLog, GroebnerError};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

struct State<E> {
    polys: Vec<Polynomial<E>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<E: Clone> State<E> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn active_refs(&self) -> Vec<&Polynomial<E>> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    /// Gebauer-Moeller update after inserting the polynomial at `h`.
    fn update(&mut self, h: usize, log: &mut GbLog) {
        let lh = self.lm(h).clone();
        let candidates: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        let lcms: Vec<Monomial> = candidates.iter().map(|&g| lh.lcm(self.lm(g))).collect();

        // chain criterion among the new pairs, coprime ones always survive this step
        let mut kept: Vec<usize> = Vec::new();
        for (a, &g1) in candidates.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(g1));
            let dominated = || {
                candidates.iter().enumerate().skip(a + 1).any(|(b, _)| lcms[b].divides(&lcms[a]))
                    || kept.iter().any(|&b| lcms[b].divides(&lcms[a]))
            };
            if coprime || !dominated() {
                kept.push(a);
            } else {
                log.pairs_skipped_by_criteria += 1;
            }
        }
        // drop coprime pairs (first criterion); also drop duplicates with equal lcm
        let mut new_pairs: Vec<Pair> = Vec::new();
        for &a in &kept {
            let g = candidates[a];
            if lh.is_coprime(self.lm(g)) {
                log.pairs_skipped_by_criteria += 1;
                continue;
            }
            new_pairs.push(Pair { i: g, j: h, lcm: lcms[a].clone(), degree: lcms[a].degree() });
        }

        // old pairs made redundant by h
        let before = self.pairs.len();
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lh.lcm(lm(p.i)) != p.lcm && lh.lcm(lm(p.j)) != p.lcm)
        });
        log.pairs_skipped_by_criteria += (before - self.pairs.len()) as u64;
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the Gebauer-Moeller criteria. Returns the reduced
/// Groebner basis, each element normalized to its canonical associate.
///
/// S-pairs of equal lcm degree are reduced in parallel against a frozen
/// snapshot; insertions happen serially in a deterministic order.
pub fn buchberger<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Polynomial<F::Elem>],
    budget: &GbBudget,
) -> Result<(Vec<Polynomial<F::Elem>>, GbLog), GroebnerError> {
    let mut log = GbLog::default();
    let mut state = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut inputs: Vec<Polynomial<F::Elem>> =
        generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    inputs.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in inputs {
        let refs = state.active_refs();
        let h = reduce_refs(ring, &g, &refs, budget)?;
        if h.is_zero() {
            continue;
        }
        insert(ring, &mut state, h, &mut log);
    }

    while !state.pairs.is_empty() {
        let min_degree = state.pairs.iter().map(|p| p.degree).min().unwrap();
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
            state.pairs.drain(..).partition(|p| p.degree == min_degree);
        state.pairs = rest;
        batch.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));

        if let Some(limit) = budget.max_pairs {
            if log.pairs_processed + batch.len() as u64 > limit {
                return Err(GroebnerError::Budget { what: BudgetKind::Pairs, limit });
            }
        }
        log.pairs_processed += batch.len() as u64;

        let snapshot = state.active_refs();
        let polys = &state.polys;
        let remainders: Vec<Result<Polynomial<F::Elem>, GroebnerError>> = batch
            .par_iter()
            .map(|p| {
                let s = s_polynomial(ring, &polys[p.i], &polys[p.j])?;
                reduce_refs(ring, &s, &snapshot, budget)
            })
            .collect();
        drop(snapshot);

        for r in remainders {
            let r = r?;
            if r.is_zero() {
                log.zero_reductions += 1;
                continue;
            }
            let refs = state.active_refs();
            let h = reduce_refs(ring, &r, &refs, budget)?;
            if h.is_zero() {
                log.zero_reductions += 1;
                continue;
            }
            insert(ring, &mut state, h, &mut log);
        }
    }

    let active: Vec<Polynomial<F::Elem>> = state
        .polys
        .into_iter()
        .zip(state.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    let basis = interreduce(ring, active);
    log.final_basis_size = basis.len();
    Ok((basis, log))
}

fn insert<F: Field>(
    ring: &PolyRing<F>,
    state: &mut State<F::Elem>,
    h: Polynomial<F::Elem>,
    log: &mut GbLog,
) {
    let h = ring.normalize(h);
    state.polys.push(h);
    state.active.push(true);
    let idx = state.polys.len() - 1;
    state.update(idx, log);
    let size = state.active.iter().filter(|a| **a).count();
    log.basis_size_trace.push((log.pairs_processed, size));
}

/// Auto-reduce a Groebner basis: drop elements whose leading monomial is
/// divisible by another's, tail-reduce the rest, normalize, and sort by
/// decreasing leading monomial.
pub fn interreduce<F: Field>(
    ring: &PolyRing<F>,
    basis: Vec<Polynomial<F::Elem>>,
) -> Vec<Polynomial<F::Elem>> {
    let mut basis: Vec<Polynomial<F::Elem>> = basis.into_iter().filter(|p| !p.is_zero()).collect();
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().unwrap();
        if minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(p);
    }
    let unbounded = GbBudget::unbounded();
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial<F::Elem>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q).collect();
        let p = &minimal[k];
        let (lc, lm) = p.terms()[0].clone();
        let tail = Polynomial::from_sorted_unchecked(p.terms()[1..].to_vec());
        let tail = reduce_refs(ring, &tail, &others, &unbounded).expect("unbounded");
        let mut terms = vec![(lc, lm)];
        terms.extend(tail.into_terms());
        out.push(ring.normalize(Polynomial::from_sorted_unchecked(terms)));
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}
