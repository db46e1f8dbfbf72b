//! Polynomial rings over an exact field with a fixed variable enumeration and
//! term order, plus the bit-exact text form of polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::monomial::Monomial;
use crate::variable::{compare_variables, VarFamily, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable {0} is not in the ring")]
    UnknownVariable(Variable),
    #[error("operands live over different fields or variable sets")]
    RingMismatch,
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("duplicate variable {0} in ring enumeration")]
    DuplicateVariable(Variable),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    /// Lex with z > x > y and the in-family orders of [`compare_variables`].
    MatrixLex,
    /// Lex with an eliminated block (usually `{t}`) above everything, matrix-lex below.
    Elimination,
}

/// A polynomial: terms strictly decreasing in the ring's term order.
#[derive(Clone, PartialEq)]
pub struct Polynomial<E> {
    terms: Vec<(E, Monomial)>,
}

impl<E: fmt::Debug> fmt::Debug for Polynomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(E, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn into_terms(self) -> Vec<(E, Monomial)> {
        self.terms
    }

    /// Wrap terms already in canonical form (strictly decreasing, nonzero).
    pub(crate) fn from_sorted_unchecked(terms: Vec<(E, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        Polynomial { terms }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }
}

/// `k[vars]` with the enumeration sorted decreasingly under the term order.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<Variable>,
    index: HashMap<Variable, usize>,
    order: TermOrder,
    eliminated: usize,
}

impl<F: Field> PolyRing<F> {
    /// Ring under matrix-lex; `t`, if present, is the smallest variable.
    pub fn matrix_lex(field: F, vars: &[Variable]) -> Result<Arc<Self>, AlgebraError> {
        let mut vs = vars.to_vec();
        vs.sort_by(|a, b| compare_variables(b, a));
        Self::build(field, vs, TermOrder::MatrixLex, 0)
    }

    /// Ring under the elimination order: `eliminated` on top, matrix-lex on `rest`.
    pub fn elimination(
        field: F,
        eliminated: &[Variable],
        rest: &[Variable],
    ) -> Result<Arc<Self>, AlgebraError> {
        let mut top = eliminated.to_vec();
        top.sort_by(|a, b| compare_variables(b, a));
        let mut low = rest.to_vec();
        low.sort_by(|a, b| compare_variables(b, a));
        let k = top.len();
        top.extend(low);
        Self::build(field, top, TermOrder::Elimination, k)
    }

    fn build(
        field: F,
        vars: Vec<Variable>,
        order: TermOrder,
        eliminated: usize,
    ) -> Result<Arc<Self>, AlgebraError> {
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if index.insert(*v, i).is_some() {
                return Err(AlgebraError::DuplicateVariable(*v));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, index, order, eliminated }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Variables forming the eliminated block (empty under matrix-lex).
    pub fn eliminated_block(&self) -> &[Variable] {
        &self.vars[..self.eliminated]
    }

    pub fn var_index(&self, v: &Variable) -> Result<usize, AlgebraError> {
        self.index.get(v).copied().ok_or(AlgebraError::UnknownVariable(*v))
    }

    pub fn contains(&self, v: &Variable) -> bool {
        self.index.contains_key(v)
    }

    pub fn compatible(&self, other: &PolyRing<F>) -> Result<(), AlgebraError> {
        if self.field.kind() == other.field.kind() && self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// Term-order comparison. The enumeration already encodes the order.
    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.vars.len())
    }

    pub fn monomial_of(&self, factors: &[(Variable, u16)]) -> Result<Monomial, AlgebraError> {
        let mut exps = vec![0u16; self.vars.len()];
        for (v, e) in factors {
            exps[self.var_index(v)?] += e;
        }
        Ok(Monomial::from_exponents(exps))
    }

    pub fn monomial_from_vars(&self, vars: &[Variable]) -> Result<Monomial, AlgebraError> {
        let factors: Vec<_> = vars.iter().map(|v| (*v, 1)).collect();
        self.monomial_of(&factors)
    }

    /// Variables of a monomial with exponents, in decreasing variable order.
    pub fn factors(&self, m: &Monomial) -> Vec<(Variable, u16)> {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (self.vars[i], e))
            .collect()
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial::zero()
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(c, self.one_monomial())
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, m)] }
        }
    }

    pub fn var(&self, v: Variable) -> Result<Polynomial<F::Elem>, AlgebraError> {
        let i = self.var_index(&v)?;
        Ok(self.term(self.field.one(), Monomial::variable(self.vars.len(), i)))
    }

    /// Canonicalize an arbitrary term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(&self, mut terms: Vec<(F::Elem, Monomial)>) -> Polynomial<F::Elem> {
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc = self.field.add(lc, &c);
                    if self.field.is_zero(lc) {
                        out.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        out.push((c, m));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(a, b, true)
    }

    fn merge(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
        negate_b: bool,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let bcoef = |c: &F::Elem| if negate_b { f.neg(c) } else { c.clone() };
        while i < a.terms.len() && j < b.terms.len() {
            let (ca, ma) = &a.terms[i];
            let (cb, mb) = &b.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bcoef(cb), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|(c, m)| (bcoef(c), m.clone())));
        Polynomial { terms: out }
    }

    /// `a - c * m * b`, the inner step of reduction.
    pub fn sub_scaled_shifted(
        &self,
        a: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        b: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut shifted = b.terms.iter().map(|(cb, mb)| (f.mul(c, cb), mb.mul(m))).peekable();
        while i < a.terms.len() {
            let Some((cb, mb)) = shifted.peek() else { break };
            let (ca, ma) = &a.terms[i];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((f.neg(cb), mb.clone()));
                    shifted.next();
                }
                Ordering::Equal => {
                    let v = f.sub(ca, cb);
                    if !f.is_zero(&v) {
                        out.push((v, ma.clone()));
                    }
                    i += 1;
                    shifted.next();
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(shifted.map(|(cb, mb)| (f.neg(&cb), mb)));
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial { terms: a.terms.iter().map(|(c, m)| (self.field.neg(c), m.clone())).collect() }
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: a.terms.iter().map(|(d, m)| (self.field.mul(c, d), m.clone())).collect() }
    }

    pub fn mul_term(
        &self,
        a: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        // multiplication by a monomial preserves the order
        Polynomial {
            terms: a.terms.iter().map(|(d, n)| (self.field.mul(c, d), n.mul(m))).collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Polynomial::zero();
        for (c, m) in &small.terms {
            let part = self.mul_term(large, c, m);
            acc = self.add(&acc, &part);
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial<F::Elem>, e: u32) -> Polynomial<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Scale to the field's canonical associate (monic / primitive).
    pub fn normalize(&self, a: Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let (mut coeffs, monos): (Vec<_>, Vec<_>) = a.terms.into_iter().unzip();
        self.field.normalize(&mut coeffs);
        Polynomial { terms: coeffs.into_iter().zip(monos).collect() }
    }

    /// Make the leading coefficient one.
    pub fn monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_coefficient() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    /// Whether a variable occurs in any term.
    pub fn involves(&self, a: &Polynomial<F::Elem>, v: &Variable) -> bool {
        match self.index.get(v) {
            None => false,
            Some(&i) => a.terms.iter().any(|(_, m)| m.exponent(i) > 0),
        }
    }

    /// Rewrite a polynomial of another ring over the same field into this one.
    pub fn map_from(
        &self,
        other: &PolyRing<F>,
        a: &Polynomial<F::Elem>,
    ) -> Result<Polynomial<F::Elem>, AlgebraError> {
        if self.field.kind() != other.field.kind() {
            return Err(AlgebraError::RingMismatch);
        }
        let positions: Vec<Option<usize>> =
            other.vars.iter().map(|v| self.index.get(v).copied()).collect();
        let mut terms = Vec::with_capacity(a.len());
        for (c, m) in &a.terms {
            let mut exps = vec![0u16; self.vars.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match positions[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(AlgebraError::UnknownVariable(other.vars[i])),
                }
            }
            terms.push((c.clone(), Monomial::from_exponents(exps)));
        }
        Ok(self.from_terms(terms))
    }

    /// Substitute polynomials for variables (variables not in `map` are kept).
    pub fn substitute(
        &self,
        a: &Polynomial<F::Elem>,
        map: &HashMap<Variable, Polynomial<F::Elem>>,
    ) -> Polynomial<F::Elem> {
        let mut acc = Polynomial::zero();
        for (c, m) in &a.terms {
            let mut kept = vec![0u16; self.vars.len()];
            let mut factor = self.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map.get(&self.vars[i]) {
                    Some(p) => factor = self.mul(&factor, &self.pow(p, e as u32)),
                    None => kept[i] = e,
                }
            }
            let shifted = self.mul_term(&factor, &self.field.one(), &Monomial::from_exponents(kept));
            acc = self.add(&acc, &shifted);
        }
        acc
    }

    /// Bit-exact text form: decreasing order, `" + "` / `" - "` joiners,
    /// variables juxtaposed, powers as `^e`, coefficient prefix unless it is ±1.
    pub fn render(&self, a: &Polynomial<F::Elem>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (c, m)) in a.terms.iter().enumerate() {
            let (negative, magnitude) = self.split_sign(c);
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono = self.render_monomial(m);
            match (magnitude.as_deref(), mono.is_empty()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&mono),
                (Some(mag), true) => out.push_str(mag),
                (Some(mag), false) => {
                    out.push_str(mag);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Sign and magnitude of a coefficient; magnitude `None` means one.
    fn split_sign(&self, c: &F::Elem) -> (bool, Option<String>) {
        match self.field.to_signed_integer(c) {
            Some(i) => {
                let neg = i.is_negative();
                let mag = i.abs();
                (neg, if mag.is_one() { None } else { Some(mag.to_string()) })
            }
            None => {
                let s = self.field.render(c);
                match s.strip_prefix('-') {
                    Some(rest) => (true, Some(rest.to_string())),
                    None => (false, Some(s)),
                }
            }
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (v, e) in self.factors(m) {
            s.push_str(&v.to_string());
            if e > 1 {
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
        s
    }

    /// Inverse of [`PolyRing::render`]; also accepts `−`, `*` and spaces between factors.
    pub fn parse(&self, text: &str) -> Result<Polynomial<F::Elem>, AlgebraError> {
        let normalized = text.replace('\u{2212}', "-");
        let mut terms = Vec::new();
        let mut sign_negative = false;
        let mut current = String::new();
        let mut depth = 0i32;
        let flush = |current: &mut String,
                     negative: bool,
                     terms: &mut Vec<(F::Elem, Monomial)>|
         -> Result<(), AlgebraError> {
            let body = current.trim();
            if body.is_empty() {
                return Err(AlgebraError::Parse(format!("empty term in `{text}`")));
            }
            let (c, m) = self.parse_term(body)?;
            let c = if negative { self.field.neg(&c) } else { c };
            terms.push((c, m));
            current.clear();
            Ok(())
        };
        for ch in normalized.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    current.push(ch);
                }
                ']' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    // a sign after a coefficient slash or caret would be malformed anyway
                    if current.trim().is_empty() {
                        if ch == '-' {
                            sign_negative = !sign_negative;
                        }
                    } else {
                        flush(&mut current, sign_negative, &mut terms)?;
                        sign_negative = ch == '-';
                    }
                }
                _ => current.push(ch),
            }
        }
        if current.trim() == "0" && terms.is_empty() {
            return Ok(Polynomial::zero());
        }
        flush(&mut current, sign_negative, &mut terms)?;
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, body: &str) -> Result<(F::Elem, Monomial), AlgebraError> {
        let err = |msg: &str| AlgebraError::Parse(format!("{msg} in term `{body}`"));
        let chars: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        // coefficient: digits with optional /digits
        let mut coef_text = String::new();
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
            coef_text.push(chars[pos]);
            pos += 1;
        }
        let mut coeff = if coef_text.is_empty() {
            self.field.one()
        } else {
            self.field.parse_elem(&coef_text)?
        };
        let mut exps = vec![0u16; self.vars.len()];
        while pos < chars.len() {
            match chars[pos] {
                '*' => {
                    pos += 1;
                }
                't' => {
                    pos += 1;
                    let e = parse_exponent(&chars, &mut pos).map_err(|m| err(&m))?;
                    exps[self.var_index(&Variable::T)?] += e;
                }
                c @ ('x' | 'y' | 'z') => {
                    let close = chars[pos..]
                        .iter()
                        .position(|&ch| ch == ']')
                        .ok_or_else(|| err("unterminated index"))?;
                    let token: String = chars[pos..pos + close + 1].iter().collect();
                    let v: Variable = token.parse().map_err(|_| err("bad variable"))?;
                    debug_assert_eq!(
                        v.family,
                        match c {
                            'x' => VarFamily::X,
                            'y' => VarFamily::Y,
                            _ => VarFamily::Z,
                        }
                    );
                    pos += close + 1;
                    let e = parse_exponent(&chars, &mut pos).map_err(|m| err(&m))?;
                    exps[self.var_index(&v)?] += e;
                }
                d if d.is_ascii_digit() => {
                    // a bare numeric factor after `*`
                    let mut t = String::new();
                    while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                        t.push(chars[pos]);
                        pos += 1;
                    }
                    coeff = self.field.mul(&coeff, &self.field.parse_elem(&t)?);
                }
                _ => return Err(err("unexpected character")),
            }
        }
        Ok((coeff, Monomial::from_exponents(exps)))
    }
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<u16, String> {
    if *pos < chars.len() && chars[*pos] == '^' {
        *pos += 1;
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let digits: String = chars[start..*pos].iter().collect();
        digits.parse().map_err(|_| "bad exponent".to_string())
    } else if *pos < chars.len() && chars[*pos] == '²' {
        *pos += 1;
        Ok(2)
    } else if *pos < chars.len() && chars[*pos] == '³' {
        *pos += 1;
        Ok(3)
    } else {
        Ok(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring() -> Arc<PolyRing<Rationals>> {
        let mut vars = Vec::new();
        for i in 1..=2 {
            for j in 1..=2 {
                vars.push(Variable::x(i, j));
                vars.push(Variable::y(i, j));
                vars.push(Variable::z(i, j));
            }
        }
        PolyRing::matrix_lex(Rationals, &vars).unwrap()
    }

    #[test]
    fn enumeration_is_decreasing_matrix_lex() {
        let r = ring();
        let names: Vec<String> = r.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            names,
            [
                "z[1,1]", "z[1,2]", "z[2,1]", "z[2,2]", "x[1,2]", "x[1,1]", "x[2,2]", "x[2,1]",
                "y[1,2]", "y[1,1]", "y[2,2]", "y[2,1]"
            ]
        );
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring();
        let x = r.var(Variable::x(1, 1)).unwrap();
        let y = r.var(Variable::y(1, 1)).unwrap();
        let s = r.add(&x, &y);
        assert_eq!(r.sub(&s, &y), x);
        assert!(r.mul(&x, &r.zero()).is_zero());
        let d = r.mul(&r.sub(&x, &y), &r.add(&x, &y));
        assert_eq!(r.render(&d), "x[1,1]^2 - y[1,1]^2");
    }

    #[test]
    fn render_parse_round_trip() {
        let r = ring();
        let p = r.parse("3*z[1,1]x[1,2] - z[1,1]y[1,2] − 1/2 z[1,2]x[1,1] + 7").unwrap();
        let text = r.render(&p);
        assert_eq!(text, "3*z[1,1]x[1,2] - z[1,1]y[1,2] - 1/2*z[1,2]x[1,1] + 7");
        assert_eq!(r.parse(&text).unwrap(), p);
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("w[1,1]").is_err());
    }

    #[test]
    fn prime_field_renders_symmetric_coefficients() {
        let f = PrimeField::new(101).unwrap();
        let r = PolyRing::matrix_lex(f, &[Variable::x(1, 1), Variable::y(1, 1)]).unwrap();
        let p = r.parse("x[1,1] - 2y[1,1]").unwrap();
        assert_eq!(p.terms()[1].0, 99);
        assert_eq!(r.render(&p), "x[1,1] - 2*y[1,1]");
    }

    #[test]
    fn substitution_and_mapping() {
        let r = ring();
        let x = Variable::x(1, 1);
        let p = r.parse("x[1,1]^2 - y[1,1]").unwrap();
        let mut map = HashMap::new();
        map.insert(x, r.var(Variable::y(1, 1)).unwrap());
        assert_eq!(r.render(&r.substitute(&p, &map)), "y[1,1]^2 - y[1,1]");
        let elim = PolyRing::elimination(Rationals, &[Variable::T], r.variables()).unwrap();
        let q = elim.map_from(&r, &p).unwrap();
        assert_eq!(r.map_from(&elim, &q).unwrap(), p);
        assert_eq!(elim.variables()[0], Variable::T);
        let with_t = elim.parse("t*x[1,1]").unwrap();
        assert!(r.map_from(&elim, &with_t).is_err());
    }
}
