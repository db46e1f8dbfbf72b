//! Dense exponent vectors over a fixed variable enumeration.

use std::fmt;

/// Exponent vector indexed by a ring's variable enumeration.
///
/// The enumeration lists variables in decreasing order of the ring's term
/// order, so the derived `Ord` (lexicographic on the slice) *is* the term
/// order. Monomials of different rings must never be compared.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice() }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps: exps.into_boxed_slice() }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps: exps.into_boxed_slice() }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotients() {
        let a = Monomial::from_exponents(vec![1, 0, 2]);
        let b = Monomial::from_exponents(vec![2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(vec![1, 1, 0]));
        assert_eq!(a.mul(&a.quotient_of(&b)), b);
        assert_eq!(a.lcm(&b), b);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::variable(3, 1).is_coprime(&a));
    }

    #[test]
    fn lexicographic_ordering_on_enumeration() {
        let x0 = Monomial::variable(3, 0);
        let x1_sq = Monomial::from_exponents(vec![0, 5, 0]);
        assert!(x0 > x1_sq);
        assert_eq!(Monomial::one(3).degree(), 0);
        assert!(Monomial::one(3).is_one());
    }
}
