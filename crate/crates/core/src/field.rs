//! Exact coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
}

/// Which field a computation runs over; stamped into every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "p")]
pub enum FieldKind {
    Rationals,
    PrimeField(u32),
}

impl FieldKind {
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rationals" | "rational" => Ok(FieldKind::Rationals),
            _ => {
                let digits = t
                    .strip_prefix("gf")
                    .or_else(|| t.strip_prefix("fp"))
                    .or_else(|| t.strip_prefix("zp"))
                    .unwrap_or(&t)
                    .trim_start_matches(['(', ':', '_'])
                    .trim_end_matches(')');
                let p: u64 = digits.parse().map_err(|_| FieldError::Parse(text.to_string()))?;
                PrimeField::new(p).map(|f| FieldKind::PrimeField(f.p))
            }
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Arithmetic of an exact field. Elements carry no context; the field value does.
pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn kind(&self) -> FieldKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Scale a coefficient list (leading entry first) to its canonical associate:
    /// monic over `F_p`, primitive integral with positive leading entry over `Q`.
    fn normalize(&self, coeffs: &mut [Self::Elem]);

    /// Signed integer rendering used by the text format; `None` for non-integers.
    fn to_signed_integer(&self, a: &Self::Elem) -> Option<BigInt>;

    fn render(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, FieldError>;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> FieldKind {
        FieldKind::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn normalize(&self, coeffs: &mut [BigRational]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            return;
        }
        if coeffs[0].is_negative() {
            num_gcd = -num_gcd;
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        for c in coeffs.iter_mut() {
            *c = &*c * &factor;
        }
    }

    fn to_signed_integer(&self, a: &BigRational) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }

    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<BigRational, FieldError> {
        let t = text.trim();
        let err = || FieldError::Parse(text.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(t.parse().map_err(|_| err())?)),
        }
    }
}

/// `F_p` with canonical representatives in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(&self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn kind(&self) -> FieldKind {
        FieldKind::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Result<u32, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(*a, self.p as u64 - 2))
    }

    fn normalize(&self, coeffs: &mut [u32]) {
        if let Some(lead) = coeffs.first() {
            if *lead == 0 || *lead == 1 {
                return;
            }
            let inv = self.pow(*lead, self.p as u64 - 2);
            for c in coeffs.iter_mut() {
                *c = self.mul(c, &inv);
            }
        }
    }

    fn to_signed_integer(&self, a: &u32) -> Option<BigInt> {
        Some(BigInt::from(self.symmetric(*a)))
    }

    fn render(&self, a: &u32) -> String {
        self.symmetric(*a).to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<u32, FieldError> {
        let t = text.trim();
        let err = || FieldError::Parse(text.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                let n = self.reduce_bigint(&n);
                let d = self.reduce_bigint(&d);
                self.div(&n, &d)
            }
            None => Ok(self.reduce_bigint(&t.parse().map_err(|_| err())?)),
        }
    }
}

impl PrimeField {
    pub fn reduce_bigint(&self, v: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u32().expect("residue fits in u32")
    }

    /// Image of a rational under reduction mod p; `None` if p divides the denominator.
    pub fn reduce_rational(&self, v: &BigRational) -> Option<u32> {
        let d = self.reduce_bigint(v.denom());
        if d == 0 {
            return None;
        }
        let n = self.reduce_bigint(v.numer());
        self.div(&n, &d).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites_and_large_moduli() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn prime_field_inverse_and_canonical_range() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u32 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
            assert!(inv < 101);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.inv(&0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_normalization_is_primitive_with_positive_lead() {
        let q = Rationals;
        let mut c = vec![
            BigRational::new((-2).into(), 3.into()),
            BigRational::new(4.into(), 9.into()),
        ];
        q.normalize(&mut c);
        assert_eq!(c[0], q.from_i64(3));
        assert_eq!(c[1], q.from_i64(-2));
    }

    #[test]
    fn field_kind_parsing() {
        assert_eq!(FieldKind::parse("QQ").unwrap(), FieldKind::Rationals);
        assert_eq!(FieldKind::parse("gf(32003)").unwrap(), FieldKind::PrimeField(32003));
        assert_eq!(FieldKind::parse("101").unwrap(), FieldKind::PrimeField(101));
        assert!(FieldKind::parse("100").is_err());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.reduce_rational(&half), Some(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert_eq!(f.reduce_rational(&seventh), None);
    }
}
