//! Prime field arithmetic.
//!
//! Every message symbol, matrix entry and broadcast symbol in this crate lives
//! in a prime field `GF(q)`. Elements are stored as canonical residues in
//! `[0, q)`; the raw `u32` helpers on [`PrimeField`] are what the matrix code
//! uses internally, while [`FieldElement`] is the checked public value type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The prime field `GF(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    /// `GF(2)`, the default working field.
    pub const GF2: PrimeField = PrimeField { q: 2 };

    /// Builds `GF(q)`, rejecting any modulus that is not prime.
    pub fn new(q: u32) -> Result<Self, Error> {
        if is_prime(q) {
            Ok(PrimeField { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    /// Wraps a raw residue. Values `>= q` are reduced.
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % self.q as u64) as u32,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Maps a signed integer to its residue, so `-1` becomes `q - 1`.
    pub fn from_i64(&self, value: i64) -> FieldElement {
        self.element(value.rem_euclid(self.q as i64) as u64)
    }

    /// Iterates over all `q` elements in increasing residue order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u64).map(move |v| self.element(v))
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.q as u64) as u32
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// Inverse by Fermat's little theorem; `a` must be nonzero.
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let mut base = a as u64;
        let mut exp = self.q as u64 - 2;
        let m = self.q as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u32
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self, Error> {
        PrimeField::new(q)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.q
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let q = q as u64;
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a specific prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

#[allow(clippy::should_implement_trait)]
impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<PrimeField, Error> {
        if self.field == other.field {
            Ok(self.field)
        } else {
            Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            })
        }
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement, Error> {
        let f = self.same_field(&other)?;
        Ok(f.element(f.add_raw(self.value, other.value) as u64))
    }

    pub fn sub(self, other: FieldElement) -> Result<FieldElement, Error> {
        let f = self.same_field(&other)?;
        Ok(f.element(f.sub_raw(self.value, other.value) as u64))
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement, Error> {
        let f = self.same_field(&other)?;
        Ok(f.element(f.mul_raw(self.value, other.value) as u64))
    }

    pub fn neg(self) -> FieldElement {
        self.field.element(self.field.neg_raw(self.value) as u64)
    }

    /// Multiplicative inverse. Zero has none.
    pub fn inv(self) -> Result<FieldElement, Error> {
        if self.value == 0 {
            return Err(Error::NoInverse);
        }
        Ok(self.field.element(self.field.inv_raw(self.value) as u64))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn add_examples() {
        let f2 = gf(2);
        assert_eq!(f2.one().add(f2.one()).unwrap().value(), 0);
        let f3 = gf(3);
        assert_eq!(f3.element(2).add(f3.element(2)).unwrap().value(), 1);
        let f5 = gf(5);
        assert_eq!(f5.zero().add(f5.element(4)).unwrap().value(), 4);
    }

    #[test]
    fn mul_examples() {
        let f2 = gf(2);
        assert_eq!(f2.one().mul(f2.one()).unwrap().value(), 1);
        let f3 = gf(3);
        assert_eq!(f3.element(2).mul(f3.element(2)).unwrap().value(), 1);
        let f7 = gf(7);
        assert_eq!(f7.element(3).mul(f7.element(5)).unwrap().value(), 1);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(gf(2).one().inv().unwrap().value(), 1);
        assert_eq!(gf(5).element(2).inv().unwrap().value(), 3);
        assert!(matches!(gf(3).zero().inv(), Err(Error::NoInverse)));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = gf(3).one();
        let b = gf(5).one();
        assert!(matches!(
            a.add(b),
            Err(Error::FieldMismatch { left: 3, right: 5 })
        ));
        assert!(a.mul(b).is_err());
        assert!(a.sub(b).is_err());
    }

    #[test]
    fn non_primes_rejected() {
        for q in [0, 1, 4, 6, 9, 15, 21, 25] {
            assert!(PrimeField::new(q).is_err(), "{q}");
        }
        for q in [2, 3, 5, 7, 11, 13, 65521, 2_147_483_647] {
            assert!(PrimeField::new(q).is_ok(), "{q}");
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 5, 7] {
            let f = gf(q);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in f.elements() {
                        let ab_c = a.add(b).unwrap().add(c).unwrap();
                        let a_bc = a.add(b.add(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let ab_c = a.mul(b).unwrap().mul(c).unwrap();
                        let a_bc = a.mul(b.mul(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let lhs = a.mul(b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                if !a.is_zero() {
                    assert_eq!(a.mul(a.inv().unwrap()).unwrap(), f.one());
                }
                assert!(a.add(a.neg()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn large_modulus_inverse() {
        let f = gf(2_147_483_647);
        let a = f.element(123_456_789);
        assert_eq!(a.mul(a.inv().unwrap()).unwrap(), f.one());
        assert_eq!(f.from_i64(-1).value(), 2_147_483_646);
    }
}
