//! Arithmetic in prime fields `F_q = Z/qZ`.
//!
//! Residues are always stored fully reduced, so equality of elements is
//! structural. Polynomials store raw `u32` residues and go through the
//! `PrimeField` helpers; `FieldElement` is the checked, self-describing form.

use std::fmt;

use crate::error::{Error, Result};

/// Largest prime accepted as a field order (the largest prime below 2^16).
pub const MAX_FIELD_ORDER: u64 = 65521;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q: q as u32 })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// The canonical residue of an arbitrary integer.
    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement { value: self.reduce(value), field: *self }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, field: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, field: *self }
    }

    /// All elements in ascending residue order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |value| FieldElement { value, field: *self })
    }

    #[inline]
    pub fn reduce(&self, value: i64) -> u32 {
        value.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut base = a;
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat, `a^(q-2)`.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// Trial division; `q` is at most 2^16 so this is instant.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn apply(self, op: ArithOp, rhs: FieldElement) -> Result<FieldElement> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field.q, rhs.field.q));
        }
        let f = self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, rhs.value),
            ArithOp::Sub => f.sub(self.value, rhs.value),
            ArithOp::Mul => f.mul(self.value, rhs.value),
        };
        Ok(FieldElement { value, field: f })
    }

    pub fn checked_add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Add, rhs)
    }

    pub fn checked_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Sub, rhs)
    }

    pub fn checked_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.apply(ArithOp::Mul, rhs)
    }


    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement { value: self.field.inv(self.value)?, field: self.field })
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        FieldElement { value: self.field.pow(self.value, exp), field: self.field }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement { value: self.field.neg(self.value), field: self.field }
    }
}
