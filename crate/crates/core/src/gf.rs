//! Prime fields `F_q` with a fixed multiplicative generator.
//!
//! Elements are stored as canonical residues in `[0, q)`. Since `q < 2^31`,
//! every product of two residues fits in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// A prime field together with its smallest multiplicative generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u64,
    gamma: u64,
}

impl Field {
    /// Builds `F_q`, rejecting composite moduli and `q` outside `(2, 2^31)`.
    pub fn new(q: u64) -> Result<Self> {
        if q <= 2 || q >= MAX_MODULUS {
            return Err(Error::FieldOutOfRange(q));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let factors = prime_factors(q - 1);
        let gamma = (2..q)
            .find(|&g| factors.iter().all(|&p| pow_mod(g, (q - 1) / p, q) != 1))
            .expect("the multiplicative group of a prime field is cyclic");
        Ok(Self { q, gamma })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// The designated generator of `F_q^*`.
    #[inline]
    pub fn generator(&self) -> FieldElement {
        self.elem(self.gamma)
    }

    #[inline]
    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    /// Wraps an arbitrary integer, reducing it modulo `q`.
    #[inline]
    pub fn elem(&self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.q,
            field: *self,
        }
    }

    /// Reduces a signed integer, e.g. `from_i64(-1) == q - 1`.
    pub fn from_i64(&self, value: i64) -> FieldElement {
        self.elem(value.rem_euclid(self.q as i64) as u64)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// Iterates over all `q` elements in increasing order of representative.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|v| self.elem(v))
    }

    // Raw arithmetic on canonical representatives. Callers guarantee that
    // inputs are already reduced.

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    #[inline]
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.q)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(a, self.q - 2, self.q))
    }

    /// `gamma^e`, with `e` taken modulo the group order.
    #[inline]
    pub fn gamma_pow(&self, e: u64) -> u64 {
        pow_mod(self.gamma, e % (self.q - 1), self.q)
    }

    pub(crate) fn check_same(&self, other: &Field) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.q, other.q))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// An element of a prime field, carrying its field.
///
/// The arithmetic operators panic when the operands live in different
/// fields; the `try_*` methods report the mismatch instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u64,
    field: Field,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.elem(self.field.add(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.elem(self.field.sub(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.elem(self.field.mul(self.value, rhs.value)))
    }

    pub fn try_div(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self * rhs.inv()?)
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }

    pub fn pow(self, e: u64) -> Self {
        self.field.elem(self.field.pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.field.elem(self.field.neg(self.value))
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

// Trial division is enough below 2^31: at most ~23k odd candidates.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
