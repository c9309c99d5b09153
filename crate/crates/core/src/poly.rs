//! Dense univariate polynomials over a prime field.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Coefficients are little-endian by power and trimmed, so the zero
/// polynomial has no coefficients and `degree()` returns `None` for it.
///
/// The derived order compares coefficient vectors lexicographically from the
/// constant term up; this is the canonical order used for sorted lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Builds a polynomial from raw coefficients, reducing each modulo `q`.
    pub fn new(field: Field, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let q = field.modulus();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
        trim(&mut coeffs);
        Self { field, coeffs }
    }

    pub fn from_elements(field: Field, coeffs: &[FieldElement]) -> Result<Self> {
        for c in coeffs {
            field.check_same(&c.field())?;
        }
        Ok(Self::new(field, coeffs.iter().map(|c| c.value())))
    }

    pub fn zero(field: Field) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: Field, c: u64) -> Self {
        Self::new(field, [c])
    }

    /// The monomial `x^d`.
    pub fn monomial(field: Field, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        Self { field, coeffs }
    }

    /// `x - c`.
    pub fn linear_root(field: Field, c: u64) -> Self {
        Self::new(field, [field.neg(c % field.modulus()), 1])
    }

    /// Monic polynomial whose roots are exactly the given multiset.
    pub fn from_roots(field: Field, roots: &[FieldElement]) -> Result<Self> {
        let mut acc = Self::constant(field, 1);
        for r in roots {
            field.check_same(&r.field())?;
            acc = acc.mul(&Self::linear_root(field, r.value()));
        }
        Ok(acc)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients padded (or truncated) to exactly `len` entries.
    pub fn coeff_vec(&self, len: usize) -> Vec<u64> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when `deg self < k` (the zero polynomial always qualifies).
    #[inline]
    pub fn degree_below(&self, k: usize) -> bool {
        self.coeffs.len() <= k
    }

    /// Horner evaluation at a raw representative.
    #[inline]
    pub fn eval_raw(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        self.field.check_same(&x.field())?;
        Ok(self.field.elem(self.eval_raw(x.value())))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))))
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&c| f.neg(c)))
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let c = c % f.modulus();
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// `f(c·x)`: coefficient `i` is multiplied by `c^i`.
    pub fn dilate(&self, c: u64) -> Self {
        let f = self.field;
        let mut pw = 1;
        let coeffs = self.coeffs.iter().map(|&a| {
            let v = f.mul(a, pw);
            pw = f.mul(pw, c);
            v
        });
        Self::new(f, coeffs.collect::<Vec<_>>())
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.field.check_same(&divisor.field)?;
        let f = self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Multiplicity of `sigma` as a root, found by repeated exact division
    /// by `x - sigma`. Returns `None` for the zero polynomial.
    pub fn root_multiplicity(&self, sigma: u64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let f = self.field;
        let mut cur = self.coeffs.clone();
        let mut mult = 0;
        loop {
            // synthetic division by (x - sigma)
            let mut carry = 0u64;
            let mut quot = vec![0u64; cur.len() - 1];
            for i in (0..cur.len()).rev() {
                let v = f.add(cur[i], f.mul(carry, sigma));
                if i == 0 {
                    carry = v;
                } else {
                    quot[i - 1] = v;
                    carry = v;
                }
            }
            if carry != 0 {
                return Some(mult);
            }
            mult += 1;
            cur = quot;
        }
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f13() -> Field {
        Field::new(13).unwrap()
    }

    fn p(coeffs: &[u64]) -> Polynomial {
        Polynomial::new(f13(), coeffs.iter().copied())
    }

    #[test]
    fn evaluation() {
        let f = f13();
        assert_eq!(p(&[0, 1]).eval(f.elem(5)).unwrap().value(), 5);
        assert_eq!(Polynomial::zero(f).eval(f.elem(9)).unwrap().value(), 0);
        assert_eq!(p(&[1, 0, 1]).eval(f.elem(5)).unwrap().value(), 0);
        let other = Field::new(17).unwrap();
        assert!(p(&[1]).eval(other.elem(1)).is_err());
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero(f13()).degree(), None);
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p(&[1, 1]).mul(&p(&[12, 1])), p(&[12, 0, 1]));
        let (q, r) = p(&[0, 0, 1]).div_rem(&p(&[0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), Polynomial::zero(f13())));
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q.clone(), r.clone()), (p(&[12, 1]), p(&[2])));
        // re-multiply oracle
        assert_eq!(q.mul(&p(&[1, 1])).add(&r), p(&[1, 0, 1]));
        assert_eq!(
            p(&[1]).div_rem(&Polynomial::zero(f13())),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn roots_examples() {
        let f = f13();
        assert_eq!(Polynomial::from_roots(f, &[]).unwrap(), p(&[1]));
        assert_eq!(
            Polynomial::from_roots(f, &[f.zero(), f.zero()]).unwrap(),
            p(&[0, 0, 1])
        );
        assert_eq!(
            Polynomial::from_roots(f, &[f.elem(1), f.elem(2)]).unwrap(),
            p(&[2, 10, 1])
        );
    }

    #[test]
    fn multiplicity_by_division() {
        let f = f13();
        let g = Polynomial::from_roots(f, &[f.elem(3), f.elem(3), f.elem(3), f.elem(5)]).unwrap();
        assert_eq!(g.root_multiplicity(3), Some(3));
        assert_eq!(g.root_multiplicity(5), Some(1));
        assert_eq!(g.root_multiplicity(4), Some(0));
        assert_eq!(Polynomial::zero(f).root_multiplicity(1), None);
    }

    #[test]
    fn dilation_matches_evaluation() {
        let f = f13();
        let g = p(&[4, 7, 1, 9]);
        let h = g.dilate(2);
        for x in 0..13 {
            assert_eq!(h.eval_raw(x), g.eval_raw(f.mul(2, x)));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 10, 1]).to_string(), "x^2 + 10x + 2");
        assert_eq!(Polynomial::zero(f13()).to_string(), "0");
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(0u64..13, 0..max_len)
            .prop_map(|c| Polynomial::new(Field::new(13).unwrap(), c))
    }

    proptest! {
        #[test]
        fn div_rem_round_trip(a in arb_poly(9), b in arb_poly(6)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_poly(6), b in arb_poly(6), c in arb_poly(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(a.mul(&b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
            }
        }

        #[test]
        fn from_roots_vanishes_exactly_on_roots(roots in prop::collection::vec(0u64..13, 0..6)) {
            let f = Field::new(13).unwrap();
            let elems: Vec<_> = roots.iter().map(|&r| f.elem(r)).collect();
            let g = Polynomial::from_roots(f, &elems).unwrap();
            prop_assert_eq!(g.degree(), Some(roots.len()));
            for x in 0..13 {
                prop_assert_eq!(g.eval_raw(x) == 0, roots.contains(&x));
            }
        }
    }
}
