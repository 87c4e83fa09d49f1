//! Dense univariate polynomials over the rationals.
//!
//! Used for the `t`-polynomials inside [`Scalar`](super::Scalar): numerator
//! components and the (a-free) denominator. Coefficients are stored in
//! ascending order with no trailing zeros; the zero polynomial is empty.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(
            cs.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Largest `k` with `t^k` dividing the polynomial (0 for zero).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `t^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(k <= self.valuation() || self.is_zero());
        UPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let dl = d.lead();
        let dn = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn - 1] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.lead();
        if l.is_one() {
            return self.clone();
        }
        self.scale(&l.recip())
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        // Work with primitive integer polynomials: pseudo-remainders stay integral
        // and dividing out the content keeps coefficients small.
        let mut a = primitive_integer(self);
        let mut b = primitive_integer(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_int_vec(r);
        }
        if b.is_empty() {
            let g = UPoly::from_coeffs(a.into_iter().map(BigRational::from_integer).collect());
            g.monic()
        } else {
            Self::one()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(t) -> p(t^k)` for `k >= 1`.
    pub fn compose_power(&self, k: usize) -> Self {
        if k == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        UPoly { coeffs }
    }

    /// Coefficient reversal `t^deg p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let l = p.denominator_lcm();
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    primitive_int_vec(ints)
}

fn primitive_int_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let bl = b.last().expect("nonzero divisor");
    let bn = b.len();
    while r.len() >= bn {
        let rl = r.last().unwrap().clone();
        let shift = r.len() - bn;
        // r <- bl * r - rl * t^shift * b
        for c in r.iter_mut() {
            *c *= bl;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &rl * bc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        // keep intermediate coefficients in check
        let content = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in r.iter_mut() {
                *c = &*c / &content;
            }
        }
    }
    r
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (t^2 - 1) and (t^4 - 1) share t^2 - 1
        let a = UPoly::from_i64s(&[-1, 0, 1]);
        let b = UPoly::from_i64s(&[-1, 0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), a);
        let c = UPoly::from_i64s(&[1, 1]);
        let d = UPoly::from_i64s(&[1, 0, 1]);
        assert!(c.gcd(&d).is_one());
    }

    #[test]
    fn long_division() {
        // (t^4 - 1) / (t^2 - 1) = t^2 + 1
        let a = UPoly::from_i64s(&[-1, 0, 0, 0, 1]);
        let b = UPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&b), Some(UPoly::from_i64s(&[1, 0, 1])));
        let (_, r) = UPoly::from_i64s(&[1, 0, 1]).div_rem(&UPoly::from_i64s(&[1, 1]));
        assert_eq!(r, UPoly::from_i64s(&[2]));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let half = BigRational::new(1.into(), 2.into());
        let a = UPoly::from_i64s(&[-1, 0, 1]).scale(&half);
        let b = UPoly::from_i64s(&[1, 2, 1]).scale(&BigRational::from_integer(3.into()));
        assert_eq!(a.gcd(&b), UPoly::from_i64s(&[1, 1]));
    }
}
