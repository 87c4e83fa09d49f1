use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::{Coeff, QMode, Scalar, ScalarError};

/// A formal parameter together with its truncation weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    name: Arc<str>,
    weight: u32,
}

impl Var {
    pub fn new(name: &str, weight: u32) -> Self {
        Var {
            name: name.into(),
            weight,
        }
    }

    /// A parameter of weight 1.
    pub fn unit(name: &str) -> Self {
        Self::new(name, 1)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Monomial in formal parameters; exponents are positive and variables sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: &Var) -> Self {
        Monomial(vec![(v.clone(), 1)])
    }

    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        powers
            .into_iter()
            .filter(|(_, e)| *e > 0)
            .fold(Monomial::one(), |m, (v, e)| m.mul(&Monomial(vec![(v, e)])))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v.name() == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn weighted_degree(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.weight * e).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if other.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Exponents as a name-keyed map, for serialization.
    pub fn to_map(&self) -> BTreeMap<String, u32> {
        self.0
            .iter()
            .map(|(v, e)| (v.name().to_string(), *e))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.name().to_string()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial in formal parameters over a coefficient ring, truncated at a
/// weighted total degree `cap`.
#[derive(Clone, PartialEq)]
pub struct NovikovSeries<C> {
    cap: u32,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> NovikovSeries<C> {
    pub fn zero(cap: u32) -> Self {
        NovikovSeries {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, cap: u32) -> Self {
        Self::term(Monomial::one(), c, cap)
    }

    pub fn one(cap: u32) -> Self {
        Self::constant(C::one(), cap)
    }

    pub fn term(m: Monomial, c: C, cap: u32) -> Self {
        let mut s = Self::zero(cap);
        if !c.is_zero() && m.weighted_degree() <= cap {
            s.terms.insert(m, c);
        }
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() || m.weighted_degree() > self.cap {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.add(c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.cap = self.cap.min(other.cap);
        out.terms.retain(|m, _| m.weighted_degree() <= out.cap);
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        NovikovSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.cap);
        }
        if c.is_one() {
            return self.clone();
        }
        NovikovSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.cap);
        }
        NovikovSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.scale_rational(r)))
                .collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn scale_term(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, x) in &self.terms {
            out.add_term(k.mul(m), &x.mul(c));
        }
        out
    }

    /// Product truncated at `cap`.
    pub fn mul_capped(&self, other: &Self, cap: u32) -> Self {
        let mut out = Self::zero(cap);
        for (m1, c1) in &self.terms {
            let d1 = m1.weighted_degree();
            if d1 > cap {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.weighted_degree() > cap {
                    continue;
                }
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_capped(other, self.cap.min(other.cap))
    }

    pub fn truncate(&self, cap: u32) -> Self {
        NovikovSeries {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be invertible and every
    /// other term must carry positive weight.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(ScalarError::NonInvertibleSeries(c0.to_string()));
        }
        let inv0 = C::one().try_div(&c0)?;
        let mut rest = self.scale(&inv0);
        rest.terms.remove(&Monomial::one());
        if rest.terms.keys().any(|m| m.weighted_degree() == 0) {
            return Err(ScalarError::NonInvertibleSeries(self.to_string()));
        }
        // 1/(1+u) = sum (-u)^n; u has positive weight so the sum stops at cap
        let minus_u = rest.neg();
        let mut acc = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for _ in 0..self.cap {
            power = power.mul(&minus_u);
            if power.is_zero() {
                break;
            }
            acc.add_assign(&power);
        }
        Ok(acc.scale(&inv0))
    }

    pub fn map_coeffs<D: Coeff, F>(&self, mut f: F) -> Result<NovikovSeries<D>, ScalarError>
    where
        F: FnMut(&C) -> Result<D, ScalarError>,
    {
        let mut out = NovikovSeries::zero(self.cap);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self.terms.retain(|m, _| m.weighted_degree() <= cap);
        self
    }
}

impl NovikovSeries<Scalar> {
    /// Adams operation: each formal parameter `X -> X^k`, scalars `t -> t^k`,
    /// `a -> a^k`. The cap scales by `k` so no information is lost.
    pub fn adams(&self, k: u32) -> Self {
        let mut out = NovikovSeries::zero(self.cap.saturating_mul(k));
        for (m, c) in &self.terms {
            out.add_term(m.pow(k), &c.adams(k));
        }
        out
    }

    pub fn invert_q(&self) -> Self {
        NovikovSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.invert_q()))
                .collect(),
        }
    }

    pub fn lift<M: QMode>(&self, mode: &M) -> Result<NovikovSeries<M::C>, ScalarError> {
        self.map_coeffs(|c| mode.lift(c))
    }
}

impl<C: Coeff> fmt::Display for NovikovSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("[{c}]")
                } else {
                    format!("{m}*[{c}]")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for NovikovSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NovikovSeries(cap={}; {self})", self.cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1() -> Var {
        Var::unit("Q1")
    }

    #[test]
    fn products_drop_terms_above_cap() {
        let x = NovikovSeries::<Scalar>::one(3).add(&NovikovSeries::term(
            Monomial::var(&q1()),
            Scalar::from_int(2),
            3,
        ));
        let mut p = x.clone();
        for _ in 0..4 {
            p = p.mul(&x);
        }
        // (1 + 2Q)^5 truncated at degree 3
        assert_eq!(p.len(), 4);
        assert_eq!(p.coeff(&Monomial::var(&q1()).pow(3)), Scalar::from_int(80));
    }

    #[test]
    fn inverse_of_unit_series() {
        let x = NovikovSeries::<Scalar>::one(4).add(&NovikovSeries::term(
            Monomial::var(&q1()),
            Scalar::z(),
            4,
        ));
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv), NovikovSeries::one(4));
        assert!(NovikovSeries::<Scalar>::zero(4).inverse().is_err());
    }

    #[test]
    fn weighted_truncation() {
        let heavy = Var::new("X", 2);
        let s = NovikovSeries::<Scalar>::term(Monomial::var(&heavy).pow(2), Scalar::one(), 3);
        assert!(s.is_zero());
        let free = Var::new("xi", 0);
        let s = NovikovSeries::<Scalar>::term(Monomial::var(&free).pow(20), Scalar::one(), 0);
        assert_eq!(s.len(), 1);
    }
}
