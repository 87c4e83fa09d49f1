//! Symmetric functions over truncated series coefficients.
//!
//! [`Sym`] is generic over its basis labels: [`SymFunc`] is the ring `Λ`
//! (labels are partitions) and [`Tensor`] is `Λ ⊗ Λ` (labels are pairs).
//! An element is graded by the label degree plus the weighted degree of the
//! formal parameters in its coefficient, and everything above `cap` is
//! dropped.

mod characters;
mod specialization;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::partitions::Partition;
use crate::scalars::{Coeff, Monomial, NovikovSeries, QMode, Scalar, ScalarError};

pub use characters::{char_table, character, rim_hook_removals, CharTable};
pub use specialization::{
    hook_content_value, principal_spec_h, principal_spec_h_rho, principal_spec_skew,
    sign_transpose_check,
};
pub use tensor::{cauchy_kernel, littlewood_richardson, skew_schur, Kernel, Tensor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("plethystic exponential of an argument with a degree-0 term: {0}")]
    NonNilpotentArgument(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlethysticVariant {
    /// `exp(sum_k psi_k / k)`
    Exp,
    /// `exp(sum_k (-1)^{k+1} psi_k / k)`
    Expp,
}

/// Basis label: a partition, or a tuple of partitions for tensor powers.
pub trait Label: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn degree(&self) -> usize;
    fn unit() -> Self;
    /// Label of the product `p_self * p_other` in the power-sum basis.
    fn join(&self, other: &Self) -> Self;
    /// `psi_k` on a power-sum label.
    fn adams(&self, k: usize) -> Self;
    /// Expansion of one basis element in the other basis.
    fn expand(&self, from: Basis) -> Vec<(Self, BigRational)>;
    /// `<p_self, p_self>` for the Hall inner product.
    fn z(&self) -> BigInt;
    /// Action of the involution `omega` on `p_self`: `(-1)^{|mu| - l(mu)}`.
    fn omega_sign(&self) -> i64;
}

impl Label for Partition {
    fn degree(&self) -> usize {
        self.size()
    }
    fn unit() -> Self {
        Partition::empty()
    }
    fn join(&self, other: &Self) -> Self {
        self.union(other)
    }
    fn adams(&self, k: usize) -> Self {
        self.scale_parts(k)
    }
    fn expand(&self, from: Basis) -> Vec<(Self, BigRational)> {
        let t = char_table(self.size());
        match from {
            Basis::Schur => t.schur_to_power(self).to_vec(),
            Basis::Power => t.power_to_schur(self).to_vec(),
        }
    }
    fn z(&self) -> BigInt {
        Partition::z(self)
    }
    fn omega_sign(&self) -> i64 {
        if (self.size() - self.length()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl Label for (Partition, Partition) {
    fn degree(&self) -> usize {
        self.0.size() + self.1.size()
    }
    fn unit() -> Self {
        (Partition::empty(), Partition::empty())
    }
    fn join(&self, other: &Self) -> Self {
        (self.0.union(&other.0), self.1.union(&other.1))
    }
    fn adams(&self, k: usize) -> Self {
        (self.0.scale_parts(k), self.1.scale_parts(k))
    }
    fn expand(&self, from: Basis) -> Vec<(Self, BigRational)> {
        let left = self.0.expand(from);
        let right = self.1.expand(from);
        let mut out = Vec::with_capacity(left.len() * right.len());
        for (l, a) in &left {
            for (r, b) in &right {
                out.push(((l.clone(), r.clone()), a * b));
            }
        }
        out
    }
    fn z(&self) -> BigInt {
        self.0.z() * self.1.z()
    }
    fn omega_sign(&self) -> i64 {
        self.0.omega_sign() * self.1.omega_sign()
    }
}

/// Element of `Λ` (or a tensor power) with coefficients in truncated series
/// over `C`. The coefficient of label `L` carries cap `cap - |L|`.
#[derive(Clone, PartialEq)]
pub struct Sym<L, C> {
    basis: Basis,
    cap: usize,
    terms: BTreeMap<L, NovikovSeries<C>>,
}

pub type SymFunc<C> = Sym<Partition, C>;

impl<L: Label, C: Coeff> Sym<L, C> {
    pub fn zero(basis: Basis, cap: usize) -> Self {
        Sym {
            basis,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis, cap: usize) -> Self {
        Self::term(basis, L::unit(), NovikovSeries::one(cap as u32), cap)
    }

    /// `series * b_label`, truncated.
    pub fn term(basis: Basis, label: L, series: NovikovSeries<C>, cap: usize) -> Self {
        let mut out = Self::zero(basis, cap);
        out.add_term(label, &series);
        out
    }

    /// `c * b_label` with a constant coefficient.
    pub fn basis_element(basis: Basis, label: L, c: C, cap: usize) -> Self {
        Self::term(basis, label, NovikovSeries::constant(c, cap as u32), cap)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cap(&self) -> usize {
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

    pub fn terms(&self) -> impl Iterator<Item = (&L, &NovikovSeries<C>)> {
        self.terms.iter()
    }

    /// Coefficient of a label in the current basis.
    pub fn coeff(&self, label: &L) -> NovikovSeries<C> {
        let cap = self.cap.saturating_sub(label.degree()) as u32;
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(|| NovikovSeries::zero(cap))
    }

    fn label_cap(&self, label: &L) -> Option<u32> {
        let d = label.degree();
        (d <= self.cap).then(|| (self.cap - d) as u32)
    }

    /// Add `series * b_label` in place.
    pub fn add_term(&mut self, label: L, series: &NovikovSeries<C>) {
        let Some(cap) = self.label_cap(&label) else {
            return;
        };
        if series.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(slot) => {
                let mut s = std::mem::replace(slot, NovikovSeries::zero(0)).with_cap(cap);
                s.add_assign(series);
                if s.is_zero() {
                    self.terms.remove(&label);
                } else {
                    *slot = s;
                }
            }
            None => {
                let s = series.truncate(cap);
                if !s.is_zero() {
                    self.terms.insert(label, s);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        let other = other.to_basis(self.basis);
        if other.cap < self.cap {
            *self = self.truncate(other.cap);
        }
        for (l, s) in &other.terms {
            self.add_term(l.clone(), s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        self.map_series(|s| s.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_series(|s| s.scale(c))
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.map_series(|s| s.scale_rational(r))
    }

    /// Multiply every coefficient by a series (a label-free element).
    pub fn scale_series(&self, f: &NovikovSeries<C>) -> Self {
        let mut out = Self::zero(self.basis, self.cap);
        for (l, s) in &self.terms {
            let cap = self.cap - l.degree();
            out.add_term(l.clone(), &s.mul_capped(f, cap as u32));
        }
        out
    }

    fn map_series<F: Fn(&NovikovSeries<C>) -> NovikovSeries<C>>(&self, f: F) -> Self {
        let mut out = Self::zero(self.basis, self.cap);
        for (l, s) in &self.terms {
            out.add_term(l.clone(), &f(s));
        }
        out
    }

    /// Lower the truncation.
    pub fn truncate(&self, cap: usize) -> Self {
        let mut out = Self::zero(self.basis, cap.min(self.cap));
        for (l, s) in &self.terms {
            out.add_term(l.clone(), s);
        }
        out
    }

    /// Keep only the labels satisfying `keep`.
    pub fn filter<F: Fn(&L) -> bool>(&self, keep: F) -> Self {
        Sym {
            basis: self.basis,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, s)| (l.clone(), s.clone()))
                .collect(),
        }
    }

    /// The same element in another basis.
    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target, self.cap);
        for (l, s) in &self.terms {
            for (m, r) in l.expand(self.basis) {
                out.add_term(m, &s.scale_rational(&r));
            }
        }
        out
    }

    /// Product; computed in the power-sum basis and returned in the basis of
    /// `self`.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.to_basis(Basis::Power);
        let b = other.to_basis(Basis::Power);
        a.mul_power(&b).to_basis(self.basis)
    }

    fn mul_power(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(Basis::Power, cap);
        for (l1, s1) in &self.terms {
            let d1 = l1.degree();
            if d1 > cap {
                continue;
            }
            for (l2, s2) in &other.terms {
                let d = d1 + l2.degree();
                if d > cap {
                    continue;
                }
                out.add_term(l1.join(l2), &s1.mul_capped(s2, (cap - d) as u32));
            }
        }
        out
    }

    /// Hall inner product, extended factorwise to tensor labels.
    pub fn hall_pairing(&self, other: &Self) -> NovikovSeries<C> {
        let a = self.to_basis(Basis::Power);
        let b = other.to_basis(Basis::Power);
        let cap = a.cap.min(b.cap) as u32;
        let mut acc = NovikovSeries::zero(cap);
        for (l, s1) in &a.terms {
            if let Some(s2) = b.terms.get(l) {
                let z = BigRational::from_integer(l.z());
                acc.add_assign(&s1.mul_capped(s2, cap).scale_rational(&z));
            }
        }
        acc
    }

    /// `omega` applied to every factor.
    pub fn omega(&self) -> Self {
        let p = self.to_basis(Basis::Power);
        let mut out = Self::zero(Basis::Power, self.cap);
        for (l, s) in &p.terms {
            let s = if l.omega_sign() < 0 {
                s.neg()
            } else {
                s.clone()
            };
            out.add_term(l.clone(), &s);
        }
        out.to_basis(self.basis)
    }

    /// `exp(self)`. Every term must have positive total degree.
    pub fn exp(&self) -> Result<Self, SymError> {
        let g = self.to_basis(Basis::Power);
        let cap = g.cap;
        for (l, s) in &g.terms {
            if l.degree() == 0 && s.terms().any(|(m, _)| m.weighted_degree() == 0) {
                return Err(SymError::NonNilpotentArgument(format!("{l:?}: {s}")));
            }
        }
        let mut acc = Self::one(Basis::Power, cap);
        for (l, s) in &g.terms {
            // exp(s p_l) = sum_n s^n p_l^n / n!
            let mut factor = Self::one(Basis::Power, cap);
            let mut power = Self::one(Basis::Power, cap);
            let single = Self::term(Basis::Power, l.clone(), s.clone(), cap);
            for n in 1..=cap {
                power = power.mul_power(&single);
                if power.is_zero() {
                    break;
                }
                factor.add_assign(
                    &power.scale_rational(&BigRational::new(BigInt::one(), factorial(n))),
                );
            }
            acc = acc.mul_power(&factor);
        }
        Ok(acc.to_basis(self.basis))
    }

    /// Compare two elements regardless of their bases.
    pub fn same_as(&self, other: &Self) -> bool {
        let cap = self.cap.min(other.cap);
        let a = self.truncate(cap);
        let b = other.to_basis(self.basis).truncate(cap);
        a.terms == b.terms
    }
}

impl<L: Label> Sym<L, Scalar> {
    /// Adams operation on labels and line elements.
    pub fn adams(&self, k: usize) -> Self {
        assert!(k >= 1, "Adams operations are indexed from 1");
        let p = self.to_basis(Basis::Power);
        let mut out = Self::zero(Basis::Power, self.cap);
        for (l, s) in &p.terms {
            out.add_term(l.adams(k), &s.adams(k as u32));
        }
        out.to_basis(self.basis)
    }

    /// Substitution `q -> q^{-1}` in every coefficient.
    pub fn invert_q(&self) -> Self {
        self.map_series(|s| s.invert_q())
    }

    /// Move into the working coefficient type of a q-mode.
    pub fn lift<M: QMode>(&self, mode: &M) -> Result<Sym<L, M::C>, ScalarError> {
        let mut out = Sym::zero(self.basis, self.cap);
        for (l, s) in &self.terms {
            out.add_term(l.clone(), &s.lift(mode)?);
        }
        Ok(out)
    }

    /// Plethystic exponential, evaluated in the coefficient type of `mode`.
    /// The Adams operations act on the symbolic argument before lifting.
    pub fn plethystic_exp<M: QMode>(
        &self,
        variant: PlethysticVariant,
        mode: &M,
    ) -> Result<Sym<L, M::C>, SymError> {
        let f = self.to_basis(Basis::Power);
        for (l, s) in &f.terms {
            if l.degree() == 0 && s.terms().any(|(m, _)| m.weighted_degree() == 0) {
                return Err(SymError::NonNilpotentArgument(format!("{l:?}: {s}")));
            }
        }
        let mut g = Self::zero(Basis::Power, self.cap);
        for k in 1..=self.cap.max(1) {
            let mut r = BigRational::new(BigInt::one(), BigInt::from(k));
            if variant == PlethysticVariant::Expp && k % 2 == 0 {
                r = -r;
            }
            g.add_assign(&f.adams(k).truncate(self.cap).scale_rational(&r));
        }
        let out = g.lift(mode)?.exp()?;
        Ok(out.to_basis(self.basis))
    }
}

impl<C: Coeff> SymFunc<C> {
    pub fn schur(lambda: Partition, cap: usize) -> Self {
        Self::basis_element(Basis::Schur, lambda, C::one(), cap)
    }

    pub fn power(mu: Partition, cap: usize) -> Self {
        Self::basis_element(Basis::Power, mu, C::one(), cap)
    }

    /// `p_1` times a monomial in formal parameters and a scalar.
    pub fn p1_term(m: Monomial, c: C, cap: usize) -> Self {
        Self::term(
            Basis::Power,
            Partition::row(1),
            NovikovSeries::term(m, c, cap as u32),
            cap,
        )
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl<L: Label, C: Coeff> fmt::Display for Sym<L, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let b = match self.basis {
            Basis::Schur => "s",
            Basis::Power => "p",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, s)| format!("({s}) {b}{l:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<L: Label, C: Coeff> fmt::Debug for Sym<L, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym(cap={}; {self})", self.cap)
    }
}

/// Rational constant helper for tests and callers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl<L: Label, C: Coeff> Sym<L, C> {
    /// Coefficient of a label with the formal parameters set to their
    /// constant term.
    pub fn constant_coeff(&self, label: &L) -> C {
        self.terms
            .get(label)
            .map(|s| s.constant_term())
            .unwrap_or_else(C::zero)
    }

    /// True when every coefficient vanishes at degrees where `keep` holds.
    pub fn vanishes_on<F: Fn(&L) -> bool>(&self, keep: F) -> bool {
        self.terms.keys().all(|l| !keep(l))
    }
}

#[cfg(test)]
mod tests;
