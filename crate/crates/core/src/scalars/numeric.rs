use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::write_terms;
use super::{Coeff, ScalarError};

/// A scalar after `t` has been fixed: a Laurent polynomial in `a` over the
/// rationals, keyed by `a`-exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NumScalar {
    terms: BTreeMap<i32, BigRational>,
}

impl NumScalar {
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for (j, c) in terms {
            if c.is_zero() {
                continue;
            }
            let slot = out.entry(j).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                out.remove(&j);
            }
        }
        NumScalar { terms: out }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigRational> {
        &self.terms
    }

    /// The value when it does not depend on `a`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }
}

impl Coeff for NumScalar {
    fn zero() -> Self {
        NumScalar::default()
    }
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: BigRational) -> Self {
        NumScalar::from_rational(r)
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (j, c) in &rhs.terms {
            let slot = out.entry(*j).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                out.remove(j);
            }
        }
        NumScalar { terms: out }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (j1, c1) = self.terms.iter().next().unwrap();
            let (j2, c2) = rhs.terms.iter().next().unwrap();
            return NumScalar {
                terms: BTreeMap::from([(j1 + j2, c1 * c2)]),
            };
        }
        Self::from_terms(
            self.terms
                .iter()
                .flat_map(|(j1, c1)| rhs.terms.iter().map(move |(j2, c2)| (j1 + j2, c1 * c2))),
        )
    }
    fn neg(&self) -> Self {
        NumScalar {
            terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        match rhs.terms.len() {
            0 => Err(ScalarError::DivisionByZero),
            1 => {
                let (j, c) = rhs.terms.iter().next().unwrap();
                let inv = c.recip();
                Ok(NumScalar {
                    terms: self.terms.iter().map(|(k, d)| (k - j, d * &inv)).collect(),
                })
            }
            _ => Err(ScalarError::NonInvertibleDenominator(rhs.to_string())),
        }
    }
    fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        NumScalar {
            terms: self.terms.iter().map(|(j, c)| (*j, c * r)).collect(),
        }
    }
}

impl fmt::Display for NumScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|(j, c)| (c.clone(), vec![("a", *j)])),
        )
    }
}

impl fmt::Debug for NumScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumScalar({self})")
    }
}
