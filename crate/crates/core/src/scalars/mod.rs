//! Exact coefficient arithmetic.
//!
//! [`Scalar`] is a rational function in `t = q^{1/2}` whose numerator is a
//! Laurent polynomial in `a`. [`NumScalar`] is the same object after `t` has
//! been fixed to a rational number. Both implement [`Coeff`], and a [`QMode`]
//! turns symbolic constants into whichever coefficient type a computation
//! runs over. [`NovikovSeries`] adds degree-truncated formal parameters
//! (`Q_i`, `xi`, ...) on top of a coefficient type.

mod novikov;
mod numeric;
mod scalar;
pub mod upoly;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use novikov::{Monomial, NovikovSeries, Var};
pub use numeric::NumScalar;
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator depends on `a`: {0}")]
    NonInvertibleDenominator(String),
    #[error("pole at evaluation point t = {0}")]
    PoleAtEvaluationPoint(String),
    #[error("q = {0} is not the square of a nonzero rational")]
    NotASquare(String),
    #[error("series with constant term {0} is not invertible")]
    NonInvertibleSeries(String),
}

/// Coefficient ring interface shared by symbolic and numeric scalars.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: BigRational) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiply by a rational constant.
    fn scale_rational(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rational(r.clone()))
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// How `q` is treated during a computation: symbolically, or fixed to a
/// rational value of `t = q^{1/2}`.
pub trait QMode: Clone + fmt::Debug + Send + Sync {
    type C: Coeff;

    /// Map a symbolic scalar into the working coefficient type.
    fn lift(&self, s: &Scalar) -> Result<Self::C, ScalarError>;

    /// Short label used in reports.
    fn label(&self) -> String;

    /// Lift a scalar that is known not to have a pole at the working point
    /// (Laurent polynomials in `t`, quantum integers away from `t = ±1`).
    fn lift_regular(&self, s: &Scalar) -> Self::C {
        self.lift(s)
            .expect("regular scalar has no pole at the evaluation point")
    }

    fn t_pow(&self, k: i32) -> Self::C {
        self.lift_regular(&Scalar::t_pow(k))
    }

    fn quantum_integer(&self, n: i32) -> Self::C {
        self.lift_regular(&Scalar::quantum_integer(n))
    }
}

/// Fully symbolic `q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Symbolic;

impl QMode for Symbolic {
    type C = Scalar;

    fn lift(&self, s: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(s.clone())
    }

    fn label(&self) -> String {
        "symbolic".into()
    }
}

/// `t = q^{1/2}` fixed to a nonzero rational other than `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeric {
    t: BigRational,
}

impl Numeric {
    /// Fix `t` directly.
    pub fn with_t(t: BigRational) -> Result<Self, ScalarError> {
        if t.is_zero() || t == BigRational::one() || t == -BigRational::one() {
            return Err(ScalarError::PoleAtEvaluationPoint(t.to_string()));
        }
        Ok(Numeric { t })
    }

    /// Fix `q`; it must be the square of a rational. The positive root is used.
    pub fn with_q(q: &BigRational) -> Result<Self, ScalarError> {
        let t = rational_sqrt(q).ok_or_else(|| ScalarError::NotASquare(q.to_string()))?;
        Self::with_t(t)
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }
}

impl QMode for Numeric {
    type C = NumScalar;

    fn lift(&self, s: &Scalar) -> Result<NumScalar, ScalarError> {
        s.eval_t(&self.t)
    }

    fn label(&self) -> String {
        format!("numeric(t={})", self.t)
    }
}

/// Positive rational square root, if it exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    use num_traits::Signed;
    if q.is_negative() || q.is_zero() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}
