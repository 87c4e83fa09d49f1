use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::numeric::NumScalar;
use super::upoly::UPoly;
use super::{Coeff, ScalarError};

/// Rational function in `t = q^{1/2}` with `a`-Laurent numerator:
///
/// `t^shift * sum_j a^j N_j(t) / D(t)`.
///
/// Canonical form: every `N_j` nonzero, the minimum `t`-valuation over the
/// `N_j` is zero, `D` is monic with `D(0) != 0`, and `D` is coprime to all
/// `N_j`. Zero is `shift = 0`, no components, `D = 1`. Structural equality is
/// therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i32,
    num: Vec<(i32, UPoly)>,
    den: UPoly,
}

impl Scalar {
    fn from_parts(shift: i32, num: Vec<(i32, UPoly)>, den: UPoly) -> Self {
        let mut s = Scalar { shift, num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        self.num.retain(|(_, p)| !p.is_zero());
        self.num.sort_by_key(|(j, _)| *j);
        if self.num.is_empty() {
            *self = Self::zero_value();
            return;
        }
        let dv = self.den.valuation();
        if dv > 0 {
            self.den = self.den.shift_down(dv);
            self.shift -= dv as i32;
        }
        if !self.den.is_constant() {
            let mut g = self.den.clone();
            for (_, p) in &self.num {
                g = g.gcd(p);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() {
                self.den = self.den.div_exact(&g).expect("gcd divides denominator");
                for (_, p) in self.num.iter_mut() {
                    *p = p.div_exact(&g).expect("gcd divides numerator");
                }
            }
        }
        let nv = self
            .num
            .iter()
            .map(|(_, p)| p.valuation())
            .min()
            .unwrap_or(0);
        if nv > 0 {
            for (_, p) in self.num.iter_mut() {
                *p = p.shift_down(nv);
            }
            self.shift += nv as i32;
        }
        let lead = self.den.lead();
        if !lead.is_one() {
            let inv = lead.recip();
            self.den = self.den.scale(&inv);
            for (_, p) in self.num.iter_mut() {
                *p = p.scale(&inv);
            }
        }
    }

    fn zero_value() -> Self {
        Scalar {
            shift: 0,
            num: Vec::new(),
            den: UPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `c * t^t_exp * a^a_exp`.
    pub fn monomial(c: BigRational, t_exp: i32, a_exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero_value();
        }
        Scalar {
            shift: t_exp,
            num: vec![(a_exp, UPoly::constant(c))],
            den: UPoly::one(),
        }
    }

    pub fn t_pow(k: i32) -> Self {
        Self::monomial(BigRational::one(), k, 0)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::t_pow(2 * k)
    }

    pub fn a_pow(j: i32) -> Self {
        Self::monomial(BigRational::one(), 0, j)
    }

    /// Laurent polynomial from `(coefficient, t exponent, a exponent)` terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i32, i32)>,
    {
        terms
            .into_iter()
            .fold(Self::zero_value(), |acc, (c, te, ae)| {
                acc.add(&Self::monomial(BigRational::from_integer(c.into()), te, ae))
            })
    }

    /// Quantum integer `{n} = q^{n/2} - q^{-n/2} = t^n - t^{-n}`.
    pub fn quantum_integer(n: i32) -> Self {
        Self::from_terms([(1, n, 0), (-1, -n, 0)])
    }

    /// `z = t - t^{-1}`.
    pub fn z() -> Self {
        Self::quantum_integer(1)
    }

    pub fn is_a_free(&self) -> bool {
        self.num.iter().all(|(j, _)| *j == 0)
    }

    /// Numerator expanded into `(t exponent, a exponent, coefficient)`, sorted
    /// by `t` then `a`.
    pub fn numerator_terms(&self) -> Vec<(i32, i32, BigRational)> {
        let mut out = Vec::new();
        for (j, p) in &self.num {
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.shift + k as i32, *j, c.clone()));
                }
            }
        }
        out.sort_by_key(|x| (x.0, x.1));
        out
    }

    /// Denominator coefficients, ascending in `t`.
    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    fn scalar_add(&self, rhs: &Self) -> Self {
        if self.num.is_empty() {
            return rhs.clone();
        }
        if rhs.num.is_empty() {
            return self.clone();
        }
        let shift = self.shift.min(rhs.shift);
        let ls = (self.shift - shift) as usize;
        let rs = (rhs.shift - shift) as usize;
        let (lmul, rmul, den) = if self.den == rhs.den {
            (UPoly::one(), UPoly::one(), self.den.clone())
        } else {
            let g = self.den.gcd(&rhs.den);
            let lco = rhs.den.div_exact(&g).expect("gcd divides");
            let rco = self.den.div_exact(&g).expect("gcd divides");
            let den = self.den.mul(&lco);
            (lco, rco, den)
        };
        let mut num: Vec<(i32, UPoly)> = Vec::new();
        let mut push = |j: i32, p: UPoly| match num.iter_mut().find(|(k, _)| *k == j) {
            Some((_, q)) => *q = q.add(&p),
            None => num.push((j, p)),
        };
        for (j, p) in &self.num {
            push(*j, p.shift_up(ls).mul(&lmul));
        }
        for (j, p) in &rhs.num {
            push(*j, p.shift_up(rs).mul(&rmul));
        }
        Self::from_parts(shift, num, den)
    }

    fn scalar_mul(&self, rhs: &Self) -> Self {
        if self.num.is_empty() || rhs.num.is_empty() {
            return Self::zero_value();
        }
        // cancel across before multiplying out
        let g1 = gcd_with_components(&rhs.den, &self.num);
        let g2 = gcd_with_components(&self.den, &rhs.num);
        let lnum: Vec<(i32, UPoly)> = self
            .num
            .iter()
            .map(|(j, p)| {
                (
                    *j,
                    if g1.is_one() {
                        p.clone()
                    } else {
                        p.div_exact(&g1).unwrap()
                    },
                )
            })
            .collect();
        let rnum: Vec<(i32, UPoly)> = rhs
            .num
            .iter()
            .map(|(j, p)| {
                (
                    *j,
                    if g2.is_one() {
                        p.clone()
                    } else {
                        p.div_exact(&g2).unwrap()
                    },
                )
            })
            .collect();
        let lden = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).unwrap()
        };
        let rden = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_exact(&g1).unwrap()
        };
        let mut num: Vec<(i32, UPoly)> = Vec::new();
        for (j1, p1) in &lnum {
            for (j2, p2) in &rnum {
                let prod = p1.mul(p2);
                match num.iter_mut().find(|(k, _)| *k == j1 + j2) {
                    Some((_, q)) => *q = q.add(&prod),
                    None => num.push((j1 + j2, prod)),
                }
            }
        }
        let mut s = Scalar {
            shift: self.shift + rhs.shift,
            num,
            den: lden.mul(&rden),
        };
        if s.num.len() == 1 && !s.num[0].1.is_zero() {
            // already coprime; only valuation and monic normalization needed
            s.num.retain(|(_, p)| !p.is_zero());
            let nv = s.num[0].1.valuation();
            if nv > 0 {
                s.num[0].1 = s.num[0].1.shift_down(nv);
                s.shift += nv as i32;
            }
            let lead = s.den.lead();
            if !lead.is_one() {
                let inv = lead.recip();
                s.den = s.den.scale(&inv);
                s.num[0].1 = s.num[0].1.scale(&inv);
            }
            s
        } else {
            s.normalize();
            s
        }
    }

    fn scalar_neg(&self) -> Self {
        Scalar {
            shift: self.shift,
            num: self.num.iter().map(|(j, p)| (*j, p.neg())).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse. Only scalars whose numerator is a single
    /// `a`-monomial can be inverted, so that denominators stay `a`-free.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        match self.num.as_slice() {
            [] => Err(ScalarError::DivisionByZero),
            [(j, p)] => Ok(Self::from_parts(
                -self.shift,
                vec![(-j, self.den.clone())],
                p.clone(),
            )),
            _ => Err(ScalarError::NonInvertibleDenominator(self.to_string())),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.scalar_mul(&rhs.inverse()?))
    }

    /// Evaluate at a rational `t`, leaving `a` symbolic.
    pub fn eval_t(&self, t: &BigRational) -> Result<NumScalar, ScalarError> {
        if self.num.is_empty() {
            return Ok(NumScalar::zero());
        }
        if t.is_zero() {
            return Err(ScalarError::PoleAtEvaluationPoint(t.to_string()));
        }
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(ScalarError::PoleAtEvaluationPoint(t.to_string()));
        }
        let tp = rational_pow(t, self.shift);
        let scale = tp / d;
        Ok(NumScalar::from_terms(
            self.num.iter().map(|(j, p)| (*j, p.eval(t) * &scale)),
        ))
    }

    /// Evaluate at a rational `q`, using the positive square root for `t`.
    pub fn eval_q(&self, q: &BigRational) -> Result<NumScalar, ScalarError> {
        let t = super::rational_sqrt(q).ok_or_else(|| ScalarError::NotASquare(q.to_string()))?;
        self.eval_t(&t)
    }

    /// Adams operation on line elements: `t -> t^k`, `a -> a^k`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operations are indexed from 1");
        if k == 1 || self.num.is_empty() {
            return self.clone();
        }
        let k_us = k as usize;
        Self::from_parts(
            self.shift * k as i32,
            self.num
                .iter()
                .map(|(j, p)| (j * k as i32, p.compose_power(k_us)))
                .collect(),
            self.den.compose_power(k_us),
        )
    }

    /// Substitution `t -> t^{-1}` (equivalently `q -> q^{-1}`).
    pub fn invert_q(&self) -> Self {
        if self.num.is_empty() {
            return self.clone();
        }
        let dmax = self.num.iter().map(|(_, p)| p.degree()).max().unwrap_or(0);
        let dd = self.den.degree() as i32;
        let num = self
            .num
            .iter()
            .map(|(j, p)| (*j, p.reversed().shift_up(dmax - p.degree())))
            .collect();
        Self::from_parts(-self.shift + dd - dmax as i32, num, self.den.reversed())
    }

    /// Substitution `a -> t^k`; `k = 0` is the `a = 1` specialization.
    pub fn subs_a_t_pow(&self, k: i32) -> Self {
        self.num.iter().fold(Self::zero_value(), |acc, (j, p)| {
            let term = Self::from_parts(self.shift + j * k, vec![(0, p.clone())], self.den.clone());
            acc.scalar_add(&term)
        })
    }
}

fn gcd_with_components(d: &UPoly, comps: &[(i32, UPoly)]) -> UPoly {
    if d.is_constant() {
        return UPoly::one();
    }
    let mut g = d.clone();
    for (_, p) in comps {
        g = g.gcd(p);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn rational_pow(x: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn from_rational(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.scalar_add(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.scalar_add(&rhs.scalar_neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.scalar_mul(rhs)
    }
    fn neg(&self) -> Self {
        self.scalar_neg()
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_div(rhs)
    }
    fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero_value();
        }
        Scalar {
            shift: self.shift,
            num: self.num.iter().map(|(j, p)| (*j, p.scale(r))).collect(),
            den: self.den.clone(),
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.scalar_add(rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.scalar_add(&rhs.scalar_neg())
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.scalar_mul(rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scalar_neg()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero_value()
    }
}

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (BigRational, Vec<(&'static str, i32)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        let vars: Vec<_> = vars.into_iter().filter(|(_, e)| *e != 0).collect();
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let mut parts: Vec<String> = Vec::new();
        if !abs.is_one() || vars.is_empty() {
            parts.push(abs.to_string());
        }
        for (name, e) in vars {
            if e == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        write!(f, "{}", parts.join("*"))?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self
            .numerator_terms()
            .into_iter()
            .map(|(te, ae, c)| (c, vec![("t", te), ("a", ae)]));
        if self.den.is_one() {
            return write_terms(f, num);
        }
        write!(f, "(")?;
        write_terms(f, num)?;
        write!(f, ")/(")?;
        let den = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), vec![("t", k as i32)]));
        write_terms(f, den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
