//! `U(1)` reduction to one-variable series in `x` and the quantum mirror
//! curve as a `q`-difference operator.
//!
//! Degrees are counted jointly: the coefficient of `x^d` in a series of cap
//! `N` is a Novikov series of cap `N - d`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use crate::report::Report;
use crate::scalars::{Coeff, Monomial, NovikovSeries, QMode, Scalar, ScalarError};
use crate::skein::solution_z;
use crate::symfunc::{Basis, SymFunc};
use crate::vertex::{mirror_and_quantum, StripGeometry};

#[derive(Clone, PartialEq)]
pub struct QSeries<C> {
    cap: usize,
    coeffs: Vec<NovikovSeries<C>>,
}

impl<C: Coeff> QSeries<C> {
    pub fn zero(cap: usize) -> Self {
        QSeries {
            cap,
            coeffs: (0..=cap)
                .map(|d| NovikovSeries::zero((cap - d) as u32))
                .collect(),
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut out = Self::zero(cap);
        out.coeffs[0] = NovikovSeries::one(cap as u32);
        out
    }

    /// `sum_d coeffs[d] x^d`, truncated.
    pub fn from_coeffs(coeffs: &[NovikovSeries<C>], cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for (d, c) in coeffs.iter().enumerate().take(cap + 1) {
            out.coeffs[d].add_assign(&c.truncate((cap - d) as u32));
        }
        out
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient of `x^d`.
    pub fn coeff(&self, d: usize) -> &NovikovSeries<C> {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[NovikovSeries<C>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let coeffs = (0..=cap)
            .map(|d| {
                self.coeffs[d]
                    .add(&other.coeffs[d])
                    .truncate((cap - d) as u32)
            })
            .collect();
        QSeries { cap, coeffs }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(cap);
        for i in 0..=cap {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=cap - i {
                let c = self.coeffs[i].mul_capped(&other.coeffs[j], (cap - i - j) as u32);
                out.coeffs[i + j].add_assign(&c);
            }
        }
        out
    }

    /// `f(x) -> f(qx)`.
    pub fn sigma_q<M: QMode<C = C>>(&self, mode: &M) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| c.scale(&mode.t_pow(2 * d as i32)))
            .collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }

    /// `exp(self)` for a series without constant term, by
    /// `n E_n = sum_k k g_k E_{n-k}`.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "exp needs a series without constant term"
        );
        let mut e: Vec<NovikovSeries<C>> = vec![NovikovSeries::one(self.cap as u32)];
        for n in 1..=self.cap {
            let mut acc = NovikovSeries::zero((self.cap - n) as u32);
            for k in 1..=n {
                let term = self.coeffs[k].mul_capped(&e[n - k], (self.cap - n) as u32);
                acc.add_assign(&term.scale_rational(&BigRational::from_integer(k.into())));
            }
            e.push(acc.scale_rational(&BigRational::new(
                BigRational::one().numer().clone(),
                n.into(),
            )));
        }
        QSeries {
            cap: self.cap,
            coeffs: e,
        }
    }
}

impl<C: Coeff> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) x^{d}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[cap {}]({self})", self.cap)
    }
}

/// `p_λ -> x^{|λ|}`.
pub fn u1_reduce<C: Coeff>(f: &SymFunc<C>) -> QSeries<C> {
    let p = f.to_basis(Basis::Power);
    let mut out = QSeries::zero(p.cap());
    for (l, s) in p.terms() {
        out.coeffs[l.size()].add_assign(s);
    }
    out
}

/// `z(x) = exp(-sum_d (sum_i α_i^d - sum_j β_j^d) x^d / (d {d}))`.
pub fn log_reduce<M: QMode>(
    strip: &StripGeometry,
    cap: usize,
    mode: &M,
) -> Result<QSeries<M::C>, ScalarError> {
    let (alphas, betas) = strip.strip_params();
    let mut g = QSeries::zero(cap);
    for d in 1..=cap {
        let w = Scalar::from_int(-(d as i64)).mul(&Scalar::quantum_integer(d as i32));
        let c = mode.lift(&Scalar::one().checked_div(&w)?)?;
        let mut s = NovikovSeries::zero((cap - d) as u32);
        for a in &alphas {
            s.add_term(a.pow(d as u32), &c);
        }
        for b in &betas {
            s.add_term(b.pow(d as u32), &c.neg());
        }
        g.coeffs[d] = s;
    }
    Ok(g.exp())
}

fn lift_poly<M: QMode>(
    coeffs: &[NovikovSeries<Scalar>],
    cap: usize,
    mode: &M,
) -> Result<QSeries<M::C>, ScalarError> {
    let lifted = coeffs
        .iter()
        .map(|c| c.lift(mode))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QSeries::from_coeffs(&lifted, cap))
}

/// `σ_q(z) prod_j (1 - q^{1/2} β_j x) - z prod_i (1 - q^{1/2} α_i x)` for
/// `z = u1_reduce(solution_z)`.
pub fn annihilation_residual<M: QMode>(
    strip: &StripGeometry,
    cap: usize,
    mode: &M,
) -> Result<QSeries<M::C>, ScalarError> {
    let (alphas, betas) = strip.strip_params();
    let z = u1_reduce(&solution_z(&alphas, &betas, cap, mode)?);
    let curve = mirror_and_quantum(strip);
    let pa = lift_poly(&curve.quantum_a, cap, mode)?;
    let pb = lift_poly(&curve.quantum_b, cap, mode)?;
    Ok(z.sigma_q(mode).mul(&pb).sub(&z.mul(&pa)))
}

pub fn verify_annihilation<M: QMode>(
    strip: &StripGeometry,
    cap: usize,
    mode: &M,
) -> Result<Report, ScalarError> {
    let r = annihilation_residual(strip, cap, mode)?;
    let mut report = Report::new(
        format!("quantum-curve-{}-{}", strip.word(), mode.label()),
        cap,
    );
    for (d, c) in r.coeffs().iter().enumerate() {
        report.record(json!(d), c);
    }
    Ok(report)
}

/// [`log_reduce`] against the reduction of the product of dilogarithms.
pub fn verify_log_reduce<M: QMode>(
    strip: &StripGeometry,
    cap: usize,
    mode: &M,
) -> Result<Report, ScalarError> {
    let (alphas, betas) = strip.strip_params();
    let z = u1_reduce(&solution_z(&alphas, &betas, cap, mode)?);
    let diff = z.sub(&log_reduce(strip, cap, mode)?);
    let mut report = Report::new(format!("log-reduce-{}-{}", strip.word(), mode.label()), cap);
    for (d, c) in diff.coeffs().iter().enumerate() {
        report.record(json!(d), c);
    }
    Ok(report)
}

/// `x^d` as a series.
pub fn x_pow<C: Coeff>(d: usize, cap: usize) -> QSeries<C> {
    let mut out = QSeries::zero(cap);
    if d <= cap {
        out.coeffs[d] = NovikovSeries::term(Monomial::one(), C::one(), (cap - d) as u32);
    }
    out
}
