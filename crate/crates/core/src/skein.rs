//! The positive skein of the solid torus, modelled on `Λ` with `W_λ = s_λ`.
//!
//! The meridian acts diagonally on `W_λ`, the longitude `P_{0,1}` is
//! multiplication by `s_(1)`. Skein elements are [`SymFunc`]s in the Schur
//! basis. The dilogarithm variable `ξ` has weight 0 by default, so a skein
//! element truncated at `cap` keeps every `W_λ` with `|λ| <= cap`.

use crate::partitions::{BoxMove, Partition};
use crate::report::{partition_key, Report};
use crate::scalars::{Coeff, Monomial, NovikovSeries, QMode, Scalar, ScalarError, Var};
use crate::symfunc::{Basis, SymFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `P_{1,0}`
    Positive,
    /// `P_{-1,0}`
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiForm {
    Product,
    Exponential,
}

/// Forward recurrence for `Ψ[ξ]` or the reversed one for `Ψ[ξ]^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The default dilogarithm variable, of weight 0.
pub fn xi() -> Var {
    Var::new("xi", 0)
}

/// `C_λ(q) = sum_cells q^{content}`.
pub fn content_polynomial(lambda: &Partition) -> Scalar {
    lambda.contents().iter().fold(Scalar::zero(), |acc, &c| {
        acc.add(&Scalar::t_pow(2 * c as i32))
    })
}

/// The unknot `(a - a^{-1}) / z`.
pub fn unknot_value() -> Scalar {
    let num = Scalar::from_terms([(1, 0, 1), (-1, 0, -1)]);
    num.checked_div(&Scalar::z()).expect("z is a-free")
}

/// Eigenvalue of `P_{±1,0}` on `W_λ`.
pub fn meridian_eigenvalue(lambda: &Partition, orientation: Orientation) -> Scalar {
    let z = Scalar::z();
    match orientation {
        Orientation::Positive => {
            unknot_value().add(&z.mul(&Scalar::a_pow(1)).mul(&content_polynomial(lambda)))
        }
        Orientation::Negative => unknot_value().sub(
            &z.mul(&Scalar::a_pow(-1))
                .mul(&content_polynomial(lambda).invert_q()),
        ),
    }
}

fn hook_product(lambda: &Partition) -> Scalar {
    lambda.hooks().iter().fold(Scalar::one(), |acc, &h| {
        acc.mul(&Scalar::quantum_integer(h as i32))
    })
}

/// Coefficient of `W_λ` in `Ψ[ξ]` (forward) or `Ψ[ξ]^{-1}` (inverse), without
/// the `ξ^{|λ|}`.
pub fn psi_coefficient(lambda: &Partition, direction: Direction) -> Scalar {
    let half_kappa = (lambda.kappa() / 2) as i32;
    let (sign, shift) = match direction {
        Direction::Forward => (
            if lambda.size().is_multiple_of(2) {
                1
            } else {
                -1
            },
            -half_kappa,
        ),
        Direction::Inverse => (1, half_kappa),
    };
    Scalar::t_pow(shift)
        .mul(&Scalar::from_int(sign))
        .checked_div(&hook_product(lambda))
        .expect("a-free denominator")
}

fn product_form(xi: &Monomial, cap: usize, direction: Direction) -> SymFunc<Scalar> {
    let mut out = SymFunc::zero(Basis::Schur, cap);
    for lambda in Partition::enumerate(cap) {
        let m = xi.pow(lambda.size() as u32);
        let c = psi_coefficient(&lambda, direction);
        out.add_term(lambda, &NovikovSeries::term(m, c, cap as u32));
    }
    out
}

/// `exp(∓ sum_d ξ^d p_d / (d {d}))`.
fn exponential_form(xi: &Monomial, cap: usize, direction: Direction) -> SymFunc<Scalar> {
    let sign = match direction {
        Direction::Forward => -1,
        Direction::Inverse => 1,
    };
    let mut g = SymFunc::zero(Basis::Power, cap);
    for d in 1..=cap {
        let c = Scalar::from_int(sign)
            .checked_div(&Scalar::from_int(d as i64).mul(&Scalar::quantum_integer(d as i32)))
            .expect("a-free denominator");
        g.add_term(
            Partition::row(d),
            &NovikovSeries::term(xi.pow(d as u32), c, cap as u32),
        );
    }
    g.exp()
        .expect("positive-degree argument")
        .to_basis(Basis::Schur)
}

/// `Ψ[ξ]` truncated at `cap`, in either closed form.
pub fn psi(xi: &Monomial, cap: usize, form: PsiForm) -> SymFunc<Scalar> {
    match form {
        PsiForm::Product => product_form(xi, cap, Direction::Forward),
        PsiForm::Exponential => exponential_form(xi, cap, Direction::Forward),
    }
}

/// `Ψ[ξ]^{-1}` truncated at `cap`.
pub fn psi_inverse(xi: &Monomial, cap: usize, form: PsiForm) -> SymFunc<Scalar> {
    match form {
        PsiForm::Product => product_form(xi, cap, Direction::Inverse),
        PsiForm::Exponential => exponential_form(xi, cap, Direction::Inverse),
    }
}

/// Solve the forward recurrence `C_λ(q) c_λ = -(ξ/z) sum_{μ ⋖ λ} c_μ` from
/// `c_∅ = 1`, one size at a time.
pub fn psi_by_recursion(xi: &Monomial, cap: usize) -> SymFunc<Scalar> {
    let mut out = SymFunc::one(Basis::Schur, cap);
    for n in 1..=cap {
        for lambda in Partition::of_size(n) {
            let below = lambda
                .box_moves(BoxMove::Remove)
                .iter()
                .fold(NovikovSeries::zero(cap as u32), |acc, mu| {
                    acc.add(&out.coeff(mu))
                });
            let factor = Scalar::from_int(-1)
                .checked_div(&Scalar::z().mul(&content_polynomial(&lambda)))
                .expect("content polynomial is a-free");
            out.add_term(lambda, &below.scale_term(xi, &factor));
        }
    }
    out
}

/// Apply `○ - P_{±1,0} - a^{±1} ξ P_{0,1}` to `f`, optionally at `a = 1`.
pub fn dilog_operator(
    f: &SymFunc<Scalar>,
    xi: &Monomial,
    direction: Direction,
    a_one: bool,
) -> SymFunc<Scalar> {
    let spec = |s: Scalar| if a_one { s.subs_a_t_pow(0) } else { s };
    let f = f.to_basis(Basis::Schur);
    let cap = f.cap();
    let (orientation, a_exp) = match direction {
        Direction::Forward => (Orientation::Positive, 1),
        Direction::Inverse => (Orientation::Negative, -1),
    };
    let unknot = spec(unknot_value());
    let mut out = SymFunc::zero(Basis::Schur, cap);
    for (lambda, c) in f.terms() {
        let diag = unknot.sub(&spec(meridian_eigenvalue(lambda, orientation)));
        out.add_term(lambda.clone(), &c.scale(&diag));
        let longitude = spec(Scalar::a_pow(a_exp)).neg();
        for nu in lambda.box_moves(BoxMove::Add) {
            out.add_term(nu, &c.scale_term(xi, &longitude));
        }
    }
    out
}

/// Residual of the dilogarithm recurrence for every `|λ| <= cap`.
pub fn verify_dilog_recurrence(
    xi: &Monomial,
    cap: usize,
    direction: Direction,
    a_one: bool,
) -> Report {
    let (name, f) = match direction {
        Direction::Forward => ("dilog-recurrence", psi(xi, cap, PsiForm::Product)),
        Direction::Inverse => (
            "dilog-inverse-recurrence",
            psi_inverse(xi, cap, PsiForm::Product),
        ),
    };
    let name = if a_one {
        format!("{name}-a1")
    } else {
        name.to_string()
    };
    let r = dilog_operator(&f, xi, direction, a_one);
    let mut report = Report::new(name, cap);
    for lambda in Partition::enumerate(cap) {
        report.record(partition_key(&lambda), &r.coeff(&lambda));
    }
    report
}

/// `prod_i Ψ[α_i] / prod_j Ψ[β_j]` in the working coefficients of `mode`,
/// returned in the power-sum basis.
pub fn solution_z<M: QMode>(
    alphas: &[Monomial],
    betas: &[Monomial],
    cap: usize,
    mode: &M,
) -> Result<SymFunc<M::C>, ScalarError> {
    let mut acc = SymFunc::one(Basis::Power, cap);
    let factors = alphas
        .iter()
        .map(|a| (a, Direction::Forward))
        .chain(betas.iter().map(|b| (b, Direction::Inverse)));
    for (m, direction) in factors {
        let f = product_form(m, cap, direction)
            .lift(mode)?
            .to_basis(Basis::Power);
        acc = acc.mul(&f);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Symbolic;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn xi_m() -> Monomial {
        Monomial::var(&xi())
    }

    fn over(n: Scalar, d: Scalar) -> Scalar {
        n.checked_div(&d).unwrap()
    }

    #[test]
    fn eigenvalues_and_unknot() {
        let z = Scalar::z();
        let unknot = unknot_value();
        assert_eq!(
            meridian_eigenvalue(&Partition::empty(), Orientation::Positive),
            unknot
        );
        assert_eq!(
            meridian_eigenvalue(&p(&[1]), Orientation::Positive),
            unknot.add(&z.mul(&Scalar::a_pow(1)))
        );
        assert_eq!(
            meridian_eigenvalue(&p(&[1]), Orientation::Negative),
            unknot.sub(&z.mul(&Scalar::a_pow(-1)))
        );
        assert!(unknot.subs_a_t_pow(0).is_zero());
        assert_eq!(unknot.subs_a_t_pow(1), Scalar::one());
    }

    #[test]
    fn eigenvalues_are_distinct() {
        let parts = Partition::enumerate(6);
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                assert_ne!(
                    meridian_eigenvalue(a, Orientation::Positive),
                    meridian_eigenvalue(b, Orientation::Positive)
                );
            }
        }
    }

    #[test]
    fn psi_low_coefficients() {
        let f = psi(&xi_m(), 3, PsiForm::Product);
        let q1 = Scalar::quantum_integer(1);
        let q2 = Scalar::quantum_integer(2);
        assert_eq!(f.coeff(&Partition::empty()), NovikovSeries::one(3));
        let c1 = f.coeff(&p(&[1]));
        assert_eq!(c1.coeff(&xi_m()), over(Scalar::from_int(-1), q1.clone()));
        let c2 = f.coeff(&p(&[2]));
        assert_eq!(
            c2.coeff(&xi_m().pow(2)),
            over(Scalar::t_pow(-1), q1.mul(&q2))
        );
        let inv = psi_inverse(&xi_m(), 3, PsiForm::Product);
        assert_eq!(inv.coeff(&p(&[1])).coeff(&xi_m()), over(Scalar::one(), q1));
        assert_eq!(inv.coeff(&Partition::empty()), NovikovSeries::one(3));
    }

    #[test]
    fn two_forms_agree_and_inverse() {
        let cap = 6;
        let prod = psi(&xi_m(), cap, PsiForm::Product);
        assert_eq!(prod, psi(&xi_m(), cap, PsiForm::Exponential));
        assert_eq!(
            psi_inverse(&xi_m(), cap, PsiForm::Product),
            psi_inverse(&xi_m(), cap, PsiForm::Exponential)
        );
        let one = prod.mul(&psi_inverse(&xi_m(), cap, PsiForm::Product));
        assert_eq!(one, SymFunc::one(Basis::Schur, cap));
    }

    #[test]
    fn recursion_reproduces_product_form() {
        assert_eq!(
            psi_by_recursion(&xi_m(), 7),
            psi(&xi_m(), 7, PsiForm::Product)
        );
    }

    #[test]
    fn recurrences_small_cap() {
        for a_one in [false, true] {
            for direction in [Direction::Forward, Direction::Inverse] {
                for cap in 0..=4 {
                    let r = verify_dilog_recurrence(&xi_m(), cap, direction, a_one);
                    assert!(r.pass, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn wrong_orientation_fails() {
        // the forward Ψ does not satisfy the reversed recurrence
        let f = psi(&xi_m(), 2, PsiForm::Product);
        let r = dilog_operator(&f, &xi_m(), Direction::Inverse, false);
        assert!(!r.is_zero());
    }

    #[test]
    fn solution_examples() {
        let cap = 3;
        let q = Var::unit("Q");
        let z = solution_z(&[Monomial::one()], &[], cap, &Symbolic)
            .unwrap()
            .to_basis(Basis::Schur);
        assert_eq!(
            z.constant_coeff(&p(&[1])),
            over(Scalar::from_int(-1), Scalar::z())
        );
        let z = solution_z(&[Monomial::one()], &[Monomial::var(&q)], cap, &Symbolic)
            .unwrap()
            .to_basis(Basis::Schur);
        let c = z.coeff(&p(&[1]));
        assert_eq!(c.constant_term(), over(Scalar::from_int(-1), Scalar::z()));
        assert_eq!(
            c.coeff(&Monomial::var(&q)),
            over(Scalar::one(), Scalar::z())
        );
        let empty = solution_z(&[], &[], cap, &Symbolic).unwrap();
        assert_eq!(empty, SymFunc::one(Basis::Power, cap));
    }
}
