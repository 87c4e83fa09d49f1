use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::scalars::{Symbolic, Var};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn one_series(cap: usize) -> NovikovSeries<Scalar> {
    NovikovSeries::one(cap as u32)
}

fn schur(parts: &[usize], cap: usize) -> SymFunc<Scalar> {
    SymFunc::schur(p(parts), cap)
}

fn power(parts: &[usize], cap: usize) -> SymFunc<Scalar> {
    SymFunc::power(p(parts), cap)
}

/// Polynomials in `NVARS` commuting variables with integer coefficients.
const NVARS: usize = 4;
type Poly = HashMap<[u32; NVARS], i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = [0; NVARS];
            for i in 0..NVARS {
                e[i] = ea[i] + eb[i];
            }
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_power_sum(k: u32) -> Poly {
    (0..NVARS)
        .map(|i| {
            let mut e = [0; NVARS];
            e[i] = k;
            (e, 1)
        })
        .collect()
}

/// `s_lambda(x_1..x_4)` as a sum over semistandard tableaux.
fn poly_schur(lambda: &Partition) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let mut out = Poly::new();
    let mut filling = vec![0u32; cells.len()];
    fn rec(k: usize, cells: &[(usize, usize)], filling: &mut Vec<u32>, out: &mut Poly) {
        if k == cells.len() {
            let mut e = [0; NVARS];
            for &v in filling.iter() {
                e[v as usize] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let (i, j) = cells[k];
        for v in 0..NVARS as u32 {
            let left_ok =
                j == 0 || filling[cells.iter().position(|&c| c == (i, j - 1)).unwrap()] <= v;
            let up_ok = i == 0 || filling[cells.iter().position(|&c| c == (i - 1, j)).unwrap()] < v;
            if left_ok && up_ok {
                filling[k] = v;
                rec(k + 1, cells, filling, out);
            }
        }
    }
    rec(0, &cells, &mut filling, &mut out);
    out
}

#[test]
fn characters_match_monomial_expansion() {
    // p_mu = sum_lambda chi^lambda(mu) s_lambda, checked as polynomials
    for n in 1..=NVARS {
        for mu in Partition::of_size(n) {
            let pm = mu
                .parts()
                .iter()
                .fold(Poly::from([([0; NVARS], 1)]), |acc, &k| {
                    poly_mul(&acc, &poly_power_sum(k as u32))
                });
            let mut rhs = Poly::new();
            for lam in Partition::of_size(n) {
                let c = character(&lam, &mu);
                for (e, v) in poly_schur(&lam) {
                    *rhs.entry(e).or_default() += c * v;
                }
            }
            rhs.retain(|_, c| *c != 0);
            assert_eq!(pm, rhs, "mu = {mu}");
        }
    }
}

#[test]
fn conversion_examples() {
    let cap = 4;
    assert!(power(&[1], cap).same_as(&schur(&[1], cap)));
    let expected = schur(&[2], cap).sub(&schur(&[1, 1], cap));
    assert_eq!(power(&[2], cap).to_basis(Basis::Schur), expected);
    let expected = power(&[1, 1], cap)
        .add(&power(&[2], cap))
        .scale_rational(&rat(1, 2));
    assert_eq!(schur(&[2], cap).to_basis(Basis::Power), expected);
}

#[test]
fn multiplication_examples() {
    let cap = 4;
    let prod = schur(&[1], cap).mul(&schur(&[1], cap));
    assert_eq!(prod, schur(&[2], cap).add(&schur(&[1, 1], cap)));
    let f = schur(&[2, 1], cap).add(&schur(&[3], cap).scale_rational(&rat(-3, 5)));
    assert!(f.mul(&SymFunc::one(Basis::Schur, cap)).same_as(&f));
    assert_eq!(power(&[1], cap).mul(&power(&[2], cap)), power(&[2, 1], cap));
    // truncation drops degree above the cap
    assert!(schur(&[2], 3).mul(&schur(&[2], 3)).is_zero());
}

#[test]
fn pairing_examples() {
    let cap = 4;
    let two = NovikovSeries::constant(Scalar::from_int(2), cap as u32);
    assert_eq!(
        schur(&[2], cap).hall_pairing(&schur(&[2], cap)),
        one_series(cap)
    );
    assert_eq!(power(&[2], cap).hall_pairing(&power(&[2], cap)), two);
    assert!(schur(&[2], cap)
        .hall_pairing(&schur(&[1, 1], cap))
        .is_zero());
}

#[test]
fn skew_schur_examples() {
    let cap = 4;
    assert_eq!(
        skew_schur::<Scalar>(&p(&[1]), &p(&[1]), cap),
        SymFunc::one(Basis::Schur, cap)
    );
    assert_eq!(
        skew_schur::<Scalar>(&p(&[2, 1]), &p(&[1]), cap),
        schur(&[2], cap).add(&schur(&[1, 1], cap))
    );
    assert!(skew_schur::<Scalar>(&p(&[1]), &p(&[2]), cap).is_zero());
}

/// `<s_{lambda/mu}, s_nu> = <s_lambda, s_mu s_nu>` computed by brute-force
/// pairing against products.
#[test]
fn skew_schur_adjunction() {
    let cap = 6;
    for lam in Partition::enumerate(5) {
        for mu in Partition::enumerate(lam.size()) {
            let skew = skew_schur::<Scalar>(&lam, &mu, cap);
            for nu in Partition::of_size(lam.size() - mu.size()) {
                let lhs = skew.hall_pairing(&SymFunc::schur(nu.clone(), cap));
                let rhs = SymFunc::<Scalar>::schur(lam.clone(), cap).hall_pairing(
                    &SymFunc::schur(mu.clone(), cap).mul(&SymFunc::schur(nu.clone(), cap)),
                );
                assert_eq!(lhs, rhs, "{lam}/{mu} against {nu}");
            }
        }
    }
}

#[test]
fn adams_examples() {
    let cap = 6;
    let q = Var::unit("Q");
    assert_eq!(power(&[1], cap).adams(2), power(&[2], cap));
    let f = schur(&[2, 1], cap).add(&schur(&[1], cap));
    assert!(f.adams(1).same_as(&f));
    let tq = SymFunc::p1_term(Monomial::var(&q), Scalar::t_pow(1), cap);
    let expected = SymFunc::term(
        Basis::Power,
        p(&[2]),
        NovikovSeries::term(Monomial::var(&q).pow(2), Scalar::t_pow(2), cap as u32),
        cap,
    );
    assert_eq!(tq.adams(2), expected);
}

#[test]
fn plethystic_exp_of_a_variable() {
    let cap = 6;
    let x = Var::unit("x");
    let f = SymFunc::p1_term(Monomial::var(&x), Scalar::one(), cap);
    let exp = f
        .plethystic_exp(PlethysticVariant::Exp, &Symbolic)
        .unwrap()
        .to_basis(Basis::Schur);
    let expp = f
        .plethystic_exp(PlethysticVariant::Expp, &Symbolic)
        .unwrap()
        .to_basis(Basis::Schur);
    let mut h = SymFunc::zero(Basis::Schur, cap);
    let mut e = SymFunc::zero(Basis::Schur, cap);
    for n in 0..=cap / 2 {
        let xn = NovikovSeries::term(Monomial::var(&x).pow(n as u32), Scalar::one(), cap as u32);
        h.add_term(Partition::row(n), &xn);
        e.add_term(Partition::column(n), &xn);
    }
    assert_eq!(exp, h);
    assert_eq!(expp, e);
    let zero = SymFunc::<Scalar>::zero(Basis::Power, cap);
    assert_eq!(
        zero.plethystic_exp(PlethysticVariant::Exp, &Symbolic)
            .unwrap(),
        SymFunc::one(Basis::Power, cap)
    );
}

#[test]
fn non_nilpotent_argument_is_rejected() {
    let f = SymFunc::<Scalar>::one(Basis::Schur, 4);
    assert!(matches!(
        f.plethystic_exp(PlethysticVariant::Exp, &Symbolic),
        Err(SymError::NonNilpotentArgument(_))
    ));
    // a degree-0 label is fine when the coefficient has positive weight
    let q = Var::unit("Q");
    let g = SymFunc::term(
        Basis::Power,
        Partition::empty(),
        NovikovSeries::term(Monomial::var(&q), Scalar::one(), 4),
        4,
    );
    let exp = g.plethystic_exp(PlethysticVariant::Exp, &Symbolic).unwrap();
    // Exp(Q) = 1/(1-Q)
    let geo = (0..=4).fold(NovikovSeries::zero(4), |acc: NovikovSeries<Scalar>, n| {
        acc.add(&NovikovSeries::term(
            Monomial::var(&q).pow(n),
            Scalar::one(),
            4,
        ))
    });
    assert_eq!(exp.coeff(&Partition::empty()), geo);
}

#[test]
fn littlewood_richardson_small() {
    assert_eq!(
        littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])),
        BigInt::from(1)
    );
    assert_eq!(
        littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])),
        BigInt::from(2)
    );
    assert_eq!(
        littlewood_richardson(&p(&[3]), &p(&[1, 1]), &p(&[1])),
        BigInt::from(0)
    );
}

#[test]
fn cauchy_identities_small() {
    let cap = 8;
    let mut sum = Tensor::<Scalar>::zero(Basis::Power, cap);
    let mut alt = Tensor::<Scalar>::zero(Basis::Power, cap);
    for k in 1..=cap / 2 {
        let pk = Tensor::basis_element(
            Basis::Power,
            (Partition::row(k), Partition::row(k)),
            Scalar::one(),
            cap,
        );
        sum = sum.add(&pk.scale_rational(&rat(1, k as i64)));
        let sign = if k % 2 == 0 { -1 } else { 1 };
        alt = alt.add(&pk.scale_rational(&rat(sign, k as i64)));
    }
    assert!(sum
        .exp()
        .unwrap()
        .same_as(&cauchy_kernel(Kernel::Plain, cap)));
    assert!(alt
        .exp()
        .unwrap()
        .same_as(&cauchy_kernel(Kernel::Transposed, cap)));
}

fn arb_sym(cap: usize) -> impl Strategy<Value = SymFunc<Scalar>> {
    let labels = Partition::enumerate(cap);
    proptest::collection::vec((0..labels.len(), -5i64..=5, -2i32..=2), 0..6).prop_map(
        move |entries| {
            let mut f = SymFunc::zero(Basis::Schur, cap);
            for (i, c, e) in entries {
                let s = NovikovSeries::constant(Scalar::monomial(rat(c, 1), e, 0), cap as u32);
                f.add_term(labels[i].clone(), &s);
            }
            f
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_round_trip(f in arb_sym(6)) {
        prop_assert_eq!(f.to_basis(Basis::Power).to_basis(Basis::Schur), f);
    }

    #[test]
    fn product_is_commutative(f in arb_sym(5), g in arb_sym(5)) {
        prop_assert!(f.mul(&g).same_as(&g.mul(&f)));
    }

    #[test]
    fn exp_is_multiplicative(f in arb_sym(5), g in arb_sym(5)) {
        let f = f.filter(|l| l.size() > 0);
        let g = g.filter(|l| l.size() > 0);
        let lhs = f.add(&g).plethystic_exp(PlethysticVariant::Expp, &Symbolic).unwrap();
        let rhs = f
            .plethystic_exp(PlethysticVariant::Expp, &Symbolic)
            .unwrap()
            .mul(&g.plethystic_exp(PlethysticVariant::Expp, &Symbolic).unwrap());
        prop_assert!(lhs.same_as(&rhs));
    }
}
