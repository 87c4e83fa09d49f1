//! Product formula for the open partition function of a strip, and the
//! two-leg vertex generating series.

use serde_json::json;

use crate::partitions::Partition;
use crate::report::{partition_key, Report};
use crate::scalars::{Coeff, Monomial, NovikovSeries, QMode, Scalar, Symbolic};
use crate::skein::solution_z;
use crate::symfunc::{Basis, PlethysticVariant, SymFunc, Tensor};

use super::gluing::{glue_strip, z_open, Branes, Traversal, VertexError, CALIBRATED};
use super::{framed_vertex, StripGeometry, VertexType};

fn inv_bracket() -> Scalar {
    Scalar::one()
        .checked_div(&Scalar::quantum_integer(1))
        .expect("{1} is a unit")
}

fn p1_x() -> (Partition, Partition) {
    (Partition::row(1), Partition::empty())
}

fn p1_y() -> (Partition, Partition) {
    (Partition::empty(), Partition::row(1))
}

fn p1_xy() -> (Partition, Partition) {
    (Partition::row(1), Partition::row(1))
}

/// Plethystic arguments `(exp_part, expp_part)` in the power-sum basis.
struct Arguments {
    exp: Tensor<Scalar>,
    expp: Tensor<Scalar>,
}

impl Arguments {
    fn new(cap: usize) -> Self {
        Arguments {
            exp: Tensor::zero(Basis::Power, cap),
            expp: Tensor::zero(Basis::Power, cap),
        }
    }

    fn push(
        &mut self,
        variant: PlethysticVariant,
        label: (Partition, Partition),
        m: Monomial,
        c: Scalar,
    ) {
        let cap = self.exp.cap();
        let s = NovikovSeries::term(m, c, cap as u32);
        match variant {
            PlethysticVariant::Exp => self.exp.add_term(label, &s),
            PlethysticVariant::Expp => self.expp.add_term(label, &s),
        }
    }

    fn evaluate<M: QMode>(&self, mode: &M) -> Result<Tensor<M::C>, VertexError> {
        let a = self.exp.plethystic_exp(PlethysticVariant::Exp, mode)?;
        let b = self.expp.plethystic_exp(PlethysticVariant::Expp, mode)?;
        Ok(a.mul(&b).to_basis(Basis::Schur))
    }
}

/// The normalized open partition function of a strip as a product of
/// plethystic exponentials: disks ending on `L1`, disks ending on `L2`, and
/// annuli stretched between them. Left factor `L1`, right factor `L2`,
/// Schur basis.
pub fn closed_form<M: QMode>(
    strip: &StripGeometry,
    branes: Branes,
    cap: usize,
    mode: &M,
) -> Result<Tensor<M::C>, VertexError> {
    use PlethysticVariant::{Exp, Expp};
    let inv = inv_bracket();
    let n = strip.len();
    let types = strip.types();
    let mut args = Arguments::new(cap);
    for (k, t) in types.iter().enumerate() {
        let q = strip.q_ij(1, k + 1);
        match t {
            VertexType::A => args.push(Exp, p1_x(), q, inv.clone()),
            VertexType::B => args.push(Exp, p1_x(), q, inv.neg()),
        }
    }
    if branes == Branes::Two {
        let last = types[n - 1];
        for (k, t) in types.iter().enumerate() {
            let q = strip.q_ij(k + 1, n);
            let (variant, c) = match (t, last) {
                (VertexType::A, VertexType::A) => (Expp, inv.clone()),
                (VertexType::B, VertexType::A) => (Expp, inv.neg()),
                (VertexType::A, VertexType::B) => (Exp, inv.neg()),
                (VertexType::B, VertexType::B) => (Exp, inv.clone()),
            };
            args.push(variant, p1_y(), q, c);
        }
        let q = strip.q_ij(1, n);
        match last {
            VertexType::A => args.push(Expp, p1_xy(), q, Scalar::one()),
            VertexType::B => args.push(Exp, p1_xy(), q, Scalar::from_int(-1)),
        }
    }
    args.evaluate(mode)
}

/// `sum C^{(-1,0,0)}_{μ1 μ2 ∅} s_{μ1} ⊗ s_{μ2}` over `|μ1| + |μ2| <= cap`.
pub fn two_leg_vertex_series(cap: usize) -> Tensor<Scalar> {
    let empty = Partition::empty();
    let mut out = Tensor::zero(Basis::Schur, cap);
    for mu1 in Partition::enumerate(cap) {
        for mu2 in Partition::enumerate(cap - mu1.size()) {
            let v = framed_vertex(&mu1, &mu2, &empty, [-1, 0, 0]);
            out.add_term((mu1.clone(), mu2), &NovikovSeries::constant(v, cap as u32));
        }
    }
    out
}

/// `Expp(p1(x)/{1}) Exp(p1(y)/{1}) Expp(p1(x) p1(y))`, with `x` the `μ1`
/// slot.
pub fn two_leg_product(cap: usize) -> Tensor<Scalar> {
    let inv = inv_bracket();
    let mut args = Arguments::new(cap);
    args.push(
        PlethysticVariant::Expp,
        p1_x(),
        Monomial::one(),
        inv.clone(),
    );
    args.push(PlethysticVariant::Exp, p1_y(), Monomial::one(), inv);
    args.push(
        PlethysticVariant::Expp,
        p1_xy(),
        Monomial::one(),
        Scalar::one(),
    );
    args.evaluate(&Symbolic)
        .expect("arguments have positive degree")
}

fn residual_report<C: Coeff>(name: &str, cap: usize, lhs: &Tensor<C>, rhs: &Tensor<C>) -> Report {
    let diff = lhs.to_basis(Basis::Schur).sub(&rhs.to_basis(Basis::Schur));
    let mut report = Report::new(name, cap);
    for l1 in Partition::enumerate(cap) {
        for l2 in Partition::enumerate(cap - l1.size()) {
            let key = json!([partition_key(&l1), partition_key(&l2)]);
            report.record(key, &diff.coeff(&(l1.clone(), l2)));
        }
    }
    report
}

/// Two-leg vertex series against its product formula for
/// `|μ1| + |μ2| <= cap`.
pub fn verify_two_leg_vertex(cap: usize) -> Report {
    residual_report(
        "two-leg-vertex",
        cap,
        &two_leg_vertex_series(cap),
        &two_leg_product(cap),
    )
}

/// Glued strip, normalized by its closed sector, against [`closed_form`].
pub fn verify_strip_closed_form<M: QMode>(
    strip: &StripGeometry,
    branes: Branes,
    cap: usize,
    mode: &M,
) -> Result<Report, VertexError> {
    let glued = z_open(&glue_strip(
        strip,
        branes,
        cap,
        &CALIBRATED,
        Traversal::LeftToRight,
        mode,
    )?)?;
    let expected = closed_form(strip, branes, cap, mode)?;
    let name = format!("strip-{}-{}", strip.word(), mode.label());
    Ok(residual_report(&name, cap, &glued, &expected))
}

/// The `L1`-only closed form after `q -> q^{-1}` against the product of
/// skein dilogarithms `prod Ψ[α_i] / prod Ψ[β_j]`.
pub fn verify_one_brane(strip: &StripGeometry, cap: usize) -> Result<Report, VertexError> {
    let cf = closed_form(strip, Branes::One, cap, &Symbolic)?.invert_q();
    let mut left = SymFunc::zero(Basis::Schur, cap);
    for ((l1, l2), s) in cf.terms() {
        if l2.is_empty() {
            left.add_term(l1.clone(), s);
        }
    }
    let (alphas, betas) = strip.strip_params();
    let diff = left.sub(&solution_z(&alphas, &betas, cap, &Symbolic)?.to_basis(Basis::Schur));
    let mut report = Report::new(format!("one-brane-{}", strip.word()), cap);
    for l in Partition::enumerate(cap) {
        report.record(partition_key(&l), &diff.coeff(&l));
    }
    Ok(report)
}
