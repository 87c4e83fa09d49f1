//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//! Exits with status 1 if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skeinstrip::partitions::Partition;
use skeinstrip::qdiff::verify_annihilation;
use skeinstrip::scalars::{Coeff, Monomial, NovikovSeries, Numeric, Scalar, Symbolic, Var};
use skeinstrip::skein::{psi, psi_inverse, verify_dilog_recurrence, xi, Direction, PsiForm};
use skeinstrip::symfunc::{cauchy_kernel, rat, skew_schur, Basis, Kernel, SymFunc, Tensor};
use skeinstrip::vertex::{
    mirror_and_quantum, verify_one_brane, verify_strip_closed_form, verify_two_leg_vertex, Branes,
    StripGeometry, VertexType,
};

type Outcome = Result<(), String>;

fn numeric() -> Numeric {
    Numeric::with_t(rat(3, 2)).expect("3/2 is a valid evaluation point")
}

fn dilog_recurrences() -> Outcome {
    let x = Monomial::var(&xi());
    for direction in [Direction::Forward, Direction::Inverse] {
        let r = verify_dilog_recurrence(&x, 8, direction, false);
        if !r.pass {
            return Err(format!("{}: {} nonzero residuals", r.check, r.failures()));
        }
        // one residual per partition of size at most 8
        if r.residuals.len() != 67 {
            return Err(format!(
                "{}: {} residuals recorded",
                r.check,
                r.residuals.len()
            ));
        }
    }
    Ok(())
}

fn two_formulas() -> Outcome {
    let x = Monomial::var(&xi());
    let cap = 8;
    let prod = psi(&x, cap, PsiForm::Product);
    if prod != psi(&x, cap, PsiForm::Exponential) {
        return Err("product and exponential forms differ".into());
    }
    let inv = psi_inverse(&x, cap, PsiForm::Product);
    if inv != psi_inverse(&x, cap, PsiForm::Exponential) {
        return Err("inverse forms differ".into());
    }
    if !prod.mul(&inv).same_as(&SymFunc::one(Basis::Schur, cap)) {
        return Err("Ψ·Ψ⁻¹ ≠ 1".into());
    }
    Ok(())
}

/// `sum_k sign(k) p_k ⊗ p_k / k` up to total degree `cap`.
fn kernel_log(cap: usize, alternating: bool) -> Tensor<Scalar> {
    let mut out = Tensor::zero(Basis::Power, cap);
    for k in 1..=cap / 2 {
        let sign = if alternating && k % 2 == 0 { -1 } else { 1 };
        let pk = Tensor::basis_element(
            Basis::Power,
            (Partition::row(k), Partition::row(k)),
            Scalar::one(),
            cap,
        );
        out.add_assign(&pk.scale_rational(&rat(sign, k as i64)));
    }
    out
}

/// `sum_k sign(k) A_k ⊗ B_k / k`.
fn pair_log(
    a: &[SymFunc<Scalar>],
    b: &[SymFunc<Scalar>],
    cap: usize,
    alternating: bool,
) -> Tensor<Scalar> {
    let mut out = Tensor::zero(Basis::Power, cap);
    for k in 1..=cap {
        let sign = if alternating && k % 2 == 0 { -1 } else { 1 };
        out.add_assign(&Tensor::outer(&a[k - 1], &b[k - 1]).scale_rational(&rat(sign, k as i64)));
    }
    out
}

/// `A_k = Q^k (c_0 + c_1 p_1 + c_2 p_2)` with small random integers.
fn random_family(rng: &mut ChaCha8Rng, var: &Var, cap: usize) -> Vec<SymFunc<Scalar>> {
    (1..=cap)
        .map(|k| {
            let mut f = SymFunc::zero(Basis::Power, cap);
            for label in [Partition::empty(), Partition::row(1), Partition::row(2)] {
                let c = Scalar::from_int(rng.gen_range(-3..=3));
                f.add_term(
                    label,
                    &NovikovSeries::term(Monomial::var(var).pow(k as u32), c, cap as u32),
                );
            }
            f
        })
        .collect()
}

fn power_sums(cap: usize) -> Vec<SymFunc<Scalar>> {
    (1..=cap)
        .map(|k| SymFunc::power(Partition::row(k), cap))
        .collect()
}

fn cauchy_and_gluing() -> Outcome {
    // Cauchy identities to bidegree (6,6)
    let cap = 12;
    if !kernel_log(cap, false)
        .exp()
        .map_err(|e| e.to_string())?
        .same_as(&cauchy_kernel(Kernel::Plain, cap))
    {
        return Err("sum s_λ ⊗ s_λ ≠ exp(sum p_k ⊗ p_k / k)".into());
    }
    if !kernel_log(cap, true)
        .exp()
        .map_err(|e| e.to_string())?
        .same_as(&cauchy_kernel(Kernel::Transposed, cap))
    {
        return Err("sum s_λ ⊗ s_λt ≠ exp(sum (-1)^(k+1) p_k ⊗ p_k / k)".into());
    }

    // generalized Cauchy identities to bidegree (5,5)
    let cap = 10;
    let plain = cauchy_kernel::<Scalar>(Kernel::Plain, cap);
    let transposed = cauchy_kernel::<Scalar>(Kernel::Transposed, cap);
    for mu in Partition::enumerate(5) {
        let mut lhs1 = Tensor::zero(Basis::Schur, cap);
        let mut lhs2 = Tensor::zero(Basis::Schur, cap);
        for eta in Partition::enumerate(5) {
            let skew = skew_schur::<Scalar>(&eta, &mu, cap);
            lhs1.add_assign(&Tensor::outer(&skew, &SymFunc::schur(eta.clone(), cap)));
            lhs2.add_assign(&Tensor::outer(&skew, &SymFunc::schur(eta.transpose(), cap)));
        }
        let rhs1 = plain.mul(&Tensor::right(&SymFunc::schur(mu.clone(), cap)));
        let rhs2 = transposed.mul(&Tensor::right(&SymFunc::schur(mu.transpose(), cap)));
        if !lhs1
            .bidegree_at_most(5, 5)
            .same_as(&rhs1.bidegree_at_most(5, 5))
        {
            return Err(format!("generalized Cauchy (plain) fails for μ = {mu}"));
        }
        if !lhs2
            .bidegree_at_most(5, 5)
            .same_as(&rhs2.bidegree_at_most(5, 5))
        {
            return Err(format!(
                "generalized Cauchy (transposed) fails for μ = {mu}"
            ));
        }
    }

    // gluing formulas on random families, degree 5
    let cap = 5;
    let (q, r) = (Var::unit("Q"), Var::unit("R"));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let p = power_sums(cap);
    let mut detected = 0;
    for family in 0..10 {
        let a = random_family(&mut rng, &q, cap);
        let b = random_family(&mut rng, &r, cap);
        let expected = pair_log(&a, &b, cap, false)
            .exp()
            .map_err(|e| e.to_string())?;
        let left = pair_log(&a, &p, cap, false)
            .exp()
            .map_err(|e| e.to_string())?;
        let right_plain = pair_log(&p, &b, cap, false)
            .exp()
            .map_err(|e| e.to_string())?;
        let right_alt = pair_log(&p, &b, cap, true)
            .exp()
            .map_err(|e| e.to_string())?;
        if !left
            .glue(&right_plain, Kernel::Plain, cap)
            .same_as(&expected)
        {
            return Err(format!(
                "gluing formula with the plain kernel fails for family {family}"
            ));
        }
        if !left
            .glue(&right_alt, Kernel::Transposed, cap)
            .same_as(&expected)
        {
            return Err(format!(
                "gluing formula with the transposed kernel fails for family {family}"
            ));
        }
        if !left
            .glue(&right_plain, Kernel::Transposed, cap)
            .same_as(&expected)
        {
            detected += 1;
        }
    }
    // control: a mismatched kernel and sign pattern must be caught at least once
    if detected == 0 {
        return Err("mismatched kernel never detected".into());
    }
    Ok(())
}

fn two_leg_vertex() -> Outcome {
    let r = verify_two_leg_vertex(4);
    if r.pass {
        Ok(())
    } else {
        Err(format!("{} nonzero residuals", r.failures()))
    }
}

fn strips_match_closed_form() -> Outcome {
    let num = numeric();
    let mut runs: Vec<(StripGeometry, usize)> = StripGeometry::all_words(4)
        .into_iter()
        .map(|s| (s, 3))
        .collect();
    for w in ["AB", "AA"] {
        runs.push((StripGeometry::parse(w).expect("valid word"), 5));
    }
    for (s, cap) in runs {
        let sym =
            verify_strip_closed_form(&s, Branes::Two, cap, &Symbolic).map_err(|e| e.to_string())?;
        let numr =
            verify_strip_closed_form(&s, Branes::Two, cap, &num).map_err(|e| e.to_string())?;
        if !sym.pass || !numr.pass {
            return Err(format!(
                "{s} at degree {cap}: symbolic {} numeric {}",
                sym.pass, numr.pass
            ));
        }
    }
    Ok(())
}

fn quantum_curve() -> Outcome {
    let num = numeric();
    for s in StripGeometry::all_words(4) {
        let r = verify_annihilation(&s, 8, &Symbolic).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("{s}: residual nonzero through x^8"));
        }
        let r = verify_annihilation(&s, 16, &num).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("{s}: numeric residual nonzero through x^16"));
        }
    }
    Ok(())
}

/// `(-1)^i e_i(roots)` by summing over subsets.
fn signed_elementary(roots: &[Monomial], i: usize) -> NovikovSeries<Scalar> {
    let cap = 1 << 20;
    let mut out = NovikovSeries::zero(cap);
    for mask in 0u32..(1 << roots.len()) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let m = roots
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .fold(Monomial::one(), |m, (_, r)| m.mul(r));
        out.add_term(
            m,
            &Scalar::from_int(if i.is_multiple_of(2) { 1 } else { -1 }),
        );
    }
    out
}

fn classical_limit() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let mut types = vec![VertexType::A];
        types.extend((1..n).map(|_| {
            if rng.gen_bool(0.5) {
                VertexType::A
            } else {
                VertexType::B
            }
        }));
        let s = StripGeometry::new(types).map_err(|e| e.to_string())?;
        let curve = mirror_and_quantum(&s);
        if !curve.classical_limit_holds() {
            return Err(format!(
                "{s}: quantum coefficients at q = 1 differ from the curve"
            ));
        }
        let (alphas, betas) = s.strip_params();
        for (coeffs, roots) in [(&curve.a, &alphas), (&curve.b, &betas)] {
            if coeffs.len() != roots.len() + 1 {
                return Err(format!("{s}: wrong curve degree"));
            }
            for (i, c) in coeffs.iter().enumerate() {
                if *c != signed_elementary(roots, i) {
                    return Err(format!("{s}: coefficient of x^{i} is {c}"));
                }
            }
        }
    }
    Ok(())
}

fn one_brane() -> Outcome {
    for s in StripGeometry::all_words(4) {
        let r = verify_one_brane(&s, 6).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("{s}: {} nonzero residuals", r.failures()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "dilogarithm recurrences, forward and inverse, |λ| <= 8",
            dilog_recurrences,
        ),
        (
            "product and exponential forms of Ψ agree, Ψ·Ψ⁻¹ = 1, degree 8",
            two_formulas,
        ),
        (
            "Cauchy (6,6), generalized Cauchy (5,5), gluing formulas on 10 random families",
            cauchy_and_gluing,
        ),
        (
            "two-leg vertex equals its plethystic product, |μ1| + |μ2| <= 4",
            two_leg_vertex,
        ),
        (
            "glued strips equal the closed form: length <= 4 at degree 3, AB and AA at degree 5",
            strips_match_closed_form,
        ),
        (
            "quantum curve annihilates the reduced solution: x^8 symbolic, x^16 numeric",
            quantum_curve,
        ),
        (
            "quantum curve at q = 1 is the mirror curve, 20 random strips",
            classical_limit,
        ),
        (
            "one-brane closed form equals the dilogarithm product under q -> 1/q, degree 6",
            one_brane,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {}. {name} ({elapsed:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}. {name} ({elapsed:.1}s): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
