//! Mirror curve `y prod_i (1 - α_i x) + prod_j (1 - β_j x)` of a strip and
//! its quantization.

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::scalars::{Monomial, NovikovSeries, Scalar, ScalarError};

use super::StripGeometry;

/// Large enough that no curve coefficient is ever truncated.
const CURVE_CAP: u32 = 1 << 20;

/// `coeff * y^y_power * x^x_power`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTerm {
    pub y_power: u32,
    pub x_power: u32,
    pub coeff: NovikovSeries<Scalar>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MirrorCurve {
    pub word: String,
    /// `prod_i (1 - α_i x) = sum_i A_i x^i`.
    pub a: Vec<NovikovSeries<Scalar>>,
    /// `prod_j (1 - β_j x) = sum_j B_j x^j`.
    pub b: Vec<NovikovSeries<Scalar>>,
    pub classical: Vec<CurveTerm>,
    /// Coefficients of `prod_i (1 - α_i q^{1/2} x)`, i.e. `A_i q^{i/2}`.
    pub quantum_a: Vec<NovikovSeries<Scalar>>,
    pub quantum_b: Vec<NovikovSeries<Scalar>>,
    /// How `x` is shifted in the quantum coefficients.
    pub shift: String,
}

/// Coefficients of `prod (1 - m x)`.
fn linear_product(roots: &[Monomial]) -> Vec<NovikovSeries<Scalar>> {
    let mut coeffs = vec![NovikovSeries::one(CURVE_CAP)];
    for m in roots {
        let mut next = vec![NovikovSeries::zero(CURVE_CAP); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i].add_assign(c);
            next[i + 1].add_assign(&c.scale_term(m, &Scalar::from_int(-1)));
        }
        coeffs = next;
    }
    coeffs
}

fn shifted(coeffs: &[NovikovSeries<Scalar>]) -> Vec<NovikovSeries<Scalar>> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c.scale(&Scalar::t_pow(i as i32)))
        .collect()
}

pub fn mirror_and_quantum(strip: &StripGeometry) -> MirrorCurve {
    let (alphas, betas) = strip.strip_params();
    let a = linear_product(&alphas);
    let b = linear_product(&betas);
    let mut classical = Vec::new();
    for (i, c) in a.iter().enumerate() {
        if !c.is_zero() {
            classical.push(CurveTerm {
                y_power: 1,
                x_power: i as u32,
                coeff: c.clone(),
            });
        }
    }
    for (j, c) in b.iter().enumerate() {
        if !c.is_zero() {
            classical.push(CurveTerm {
                y_power: 0,
                x_power: j as u32,
                coeff: c.clone(),
            });
        }
    }
    MirrorCurve {
        word: strip.word(),
        quantum_a: shifted(&a),
        quantum_b: shifted(&b),
        a,
        b,
        classical,
        shift: "x -> q^(1/2) x".to_string(),
    }
}

fn at_q_one(s: &NovikovSeries<Scalar>) -> Result<Vec<(Monomial, String)>, ScalarError> {
    let one = BigRational::one();
    s.terms()
        .map(|(m, c)| Ok((m.clone(), c.eval_t(&one)?.to_string())))
        .collect()
}

impl MirrorCurve {
    /// Whether the quantum coefficients at `q = 1` are the classical ones.
    pub fn classical_limit_holds(&self) -> bool {
        let check = |quantum: &[NovikovSeries<Scalar>], classical: &[NovikovSeries<Scalar>]| {
            quantum.len() == classical.len()
                && quantum
                    .iter()
                    .zip(classical)
                    .all(|(q, c)| match (at_q_one(q), at_q_one(c)) {
                        (Ok(x), Ok(y)) => x == y,
                        _ => false,
                    })
        };
        check(&self.quantum_a, &self.a) && check(&self.quantum_b, &self.b)
    }

    pub fn to_json(&self) -> Value {
        let series = |s: &NovikovSeries<Scalar>| -> Value {
            s.terms()
                .map(|(m, c)| json!([m.to_map(), c.to_string()]))
                .collect()
        };
        let list = |v: &[NovikovSeries<Scalar>]| -> Value { v.iter().map(series).collect() };
        json!({
            "types": self.word,
            "curve": self.to_string(),
            "classical": self
                .classical
                .iter()
                .map(|t| json!({"y": t.y_power, "x": t.x_power, "coeff": series(&t.coeff)}))
                .collect::<Vec<_>>(),
            "A": list(&self.a),
            "B": list(&self.b),
            "quantum": {"A": list(&self.quantum_a), "B": list(&self.quantum_b), "shift": self.shift},
        })
    }
}

/// `sum_i coeffs[i] x^i` written out term by term, e.g. `1 - Q1*x`.
fn format_poly(coeffs: &[NovikovSeries<Scalar>]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        for (m, s) in c.terms() {
            let s = s.to_string();
            let (negative, magnitude) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            let mut factors = Vec::new();
            if magnitude != "1" {
                factors.push(magnitude);
            }
            if !m.is_one() {
                factors.push(m.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            let term = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            };
            if out.is_empty() {
                out = if negative { format!("-{term}") } else { term };
            } else {
                out.push_str(if negative { " - " } else { " + " });
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::fmt::Display for MirrorCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "y({}) + ({})",
            format_poly(&self.a),
            format_poly(&self.b)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Coeff, Var};

    fn constant(n: i64) -> NovikovSeries<Scalar> {
        NovikovSeries::constant(Scalar::from_int(n), CURVE_CAP)
    }

    #[test]
    fn conifold_curve() {
        let c = mirror_and_quantum(&StripGeometry::parse("AB").unwrap());
        assert_eq!(c.a, vec![constant(1), constant(-1)]);
        let q1 = Monomial::var(&Var::unit("Q1"));
        assert_eq!(
            c.b,
            vec![
                constant(1),
                NovikovSeries::term(q1, Scalar::from_int(-1), CURVE_CAP)
            ]
        );
        assert!(c.classical_limit_holds());
        assert_eq!(
            c.quantum_a[1],
            NovikovSeries::constant(Scalar::t_pow(1).neg(), CURVE_CAP)
        );
        assert_eq!(c.to_string(), "y(1 - x) + (1 - Q1*x)");
    }

    #[test]
    fn c3_curve() {
        let c = mirror_and_quantum(&StripGeometry::parse("A").unwrap());
        assert_eq!(c.b, vec![constant(1)]);
        assert_eq!(c.classical.len(), 3);
        assert_eq!(c.to_string(), "y(1 - x) + (1)");
    }

    #[test]
    fn coefficients_are_signed_elementary_symmetric() {
        let s = StripGeometry::parse("AAAB").unwrap();
        let c = mirror_and_quantum(&s);
        let (alphas, _) = s.strip_params();
        // e_2(α) for α = (1, Q1, Q1 Q2)
        let mut e2 = NovikovSeries::zero(CURVE_CAP);
        for i in 0..alphas.len() {
            for j in i + 1..alphas.len() {
                e2.add_term(alphas[i].mul(&alphas[j]), &Scalar::one());
            }
        }
        assert_eq!(c.a[2], e2);
        assert_eq!(c.a.len(), 4);
        assert!(c.classical_limit_holds());
    }
}
