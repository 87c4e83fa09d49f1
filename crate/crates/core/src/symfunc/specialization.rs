//! Principal specializations `x_i = q^{nu_i - i + 1/2}` as exact rational
//! functions of `t = q^{1/2}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::partitions::Partition;
use crate::scalars::{Coeff, Scalar};

/// `h_k(q^rho) = t^{-k} / prod_{j=1}^k (1 - t^{-2j})`.
pub fn principal_spec_h_rho(k: usize) -> Scalar {
    let mut den = Scalar::one();
    for j in 1..=k as i32 {
        den = den.mul(&Scalar::one().sub(&Scalar::t_pow(-2 * j)));
    }
    Scalar::t_pow(-(k as i32))
        .checked_div(&den)
        .expect("a-free denominator")
}

fn h_cache() -> &'static Mutex<HashMap<Partition, Vec<Scalar>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Vec<Scalar>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `h_k(q^{nu + rho})`.
pub fn principal_spec_h(k: usize, nu: &Partition) -> Scalar {
    if let Some(v) = h_cache().lock().unwrap().get(nu) {
        if let Some(h) = v.get(k) {
            return h.clone();
        }
    }
    let upto = k.max(8);
    let values = h_values(upto, nu);
    let h = values[k].clone();
    h_cache().lock().unwrap().insert(nu.clone(), values);
    h
}

/// `h_0 .. h_n` at `q^{nu+rho}`: the `rho` tail in closed form times the
/// finite correction `prod_{i <= l(nu)} (1 - x^0_i u) / (1 - x_i u)`.
fn h_values(n: usize, nu: &Partition) -> Vec<Scalar> {
    let mut corr = vec![Scalar::zero(); n + 1];
    corr[0] = Scalar::one();
    for (i0, &part) in nu.parts().iter().enumerate() {
        let i = i0 as i32 + 1;
        let old = Scalar::t_pow(1 - 2 * i);
        let new = Scalar::t_pow(2 * part as i32 - 2 * i + 1);
        for j in (1..=n).rev() {
            corr[j] = corr[j].sub(&old.mul(&corr[j - 1]));
        }
        for j in 1..=n {
            corr[j] = corr[j].add(&new.mul(&corr[j - 1]));
        }
    }
    let rho: Vec<Scalar> = (0..=n).map(principal_spec_h_rho).collect();
    (0..=n)
        .map(|k| (0..=k).fold(Scalar::zero(), |acc, j| acc.add(&rho[k - j].mul(&corr[j]))))
        .collect()
}

/// `s_{lambda/mu}(q^{nu+rho})` by the Jacobi-Trudi determinant.
pub fn principal_spec_skew(lambda: &Partition, mu: &Partition, nu: &Partition) -> Scalar {
    if !lambda.contains(mu) {
        return Scalar::zero();
    }
    let l = lambda.length();
    if l == 0 {
        return Scalar::one();
    }
    let mut m = vec![vec![Scalar::zero(); l]; l];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let idx = lambda.part(i + 1) as i64 - mu.part(j + 1) as i64 - i as i64 + j as i64;
            if idx >= 0 {
                *entry = principal_spec_h(idx as usize, nu);
            }
        }
    }
    determinant(m)
}

/// Determinant by Gaussian elimination; entries must be `a`-free.
pub(crate) fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = det.neg();
        }
        let p = m[col][col].clone();
        det = det.mul(&p);
        let pinv = p.inverse().expect("a-free pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&pinv);
            for c in col..n {
                let v = m[r][c].sub(&f.mul(&m[col][c]));
                m[r][c] = v;
            }
        }
    }
    det
}

/// Closed form `s_lambda(q^rho) = q^{kappa/4} / prod_cells {h}`.
pub fn hook_content_value(lambda: &Partition) -> Scalar {
    let den = lambda.hooks().iter().fold(Scalar::one(), |acc, &h| {
        acc.mul(&Scalar::quantum_integer(h as i32))
    });
    Scalar::t_pow((lambda.kappa() / 2) as i32)
        .checked_div(&den)
        .expect("a-free denominator")
}

/// Whether `s_{lambda/mu}(q^rho) = (-1)^{|lambda|-|mu|} s_{lambda^t/mu^t}(q^{-rho})`
/// holds exactly.
pub fn sign_transpose_check(lambda: &Partition, mu: &Partition) -> bool {
    let empty = Partition::empty();
    let lhs = principal_spec_skew(lambda, mu, &empty);
    let mut rhs = principal_spec_skew(&lambda.transpose(), &mu.transpose(), &empty).invert_q();
    if (lambda.size() + mu.size()) % 2 == 1 {
        rhs = rhs.neg();
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qint(n: i32) -> Scalar {
        Scalar::quantum_integer(n)
    }

    #[test]
    fn h_at_rho() {
        let e = Partition::empty();
        assert_eq!(principal_spec_h(0, &e), Scalar::one());
        assert_eq!(
            principal_spec_h(1, &e),
            Scalar::one().checked_div(&qint(1)).unwrap()
        );
        // q^{-1}/((1-q^{-1})(1-q^{-2}))
        let den = Scalar::one()
            .sub(&Scalar::q_pow(-1))
            .mul(&Scalar::one().sub(&Scalar::q_pow(-2)));
        assert_eq!(
            principal_spec_h(2, &e),
            Scalar::q_pow(-1).checked_div(&den).unwrap()
        );
    }

    /// Truncated geometric-series oracle: `h_1(q^{nu+rho})` is
    /// `1/{1} + sum_i (q^{nu_i-i+1/2} - q^{-i+1/2})`.
    #[test]
    fn h1_with_shift() {
        for nu in Partition::enumerate(5) {
            let mut expected = Scalar::one().checked_div(&qint(1)).unwrap();
            for (i0, &part) in nu.parts().iter().enumerate() {
                let i = i0 as i32 + 1;
                expected = expected
                    .add(&Scalar::t_pow(2 * part as i32 - 2 * i + 1))
                    .sub(&Scalar::t_pow(1 - 2 * i));
            }
            assert_eq!(principal_spec_h(1, &nu), expected, "nu = {nu}");
        }
    }

    #[test]
    fn skew_examples() {
        let e = Partition::empty();
        assert_eq!(
            principal_spec_skew(&p(&[1]), &e, &e),
            Scalar::one().checked_div(&qint(1)).unwrap()
        );
        assert_eq!(
            principal_spec_skew(&p(&[1]), &p(&[1]), &p(&[2, 1])),
            Scalar::one()
        );
        assert_eq!(principal_spec_skew(&p(&[1]), &p(&[2]), &e), Scalar::zero());
        let expected = Scalar::t_pow(-1)
            .checked_div(&qint(1).mul(&qint(2)))
            .unwrap();
        assert_eq!(principal_spec_skew(&p(&[1, 1]), &e, &e), expected);
    }

    #[test]
    fn hook_content_formula_up_to_eight() {
        let e = Partition::empty();
        for lam in Partition::enumerate(8) {
            assert_eq!(
                principal_spec_skew(&lam, &e, &e),
                hook_content_value(&lam),
                "lambda = {lam}"
            );
        }
    }

    #[test]
    fn transpose_sign_identity() {
        assert!(sign_transpose_check(&p(&[1]), &Partition::empty()));
        assert!(sign_transpose_check(&p(&[2, 1]), &p(&[1])));
        assert!(sign_transpose_check(&p(&[1]), &p(&[1])));
        for lam in Partition::enumerate(5) {
            for mu in Partition::enumerate(lam.size()) {
                assert!(sign_transpose_check(&lam, &mu), "{lam} / {mu}");
            }
        }
    }
}
