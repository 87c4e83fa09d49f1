//! `Λ ⊗ Λ`, the Cauchy kernels, contraction along a middle factor, and
//! Littlewood-Richardson data recovered from characters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{char_table, Basis, Label, Sym, SymFunc};
use crate::partitions::Partition;
use crate::scalars::{Coeff, NovikovSeries};

pub type Tensor<C> = Sym<(Partition, Partition), C>;

/// Which dual pairing is used on the contracted factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// `sum_lambda s_lambda^* ⊗ s_lambda^*`
    Plain,
    /// `sum_lambda s_lambda^* ⊗ s_{lambda^t}^*`
    Transposed,
}

impl<C: Coeff> Tensor<C> {
    /// `f ⊗ g`, in the power-sum basis.
    pub fn outer(f: &SymFunc<C>, g: &SymFunc<C>) -> Self {
        let f = f.to_basis(Basis::Power);
        let g = g.to_basis(Basis::Power);
        let cap = f.cap().min(g.cap());
        let mut out = Self::zero(Basis::Power, cap);
        for (l1, s1) in f.terms() {
            for (l2, s2) in g.terms() {
                let d = l1.size() + l2.size();
                if d > cap {
                    continue;
                }
                out.add_term(
                    (l1.clone(), l2.clone()),
                    &s1.mul_capped(s2, (cap - d) as u32),
                );
            }
        }
        out
    }

    /// `f ⊗ 1`.
    pub fn left(f: &SymFunc<C>) -> Self {
        Self::outer(f, &SymFunc::one(Basis::Power, f.cap()))
    }

    /// `1 ⊗ g`.
    pub fn right(g: &SymFunc<C>) -> Self {
        Self::outer(&SymFunc::one(Basis::Power, g.cap()), g)
    }

    /// `s_lambda ⊗ s_mu`.
    pub fn schur_pair(lambda: Partition, mu: Partition, cap: usize) -> Self {
        Self::basis_element(Basis::Schur, (lambda, mu), C::one(), cap)
    }

    /// Keep the components of bidegree at most `(n1, n2)`.
    pub fn bidegree_at_most(&self, n1: usize, n2: usize) -> Self {
        self.filter(|(a, b)| a.size() <= n1 && b.size() <= n2)
    }

    /// Exchange the two factors.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.basis(), self.cap());
        for ((a, b), s) in self.terms() {
            out.add_term((b.clone(), a.clone()), s);
        }
        out
    }

    /// Contract the second factor of `self` with the first factor of `other`
    /// through `kernel`, leaving `Λ ⊗ Λ` from the outer factors. The result
    /// is truncated at `cap`.
    pub fn glue(&self, other: &Self, kernel: Kernel, cap: usize) -> Self {
        let f = self.to_basis(Basis::Power);
        let g = other.to_basis(Basis::Power);
        let mut out = Self::zero(Basis::Power, cap);
        for ((a, mu), s1) in f.terms() {
            for ((nu, b), s2) in g.terms() {
                if mu != nu {
                    continue;
                }
                let d = a.size() + b.size();
                if d > cap {
                    continue;
                }
                let mut w = BigRational::from_integer(mu.z());
                if kernel == Kernel::Transposed && mu.omega_sign() < 0 {
                    w = -w;
                }
                out.add_term(
                    (a.clone(), b.clone()),
                    &s1.mul_capped(s2, (cap - d) as u32).scale_rational(&w),
                );
            }
        }
        out
    }

    /// The series multiplying `1 ⊗ 1` after pairing both factors against
    /// `s_lambda ⊗ s_mu`.
    pub fn schur_coeff(&self, lambda: &Partition, mu: &Partition) -> NovikovSeries<C> {
        self.to_basis(Basis::Schur)
            .coeff(&(lambda.clone(), mu.clone()))
    }
}

/// `sum_lambda s_lambda ⊗ s_lambda` (plain) or `sum_lambda s_lambda ⊗
/// s_{lambda^t}` (transposed), up to total degree `cap`.
pub fn cauchy_kernel<C: Coeff>(kernel: Kernel, cap: usize) -> Tensor<C> {
    let mut out = Tensor::zero(Basis::Schur, cap);
    for lam in Partition::enumerate(cap / 2) {
        let partner = match kernel {
            Kernel::Plain => lam.clone(),
            Kernel::Transposed => lam.transpose(),
        };
        out.add_term((lam, partner), &NovikovSeries::one(cap as u32));
    }
    out
}

/// `c^lambda_{mu nu}`, the coefficient of `s_lambda` in `s_mu s_nu`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigInt::zero();
    }
    let tm = char_table(mu.size());
    let tn = char_table(nu.size());
    let tl = char_table(lambda.size());
    let mut acc = BigRational::zero();
    for (alpha, a) in tm.schur_to_power(mu) {
        for (beta, b) in tn.schur_to_power(nu) {
            let c = tl.value(lambda, &alpha.union(beta));
            if c != 0 {
                acc += a * b * BigRational::from_integer(c.into());
            }
        }
    }
    assert!(
        acc.is_integer(),
        "Littlewood-Richardson coefficient must be an integer"
    );
    acc.to_integer()
}

/// `s_{lambda/mu}` in the Schur basis: `sum_nu c^lambda_{mu nu} s_nu`.
pub fn skew_schur<C: Coeff>(lambda: &Partition, mu: &Partition, cap: usize) -> SymFunc<C> {
    let mut out = SymFunc::zero(Basis::Schur, cap);
    if !lambda.contains(mu) {
        return out;
    }
    for nu in Partition::of_size(lambda.size() - mu.size()) {
        let c = littlewood_richardson(lambda, mu, &nu);
        if !c.is_zero() {
            let s =
                NovikovSeries::constant(C::from_rational(BigRational::from_integer(c)), cap as u32);
            out.add_term(nu, &s);
        }
    }
    out
}
