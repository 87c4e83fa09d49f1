//! Symmetric-group characters by the Murnaghan-Nakayama rule, cached per
//! degree, and the Schur / power-sum transition matrices built from them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partitions::Partition;

/// Character table of `S_n`, rows indexed by irreducibles, columns by
/// cycle types, both in [`Partition::of_size`] order.
pub struct CharTable {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    chi: Vec<Vec<i64>>,
    /// `s_lambda = sum_mu chi(mu)/z_mu p_mu`
    s_to_p: Vec<Vec<(Partition, BigRational)>>,
    /// `p_mu = sum_lambda chi^lambda(mu) s_lambda`
    p_to_s: Vec<Vec<(Partition, BigRational)>>,
}

impl CharTable {
    fn build(n: usize) -> Self {
        let parts = Partition::of_size(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut chi = vec![vec![0i64; parts.len()]; parts.len()];
        for (i, lam) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                chi[i][j] = mn_step(lam, mu);
            }
        }
        let z: Vec<BigInt> = parts.iter().map(|p| p.z()).collect();
        let s_to_p = (0..parts.len())
            .map(|i| {
                (0..parts.len())
                    .filter(|&j| chi[i][j] != 0)
                    .map(|j| {
                        (
                            parts[j].clone(),
                            BigRational::new(chi[i][j].into(), z[j].clone()),
                        )
                    })
                    .collect()
            })
            .collect();
        let p_to_s = (0..parts.len())
            .map(|j| {
                (0..parts.len())
                    .filter(|&i| chi[i][j] != 0)
                    .map(|i| {
                        (
                            parts[i].clone(),
                            BigRational::from_integer(chi[i][j].into()),
                        )
                    })
                    .collect()
            })
            .collect();
        CharTable {
            parts,
            index,
            chi,
            s_to_p,
            p_to_s,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.index[mu]]
    }

    pub fn schur_to_power(&self, lambda: &Partition) -> &[(Partition, BigRational)] {
        &self.s_to_p[self.index[lambda]]
    }

    pub fn power_to_schur(&self, mu: &Partition) -> &[(Partition, BigRational)] {
        &self.p_to_s[self.index[mu]]
    }
}

fn tables() -> &'static RwLock<HashMap<usize, Arc<CharTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// The cached character table of `S_n`.
pub fn char_table(n: usize) -> Arc<CharTable> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return t.clone();
    }
    // build outside the lock; smaller tables are needed recursively
    let built = Arc::new(CharTable::build(n));
    tables().write().unwrap().entry(n).or_insert(built).clone()
}

/// `chi^lambda(mu)`.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    char_table(lambda.size()).value(lambda, mu)
}

/// One Murnaghan-Nakayama step: strip rim hooks of length `mu_1` and look the
/// remainder up in the smaller table.
fn mn_step(lambda: &Partition, mu: &Partition) -> i64 {
    let Some((&r, rest)) = mu.parts().split_first() else {
        return 1;
    };
    let rest = Partition::from_sorted(rest.to_vec());
    let smaller = char_table(rest.size());
    rim_hook_removals(lambda, r)
        .into_iter()
        .map(|(sign, nu)| sign * smaller.value(&nu, &rest))
        .sum()
}

/// Every way of removing a rim hook of length `r`, with sign
/// `(-1)^{height}`.
pub fn rim_hook_removals(lambda: &Partition, r: usize) -> Vec<(i64, Partition)> {
    let l = lambda.length();
    // bead positions, strictly decreasing
    let beads: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(k, &c)| c - (l - 1 - k))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_sorted(parts)));
    }
    out
}
