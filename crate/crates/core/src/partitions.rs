//! Integer partitions and the cell statistics used by the vertex and skein
//! formulas.
//!
//! Cells use English convention: row `i`, column `j`, both 1-based, with
//! content `j - i`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive, got {0:?}")]
    NonPositivePart(Vec<i64>),
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),
}

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
///
/// Ordering is by size first, then reverse lexicographic, so that `(2)`
/// precedes `(1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Direction for [`Partition::box_moves`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxMove {
    Add,
    Remove,
}

/// One cell with its hook length and content.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    pub content: i64,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        Self::try_from(parts.into_iter().map(|p| p as i64).collect::<Vec<_>>())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts that are already known to be valid.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `kappa = sum_i lambda_i (lambda_i - 2i + 1)`; always even.
    pub fn kappa(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 * (p as i64 - 2 * (i as i64 + 1) + 1))
            .sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let conj = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i0, &p) in self.0.iter().enumerate() {
            let i = i0 + 1;
            for j in 1..=p {
                out.push(Cell {
                    row: i,
                    col: j,
                    hook: p - j + conj.part(j) - i + 1,
                    content: j as i64 - i as i64,
                });
            }
        }
        out
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells().into_iter().map(|c| c.content).collect()
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.cells().into_iter().map(|c| c.hook).collect()
    }

    /// `mu ⊆ self` as Young diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.length() <= self.length() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Partitions obtained by adding or removing a single box, ordered by the
    /// row that changes.
    pub fn box_moves(&self, dir: BoxMove) -> Vec<Partition> {
        let mut out = Vec::new();
        match dir {
            BoxMove::Add => {
                for i in 0..=self.0.len() {
                    let cur = self.0.get(i).copied().unwrap_or(0);
                    let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
                    if cur < above {
                        let mut parts = self.0.clone();
                        if i == parts.len() {
                            parts.push(1);
                        } else {
                            parts[i] += 1;
                        }
                        out.push(Partition(parts));
                    }
                }
            }
            BoxMove::Remove => {
                for i in 0..self.0.len() {
                    let below = self.0.get(i + 1).copied().unwrap_or(0);
                    if self.0[i] > below {
                        let mut parts = self.0.clone();
                        parts[i] -= 1;
                        if parts[i] == 0 {
                            parts.pop();
                        }
                        out.push(Partition(parts));
                    }
                }
            }
        }
        out
    }

    /// Multiplicity vector entries `(part, count)`, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer order.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                acc *= BigInt::from(p) * BigInt::from(k);
            }
        }
        acc
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scale_parts(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// All partitions of exactly `n`, in reverse lexicographic order.
    pub fn of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `max_size`, sorted by size and then
    /// reverse lexicographically.
    pub fn enumerate(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Self::of_size).collect()
    }
}

fn fill(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<i64>) -> Result<Self, Self::Error> {
        if parts.iter().any(|&p| p <= 0) {
            return Err(PartitionError::NonPositivePart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts.into_iter().map(|p| p as usize).collect()))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
