//! Machine-readable verification reports and coefficient tables.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::partitions::Partition;
use crate::scalars::{Coeff, NovikovSeries};
use crate::symfunc::{Basis, Tensor};

/// Outcome of one verification run: every residual that was computed, keyed
/// by what it belongs to (a partition, an `x`-degree, ...).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub cap: usize,
    pub residuals: Vec<(Value, String)>,
    pub pass: bool,
    #[serde(skip)]
    failures: usize,
}

impl Report {
    pub fn new(check: impl Into<String>, cap: usize) -> Self {
        Report {
            check: check.into(),
            cap,
            residuals: Vec::new(),
            pass: true,
            failures: 0,
        }
    }

    /// Record a residual; any nonzero residual fails the report.
    pub fn record<C: Coeff>(&mut self, key: Value, residual: &NovikovSeries<C>) {
        if !residual.is_zero() {
            self.pass = false;
            self.failures += 1;
        }
        self.residuals.push((key, residual.to_string()));
    }

    /// Record a pass/fail fact that has no residual value.
    pub fn record_flag(&mut self, key: Value, ok: bool, detail: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.failures += 1;
        }
        self.residuals.push((key, detail.into()));
    }

    /// Number of nonzero residuals.
    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn merge(&mut self, other: Report) {
        self.pass &= other.pass;
        self.failures += other.failures;
        self.residuals.extend(other.residuals);
    }
}

/// One row `[lambda_L1, lambda_L2, Q-monomial, coefficient]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow(
    pub Partition,
    pub Partition,
    pub BTreeMap<String, u32>,
    pub String,
);

/// Sorted, deterministic coefficient listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub cap: usize,
    pub rows: Vec<TableRow>,
}

impl CoefficientTable {
    /// Every nonzero coefficient of `z` in the Schur basis, one row per
    /// `(λ_L1, λ_L2, Q-monomial)`, sorted.
    pub fn from_tensor<C: Coeff>(z: &Tensor<C>) -> Self {
        let schur = z.to_basis(Basis::Schur);
        let mut rows = Vec::new();
        for ((l1, l2), series) in schur.terms() {
            for (m, c) in series.terms() {
                rows.push(TableRow(l1.clone(), l2.clone(), m.to_map(), c.to_string()));
            }
        }
        rows.sort_by(|x, y| (&x.0, &x.1, &x.2).cmp(&(&y.0, &y.1, &y.2)));
        CoefficientTable { cap: z.cap(), rows }
    }
}

pub fn partition_key(lambda: &Partition) -> Value {
    serde_json::to_value(lambda).expect("partitions serialize")
}
