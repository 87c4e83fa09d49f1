//! The topological vertex, strip geometries, gluing, the closed form for
//! strips and mirror curves.

mod closed_form;
mod gluing;
mod mirror;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::partitions::Partition;
use crate::scalars::{Coeff, Monomial, Scalar, Var};
use crate::symfunc::principal_spec_skew;

pub use closed_form::{
    closed_form, two_leg_product, two_leg_vertex_series, verify_one_brane,
    verify_strip_closed_form, verify_two_leg_vertex,
};
pub use gluing::{
    calibrate, glue_strip, z_open, Branes, GluingRules, Slot, Traversal, VertexError, VertexRule,
    CALIBRATED,
};
pub use mirror::{mirror_and_quantum, CurveTerm, MirrorCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    A,
    B,
}

impl VertexType {
    pub fn index(self) -> usize {
        match self {
            VertexType::A => 0,
            VertexType::B => 1,
        }
    }
}

/// A strip: vertex types `v_1 .. v_n` left to right, `v_1` of type A, with
/// Kähler parameters `Q_1 .. Q_{n-1}` on the internal edges. Brane `L1` sits
/// on the leftmost external leg, `L2` on the rightmost.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripGeometry {
    types: Vec<VertexType>,
    kahler: Vec<Var>,
}

impl StripGeometry {
    pub fn new(types: Vec<VertexType>) -> Result<Self, VertexError> {
        match types.first() {
            None => return Err(VertexError::InvalidStrip("the type word is empty".into())),
            Some(VertexType::B) => {
                return Err(VertexError::InvalidStrip(
                    "the first vertex must be of type A".into(),
                ))
            }
            _ => {}
        }
        let kahler = (1..types.len())
            .map(|i| Var::unit(&format!("Q{i}")))
            .collect();
        Ok(StripGeometry { types, kahler })
    }

    /// Parse a word such as `"ABA"`.
    pub fn parse(word: &str) -> Result<Self, VertexError> {
        let types = word
            .chars()
            .map(|c| match c {
                'A' | 'a' => Ok(VertexType::A),
                'B' | 'b' => Ok(VertexType::B),
                other => Err(VertexError::InvalidStrip(format!(
                    "unknown vertex type {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(types)
    }

    /// Every word of length `1..=max_len` that starts with A.
    pub fn all_words(max_len: usize) -> Vec<StripGeometry> {
        let mut out = Vec::new();
        for n in 1..=max_len {
            for bits in 0..(1usize << (n - 1)) {
                let mut types = vec![VertexType::A];
                for k in 0..n - 1 {
                    types.push(if bits >> (n - 2 - k) & 1 == 1 {
                        VertexType::B
                    } else {
                        VertexType::A
                    });
                }
                out.push(StripGeometry::new(types).expect("starts with A"));
            }
        }
        out
    }

    pub fn types(&self) -> &[VertexType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn kahler(&self) -> &[Var] {
        &self.kahler
    }

    pub fn word(&self) -> String {
        self.types
            .iter()
            .map(|t| if *t == VertexType::A { 'A' } else { 'B' })
            .collect()
    }

    /// `Q_{i,j} = Q_i Q_{i+1} ... Q_{j-1}` for `i < j`, and 1 otherwise
    /// (1-based vertex indices).
    pub fn q_ij(&self, i: usize, j: usize) -> Monomial {
        if i >= j {
            return Monomial::one();
        }
        Monomial::from_powers((i..j).map(|l| (self.kahler[l - 1].clone(), 1)))
    }

    /// `(alphas, betas)`: `Q_{1,i}` for the type-A and type-B vertices.
    pub fn strip_params(&self) -> (Vec<Monomial>, Vec<Monomial>) {
        let mut alphas = Vec::new();
        let mut betas = Vec::new();
        for (k, t) in self.types.iter().enumerate() {
            let m = self.q_ij(1, k + 1);
            match t {
                VertexType::A => alphas.push(m),
                VertexType::B => betas.push(m),
            }
        }
        (alphas, betas)
    }
}

impl fmt::Display for StripGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

fn vertex_cache() -> &'static Mutex<HashMap<(Partition, Partition, Partition), Scalar>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), Scalar>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `C_{μ1 μ2 μ3} = q^{κ(μ3)/2} s_{μ2}(q^ρ) sum_η s_{μ1/η}(q^{μ2^t+ρ}) s_{μ3^t/η}(q^{μ2+ρ})`.
pub fn topological_vertex(mu1: &Partition, mu2: &Partition, mu3: &Partition) -> Scalar {
    let key = (mu1.clone(), mu2.clone(), mu3.clone());
    if let Some(v) = vertex_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let empty = Partition::empty();
    let mu2t = mu2.transpose();
    let mu3t = mu3.transpose();
    let mut sum = Scalar::zero();
    for eta in Partition::enumerate(mu1.size().min(mu3t.size())) {
        if !mu1.contains(&eta) || !mu3t.contains(&eta) {
            continue;
        }
        let a = principal_spec_skew(mu1, &eta, &mu2t);
        if a.is_zero() {
            continue;
        }
        sum = sum.add(&a.mul(&principal_spec_skew(&mu3t, &eta, mu2)));
    }
    let value = Scalar::t_pow(mu3.kappa() as i32)
        .mul(&principal_spec_skew(mu2, &empty, &empty))
        .mul(&sum);
    vertex_cache().lock().unwrap().insert(key, value.clone());
    value
}

/// `q^{(f1 κ(μ1) + f2 κ(μ2) + f3 κ(μ3))/2} C_{μ1 μ2 μ3}`.
pub fn framed_vertex(mu1: &Partition, mu2: &Partition, mu3: &Partition, f: [i32; 3]) -> Scalar {
    let shift = f[0] as i64 * mu1.kappa() + f[1] as i64 * mu2.kappa() + f[2] as i64 * mu3.kappa();
    Scalar::t_pow(shift as i32).mul(&topological_vertex(mu1, mu2, mu3))
}
