//! Gluing two-leg vertices along a strip.
//!
//! Every vertex of a strip is a two-leg vertex `C^{(f1,f2,0)}_{μ1 μ2 ∅}` with
//! the vertical leg empty. A [`VertexRule`] says which of the slots `μ1`,
//! `μ2` faces left and which framings they carry; [`GluingRules`] adds the
//! propagator sign for each ordered pair of adjacent vertex types. The edge
//! between `v_k` and `v_{k+1}` carries `λ` on the right slot of `v_k`, `λ^t` on
//! the left slot of `v_{k+1}` and the weight `Q_k^{|λ|}`.

use std::collections::HashMap;

use crate::partitions::Partition;
use crate::scalars::{Coeff, Monomial, NovikovSeries, QMode, Scalar, ScalarError, Symbolic};
use crate::symfunc::{Basis, Tensor};

use super::{closed_form, framed_vertex, StripGeometry, VertexType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VertexError {
    #[error("invalid strip: {0}")]
    InvalidStrip(String),
    #[error("closed sector is not invertible: constant term {0}")]
    NonUnitClosedSector(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Sym(#[from] crate::symfunc::SymError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Mu1,
    Mu2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexRule {
    /// Slot facing left; the other slot faces right.
    pub left: Slot,
    /// Framings of the `μ1` and `μ2` slots when they carry a brane.
    pub brane: [i32; 2],
    /// Framings of the `μ1` and `μ2` slots when they sit on an internal edge.
    pub internal: [i32; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluingRules {
    pub a: VertexRule,
    pub b: VertexRule,
    /// `sign[t][t']`: whether an edge from type `t` to type `t'` carries
    /// `(-1)^{|λ|}`. Indexed by [`VertexType::index`].
    pub sign: [[bool; 2]; 2],
}

/// The conventions found by [`calibrate`]. Edges between equal types carry
/// net framing `-1` (A-A) or `+1` (B-B) and no sign; mixed edges carry
/// framing 0 and the sign `(-1)^{|λ|}`. The search leaves the split of an
/// edge framing between its two ends open, as well as the brane framing of
/// the left slot of type B, which never carries a brane.
pub const CALIBRATED: GluingRules = GluingRules {
    a: VertexRule {
        left: Slot::Mu2,
        brane: [-1, 0],
        internal: [0, 1],
    },
    b: VertexRule {
        left: Slot::Mu1,
        brane: [-1, 0],
        internal: [0, 1],
    },
    sign: [[false, true], [true, false]],
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branes {
    /// `L1` only.
    One,
    /// `L1` and `L2`.
    Two,
}

/// Order in which internal edges are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    /// Each edge partition is chosen on the right slot of the left vertex.
    LeftToRight,
    /// Each edge partition is chosen on the left slot of the right vertex.
    RightToLeft,
}

impl GluingRules {
    fn rule(&self, t: VertexType) -> VertexRule {
        match t {
            VertexType::A => self.a,
            VertexType::B => self.b,
        }
    }

    /// Framed value of vertex `k` of `strip` given its left and right
    /// partitions.
    pub fn vertex_value(
        &self,
        strip: &StripGeometry,
        k: usize,
        left: &Partition,
        right: &Partition,
    ) -> Scalar {
        let r = self.rule(strip.types()[k]);
        let left_internal = k > 0;
        let right_internal = k + 1 < strip.len();
        let empty = Partition::empty();
        let pick = |slot: usize, internal: bool| {
            if internal {
                r.internal[slot]
            } else {
                r.brane[slot]
            }
        };
        match r.left {
            Slot::Mu1 => framed_vertex(
                left,
                right,
                &empty,
                [pick(0, left_internal), pick(1, right_internal), 0],
            ),
            Slot::Mu2 => framed_vertex(
                right,
                left,
                &empty,
                [pick(0, right_internal), pick(1, left_internal), 0],
            ),
        }
    }

    /// Net framing `f` of an internal edge from type `t` to type `t'`: the
    /// edge contributes `q^{f κ(λ)/2}` for the partition `λ` on the right
    /// slot of its left vertex.
    pub fn edge_framings(&self) -> [[i32; 2]; 2] {
        let slots = |r: VertexRule| match r.left {
            Slot::Mu1 => (r.internal[0], r.internal[1]),
            Slot::Mu2 => (r.internal[1], r.internal[0]),
        };
        let mut out = [[0; 2]; 2];
        for (i, from) in [self.a, self.b].into_iter().enumerate() {
            for (j, to) in [self.a, self.b].into_iter().enumerate() {
                // κ(λ^t) = -κ(λ) on the far side of the edge
                out[i][j] = slots(from).1 - slots(to).0;
            }
        }
        out
    }

    fn edge_sign(&self, from: VertexType, to: VertexType, size: usize) -> bool {
        self.sign[from.index()][to.index()] && size % 2 == 1
    }
}

struct Glue<'a, M: QMode> {
    strip: &'a StripGeometry,
    rules: &'a GluingRules,
    mode: &'a M,
    cap: usize,
    branes: Branes,
    traversal: Traversal,
    values: HashMap<(usize, Partition, Partition), M::C>,
    out: Tensor<M::C>,
}

impl<M: QMode> Glue<'_, M> {
    fn value(
        &mut self,
        k: usize,
        left: &Partition,
        right: &Partition,
    ) -> Result<M::C, ScalarError> {
        let key = (k, left.clone(), right.clone());
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let v = self
            .mode
            .lift(&self.rules.vertex_value(self.strip, k, left, right))?;
        self.values.insert(key, v.clone());
        Ok(v)
    }

    /// Choose the partitions to the right of vertex `k`, whose left
    /// partition is `left`.
    fn step(
        &mut self,
        k: usize,
        first: &Partition,
        left: &Partition,
        acc: M::C,
        mono: Monomial,
        used: usize,
    ) -> Result<(), ScalarError> {
        let n = self.strip.len();
        let budget = self.cap - used;
        let types = self.strip.types();
        if k + 1 == n {
            let legs: Vec<Partition> = match self.branes {
                Branes::One => vec![Partition::empty()],
                Branes::Two => Partition::enumerate(budget),
            };
            for last in legs {
                let v = self.value(k, left, &last)?;
                if v.is_zero() {
                    continue;
                }
                let c = acc.mul(&v);
                let labels = first.size() + last.size();
                let series = NovikovSeries::term(mono.clone(), c, (self.cap - labels) as u32);
                self.out.add_term((first.clone(), last), &series);
            }
            return Ok(());
        }
        for lam in Partition::enumerate(budget) {
            // the partition seen by v_k on its right and by v_{k+1} on its left
            let (right, next_left) = match self.traversal {
                Traversal::LeftToRight => (lam.clone(), lam.transpose()),
                Traversal::RightToLeft => (lam.transpose(), lam.clone()),
            };
            let v = self.value(k, left, &right)?;
            if v.is_zero() {
                continue;
            }
            let mut c = acc.mul(&v);
            if self.rules.edge_sign(types[k], types[k + 1], lam.size()) {
                c = c.neg();
            }
            let m = mono.mul(&Monomial::from_powers([(
                self.strip.kahler()[k].clone(),
                lam.size() as u32,
            )]));
            self.step(k + 1, first, &next_left, c, m, used + lam.size())?;
        }
        Ok(())
    }
}

/// The unnormalized two-brane partition function of a strip: a tensor with
/// `L1` in the left factor and `L2` in the right factor, Schur basis,
/// truncated at total degree `cap` (`|λ_L1| + |λ_L2| + Q`-degree).
pub fn glue_strip<M: QMode>(
    strip: &StripGeometry,
    branes: Branes,
    cap: usize,
    rules: &GluingRules,
    traversal: Traversal,
    mode: &M,
) -> Result<Tensor<M::C>, VertexError> {
    let mut g = Glue {
        strip,
        rules,
        mode,
        cap,
        branes,
        traversal,
        values: HashMap::new(),
        out: Tensor::zero(Basis::Schur, cap),
    };
    for first in Partition::enumerate(cap) {
        let used = first.size();
        g.step(0, &first, &first, M::C::one(), Monomial::one(), used)?;
    }
    Ok(g.out)
}

/// `Z / Z_∅`, where `Z_∅` is the coefficient of `s_∅ ⊗ s_∅`.
pub fn z_open<C: Coeff>(z: &Tensor<C>) -> Result<Tensor<C>, VertexError> {
    let z = z.to_basis(Basis::Schur);
    let empty = (Partition::empty(), Partition::empty());
    let closed = z.coeff(&empty).with_cap(z.cap() as u32);
    let c0 = closed.constant_term();
    if c0.is_zero() {
        return Err(VertexError::NonUnitClosedSector(c0.to_string()));
    }
    let inv = closed
        .inverse()
        .map_err(|_| VertexError::NonUnitClosedSector(c0.to_string()))?;
    Ok(z.scale_series(&inv))
}

fn matches_closed_form(strip: &StripGeometry, rules: &GluingRules, cap: usize) -> bool {
    let glued = glue_strip(
        strip,
        Branes::Two,
        cap,
        rules,
        Traversal::LeftToRight,
        &Symbolic,
    )
    .and_then(|z| z_open(&z));
    let expected = closed_form(strip, Branes::Two, cap, &Symbolic);
    match (glued, expected) {
        (Ok(g), Ok(e)) => g.same_as(&e),
        _ => false,
    }
}

fn framings() -> Vec<[i32; 2]> {
    let mut out = Vec::new();
    for f1 in -1..=1 {
        for f2 in -1..=1 {
            out.push([f1, f2]);
        }
    }
    out
}

/// Every gluing convention, with framings in `{-1, 0, 1}`, that reproduces
/// the closed form for the strips `A`, `AA`, `AB`, `ABA`, `ABB` at total
/// degree `cap`.
///
/// `A` only sees the brane framings of type A, `AA` adds its internal
/// framings and the A-A sign, `AB` the type-B rule and the A-B sign, `ABA`
/// and `ABB` the remaining two signs, so the search runs stage by stage
/// instead of over the full product. Framings that no test strip reaches
/// (the brane framing on the left slot of type B) are reported as found.
pub fn calibrate(cap: usize) -> Vec<GluingRules> {
    let strip = |w: &str| StripGeometry::parse(w).expect("valid word");
    let (s_a, s_aa, s_ab, s_aba, s_abb) = (
        strip("A"),
        strip("AA"),
        strip("AB"),
        strip("ABA"),
        strip("ABB"),
    );
    let mut found = Vec::new();
    let zero = [0, 0];
    for left in [Slot::Mu1, Slot::Mu2] {
        for brane in framings() {
            let a = VertexRule {
                left,
                brane,
                internal: zero,
            };
            let base = GluingRules {
                a,
                b: a,
                sign: [[false; 2]; 2],
            };
            if !matches_closed_form(&s_a, &base, cap) {
                continue;
            }
            for internal in framings() {
                for aa in [false, true] {
                    let a = VertexRule { internal, ..a };
                    let r = GluingRules {
                        a,
                        b: a,
                        sign: [[aa, false], [false, false]],
                    };
                    if !matches_closed_form(&s_aa, &r, cap) {
                        continue;
                    }
                    calibrate_b(r, cap, &s_ab, &s_aba, &s_abb, &mut found);
                }
            }
        }
    }
    found
}

fn calibrate_b(
    r: GluingRules,
    cap: usize,
    s_ab: &StripGeometry,
    s_aba: &StripGeometry,
    s_abb: &StripGeometry,
    found: &mut Vec<GluingRules>,
) {
    let aa = r.sign[0][0];
    for left in [Slot::Mu1, Slot::Mu2] {
        for brane in framings() {
            for internal in framings() {
                let b = VertexRule {
                    left,
                    brane,
                    internal,
                };
                for ab in [false, true] {
                    let r = GluingRules {
                        b,
                        sign: [[aa, ab], [false, false]],
                        ..r
                    };
                    if !matches_closed_form(s_ab, &r, cap) {
                        continue;
                    }
                    for ba in [false, true] {
                        let r = GluingRules {
                            sign: [[aa, ab], [ba, false]],
                            ..r
                        };
                        if !matches_closed_form(s_aba, &r, cap) {
                            continue;
                        }
                        for bb in [false, true] {
                            let r = GluingRules {
                                sign: [[aa, ab], [ba, bb]],
                                ..r
                            };
                            if matches_closed_form(s_abb, &r, cap) {
                                found.push(r);
                            }
                        }
                    }
                }
            }
        }
    }
}
