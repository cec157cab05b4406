//! Inconsistency indices and the registry describing them.
//!
//! Every index is a plain function of a [`Pcm`]. Values are returned in the
//! index's own orientation; [`IndexDescriptor::oriented`] maps them onto a
//! common "higher is more inconsistent" scale.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::IndexError;
use crate::math;
use crate::matrix::Pcm;
use crate::property::{Property, UnknownName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum IndexId {
    #[cfg_attr(feature = "serde", serde(rename = "K"))]
    K,
    #[cfg_attr(feature = "serde", serde(rename = "AI"))]
    Ai,
    #[cfg_attr(feature = "serde", serde(rename = "AI_STAR"))]
    AiStar,
    #[cfg_attr(feature = "serde", serde(rename = "CI_H"))]
    CiH,
    #[cfg_attr(feature = "serde", serde(rename = "CCI"))]
    Cci,
    #[cfg_attr(feature = "serde", serde(rename = "RE"))]
    Re,
    #[cfg_attr(feature = "serde", serde(rename = "RE_STAR"))]
    ReStar,
    #[cfg_attr(feature = "serde", serde(rename = "I_STAR"))]
    IStar,
    #[cfg_attr(feature = "serde", serde(rename = "I_NOT6"))]
    INot6,
}

impl IndexId {
    pub const ALL: [IndexId; 9] = [
        Self::K,
        Self::Ai,
        Self::AiStar,
        Self::CiH,
        Self::Cci,
        Self::Re,
        Self::ReStar,
        Self::IStar,
        Self::INot6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::K => "K",
            Self::Ai => "AI",
            Self::AiStar => "AI_STAR",
            Self::CiH => "CI_H",
            Self::Cci => "CCI",
            Self::Re => "RE",
            Self::ReStar => "RE_STAR",
            Self::IStar => "I_STAR",
            Self::INot6 => "I_NOT6",
        }
    }

    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn descriptor(self) -> &'static IndexDescriptor {
        &REGISTRY[self.ordinal()]
    }

    /// Evaluates the index. Only [`IndexId::Re`] can fail.
    pub fn evaluate(self, m: &Pcm) -> Result<f64, IndexError> {
        Ok(match self {
            Self::K => index_k(m),
            Self::Ai => index_ai(m),
            Self::AiStar => index_ai_star(m),
            Self::CiH => index_ci_h(m),
            Self::Cci => index_cci(m),
            Self::Re => return index_re(m),
            Self::ReStar => index_re_star(m),
            Self::IStar => index_i_star(m),
            Self::INot6 => index_i_not6(m),
        })
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexId {
    type Err = UnknownName;

    /// Accepts the canonical ids case-insensitively, plus `*` spellings
    /// such as `AI*` and `RE*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        let normalized: alloc::string::String = key
            .chars()
            .map(|c| c.to_ascii_uppercase())
            .collect::<alloc::string::String>()
            .replace('*', "_STAR")
            .replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == normalized || id.as_str().replace('_', "") == normalized)
            .ok_or(UnknownName)
    }
}

/// Direction in which an index grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    HigherIsMoreInconsistent,
    HigherIsMoreConsistent,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::HigherIsMoreInconsistent => "higher-is-more-inconsistent",
            Self::HigherIsMoreConsistent => "higher-is-more-consistent",
        }
    }
}

/// Analytically established status of an (index, property) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ReferenceStatus {
    Satisfied,
    NotSatisfied,
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexDescriptor {
    pub id: IndexId,
    pub name: &'static str,
    /// Value taken exactly on consistent matrices.
    pub nu: f64,
    pub orientation: Orientation,
    /// Proven status of P1..P6, in property order.
    pub reference: [ReferenceStatus; 6],
}

impl IndexDescriptor {
    /// Maps a raw value onto the "higher is more inconsistent" scale.
    pub fn oriented(&self, value: f64) -> f64 {
        match self.orientation {
            Orientation::HigherIsMoreInconsistent => value,
            Orientation::HigherIsMoreConsistent => -value,
        }
    }

    pub fn reference_for(&self, property: Property) -> ReferenceStatus {
        self.reference[property.ordinal()]
    }
}

use Orientation::{HigherIsMoreConsistent, HigherIsMoreInconsistent};
use ReferenceStatus::{NotSatisfied as No, Satisfied as Yes, Unknown as Open};

static REGISTRY: [IndexDescriptor; 9] = [
    IndexDescriptor {
        id: IndexId::K,
        name: "Koczkodaj triad index",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::Ai,
        name: "ambiguity index",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, No, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::AiStar,
        name: "unnormalised ambiguity index",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::CiH,
        name: "Hadamard consistency index",
        nu: 1.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::Cci,
        name: "cosine consistency index",
        nu: 1.0,
        orientation: HigherIsMoreConsistent,
        reference: [Yes, Yes, No, Open, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::Re,
        name: "relative error",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, No, No, Yes],
    },
    IndexDescriptor {
        id: IndexId::ReStar,
        name: "unnormalised relative error",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::IStar,
        name: "triad sum index",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, Yes],
    },
    IndexDescriptor {
        id: IndexId::INot6,
        name: "dominant-row weighted triad sum",
        nu: 0.0,
        orientation: HigherIsMoreInconsistent,
        reference: [Yes, Yes, Yes, Yes, Yes, No],
    },
];

/// All nine descriptors, in [`IndexId::ALL`] order.
pub fn registry() -> &'static [IndexDescriptor] {
    &REGISTRY
}

pub fn lookup(id: IndexId) -> &'static IndexDescriptor {
    id.descriptor()
}

/// Visits every triad `i < j < k` with `x = a_ik / (a_ij a_jk)`.
fn for_each_triad(m: &Pcm, mut f: impl FnMut(f64)) {
    let n = m.order();
    for i in 0..n {
        for j in (i + 1)..n {
            let a_ij = m.get(i, j);
            for k in (j + 1)..n {
                f(m.get(i, k) / (a_ij * m.get(j, k)));
            }
        }
    }
}

/// Worst triad deviation, `max min{|1 - x|, |1 - 1/x|}`. Lies in `[0, 1)`.
pub fn index_k(m: &Pcm) -> f64 {
    let mut worst: f64 = 0.0;
    for_each_triad(m, |x| {
        let local = (1.0 - x).abs().min((1.0 - 1.0 / x).abs());
        worst = worst.max(local);
    });
    worst
}

/// Smallest and largest indirect estimate `a_ik a_kj` of `a_ij`.
fn indirect_bounds(m: &Pcm, i: usize, j: usize) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..m.order() {
        let v = m.get(i, k) * m.get(k, j);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// The sets `r_ij = { a_ik a_kj | k }` of indirect estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct AmbiguityMatrix {
    order: usize,
    cells: Vec<Vec<f64>>,
    bounds: Vec<(f64, f64)>,
}

/// Relative gap under which two indirect estimates count as the same element.
pub const AMBIGUITY_MERGE_TOLERANCE: f64 = 1e-12;

impl AmbiguityMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distinct elements of `r_ij`, ascending.
    pub fn cell(&self, i: usize, j: usize) -> &[f64] {
        &self.cells[i * self.order + j]
    }

    /// Exact minimum over all `k` of `a_ik a_kj`.
    pub fn min(&self, i: usize, j: usize) -> f64 {
        self.bounds[i * self.order + j].0
    }

    /// Exact maximum over all `k` of `a_ik a_kj`.
    pub fn max(&self, i: usize, j: usize) -> f64 {
        self.bounds[i * self.order + j].1
    }

    pub fn width(&self, i: usize, j: usize) -> f64 {
        self.max(i, j) - self.min(i, j)
    }
}

pub fn ambiguity_sets(m: &Pcm) -> AmbiguityMatrix {
    let n = m.order();
    let mut cells = Vec::with_capacity(n * n);
    let mut bounds = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                // a_ik a_ki = 1 for every k
                bounds.push((1.0, 1.0));
                cells.push(alloc::vec![1.0]);
                continue;
            }
            let mut values: Vec<f64> = (0..n).map(|k| m.get(i, k) * m.get(k, j)).collect();
            values.sort_by(f64::total_cmp);
            bounds.push((values[0], values[n - 1]));
            values.dedup_by(|later, kept| {
                math::approx_eq_rel(*later, *kept, AMBIGUITY_MERGE_TOLERANCE)
            });
            cells.push(values);
        }
    }
    AmbiguityMatrix {
        order: n,
        cells,
        bounds,
    }
}

/// Mean normalised interval width over the strict upper triangle.
pub fn index_ai(m: &Pcm) -> f64 {
    let n = m.order();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let (lo, hi) = indirect_bounds(m, i, j);
            sum += (hi - lo) / ((1.0 + hi) * (1.0 + lo));
        }
    }
    2.0 * sum / (n * (n - 1)) as f64
}

/// Raw interval widths summed over every ordered pair, divided by `n(n-1)`.
///
/// The diagonal cells are singletons and contribute nothing. Summing both
/// triangles is what keeps the index invariant under transposition, since
/// `r_ij` of the transpose is `r_ji` of the original.
pub fn index_ai_star(m: &Pcm) -> f64 {
    let n = m.order();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let (lo, hi) = indirect_bounds(m, i, j);
            sum += hi - lo;
        }
    }
    sum / (n * (n - 1)) as f64
}

/// Entrywise geometric-mean approximation `g_ij = (prod_k a_ik a_kj)^(1/n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GMatrix(Pcm);

impl GMatrix {
    pub fn as_pcm(&self) -> &Pcm {
        &self.0
    }

    pub fn into_pcm(self) -> Pcm {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }
}

pub fn consistent_approximation(m: &Pcm) -> GMatrix {
    let n = m.order();
    let logs = m.log_entries();
    let inv_n = 1.0 / n as f64;
    let row_mean: Vec<f64> = (0..n)
        .map(|i| logs[i * n..(i + 1) * n].iter().sum::<f64>() * inv_n)
        .collect();
    let col_mean: Vec<f64> = (0..n)
        .map(|j| (0..n).map(|k| logs[k * n + j]).sum::<f64>() * inv_n)
        .collect();
    let mut entries = Vec::with_capacity(n * n);
    for (i, r) in row_mean.iter().enumerate() {
        for (j, c) in col_mean.iter().enumerate() {
            entries.push(if i == j { 1.0 } else { math::exp(r + c) });
        }
    }
    GMatrix(Pcm::from_parts_unchecked(n, entries))
}

/// `(1/n^2) sum_ij a_ij g_ji`; at least 1, equal to 1 exactly on consistent input.
pub fn index_ci_h(m: &Pcm) -> f64 {
    let n = m.order();
    let g = consistent_approximation(m);
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += m.get(i, j) * g.get(j, i);
        }
    }
    sum / (n * n) as f64
}

/// Cosine consistency index. Higher means more consistent; 1 iff consistent.
pub fn index_cci(m: &Pcm) -> f64 {
    let n = m.order();
    let column_norm: Vec<f64> = (0..n)
        .map(|j| math::sqrt((0..n).map(|k| m.get(k, j) * m.get(k, j)).sum()))
        .collect();
    let mut total = 0.0;
    for i in 0..n {
        let row: f64 = (0..n).map(|j| m.get(i, j) / column_norm[j]).sum();
        total += row * row;
    }
    math::sqrt(total) / n as f64
}

/// Numerator and denominator of the relative error, natural-log units.
fn relative_error_parts(m: &Pcm) -> (f64, f64) {
    let n = m.order();
    let p = m.log_entries();
    let d: Vec<f64> = (0..n)
        .map(|i| p[i * n..(i + 1) * n].iter().sum::<f64>() / n as f64)
        .collect();
    let mut residual = 0.0;
    let mut scale = 0.0;
    for i in 0..n {
        for j in 0..n {
            let p_ij = p[i * n + j];
            let e = p_ij - d[i] + d[j];
            residual += e * e;
            scale += p_ij * p_ij;
        }
    }
    (residual, scale)
}

/// Relative error. Undefined on the all-ones matrix.
pub fn index_re(m: &Pcm) -> Result<f64, IndexError> {
    let (residual, scale) = relative_error_parts(m);
    if scale == 0.0 {
        return Err(IndexError::ZeroDenominator);
    }
    Ok(residual / scale)
}

/// Unnormalised relative error: `sum_ij (p_ij - d_i + d_j)^2`.
pub fn index_re_star(m: &Pcm) -> f64 {
    relative_error_parts(m).0
}

/// `sum over i<j<k of (x + 1/x - 2)` with `x = a_ik / (a_ij a_jk)`.
pub fn index_i_star(m: &Pcm) -> f64 {
    let mut sum = 0.0;
    // (x - 1)^2 / x equals x + 1/x - 2 without the cancellation near x = 1
    for_each_triad(m, |x| sum += (x - 1.0) * (x - 1.0) / x);
    sum
}

/// Row holding the greatest off-diagonal entry; the smallest such row on ties.
pub fn dominant_row(m: &Pcm) -> usize {
    let n = m.order();
    let mut best = f64::NEG_INFINITY;
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j) > best {
                best = m.get(i, j);
                row = i;
            }
        }
    }
    row
}

/// `1 + max{ min_{j != H} (a_Hj - 1), 0 }` for the dominant row `H`.
pub fn dominant_row_factor(m: &Pcm) -> f64 {
    let h = dominant_row(m);
    let smallest = (0..m.order())
        .filter(|&j| j != h)
        .map(|j| m.get(h, j) - 1.0)
        .fold(f64::INFINITY, f64::min);
    1.0 + smallest.max(0.0)
}

/// [`index_i_star`] weighted by [`dominant_row_factor`]. Invariant under
/// relabelling, not under transposition.
pub fn index_i_not6(m: &Pcm) -> f64 {
    index_i_star(m) * dominant_row_factor(m)
}
