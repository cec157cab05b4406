//! Pairwise comparison matrices and the preference transformations the
//! axioms are phrased in.

use alloc::vec::Vec;
use core::fmt;

use crate::error::PcmError;
use crate::math;

/// Relative tolerance for `a_ij * a_ji = 1` at construction.
pub const RECIPROCITY_TOLERANCE: f64 = 1e-12;

/// Smallest accepted order.
pub const MIN_ORDER: usize = 3;

/// A positive reciprocal square matrix of order `n >= 3`.
///
/// Entries are stored row-major. Indices are zero-based throughout the API;
/// errors display them one-based.
#[derive(Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Pcm {
    order: usize,
    #[cfg_attr(
        feature = "serde",
        serde(rename = "rows", serialize_with = "serialize_rows")
    )]
    entries: Vec<f64>,
}

#[cfg(feature = "serde")]
fn serialize_rows<S: serde::Serializer>(entries: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let n = math::isqrt(entries.len());
    let mut seq = s.serialize_seq(Some(n))?;
    for row in entries.chunks(n.max(1)) {
        seq.serialize_element(row)?;
    }
    seq.end()
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Pcm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Repr {
            rows: Vec<Vec<f64>>,
        }
        let repr = Repr::deserialize(d)?;
        Pcm::new(repr.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Pcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Pcm {
    /// Validates raw rows and builds a matrix.
    pub fn new<R: AsRef<[f64]>>(rows: impl IntoIterator<Item = R>) -> Result<Self, PcmError> {
        let rows: Vec<R> = rows.into_iter().collect();
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(PcmError::NonSquare {
                    row: i,
                    len: row.len(),
                    expected: order,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(order, entries)
    }

    /// Builds a matrix from `order * order` row-major entries.
    pub fn from_row_major(order: usize, entries: Vec<f64>) -> Result<Self, PcmError> {
        if entries.len() != order * order {
            return Err(PcmError::NonSquare {
                row: entries.len() / order.max(1),
                len: entries.len() % order.max(1),
                expected: order,
            });
        }
        if order < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order });
        }
        for (idx, &value) in entries.iter().enumerate() {
            let (row, col) = (idx / order, idx % order);
            if !value.is_finite() {
                return Err(PcmError::NonFiniteEntry { row, col });
            }
            if value <= 0.0 {
                return Err(PcmError::NonPositiveEntry { row, col, value });
            }
        }
        let mut worst: Option<(usize, usize, f64, f64)> = None;
        for i in 0..order {
            for j in i..order {
                let product = entries[i * order + j] * entries[j * order + i];
                let deviation = (product - 1.0).abs();
                if deviation > RECIPROCITY_TOLERANCE
                    && worst.is_none_or(|(_, _, _, w)| deviation > w)
                {
                    worst = Some((i, j, product, deviation));
                }
            }
        }
        if let Some((row, col, product, _)) = worst {
            return Err(PcmError::ReciprocityViolation { row, col, product });
        }
        Ok(Self { order, entries })
    }

    /// Builds from an upper triangle given row by row (`i < j`), filling the
    /// unit diagonal and reciprocal lower triangle.
    pub fn from_upper_triangle(order: usize, upper: &[f64]) -> Result<Self, PcmError> {
        if order < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order });
        }
        let expected = order * (order - 1) / 2;
        if upper.len() != expected {
            return Err(PcmError::NonSquare {
                row: 0,
                len: upper.len(),
                expected,
            });
        }
        let mut entries = alloc::vec![1.0; order * order];
        let mut it = upper.iter();
        for i in 0..order {
            for j in (i + 1)..order {
                let v = *it.next().unwrap_or(&1.0);
                entries[i * order + j] = v;
                entries[j * order + i] = 1.0 / v;
            }
        }
        Self::from_row_major(order, entries)
    }

    /// Matrix with `a_ij = w_i / w_j`.
    pub fn consistent_from_weights(weights: &[f64]) -> Result<Self, PcmError> {
        let order = weights.len();
        if order < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order });
        }
        if let Some((idx, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| **w <= 0.0 || !w.is_finite())
        {
            return Err(PcmError::NonPositiveEntry {
                row: idx,
                col: idx,
                value,
            });
        }
        let mut entries = alloc::vec![1.0; order * order];
        for i in 0..order {
            for j in (i + 1)..order {
                let v = weights[i] / weights[j];
                entries[i * order + j] = v;
                entries[j * order + i] = 1.0 / v;
            }
        }
        Self::from_row_major(order, entries)
    }

    /// Consistent matrix from the chain `a_12, a_23, ..., a_{n-1,n}`:
    /// `b_ij` is the product of the chain links between `i` and `j`.
    pub fn consistent_from_chain(chain: &[f64]) -> Result<Self, PcmError> {
        let order = chain.len() + 1;
        if order < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order });
        }
        if let Some((idx, &value)) = chain
            .iter()
            .enumerate()
            .find(|(_, c)| **c <= 0.0 || !c.is_finite())
        {
            return Err(PcmError::NonPositiveEntry {
                row: idx,
                col: idx + 1,
                value,
            });
        }
        let mut entries = alloc::vec![1.0; order * order];
        for i in 0..order {
            let mut product = 1.0;
            for j in (i + 1)..order {
                product *= chain[j - 1];
                entries[i * order + j] = product;
                entries[j * order + i] = 1.0 / product;
            }
        }
        Self::from_row_major(order, entries)
    }

    /// The `n x n` matrix of ones.
    pub fn ones(order: usize) -> Result<Self, PcmError> {
        Self::from_row_major(order, alloc::vec![1.0; order * order])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.order + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    /// Checks `|a_ik / (a_ij a_jk) - 1| <= tol` over every triple.
    pub fn is_consistent(&self, tol: f64) -> bool {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let a_ij = self.get(i, j);
                for k in 0..n {
                    if (self.get(i, k) / (a_ij * self.get(j, k)) - 1.0).abs() > tol {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabels alternatives: entry `(i, j)` of the result is `a_{p(i) p(j)}`.
    pub fn permute(&self, permutation: &Permutation) -> Result<Self, PcmError> {
        let n = self.order;
        if permutation.len() != n {
            return Err(PcmError::OrderMismatch {
                expected: n,
                found: permutation.len(),
            });
        }
        let map = permutation.as_slice();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(map[i], map[j]));
            }
        }
        Ok(Self { order: n, entries })
    }

    /// Inverts every preference.
    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i));
            }
        }
        Self { order: n, entries }
    }

    /// Entrywise power `a_ij^b`.
    ///
    /// Only `b >= 1` is an intensification; smaller positive exponents are
    /// accepted for curve sampling, see [`is_intensification`].
    pub fn intensify(&self, b: f64) -> Self {
        self.map_upper(|a| math::pow(a, b))
    }

    /// Replaces `a_pq` by `a_pq^delta` and `a_qp` by `a_qp^delta`.
    /// Both are powered directly, so `delta = 1` returns the same entries.
    pub fn perturb_entry(&self, p: usize, q: usize, delta: f64) -> Result<Self, PcmError> {
        let n = self.order;
        if p >= n || q >= n {
            return Err(PcmError::IndexOutOfRange {
                row: p,
                col: q,
                order: n,
            });
        }
        if p == q {
            return Err(PcmError::DiagonalEntry { index: p });
        }
        let a_pq = self.get(p, q);
        if (a_pq - 1.0).abs() <= RECIPROCITY_TOLERANCE {
            return Err(PcmError::UnitEntry { row: p, col: q });
        }
        if delta <= 0.0 || !delta.is_finite() {
            return Err(PcmError::InvalidExponent { value: delta });
        }
        let mut entries = self.entries.clone();
        entries[p * n + q] = math::pow(a_pq, delta);
        entries[q * n + p] = math::pow(self.get(q, p), delta);
        Self::from_row_major(n, entries)
    }

    /// Multiplies `a_pq` by `factor` and divides `a_qp` by it.
    pub fn scale_entry(&self, p: usize, q: usize, factor: f64) -> Result<Self, PcmError> {
        let n = self.order;
        if p >= n || q >= n {
            return Err(PcmError::IndexOutOfRange {
                row: p,
                col: q,
                order: n,
            });
        }
        if p == q {
            return Err(PcmError::DiagonalEntry { index: p });
        }
        let mut entries = self.entries.clone();
        let v = self.get(p, q) * factor;
        entries[p * n + q] = v;
        entries[q * n + p] = 1.0 / v;
        Self::from_row_major(n, entries)
    }

    /// Applies `f` to the strict upper triangle and rebuilds the lower
    /// triangle as reciprocals, so reciprocity holds exactly.
    fn map_upper(&self, f: impl Fn(f64) -> f64) -> Self {
        let n = self.order;
        let mut entries = alloc::vec![1.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = f(self.get(i, j));
                entries[i * n + j] = v;
                entries[j * n + i] = 1.0 / v;
            }
        }
        Self { order: n, entries }
    }

    /// Entrywise natural logarithm (row-major).
    pub(crate) fn log_entries(&self) -> Vec<f64> {
        self.entries.iter().map(|&a| math::ln(a)).collect()
    }

    /// Trusted constructor for values produced by the crate's own arithmetic.
    pub(crate) fn from_parts_unchecked(order: usize, entries: Vec<f64>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        Self { order, entries }
    }
}

/// Whether `b` lies in the intensification domain `b >= 1`.
pub fn is_intensification(b: f64) -> bool {
    b >= 1.0
}

/// A bijection on `{0, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<usize>", into = "Vec<usize>"))]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self, PcmError> {
        let n = mapping.len();
        let mut seen = alloc::vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(PcmError::NotAPermutation);
            }
            seen[m] = true;
        }
        Ok(Self(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Swaps positions `a` and `b` of the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, PcmError> {
        if a >= n || b >= n {
            return Err(PcmError::NotAPermutation);
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Ok(Self(map))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.0.len()];
        for (i, &m) in self.0.iter().enumerate() {
            inv[m] = i;
        }
        Self(inv)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Every permutation of `n` elements in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = alloc::vec![Self(current.clone())];
        // next lexicographic permutation
        loop {
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap_or(i);
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Self(current.clone()));
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PcmError;

    fn try_from(value: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(value: Permutation) -> Self {
        value.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;
    use std::string::ToString;

    fn ambiguity() -> Pcm {
        Pcm::new([[1.0, 2.0, 8.0], [0.5, 1.0, 2.0], [0.125, 0.5, 1.0]]).unwrap()
    }

    fn pair() -> Pcm {
        Pcm::new([[1.0, 0.5, 0.25], [2.0, 1.0, 1.0 / 3.0], [4.0, 3.0, 1.0]]).unwrap()
    }

    fn assert_close(a: &Pcm, b: &Pcm, rel: f64) {
        assert_eq!(a.order(), b.order());
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert!((x - y).abs() <= rel * x.abs().max(y.abs()), "{x} vs {y}");
        }
    }

    #[test]
    fn accepts_valid_matrices() {
        assert_eq!(ambiguity().order(), 3);
        assert!(Pcm::new([[1.0; 3]; 3]).is_ok());
    }

    #[test]
    fn reports_worst_reciprocity_pair() {
        let err =
            Pcm::new([[1.0, 2.0, 8.0], [0.5, 1.0, 2.0], [0.125, 1.0 / 3.0, 1.0]]).unwrap_err();
        match err {
            PcmError::ReciprocityViolation { row, col, .. } => assert_eq!((row, col), (1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().contains("(2,3)"));
    }

    #[test]
    fn rejects_bad_shapes_and_entries() {
        assert_eq!(
            Pcm::new([[1.0, 2.0], [0.5, 1.0]]).unwrap_err(),
            PcmError::OrderTooSmall { order: 2 }
        );
        assert!(matches!(
            Pcm::new(vec![
                vec![1.0, 2.0, 3.0],
                vec![0.5, 1.0],
                vec![1.0, 1.0, 1.0]
            ]),
            Err(PcmError::NonSquare {
                row: 1,
                len: 2,
                expected: 3
            })
        ));
        assert!(matches!(
            Pcm::new([[1.0, -2.0, 1.0], [-0.5, 1.0, 1.0], [1.0, 1.0, 1.0]]),
            Err(PcmError::NonPositiveEntry { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            Pcm::new([[2.0, 1.0, 1.0], [1.0, 1.0, 1.0], [1.0, 1.0, 1.0]]),
            Err(PcmError::ReciprocityViolation { row: 0, col: 0, .. })
        ));
    }

    #[test]
    fn consistency_examples() {
        let w = Pcm::consistent_from_weights(&[1.0, 2.0, 4.0]).unwrap();
        assert!(w.is_consistent(1e-9));
        assert!(!ambiguity().is_consistent(1e-9));
        assert!(!pair().is_consistent(1e-9));
    }

    #[test]
    fn weights_and_chain_constructions() {
        assert_eq!(
            Pcm::consistent_from_weights(&[1.0, 1.0, 1.0]).unwrap(),
            Pcm::ones(3).unwrap()
        );
        let w = Pcm::consistent_from_weights(&[4.0, 2.0, 1.0]).unwrap();
        let expected = Pcm::new([[1.0, 2.0, 4.0], [0.5, 1.0, 2.0], [0.25, 0.5, 1.0]]).unwrap();
        assert_eq!(w, expected);
        assert_eq!(Pcm::consistent_from_chain(&[2.0, 2.0]).unwrap(), expected);
        assert_eq!(
            Pcm::consistent_from_chain(&[1.0, 1.0, 1.0]).unwrap(),
            Pcm::ones(4).unwrap()
        );
        let c = Pcm::consistent_from_chain(&[2.0, 3.0]).unwrap();
        let e = Pcm::new([
            [1.0, 2.0, 6.0],
            [0.5, 1.0, 3.0],
            [1.0 / 6.0, 1.0 / 3.0, 1.0],
        ])
        .unwrap();
        assert_eq!(c, e);
        assert_eq!(
            Pcm::consistent_from_weights(&[1.0, 2.0]).unwrap_err(),
            PcmError::OrderTooSmall { order: 2 }
        );
        assert!(matches!(
            Pcm::consistent_from_weights(&[1.0, 0.0, 2.0]),
            Err(PcmError::NonPositiveEntry { .. })
        ));
        assert!(matches!(
            Pcm::consistent_from_chain(&[1.0, -1.0]),
            Err(PcmError::NonPositiveEntry { .. })
        ));
        assert_eq!(
            Pcm::consistent_from_chain(&[2.0]).unwrap_err(),
            PcmError::OrderTooSmall { order: 2 }
        );
    }

    #[test]
    fn permute_swap_of_pair() {
        let swapped = pair()
            .permute(&Permutation::transposition(3, 0, 1).unwrap())
            .unwrap();
        let expected =
            Pcm::new([[1.0, 2.0, 1.0 / 3.0], [0.5, 1.0, 0.25], [3.0, 4.0, 1.0]]).unwrap();
        assert_eq!(swapped, expected);
        assert_eq!(pair().permute(&Permutation::identity(3)).unwrap(), pair());
        let t = Permutation::transposition(3, 0, 2).unwrap();
        assert_eq!(pair().permute(&t).unwrap().permute(&t).unwrap(), pair());
        assert_eq!(
            pair().permute(&Permutation::identity(4)).unwrap_err(),
            PcmError::OrderMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn transpose_of_pair() {
        let t = Pcm::new([[1.0, 2.0, 4.0], [0.5, 1.0, 3.0], [0.25, 1.0 / 3.0, 1.0]]).unwrap();
        assert_eq!(pair().transpose(), t);
        assert_eq!(Pcm::ones(3).unwrap().transpose(), Pcm::ones(3).unwrap());
        assert_eq!(pair().transpose().transpose(), pair());
    }

    #[test]
    fn intensify_ambiguity() {
        assert_eq!(ambiguity().intensify(1.0), ambiguity());
        let a2 = Pcm::new([[1.0, 4.0, 64.0], [0.25, 1.0, 4.0], [1.0 / 64.0, 0.25, 1.0]]).unwrap();
        assert_close(&ambiguity().intensify(2.0), &a2, 1e-15);
        let a3 = Pcm::new([
            [1.0, 8.0, 512.0],
            [0.125, 1.0, 8.0],
            [1.0 / 512.0, 0.125, 1.0],
        ])
        .unwrap();
        assert_close(&ambiguity().intensify(3.0), &a3, 1e-15);
        assert!(is_intensification(1.0) && !is_intensification(0.5));
    }

    #[test]
    fn perturb_entry_examples() {
        let w = Pcm::consistent_from_weights(&[4.0, 2.0, 1.0]).unwrap();
        assert_eq!(w.perturb_entry(0, 2, 1.0).unwrap(), w);
        let p = w.perturb_entry(0, 2, 2.0).unwrap();
        assert_eq!(p.get(0, 2), 16.0);
        assert_eq!(p.get(2, 0), 1.0 / 16.0);
        assert_eq!(p.get(0, 1), 2.0);
        assert_eq!(p.get(1, 2), 2.0);
        assert!(!p.is_consistent(1e-9));
        assert_eq!(
            w.perturb_entry(1, 1, 2.0).unwrap_err(),
            PcmError::DiagonalEntry { index: 1 }
        );
        let ones = Pcm::ones(3).unwrap();
        assert_eq!(
            ones.perturb_entry(0, 1, 2.0).unwrap_err(),
            PcmError::UnitEntry { row: 0, col: 1 }
        );
    }

    #[test]
    fn enumerates_all_permutations() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
        assert_eq!(Permutation::all(1), vec![Permutation::identity(1)]);
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    fn arb_pcm() -> impl Strategy<Value = Pcm> {
        (3usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(-2.2f64..2.2, n * (n - 1) / 2).prop_map(move |logs| {
                let upper: Vec<f64> = logs.iter().map(|l| math::exp(*l)).collect();
                Pcm::from_upper_triangle(n, &upper).unwrap()
            })
        })
    }

    fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn validated_matrices_satisfy_invariants(m in arb_pcm()) {
            let n = m.order();
            for i in 0..n {
                prop_assert!((m.get(i, i) - 1.0).abs() <= 1e-12);
                for j in 0..n {
                    prop_assert!(m.get(i, j) > 0.0);
                    prop_assert!((m.get(i, j) * m.get(j, i) - 1.0).abs() <= 1e-12);
                }
            }
        }

        #[test]
        fn permutation_round_trip_preserves_entries(
            (m, p) in arb_pcm().prop_flat_map(|m| { let n = m.order(); (Just(m), arb_permutation(n)) })
        ) {
            let permuted = m.permute(&p).unwrap();
            let mut a = m.entries().to_vec();
            let mut b = permuted.entries().to_vec();
            a.sort_by(f64::total_cmp);
            b.sort_by(f64::total_cmp);
            prop_assert_eq!(a, b);
            prop_assert_eq!(permuted.permute(&p.inverse()).unwrap(), m);
        }

        #[test]
        fn transpose_commutes_with_intensify(m in arb_pcm(), b in 0.1f64..5.0) {
            assert_close(&m.intensify(b).transpose(), &m.transpose().intensify(b), 1e-12);
        }

        #[test]
        fn intensify_composes(m in arb_pcm(), b1 in 0.2f64..3.0, b2 in 0.2f64..3.0) {
            assert_close(&m.intensify(b1 * b2), &m.intensify(b1).intensify(b2), 1e-12);
        }

        #[test]
        fn intensify_keeps_consistency(
            w in proptest::collection::vec(0.2f64..5.0, 3..=7),
            b in 0.05f64..5.0,
        ) {
            let m = Pcm::consistent_from_weights(&w).unwrap();
            prop_assert!(m.intensify(b).is_consistent(1e-9));
        }

        #[test]
        fn unit_delta_is_identity(m in arb_pcm(), p in 0usize..7, q in 0usize..7) {
            let n = m.order();
            let (p, q) = (p % n, q % n);
            prop_assume!(p != q && (m.get(p, q) - 1.0).abs() > RECIPROCITY_TOLERANCE);
            let perturbed = m.perturb_entry(p, q, 1.0).unwrap();
            prop_assert_eq!(perturbed, m);
        }
    }
}
