//! Small matrices with known behaviour, used as seeded probes.

use crate::matrix::Pcm;

fn build<const N: usize>(rows: [[f64; N]; N]) -> Pcm {
    Pcm::new(rows).expect("reference matrix is a valid PCM")
}

/// A 3x3 matrix whose transpose cannot be reached by relabelling.
pub fn transpose_pair() -> Pcm {
    build([[1.0, 0.5, 0.25], [2.0, 1.0, 1.0 / 3.0], [4.0, 3.0, 1.0]])
}

/// Its ambiguity index drops between the squared and cubed intensifications.
pub fn ambiguity_counterexample() -> Pcm {
    build([[1.0, 2.0, 8.0], [0.5, 1.0, 2.0], [0.125, 0.5, 1.0]])
}

/// Its cosine consistency index rises under intensification.
pub fn cosine_counterexample() -> Pcm {
    build([
        [1.0, 3.0, 7.0],
        [1.0 / 3.0, 1.0, 0.5],
        [1.0 / 7.0, 2.0, 1.0],
    ])
}

/// 4x4 matrix with `r_14 = {1/2, 2/3, 6}`.
pub fn ambiguity_worked_example() -> Pcm {
    build([
        [1.0, 2.0, 3.0, 0.5],
        [0.5, 1.0, 4.0, 1.0 / 3.0],
        [1.0 / 3.0, 0.25, 1.0, 2.0],
        [2.0, 3.0, 0.5, 1.0],
    ])
}

/// Consistent matrix of the weights `(4, 2, 1)`.
pub fn consistent_421() -> Pcm {
    Pcm::consistent_from_weights(&[4.0, 2.0, 1.0]).expect("valid weights")
}
