//! Inconsistency indices for pairwise comparison matrices, with an
//! empirical harness that tests each index against six axioms.
//!
//! The crate is `no_std` and needs only `alloc`. Floating-point functions go
//! through `libm`, so values and harness reports are identical across
//! platforms.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod generators;
pub mod harness;
pub mod indices;
pub mod math;
pub mod matrix;
pub mod property;
pub mod reference_matrices;

pub use error::{IndexError, PcmError};
pub use generators::{
    random_consistent, random_pcm, random_permutation, random_weights, RngSeed, Sampler,
};
pub use harness::{
    check, check_p1, check_p2, check_p3, check_p4, check_p5, check_p6, curve_intensification,
    curve_perturbation, run_suite, AxiomReport, ConfigError, CurveError, CurveParameter,
    CurvePoint, CurveSeries, IndexVerdicts, Probe, PropertyVerdict, SuiteConfig, VerdictStatus,
    Witness,
};
pub use indices::{
    ambiguity_sets, consistent_approximation, index_ai, index_ai_star, index_cci, index_ci_h,
    index_i_not6, index_i_star, index_k, index_re, index_re_star, lookup, registry,
    AmbiguityMatrix, GMatrix, IndexDescriptor, IndexId, Orientation, ReferenceStatus,
};
pub use matrix::{Pcm, Permutation};
pub use property::{Property, UnknownName};
