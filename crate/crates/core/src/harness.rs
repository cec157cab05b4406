//! Empirical checks of P1..P6, the suite runner, and curve samplers.
//!
//! A check never proves a property. `NoViolationFound` only says that the
//! seeded probes and `trials_per_check` random cases per order all passed.
//! Every case is described by a [`Probe`]; the same probe code produces the
//! observations during the search and when a [`Witness`] is re-checked.
//!
//! Monotonicity comparisons run on oriented values (see
//! [`IndexDescriptor::oriented`]), so "inconsistency must not drop" reads
//! the same for every index.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::error::{IndexError, PcmError};
use crate::generators::{RngSeed, Sampler};
use crate::indices::{IndexDescriptor, IndexId};
use crate::math;
use crate::matrix::{is_intensification, Pcm, Permutation, MIN_ORDER, RECIPROCITY_TOLERANCE};
use crate::property::Property;
use crate::reference_matrices as refm;

pub const DEFAULT_SEED: u64 = 42;

/// Relative entry changes used by the continuity probe.
pub const CONTINUITY_STEPS: [f64; 4] = [1e-2, 1e-4, 1e-6, 1e-8];

/// Bound on the value change at the smallest continuity step, relative to
/// `max(1, |value|)`.
pub const CONTINUITY_BOUND: f64 = 1e-6;

/// Off-consistency samples for P1 only perturb entries with
/// `|ln a_pq| >= ln 2`, so that the perturbation is visible at `nu_tolerance`.
pub const MIN_PERTURBED_LOG_RATIO: f64 = core::f64::consts::LN_2;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials_per_check: usize,
    pub orders: Vec<usize>,
    pub b_grid: Vec<f64>,
    pub delta_grid: Vec<f64>,
    pub nu_tolerance: f64,
    pub equality_tolerance: f64,
    pub monotonicity_slack: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials_per_check: 1000,
            orders: vec![3, 4, 5, 6, 7],
            b_grid: linear_grid(1.0, 5.0, 41),
            delta_grid: default_delta_grid(),
            nu_tolerance: 1e-7,
            equality_tolerance: 1e-9,
            monotonicity_slack: 1e-12,
        }
    }
}

/// `steps` evenly spaced points from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![min],
        _ => (0..steps)
            .map(|k| min + (max - min) * k as f64 / (steps - 1) as f64)
            .collect(),
    }
}

/// `0.1, ..., 0.9, 1.1, ..., 3.0`; the band `(0.95, 1.05)` around 1 is left out.
pub fn default_delta_grid() -> Vec<f64> {
    (1..=9).chain(11..=30).map(|k| k as f64 / 10.0).collect()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("trials per check must be positive")]
    NoTrials,
    #[error("no orders given")]
    NoOrders,
    #[error("order {0} is below the minimum of 3")]
    OrderTooSmall(usize),
    #[error("orders must be strictly ascending")]
    UnsortedOrders,
    #[error("{0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("{0} grid must be strictly ascending and finite")]
    UnsortedGrid(&'static str),
    #[error("{grid} grid value {value} is outside its domain")]
    GridOutOfDomain { grid: &'static str, value: f64 },
    #[error("{0} must be positive")]
    NonPositiveTolerance(&'static str),
    #[error("no indices selected")]
    NoIndices,
}

fn check_grid(
    name: &'static str,
    grid: &[f64],
    valid: impl Fn(f64) -> bool,
) -> Result<(), ConfigError> {
    if grid.is_empty() {
        return Err(ConfigError::EmptyGrid(name));
    }
    if grid.iter().any(|v| !v.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ConfigError::UnsortedGrid(name));
    }
    match grid.iter().find(|&&v| !valid(v)) {
        Some(&value) => Err(ConfigError::GridOutOfDomain { grid: name, value }),
        None => Ok(()),
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials_per_check == 0 {
            return Err(ConfigError::NoTrials);
        }
        if self.orders.is_empty() {
            return Err(ConfigError::NoOrders);
        }
        if let Some(&n) = self.orders.iter().find(|&&n| n < MIN_ORDER) {
            return Err(ConfigError::OrderTooSmall(n));
        }
        if self.orders.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConfigError::UnsortedOrders);
        }
        check_grid("b", &self.b_grid, is_intensification)?;
        check_grid("delta", &self.delta_grid, |d| d > 0.0 && d != 1.0)?;
        for (name, tol) in [
            ("nu_tolerance", self.nu_tolerance),
            ("equality_tolerance", self.equality_tolerance),
            ("monotonicity_slack", self.monotonicity_slack),
        ] {
            if tol.is_nan() || tol <= 0.0 {
                return Err(ConfigError::NonPositiveTolerance(name));
            }
        }
        Ok(())
    }

    /// Seed of one (index, property, order) cell. Independent of which
    /// other cells run.
    pub fn cell_seed(&self, id: IndexId, property: Property, order: usize) -> RngSeed {
        RngSeed(self.seed)
            .derive(id.ordinal() as u64 + 1)
            .derive(property.ordinal() as u64 + 1)
            .derive(order as u64)
    }

    /// Allowed drop between two oriented values before it counts as a decrease.
    fn slack(&self, a: f64, b: f64) -> f64 {
        self.monotonicity_slack * 1f64.max(a.abs()).max(b.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum VerdictStatus {
    NoViolationFound,
    ViolationFound,
    /// Passed a check that sampling cannot settle (continuity).
    Heuristic,
    NotApplicable,
}

/// One evaluation recipe: what to compute on a matrix and when the
/// observations contradict the property.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Probe {
    /// Consistent matrix; the value must equal `nu`.
    Consistent,
    /// Inconsistent matrix; the value must differ from `nu`.
    Inconsistent,
    Permuted {
        permutation: Permutation,
    },
    /// Intensification exponents with `from < to`.
    Intensified {
        from: f64,
        to: f64,
    },
    /// Exponents applied to `a_pq`; `to` lies further from 1 than `from`.
    Perturbed {
        p: usize,
        q: usize,
        from: f64,
        to: f64,
    },
    /// `a_pq` scaled by `1 + eps` for each step, largest step first.
    Continuity {
        p: usize,
        q: usize,
        steps: Vec<f64>,
    },
    Transposed,
}

impl Probe {
    pub fn property(&self) -> Property {
        match self {
            Self::Consistent | Self::Inconsistent => Property::P1,
            Self::Permuted { .. } => Property::P2,
            Self::Intensified { .. } => Property::P3,
            Self::Perturbed { .. } => Property::P4,
            Self::Continuity { .. } => Property::P5,
            Self::Transposed => Property::P6,
        }
    }

    /// Index values this probe looks at, `None` where undefined.
    pub fn observe(&self, id: IndexId, m: &Pcm) -> Vec<Option<f64>> {
        let eval = |x: &Pcm| id.evaluate(x).ok();
        let eval_r = |x: Result<Pcm, PcmError>| x.ok().and_then(|x| eval(&x));
        match self {
            Self::Consistent | Self::Inconsistent => vec![eval(m)],
            Self::Permuted { permutation } => vec![eval(m), eval_r(m.permute(permutation))],
            Self::Intensified { from, to } => {
                vec![eval(&m.intensify(*from)), eval(&m.intensify(*to))]
            }
            Self::Perturbed { p, q, from, to } => {
                vec![
                    eval_r(m.perturb_entry(*p, *q, *from)),
                    eval_r(m.perturb_entry(*p, *q, *to)),
                ]
            }
            Self::Continuity { p, q, steps } => core::iter::once(eval(m))
                .chain(
                    steps
                        .iter()
                        .map(|eps| eval_r(m.scale_entry(*p, *q, 1.0 + eps))),
                )
                .collect(),
            Self::Transposed => vec![eval(m), eval(&m.transpose())],
        }
    }

    /// Whether `observed` (as produced by [`Probe::observe`]) contradicts
    /// the property. Undefined values always do.
    pub fn violates(
        &self,
        desc: &IndexDescriptor,
        cfg: &SuiteConfig,
        observed: &[Option<f64>],
    ) -> bool {
        let Some(values) = observed.iter().copied().collect::<Option<Vec<f64>>>() else {
            return true;
        };
        match self {
            Self::Consistent => (values[0] - desc.nu).abs() > cfg.nu_tolerance,
            Self::Inconsistent => (values[0] - desc.nu).abs() <= cfg.nu_tolerance,
            Self::Permuted { .. } | Self::Transposed => {
                !math::approx_eq_rel(values[0], values[1], cfg.equality_tolerance)
            }
            Self::Intensified { .. } | Self::Perturbed { .. } => {
                let (before, after) = (desc.oriented(values[0]), desc.oriented(values[1]));
                after < before - cfg.slack(before, after)
            }
            Self::Continuity { steps, .. } => {
                let base = values[0];
                let diffs: Vec<f64> = values[1..].iter().map(|v| (v - base).abs()).collect();
                let scale = 1f64.max(base.abs());
                // a finer step may exceed a coarser one only while staying
                // below the coarser step's relative size (kinks between steps)
                let grows = diffs.windows(2).zip(steps.iter()).any(|(w, eps)| {
                    w[1] > w[0] + cfg.monotonicity_slack * scale && w[1] > eps * scale
                });
                let last = diffs.last().copied().unwrap_or(0.0);
                grows || last >= CONTINUITY_BOUND * scale
            }
        }
    }
}

/// A concrete counterexample: matrix, probe, and what was observed.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub matrix: Pcm,
    pub probe: Probe,
    pub observed: Vec<Option<f64>>,
}

impl Witness {
    /// Re-evaluates the probe from scratch and confirms the violation.
    pub fn reproduces(&self, id: IndexId, cfg: &SuiteConfig) -> bool {
        let fresh = self.probe.observe(id, &self.matrix);
        let same = fresh.len() == self.observed.len()
            && fresh.iter().zip(&self.observed).all(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => math::approx_eq_rel(*a, *b, cfg.equality_tolerance),
                (None, None) => true,
                _ => false,
            });
        same && self.probe.violates(id.descriptor(), cfg, &fresh)
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PropertyVerdict {
    pub property: Property,
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    /// Cases evaluated, seeded probes included.
    pub trials: u64,
}

impl PropertyVerdict {
    pub fn is_violation(&self) -> bool {
        self.status == VerdictStatus::ViolationFound
    }
}

/// Bookkeeping for one (index, property) check.
struct Run<'a> {
    id: IndexId,
    desc: &'static IndexDescriptor,
    property: Property,
    cfg: &'a SuiteConfig,
    trials: u64,
}

type Found = Result<(), Witness>;

impl<'a> Run<'a> {
    fn new(id: IndexId, property: Property, cfg: &'a SuiteConfig) -> Self {
        Self {
            id,
            desc: id.descriptor(),
            property,
            cfg,
            trials: 0,
        }
    }

    fn sampler(&self, n: usize) -> Sampler {
        Sampler::new(self.cfg.cell_seed(self.id, self.property, n))
    }

    fn case(&mut self, m: &Pcm, probe: Probe) -> Found {
        self.trials += 1;
        let observed = probe.observe(self.id, m);
        if probe.violates(self.desc, self.cfg, &observed) {
            return Err(Witness {
                matrix: m.clone(),
                probe,
                observed,
            });
        }
        Ok(())
    }

    /// Walks `points` in order; every step must keep the oriented value
    /// from dropping. `make` turns the first failing pair into a probe.
    fn monotone_walk(
        &mut self,
        m: &Pcm,
        points: &[f64],
        at: impl Fn(&Pcm, f64) -> Option<f64>,
        make: impl Fn(f64, f64) -> Probe,
    ) -> Found {
        self.trials += 1;
        let mut prev: Option<(f64, Option<f64>)> = None;
        for &x in points {
            let value = at(m, x);
            if let Some((px, pv)) = prev {
                let observed = vec![pv, value];
                let probe = make(px, x);
                if probe.violates(self.desc, self.cfg, &observed) {
                    return Err(Witness {
                        matrix: m.clone(),
                        probe,
                        observed,
                    });
                }
            }
            prev = Some((x, value));
        }
        Ok(())
    }

    fn finish(self, result: Found, pass: VerdictStatus) -> PropertyVerdict {
        let (status, witness) = match result {
            Ok(()) => (pass, None),
            Err(w) => (VerdictStatus::ViolationFound, Some(w)),
        };
        PropertyVerdict {
            property: self.property,
            status,
            witness,
            trials: self.trials,
        }
    }
}

fn order_of(cfg: &SuiteConfig) -> impl Iterator<Item = usize> + '_ {
    cfg.orders.iter().copied()
}

/// Consistent base, then one entry with `|ln a_pq| >= ln 2` raised to a
/// delta drawn from the grid.
fn perturbed_consistent(s: &mut Sampler, n: usize, grid: &[f64]) -> Pcm {
    loop {
        let base = s.consistent(n).expect("validated order");
        for _ in 0..n * n {
            let (p, q) = s.off_diagonal(n);
            if math::ln(base.get(p, q)).abs() >= MIN_PERTURBED_LOG_RATIO {
                let delta = *s.pick(grid);
                return base
                    .perturb_entry(p, q, delta)
                    .expect("entry differs from 1");
            }
        }
    }
}

/// Unique value `nu` on consistent matrices, a different value elsewhere.
pub fn check_p1(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P1, cfg);
    let result = (|| {
        run.case(
            &Pcm::consistent_from_weights(&[1.0, 2.0, 4.0]).expect("valid"),
            Probe::Consistent,
        )?;
        for m in [
            refm::transpose_pair(),
            refm::ambiguity_counterexample(),
            refm::cosine_counterexample(),
            refm::ambiguity_worked_example(),
        ] {
            run.case(&m, Probe::Inconsistent)?;
        }
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            for _ in 0..cfg.trials_per_check {
                let consistent = s.consistent(n).expect("validated order");
                run.case(&consistent, Probe::Consistent)?;
                let perturbed = perturbed_consistent(&mut s, n, &cfg.delta_grid);
                run.case(&perturbed, Probe::Inconsistent)?;
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::NoViolationFound)
}

fn factorial(n: usize) -> usize {
    (1..=n)
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .unwrap_or(usize::MAX)
}

/// Equal values under relabelling. Orders up to 4 try every permutation on
/// every matrix; larger orders pair each matrix with one permutation from a
/// pool of `min(trials, n!)` distinct random permutations.
pub fn check_p2(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P2, cfg);
    let result = (|| {
        let pair = refm::transpose_pair();
        for permutation in Permutation::all(3) {
            run.case(&pair, Probe::Permuted { permutation })?;
        }
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            if n <= 4 {
                let all = Permutation::all(n);
                for _ in 0..cfg.trials_per_check {
                    let m = s.pcm(n).expect("validated order");
                    for permutation in &all {
                        run.case(
                            &m,
                            Probe::Permuted {
                                permutation: permutation.clone(),
                            },
                        )?;
                    }
                }
            } else {
                let wanted = cfg.trials_per_check.min(factorial(n));
                let mut seen = BTreeSet::new();
                let mut pool = Vec::with_capacity(wanted);
                while pool.len() < wanted {
                    let p = s.permutation(n);
                    if seen.insert(p.clone()) {
                        pool.push(p);
                    }
                }
                for t in 0..cfg.trials_per_check {
                    let m = s.pcm(n).expect("validated order");
                    run.case(
                        &m,
                        Probe::Permuted {
                            permutation: pool[t % pool.len()].clone(),
                        },
                    )?;
                }
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::NoViolationFound)
}

/// Oriented value non-decreasing along the `b` grid.
///
/// The two known counterexamples always run first: the ambiguity one at
/// `b = 2` versus `b = 3`, the cosine one along the configured grid. CCI
/// starts with its own.
pub fn check_p3(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P3, cfg);
    let at = |m: &Pcm, b: f64| id.evaluate(&m.intensify(b)).ok();
    let make = |from, to| Probe::Intensified { from, to };
    let result = (|| {
        let mut seeded = [
            (refm::ambiguity_counterexample(), vec![2.0, 3.0]),
            (refm::cosine_counterexample(), cfg.b_grid.clone()),
        ];
        if id == IndexId::Cci {
            seeded.reverse();
        }
        for (m, points) in &seeded {
            run.monotone_walk(m, points, at, make)?;
        }
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            for _ in 0..cfg.trials_per_check {
                let m = s.pcm(n).expect("validated order");
                run.monotone_walk(&m, &cfg.b_grid, at, make)?;
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::NoViolationFound)
}

/// Walks the delta grid away from 1 on both sides of a perturbed pair.
fn perturbation_walk(run: &mut Run<'_>, base: &Pcm, p: usize, q: usize) -> Found {
    let id = run.id;
    let at = move |m: &Pcm, d: f64| {
        m.perturb_entry(p, q, d)
            .ok()
            .and_then(|x| id.evaluate(&x).ok())
    };
    let make = move |from, to| Probe::Perturbed { p, q, from, to };
    let below: Vec<f64> = run
        .cfg
        .delta_grid
        .iter()
        .rev()
        .copied()
        .filter(|&d| d < 1.0)
        .collect();
    let above: Vec<f64> = run
        .cfg
        .delta_grid
        .iter()
        .copied()
        .filter(|&d| d > 1.0)
        .collect();
    run.monotone_walk(base, &below, at, make)?;
    run.monotone_walk(base, &above, at, make)
}

/// Pushing one entry of a consistent matrix away from its value never
/// lowers the oriented value.
pub fn check_p4(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P4, cfg);
    let result = (|| {
        let base = refm::consistent_421();
        for p in 0..3 {
            for q in (0..3).filter(|&q| q != p) {
                perturbation_walk(&mut run, &base, p, q)?;
            }
        }
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            for _ in 0..cfg.trials_per_check {
                let base = s.consistent(n).expect("validated order");
                let (p, q) = loop {
                    let (p, q) = s.off_diagonal(n);
                    if (base.get(p, q) - 1.0).abs() > RECIPROCITY_TOLERANCE {
                        break (p, q);
                    }
                };
                perturbation_walk(&mut run, &base, p, q)?;
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::NoViolationFound)
}

/// Heuristic continuity: scaling one entry by `1 + eps` must change the
/// value less and less as `eps` shrinks, ending below
/// `CONTINUITY_BOUND * max(1, |value|)`. A finer step may show a larger
/// change than the coarser one before it only while that change stays below
/// the coarser `eps * max(1, |value|)`; piecewise indices (max/min based)
/// have kinks between steps.
///
/// The all-ones matrix is always probed, which exposes indices that are
/// undefined at that limit.
pub fn check_p5(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P5, cfg);
    let steps = CONTINUITY_STEPS.to_vec();
    let result = (|| {
        let probe = |p, q| Probe::Continuity {
            p,
            q,
            steps: steps.clone(),
        };
        run.case(&Pcm::ones(3).expect("valid"), probe(0, 1))?;
        run.case(&refm::transpose_pair(), probe(0, 2))?;
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            for _ in 0..cfg.trials_per_check {
                let m = s.pcm(n).expect("validated order");
                let (p, q) = s.off_diagonal(n);
                run.case(&m, probe(p, q))?;
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::Heuristic)
}

/// Equal values on a matrix and its transpose.
pub fn check_p6(id: IndexId, cfg: &SuiteConfig) -> PropertyVerdict {
    let mut run = Run::new(id, Property::P6, cfg);
    let result = (|| {
        for m in [
            refm::transpose_pair(),
            refm::ambiguity_counterexample(),
            refm::cosine_counterexample(),
        ] {
            run.case(&m, Probe::Transposed)?;
        }
        for n in order_of(cfg) {
            let mut s = run.sampler(n);
            for _ in 0..cfg.trials_per_check {
                let m = s.pcm(n).expect("validated order");
                run.case(&m, Probe::Transposed)?;
            }
        }
        Ok(())
    })();
    run.finish(result, VerdictStatus::NoViolationFound)
}

pub fn check(id: IndexId, property: Property, cfg: &SuiteConfig) -> PropertyVerdict {
    match property {
        Property::P1 => check_p1(id, cfg),
        Property::P2 => check_p2(id, cfg),
        Property::P3 => check_p3(id, cfg),
        Property::P4 => check_p4(id, cfg),
        Property::P5 => check_p5(id, cfg),
        Property::P6 => check_p6(id, cfg),
    }
}

/// Verdicts for one index, in property order.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IndexVerdicts {
    pub index: IndexId,
    pub verdicts: Vec<PropertyVerdict>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AxiomReport {
    pub config: SuiteConfig,
    pub rows: Vec<IndexVerdicts>,
}

impl AxiomReport {
    pub fn verdict(&self, id: IndexId, property: Property) -> Option<&PropertyVerdict> {
        self.rows
            .iter()
            .find(|r| r.index == id)
            .and_then(|r| r.verdicts.iter().find(|v| v.property == property))
    }
}

/// Runs all six checks for every index. Each cell draws only from its own
/// seed, so adding or reordering indices leaves other cells unchanged.
pub fn run_suite(ids: &[IndexId], cfg: &SuiteConfig) -> Result<AxiomReport, ConfigError> {
    cfg.validate()?;
    if ids.is_empty() {
        return Err(ConfigError::NoIndices);
    }
    let rows = ids
        .iter()
        .map(|&id| IndexVerdicts {
            index: id,
            verdicts: Property::ALL.iter().map(|&p| check(id, p, cfg)).collect(),
        })
        .collect();
    Ok(AxiomReport {
        config: cfg.clone(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum CurveParameter {
    /// Exponent `b` of the entrywise power.
    Intensification,
    /// Exponent `delta` applied to entry `(p, q)`.
    Perturbation { p: usize, q: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurvePoint {
    pub param: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveSeries {
    pub index: IndexId,
    pub base: Pcm,
    pub parameter: CurveParameter,
    pub samples: Vec<CurvePoint>,
    /// Some intensification exponent lies below 1.
    pub outside_p3_domain: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("grid is empty")]
    EmptyGrid,
    #[error("grid must be strictly ascending, positive and finite")]
    InvalidGrid,
    #[error("base matrix is not consistent")]
    InconsistentBase,
    #[error("entry ({},{}) equals 1, so its power has no direction", p + 1, q + 1)]
    UnitEntry { p: usize, q: usize },
    #[error(transparent)]
    Matrix(#[from] PcmError),
    #[error("index undefined at parameter {param}: {source}")]
    Undefined { param: f64, source: IndexError },
}

fn validate_curve_grid(grid: &[f64]) -> Result<(), CurveError> {
    if grid.is_empty() {
        return Err(CurveError::EmptyGrid);
    }
    if grid.iter().any(|&x| x <= 0.0 || !x.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CurveError::InvalidGrid);
    }
    Ok(())
}

fn sample(
    id: IndexId,
    grid: &[f64],
    mut at: impl FnMut(f64) -> Result<Pcm, PcmError>,
) -> Result<Vec<CurvePoint>, CurveError> {
    grid.iter()
        .map(|&param| {
            let m = at(param)?;
            let value = id
                .evaluate(&m)
                .map_err(|source| CurveError::Undefined { param, source })?;
            Ok(CurvePoint { param, value })
        })
        .collect()
}

/// Index value of `m^b` over the grid.
pub fn curve_intensification(
    id: IndexId,
    m: &Pcm,
    grid: &[f64],
) -> Result<CurveSeries, CurveError> {
    validate_curve_grid(grid)?;
    let samples = sample(id, grid, |b| Ok(m.intensify(b)))?;
    Ok(CurveSeries {
        index: id,
        base: m.clone(),
        parameter: CurveParameter::Intensification,
        samples,
        outside_p3_domain: grid.iter().any(|&b| !is_intensification(b)),
    })
}

/// Index value of the consistent `m` with `a_pq` raised to each delta.
pub fn curve_perturbation(
    id: IndexId,
    m: &Pcm,
    p: usize,
    q: usize,
    grid: &[f64],
) -> Result<CurveSeries, CurveError> {
    validate_curve_grid(grid)?;
    if !m.is_consistent(1e-9) {
        return Err(CurveError::InconsistentBase);
    }
    match m.perturb_entry(p, q, 2.0) {
        Err(PcmError::UnitEntry { .. }) => return Err(CurveError::UnitEntry { p, q }),
        Err(e) => return Err(e.into()),
        Ok(_) => {}
    }
    let samples = sample(id, grid, |d| m.perturb_entry(p, q, d))?;
    Ok(CurveSeries {
        index: id,
        base: m.clone(),
        parameter: CurveParameter::Perturbation { p, q },
        samples,
        outside_p3_domain: false,
    })
}
