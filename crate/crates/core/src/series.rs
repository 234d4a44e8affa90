//! Truncation policy and the shared summation engine behind every infinite
//! series in the crate.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Complex64;

/// Ratio clamp used by the geometric tail bound.
const MAX_TAIL_RATIO: f64 = 0.99;

/// Longest trailing window of term magnitudes kept for the tail bound.
const MAX_WINDOW: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TruncationPolicy {
    pub max_terms: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Number of successive small terms required before stopping.
    pub consecutive_small: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            max_terms: 500,
            rel_tol: 1e-13,
            abs_tol: 1e-300,
            consecutive_small: 3,
        }
    }
}

impl TruncationPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::Parameter("max_terms must be at least 1".into()));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::Parameter("rel_tol must be positive and finite".into()));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Parameter("abs_tol must be positive and finite".into()));
        }
        if self.consecutive_small < 1 {
            return Err(Error::Parameter("consecutive_small must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        Self { max_terms, ..self }
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    /// A policy that never stops early: exactly `terms` terms are summed.
    pub fn fixed_terms(terms: usize) -> Self {
        Self {
            max_terms: terms,
            rel_tol: f64::MIN_POSITIVE,
            abs_tol: f64::MIN_POSITIVE,
            consecutive_small: usize::MAX,
        }
    }

    fn threshold(&self, partial_sum: f64) -> f64 {
        (self.rel_tol * partial_sum).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
}

impl SeriesEvaluation {
    /// An exactly summed finite series.
    pub fn exact(value: Complex64, terms_used: usize) -> Self {
        Self {
            value,
            terms_used,
            tail_estimate: 0.0,
            converged: true,
        }
    }

    /// Multiplies value and tail by `factor`.
    pub fn scaled(self, factor: Complex64) -> Self {
        Self {
            value: self.value * factor,
            tail_estimate: self.tail_estimate * factor.norm(),
            ..self
        }
    }

    pub(crate) fn ensure_finite(self, context: &'static str) -> Result<Self> {
        if self.value.re.is_finite() && self.value.im.is_finite() && !self.tail_estimate.is_nan() {
            Ok(self)
        } else {
            Err(Error::NonFinite(context))
        }
    }
}

/// How the remainder after the last summed term is estimated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    /// Terms decay like `r^n`; the tail is bounded by `|t| / (1 - r)`.
    Geometric,
    /// Terms decay like `n^{-(s+1)}`; the tail is about `n |t| / s`.
    Algebraic { excess: f64 },
}

/// Outcome of pushing one term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Continue,
    Done,
}

/// Compensated (Neumaier) summation with the small-term stop rule.
///
/// A term counts as small when `|t| ≤ max(rel_tol·|S|, abs_tol)`. The series
/// stops once `consecutive_small` successive terms are small and the tail
/// estimate is itself below that threshold.
#[derive(Debug, Clone)]
pub struct SeriesAccumulator {
    policy: TruncationPolicy,
    model: TailModel,
    sum: Complex64,
    compensation: Complex64,
    terms: usize,
    small_run: usize,
    window: VecDeque<f64>,
    last_nonzero: f64,
    prev_nonzero: f64,
    converged: bool,
    inner_converged: bool,
}

impl SeriesAccumulator {
    pub fn new(policy: TruncationPolicy, model: TailModel) -> Self {
        Self {
            policy,
            model,
            sum: Complex64::new(0.0, 0.0),
            compensation: Complex64::new(0.0, 0.0),
            terms: 0,
            small_run: 0,
            window: VecDeque::with_capacity(policy.consecutive_small.min(MAX_WINDOW)),
            last_nonzero: 0.0,
            prev_nonzero: 0.0,
            converged: false,
            inner_converged: true,
        }
    }

    pub fn geometric(policy: TruncationPolicy) -> Self {
        Self::new(policy, TailModel::Geometric)
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    /// Whether another term may be pushed.
    pub fn has_capacity(&self) -> bool {
        !self.converged && self.terms < self.policy.max_terms
    }

    pub fn partial_sum(&self) -> Complex64 {
        self.sum + self.compensation
    }

    /// Marks that a nested series feeding this one did not converge.
    pub fn note_inner(&mut self, inner: &SeriesEvaluation) {
        self.inner_converged &= inner.converged;
    }

    fn add(&mut self, term: Complex64) {
        let t = self.sum + term;
        let c = |s: f64, t_new: f64, x: f64| {
            if s.abs() >= x.abs() {
                (s - t_new) + x
            } else {
                (x - t_new) + s
            }
        };
        self.compensation += Complex64::new(c(self.sum.re, t.re, term.re), c(self.sum.im, t.im, term.im));
        self.sum = t;
    }

    fn ratio(&self) -> f64 {
        if self.prev_nonzero > 0.0 {
            (self.last_nonzero / self.prev_nonzero).clamp(0.0, MAX_TAIL_RATIO)
        } else {
            MAX_TAIL_RATIO
        }
    }

    fn tail_from(&self, magnitude: f64) -> f64 {
        match self.model {
            TailModel::Geometric => magnitude / (1.0 - self.ratio()),
            TailModel::Algebraic { excess } => magnitude * self.terms as f64 / excess,
        }
    }

    pub fn push(&mut self, term: Complex64) -> Step {
        if !self.has_capacity() {
            return Step::Done;
        }
        self.add(term);
        self.terms += 1;
        let magnitude = term.norm();
        if self.window.len() == self.policy.consecutive_small.clamp(1, MAX_WINDOW) {
            self.window.pop_front();
        }
        self.window.push_back(magnitude);
        if magnitude > 0.0 {
            self.prev_nonzero = self.last_nonzero;
            self.last_nonzero = magnitude;
        }
        let threshold = self.policy.threshold(self.partial_sum().norm());
        if magnitude <= threshold {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        if self.small_run >= self.policy.consecutive_small && self.tail_from(self.window_max()) <= threshold {
            self.converged = true;
            return Step::Done;
        }
        if self.terms >= self.policy.max_terms {
            Step::Done
        } else {
            Step::Continue
        }
    }

    fn window_max(&self) -> f64 {
        self.window.iter().copied().fold(0.0, f64::max)
    }

    pub fn finish(self) -> SeriesEvaluation {
        let tail_estimate = self.tail_from(self.window_max());
        SeriesEvaluation {
            value: self.partial_sum(),
            terms_used: self.terms,
            tail_estimate,
            converged: self.converged && self.inner_converged,
        }
    }
}

/// Sums `term(0), term(1), ...` under `policy` until the stop rule fires.
pub fn sum_series<F>(policy: TruncationPolicy, model: TailModel, mut term: F) -> Result<SeriesEvaluation>
where
    F: FnMut(usize, &mut SeriesAccumulator) -> Result<Complex64>,
{
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(policy, model);
    let mut n = 0;
    while acc.has_capacity() {
        let t = term(n, &mut acc)?;
        if acc.push(t) == Step::Done {
            break;
        }
        n += 1;
    }
    Ok(acc.finish())
}
