//! Window checks for the Cauchy property, Pringsheim limits, definite
//! divergence and boundedness.
//!
//! The infinite quantifiers are truncated at a caller-supplied horizon `H`.
//! Comparisons are strict and direct (`|x - L| < ε`, no slack), so every
//! counterexample re-evaluates to the same failing inequality. Counterexamples
//! are the lexicographically smallest violating index tuple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{max_cells, square_cells, ConvergenceReport, Counterexample, Status};
use crate::sequence::ScalarDoubleSequence;

/// Bound `M` and index thresholds `n1`, `n2` for the definite-divergence check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DivergenceParams {
    pub bound: f64,
    pub n1: u64,
    pub n2: u64,
    pub horizon: u64,
}

impl DivergenceParams {
    pub fn new(bound: f64, n1: u64, n2: u64, horizon: u64) -> Result<Self> {
        if !(bound > 0.0) {
            return Err(Error::InvalidParams(format!(
                "bound must be positive, got {bound}"
            )));
        }
        if horizon <= n1.max(n2) {
            return Err(Error::InvalidWindow {
                threshold: n1.max(n2),
                horizon,
            });
        }
        Ok(Self {
            bound,
            n1,
            n2,
            horizon,
        })
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "epsilon must be positive, got {epsilon}"
        )))
    }
}

fn check_window(threshold: u64, horizon: u64) -> Result<()> {
    if threshold == 0 {
        return Err(Error::InvalidParams("threshold must be at least 1".into()));
    }
    if horizon <= threshold {
        return Err(Error::InvalidWindow { threshold, horizon });
    }
    Ok(())
}

/// First `(k, l)` in row-major order over `rows × cols` where `bad` holds.
fn first_where(
    rows: (u64, u64),
    cols: (u64, u64),
    mut bad: impl FnMut(u64, u64) -> bool,
) -> Option<(u64, u64)> {
    for k in rows.0..=rows.1 {
        for l in cols.0..=cols.1 {
            if bad(k, l) {
                return Some((k, l));
            }
        }
    }
    None
}

/// `|x_{k,l} - x_{s,t}| < ε` for all `N < k, l, s, t <= H`.
pub fn check_cauchy(
    seq: &ScalarDoubleSequence,
    epsilon: f64,
    threshold: u64,
    horizon: u64,
) -> Result<ConvergenceReport> {
    check_epsilon(epsilon)?;
    check_window(threshold, horizon)?;
    let mut report = ConvergenceReport::new(Status::Verified, epsilon, threshold, horizon);
    let lo = threshold + 1;
    if square_cells(lo, horizon) > max_cells() {
        report.status = Status::Undetermined;
        return Ok(report);
    }

    let (mut max, mut min, mut any_nan) = (f64::NEG_INFINITY, f64::INFINITY, false);
    for k in lo..=horizon {
        for l in lo..=horizon {
            let x = seq.at(k, l);
            if x.is_nan() {
                any_nan = true;
            }
            max = max.max(x);
            min = min.min(x);
        }
    }

    // Some partner violates iff the window extremes are ε away (or a NaN exists).
    let has_partner = |x: f64| any_nan || !(max - x < epsilon) || !(x - min < epsilon);
    let Some((k, l)) = first_where((lo, horizon), (lo, horizon), |k, l| {
        has_partner(seq.at(k, l))
    }) else {
        return Ok(report);
    };
    let x = seq.at(k, l);
    let (s, t) = first_where((lo, horizon), (lo, horizon), |s, t| {
        !((x - seq.at(s, t)).abs() < epsilon)
    })
    .expect("extremes guarantee a violating partner");
    report.status = Status::Violated;
    report.counterexample = Some(Counterexample::pair(k, l, s, t, x, seq.at(s, t)));
    Ok(report)
}

/// `|x_{k,l} - L| < ε` for all `N < k, l <= H`.
pub fn check_pringsheim(
    seq: &ScalarDoubleSequence,
    limit: f64,
    epsilon: f64,
    threshold: u64,
    horizon: u64,
) -> Result<ConvergenceReport> {
    check_epsilon(epsilon)?;
    check_window(threshold, horizon)?;
    let mut report = ConvergenceReport::new(Status::Verified, epsilon, threshold, horizon);
    report.limit = Some(limit);
    let lo = threshold + 1;
    if square_cells(lo, horizon) > max_cells() {
        report.status = Status::Undetermined;
        return Ok(report);
    }
    if let Some((k, l)) = first_where((lo, horizon), (lo, horizon), |k, l| {
        !((seq.at(k, l) - limit).abs() < epsilon)
    }) {
        report.status = Status::Violated;
        report.counterexample = Some(Counterexample::point(k, l, seq.at(k, l)));
    }
    Ok(report)
}

/// `|x_{m,n}| > M` for all `n1 < m <= H`, `n2 < n <= H`.
pub fn check_definitely_divergent(
    seq: &ScalarDoubleSequence,
    params: DivergenceParams,
) -> Result<ConvergenceReport> {
    let params = DivergenceParams::new(params.bound, params.n1, params.n2, params.horizon)?;
    let DivergenceParams {
        bound,
        n1,
        n2,
        horizon,
    } = params;
    let mut report = ConvergenceReport::new(Status::Verified, bound, n1, horizon);
    report.column_threshold = Some(n2);
    let cells = (horizon - n1).saturating_mul(horizon - n2);
    if cells > max_cells() {
        report.status = Status::Undetermined;
        return Ok(report);
    }
    if let Some((m, n)) = first_where((n1 + 1, horizon), (n2 + 1, horizon), |m, n| {
        !(seq.at(m, n).abs() > bound)
    }) {
        report.status = Status::Violated;
        report.counterexample = Some(Counterexample::point(m, n, seq.at(m, n)));
    }
    Ok(report)
}

/// `|x_{m,n}| < M` for all `1 <= m, n <= H`.
pub fn check_bounded(
    seq: &ScalarDoubleSequence,
    bound: f64,
    horizon: u64,
) -> Result<ConvergenceReport> {
    if !(bound > 0.0) {
        return Err(Error::InvalidParams(format!(
            "bound must be positive, got {bound}"
        )));
    }
    if horizon == 0 {
        return Err(Error::InvalidWindow {
            threshold: 0,
            horizon,
        });
    }
    let mut report = ConvergenceReport::new(Status::Verified, bound, 1, horizon);
    if square_cells(1, horizon) > max_cells() {
        report.status = Status::Undetermined;
        return Ok(report);
    }
    if let Some((m, n)) = first_where((1, horizon), (1, horizon), |m, n| {
        !(seq.at(m, n).abs() < bound)
    }) {
        report.status = Status::Violated;
        report.counterexample = Some(Counterexample::point(m, n, seq.at(m, n)));
    }
    Ok(report)
}

/// Geometric probe points `2, 4, 8, …` that leave a tail box of side at least `H/2`.
fn probe_points(horizon: u64) -> Vec<u64> {
    std::iter::successors(Some(2u64), |n| n.checked_mul(2))
        .take_while(|&n| n <= horizon / 2)
        .collect()
}

struct TailStats {
    max: f64,
    min: f64,
    lowest_abs: f64,
    any_nan: bool,
}

impl Default for TailStats {
    fn default() -> Self {
        Self {
            max: f64::NEG_INFINITY,
            min: f64::INFINITY,
            lowest_abs: f64::INFINITY,
            any_nan: false,
        }
    }
}

impl TailStats {
    fn visit(&mut self, x: f64) {
        self.any_nan |= x.is_nan();
        self.max = self.max.max(x);
        self.min = self.min.min(x);
        self.lowest_abs = self.lowest_abs.min(x.abs());
    }
}

/// Heuristic limit estimate from window evidence.
///
/// Tail boxes `{(k, l) : n < k, l <= H}` are probed at `n = 2, 4, 8, …` while
/// the box keeps side at least `H/2`. The first probe whose tail oscillation
/// `max - min` is below `tolerance` yields `Verified` with the corner value
/// `x_{H,H}` as the limit. Otherwise, if some tail box has `|x| > 1/tolerance`
/// throughout, the status is `DefinitelyDivergent`; else `Undetermined`.
pub fn estimate_pringsheim_limit(
    seq: &ScalarDoubleSequence,
    tolerance: f64,
    max_horizon: u64,
) -> ConvergenceReport {
    let horizon = max_horizon;
    let mut report = ConvergenceReport::new(Status::Undetermined, tolerance, 1, horizon);
    let probes = probe_points(horizon);
    if !(tolerance > 0.0) || probes.is_empty() || square_cells(1, horizon) > max_cells() {
        return report;
    }

    // Sweep L-shaped shells inward-out: tail(n) = tail(n+1) ∪ row n+1 ∪ column n+1.
    let mut oscillation = vec![f64::NAN; probes.len()];
    let mut min_abs = vec![f64::NAN; probes.len()];
    let mut tail = TailStats::default();
    let mut next_probe = probes.len();
    for n in (probes[0]..horizon).rev() {
        let edge = n + 1;
        for l in edge..=horizon {
            tail.visit(seq.at(edge, l));
        }
        for k in edge + 1..=horizon {
            tail.visit(seq.at(k, edge));
        }
        if next_probe > 0 && probes[next_probe - 1] == n {
            next_probe -= 1;
            if !tail.any_nan {
                oscillation[next_probe] = tail.max - tail.min;
                min_abs[next_probe] = tail.lowest_abs;
            }
        }
    }

    if let Some(i) = oscillation.iter().position(|&o| o < tolerance) {
        report.status = Status::Verified;
        report.threshold = probes[i];
        report.limit = Some(seq.at(horizon, horizon));
        return report;
    }
    let bound = 1.0 / tolerance;
    if let Some(i) = min_abs.iter().position(|&m| m > bound) {
        report.status = Status::DefinitelyDivergent;
        report.threshold = probes[i];
        report.column_threshold = Some(probes[i]);
        report.epsilon = bound;
    }
    report
}
