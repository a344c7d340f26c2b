//! Slow oscillation of double sequences on finite windows.
//!
//! A sequence is slowly oscillating at level `ε` with witness `(α, δ, N)` on
//! horizon `H` when `gap(k, l; s, t) < ε` for every
//!
//! ```text
//! N <= k, l <= H,   k <= s <= ⌊(1+α)k⌋,   l <= t <= ⌊(1+δ)l⌋
//! ```
//!
//! with `s, t` additionally capped at `⌈(1+α)H⌉`, `⌈(1+δ)H⌉`. Indices `s, t`
//! deliberately run past `H`. For scalar sequences the gap is
//! `|x_{k,l} - x_{s,t}|`; for grids it is the planar distance between
//! `(u_k, v_l)` and `(u_s, v_t)`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::domain::planar_distance;
use crate::error::{Error, Result};
use crate::report::{max_cells, square_cells, Status};
use crate::sequence::{DoubleSequence, FactorableGridSequence, ScalarDoubleSequence};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationParams {
    pub epsilon: f64,
    pub alpha: f64,
    pub delta: f64,
    pub threshold: u64,
    pub horizon: u64,
}

impl OscillationParams {
    pub fn new(epsilon: f64, alpha: f64, delta: f64, threshold: u64, horizon: u64) -> Result<Self> {
        let p = Self {
            epsilon,
            alpha,
            delta,
            threshold,
            horizon,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParams(what.to_string()));
        if !(self.epsilon > 0.0) {
            return bad("epsilon must be positive");
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite())
            || !(self.delta > 0.0 && self.delta.is_finite())
        {
            return bad("alpha and delta must be positive and finite");
        }
        if self.threshold == 0 {
            return bad("threshold must be at least 1");
        }
        if self.horizon < self.threshold {
            return Err(Error::InvalidWindow {
                threshold: self.threshold,
                horizon: self.horizon,
            });
        }
        Ok(())
    }
}

/// A violating `(k, l), (s, t)` pair.
///
/// `values` holds `[x_{k,l}, x_{s,t}]` for scalar sequences and
/// `[u_k, v_l, u_s, v_t]` for grids.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillationCounterexample {
    pub k: u64,
    pub l: u64,
    pub s: u64,
    pub t: u64,
    pub gap: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillationCertificate {
    pub epsilon: f64,
    pub alpha: f64,
    pub delta: f64,
    pub threshold: u64,
    pub horizon: u64,
    pub status: Status,
    pub counterexample: Option<OscillationCounterexample>,
    /// Quadruples covered: the whole region when verified, the lexicographic
    /// prefix up to and including the counterexample when violated.
    pub pairs_checked: u64,
}

impl OscillationCertificate {
    pub fn params(&self) -> OscillationParams {
        OscillationParams {
            epsilon: self.epsilon,
            alpha: self.alpha,
            delta: self.delta,
            threshold: self.threshold,
            horizon: self.horizon,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Index bounds of the checked region.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Region {
    pub n: u64,
    pub h: u64,
    alpha: f64,
    delta: f64,
    s_cap: u64,
    t_cap: u64,
}

impl Region {
    pub(crate) fn new(p: &OscillationParams) -> Self {
        let h = p.horizon as f64;
        Self {
            n: p.threshold,
            h: p.horizon,
            alpha: p.alpha,
            delta: p.delta,
            s_cap: ((1.0 + p.alpha) * h).ceil() as u64,
            t_cap: ((1.0 + p.delta) * h).ceil() as u64,
        }
    }

    #[inline]
    pub(crate) fn s_end(&self, k: u64) -> u64 {
        (k + (self.alpha * k as f64).floor() as u64).min(self.s_cap)
    }

    #[inline]
    pub(crate) fn t_end(&self, l: u64) -> u64 {
        (l + (self.delta * l as f64).floor() as u64).min(self.t_cap)
    }

    fn column_total(&self, upto: u64) -> u64 {
        (self.n..upto).map(|l| self.t_end(l) - l + 1).sum()
    }

    fn total_pairs(&self) -> u64 {
        let rows: u64 = (self.n..=self.h).map(|k| self.s_end(k) - k + 1).sum();
        rows.saturating_mul(self.column_total(self.h + 1))
    }

    /// 1-based lexicographic rank of `(k, l, s, t)` within the region.
    fn rank(&self, k: u64, l: u64, s: u64, t: u64) -> u64 {
        let cols = self.column_total(self.h + 1);
        let rows_before: u64 = (self.n..k).map(|r| self.s_end(r) - r + 1).sum();
        let row_len = self.s_end(k) - k + 1;
        let col_len = self.t_end(l) - l + 1;
        rows_before
            .saturating_mul(cols)
            .saturating_add(row_len.saturating_mul(self.column_total(l)))
            .saturating_add((s - k) * col_len)
            .saturating_add(t - l + 1)
    }
}

/// Verifies or refutes slow oscillation on the window described by `params`.
///
/// The counterexample, if any, is the lexicographically smallest violating
/// `(k, l, s, t)`. Windows with more than `DOUBLESEQ_MAX_CELLS` base cells
/// `(k, l)` come back `Undetermined`.
pub fn check_slowly_oscillating(
    seq: &DoubleSequence,
    params: OscillationParams,
) -> Result<OscillationCertificate> {
    params.validate()?;
    let region = Region::new(&params);
    let mut cert = OscillationCertificate {
        epsilon: params.epsilon,
        alpha: params.alpha,
        delta: params.delta,
        threshold: params.threshold,
        horizon: params.horizon,
        status: Status::Verified,
        counterexample: None,
        pairs_checked: 0,
    };
    if square_cells(region.n, region.h) > max_cells() {
        cert.status = Status::Undetermined;
        return Ok(cert);
    }
    let found = match seq {
        DoubleSequence::Scalar(s) => scalar_first_violation(s, params.epsilon, &region)
            .map(|(k, l)| scalar_counterexample(s, params.epsilon, &region, k, l)),
        DoubleSequence::Grid(g) => {
            let (us, vs) = g.window_values(
                (region.n, region.s_end(region.h)),
                (region.n, region.t_end(region.h)),
                g.domain(),
            )?;
            grid_first_violation(&us, &vs, params.epsilon, &region)
                .map(|(k, l)| grid_counterexample(&us, &vs, params.epsilon, &region, k, l))
        }
    };
    match found {
        Some(c) => {
            cert.status = Status::Violated;
            cert.pairs_checked = region.rank(c.k, c.l, c.s, c.t);
            cert.counterexample = Some(c);
        }
        None => cert.pairs_checked = region.total_pairs(),
    }
    Ok(cert)
}

/// Deque entries held per sweep chunk before the column range is split.
const CHUNK_BUDGET: u64 = 1 << 22;

/// Monotone-window extremum tracker: pushes arrive with increasing positions
/// and the window's left edge only moves right.
struct MonoDeque {
    max: VecDeque<(u64, f64)>,
    min: VecDeque<(u64, f64)>,
}

impl MonoDeque {
    fn new() -> Self {
        Self {
            max: VecDeque::new(),
            min: VecDeque::new(),
        }
    }

    fn clear(&mut self) {
        self.max.clear();
        self.min.clear();
    }

    /// NaN is pushed as +∞ to the max side and -∞ to the min side, so any
    /// window holding one reports an unbounded spread.
    #[inline]
    fn push(&mut self, pos: u64, hi: f64, lo: f64) {
        let (hi, lo) = if hi.is_nan() || lo.is_nan() {
            (f64::INFINITY, f64::NEG_INFINITY)
        } else {
            (hi, lo)
        };
        while self.max.back().is_some_and(|&(_, v)| v <= hi) {
            self.max.pop_back();
        }
        self.max.push_back((pos, hi));
        while self.min.back().is_some_and(|&(_, v)| v >= lo) {
            self.min.pop_back();
        }
        self.min.push_back((pos, lo));
    }

    #[inline]
    fn expire_before(&mut self, pos: u64) {
        while self.max.front().is_some_and(|&(p, _)| p < pos) {
            self.max.pop_front();
        }
        while self.min.front().is_some_and(|&(p, _)| p < pos) {
            self.min.pop_front();
        }
    }

    #[inline]
    fn extremes(&self) -> (f64, f64) {
        (
            self.max.front().expect("nonempty window").1,
            self.min.front().expect("nonempty window").1,
        )
    }
}

#[inline]
fn spread_violates(x: f64, hi: f64, lo: f64, epsilon: f64) -> bool {
    !(hi - x < epsilon) || !(x - lo < epsilon)
}

/// Smallest `(k, l)` whose rectangle holds a violating `(s, t)`.
///
/// Rows are swept in order of `s`: each row is first reduced along `t` with a
/// sliding window, then fed to one column deque per `l`, which yields the
/// rectangle extremes when `s` reaches `⌊(1+α)k⌋`. Columns are processed in
/// chunks so the live deques stay within [`CHUNK_BUDGET`].
fn scalar_first_violation(
    seq: &ScalarDoubleSequence,
    epsilon: f64,
    region: &Region,
) -> Option<(u64, u64)> {
    let band = region.s_end(region.h) - region.h + 1;
    let chunk = (CHUNK_BUDGET / band).max(1);
    let mut best: Option<(u64, u64)> = None;
    let mut l0 = region.n;
    while l0 <= region.h {
        let l1 = (l0 + chunk - 1).min(region.h);
        let k_stop = best.map_or(region.h + 1, |(k, _)| k);
        if k_stop <= region.n {
            break;
        }
        if let Some(hit) = sweep_chunk(seq, epsilon, region, (l0, l1), k_stop) {
            best = Some(hit);
        }
        l0 = l1 + 1;
    }
    best
}

fn sweep_chunk(
    seq: &ScalarDoubleSequence,
    epsilon: f64,
    region: &Region,
    (l0, l1): (u64, u64),
    k_stop: u64,
) -> Option<(u64, u64)> {
    let t_hi = region.t_end(l1);
    let width = (l1 - l0 + 1) as usize;
    let mut columns: Vec<MonoDeque> = (0..width).map(|_| MonoDeque::new()).collect();
    let mut row = Vec::with_capacity((t_hi - l0 + 1) as usize);
    let mut row_window = MonoDeque::new();
    let mut next_k = region.n;
    let last_s = region.s_end(k_stop - 1);

    for s in region.n..=last_s {
        row.clear();
        row.extend((l0..=t_hi).map(|t| seq.at(s, t)));
        // Reduce along t: column l sees max/min of x_{s,t}, t in [l, t_end(l)].
        row_window.clear();
        let mut pushed = l0;
        for (c, column) in columns.iter_mut().enumerate() {
            let l = l0 + c as u64;
            let end = region.t_end(l);
            while pushed <= end {
                let v = row[(pushed - l0) as usize];
                row_window.push(pushed, v, v);
                pushed += 1;
            }
            row_window.expire_before(l);
            let (hi, lo) = row_window.extremes();
            column.push(s, hi, lo);
        }
        while next_k < k_stop && region.s_end(next_k) == s {
            let k = next_k;
            for (c, column) in columns.iter_mut().enumerate() {
                column.expire_before(k);
                let (hi, lo) = column.extremes();
                let l = l0 + c as u64;
                if spread_violates(seq.at(k, l), hi, lo, epsilon) {
                    return Some((k, l));
                }
            }
            next_k += 1;
        }
        if next_k >= k_stop {
            break;
        }
    }
    None
}

fn scalar_counterexample(
    seq: &ScalarDoubleSequence,
    epsilon: f64,
    region: &Region,
    k: u64,
    l: u64,
) -> OscillationCounterexample {
    let x = seq.at(k, l);
    for s in k..=region.s_end(k) {
        for t in l..=region.t_end(l) {
            let y = seq.at(s, t);
            let gap = (x - y).abs();
            if !(gap < epsilon) {
                return OscillationCounterexample {
                    k,
                    l,
                    s,
                    t,
                    gap,
                    values: vec![x, y],
                };
            }
        }
    }
    unreachable!("sweep flagged ({k}, {l}) but its rectangle is clean")
}

/// `max_{s in [i, end(i)]} |w_i - w_s|` for each `i` in `lo..=hi`; `w[0]` is index `lo`.
fn axis_spread(w: &[f64], lo: u64, hi: u64, end: impl Fn(u64) -> u64) -> Vec<f64> {
    let mut window = MonoDeque::new();
    let mut pushed = lo;
    (lo..=hi)
        .map(|i| {
            while pushed <= end(i) {
                let v = w[(pushed - lo) as usize];
                window.push(pushed, v, v);
                pushed += 1;
            }
            window.expire_before(i);
            let (top, bottom) = window.extremes();
            let x = w[(i - lo) as usize];
            if x.is_nan() {
                f64::NAN
            } else {
                (top - x).max(x - bottom)
            }
        })
        .collect()
}

/// Grid gaps separate: the largest planar gap over a rectangle combines the
/// largest row gap with the largest column gap.
fn grid_first_violation(
    us: &[f64],
    vs: &[f64],
    epsilon: f64,
    region: &Region,
) -> Option<(u64, u64)> {
    let du = axis_spread(us, region.n, region.h, |k| region.s_end(k));
    let dv = axis_spread(vs, region.n, region.h, |l| region.t_end(l));
    for (i, &a) in du.iter().enumerate() {
        for (j, &b) in dv.iter().enumerate() {
            if !(planar_distance(a, b) < epsilon) {
                return Some((region.n + i as u64, region.n + j as u64));
            }
        }
    }
    None
}

fn grid_counterexample(
    us: &[f64],
    vs: &[f64],
    epsilon: f64,
    region: &Region,
    k: u64,
    l: u64,
) -> OscillationCounterexample {
    let at = |w: &[f64], i: u64| w[(i - region.n) as usize];
    let (uk, vl) = (at(us, k), at(vs, l));
    for s in k..=region.s_end(k) {
        for t in l..=region.t_end(l) {
            let (us_, vt) = (at(us, s), at(vs, t));
            let gap = planar_distance(uk - us_, vl - vt);
            if !(gap < epsilon) {
                return OscillationCounterexample {
                    k,
                    l,
                    s,
                    t,
                    gap,
                    values: vec![uk, vl, us_, vt],
                };
            }
        }
    }
    unreachable!("grid spread flagged ({k}, {l}) but its rectangle is clean")
}

/// Largest gap over the region checked by [`check_slowly_oscillating`].
///
/// A plain quadruple loop kept separate from the checker so the two can be
/// compared; NaN gaps make the result NaN.
pub fn oscillation_modulus(
    seq: &DoubleSequence,
    alpha: f64,
    delta: f64,
    threshold: u64,
    horizon: u64,
) -> f64 {
    let s_cap = ((1.0 + alpha) * horizon as f64).ceil() as u64;
    let t_cap = ((1.0 + delta) * horizon as f64).ceil() as u64;
    let mut sup = 0.0f64;
    for k in threshold..=horizon {
        let s_hi = (k + (alpha * k as f64).floor() as u64).min(s_cap);
        for l in threshold..=horizon {
            let t_hi = (l + (delta * l as f64).floor() as u64).min(t_cap);
            for s in k..=s_hi {
                for t in l..=t_hi {
                    let gap = match seq {
                        DoubleSequence::Scalar(x) => (x.at(k, l) - x.at(s, t)).abs(),
                        DoubleSequence::Grid(g) => {
                            planar_distance(g.row(k) - g.row(s), g.col(l) - g.col(t))
                        }
                    };
                    if gap.is_nan() {
                        return f64::NAN;
                    }
                    if gap > sup {
                        sup = gap;
                    }
                }
            }
        }
    }
    sup
}

/// A slow-oscillation witness `(α, δ, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub alpha: f64,
    pub delta: f64,
    pub threshold: u64,
}

/// Outcome of [`find_witness`]. `witness: None` means no witness on the
/// search grid, which is not a proof that none exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessSearch {
    pub epsilon: f64,
    pub horizon: u64,
    pub witness: Option<Witness>,
    pub certificate: Option<OscillationCertificate>,
    pub triples_tried: u64,
}

impl WitnessSearch {
    pub fn status(&self) -> Status {
        if self.witness.is_some() {
            Status::Verified
        } else {
            Status::Undetermined
        }
    }
}

/// Exponents `j` with `2^-j · H >= 1`, up to 20. Smaller `α` would make
/// `⌊(1+α)k⌋ = k` for every `k <= H` and the check vacuous.
pub fn witness_exponents(horizon: u64) -> std::ops::RangeInclusive<u32> {
    let top = (63 - horizon.max(1).leading_zeros()).min(20);
    1..=top.max(1)
}

/// Thresholds `1, 2, 4, …` up to `H`.
pub fn witness_thresholds(horizon: u64) -> Vec<u64> {
    std::iter::successors(Some(1u64), |n| n.checked_mul(2))
        .take_while(|&n| n <= horizon)
        .collect()
}

/// Searches `α, δ ∈ {2^-1, 2^-2, …}` (largest first) and `N ∈ {1, 2, 4, …, H}`
/// (smallest first) in lexicographic order `(α desc, δ desc, N asc)` for the
/// first verified triple.
pub fn find_witness(seq: &DoubleSequence, epsilon: f64, horizon: u64) -> Result<WitnessSearch> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParams(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if horizon == 0 {
        return Err(Error::InvalidParams("horizon must be at least 1".into()));
    }
    let mut search = WitnessSearch {
        epsilon,
        horizon,
        witness: None,
        certificate: None,
        triples_tried: 0,
    };
    let thresholds = witness_thresholds(horizon);
    for ja in witness_exponents(horizon) {
        for jd in witness_exponents(horizon) {
            for &n in &thresholds {
                search.triples_tried += 1;
                let params = OscillationParams::new(
                    epsilon,
                    0.5f64.powi(ja as i32),
                    0.5f64.powi(jd as i32),
                    n,
                    horizon,
                )?;
                if let DoubleSequence::Scalar(s) = seq {
                    if probe_violation(s, &params) {
                        continue;
                    }
                }
                let cert = check_slowly_oscillating(seq, params)?;
                if cert.is_verified() {
                    search.witness = Some(Witness {
                        alpha: params.alpha,
                        delta: params.delta,
                        threshold: n,
                    });
                    search.certificate = Some(cert);
                    return Ok(search);
                }
            }
        }
    }
    Ok(search)
}

/// Cheap screen: samples a few `(s, t)` per geometric `(k, l)`. A `true`
/// answer is a real violation; `false` proves nothing.
fn probe_violation(seq: &ScalarDoubleSequence, params: &OscillationParams) -> bool {
    let region = Region::new(params);
    let eps = params.epsilon;
    let ladder = |lo: u64, hi: u64| -> Vec<u64> {
        let mut v: Vec<u64> = std::iter::successors(Some(lo), |&x| {
            Some((x + 1).max((x as f64 * 1.25).ceil() as u64))
        })
        .take_while(|&x| x <= hi)
        .collect();
        v.extend([hi.saturating_sub(1).max(lo), hi]);
        v.dedup();
        v
    };
    let ks = ladder(region.n, region.h);
    for &k in &ks {
        let se = region.s_end(k);
        for &l in &ks {
            let te = region.t_end(l);
            let x = seq.at(k, l);
            let candidates = [
                (se, l),
                (k, te),
                (se, te),
                ((k + 1).min(se), l),
                (k, (l + 1).min(te)),
                ((k + 1).min(se), (l + 1).min(te)),
                ((k + se) / 2, (l + te) / 2),
            ];
            if candidates
                .iter()
                .any(|&(s, t)| !((x - seq.at(s, t)).abs() < eps))
            {
                return true;
            }
        }
    }
    false
}

#[doc(hidden)]
pub fn grid_modulus_separable(grid: &FactorableGridSequence, params: &OscillationParams) -> f64 {
    let region = Region::new(params);
    let us: Vec<f64> = (region.n..=region.s_end(region.h))
        .map(|k| grid.row(k))
        .collect();
    let vs: Vec<f64> = (region.n..=region.t_end(region.h))
        .map(|l| grid.col(l))
        .collect();
    let du = axis_spread(&us, region.n, region.h, |k| region.s_end(k));
    let dv = axis_spread(&vs, region.n, region.h, |l| region.t_end(l));
    let a = du.iter().cloned().fold(0.0, f64::max);
    let b = dv.iter().cloned().fold(0.0, f64::max);
    planar_distance(a, b)
}
