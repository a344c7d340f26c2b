//! Two-variable functions on boxes, their action on grid sequences, and
//! sampling-based falsifiers for uniform continuity and uniform convergence.
//!
//! The falsifiers only ever prove the negative: a reported violation
//! re-evaluates to the failing inequality, while "no violation found" is
//! evidence, not proof.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::domain::{planar_distance, DomainBox};
use crate::error::{Error, Result};
use crate::report::Status;
use crate::sampling::DomainSampler;
use crate::sequence::{parse_call, FactorableGridSequence, ScalarDoubleSequence};

type Eval2 = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
type Eval1 = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A real function of two variables on a box, optionally in product form
/// `f(x, y) = g(x)·h(y)` and optionally with a known Lipschitz constant for
/// the planar metric.
#[derive(Clone)]
pub struct Function2 {
    label: String,
    domain: DomainBox,
    eval: Eval2,
    factors: Option<(Eval1, Eval1)>,
    lipschitz: Option<f64>,
}

impl Function2 {
    pub fn new(
        label: impl Into<String>,
        domain: DomainBox,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            domain,
            eval: Arc::new(eval),
            factors: None,
            lipschitz: None,
        }
    }

    /// `f(x, y) = g(x)·h(y)`, evaluated literally as that product.
    pub fn factorable(
        label: impl Into<String>,
        domain: DomainBox,
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let g: Eval1 = Arc::new(g);
        let h: Eval1 = Arc::new(h);
        let (gg, hh) = (g.clone(), h.clone());
        Self {
            label: label.into(),
            domain,
            eval: Arc::new(move |x, y| gg(x) * hh(y)),
            factors: Some((g, h)),
            lipschitz: None,
        }
    }

    pub fn with_lipschitz(mut self, constant: f64) -> Self {
        self.lipschitz = Some(constant);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> &DomainBox {
        &self.domain
    }

    pub fn lipschitz(&self) -> Option<f64> {
        self.lipschitz
    }

    pub fn is_factorable(&self) -> bool {
        self.factors.is_some()
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    /// `|f(x, y) - g(x)h(y)|`, or `None` without a factorization.
    pub fn factor_residual(&self, x: f64, y: f64) -> Option<f64> {
        self.factors
            .as_ref()
            .map(|(g, h)| (self.eval(x, y) - g(x) * h(y)).abs())
    }
}

impl fmt::Debug for Function2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Function2")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .field("factorable", &self.factors.is_some())
            .field("lipschitz", &self.lipschitz)
            .finish()
    }
}

/// `y_{k,l} = f(u_k, v_l)`.
///
/// Grid points with `k, l <= horizon` are checked against `f`'s domain up
/// front. Points past that horizon that leave the domain evaluate to NaN,
/// which every checker treats as a violation.
pub fn apply(
    f: &Function2,
    grid: &FactorableGridSequence,
    horizon: u64,
) -> Result<ScalarDoubleSequence> {
    grid.window_values((1, horizon), (1, horizon), f.domain())?;
    let (f, g) = (f.clone(), grid.clone());
    let label = format!("{}∘{}", f.label(), g.label());
    Ok(ScalarDoubleSequence::new(label, move |k, l| {
        let (x, y) = (g.row(k), g.col(l));
        if f.domain.contains(x, y) {
            f.eval(x, y)
        } else {
            f64::NAN
        }
    }))
}

/// Spreads `a` over the odd-odd positions and fills every other cell with `limit`:
///
/// ```text
/// a11 L a12 L a13 …
/// L   L L   L L   …
/// a21 L a22 L a23 …
/// ```
pub fn interleave_with_limit(seq: &ScalarDoubleSequence, limit: f64) -> ScalarDoubleSequence {
    let a = seq.clone();
    ScalarDoubleSequence::new(
        format!("interleave({}, {limit})", seq.label()),
        move |k, l| {
            if k % 2 == 1 && l % 2 == 1 {
                a.at(k.div_ceil(2), l.div_ceil(2))
            } else {
                limit
            }
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuityStatus {
    ViolationFound,
    NoViolationFound,
}

/// Points `(a, b)`, `(ā, b̄)` closer than `1/scale` whose images differ by at least `ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViolatingPair {
    pub first: (f64, f64),
    pub second: (f64, f64),
    pub distance: f64,
    pub gap: f64,
    pub scale: u64,
}

impl ViolatingPair {
    /// Re-evaluates both inequalities against `f`.
    pub fn holds_for(&self, f: &Function2, epsilon: f64) -> bool {
        let d = planar_distance(self.first.0 - self.second.0, self.first.1 - self.second.1);
        let gap = (f.eval(self.first.0, self.first.1) - f.eval(self.second.0, self.second.1)).abs();
        d == self.distance && gap == self.gap && d < 1.0 / self.scale as f64 && gap >= epsilon
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformContinuityVerdict {
    pub status: ContinuityStatus,
    pub epsilon: f64,
    /// With no violation: `1/n` for the first scale where none turned up.
    pub delta_hat: Option<f64>,
    pub violating_pair: Option<ViolatingPair>,
}

/// Finest scale searched: distances down to `2^-20`.
pub const MAX_SCALE_EXPONENT: u32 = 20;

fn scales() -> impl Iterator<Item = u64> {
    (0..=MAX_SCALE_EXPONENT).map(|e| 1u64 << e)
}

/// Searches `budget` candidate pairs at distance `< 1/scale` for one with
/// `|f(p) - f(q)| >= ε`.
pub fn search_violation_at_scale(
    f: &Function2,
    epsilon: f64,
    scale: u64,
    budget: usize,
    sampler: &mut DomainSampler,
) -> Option<ViolatingPair> {
    let radius = 1.0 / scale as f64;
    for i in 0..budget as u64 {
        let p = sampler.next_point();
        let dir = sampler.next_direction(i);
        let shrink = match i % 3 {
            0 => 0.99,
            1 => 0.5,
            _ => 0.1,
        };
        let r = radius * shrink;
        let mut q = (p.0 + r * dir.0, p.1 + r * dir.1);
        if !f.domain.contains(q.0, q.1) {
            q = (p.0 - r * dir.0, p.1 - r * dir.1);
            if !f.domain.contains(q.0, q.1) {
                continue;
            }
        }
        let distance = planar_distance(p.0 - q.0, p.1 - q.1);
        if !(distance < radius) {
            continue;
        }
        let gap = (f.eval(p.0, p.1) - f.eval(q.0, q.1)).abs();
        if gap >= epsilon {
            return Some(ViolatingPair {
                first: p,
                second: q,
                distance,
                gap,
                scale,
            });
        }
    }
    None
}

/// Violating pairs at scales `1, 2, 4, …`, stopping at the first scale where
/// `pair_budget` candidates turn up nothing.
pub fn harvest_violation_pairs(
    f: &Function2,
    epsilon: f64,
    pair_budget: usize,
    seed: u64,
) -> Vec<ViolatingPair> {
    let mut sampler = DomainSampler::new(f.domain, seed);
    scales()
        .map_while(|n| search_violation_at_scale(f, epsilon, n, pair_budget, &mut sampler))
        .collect()
}

/// Falsification-only uniform continuity test.
///
/// For `n = 1, 2, 4, …, 2^20` draws `pair_budget` candidate pairs at distance
/// below `1/n`. A violation is reported only when every scale yields a pair
/// with image gap `>= ε`, mirroring a sequence of pairs with distances tending
/// to zero; the reported pair is the one from the finest scale. Otherwise the
/// search stops at the first scale without a violation and `delta_hat` is
/// `1/n` for that scale. Finding nothing proves nothing.
pub fn test_uniform_continuity(
    f: &Function2,
    epsilon: f64,
    pair_budget: usize,
    seed: u64,
) -> Result<UniformContinuityVerdict> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParams(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    f.domain.ensure_bounded()?;
    let pairs = harvest_violation_pairs(f, epsilon, pair_budget, seed);
    Ok(if pairs.len() > MAX_SCALE_EXPONENT as usize {
        UniformContinuityVerdict {
            status: ContinuityStatus::ViolationFound,
            epsilon,
            delta_hat: None,
            violating_pair: pairs.last().copied(),
        }
    } else {
        UniformContinuityVerdict {
            status: ContinuityStatus::NoViolationFound,
            epsilon,
            delta_hat: Some(1.0 / (1u64 << pairs.len()) as f64),
            violating_pair: None,
        }
    })
}

type Member1 = Arc<dyn Fn(u64) -> Function2 + Send + Sync>;
type Member2 = Arc<dyn Fn(u64, u64) -> Function2 + Send + Sync>;

#[derive(Clone)]
enum Members {
    Single(Member1),
    Double(Member2),
}

/// A sequence `f_n` or a double sequence `f_{m,n}` of functions on a common domain.
#[derive(Clone)]
pub struct FunctionFamily {
    label: String,
    domain: DomainBox,
    members: Members,
}

impl FunctionFamily {
    pub fn single(
        label: impl Into<String>,
        domain: DomainBox,
        member: impl Fn(u64) -> Function2 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            domain,
            members: Members::Single(Arc::new(member)),
        }
    }

    pub fn double(
        label: impl Into<String>,
        domain: DomainBox,
        member: impl Fn(u64, u64) -> Function2 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            domain,
            members: Members::Double(Arc::new(member)),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> &DomainBox {
        &self.domain
    }

    pub fn is_double(&self) -> bool {
        matches!(self.members, Members::Double(_))
    }

    fn checked(&self, f: Function2, index: String) -> Result<Function2> {
        if f.domain != self.domain {
            return Err(Error::FamilyDomain {
                index,
                found: f.domain.to_string(),
                expected: self.domain.to_string(),
            });
        }
        Ok(f)
    }

    pub fn member(&self, n: u64) -> Result<Function2> {
        match &self.members {
            Members::Single(m) => self.checked(m(n), n.to_string()),
            Members::Double(_) => Err(Error::KindMismatch {
                expected: "single-indexed",
            }),
        }
    }

    pub fn member2(&self, m: u64, n: u64) -> Result<Function2> {
        match &self.members {
            Members::Double(g) => self.checked(g(m, n), format!("({m},{n})")),
            Members::Single(_) => Err(Error::KindMismatch {
                expected: "double-indexed",
            }),
        }
    }
}

impl fmt::Debug for FunctionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionFamily")
            .field("label", &self.label)
            .field("double", &self.is_double())
            .finish()
    }
}

/// Sampled sup-distance for one family index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeGap {
    pub index: Vec<u64>,
    pub sup_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceViolation {
    pub index: Vec<u64>,
    pub point: (f64, f64),
    pub gap: f64,
}

/// Result of a sampled uniform-convergence check. `Verified` means
/// "verified on sample" only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformConvergenceVerdict {
    pub status: Status,
    pub epsilon: f64,
    pub probes: Vec<ProbeGap>,
    pub violation: Option<ConvergenceViolation>,
}

impl UniformConvergenceVerdict {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

const CONVERGENCE_SEED: u64 = 0x5eed_0ff1;

fn sample_points(domain: &DomainBox, budget: usize) -> Vec<(f64, f64)> {
    let mut sampler = DomainSampler::new(*domain, CONVERGENCE_SEED);
    (0..budget).map(|_| sampler.next_point()).collect()
}

fn sup_check(
    epsilon: f64,
    points: &[(f64, f64)],
    limit: &Function2,
    members: Vec<(Vec<u64>, Function2)>,
) -> UniformConvergenceVerdict {
    let mut verdict = UniformConvergenceVerdict {
        status: Status::Verified,
        epsilon,
        probes: Vec::with_capacity(members.len()),
        violation: None,
    };
    for (index, fm) in members {
        let mut sup = 0.0f64;
        for &(x, y) in points {
            let gap = (fm.eval(x, y) - limit.eval(x, y)).abs();
            if gap.is_nan() || gap > sup {
                sup = gap;
            }
            if !(gap < epsilon) && verdict.violation.is_none() {
                verdict.status = Status::Violated;
                verdict.violation = Some(ConvergenceViolation {
                    index: index.clone(),
                    point: (x, y),
                    gap,
                });
            }
        }
        verdict.probes.push(ProbeGap {
            index,
            sup_gap: sup,
        });
    }
    verdict
}

fn check_inputs(epsilon: f64, family: &FunctionFamily, f: &Function2, budget: usize) -> Result<()> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParams(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if budget == 0 {
        return Err(Error::InvalidParams(
            "sample budget must be positive".into(),
        ));
    }
    if f.domain != family.domain {
        return Err(Error::FamilyDomain {
            index: "limit".into(),
            found: f.domain.to_string(),
            expected: family.domain.to_string(),
        });
    }
    Ok(())
}

/// Sampled `sup |f_n - f| < ε` for `n ∈ {N, N+1, 2N, 4N}`.
pub fn check_uniform_convergence(
    family: &FunctionFamily,
    f: &Function2,
    epsilon: f64,
    threshold: u64,
    sample_budget: usize,
) -> Result<UniformConvergenceVerdict> {
    if family.is_double() {
        return Err(Error::KindMismatch {
            expected: "single-indexed",
        });
    }
    check_inputs(epsilon, family, f, sample_budget)?;
    let mut ns = vec![threshold, threshold + 1, 2 * threshold, 4 * threshold];
    ns.dedup();
    let members = ns
        .into_iter()
        .map(|n| Ok((vec![n], family.member(n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(sup_check(
        epsilon,
        &sample_points(&f.domain, sample_budget),
        f,
        members,
    ))
}

/// Sampled `sup |f_{m,n} - f| < ε` for `(m, n) ∈ {N1, 2N1} × {N2, 2N2}`.
pub fn check_uniform_convergence_double(
    family: &FunctionFamily,
    f: &Function2,
    epsilon: f64,
    thresholds: (u64, u64),
    sample_budget: usize,
) -> Result<UniformConvergenceVerdict> {
    if !family.is_double() {
        return Err(Error::KindMismatch {
            expected: "double-indexed",
        });
    }
    check_inputs(epsilon, family, f, sample_budget)?;
    let (n1, n2) = thresholds;
    let mut members = Vec::with_capacity(4);
    for m in [n1, 2 * n1] {
        for n in [n2, 2 * n2] {
            members.push((vec![m, n], family.member2(m, n)?));
        }
    }
    Ok(sup_check(
        epsilon,
        &sample_points(&f.domain, sample_budget),
        f,
        members,
    ))
}

pub fn sum(domain: DomainBox) -> Function2 {
    Function2::new("x+y", domain, |x, y| x + y).with_lipschitz(std::f64::consts::SQRT_2)
}

/// `x·y` on `[0, b]²` has gradient norm at most `b√2`.
pub fn product(b: f64) -> Function2 {
    Function2::factorable("x*y", DomainBox::closed_square(0.0, b), |x| x, |y| y)
        .with_lipschitz(b * std::f64::consts::SQRT_2)
}

/// `sin x · sin y`; its gradient norm is at most 1 everywhere.
pub fn sin_product(domain: DomainBox) -> Function2 {
    Function2::factorable("sin(x)sin(y)", domain, f64::sin, f64::sin).with_lipschitz(1.0)
}

pub fn constant_fn(c: f64, domain: DomainBox) -> Function2 {
    Function2::factorable(format!("const({c})"), domain, move |_| c, |_| 1.0).with_lipschitz(0.0)
}

pub fn identity_x(domain: DomainBox) -> Function2 {
    Function2::factorable("x", domain, |x| x, |_| 1.0).with_lipschitz(1.0)
}

/// `1/(x·y)` on `(0, 1]²`, not uniformly continuous.
pub fn one_over_xy() -> Function2 {
    Function2::factorable(
        "1/(x*y)",
        DomainBox::left_open_square(0.0, 1.0),
        |x| 1.0 / x,
        |y| 1.0 / y,
    )
}

/// `sin(1/x)` on `(0, 1]²`, constant in `y`, not uniformly continuous.
pub fn sin_inv_x() -> Function2 {
    Function2::factorable(
        "sin(1/x)",
        DomainBox::left_open_square(0.0, 1.0),
        |x| (1.0 / x).sin(),
        |_| 1.0,
    )
}

/// Pointwise limit of `x^n` on `[0, 1]²`: 1 on the edge `x = 1`, else 0.
pub fn power_limit() -> Function2 {
    Function2::new("lim x^n", DomainBox::closed_square(0.0, 1.0), |x, _| {
        if x == 1.0 {
            1.0
        } else {
            0.0
        }
    })
}

/// Stable names accepted by [`function_builtin`].
pub const FUNCTION_GALLERY: &[&str] = &[
    "sum",
    "sum10",
    "product",
    "product10",
    "sin_product",
    "constant",
    "identity_x",
    "one_over_xy",
    "sin_inv_x",
    "power_limit",
];

pub fn function_builtin(name: &str) -> Result<Function2> {
    let (base, args) = parse_call(name)?;
    let unit = DomainBox::closed_square(0.0, 1.0);
    Ok(match (base, args.as_slice()) {
        ("sum", []) => sum(unit),
        ("sum10", []) => sum(DomainBox::closed_square(0.0, 10.0)),
        ("product", []) => product(1.0),
        ("product10", []) => product(10.0),
        ("sin_product", []) => sin_product(unit),
        ("constant", []) => constant_fn(1.0, unit),
        ("constant", [c]) => constant_fn(*c, unit),
        ("identity_x", []) => identity_x(unit),
        ("one_over_xy", []) => one_over_xy(),
        ("sin_inv_x", []) => sin_inv_x(),
        ("power_limit", []) => power_limit(),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

fn sum10() -> Function2 {
    sum(DomainBox::closed_square(0.0, 10.0))
}

/// `(x+y)(1 + 1/n)` on `[0, 10]²`, uniformly convergent to `x+y`.
pub fn scaled_sum_family() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 10.0);
    FunctionFamily::single("(x+y)(1+1/n)", d, move |n| {
        let c = 1.0 + 1.0 / n as f64;
        Function2::new(format!("(x+y)(1+1/{n})"), d, move |x, y| (x + y) * c)
    })
}

/// `x + y + 1/n` on `[0, 10]²`.
pub fn shifted_sum_family() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 10.0);
    FunctionFamily::single("x+y+1/n", d, move |n| {
        let c = 1.0 / n as f64;
        Function2::new(format!("x+y+1/{n}"), d, move |x, y| x + y + c)
    })
}

/// `x^n` on `[0, 1]²`: pointwise but not uniformly convergent.
pub fn power_family() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 1.0);
    FunctionFamily::single("x^n", d, move |n| {
        Function2::new(format!("x^{n}"), d, move |x, _| x.powf(n as f64))
    })
}

/// `(x+y)(1 + 1/(m+n))` on `[0, 10]²`.
pub fn scaled_sum_family2() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 10.0);
    FunctionFamily::double("(x+y)(1+1/(m+n))", d, move |m, n| {
        let c = 1.0 + 1.0 / (m + n) as f64;
        Function2::new(format!("(x+y)(1+1/({m}+{n}))"), d, move |x, y| (x + y) * c)
    })
}

/// `x + y + 1/(m+n)` on `[0, 10]²`.
pub fn shifted_sum_family2() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 10.0);
    FunctionFamily::double("x+y+1/(m+n)", d, move |m, n| {
        let c = 1.0 / (m + n) as f64;
        Function2::new(format!("x+y+1/({m}+{n})"), d, move |x, y| x + y + c)
    })
}

/// `x + y + 1/m`: converges in `m` only, so never uniformly P-convergent at
/// tolerances below `1/(2·N1)`.
pub fn row_shifted_sum_family2() -> FunctionFamily {
    let d = DomainBox::closed_square(0.0, 10.0);
    FunctionFamily::double("x+y+1/m", d, move |m, _| {
        let c = 1.0 / m as f64;
        Function2::new(format!("x+y+1/{m}"), d, move |x, y| x + y + c)
    })
}

/// Stable names accepted by [`family_builtin`].
pub const FAMILY_GALLERY: &[&str] = &[
    "scaled_sum",
    "shifted_sum",
    "power",
    "scaled_sum2",
    "shifted_sum2",
    "row_shifted_sum2",
];

/// A gallery family together with its limit function.
pub fn family_builtin(name: &str) -> Result<(FunctionFamily, Function2)> {
    Ok(match name.trim() {
        "scaled_sum" => (scaled_sum_family(), sum10()),
        "shifted_sum" => (shifted_sum_family(), sum10()),
        "power" => (power_family(), power_limit()),
        "scaled_sum2" => (scaled_sum_family2(), sum10()),
        "shifted_sum2" => (shifted_sum_family2(), sum10()),
        "row_shifted_sum2" => (row_shifted_sum_family2(), sum10()),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convergence::check_pringsheim;
    use crate::sequence::{const_grid, harmonic_sum, recip_grid};

    #[test]
    fn apply_examples() {
        let y = apply(&product(10.0), &const_grid(2.0, 2.0), 50).unwrap();
        assert_eq!(y.at(7, 3), 4.0);

        let y = apply(&sum(DomainBox::closed_square(0.0, 1.0)), &recip_grid(), 10).unwrap();
        assert_eq!(y.at(2, 4), 0.75);

        let y = apply(&product(1.0), &recip_grid(), 1000).unwrap();
        assert_eq!(y.at(3, 5), 1.0 / 3.0 * (1.0 / 5.0));
        assert!(check_pringsheim(&y, 0.0, 0.001, 40, 1000)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn apply_rejects_points_outside_domain() {
        let err = apply(
            &sum(DomainBox::closed_square(0.0, 1.0)),
            &crate::sequence::log_grid(),
            10,
        )
        .unwrap_err();
        // u_1 = 1/ln 2 ≈ 1.44 is already outside [0, 1]
        assert!(matches!(err, Error::Domain { k: 1, .. }));
    }

    #[test]
    fn interleave_layout() {
        let a = ScalarDoubleSequence::new("a", |k, l| (10 * k + l) as f64);
        let y = interleave_with_limit(&a, -1.0);
        assert_eq!(y.at(1, 1), 11.0);
        assert_eq!(y.at(1, 2), -1.0);
        assert_eq!(y.at(2, 2), -1.0);
        assert_eq!(y.at(3, 3), 22.0);
        assert_eq!(y.at(5, 3), 32.0);
        assert_eq!(y.at(4, 1), -1.0);
    }

    #[test]
    fn interleave_constant_with_itself() {
        let y = interleave_with_limit(&crate::sequence::constant(2.0), 2.0);
        assert!((1..20).all(|k| (1..20).all(|l| y.at(k, l) == 2.0)));
    }

    #[test]
    fn interleave_harmonic_converges() {
        let y = interleave_with_limit(&harmonic_sum(), 0.0);
        assert!(check_pringsheim(&y, 0.0, 0.05, 50, 400)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn factorizations_are_exact() {
        let mut s = DomainSampler::new(DomainBox::left_open_square(0.0, 1.0), 3);
        for name in FUNCTION_GALLERY {
            let f = function_builtin(name).unwrap();
            for _ in 0..200 {
                let (x, y) = s.next_point();
                if let Some(r) = f.factor_residual(x, y) {
                    assert_eq!(r, 0.0, "{name} at ({x}, {y})");
                }
            }
        }
    }

    #[test]
    fn uniform_continuity_examples() {
        let v =
            test_uniform_continuity(&sum(DomainBox::closed_square(0.0, 1.0)), 0.1, 200, 1).unwrap();
        assert_eq!(v.status, ContinuityStatus::NoViolationFound);
        // gap <= √2·distance < 0.1 once distance < 1/16
        assert!(v.delta_hat.unwrap() >= 1.0 / 16.0);

        let f = one_over_xy();
        let v = test_uniform_continuity(&f, 1.0, 200, 1).unwrap();
        assert_eq!(v.status, ContinuityStatus::ViolationFound);
        let pair = v.violating_pair.unwrap();
        assert!(pair.holds_for(&f, 1.0));
        assert_eq!(pair.scale, 1 << MAX_SCALE_EXPONENT);

        let v = test_uniform_continuity(
            &constant_fn(3.0, DomainBox::closed_square(0.0, 1.0)),
            1e-9,
            100,
            1,
        )
        .unwrap();
        assert_eq!(v.status, ContinuityStatus::NoViolationFound);
        assert_eq!(v.delta_hat, Some(1.0));
    }

    #[test]
    fn uniform_continuity_finds_fine_scale_pairs() {
        let f = one_over_xy();
        let mut s = DomainSampler::new(*f.domain(), 9);
        let pair = search_violation_at_scale(&f, 1.0, 1 << 20, 500, &mut s).unwrap();
        assert!(pair.holds_for(&f, 1.0));
        let f = sin_inv_x();
        let pair = search_violation_at_scale(&f, 1.0, 1 << 20, 500, &mut s).unwrap();
        assert!(pair.holds_for(&f, 1.0));
    }

    #[test]
    fn uniform_continuity_needs_bounded_domain() {
        let f = Function2::new("x", DomainBox::closed_square(0.0, f64::INFINITY), |x, _| x);
        assert!(matches!(
            test_uniform_continuity(&f, 0.1, 10, 0),
            Err(Error::UnboundedDomain(_))
        ));
    }

    #[test]
    fn uniform_convergence_examples() {
        let d = DomainBox::closed_square(0.0, 1.0);
        let f = sum(d);
        let shifted = FunctionFamily::single("f+1/n", d, move |n| {
            Function2::new("f+1/n", d, move |x, y| x + y + 1.0 / n as f64)
        });
        let v = check_uniform_convergence(&shifted, &f, 0.02, 100, 500).unwrap();
        assert!(v.is_verified());
        let first = &v.probes[0];
        assert_eq!(first.index, vec![100]);
        assert!((first.sup_gap - 0.01).abs() < 1e-15);

        let v = check_uniform_convergence(&power_family(), &power_limit(), 0.5, 10, 500).unwrap();
        assert_eq!(v.status, Status::Violated);
        let viol = v.violation.unwrap();
        assert!(viol.point.0.powf(viol.index[0] as f64) >= 0.5);

        let same = FunctionFamily::single("f", d, move |_| sum(d));
        let v = check_uniform_convergence(&same, &f, 1e-12, 3, 100).unwrap();
        assert!(v.is_verified());
        assert!(v.probes.iter().all(|p| p.sup_gap == 0.0));
    }

    #[test]
    fn uniform_convergence_double_examples() {
        let f = sum10();
        assert!(check_uniform_convergence_double(
            &shifted_sum_family2(),
            &f,
            0.02,
            (100, 100),
            300
        )
        .unwrap()
        .is_verified());
        let v = check_uniform_convergence_double(
            &row_shifted_sum_family2(),
            &f,
            0.001,
            (10, 1_000_000),
            300,
        )
        .unwrap();
        assert_eq!(v.status, Status::Violated);
        assert_eq!(v.violation.unwrap().index, vec![10, 1_000_000]);
        let d = *f.domain();
        let same = FunctionFamily::double("f", d, move |_, _| sum(d));
        assert!(
            check_uniform_convergence_double(&same, &f, 1e-12, (2, 2), 100)
                .unwrap()
                .is_verified()
        );
    }

    #[test]
    fn kind_mismatch() {
        let f = sum10();
        assert!(matches!(
            check_uniform_convergence(&shifted_sum_family2(), &f, 0.1, 1, 10),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            check_uniform_convergence_double(&shifted_sum_family(), &f, 0.1, (1, 1), 10),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn family_members_must_share_domain() {
        let d = DomainBox::closed_square(0.0, 1.0);
        let bad =
            FunctionFamily::single("drift", d, |n| sum(DomainBox::closed_square(0.0, n as f64)));
        assert!(matches!(bad.member(2), Err(Error::FamilyDomain { .. })));
        assert!(bad.member(1).is_ok());
    }

    #[test]
    fn gallery_lookup() {
        for name in FUNCTION_GALLERY {
            function_builtin(name).unwrap();
        }
        for name in FAMILY_GALLERY {
            family_builtin(name).unwrap();
        }
        assert!(function_builtin("cosh").is_err());
        assert!(family_builtin("cosh").is_err());
    }
}
