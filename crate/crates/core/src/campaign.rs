//! Theorem-verification campaigns over the function and sequence galleries.
//!
//! Hypotheses are preconditions: when one fails the case is `refused`, so a
//! `fail` always points at either a bug or a genuine counterexample.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::convergence::check_pringsheim;
use crate::domain::DomainBox;
use crate::error::{Error, Result};
use crate::functions::{
    apply, check_uniform_convergence, check_uniform_convergence_double, harvest_violation_pairs,
    interleave_with_limit, test_uniform_continuity, ContinuityStatus, Function2, FunctionFamily,
    UniformConvergenceVerdict, ViolatingPair, MAX_SCALE_EXPONENT,
};
use crate::oscillation::{
    check_slowly_oscillating, find_witness, witness_thresholds, OscillationParams,
};
use crate::report::Status;
use crate::sequence::{DoubleSequence, FactorableGridSequence, ScalarDoubleSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T3.1")]
    T31,
    #[serde(rename = "T3.2")]
    T32,
    #[serde(rename = "T3.3")]
    T33,
    #[serde(rename = "T3.4")]
    T34,
    #[serde(rename = "T3.5")]
    T35,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [Self::T31, Self::T32, Self::T33, Self::T34, Self::T35];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::T31 => "T3.1",
            Self::T32 => "T3.2",
            Self::T33 => "T3.3",
            Self::T34 => "T3.4",
            Self::T35 => "T3.5",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseOutcome {
    Pass,
    Fail,
    /// The hypothesis is knowingly absent and the conclusion fails, as it may.
    ExpectedFail,
    Refused,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignCase {
    pub sequence: String,
    pub function: String,
    pub params: Value,
    pub outcome: CaseOutcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Certificates and verdicts backing the outcome.
    pub evidence: Value,
}

impl CampaignCase {
    fn new(sequence: &str, function: &str, params: Value) -> Self {
        Self {
            sequence: sequence.to_string(),
            function: function.to_string(),
            params,
            outcome: CaseOutcome::Inconclusive,
            note: None,
            evidence: json!({}),
        }
    }

    fn finish(mut self, outcome: CaseOutcome, note: Option<&str>) -> Self {
        self.outcome = outcome;
        self.note = note.map(str::to_string);
        self
    }

    fn put(&mut self, key: &str, value: impl Serialize) {
        self.evidence[key] = serde_json::to_value(value).expect("evidence serializes");
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
    pub refused: usize,
    pub inconclusive: usize,
}

impl CampaignSummary {
    pub fn tally(cases: &[CampaignCase]) -> Self {
        let mut s = Self {
            total: cases.len(),
            ..Self::default()
        };
        for c in cases {
            match c.outcome {
                CaseOutcome::Pass => s.pass += 1,
                CaseOutcome::Fail => s.fail += 1,
                CaseOutcome::ExpectedFail => s.expected_fail += 1,
                CaseOutcome::Refused => s.refused += 1,
                CaseOutcome::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CampaignStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CampaignStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Pass => 0,
            Self::Fail => 1,
            Self::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub theorem_id: TheoremId,
    pub status: CampaignStatus,
    pub summary: CampaignSummary,
    pub cases: Vec<CampaignCase>,
    pub config_echo: Value,
}

impl CampaignReport {
    fn assemble(theorem_id: TheoremId, mut cases: Vec<CampaignCase>, config_echo: Value) -> Self {
        cases.sort_by(|a, b| (&a.sequence, &a.function).cmp(&(&b.sequence, &b.function)));
        let summary = CampaignSummary::tally(&cases);
        let status = if summary.fail > 0 {
            CampaignStatus::Fail
        } else if summary.refused + summary.inconclusive > 0 || summary.total == 0 {
            CampaignStatus::Inconclusive
        } else {
            CampaignStatus::Pass
        };
        Self {
            theorem_id,
            status,
            summary,
            cases,
            config_echo,
        }
    }
}

/// Shared knobs for all campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub epsilon: f64,
    pub horizon: u64,
    /// Pringsheim threshold `N` for convergence checks.
    pub threshold: u64,
    pub seed: u64,
    /// Candidate pairs per scale in uniform-continuity searches.
    pub pair_budget: usize,
    /// Sample points in uniform-convergence checks.
    pub sample_budget: usize,
    /// Tolerance for the assembled grid's own witness in the converse pipeline.
    pub grid_epsilon: f64,
    /// Largest `N` tried when looking for uniform convergence at `ε/3`.
    pub max_uniform_threshold: u64,
    /// Bisection depth for cluster extraction.
    pub cluster_depth: u32,
}

impl Default for CampaignParams {
    fn default() -> Self {
        Self {
            epsilon: 0.05,
            horizon: 1000,
            threshold: 50,
            seed: 0,
            pair_budget: 2000,
            sample_budget: 2000,
            grid_epsilon: 0.01,
            max_uniform_threshold: 4096,
            cluster_depth: 40,
        }
    }
}

impl CampaignParams {
    fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0) || !(self.grid_epsilon > 0.0) {
            return Err(Error::InvalidParams("tolerances must be positive".into()));
        }
        if self.horizon == 0 || self.pair_budget == 0 || self.sample_budget == 0 {
            return Err(Error::InvalidParams(
                "horizon and budgets must be positive".into(),
            ));
        }
        Ok(())
    }

    fn echo(&self, extra: Value) -> Value {
        let mut v = serde_json::to_value(self).expect("params serialize");
        if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
            base.extend(more);
        }
        v
    }
}

/// Horizon that covers every `(s, t)` a slow-oscillation check at `H` can reach.
fn coverage(horizon: u64) -> u64 {
    horizon + horizon.div_ceil(2) + 1
}

/// `apply`, with domain errors turned into a refused case.
fn image_or_refuse(
    f: &Function2,
    grid: &FactorableGridSequence,
    horizon: u64,
    case: &mut CampaignCase,
) -> Result<Option<ScalarDoubleSequence>> {
    match apply(f, grid, coverage(horizon)) {
        Ok(y) => Ok(Some(y)),
        Err(e @ Error::Domain { .. }) => {
            case.put("domain_error", e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn labels(items: impl IntoIterator<Item = String>) -> Value {
    Value::from(items.into_iter().collect::<Vec<_>>())
}

/// Uniformly continuous functions preserve slowly oscillating grids.
///
/// Lipschitz functions are held to the quantitative form: the image must
/// have a witness at `K·ε`. Functions without a constant go through the
/// uniform-continuity falsifier; those it convicts are expected to fail.
pub fn run_theorem31_campaign(
    functions: &[Function2],
    grids: &[FactorableGridSequence],
    params: &CampaignParams,
) -> Result<CampaignReport> {
    params.validate()?;
    let (eps, h) = (params.epsilon, params.horizon);
    let mut grid_searches = Vec::with_capacity(grids.len());
    for grid in grids {
        grid_searches.push(find_witness(&DoubleSequence::Grid(grid.clone()), eps, h)?);
    }
    let mut cases = Vec::new();
    for f in functions {
        let uc = match f.lipschitz() {
            Some(_) => None,
            None => Some(test_uniform_continuity(
                f,
                eps,
                params.pair_budget,
                params.seed,
            )?),
        };
        let convicted = uc
            .as_ref()
            .is_some_and(|v| v.status == ContinuityStatus::ViolationFound);
        // K = 0 means a constant image; any positive tolerance works
        let eps_out = match f.lipschitz() {
            Some(k) if k > 0.0 => k * eps,
            _ => eps,
        };
        for (grid, grid_ws) in grids.iter().zip(&grid_searches) {
            let mut case = CampaignCase::new(
                grid.label(),
                f.label(),
                json!({ "epsilon_in": eps, "epsilon_out": eps_out, "horizon": h, "lipschitz": f.lipschitz() }),
            );
            if let Some(v) = &uc {
                case.put("uniform_continuity", v);
            }
            case.put("grid_witness", grid_ws);
            if grid_ws.witness.is_none() {
                cases.push(case.finish(
                    CaseOutcome::Fail,
                    Some("grid has no slow-oscillation witness"),
                ));
                continue;
            }
            let Some(image) = image_or_refuse(f, grid, h, &mut case)? else {
                cases.push(case.finish(
                    CaseOutcome::Refused,
                    Some("grid leaves the function's domain"),
                ));
                continue;
            };
            let image_ws = find_witness(&image.into(), eps_out, h)?;
            let found = image_ws.witness.is_some();
            case.put("image_witness", image_ws);
            let case = match (found, convicted, f.lipschitz()) {
                (true, _, _) => case.finish(CaseOutcome::Pass, None),
                (false, true, _) => case.finish(
                    CaseOutcome::ExpectedFail,
                    Some("function is not uniformly continuous"),
                ),
                (false, false, Some(_)) => {
                    case.finish(CaseOutcome::Fail, Some("image has no witness at K·ε"))
                }
                (false, false, None) => case.finish(
                    CaseOutcome::Inconclusive,
                    Some("image has no witness on the search grid"),
                ),
            };
            cases.push(case);
        }
    }
    let echo = params.echo(json!({
        "functions": labels(functions.iter().map(|f| f.label().to_string())),
        "grids": labels(grids.iter().map(|g| g.label().to_string())),
    }));
    Ok(CampaignReport::assemble(TheoremId::T31, cases, echo))
}

/// Uniformly continuous functions preserve P-convergent grids: the image
/// converges to `f(L_u, L_v)`, and interleaving it with that limit yields a
/// slowly oscillating sequence.
pub fn run_theorem32_campaign(
    functions: &[Function2],
    grids: &[(FactorableGridSequence, (f64, f64))],
    params: &CampaignParams,
) -> Result<CampaignReport> {
    params.validate()?;
    let (eps, n, h) = (params.epsilon, params.threshold, params.horizon);
    let mut cases = Vec::new();
    for f in functions {
        for (grid, (lu, lv)) in grids {
            if !f.domain().contains(*lu, *lv) {
                return Err(Error::LimitOutsideDomain {
                    x: *lu,
                    y: *lv,
                    domain: f.domain().to_string(),
                });
            }
            let limit = f.eval(*lu, *lv);
            let mut case = CampaignCase::new(
                grid.label(),
                f.label(),
                json!({ "grid_limit": [lu, lv], "image_limit": limit, "epsilon": eps, "threshold": n, "horizon": h }),
            );
            let grid_conv = check_pringsheim(&grid.distance_to((*lu, *lv)), 0.0, eps, n, h)?;
            let converges = grid_conv.is_verified();
            case.put("grid_convergence", grid_conv);
            if !converges {
                cases.push(case.finish(
                    CaseOutcome::Refused,
                    Some("grid does not P-converge on the window"),
                ));
                continue;
            }
            let image = match apply(f, grid, h) {
                Ok(y) => y,
                Err(e @ Error::Domain { .. }) => {
                    case.put("domain_error", e.to_string());
                    cases.push(case.finish(
                        CaseOutcome::Refused,
                        Some("grid leaves the function's domain"),
                    ));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let interleaved = interleave_with_limit(&image, limit);
            let inter_ws = find_witness(&interleaved.into(), eps, h)?;
            let image_conv = check_pringsheim(&image, limit, eps, n, h)?;
            let outcome = match (image_conv.status, inter_ws.witness.is_some()) {
                (Status::Verified, true) => (CaseOutcome::Pass, None),
                (Status::Violated, _) => (
                    CaseOutcome::Fail,
                    Some("image is ε away from f(L) inside the window"),
                ),
                (Status::Verified, false) => (
                    CaseOutcome::Inconclusive,
                    Some("interleaved sequence has no witness on the search grid"),
                ),
                _ => (
                    CaseOutcome::Inconclusive,
                    Some("image convergence undetermined"),
                ),
            };
            case.put("interleave_witness", inter_ws);
            case.put("image_convergence", image_conv);
            cases.push(case.finish(outcome.0, outcome.1));
        }
    }
    let echo = params.echo(json!({
        "functions": labels(functions.iter().map(|f| f.label().to_string())),
        "grids": labels(grids.iter().map(|(g, _)| g.label().to_string())),
    }));
    Ok(CampaignReport::assemble(TheoremId::T32, cases, echo))
}

/// Indices of the points kept by repeated quadrant bisection: each round
/// keeps the most populated quadrant (first on ties) while it still holds at
/// least two points. Also returns the final box.
pub fn bisect_cluster(points: &[(f64, f64)], max_depth: u32) -> (Vec<usize>, [f64; 4]) {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    if points.is_empty() {
        return (idx, [0.0; 4]);
    }
    let fold = |acc: [f64; 4], &(x, y): &(f64, f64)| {
        [acc[0].min(x), acc[1].min(y), acc[2].max(x), acc[3].max(y)]
    };
    let mut bbox = points.iter().fold(
        [
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ],
        fold,
    );
    for _ in 0..max_depth {
        let (mx, my) = ((bbox[0] + bbox[2]) / 2.0, (bbox[1] + bbox[3]) / 2.0);
        let mut quads: [Vec<usize>; 4] = Default::default();
        for &i in &idx {
            let (x, y) = points[i];
            quads[usize::from(x >= mx) + 2 * usize::from(y >= my)].push(i);
        }
        let best = (0..4).fold(0, |b, q| {
            if quads[q].len() > quads[b].len() {
                q
            } else {
                b
            }
        });
        if quads[best].len() < 2 {
            break;
        }
        bbox = [
            if best & 1 == 0 { bbox[0] } else { mx },
            if best & 2 == 0 { bbox[1] } else { my },
            if best & 1 == 0 { mx } else { bbox[2] },
            if best & 2 == 0 { my } else { bbox[3] },
        ];
        idx = std::mem::take(&mut quads[best]);
    }
    (idx, bbox)
}

/// Grid whose index block `[2^i, 2^(i+1))` is built from pair `i` (the last
/// pair repeats forever): odd indices take the first point's coordinates,
/// even indices the second's, so `(k, l)` odd-odd and `(k+1, l+1)` straddle
/// a violating pair.
pub fn assemble_pair_grid(
    pairs: &[ViolatingPair],
    domain: DomainBox,
) -> Result<FactorableGridSequence> {
    if pairs.is_empty() {
        return Err(Error::InvalidParams(
            "no violation pairs to assemble".into(),
        ));
    }
    let us: Vec<(f64, f64)> = pairs.iter().map(|p| (p.first.0, p.second.0)).collect();
    let vs: Vec<(f64, f64)> = pairs.iter().map(|p| (p.first.1, p.second.1)).collect();
    let last = pairs.len() - 1;
    let block = move |j: u64| ((63 - j.max(1).leading_zeros()) as usize).min(last);
    let pick = |table: Vec<(f64, f64)>| {
        move |j: u64| {
            let (odd, even) = table[block(j)];
            if j % 2 == 1 {
                odd
            } else {
                even
            }
        }
    };
    Ok(FactorableGridSequence::new(
        "violation_pair_grid",
        pick(us),
        pick(vs),
        domain,
    ))
}

/// Converse direction: a function that is not uniformly continuous breaks
/// some slowly oscillating grid.
///
/// Harvests violation pairs at scales `1, 2, 4, …`, keeps a bisection cluster,
/// truncates it to the last `⌊log2 H⌋` pairs and assembles a grid from them.
/// Success means the grid has a witness at `grid_epsilon` while the image has
/// none at `ε`.
pub fn run_theorem33_falsification(
    f: &Function2,
    params: &CampaignParams,
) -> Result<CampaignReport> {
    params.validate()?;
    f.domain().ensure_bounded()?;
    let (eps, h) = (params.epsilon, params.horizon);
    let echo = params.echo(json!({ "function": f.label() }));
    let mut case = CampaignCase::new(
        "violation_pair_grid",
        f.label(),
        json!({ "epsilon": eps, "horizon": h }),
    );

    let uc = test_uniform_continuity(f, eps, params.pair_budget, params.seed)?;
    let convicted = uc.status == ContinuityStatus::ViolationFound;
    case.put("uniform_continuity", &uc);
    if !convicted {
        let case = case.finish(CaseOutcome::Inconclusive, Some("no violation pairs found"));
        return Ok(CampaignReport::assemble(TheoremId::T33, vec![case], echo));
    }

    let pairs = harvest_violation_pairs(f, eps, params.pair_budget, params.seed);
    debug_assert_eq!(pairs.len(), MAX_SCALE_EXPONENT as usize + 1);
    let firsts: Vec<(f64, f64)> = pairs.iter().map(|p| p.first).collect();
    let (cluster, bbox) = bisect_cluster(&firsts, params.cluster_depth);
    let keep = (63 - h.leading_zeros()).max(1) as usize;
    let chosen: Vec<ViolatingPair> = cluster[cluster.len().saturating_sub(keep)..]
        .iter()
        .map(|&i| pairs[i])
        .collect();
    case.put("cluster_box", bbox);
    case.put("pairs", &chosen);

    let grid = assemble_pair_grid(&chosen, *f.domain())?;
    let grid_ws = find_witness(&DoubleSequence::Grid(grid.clone()), params.grid_epsilon, h)?;
    let grid_ok = grid_ws.witness.is_some();
    case.put("grid_witness", grid_ws);
    let image = apply(f, &grid, coverage(h))?;
    let image_ws = find_witness(&image.clone().into(), eps, h)?;
    let image_clean = image_ws.witness.is_none();
    case.put("image_search", image_ws);
    let first_triple = OscillationParams::new(eps, 0.5, 0.5, 1, h)?;
    case.put(
        "image_certificate",
        check_slowly_oscillating(&image.into(), first_triple)?,
    );

    let case = match (grid_ok, image_clean) {
        (true, true) => case.finish(CaseOutcome::Pass, None),
        (false, _) => case.finish(
            CaseOutcome::Inconclusive,
            Some("assembled grid has no witness"),
        ),
        (true, false) => case.finish(
            CaseOutcome::Inconclusive,
            Some("image has a witness on the search grid"),
        ),
    };
    Ok(CampaignReport::assemble(TheoremId::T33, vec![case], echo))
}

enum Family<'a> {
    Single(&'a FunctionFamily),
    Double(&'a FunctionFamily),
}

impl Family<'_> {
    fn check(
        &self,
        f: &Function2,
        eps: f64,
        n: u64,
        budget: usize,
    ) -> Result<UniformConvergenceVerdict> {
        match self {
            Family::Single(fam) => check_uniform_convergence(fam, f, eps, n, budget),
            Family::Double(fam) => check_uniform_convergence_double(fam, f, eps, (n, n), budget),
        }
    }

    fn member(&self, n: u64) -> Result<Function2> {
        match self {
            Family::Single(fam) => fam.member(n),
            Family::Double(fam) => fam.member2(n, n),
        }
    }

    fn label(&self) -> &str {
        match self {
            Family::Single(fam) | Family::Double(fam) => fam.label(),
        }
    }
}

/// Largest `|f_N - f|` over grid points `(u_k, v_l)` with `N' <= k, l <= last`.
fn window_sup_gap(
    fn_image: &ScalarDoubleSequence,
    f_image: &ScalarDoubleSequence,
    from: u64,
    last: u64,
) -> f64 {
    let mut sup = 0.0f64;
    for k in from..=last {
        for l in from..=last {
            let gap = (fn_image.at(k, l) - f_image.at(k, l)).abs();
            if gap.is_nan() {
                return f64::NAN;
            }
            sup = sup.max(gap);
        }
    }
    sup
}

fn uniform_limit_campaign(
    theorem: TheoremId,
    family: Family<'_>,
    f: &Function2,
    grids: &[FactorableGridSequence],
    params: &CampaignParams,
) -> Result<CampaignReport> {
    params.validate()?;
    let (eps, h) = (params.epsilon, params.horizon);
    let third = eps / 3.0;
    let echo = params.echo(json!({
        "family": family.label(),
        "function": f.label(),
        "grids": labels(grids.iter().map(|g| g.label().to_string())),
    }));

    let mut found = None;
    let mut last_verdict = None;
    for n in witness_thresholds(params.max_uniform_threshold) {
        let v = family.check(f, third, n, params.sample_budget)?;
        if v.is_verified() {
            found = Some((n, v));
            break;
        }
        last_verdict = Some(v);
    }

    let mut cases = Vec::new();
    for grid in grids {
        let mut case = CampaignCase::new(
            grid.label(),
            f.label(),
            json!({ "epsilon": eps, "epsilon_third": third, "horizon": h }),
        );
        let Some((n, verdict)) = &found else {
            case.put("uniform_convergence", &last_verdict);
            cases.push(case.finish(
                CaseOutcome::Refused,
                Some("family is not uniformly convergent at ε/3 on the sample"),
            ));
            continue;
        };
        case.params["member"] = json!(n);
        case.put("uniform_convergence", verdict);
        let f_n = family.member(*n)?;
        let (Some(fn_image), Some(f_image)) = (
            image_or_refuse(&f_n, grid, h, &mut case)?,
            image_or_refuse(f, grid, h, &mut case)?,
        ) else {
            cases.push(case.finish(
                CaseOutcome::Refused,
                Some("grid leaves the function's domain"),
            ));
            continue;
        };
        let fn_ws = find_witness(&fn_image.clone().into(), third, h)?;
        let Some(w) = fn_ws.witness else {
            case.put("member_witness", fn_ws);
            cases.push(case.finish(
                CaseOutcome::Inconclusive,
                Some("member image has no witness at ε/3"),
            ));
            continue;
        };
        let p = OscillationParams::new(eps, w.alpha, w.delta, w.threshold, h)?;
        let cert = check_slowly_oscillating(&f_image.clone().into(), p)?;
        let sup = window_sup_gap(&fn_image, &f_image, w.threshold, coverage(h));
        case.put(
            "decomposition",
            json!({
                "uniform_gap": sup,
                "uniform_gap_below_third": sup < third,
                "member_oscillation_below_third": true,
                "terms": [third, third, third],
            }),
        );
        case.put("member_witness", fn_ws);
        let verified = cert.is_verified();
        case.put("limit_certificate", cert);
        cases.push(if verified {
            case.finish(CaseOutcome::Pass, None)
        } else {
            case.finish(
                CaseOutcome::Fail,
                Some("limit image violates the member's witness triple at ε"),
            )
        });
    }
    Ok(CampaignReport::assemble(theorem, cases, echo))
}

/// A uniform limit of functions whose grid images oscillate slowly at `ε/3`
/// keeps that property at `ε`, with the member's witness triple.
pub fn run_theorem34_campaign(
    family: &FunctionFamily,
    f: &Function2,
    grids: &[FactorableGridSequence],
    params: &CampaignParams,
) -> Result<CampaignReport> {
    if family.is_double() {
        return Err(Error::KindMismatch {
            expected: "single-indexed",
        });
    }
    uniform_limit_campaign(TheoremId::T34, Family::Single(family), f, grids, params)
}

/// Double-indexed version of [`run_theorem34_campaign`]; members `f_{N,N}`.
pub fn run_theorem35_campaign(
    family: &FunctionFamily,
    f: &Function2,
    grids: &[FactorableGridSequence],
    params: &CampaignParams,
) -> Result<CampaignReport> {
    if !family.is_double() {
        return Err(Error::KindMismatch {
            expected: "double-indexed",
        });
    }
    uniform_limit_campaign(TheoremId::T35, Family::Double(family), f, grids, params)
}
