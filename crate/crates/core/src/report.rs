use serde::{Deserialize, Serialize};

/// Outcome of a window-relative check.
///
/// Every status speaks only about the scanned window; `Verified` never
/// asserts anything about indices beyond the horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Violated,
    Undetermined,
    /// Window evidence of `|x_{k,l}| -> ∞`; only produced by limit estimation.
    DefinitelyDivergent,
}

impl Status {
    /// CLI exit code for this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Violated | Status::DefinitelyDivergent => 1,
            Status::Undetermined => 2,
        }
    }
}

/// Indices and values witnessing a failed inequality.
///
/// Single-point checks (Pringsheim, bounds) leave `s` and `t` empty and carry
/// one value; pair checks carry `[x_{k,l}, x_{s,t}]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub k: u64,
    pub l: u64,
    pub s: Option<u64>,
    pub t: Option<u64>,
    pub values: Vec<f64>,
}

impl Counterexample {
    pub fn point(k: u64, l: u64, value: f64) -> Self {
        Self {
            k,
            l,
            s: None,
            t: None,
            values: vec![value],
        }
    }

    pub fn pair(k: u64, l: u64, s: u64, t: u64, a: f64, b: f64) -> Self {
        Self {
            k,
            l,
            s: Some(s),
            t: Some(t),
            values: vec![a, b],
        }
    }
}

/// Result of the Cauchy / Pringsheim / divergence / boundedness checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub status: Status,
    pub limit: Option<f64>,
    pub epsilon: f64,
    pub threshold: u64,
    pub horizon: u64,
    pub counterexample: Option<Counterexample>,
    /// Column threshold when it differs from the row threshold (divergence checks).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column_threshold: Option<u64>,
}

impl ConvergenceReport {
    pub(crate) fn new(status: Status, epsilon: f64, threshold: u64, horizon: u64) -> Self {
        Self {
            status,
            limit: None,
            epsilon,
            threshold,
            horizon,
            counterexample: None,
            column_threshold: None,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Default cap on window cells per check.
pub const DEFAULT_MAX_CELLS: u64 = 100_000_000;

/// Cell cap from `DOUBLESEQ_MAX_CELLS`, or [`DEFAULT_MAX_CELLS`].
pub fn max_cells() -> u64 {
    std::env::var("DOUBLESEQ_MAX_CELLS")
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// Number of cells in a square window `lo..=hi` on both axes.
pub(crate) fn square_cells(lo: u64, hi: u64) -> u64 {
    if hi < lo {
        0
    } else {
        (hi - lo + 1).saturating_mul(hi - lo + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Verified.exit_code(), 0);
        assert_eq!(Status::Violated.exit_code(), 1);
        assert_eq!(Status::Undetermined.exit_code(), 2);
    }

    #[test]
    fn json_shape() {
        let mut r = ConvergenceReport::new(Status::Violated, 0.5, 10, 100);
        r.counterexample = Some(Counterexample::pair(11, 11, 11, 19, 1.0, 2.0));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"status":"violated","limit":null,"epsilon":0.5,"threshold":10,"horizon":100,"counterexample":{"k":11,"l":11,"s":11,"t":19,"values":[1.0,2.0]}}"#
        );
        let back: ConvergenceReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
