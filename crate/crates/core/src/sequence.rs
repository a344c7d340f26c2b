//! Double sequences: scalar maps `(k, l) ↦ x_{k,l}` and factorable grids of
//! planar points `(u_k, v_l)`, plus the builtin gallery.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::domain::{DomainBox, Interval};
use crate::error::{Error, Result};

/// 1-based `(row, column)` index of a double sequence entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexPair {
    pub k: u64,
    pub l: u64,
}

impl IndexPair {
    pub fn new(k: u64, l: u64) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidIndex { k, l });
        }
        Ok(Self { k, l })
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

type Evaluator = Arc<dyn Fn(u64, u64) -> f64 + Send + Sync>;
type Generator = Arc<dyn Fn(u64) -> f64 + Send + Sync>;

/// A real double sequence given by a pure evaluator.
#[derive(Clone)]
pub struct ScalarDoubleSequence {
    label: String,
    eval: Evaluator,
}

impl ScalarDoubleSequence {
    /// `eval` must be pure and total on positive indices.
    pub fn new(
        label: impl Into<String>,
        eval: impl Fn(u64, u64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, idx: IndexPair) -> f64 {
        (self.eval)(idx.k, idx.l)
    }

    /// Unchecked read; callers guarantee `k, l >= 1`.
    #[inline]
    pub fn at(&self, k: u64, l: u64) -> f64 {
        (self.eval)(k, l)
    }

    /// Pointwise `x_{k,l} - c`.
    pub fn shifted(&self, c: f64) -> Self {
        let inner = self.clone();
        Self::new(format!("{} - {}", self.label, c), move |k, l| {
            inner.at(k, l) - c
        })
    }
}

impl fmt::Debug for ScalarDoubleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarDoubleSequence")
            .field("label", &self.label)
            .finish()
    }
}

/// Double sequence of points `(u_k, v_l)` in a box `A × A`, generated by two
/// single-index sequences.
#[derive(Clone)]
pub struct FactorableGridSequence {
    label: String,
    row_gen: Generator,
    col_gen: Generator,
    domain: DomainBox,
}

impl FactorableGridSequence {
    pub fn new(
        label: impl Into<String>,
        row_gen: impl Fn(u64) -> f64 + Send + Sync + 'static,
        col_gen: impl Fn(u64) -> f64 + Send + Sync + 'static,
        domain: DomainBox,
    ) -> Self {
        Self {
            label: label.into(),
            row_gen: Arc::new(row_gen),
            col_gen: Arc::new(col_gen),
            domain,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> &DomainBox {
        &self.domain
    }

    #[inline]
    pub fn row(&self, k: u64) -> f64 {
        (self.row_gen)(k)
    }

    #[inline]
    pub fn col(&self, l: u64) -> f64 {
        (self.col_gen)(l)
    }

    /// The point at `idx`, checked against the domain.
    pub fn point(&self, idx: IndexPair) -> Result<(f64, f64)> {
        let (x, y) = (self.row(idx.k), self.col(idx.l));
        if self.domain.contains(x, y) {
            Ok((x, y))
        } else {
            Err(Error::Domain {
                k: idx.k,
                l: idx.l,
                x,
                y,
                domain: self.domain.to_string(),
            })
        }
    }

    /// Generator values `u_lo..=u_hi` and `v_lo..=v_hi`, checked against `domain`.
    pub(crate) fn window_values(
        &self,
        rows: (u64, u64),
        cols: (u64, u64),
        domain: &DomainBox,
    ) -> Result<(Vec<f64>, Vec<f64>)> {
        let us: Vec<f64> = (rows.0..=rows.1).map(|k| self.row(k)).collect();
        let vs: Vec<f64> = (cols.0..=cols.1).map(|l| self.col(l)).collect();
        let bad_u = us.iter().position(|&u| !domain.x.contains(u));
        let bad_v = vs.iter().position(|&v| !domain.y.contains(v));
        if bad_u.is_some() || bad_v.is_some() {
            let k = bad_u.map_or(rows.0, |i| rows.0 + i as u64);
            let l = bad_v.map_or(cols.0, |i| cols.0 + i as u64);
            return Err(Error::Domain {
                k,
                l,
                x: self.row(k),
                y: self.col(l),
                domain: domain.to_string(),
            });
        }
        Ok((us, vs))
    }

    /// Checks every point with `k, l <= horizon` against the grid's own domain.
    pub fn validate(&self, horizon: u64) -> Result<()> {
        self.window_values((1, horizon), (1, horizon), &self.domain)
            .map(|_| ())
    }

    /// Distance from `(u_k, v_l)` to `target` as a scalar double sequence.
    pub fn distance_to(&self, target: (f64, f64)) -> ScalarDoubleSequence {
        let grid = self.clone();
        ScalarDoubleSequence::new(
            format!("|{} - ({}, {})|", self.label, target.0, target.1),
            move |k, l| {
                crate::domain::planar_distance(grid.row(k) - target.0, grid.col(l) - target.1)
            },
        )
    }
}

impl fmt::Debug for FactorableGridSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorableGridSequence")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish()
    }
}

/// Either kind of double sequence; oscillation checks accept both.
#[derive(Debug, Clone)]
pub enum DoubleSequence {
    Scalar(ScalarDoubleSequence),
    Grid(FactorableGridSequence),
}

impl DoubleSequence {
    pub fn label(&self) -> &str {
        match self {
            DoubleSequence::Scalar(s) => s.label(),
            DoubleSequence::Grid(g) => g.label(),
        }
    }

    pub fn as_scalar(&self) -> Option<&ScalarDoubleSequence> {
        match self {
            DoubleSequence::Scalar(s) => Some(s),
            DoubleSequence::Grid(_) => None,
        }
    }

    pub fn as_grid(&self) -> Option<&FactorableGridSequence> {
        match self {
            DoubleSequence::Grid(g) => Some(g),
            DoubleSequence::Scalar(_) => None,
        }
    }
}

impl From<ScalarDoubleSequence> for DoubleSequence {
    fn from(s: ScalarDoubleSequence) -> Self {
        DoubleSequence::Scalar(s)
    }
}

impl From<FactorableGridSequence> for DoubleSequence {
    fn from(g: FactorableGridSequence) -> Self {
        DoubleSequence::Grid(g)
    }
}

/// `x_{k,l} = ln(max(k, l))`: the matrix whose row `n` and column `n` both
/// read `ln n` beyond the diagonal.
pub fn log_max() -> ScalarDoubleSequence {
    ScalarDoubleSequence::new("log_max", |k, l| (k.max(l) as f64).ln())
}

pub fn constant(c: f64) -> ScalarDoubleSequence {
    ScalarDoubleSequence::new(format!("const({c})"), move |_, _| c)
}

/// `x_{k,l} = 1/(k+l)`
pub fn harmonic_sum() -> ScalarDoubleSequence {
    ScalarDoubleSequence::new("harmonic_sum", |k, l| 1.0 / (k + l) as f64)
}

/// `x_{k,l} = (-1)^{k+l}`
pub fn alternating() -> ScalarDoubleSequence {
    ScalarDoubleSequence::new(
        "alternating",
        |k, l| if (k + l) % 2 == 0 { 1.0 } else { -1.0 },
    )
}

/// `x_{k,1} = k`, zero elsewhere. P-convergent to 0 yet unbounded.
pub fn row_spike() -> ScalarDoubleSequence {
    ScalarDoubleSequence::new("row_spike", |k, l| if l == 1 { k as f64 } else { 0.0 })
}

/// `(1/k, 1/l)` in `(0, 1]²`.
pub fn recip_grid() -> FactorableGridSequence {
    FactorableGridSequence::new(
        "recip_grid",
        |k| 1.0 / k as f64,
        |l| 1.0 / l as f64,
        DomainBox::left_open_square(0.0, 1.0),
    )
}

/// `u_k = v_k = 1/ln(k+1)` in `(0, 2]²`.
pub fn log_grid() -> FactorableGridSequence {
    fn g(n: u64) -> f64 {
        1.0 / ((n + 1) as f64).ln()
    }
    FactorableGridSequence::new("log_grid", g, g, DomainBox::left_open_square(0.0, 2.0))
}

/// `(1 + 1/k, 2 + 1/l)`, P-convergent to `(1, 2)`.
pub fn shifted_grid() -> FactorableGridSequence {
    FactorableGridSequence::new(
        "shifted_grid",
        |k| 1.0 + 1.0 / k as f64,
        |l| 2.0 + 1.0 / l as f64,
        DomainBox::new(Interval::left_open(1.0, 2.0), Interval::left_open(2.0, 3.0))
            .expect("static bounds"),
    )
}

/// Every point equal to `(c, d)`.
pub fn const_grid(c: f64, d: f64) -> FactorableGridSequence {
    FactorableGridSequence::new(
        format!("const_grid({c},{d})"),
        move |_| c,
        move |_| d,
        DomainBox::new(Interval::closed(c, c), Interval::closed(d, d)).expect("degenerate box"),
    )
}

/// Stable gallery names accepted by [`builtin`].
pub const GALLERY: &[&str] = &[
    "log_max",
    "const",
    "harmonic_sum",
    "alternating",
    "row_spike",
    "recip_grid",
    "log_grid",
    "shifted_grid",
    "const_grid",
];

/// Splits `name(a,b)` into `("name", [a, b])`.
pub(crate) fn parse_call(spec: &str) -> Result<(&str, Vec<f64>)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec, Vec::new()));
    };
    let name = &spec[..open];
    let inner = spec[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::UnknownName(spec.to_string()))?;
    let args = inner
        .split(',')
        .map(|a| a.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::UnknownName(spec.to_string()))?;
    Ok((name, args))
}

/// Looks up a gallery sequence. `const` and `const_grid` take optional
/// arguments: `const(2.5)`, `const_grid(0.5,0.25)`; bare names default to 1.
pub fn builtin(name: &str) -> Result<DoubleSequence> {
    let (base, args) = parse_call(name)?;
    let arity_err = || Error::UnknownName(name.to_string());
    let seq: DoubleSequence = match (base, args.as_slice()) {
        ("log_max", []) => log_max().into(),
        ("harmonic_sum", []) => harmonic_sum().into(),
        ("alternating", []) => alternating().into(),
        ("row_spike", []) => row_spike().into(),
        ("const", []) => constant(1.0).into(),
        ("const", [c]) => constant(*c).into(),
        ("recip_grid", []) => recip_grid().into(),
        ("log_grid", []) => log_grid().into(),
        ("shifted_grid", []) => shifted_grid().into(),
        ("const_grid", []) => const_grid(1.0, 1.0).into(),
        ("const_grid", [c, d]) => const_grid(*c, *d).into(),
        _ => return Err(arity_err()),
    };
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let s = log_max();
        assert_eq!(s.eval(IndexPair::new(2, 3).unwrap()), 3f64.ln());
        assert_eq!(s.eval(IndexPair::new(1, 1).unwrap()), 0.0);
        assert_eq!(constant(5.0).eval(IndexPair::new(7, 9).unwrap()), 5.0);
    }

    #[test]
    fn log_max_rows_match_display() {
        // row 3 reads s_3 s_3 s_3 s_4 ...
        let s = log_max();
        let row: Vec<f64> = (1..=4).map(|l| s.at(3, l)).collect();
        let ln = |n: f64| n.ln();
        assert_eq!(row, vec![ln(3.0), ln(3.0), ln(3.0), ln(4.0)]);
        // row 2 reads s_2 s_2 s_3 s_4
        let row: Vec<f64> = (1..=4).map(|l| s.at(2, l)).collect();
        assert_eq!(row, vec![ln(2.0), ln(2.0), ln(3.0), ln(4.0)]);
    }

    #[test]
    fn zero_index_rejected() {
        assert_eq!(
            IndexPair::new(0, 3),
            Err(Error::InvalidIndex { k: 0, l: 3 })
        );
    }

    #[test]
    fn gallery_lookup() {
        for name in GALLERY {
            assert!(builtin(name).is_ok(), "{name}");
        }
        let c = builtin("const(2.5)").unwrap();
        assert_eq!(c.as_scalar().unwrap().at(4, 4), 2.5);
        let g = builtin("const_grid(0.5, 0.25)").unwrap();
        let g = g.as_grid().unwrap();
        assert_eq!(g.point(IndexPair::new(3, 8).unwrap()).unwrap(), (0.5, 0.25));
        assert!(matches!(builtin("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("const(1,2)"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("const(x)"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn grids_stay_in_their_domains() {
        for g in [
            recip_grid(),
            log_grid(),
            shifted_grid(),
            const_grid(2.0, 3.0),
        ] {
            g.validate(500).unwrap();
        }
    }

    #[test]
    fn grid_domain_violation_reports_index() {
        let g = FactorableGridSequence::new(
            "escapes",
            |k| k as f64,
            |_| 0.5,
            DomainBox::closed_square(0.0, 3.0),
        );
        match g.validate(10) {
            Err(Error::Domain { k, .. }) => assert_eq!(k, 4),
            other => panic!("expected domain error, got {other:?}"),
        }
    }
}
