//! Double subsequences laid out on the square spiral
//!
//! ```text
//! x1  x2  x5  x10
//! x4  x3  x6  .
//! x9  x8  x7  .
//! ```
//!
//! Shell `m` fills column `m` downwards (rows `1..=m`), then row `m`
//! leftwards (columns `m-1..=1`).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::ScalarDoubleSequence;

fn ceil_sqrt(j: u64) -> u64 {
    let r = j.isqrt();
    if r * r == j {
        r
    } else {
        r + 1
    }
}

/// Grid position `(row, col)` of the `j`-th term, `j >= 1`.
pub fn spiral_position(j: u64) -> (u64, u64) {
    assert!(j >= 1, "spiral positions are 1-based");
    let m = ceil_sqrt(j);
    let r = j - (m - 1) * (m - 1);
    if r <= m {
        (r, m)
    } else {
        (m, 2 * m - r)
    }
}

/// Inverse of [`spiral_position`].
pub fn spiral_index(row: u64, col: u64) -> u64 {
    assert!(row >= 1 && col >= 1, "spiral positions are 1-based");
    let m = row.max(col);
    let base = (m - 1) * (m - 1);
    if col == m {
        base + row
    } else {
        base + 2 * m - col
    }
}

type IndexGen = Arc<dyn Fn(u64) -> u64 + Send + Sync>;

/// Row indices `n_j` and column indices `k_j` choosing `x_j = x_{n_j, k_j}`.
#[derive(Clone)]
pub struct SubsequenceSelector {
    n_seq: IndexGen,
    k_seq: IndexGen,
}

impl SubsequenceSelector {
    /// Both generators must be strictly increasing and positive; this is
    /// checked on the prefix each construction uses.
    pub fn new(
        n_seq: impl Fn(u64) -> u64 + Send + Sync + 'static,
        k_seq: impl Fn(u64) -> u64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            n_seq: Arc::new(n_seq),
            k_seq: Arc::new(k_seq),
        }
    }

    /// `n_j = k_j = j`
    pub fn diagonal() -> Self {
        Self::new(|j| j, |j| j)
    }

    /// Explicit prefixes; `j` past the end is out of range and rejected.
    pub fn from_lists(n: Vec<u64>, k: Vec<u64>) -> Self {
        let n = Arc::new(n);
        let k = Arc::new(k);
        Self::new(
            move |j| n.get(j as usize - 1).copied().unwrap_or(0),
            move |j| k.get(j as usize - 1).copied().unwrap_or(0),
        )
    }

    pub fn n(&self, j: u64) -> u64 {
        (self.n_seq)(j)
    }

    pub fn k(&self, j: u64) -> u64 {
        (self.k_seq)(j)
    }

    /// Rejects a prefix of length `count` that is not positive and strictly increasing.
    pub fn validate(&self, count: u64) -> Result<()> {
        let (mut prev_n, mut prev_k) = (0u64, 0u64);
        for j in 1..=count {
            let (n, k) = (self.n(j), self.k(j));
            if n <= prev_n || k <= prev_k {
                return Err(Error::InvalidSelector { j });
            }
            (prev_n, prev_k) = (n, k);
        }
        Ok(())
    }
}

/// Finite spiral matrix; `None` marks cells not yet reached.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpiralMatrix {
    pub side: u64,
    pub cells: Vec<Vec<Option<f64>>>,
}

impl SpiralMatrix {
    pub fn get(&self, row: u64, col: u64) -> Option<f64> {
        self.cells[(row - 1) as usize][(col - 1) as usize]
    }

    /// Row-major `(k, l, value)` triples, including empty cells.
    pub fn triples(&self) -> impl Iterator<Item = (u64, u64, Option<f64>)> + '_ {
        self.cells.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, v)| (r as u64 + 1, c as u64 + 1, *v))
        })
    }
}

/// Places `x_{n_j, k_j}` for `j = 1..=count` at [`spiral_position`]`(j)` in
/// the smallest square that holds them.
pub fn build_double_subsequence(
    seq: &ScalarDoubleSequence,
    selector: &SubsequenceSelector,
    count: u64,
) -> Result<SpiralMatrix> {
    if count == 0 {
        return Err(Error::InvalidParams("count must be at least 1".into()));
    }
    selector.validate(count)?;
    let side = ceil_sqrt(count);
    let mut cells = vec![vec![None; side as usize]; side as usize];
    for j in 1..=count {
        let (row, col) = spiral_position(j);
        cells[(row - 1) as usize][(col - 1) as usize] = Some(seq.at(selector.n(j), selector.k(j)));
    }
    Ok(SpiralMatrix { side, cells })
}
