use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One coordinate interval of a [`DomainBox`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    /// `(lo, hi]`
    pub fn left_open(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_open: true,
            hi_open: false,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_open {
            v > self.lo
        } else {
            v >= self.lo
        };
        let below = if self.hi_open {
            v < self.hi
        } else {
            v <= self.hi
        };
        above && below
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' }
        )
    }
}

/// Rectangular set `X × Y` in the plane, each edge open or closed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainBox {
    pub x: Interval,
    pub y: Interval,
}

impl DomainBox {
    pub fn new(x: Interval, y: Interval) -> Result<Self> {
        if !(x.lo <= x.hi) || !(y.lo <= y.hi) {
            return Err(Error::InvalidParams(format!(
                "domain box needs lo <= hi on both axes, got {x} x {y}"
            )));
        }
        Ok(Self { x, y })
    }

    /// `[lo, hi]²`
    pub fn closed_square(lo: f64, hi: f64) -> Self {
        Self {
            x: Interval::closed(lo, hi),
            y: Interval::closed(lo, hi),
        }
    }

    /// `(lo, hi]²`
    pub fn left_open_square(lo: f64, hi: f64) -> Self {
        Self {
            x: Interval::left_open(lo, hi),
            y: Interval::left_open(lo, hi),
        }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.x.contains(x) && self.y.contains(y)
    }

    pub fn is_bounded(&self) -> bool {
        self.x.is_bounded() && self.y.is_bounded()
    }

    pub fn ensure_bounded(&self) -> Result<()> {
        if self.is_bounded() {
            Ok(())
        } else {
            Err(Error::UnboundedDomain(self.to_string()))
        }
    }

    /// Whether `other` is a subset of `self`.
    pub fn covers(&self, other: &DomainBox) -> bool {
        fn covers_interval(outer: &Interval, inner: &Interval) -> bool {
            let lo_ok =
                inner.lo > outer.lo || (inner.lo == outer.lo && (!outer.lo_open || inner.lo_open));
            let hi_ok =
                inner.hi < outer.hi || (inner.hi == outer.hi && (!outer.hi_open || inner.hi_open));
            lo_ok && hi_ok
        }
        covers_interval(&self.x, &other.x) && covers_interval(&self.y, &other.y)
    }
}

impl fmt::Display for DomainBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.x, self.y)
    }
}

/// Euclidean distance in the plane from coordinate differences.
///
/// Every planar gap in the crate goes through this function, so a reported
/// distance re-evaluates to the same bits.
#[inline]
pub fn planar_distance(dx: f64, dy: f64) -> f64 {
    (dx * dx + dy * dy).sqrt()
}
