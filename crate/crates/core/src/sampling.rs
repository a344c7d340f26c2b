//! Deterministic point sampling over a [`DomainBox`].
//!
//! Interior points follow the additive R2 low-discrepancy sequence with a
//! seeded random shift; the rest are pulled towards edges and corners with a
//! power law, where non-uniform continuity usually shows up.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::DomainBox;

/// Plastic-number increments of the R2 sequence.
const R2_A1: f64 = 0.754_877_666_246_692_7;
const R2_A2: f64 = 0.569_840_290_998_053_2;

/// Exponent of the edge bias; larger values crowd samples closer to edges.
const EDGE_POWER: i32 = 8;

pub struct DomainSampler {
    domain: DomainBox,
    rng: ChaCha8Rng,
    shift: (f64, f64),
    drawn: u64,
}

impl DomainSampler {
    pub fn new(domain: DomainBox, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shift = (rng.random::<f64>(), rng.random::<f64>());
        Self {
            domain,
            rng,
            shift,
            drawn: 0,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn along(&mut self, lo: f64, width: f64, mode: u8) -> f64 {
        match mode {
            0 => lo + width * self.rng.random::<f64>().powi(EDGE_POWER),
            1 => lo + width - width * self.rng.random::<f64>().powi(EDGE_POWER),
            _ => lo + width * self.rng.random::<f64>(),
        }
    }

    /// Next point strictly inside the domain (open edges respected).
    pub fn next_point(&mut self) -> (f64, f64) {
        let (x, y) = (self.domain.x, self.domain.y);
        loop {
            let i = self.drawn;
            self.drawn += 1;
            // 0: R2 interior; 1–4: one edge; 5–8: one corner
            let p = match i % 9 {
                0 => {
                    let u = (self.shift.0 + R2_A1 * (i / 9) as f64).fract();
                    let v = (self.shift.1 + R2_A2 * (i / 9) as f64).fract();
                    (x.lo + x.width() * u, y.lo + y.width() * v)
                }
                c @ 1..=4 => {
                    let (mx, my) = match c {
                        1 => (0, 2),
                        2 => (1, 2),
                        3 => (2, 0),
                        _ => (2, 1),
                    };
                    (
                        self.along(x.lo, x.width(), mx),
                        self.along(y.lo, y.width(), my),
                    )
                }
                c => {
                    let (mx, my) = match c {
                        5 => (0, 0),
                        6 => (0, 1),
                        7 => (1, 0),
                        _ => (1, 1),
                    };
                    (
                        self.along(x.lo, x.width(), mx),
                        self.along(y.lo, y.width(), my),
                    )
                }
            };
            if self.domain.contains(p.0, p.1) {
                return p;
            }
        }
    }

    /// Unit direction: alternately along x, along y, diagonal, then random.
    pub fn next_direction(&mut self, i: u64) -> (f64, f64) {
        match i % 4 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (
                std::f64::consts::FRAC_1_SQRT_2,
                std::f64::consts::FRAC_1_SQRT_2,
            ),
            _ => {
                let theta = self.rng.random::<f64>() * std::f64::consts::TAU;
                (theta.cos(), theta.sin())
            }
        }
    }
}
