//! Finite-horizon checks for double sequences: Cauchy and Pringsheim
//! convergence, slow oscillation, spiral double subsequences, and the action
//! of two-variable functions on grid sequences.

// `!(gap < eps)` is how NaN counts as a violation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod campaign;
pub mod convergence;
pub mod domain;
pub mod error;
pub mod functions;
pub mod oscillation;
pub mod report;
pub mod sampling;
pub mod sequence;
pub mod subsequence;

pub use domain::{planar_distance, DomainBox, Interval};
pub use error::{Error, Result};
pub use functions::{Function2, FunctionFamily};
pub use oscillation::{OscillationCertificate, OscillationParams, Witness, WitnessSearch};
pub use report::{ConvergenceReport, Counterexample, Status};
pub use sequence::{DoubleSequence, FactorableGridSequence, IndexPair, ScalarDoubleSequence};
pub use subsequence::{SpiralMatrix, SubsequenceSelector};
