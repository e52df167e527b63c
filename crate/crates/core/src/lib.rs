//! Exact simulation of Grover search with amplitude-damping noise in the
//! oracle wires.
//!
//! The register is reduced to an effective qubit spanned by the uniform
//! superpositions of unmarked and marked items. One noisy iteration is an
//! affine map on the Bloch vector `(r_x, r_z)`, which this crate iterates
//! ([`model`], [`trajectory`]), solves in closed form ([`spectral`]), checks
//! against an independent density-matrix evolution ([`oracle`]) and turns into
//! observables such as the success probability and the relative entropy of
//! coherence ([`analytics`]). [`sweep`] drives parameter sweeps and writes CSV.
//!
//! ```
//! use noisy_grover::{make_params, run_trajectory, spectral::asymptotic_success};
//!
//! let params = make_params(128, 2, 0.01)?;
//! let points = run_trajectory(&params, 6)?;
//! assert!(points[6].p_suc > 0.9);
//! assert!((asymptotic_success(&params)? - 0.5046).abs() < 1e-3);
//! # Ok::<(), noisy_grover::Error>(())
//! ```

pub mod analytics;
pub mod error;
pub mod model;
pub mod oracle;
pub mod spectral;
pub mod sweep;
pub mod trajectory;

pub use error::{Error, Result};
pub use model::{make_params, BlochState, SearchParams};
pub use trajectory::{run_trajectory, TrajectoryPoint};
