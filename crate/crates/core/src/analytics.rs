//! Scalar observables of the register state: success probability, entropies,
//! relative entropy of coherence and its trade-off with `P_suc`, plus the
//! small-γ peak estimates.
//!
//! All entropies are in nats. The computational-basis diagonal of the state
//! takes only two distinct values, so coherence is evaluated from that block
//! structure and `N` is never materialized.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{BlochState, SearchParams};
use crate::spectral::{spectral_data, Regime};

/// Probabilities this close to 0 or 1 are snapped before taking logarithms.
const LOG_SNAP: f64 = 1e-15;

/// Norm slack tolerated by the eigenvalue computation.
const EIGEN_NORM_SLACK: f64 = 1e-9;

/// `x ln x` with the `0 ln 0 = 0` convention.
fn xlnx(x: f64) -> f64 {
    if x <= LOG_SNAP {
        0.0
    } else {
        x * x.ln()
    }
}

fn snap_probability(p: f64) -> f64 {
    if p < LOG_SNAP {
        0.0
    } else if p > 1.0 - LOG_SNAP {
        1.0
    } else {
        p
    }
}

/// `P_suc = (1 − r_z)/2`, clamped to `[0, 1]`.
pub fn success_probability(state: BlochState) -> f64 {
    ((1.0 - state.r_z) / 2.0).clamp(0.0, 1.0)
}

/// Nonzero eigenvalues `(1 ± ‖r‖)/2` of the register density matrix.
pub fn state_eigenvalues(state: BlochState) -> Result<(f64, f64)> {
    let norm = state.norm();
    if norm.is_nan() || norm > 1.0 + EIGEN_NORM_SLACK {
        return Err(Error::Physicality(format!(
            "Bloch vector norm {norm} exceeds 1"
        )));
    }
    let norm = norm.min(1.0);
    Ok(((1.0 + norm) / 2.0, (1.0 - norm) / 2.0))
}

/// Von Neumann entropy `S₁` in nats.
pub fn von_neumann_entropy(state: BlochState) -> Result<f64> {
    let (a, b) = state_eigenvalues(state)?;
    Ok(-(xlnx(a) + xlnx(b)))
}

/// Binary Shannon entropy `h₁(p)` in nats.
pub fn binary_entropy(p: f64) -> f64 {
    let p = snap_probability(p);
    -(xlnx(p) + xlnx(1.0 - p))
}

/// Shannon entropy of the computational-basis diagonal,
/// `P ln(M/P) + (1 − P) ln((N − M)/(1 − P))`.
fn diagonal_entropy(p: f64, params: &SearchParams) -> f64 {
    let p = snap_probability(p);
    let m = params.n_marked() as f64;
    let rest = (params.n_items() - params.n_marked()) as f64;
    let marked = if p == 0.0 { 0.0 } else { p * (m / p).ln() };
    let unmarked = if p == 1.0 {
        0.0
    } else {
        (1.0 - p) * (rest / (1.0 - p)).ln()
    };
    marked + unmarked
}

/// Relative entropy of coherence `C₁`: diagonal entropy minus `S₁`.
pub fn coherence_relative_entropy(state: BlochState, params: &SearchParams) -> Result<f64> {
    let s1 = von_neumann_entropy(state)?;
    Ok(diagonal_entropy(success_probability(state), params) - s1)
}

/// Computational-basis diagonal of the register state, stored as its two
/// distinct values: `(1 − P)/(N − M)` repeated `N − M` times and `P/M`
/// repeated `M` times.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalProfile {
    pub p_suc: f64,
    pub n_items: u64,
    pub n_marked: u64,
}

impl DiagonalProfile {
    pub fn new(state: BlochState, params: &SearchParams) -> Self {
        Self {
            p_suc: success_probability(state),
            n_items: params.n_items(),
            n_marked: params.n_marked(),
        }
    }

    pub fn unmarked_entry(&self) -> f64 {
        (1.0 - self.p_suc) / (self.n_items - self.n_marked) as f64
    }

    pub fn marked_entry(&self) -> f64 {
        self.p_suc / self.n_marked as f64
    }

    /// Sum of all `N` diagonal entries.
    pub fn total(&self) -> f64 {
        (self.n_items - self.n_marked) as f64 * self.unmarked_entry()
            + self.n_marked as f64 * self.marked_entry()
    }

    /// Value at computational-basis index `x`, with marked items placed last.
    pub fn entry(&self, x: u64) -> Option<f64> {
        if x >= self.n_items {
            None
        } else if x < self.n_items - self.n_marked {
            Some(self.unmarked_entry())
        } else {
            Some(self.marked_entry())
        }
    }
}

/// The chain `h₁(P) ≤ C₁ + S₁ ≤ P ln(M/P) + (1 − P) ln((N − M)/(1 − P))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TradeoffBounds {
    pub lower: f64,
    pub upper: f64,
    pub c1_plus_s1: f64,
}

impl TradeoffBounds {
    pub fn holds(&self, tol: f64) -> bool {
        self.lower - tol <= self.c1_plus_s1 && self.c1_plus_s1 <= self.upper + tol
    }

    pub fn is_saturated(&self, tol: f64) -> bool {
        (self.c1_plus_s1 - self.upper).abs() <= tol
    }
}

pub fn tradeoff_bounds(state: BlochState, params: &SearchParams) -> Result<TradeoffBounds> {
    let p = success_probability(state);
    let s1 = von_neumann_entropy(state)?;
    let c1 = coherence_relative_entropy(state, params)?;
    Ok(TradeoffBounds {
        lower: binary_entropy(p),
        upper: diagonal_entropy(p, params),
        c1_plus_s1: c1 + s1,
    })
}

/// Iteration count of the `k`-th success-probability peak, `(2k − 1)π/(2θ)`.
pub fn peak_iteration_estimate(params: &SearchParams, k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("peak index k starts at 1".into()));
    }
    Ok((2 * k - 1) as f64 * PI / (2.0 * params.theta()))
}

/// Small-angle form `(2k − 1)(π/4)√(N/M)` of [`peak_iteration_estimate`].
pub fn peak_iteration_small_angle(params: &SearchParams, k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("peak index k starts at 1".into()));
    }
    let ratio = params.n_items() as f64 / params.n_marked() as f64;
    Ok((2 * k - 1) as f64 * PI / 4.0 * ratio.sqrt())
}

/// Decay exponent `α = −(3/2) ln(1 − γ)` of the transient envelope.
pub fn decay_rate(params: &SearchParams) -> f64 {
    -1.5 * params.wamma().ln()
}

/// Predicted ratio of transient amplitudes `s_z(t_k) / s_z'(t_k')` at the
/// `k`-th peak for two instances that differ either in `γ` or in `N`.
///
/// When only `γ` differs the ratio is `exp{(α' − α) t_k}`. When only `N`
/// differs it is `exp{(2k − 1)πα(√N' − √N)/(4√M)}`. Both instances must be in
/// the oscillatory regime.
pub fn peak_decay_ratio(a: &SearchParams, b: &SearchParams, k: u32) -> Result<f64> {
    for p in [a, b] {
        if spectral_data(p).regime != Regime::Trigonometric {
            return Err(Error::Domain(format!(
                "peak decay ratio needs oscillatory dynamics; (N={}, M={}, gamma={}) is not",
                p.n_items(),
                p.n_marked(),
                p.gamma()
            )));
        }
    }
    if a.n_marked() != b.n_marked() {
        return Err(Error::Domain("instances must share n_marked".into()));
    }
    let same_n = a.n_items() == b.n_items();
    let same_gamma = a.gamma() == b.gamma();
    match (same_n, same_gamma) {
        (true, _) => {
            let t_k = peak_iteration_estimate(a, k)?;
            Ok(((decay_rate(b) - decay_rate(a)) * t_k).exp())
        }
        (false, true) => {
            let alpha = decay_rate(a);
            let m = a.n_marked() as f64;
            let dn = (b.n_items() as f64).sqrt() - (a.n_items() as f64).sqrt();
            Ok(((2 * k - 1) as f64 * PI * alpha * dn / (4.0 * m.sqrt())).exp())
        }
        (false, false) => Err(Error::Domain(
            "instances must differ in gamma or in n_items, not both".into(),
        )),
    }
}
