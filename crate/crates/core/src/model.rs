//! Problem parameters and the per-iteration Bloch-vector dynamics.
//!
//! The register lives in the two-dimensional span of the uniform
//! superpositions over unmarked (`|w⟩`) and marked (`|m⟩`) strings. In that
//! basis the state is a qubit whose Bloch vector keeps `r_y = 0` for the whole
//! evolution, so only `(r_x, r_z)` is tracked. One noisy Grover iteration is
//! damping, oracle reflection, damping again, then diffusion.

use crate::error::{Error, Result};

/// Slack allowed on `r_x² + r_z² ≤ 1` before a state counts as unphysical.
pub const NORM_SLACK: f64 = 1e-12;

/// A validated problem instance: `N` items, `M` marked, damping strength `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    n_items: u64,
    n_marked: u64,
    gamma: f64,
    theta: f64,
    wamma: f64,
}

impl SearchParams {
    /// Validates `(N, M, γ)` and derives the Grover angle.
    ///
    /// `N` must be a power of two with `N ≥ 4`, `1 ≤ M ≤ N/2` and
    /// `0 ≤ γ ≤ 1`. The angle satisfies `sin²(θ/2) = M/N`.
    pub fn new(n_items: u64, n_marked: u64, gamma: f64) -> Result<Self> {
        if n_items < 4 || !n_items.is_power_of_two() {
            return Err(Error::Domain(format!(
                "n_items must be a power of two and at least 4, got {n_items}"
            )));
        }
        if n_marked < 1 || n_marked > n_items / 2 {
            return Err(Error::Domain(format!(
                "n_marked must lie in [1, {}], got {n_marked}",
                n_items / 2
            )));
        }
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::Domain(format!(
                "gamma must lie in [0, 1], got {gamma}"
            )));
        }
        let ratio = n_marked as f64 / n_items as f64;
        Ok(Self {
            n_items,
            n_marked,
            gamma,
            theta: 2.0 * ratio.sqrt().asin(),
            wamma: 1.0 - gamma,
        })
    }

    /// Same instance with a different damping strength.
    pub fn with_gamma(&self, gamma: f64) -> Result<Self> {
        Self::new(self.n_items, self.n_marked, gamma)
    }

    pub fn n_items(&self) -> u64 {
        self.n_items
    }

    pub fn n_marked(&self) -> u64 {
        self.n_marked
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Grover angle θ in `(0, π/2]`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Survival factor `ϖ = 1 − γ`.
    pub fn wamma(&self) -> f64 {
        self.wamma
    }

    /// `M/N`, the success probability of the initial state.
    pub fn marked_fraction(&self) -> f64 {
        self.n_marked as f64 / self.n_items as f64
    }

    /// `cos 2θ`, evaluated from `cos θ = 1 − 2M/N` to avoid trig round-off.
    pub fn cos_2theta(&self) -> f64 {
        let c = 1.0 - 2.0 * self.marked_fraction();
        2.0 * c * c - 1.0
    }

    pub fn sin_2theta(&self) -> f64 {
        let f = self.marked_fraction();
        let sin_theta = 2.0 * (f * (1.0 - f)).sqrt();
        2.0 * sin_theta * (1.0 - 2.0 * f)
    }
}

/// Free-function form of [`SearchParams::new`].
pub fn make_params(n_items: u64, n_marked: u64, gamma: f64) -> Result<SearchParams> {
    SearchParams::new(n_items, n_marked, gamma)
}

/// Effective Bloch vector `(r_x, r_z)` in the `{|w⟩, |m⟩}` picture.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochState {
    pub r_x: f64,
    pub r_z: f64,
}

impl BlochState {
    pub const fn new(r_x: f64, r_z: f64) -> Self {
        Self { r_x, r_z }
    }

    pub fn norm(&self) -> f64 {
        self.r_x.hypot(self.r_z)
    }

    pub fn is_physical(&self) -> bool {
        self.r_x * self.r_x + self.r_z * self.r_z <= 1.0 + NORM_SLACK
    }

    pub fn distance(&self, other: &BlochState) -> f64 {
        (self.r_x - other.r_x).hypot(self.r_z - other.r_z)
    }
}

impl std::ops::Add for BlochState {
    type Output = BlochState;
    fn add(self, rhs: BlochState) -> BlochState {
        BlochState::new(self.r_x + rhs.r_x, self.r_z + rhs.r_z)
    }
}

impl std::ops::Sub for BlochState {
    type Output = BlochState;
    fn sub(self, rhs: BlochState) -> BlochState {
        BlochState::new(self.r_x - rhs.r_x, self.r_z - rhs.r_z)
    }
}

/// Bloch vector of the uniform superposition: `(sin θ, cos θ)`.
pub fn initial_state(params: &SearchParams) -> BlochState {
    let (s, c) = params.theta.sin_cos();
    BlochState::new(s, c)
}

/// Amplitude damping toward `|w⟩`: `(√ϖ r_x, γ + ϖ r_z)`.
pub fn apply_damping(state: BlochState, params: &SearchParams) -> BlochState {
    if params.gamma == 0.0 {
        return state;
    }
    BlochState::new(
        params.wamma.sqrt() * state.r_x,
        params.gamma + params.wamma * state.r_z,
    )
}

/// Oracle reflection `diag(−1, +1)` on the Bloch vector.
pub fn apply_oracle(state: BlochState) -> BlochState {
    BlochState::new(-state.r_x, state.r_z)
}

/// Inversion about the mean, a reflection through angle `2θ`.
pub fn apply_diffusion(state: BlochState, params: &SearchParams) -> BlochState {
    let c = params.cos_2theta();
    let s = params.sin_2theta();
    BlochState::new(
        -c * state.r_x + s * state.r_z,
        s * state.r_x + c * state.r_z,
    )
}

/// One noisy Grover iteration, built by composing the four channels.
pub fn iterate_once(state: BlochState, params: &SearchParams) -> BlochState {
    let damped = apply_damping(state, params);
    let flipped = apply_oracle(damped);
    let damped = apply_damping(flipped, params);
    apply_diffusion(damped, params)
}

/// One noisy Grover iteration written as the affine map `ϖ·M·r + (1 − ϖ²)·(sin 2θ, cos 2θ)`.
///
/// `M = [[cos 2θ, ϖ sin 2θ], [−sin 2θ, ϖ cos 2θ]]`.
pub fn iterate_affine(state: BlochState, params: &SearchParams) -> BlochState {
    let w = params.wamma;
    let c = params.cos_2theta();
    let s = params.sin_2theta();
    let drive = 1.0 - w * w;
    BlochState::new(
        w * (c * state.r_x + w * s * state.r_z) + drive * s,
        w * (-s * state.r_x + w * c * state.r_z) + drive * c,
    )
}
