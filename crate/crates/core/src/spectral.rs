//! Closed-form solution of the damped Grover recursion.
//!
//! Writing `r(t) = s(t) + r*` with the fixed point
//! `r* = (1 − ϖ²)(I − ϖM)⁻¹(sin 2θ, cos 2θ)`, the transient obeys
//! `s(t) = ϖᵗ Mᵗ s(0)`. The eigenvalues of `M` are the roots of
//! `λ² − (1 + ϖ) cos 2θ λ + ϖ = 0`, with discriminant
//! `Δ = (1 + ϖ)² cos² 2θ − 4ϖ`:
//!
//! * `Δ < 0`: complex pair `λ± = √ϖ e^{±iφ}`, oscillating transient written
//!   with `U_t(cos φ)`;
//! * `Δ > 0`: two real roots `λ± = √ϖ e^{±ϕ}`, overdamped transient written
//!   with `U_t(cosh ϕ)`;
//! * `Δ ≈ 0`: a double root. No closed form is offered there and callers
//!   should use the iterative engine.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{initial_state, BlochState, SearchParams};

/// Relative width of the degenerate band: `|Δ| ≤ DEGENERATE_TOL·(1 + ϖ)²`.
pub const DEGENERATE_TOL: f64 = 1e-10;

/// Tolerance for algebraic identities such as the Vieta relations.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

/// Relative tolerance for closed-form against iterated states.
pub const EQUIVALENCE_REL_TOL: f64 = 1e-9;

/// Imaginary parts below this are treated as rounding residue.
const IMAG_RESIDUE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Complex-conjugate eigenvalues, damped oscillations.
    Trigonometric,
    /// Distinct real eigenvalues, overdamped decay.
    Hyperbolic,
    /// Eigenvalues coincide within [`DEGENERATE_TOL`].
    Degenerate,
}

/// Eigen-structure of the iteration matrix for one parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralData {
    pub lambda_plus: Complex64,
    pub lambda_minus: Complex64,
    pub regime: Regime,
    /// φ = arg λ₊ in the trigonometric regime, ϕ = acosh|ξ| in the
    /// hyperbolic regime (infinite when ϖ = 0), NaN when degenerate.
    pub angle: f64,
    /// Δ = (1 + ϖ)² cos² 2θ − 4ϖ.
    pub discriminant: f64,
    /// ξ = (1 + ϖ) cos 2θ / (2√ϖ), the argument of the Chebyshev polynomials.
    pub chebyshev_argument: f64,
}

pub fn spectral_data(params: &SearchParams) -> SpectralData {
    let w = params.wamma();
    let b = (1.0 + w) * params.cos_2theta();
    let discriminant = b * b - 4.0 * w;
    let band = DEGENERATE_TOL * (1.0 + w) * (1.0 + w);
    let regime = if discriminant < -band {
        Regime::Trigonometric
    } else if discriminant > band {
        Regime::Hyperbolic
    } else {
        Regime::Degenerate
    };

    let (lambda_plus, lambda_minus) = if discriminant < 0.0 {
        let im = (-discriminant).sqrt() / 2.0;
        (Complex64::new(b / 2.0, im), Complex64::new(b / 2.0, -im))
    } else {
        // the larger-magnitude root first, the other from λ₊λ₋ = ϖ
        let root = discriminant.sqrt();
        let q = (b + root.copysign(b)) / 2.0;
        let other = if q == 0.0 { 0.0 } else { w / q };
        if b >= 0.0 {
            (Complex64::new(q, 0.0), Complex64::new(other, 0.0))
        } else {
            (Complex64::new(other, 0.0), Complex64::new(q, 0.0))
        }
    };

    let chebyshev_argument = if w > 0.0 {
        b / (2.0 * w.sqrt())
    } else {
        b.signum() * f64::INFINITY
    };
    let angle = match regime {
        Regime::Trigonometric => lambda_plus.arg(),
        Regime::Hyperbolic => chebyshev_argument.abs().acosh(),
        Regime::Degenerate => f64::NAN,
    };

    SpectralData {
        lambda_plus,
        lambda_minus,
        regime,
        angle,
        discriminant,
        chebyshev_argument,
    }
}

/// Damping strength at which the spectrum becomes degenerate,
/// `γ* = 2|sin 2θ| / (1 + |sin 2θ|)`. Smaller `γ` is oscillatory, larger `γ`
/// overdamped.
pub fn regime_boundary_gamma(params: &SearchParams) -> f64 {
    let s = params.sin_2theta().abs();
    2.0 * s / (1.0 + s)
}

/// `x^t` for integer `t`, including negative bases.
fn signed_pow(x: f64, t: u64) -> f64 {
    let magnitude = x.abs().powf(t as f64);
    if x < 0.0 && t % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Chebyshev polynomial of the second kind `U_t(ξ)`.
///
/// Uses `sin((t + 1)φ)/sin φ` with `ξ = cos φ` on `[−1, 1]` and the closed
/// expression `((ξ + √(ξ² − 1))^{t+1} − (ξ − √(ξ² − 1))^{t+1}) / (2√(ξ² − 1))`
/// outside it. Negative indices follow the same formulas, so `U₋₁ = 0` and
/// `U₋₂ = −1`.
///
/// # Panics
///
/// Panics if `t < −2`.
pub fn chebyshev_u(t: i64, xi: f64) -> f64 {
    assert!(t >= -2, "chebyshev_u is defined here for t >= -2, got {t}");
    match t {
        -2 => return -1.0,
        -1 => return 0.0,
        0 => return 1.0,
        _ => {}
    }
    let order = (t + 1) as u64;
    if xi.abs() <= 1.0 {
        if xi.abs() == 1.0 {
            // U_t(±1) = (±1)^t (t + 1)
            return signed_pow(xi, t as u64) * order as f64;
        }
        let phi = xi.acos();
        ((order as f64) * phi).sin() / phi.sin()
    } else {
        let root = (xi * xi - 1.0).sqrt();
        // pick the large root directly, the small one as its reciprocal
        let (big, small) = if xi > 0.0 {
            let big = xi + root;
            (big, 1.0 / big)
        } else {
            let big = xi - root;
            (big, 1.0 / big)
        };
        let numerator = signed_pow(big, order) - signed_pow(small, order);
        let denominator = big - small;
        numerator / denominator
    }
}

/// `f_a(ξ) = 1 − a(ξ + ξ²) + ξ³`; at `a = cos 2θ`, `ξ = ϖ` this is
/// `det(I − ϖM)`.
pub fn damping_polynomial(a: f64, xi: f64) -> f64 {
    1.0 - a * (xi + xi * xi) + xi * xi * xi
}

/// `det(I − ϖM) = 1 − (ϖ + ϖ²) cos 2θ + ϖ³`, strictly positive for `M ≥ 1`.
pub fn determinant(params: &SearchParams) -> f64 {
    damping_polynomial(params.cos_2theta(), params.wamma())
}

/// Minimizer `ξ₊(a) = (a + √(3a + a²))/3` of `f_a` on `[0, 1]`.
///
/// Accepts `0 < a ≤ 1`; the endpoint `a = 1` gives `ξ₊ = 1` where `f₁` vanishes.
pub fn critical_point(a: f64) -> Result<f64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "critical point needs 0 < a <= 1, got {a}"
        )));
    }
    Ok((a + (3.0 * a + a * a).sqrt()) / 3.0)
}

/// Limit of the Bloch vector for `t → ∞`:
/// `(1 − ϖ²)/det(I − ϖM) · (sin 2θ, cos 2θ − ϖ)`.
///
/// At `γ = 0` the prefactor vanishes and the origin is returned.
pub fn fixed_point(params: &SearchParams) -> Result<BlochState> {
    let w = params.wamma();
    let det = determinant(params);
    if det.is_nan() || det <= 0.0 {
        return Err(Error::Numerical(format!(
            "det(I - wM) = {det} is not positive for N={}, M={}, gamma={}",
            params.n_items(),
            params.n_marked(),
            params.gamma()
        )));
    }
    let factor = (1.0 - w * w) / det;
    Ok(BlochState::new(
        factor * params.sin_2theta(),
        factor * (params.cos_2theta() - w),
    ))
}

/// `lim P_suc(t) = 1/2 + (1 − ϖ²)(ϖ − cos 2θ) / (2 det(I − ϖM))` for `γ > 0`.
pub fn asymptotic_success(params: &SearchParams) -> Result<f64> {
    if params.gamma() == 0.0 {
        return Err(Error::Domain(
            "no limiting success probability at gamma = 0; the noiseless dynamics oscillates"
                .into(),
        ));
    }
    let w = params.wamma();
    let value = 0.5 + (1.0 - w * w) * (w - params.cos_2theta()) / (2.0 * determinant(params));
    Ok(value.clamp(0.0, 1.0))
}

/// Homogeneous part `s(t) = r(t) − r*` of the Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransientComponent {
    pub s_x: f64,
    pub s_z: f64,
    pub t: u64,
}

impl TransientComponent {
    pub fn new(s_x: f64, s_z: f64, t: u64) -> Self {
        Self { s_x, s_z, t }
    }

    /// Transient of `state` observed at iteration `t`.
    pub fn from_state(state: BlochState, params: &SearchParams, t: u64) -> Result<Self> {
        let fp = fixed_point(params)?;
        Ok(Self::new(state.r_x - fp.r_x, state.r_z - fp.r_z, t))
    }

    pub fn norm(&self) -> f64 {
        self.s_x.hypot(self.s_z)
    }

    pub fn as_state(&self) -> BlochState {
        BlochState::new(self.s_x, self.s_z)
    }
}

/// `s(0) = r(0) − r*` for the uniform initial state.
pub fn initial_transient(params: &SearchParams) -> Result<TransientComponent> {
    TransientComponent::from_state(initial_state(params), params, 0)
}

/// Advances `s0` by `t` iterations using the Chebyshev closed form.
///
/// Refuses the degenerate regime with [`Error::DegenerateRegime`].
pub fn closed_form_transient(
    params: &SearchParams,
    s0: TransientComponent,
    t: u64,
) -> Result<TransientComponent> {
    let spec = spectral_data(params);
    if spec.regime == Regime::Degenerate {
        return Err(Error::DegenerateRegime {
            discriminant: spec.discriminant,
        });
    }
    let at = s0.t + t;
    if t == 0 {
        return Ok(TransientComponent::new(s0.s_x, s0.s_z, at));
    }
    let w = params.wamma();
    if w == 0.0 {
        // ϖM is the zero matrix
        return Ok(TransientComponent::new(0.0, 0.0, at));
    }

    // ϖ^{3t/2}·U_{t+j}(ξ) for j = 0, −1, −2
    let (u_t, u_t1, u_t2) = match spec.regime {
        Regime::Trigonometric => {
            let xi = spec.chebyshev_argument.clamp(-1.0, 1.0);
            let scale = w.powf(1.5 * t as f64);
            let t = t as i64;
            (
                scale * chebyshev_u(t, xi),
                scale * chebyshev_u(t - 1, xi),
                scale * chebyshev_u(t - 2, xi),
            )
        }
        Regime::Hyperbolic => {
            // ϖ^{3/2}ζ^{±1} = ϖλ±, so the huge and tiny factors never meet
            let (lp, lm) = (spec.lambda_plus, spec.lambda_minus);
            if lp.im.abs() > IMAG_RESIDUE || lm.im.abs() > IMAG_RESIDUE {
                return Err(Error::Numerical(format!(
                    "hyperbolic regime with complex eigenvalues {lp}, {lm}"
                )));
            }
            let zeta = lp.re / w.sqrt();
            let mu_plus_t = signed_pow(w * lp.re, t);
            let mu_minus_t = signed_pow(w * lm.re, t);
            let denom = zeta - 1.0 / zeta;
            let scaled = |shift: i32| {
                (mu_plus_t * zeta.powi(shift) - mu_minus_t * zeta.powi(-shift)) / denom
            };
            (scaled(1), scaled(0), scaled(-1))
        }
        Regime::Degenerate => unreachable!(),
    };

    let c = params.cos_2theta();
    let s = params.sin_2theta();
    let root_w = w.sqrt();
    let s_x = root_w * u_t1 * (s0.s_z * s - s0.s_x * c) + u_t * s0.s_x;
    let s_z = u_t1 / root_w * (s0.s_z * w * c - s0.s_x * s) - u_t2 * s0.s_z;
    Ok(TransientComponent::new(s_x, s_z, at))
}

/// Bloch vector after `t` iterations from the closed form `r* + s(t)`.
pub fn closed_form_state(params: &SearchParams, t: u64) -> Result<BlochState> {
    let fp = fixed_point(params)?;
    let s0 = initial_transient(params)?;
    let s = closed_form_transient(params, s0, t)?;
    Ok(fp + s.as_state())
}

/// Leading small-γ behaviour of the transient,
/// `ϖ^{3t/2} (sin (2t + 1)θ, cos (2t + 1)θ)`.
pub fn small_gamma_transient(params: &SearchParams, t: u64) -> TransientComponent {
    let envelope = params.wamma().powf(1.5 * t as f64);
    let phase = (2 * t + 1) as f64 * params.theta();
    TransientComponent::new(envelope * phase.sin(), envelope * phase.cos(), t)
}
