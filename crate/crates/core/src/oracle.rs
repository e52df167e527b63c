//! Brute-force reference evolution on explicit 2×2 density matrices.
//!
//! Damping is applied through its Kraus operators and the oracle and diffusion
//! as unitary conjugations, all in plain complex matrix arithmetic that shares
//! nothing with the Bloch-vector engine in [`crate::model`]. Agreement between
//! the two is therefore a real check of the recursion.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{BlochState, SearchParams};

const HERMITIAN_TOL: f64 = 1e-14;
const TRACE_TOL: f64 = 1e-14;
const POSITIVITY_TOL: f64 = 1e-12;
const REALITY_TOL: f64 = 1e-12;
/// Trace slack accepted by `to_bloch`; hundreds of steps drift past 1e-14.
const CONVERSION_TRACE_TOL: f64 = 1e-12;

type Mat2 = [[Complex64; 2]; 2];

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

fn conjugate(op: &Mat2, rho: &Mat2) -> Mat2 {
    mat_mul(&mat_mul(op, rho), &adjoint(op))
}

fn mat_add(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [a[0][0] + b[0][0], a[0][1] + b[0][1]],
        [a[1][0] + b[1][0], a[1][1] + b[1][1]],
    ]
}

/// Density matrix in the `{|w⟩, |m⟩}` basis, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    entries: Mat2,
}

impl DensityMatrix2 {
    pub fn from_entries(
        rho_ww: Complex64,
        rho_wm: Complex64,
        rho_mw: Complex64,
        rho_mm: Complex64,
    ) -> Self {
        Self {
            entries: [[rho_ww, rho_wm], [rho_mw, rho_mm]],
        }
    }

    /// `|w⟩⟨w|`, the fully damped state.
    pub fn unmarked_projector() -> Self {
        Self::from_entries(c(1.0), c(0.0), c(0.0), c(0.0))
    }

    /// `ρ(0)` prepared by the Hadamard layer: the projector on
    /// `cos(θ/2)|w⟩ + sin(θ/2)|m⟩`.
    pub fn uniform(params: &SearchParams) -> Self {
        let ratio = params.marked_fraction();
        let amp_w = (1.0 - ratio).sqrt();
        let amp_m = ratio.sqrt();
        Self::from_entries(
            c(amp_w * amp_w),
            c(amp_w * amp_m),
            c(amp_m * amp_w),
            c(amp_m * amp_m),
        )
    }

    pub fn rho_ww(&self) -> Complex64 {
        self.entries[0][0]
    }
    pub fn rho_wm(&self) -> Complex64 {
        self.entries[0][1]
    }
    pub fn rho_mw(&self) -> Complex64 {
        self.entries[1][0]
    }
    pub fn rho_mm(&self) -> Complex64 {
        self.entries[1][1]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn determinant(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// `⟨m|ρ|m⟩`.
    pub fn success_probability(&self) -> f64 {
        self.entries[1][1].re
    }

    /// Largest imaginary part over all four entries.
    pub fn max_imaginary(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// Checks Hermiticity, unit trace and positive semidefiniteness.
    pub fn validate(&self) -> Result<()> {
        let skew = (self.rho_mw() - self.rho_wm().conj()).norm();
        if skew > HERMITIAN_TOL
            || self.rho_ww().im.abs() > HERMITIAN_TOL
            || self.rho_mm().im.abs() > HERMITIAN_TOL
        {
            return Err(Error::Physicality(format!(
                "density matrix is not Hermitian (skew {skew:e})"
            )));
        }
        let trace = self.trace();
        if (trace - c(1.0)).norm() > TRACE_TOL {
            return Err(Error::Physicality(format!("trace {trace} differs from 1")));
        }
        let det = self.determinant().re;
        if self.rho_ww().re < -POSITIVITY_TOL
            || self.rho_mm().re < -POSITIVITY_TOL
            || det < -POSITIVITY_TOL
        {
            return Err(Error::Physicality(format!(
                "density matrix is not positive (det {det:e})"
            )));
        }
        Ok(())
    }

    /// `ρ = (I + r_x σ_x + r_z σ_z)/2`.
    pub fn from_bloch(state: BlochState) -> Self {
        Self::from_entries(
            c((1.0 + state.r_z) / 2.0),
            c(state.r_x / 2.0),
            c(state.r_x / 2.0),
            c((1.0 - state.r_z) / 2.0),
        )
    }

    /// Inverse of [`DensityMatrix2::from_bloch`]; rejects non-Hermitian input,
    /// trace other than one and any `r_y` component.
    pub fn to_bloch(&self) -> Result<BlochState> {
        let skew = (self.rho_mw() - self.rho_wm().conj()).norm();
        if skew > HERMITIAN_TOL {
            return Err(Error::Physicality(format!(
                "density matrix is not Hermitian (skew {skew:e})"
            )));
        }
        let trace = self.trace();
        if (trace - c(1.0)).norm() > CONVERSION_TRACE_TOL {
            return Err(Error::Physicality(format!("trace {trace} differs from 1")));
        }
        let r_y = -2.0 * self.rho_wm().im;
        if r_y.abs() > REALITY_TOL {
            return Err(Error::Physicality(format!("nonzero r_y = {r_y:e}")));
        }
        Ok(BlochState::new(
            2.0 * self.rho_wm().re,
            (self.rho_ww() - self.rho_mm()).re,
        ))
    }
}

/// Kraus operators `E₀ = diag(1, √(1−γ))` and `E₁ = √γ |w⟩⟨m|`.
pub fn damping_kraus(params: &SearchParams) -> [Mat2; 2] {
    let gamma = params.gamma();
    let e0 = [[c(1.0), c(0.0)], [c(0.0), c((1.0 - gamma).sqrt())]];
    let e1 = [[c(0.0), c(gamma.sqrt())], [c(0.0), c(0.0)]];
    [e0, e1]
}

/// Largest entry of `Σ E_k† E_k − I`.
pub fn kraus_completeness_error(params: &SearchParams) -> f64 {
    let [e0, e1] = damping_kraus(params);
    let sum = mat_add(&mat_mul(&adjoint(&e0), &e0), &mat_mul(&adjoint(&e1), &e1));
    let mut worst: f64 = 0.0;
    for (i, row) in sum.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let id = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((z - c(id)).norm());
        }
    }
    worst
}

/// `Φ_E(ρ) = E₀ρE₀† + E₁ρE₁†`.
pub fn apply_kraus_damping(rho: &DensityMatrix2, params: &SearchParams) -> DensityMatrix2 {
    let [e0, e1] = damping_kraus(params);
    DensityMatrix2 {
        entries: mat_add(&conjugate(&e0, &rho.entries), &conjugate(&e1, &rho.entries)),
    }
}

/// Oracle `J = diag(+1, −1)`.
fn oracle_matrix() -> Mat2 {
    [[c(1.0), c(0.0)], [c(0.0), c(-1.0)]]
}

/// Diffusion `K = [[cos θ, sin θ], [sin θ, −cos θ]]`.
fn diffusion_matrix(params: &SearchParams) -> Mat2 {
    let ratio = params.marked_fraction();
    let cos_t = 1.0 - 2.0 * ratio;
    let sin_t = 2.0 * (ratio * (1.0 - ratio)).sqrt();
    [[c(cos_t), c(sin_t)], [c(sin_t), c(-cos_t)]]
}

/// One noisy Grover iteration `K Φ_E(J Φ_E(ρ) J†) K†`.
pub fn apply_unitary_step(rho: &DensityMatrix2, params: &SearchParams) -> DensityMatrix2 {
    let damped = apply_kraus_damping(rho, params);
    let flipped = DensityMatrix2 {
        entries: conjugate(&oracle_matrix(), &damped.entries),
    };
    let damped = apply_kraus_damping(&flipped, params);
    let out = DensityMatrix2 {
        entries: conjugate(&diffusion_matrix(params), &damped.entries),
    };
    debug_assert!(
        out.max_imaginary() <= REALITY_TOL || rho.max_imaginary() > REALITY_TOL,
        "real input acquired imaginary entries"
    );
    out
}

/// Density matrices for `t = 0..=steps` starting from the uniform superposition.
pub fn evolve(params: &SearchParams, steps: u64) -> Vec<DensityMatrix2> {
    let mut out = Vec::with_capacity(steps as usize + 1);
    let mut rho = DensityMatrix2::uniform(params);
    out.push(rho);
    for _ in 0..steps {
        rho = apply_unitary_step(&rho, params);
        out.push(rho);
    }
    out
}

/// Textbook noiseless success probability `sin²((2t + 1)θ/2)`.
pub fn noiseless_success(params: &SearchParams, t: u64) -> f64 {
    ((2 * t + 1) as f64 * params.theta() / 2.0).sin().powi(2)
}

/// Worst-case disagreement found by [`verify_against_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub steps: u64,
    pub max_bloch_error: f64,
    pub max_imaginary: f64,
}

/// Compares Bloch states `states[t]` with the density-matrix evolution.
///
/// Fails with [`Error::Verification`] when any component differs by more
/// than `tol` or an entry picks up an imaginary part.
pub fn verify_against_oracle(
    params: &SearchParams,
    states: &[BlochState],
    tol: f64,
) -> Result<OracleReport> {
    let steps = states.len().saturating_sub(1) as u64;
    let mut rho = DensityMatrix2::uniform(params);
    let mut report = OracleReport {
        steps,
        max_bloch_error: 0.0,
        max_imaginary: 0.0,
    };
    for (t, state) in states.iter().enumerate() {
        if t > 0 {
            rho = apply_unitary_step(&rho, params);
        }
        report.max_imaginary = report.max_imaginary.max(rho.max_imaginary());
        let reference = rho
            .to_bloch()
            .map_err(|e| Error::Verification(format!("t={t}: {e}")))?;
        let err = (reference.r_x - state.r_x)
            .abs()
            .max((reference.r_z - state.r_z).abs());
        report.max_bloch_error = report.max_bloch_error.max(err);
        if err.is_nan() || err > tol {
            return Err(Error::Verification(format!(
                "N={} M={} gamma={} t={t}: Bloch recursion differs from Kraus evolution by {err:e} (tol {tol:e})",
                params.n_items(),
                params.n_marked(),
                params.gamma()
            )));
        }
    }
    Ok(report)
}
