//! Cross-check of the Bloch recursion against explicit density matrices
//! evolved with the Kraus operators.

use noisy_grover::make_params;
use noisy_grover::oracle::{evolve, kraus_completeness_error, verify_against_oracle};
use noisy_grover::trajectory::bloch_states;

fn main() -> noisy_grover::Result<()> {
    for gamma in [0.0, 0.05, 0.5, 1.0] {
        let params = make_params(64, 4, gamma)?;
        let states = bloch_states(&params, 500)?;
        let report = verify_against_oracle(&params, &states, 1e-11)?;
        println!(
            "gamma={gamma:<4} completeness {:.1e}, max Bloch error {:.1e} over {} steps",
            kraus_completeness_error(&params),
            report.max_bloch_error,
            report.steps
        );
    }

    let params = make_params(64, 4, 0.05)?;
    let rho = evolve(&params, 3)[3];
    println!(
        "rho(3) = [[{:.6}, {:.6}], [{:.6}, {:.6}]]",
        rho.rho_ww(),
        rho.rho_wm(),
        rho.rho_mw(),
        rho.rho_mm()
    );
    Ok(())
}
