//! Closed-form evaluation through Chebyshev polynomials in both spectral
//! regimes, checked against the step-by-step map.

use noisy_grover::make_params;
use noisy_grover::spectral::{closed_form_state, regime_boundary_gamma, spectral_data};
use noisy_grover::trajectory::state_at;

fn main() -> noisy_grover::Result<()> {
    let base = make_params(128, 2, 0.0)?;
    let boundary = regime_boundary_gamma(&base);
    println!("N=128, M=2: regime boundary gamma* = {boundary:.6}");

    for gamma in [0.01, 0.3, 0.9] {
        let params = base.with_gamma(gamma)?;
        let sd = spectral_data(&params);
        println!(
            "gamma={gamma}: {:?}, lambda+ = {:.6}, xi = {:.6}",
            sd.regime, sd.lambda_plus, sd.chebyshev_argument
        );
        for t in [1, 10, 100, 1000] {
            let closed = closed_form_state(&params, t)?;
            let iterated = state_at(&params, t);
            println!(
                "  t={t:<5} r=({:+.10}, {:+.10})  |diff|={:.1e}",
                closed.r_x,
                closed.r_z,
                closed.distance(&iterated)
            );
        }
    }

    let degenerate = base.with_gamma(boundary)?;
    match closed_form_state(&degenerate, 5) {
        Err(e) => println!("gamma*: {e}"),
        Ok(_) => println!("gamma*: closed form unexpectedly accepted"),
    }
    Ok(())
}
