//! Success probability under increasing damping, with the first peak and the
//! long-time limit of each curve.

use noisy_grover::spectral::asymptotic_success;
use noisy_grover::trajectory::local_maxima;
use noisy_grover::{make_params, run_trajectory};

fn main() -> noisy_grover::Result<()> {
    for gamma in [0.0, 0.01, 0.02, 0.05, 0.1] {
        let params = make_params(512, 2, gamma)?;
        let points = run_trajectory(&params, 300)?;
        let probs: Vec<f64> = points.iter().map(|p| p.p_suc).collect();
        let first = local_maxima(&probs)[0];
        let limit = asymptotic_success(&params)
            .map(|a| format!("{a:.4}"))
            .unwrap_or_else(|_| "-".into());
        println!(
            "gamma={gamma:<5} first peak t={first:>3} P={:.4}  P(300)={:.4}  limit={limit}",
            probs[first], probs[300]
        );
    }
    Ok(())
}
