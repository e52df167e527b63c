//! Relative entropy of coherence and von Neumann entropy along a noisy run,
//! with the bounds that tie them to the success probability.

use noisy_grover::analytics::tradeoff_bounds;
use noisy_grover::{make_params, run_trajectory};

fn main() -> noisy_grover::Result<()> {
    let params = make_params(128, 2, 0.02)?;
    println!(
        "{:>3} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "t", "P", "C1", "S1", "h(P)", "upper"
    );
    for point in run_trajectory(&params, 24)? {
        let b = tradeoff_bounds(point.state, &params)?;
        println!(
            "{:>3} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>8.5}",
            point.t, point.p_suc, point.c1, point.s1, b.lower, b.upper
        );
    }
    println!("ln N = {:.4}, ln 2 = {:.4}", 128f64.ln(), 2f64.ln());
    Ok(())
}
