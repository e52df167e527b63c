//! Ideal Grover search: the iterated success probability against the
//! textbook `sin²((2t + 1)θ/2)`.

use noisy_grover::oracle::noiseless_success;
use noisy_grover::{make_params, run_trajectory};

fn main() -> noisy_grover::Result<()> {
    let params = make_params(1024, 1, 0.0)?;
    let optimal = (std::f64::consts::FRAC_PI_4 * 1024f64.sqrt()).floor() as u64;
    println!("N=1024, M=1, optimal iteration count ~ {optimal}");
    println!("{:>4} {:>12} {:>12}", "t", "iterated", "formula");
    for point in run_trajectory(&params, optimal + 3)? {
        if point.t % 5 == 0 || point.t >= optimal - 1 {
            println!(
                "{:>4} {:>12.9} {:>12.9}",
                point.t,
                point.p_suc,
                noiseless_success(&params, point.t)
            );
        }
    }
    Ok(())
}
