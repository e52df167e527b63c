//! Sweep over a grid of `(N, M, γ)` points, one CSV per point plus an index.
//!
//! Usage: `cargo run --example parameter_sweep [out_dir]`

use std::path::PathBuf;

use noisy_grover::sweep::{run_sweep, OutputColumn, SweepConfig};

fn main() -> noisy_grover::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("grover_sweep"));
    let config = SweepConfig {
        n_values: vec![64, 256, 1024],
        m_values: vec![1, 4],
        gamma_values: vec![0.0, 0.01, 0.05],
        t_max: 150,
        outputs: vec![
            OutputColumn::PSuc,
            OutputColumn::C1,
            OutputColumn::ClosedFormPSuc,
            OutputColumn::Asymptote,
        ],
        output_path: out,
        verify: true,
        ..SweepConfig::default()
    };
    let report = run_sweep(&config)?;
    for e in &report.entries {
        let limit = e.asymptote.map(|a| format!("{a:.4}")).unwrap_or_default();
        println!("{:<36} limit {limit}", e.path.display());
    }
    println!("index: {}", report.index_path.display());
    Ok(())
}
