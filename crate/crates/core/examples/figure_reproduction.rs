//! Data and summary statistics behind both figures: success probability
//! curves and coherence curves for `N = 128` and `N = 512`.
//!
//! Usage: `cargo run --example figure_reproduction [out_dir]`

use std::path::PathBuf;

use noisy_grover::sweep::{reproduce_figure, FigureId, FigureSpec, DEFAULT_PRECISION};

fn main() -> noisy_grover::Result<()> {
    let root = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("grover_figures"));
    for figure in [FigureId::Fig1, FigureId::Fig2] {
        let report = reproduce_figure(
            &FigureSpec::default_for(figure),
            &root.join(figure.tag()),
            DEFAULT_PRECISION,
        )?;
        println!(
            "{}: {} tables, summary {}",
            figure.tag(),
            report.files.len(),
            report.summary_path.display()
        );
        for c in &report.curves {
            println!(
                "  N={:<4} gamma={:<5} first peak {:?} peaks {:>2} max P {:.4} C1 range [{:.3}, {:.3}]",
                c.n_items, c.gamma, c.first_peak_t, c.peak_count, c.max_p_suc, c.c1_min_first_period, c.c1_max_first_period
            );
        }
        for d in &report.doubling {
            println!(
                "  gamma={}: {} peaks at N={} vs {} at N={}",
                d.gamma, d.small_count, d.small_n, d.large_count, d.large_n
            );
        }
    }
    Ok(())
}
