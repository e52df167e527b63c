use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use noisy_grover::sweep::{
    reproduce_figure, run_single_capped, run_sweep, FigureId, FigureSpec, OutputColumn, SweepConfig,
};
use noisy_grover::{Error, SearchParams};

/// Noisy Grover search: trajectories, sweeps and figure data as CSV.
///
/// Exit codes: 0 success, 1 domain or configuration error, 2 verification
/// failure, 3 I/O error.
#[derive(Debug, Parser)]
#[command(name = "noisy-grover", version)]
struct Cli {
    /// TOML configuration file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,

    /// Search-space sizes N (comma separated)
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u64>>,

    /// Marked-item counts M (comma separated)
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u64>>,

    /// Damping strengths gamma (comma separated)
    #[arg(long, value_delimiter = ',')]
    gamma: Option<Vec<f64>>,

    /// Number of Grover iterations
    #[arg(long)]
    steps: Option<u64>,

    /// Output directory, or "-" to print a single table to stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Columns to emit, e.g. p_suc,c1,closed_form_p_suc,asymptote
    #[arg(long, value_delimiter = ',')]
    outputs: Option<Vec<String>>,

    /// Significant digits for floats
    #[arg(long)]
    precision: Option<usize>,

    /// Check against the density-matrix oracle before writing
    #[arg(long)]
    verify: bool,

    /// Emit the dataset behind a figure (fig1 or fig2) instead of a sweep
    #[arg(long)]
    figure: Option<String>,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Verification(_) => 2,
        Error::Io(_) => 3,
        _ => 1,
    }
}

fn build_config(cli: &Cli) -> Result<SweepConfig, Error> {
    let mut cfg = match &cli.config {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::default(),
    };
    if let Some(v) = &cli.n {
        cfg.n_values = v.clone();
    }
    if let Some(v) = &cli.m {
        cfg.m_values = v.clone();
    }
    if let Some(v) = &cli.gamma {
        cfg.gamma_values = v.clone();
    }
    if let Some(v) = cli.steps {
        cfg.t_max = v;
    }
    if let Some(v) = &cli.out {
        cfg.output_path = v.clone();
    }
    if let Some(v) = &cli.outputs {
        cfg.outputs = v
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<OutputColumn>, _>>()?;
    }
    if let Some(v) = cli.precision {
        cfg.precision = v;
    }
    cfg.verify |= cli.verify;
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<(), Error> {
    let cfg = build_config(cli)?;

    if let Some(fig) = &cli.figure {
        let figure: FigureId = fig.parse()?;
        let out = cli
            .out
            .clone()
            .unwrap_or_else(|| PathBuf::from(figure.tag()));
        let report = reproduce_figure(&FigureSpec::default_for(figure), &out, cfg.precision)?;
        for c in &report.curves {
            eprintln!(
                "N={} M={} gamma={}: first peak t={:?}, peaks={}, max P={:.6}",
                c.n_items, c.n_marked, c.gamma, c.first_peak_t, c.peak_count, c.max_p_suc
            );
        }
        eprintln!("summary written to {}", report.summary_path.display());
        return Ok(());
    }

    if cfg.output_path.as_os_str() == "-" {
        let triples = cfg.triples();
        let [(n, m, g)] = triples.as_slice() else {
            return Err(Error::Config(
                "stdout output needs exactly one (N, M, gamma) point".into(),
            ));
        };
        let params = SearchParams::new(*n, *m, *g)?;
        if cfg.verify {
            noisy_grover::sweep::verify_params(&params, cfg.t_max)?;
        }
        let table = run_single_capped(
            &params,
            cfg.t_max,
            &cfg.output_set(),
            cfg.precision,
            cfg.iteration_cap,
        )?;
        print!("{table}");
        return Ok(());
    }

    let report = run_sweep(&cfg)?;
    eprintln!(
        "wrote {} table(s); index at {}",
        report.entries.len(),
        report.index_path.display()
    );
    if let Some(first) = report.failures.first() {
        for f in &report.failures {
            eprintln!(
                "failed: N={} M={} gamma={}: {}",
                f.n_items, f.n_marked, f.gamma, f.error
            );
        }
        return Err(first.error.clone());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
