//! Parameter sweeps, CSV emission and figure datasets.
//!
//! Every table starts with a `t` column followed by the requested observables
//! in the fixed order `p_suc, c1, s1, r_x, r_z, closed_form_p_suc, asymptote`.
//! Floats are printed with a fixed number of significant digits in a
//! `%g`-like style, comma separated, `\n` terminated, independent of locale.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Deserialize;

use crate::analytics::success_probability;
use crate::error::{Error, Result};
use crate::model::{BlochState, SearchParams};
use crate::oracle::verify_against_oracle;
use crate::spectral::{
    asymptotic_success, closed_form_state, spectral_data, Regime, EQUIVALENCE_REL_TOL,
};
use crate::trajectory::{
    bloch_states_capped, local_maxima, TrajectoryPoint, DEFAULT_ITERATION_CAP,
};

/// Default number of significant digits in CSV output.
pub const DEFAULT_PRECISION: usize = 12;

/// Iterations compared against the density-matrix oracle by `--verify`.
pub const VERIFY_STEPS: u64 = 500;

/// Agreement required between the Bloch recursion and the oracle.
pub const VERIFY_ORACLE_TOL: f64 = 1e-11;

/// Name of the index file written next to sweep outputs.
pub const INDEX_FILE: &str = "index.csv";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputColumn {
    PSuc,
    C1,
    S1,
    #[serde(rename = "r_x")]
    Rx,
    #[serde(rename = "r_z")]
    Rz,
    ClosedFormPSuc,
    Asymptote,
}

impl OutputColumn {
    pub const ALL: [OutputColumn; 7] = [
        OutputColumn::PSuc,
        OutputColumn::C1,
        OutputColumn::S1,
        OutputColumn::Rx,
        OutputColumn::Rz,
        OutputColumn::ClosedFormPSuc,
        OutputColumn::Asymptote,
    ];

    /// Columns written when nothing else is requested.
    pub const BASE: [OutputColumn; 5] = [
        OutputColumn::PSuc,
        OutputColumn::C1,
        OutputColumn::S1,
        OutputColumn::Rx,
        OutputColumn::Rz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OutputColumn::PSuc => "p_suc",
            OutputColumn::C1 => "c1",
            OutputColumn::S1 => "s1",
            OutputColumn::Rx => "r_x",
            OutputColumn::Rz => "r_z",
            OutputColumn::ClosedFormPSuc => "closed_form_p_suc",
            OutputColumn::Asymptote => "asymptote",
        }
    }
}

impl FromStr for OutputColumn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OutputColumn::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown output column {s:?}")))
    }
}

/// Ordered, duplicate-free set of output columns.
pub type OutputSet = BTreeSet<OutputColumn>;

pub fn base_outputs() -> OutputSet {
    OutputColumn::BASE.into_iter().collect()
}

/// Header line for a table with the given columns, without the newline.
pub fn csv_header(outputs: &OutputSet) -> String {
    std::iter::once("t")
        .chain(outputs.iter().map(|c| c.name()))
        .collect::<Vec<_>>()
        .join(",")
}

/// Formats `x` with `digits` significant digits, choosing plain or
/// exponent notation the way C's `%g` does and trimming trailing zeros.
pub fn format_float(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent formatting");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Success probability after `t` steps from the closed form, falling back to
/// the iterated state in the degenerate regime.
fn closed_form_column(params: &SearchParams, t: u64, iterated: BlochState) -> Result<f64> {
    match closed_form_state(params, t) {
        Ok(state) => Ok(success_probability(state)),
        Err(Error::DegenerateRegime { .. }) => Ok(success_probability(iterated)),
        Err(e) => Err(e),
    }
}

/// Renders one trajectory as CSV text.
pub fn run_single(
    params: &SearchParams,
    t_max: u64,
    outputs: &OutputSet,
    precision: usize,
) -> Result<String> {
    run_single_capped(params, t_max, outputs, precision, DEFAULT_ITERATION_CAP)
}

pub fn run_single_capped(
    params: &SearchParams,
    t_max: u64,
    outputs: &OutputSet,
    precision: usize,
    cap: u64,
) -> Result<String> {
    let states = bloch_states_capped(params, t_max, cap)?;
    render_table(params, &states, outputs, precision)
}

fn render_table(
    params: &SearchParams,
    states: &[BlochState],
    outputs: &OutputSet,
    precision: usize,
) -> Result<String> {
    let asymptote = if params.gamma() > 0.0 {
        format_float(asymptotic_success(params)?, precision)
    } else {
        String::new()
    };
    let mut out = csv_header(outputs);
    out.push('\n');
    for (t, &state) in states.iter().enumerate() {
        let point = TrajectoryPoint::observe(t as u64, state, params)?;
        write!(out, "{t}").expect("writing to a String");
        for column in outputs {
            let cell = match column {
                OutputColumn::PSuc => format_float(point.p_suc, precision),
                OutputColumn::C1 => format_float(point.c1, precision),
                OutputColumn::S1 => format_float(point.s1, precision),
                OutputColumn::Rx => format_float(state.r_x, precision),
                OutputColumn::Rz => format_float(state.r_z, precision),
                OutputColumn::ClosedFormPSuc => {
                    format_float(closed_form_column(params, t as u64, state)?, precision)
                }
                OutputColumn::Asymptote => asymptote.clone(),
            };
            out.push(',');
            out.push_str(&cell);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Cross-checks one parameter point before its data is emitted: the Bloch
/// recursion against the Kraus evolution, and the closed form against the
/// recursion wherever the spectrum is not degenerate.
pub fn verify_params(params: &SearchParams, t_max: u64) -> Result<()> {
    let steps = t_max.min(VERIFY_STEPS);
    let states = bloch_states_capped(params, steps, DEFAULT_ITERATION_CAP)?;
    verify_against_oracle(params, &states, VERIFY_ORACLE_TOL)?;
    if spectral_data(params).regime == Regime::Degenerate {
        return Ok(());
    }
    for (t, state) in states.iter().enumerate() {
        let closed = closed_form_state(params, t as u64)?;
        let err = closed.distance(state);
        if err > EQUIVALENCE_REL_TOL * state.norm().max(f64::MIN_POSITIVE) {
            return Err(Error::Verification(format!(
                "N={} M={} gamma={} t={t}: closed form differs from recursion by {err:e}",
                params.n_items(),
                params.n_marked(),
                params.gamma()
            )));
        }
    }
    Ok(())
}

fn default_n_values() -> Vec<u64> {
    vec![128]
}
fn default_m_values() -> Vec<u64> {
    vec![2]
}
fn default_gamma_values() -> Vec<f64> {
    vec![0.0]
}
fn default_t_max() -> u64 {
    100
}
fn default_outputs() -> Vec<OutputColumn> {
    OutputColumn::BASE.to_vec()
}
fn default_output_path() -> PathBuf {
    PathBuf::from("grover_out")
}
fn default_precision() -> usize {
    DEFAULT_PRECISION
}
fn default_cap() -> u64 {
    DEFAULT_ITERATION_CAP
}

/// Sweep configuration; the TOML keys match the field names.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default = "default_n_values")]
    pub n_values: Vec<u64>,
    #[serde(default = "default_m_values")]
    pub m_values: Vec<u64>,
    #[serde(default = "default_gamma_values")]
    pub gamma_values: Vec<f64>,
    #[serde(default = "default_t_max")]
    pub t_max: u64,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputColumn>,
    #[serde(default = "default_output_path")]
    pub output_path: PathBuf,
    #[serde(default)]
    pub verify: bool,
    #[serde(default = "default_precision")]
    pub precision: usize,
    #[serde(default = "default_cap")]
    pub iteration_cap: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_values: default_n_values(),
            m_values: default_m_values(),
            gamma_values: default_gamma_values(),
            t_max: default_t_max(),
            outputs: default_outputs(),
            output_path: default_output_path(),
            verify: false,
            precision: default_precision(),
            iteration_cap: default_cap(),
        }
    }
}

impl SweepConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn output_set(&self) -> OutputSet {
        self.outputs.iter().copied().collect()
    }

    /// Checks settings that apply to the sweep as a whole. Individual
    /// `(N, M, γ)` points are validated when they run.
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.m_values.is_empty() || self.gamma_values.is_empty() {
            return Err(Error::Config(
                "n_values, m_values and gamma_values must be non-empty".into(),
            ));
        }
        if !(1..=17).contains(&self.precision) {
            return Err(Error::Config(format!(
                "precision must be in 1..=17, got {}",
                self.precision
            )));
        }
        if self.t_max > self.iteration_cap {
            return Err(Error::Resource {
                requested: self.t_max,
                cap: self.iteration_cap,
            });
        }
        Ok(())
    }

    /// All `(N, M, γ)` combinations in configuration order.
    pub fn triples(&self) -> Vec<(u64, u64, f64)> {
        let mut out = Vec::new();
        for &n in &self.n_values {
            for &m in &self.m_values {
                for &g in &self.gamma_values {
                    out.push((n, m, g));
                }
            }
        }
        out
    }
}

/// File name that encodes one parameter point.
pub fn table_file_name(prefix: &str, n: u64, m: u64, gamma: f64) -> String {
    format!(
        "{prefix}_N{n}_M{m}_g{}.csv",
        format_float(gamma, DEFAULT_PRECISION)
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    pub n_items: u64,
    pub n_marked: u64,
    pub gamma: f64,
    pub path: PathBuf,
    pub asymptote: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFailure {
    pub n_items: u64,
    pub n_marked: u64,
    pub gamma: f64,
    pub error: Error,
}

/// Outcome of a sweep: tables written plus points that failed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub failures: Vec<SweepFailure>,
    pub index_path: PathBuf,
}

impl SweepReport {
    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every `(N, M, γ)` point, one CSV file each, then writes `index.csv`.
///
/// Points that fail validation are collected in the report and do not stop
/// the others. With `verify` set, every valid point is checked against the
/// density-matrix oracle first and any mismatch aborts the whole sweep
/// before anything is written.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let outputs = config.output_set();
    let triples = config.triples();

    let mut failures = Vec::new();
    let mut valid = Vec::new();
    for (n, m, g) in triples {
        match SearchParams::new(n, m, g) {
            Ok(p) => valid.push(p),
            Err(error) => failures.push(SweepFailure {
                n_items: n,
                n_marked: m,
                gamma: g,
                error,
            }),
        }
    }

    if config.verify {
        valid
            .par_iter()
            .map(|p| verify_params(p, config.t_max))
            .collect::<Result<Vec<()>>>()?;
    }

    fs::create_dir_all(&config.output_path)
        .map_err(|e| Error::Io(format!("{}: {e}", config.output_path.display())))?;

    let results: Vec<Result<SweepEntry>> = valid
        .par_iter()
        .map(|p| {
            let table = run_single_capped(
                p,
                config.t_max,
                &outputs,
                config.precision,
                config.iteration_cap,
            )?;
            let path = config.output_path.join(table_file_name(
                "grover",
                p.n_items(),
                p.n_marked(),
                p.gamma(),
            ));
            fs::write(&path, table).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let asymptote = if p.gamma() > 0.0 {
                Some(asymptotic_success(p)?)
            } else {
                None
            };
            Ok(SweepEntry {
                n_items: p.n_items(),
                n_marked: p.n_marked(),
                gamma: p.gamma(),
                path,
                asymptote,
            })
        })
        .collect();

    let mut entries = Vec::new();
    for (p, result) in valid.iter().zip(results) {
        match result {
            Ok(entry) => entries.push(entry),
            Err(error) => failures.push(SweepFailure {
                n_items: p.n_items(),
                n_marked: p.n_marked(),
                gamma: p.gamma(),
                error,
            }),
        }
    }

    let index_path = config.output_path.join(INDEX_FILE);
    let mut index = String::from("file,n_items,n_marked,gamma,asymptote\n");
    for e in &entries {
        let file = e
            .path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let asym = e
            .asymptote
            .map(|a| format_float(a, config.precision))
            .unwrap_or_default();
        writeln!(
            index,
            "{file},{},{},{},{asym}",
            e.n_items,
            e.n_marked,
            format_float(e.gamma, config.precision)
        )
        .expect("writing to a String");
    }
    fs::write(&index_path, index)
        .map_err(|e| Error::Io(format!("{}: {e}", index_path.display())))?;

    Ok(SweepReport {
        entries,
        failures,
        index_path,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Success probability against iteration count.
    Fig1,
    /// Relative entropy of coherence against iteration count.
    Fig2,
}

impl FigureId {
    pub fn tag(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
        }
    }

    fn outputs(self) -> OutputSet {
        let cols: &[OutputColumn] = match self {
            FigureId::Fig1 => &[
                OutputColumn::PSuc,
                OutputColumn::Rx,
                OutputColumn::Rz,
                OutputColumn::ClosedFormPSuc,
                OutputColumn::Asymptote,
            ],
            FigureId::Fig2 => &[
                OutputColumn::PSuc,
                OutputColumn::C1,
                OutputColumn::S1,
                OutputColumn::Asymptote,
            ],
        };
        cols.iter().copied().collect()
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fig1" | "1" => Ok(FigureId::Fig1),
            "fig2" | "2" => Ok(FigureId::Fig2),
            other => Err(Error::Config(format!(
                "unknown figure {other:?}; expected fig1 or fig2"
            ))),
        }
    }
}

/// Damping strengths used by the default figure panels.
pub const DEFAULT_FIGURE_GAMMAS: [f64; 4] = [0.0, 0.01, 0.02, 0.05];

/// Horizon of the default figure panels.
pub const DEFAULT_FIGURE_T_MAX: u64 = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub n_items: u64,
    pub n_marked: u64,
    pub gammas: Vec<f64>,
    pub t_max: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub figure: FigureId,
    pub panels: Vec<Panel>,
}

impl FigureSpec {
    /// Two panels with `M = 2`, `N = 128` and `N = 512`, and the default
    /// damping list.
    pub fn default_for(figure: FigureId) -> Self {
        let panel = |n| Panel {
            n_items: n,
            n_marked: 2,
            gammas: DEFAULT_FIGURE_GAMMAS.to_vec(),
            t_max: DEFAULT_FIGURE_T_MAX,
        };
        Self {
            figure,
            panels: vec![panel(128), panel(512)],
        }
    }
}

/// Per-curve statistics of a figure panel.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSummary {
    pub n_items: u64,
    pub n_marked: u64,
    pub gamma: f64,
    pub t_max: u64,
    pub first_peak_t: Option<u64>,
    pub first_peak_p_suc: Option<f64>,
    pub peak_count: usize,
    pub max_p_suc: f64,
    pub asymptote: Option<f64>,
    /// Extremes of `C₁` over the first oscillation period, `t ≤ ⌈π/θ⌉`.
    pub c1_max_first_period: f64,
    pub c1_min_first_period: f64,
}

/// Peak counts of two panels whose sizes differ by a factor of four.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublingCheck {
    pub gamma: f64,
    pub small_n: u64,
    pub large_n: u64,
    pub small_count: usize,
    pub large_count: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureReport {
    pub figure: FigureId,
    pub curves: Vec<CurveSummary>,
    pub doubling: Vec<DoublingCheck>,
    pub files: Vec<PathBuf>,
    pub summary_path: PathBuf,
}

impl FigureReport {
    pub fn doubling_holds(&self) -> bool {
        self.doubling.iter().all(|d| d.holds)
    }
}

/// Summary statistics of one curve.
pub fn summarize_curve(params: &SearchParams, points: &[TrajectoryPoint]) -> CurveSummary {
    let p_suc: Vec<f64> = points.iter().map(|p| p.p_suc).collect();
    let peaks = local_maxima(&p_suc);
    let first = peaks.first().copied();
    let period_end =
        ((std::f64::consts::PI / params.theta()).ceil() as usize).min(points.len() - 1);
    let first_period = &points[..=period_end];
    CurveSummary {
        n_items: params.n_items(),
        n_marked: params.n_marked(),
        gamma: params.gamma(),
        t_max: (points.len() - 1) as u64,
        first_peak_t: first.map(|t| t as u64),
        first_peak_p_suc: first.map(|t| p_suc[t]),
        peak_count: peaks.len(),
        max_p_suc: p_suc.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        asymptote: asymptotic_success(params).ok(),
        c1_max_first_period: first_period
            .iter()
            .map(|p| p.c1)
            .fold(f64::NEG_INFINITY, f64::max),
        c1_min_first_period: first_period
            .iter()
            .map(|p| p.c1)
            .fold(f64::INFINITY, f64::min),
    }
}

/// Writes the data tables behind a figure plus `<fig>_summary.csv` into
/// `out_dir`, and checks that a panel with `4N` items shows half the peaks of
/// the panel with `N` items over the same horizon, within one.
pub fn reproduce_figure(
    spec: &FigureSpec,
    out_dir: &Path,
    precision: usize,
) -> Result<FigureReport> {
    fs::create_dir_all(out_dir).map_err(|e| Error::Io(format!("{}: {e}", out_dir.display())))?;
    let tag = spec.figure.tag();
    let outputs = spec.figure.outputs();

    let mut jobs = Vec::new();
    for panel in &spec.panels {
        for &g in &panel.gammas {
            jobs.push((
                SearchParams::new(panel.n_items, panel.n_marked, g)?,
                panel.t_max,
            ));
        }
    }

    let results: Vec<Result<(PathBuf, CurveSummary)>> = jobs
        .par_iter()
        .map(|(p, t_max)| {
            let states = bloch_states_capped(p, *t_max, DEFAULT_ITERATION_CAP)?;
            let table = render_table(p, &states, &outputs, precision)?;
            let path = out_dir.join(table_file_name(tag, p.n_items(), p.n_marked(), p.gamma()));
            fs::write(&path, table).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let points = states
                .iter()
                .enumerate()
                .map(|(t, &s)| TrajectoryPoint::observe(t as u64, s, p))
                .collect::<Result<Vec<_>>>()?;
            Ok((path, summarize_curve(p, &points)))
        })
        .collect();
    let (files, curves): (Vec<_>, Vec<_>) = results
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();

    let mut doubling = Vec::new();
    for small in &curves {
        for large in &curves {
            if large.n_items == 4 * small.n_items
                && large.n_marked == small.n_marked
                && large.gamma == small.gamma
                && large.t_max == small.t_max
            {
                let diff = small.peak_count as i64 - 2 * large.peak_count as i64;
                doubling.push(DoublingCheck {
                    gamma: small.gamma,
                    small_n: small.n_items,
                    large_n: large.n_items,
                    small_count: small.peak_count,
                    large_count: large.peak_count,
                    holds: diff.abs() <= 1,
                });
            }
        }
    }

    let summary_path = out_dir.join(format!("{tag}_summary.csv"));
    fs::write(&summary_path, render_summary(&curves, &doubling, precision))
        .map_err(|e| Error::Io(format!("{}: {e}", summary_path.display())))?;

    let report = FigureReport {
        figure: spec.figure,
        curves,
        doubling,
        files,
        summary_path,
    };
    if !report.doubling_holds() {
        let bad: Vec<String> = report
            .doubling
            .iter()
            .filter(|d| !d.holds)
            .map(|d| {
                format!(
                    "gamma={} N={}:{} N={}:{}",
                    d.gamma, d.small_n, d.small_count, d.large_n, d.large_count
                )
            })
            .collect();
        return Err(Error::Verification(format!(
            "peak-count doubling violated: {}",
            bad.join("; ")
        )));
    }
    Ok(report)
}

fn render_summary(curves: &[CurveSummary], doubling: &[DoublingCheck], precision: usize) -> String {
    let f = |x: f64| format_float(x, precision);
    let opt = |x: Option<f64>| x.map(f).unwrap_or_default();
    let mut out = String::from(
        "n_items,n_marked,gamma,t_max,first_peak_t,first_peak_p_suc,peak_count,max_p_suc,asymptote,c1_max_first_period,c1_min_first_period,peak_count_4n,doubling_holds\n",
    );
    for c in curves {
        let partner = doubling
            .iter()
            .find(|d| d.small_n == c.n_items && d.gamma == c.gamma);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            c.n_items,
            c.n_marked,
            f(c.gamma),
            c.t_max,
            c.first_peak_t.map(|t| t.to_string()).unwrap_or_default(),
            opt(c.first_peak_p_suc),
            c.peak_count,
            f(c.max_p_suc),
            opt(c.asymptote),
            f(c.c1_max_first_period),
            f(c.c1_min_first_period),
            partner
                .map(|d| d.large_count.to_string())
                .unwrap_or_default(),
            partner.map(|d| d.holds.to_string()).unwrap_or_default(),
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::make_params;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(0.015625, 12), "0.015625");
        assert_eq!(format_float(0.0, 12), "0");
        assert_eq!(format_float(-0.0, 12), "0");
        assert_eq!(format_float(1.0, 12), "1");
        assert_eq!(format_float(0.1 + 0.2, 12), "0.3");
        assert_eq!(format_float(1.5e-7, 12), "1.5e-7");
        assert_eq!(format_float(-2.5e13, 3), "-2.5e13");
        assert_eq!(format_float(123456.0, 3), "1.23e5");
        assert_eq!(format_float(std::f64::consts::PI, 5), "3.1416");
        assert_eq!(format_float(9.99999, 3), "10");
        assert_eq!(format_float(6.31163513908e-5, 12), "6.31163513908e-5");
        assert_eq!(format_float(1.25e-4, 12), "0.000125");
    }

    #[test]
    fn header_order_is_fixed() {
        let outputs: OutputSet = [
            OutputColumn::Asymptote,
            OutputColumn::Rz,
            OutputColumn::PSuc,
        ]
        .into_iter()
        .collect();
        assert_eq!(csv_header(&outputs), "t,p_suc,r_z,asymptote");
        let all: OutputSet = OutputColumn::ALL.into_iter().collect();
        assert_eq!(
            csv_header(&all),
            "t,p_suc,c1,s1,r_x,r_z,closed_form_p_suc,asymptote"
        );
    }

    #[test]
    fn single_point_table() {
        let p = make_params(128, 2, 0.0).unwrap();
        let outputs: OutputSet = [OutputColumn::PSuc].into_iter().collect();
        assert_eq!(
            run_single(&p, 0, &outputs, 12).unwrap(),
            "t,p_suc\n0,0.015625\n"
        );
    }

    #[test]
    fn asymptote_blank_without_noise() {
        let outputs: OutputSet = [OutputColumn::Asymptote].into_iter().collect();
        let p = make_params(16, 1, 0.0).unwrap();
        assert_eq!(
            run_single(&p, 1, &outputs, 12).unwrap(),
            "t,asymptote\n0,\n1,\n"
        );
        let p = make_params(16, 1, 1.0).unwrap();
        let text = run_single(&p, 1, &outputs, 12).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1].split(',').nth(1), lines[2].split(',').nth(1));
        assert!(!lines[1].ends_with(','));
    }

    #[test]
    fn column_names_parse() {
        for c in OutputColumn::ALL {
            assert_eq!(c.name().parse::<OutputColumn>().unwrap(), c);
        }
        assert!("bogus".parse::<OutputColumn>().is_err());
    }

    #[test]
    fn config_from_toml() {
        let cfg = SweepConfig::from_toml_str(
            r#"
            n_values = [16, 64]
            gamma_values = [0.0, 0.1]
            t_max = 10
            outputs = ["r_z", "p_suc"]
            verify = true
            "#,
        )
        .unwrap();
        assert_eq!(cfg.m_values, vec![2]);
        assert_eq!(cfg.triples().len(), 4);
        assert_eq!(csv_header(&cfg.output_set()), "t,p_suc,r_z");
        assert!(cfg.verify);
        assert!(SweepConfig::from_toml_str("n_values = [16]\nbogus = 1").is_err());
        let cfg = SweepConfig {
            precision: 0,
            ..SweepConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn figure_ids() {
        assert_eq!("fig1".parse::<FigureId>().unwrap(), FigureId::Fig1);
        assert_eq!("FIG2".parse::<FigureId>().unwrap(), FigureId::Fig2);
        assert!("fig3".parse::<FigureId>().is_err());
        let spec = FigureSpec::default_for(FigureId::Fig1);
        assert_eq!(spec.panels.len(), 2);
        assert!(spec
            .panels
            .iter()
            .all(|p| p.n_marked == 2 && p.gammas.iter().all(|g| *g <= 0.05)));
    }
}
