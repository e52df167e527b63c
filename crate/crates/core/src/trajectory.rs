use crate::analytics::{coherence_relative_entropy, success_probability, von_neumann_entropy};
use crate::error::{Error, Result};
use crate::model::{initial_state, iterate_once, BlochState, SearchParams};

/// Default upper bound on the number of iterations in one run.
pub const DEFAULT_ITERATION_CAP: u64 = 10_000_000;

/// Observables of the register after `t` iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub t: u64,
    pub state: BlochState,
    pub p_suc: f64,
    /// Von Neumann entropy, nats.
    pub s1: f64,
    /// Relative entropy of coherence, nats.
    pub c1: f64,
}

impl TrajectoryPoint {
    pub fn observe(t: u64, state: BlochState, params: &SearchParams) -> Result<Self> {
        Ok(Self {
            t,
            state,
            p_suc: success_probability(state),
            s1: von_neumann_entropy(state)?,
            c1: coherence_relative_entropy(state, params)?,
        })
    }
}

/// Bloch states for `t = 0..=t_max`, without derived observables.
pub fn bloch_states(params: &SearchParams, t_max: u64) -> Result<Vec<BlochState>> {
    bloch_states_capped(params, t_max, DEFAULT_ITERATION_CAP)
}

pub fn bloch_states_capped(params: &SearchParams, t_max: u64, cap: u64) -> Result<Vec<BlochState>> {
    if t_max > cap {
        return Err(Error::Resource {
            requested: t_max,
            cap,
        });
    }
    let mut states = Vec::with_capacity(t_max as usize + 1);
    let mut state = initial_state(params);
    states.push(state);
    for _ in 0..t_max {
        state = iterate_once(state, params);
        states.push(state);
    }
    Ok(states)
}

/// Iterates from the uniform superposition and records every step.
pub fn run_trajectory(params: &SearchParams, t_max: u64) -> Result<Vec<TrajectoryPoint>> {
    run_trajectory_capped(params, t_max, DEFAULT_ITERATION_CAP)
}

pub fn run_trajectory_capped(
    params: &SearchParams,
    t_max: u64,
    cap: u64,
) -> Result<Vec<TrajectoryPoint>> {
    bloch_states_capped(params, t_max, cap)?
        .into_iter()
        .enumerate()
        .map(|(t, state)| TrajectoryPoint::observe(t as u64, state, params))
        .collect()
}

/// Bloch state after `t` iterations, without storing the path.
pub fn state_at(params: &SearchParams, t: u64) -> BlochState {
    (0..t).fold(initial_state(params), |r, _| iterate_once(r, params))
}

/// Indices of strict local maxima of `values`: `v[t-1] < v[t] ≥ v[t+1]`.
pub fn local_maxima(values: &[f64]) -> Vec<usize> {
    values
        .windows(3)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1] && w[1] >= w[2])
        .map(|(i, _)| i + 1)
        .collect()
}
