//! Time evolution on the orbit.
//!
//! The Hamiltonian is `H = m g q` with no kinetic term. Time translation
//! shifts the momentum by `m g t` and leaves the position fixed, so the
//! particle is static and `H` is conserved.
//!
//! Two sign conventions for the time generator are exposed. The left-action
//! generator `d/ds phi(exp(-s X))` at `s = 0` gives `-m g d/dp` for `E`; the
//! forward-time drift of the physical flow is its negative, `+m g d/dp`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coadjoint::{
    canonical_act, hamiltonian_vector_field, AffineObservable, OrbitContext, OrbitError,
    OrbitPoint, OrbitTangent,
};
use crate::group::BaseElement;

/// Upper bound on the number of samples `simulate` will produce.
pub const MAX_SAMPLES: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimulationError {
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("`{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("dt must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("t_max must be non-negative, got {0}")]
    NegativeDuration(f64),
    #[error("dt = {dt} exceeds t_max = {t_max}")]
    StepExceedsDuration { dt: f64, t_max: f64 },
    #[error("t_max / dt = {0} samples exceeds the limit of {MAX_SAMPLES}")]
    TooManySamples(f64),
    #[error("trajectory left the finite range at t = {0}")]
    Overflow(f64),
    #[error("empty trajectory")]
    EmptyTrajectory,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrator {
    /// Closed-form flow.
    #[default]
    Exact,
    /// Momentum kick then position drift, one fixed step at a time.
    SymplecticEuler,
}

impl std::str::FromStr for Integrator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Integrator::Exact),
            "symplectic_euler" | "symplectic-euler" => Ok(Integrator::SymplecticEuler),
            other => Err(format!(
                "unknown integrator `{other}` (expected `exact` or `symplectic_euler`)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationConfig {
    pub m: f64,
    pub g: f64,
    pub p0: f64,
    pub q0: f64,
    pub t_max: f64,
    pub dt: f64,
    pub integrator: Integrator,
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<OrbitContext, SimulationError> {
        for (name, value) in [
            ("m", self.m),
            ("g", self.g),
            ("p0", self.p0),
            ("q0", self.q0),
            ("t_max", self.t_max),
            ("dt", self.dt),
        ] {
            if !value.is_finite() {
                return Err(SimulationError::NonFinite { name, value });
            }
        }
        let ctx = OrbitContext::new(self.m, self.g)?;
        if self.dt <= 0.0 {
            return Err(SimulationError::NonPositiveStep(self.dt));
        }
        if self.t_max < 0.0 {
            return Err(SimulationError::NegativeDuration(self.t_max));
        }
        if self.t_max > 0.0 && self.dt > self.t_max {
            return Err(SimulationError::StepExceedsDuration {
                dt: self.dt,
                t_max: self.t_max,
            });
        }
        let steps = (self.t_max / self.dt).floor();
        if steps + 2.0 > MAX_SAMPLES as f64 {
            return Err(SimulationError::TooManySamples(steps));
        }
        Ok(ctx)
    }

    /// Sample times: `0, dt, 2 dt, ...` up to `t_max`, with `t_max` appended
    /// when it is not on the grid.
    pub fn time_grid(&self) -> Vec<f64> {
        let steps = (self.t_max / self.dt).floor() as usize;
        let mut times: Vec<f64> = (0..=steps)
            .map(|i| (i as f64 * self.dt).min(self.t_max))
            .collect();
        if times.last().is_some_and(|&t| t < self.t_max) {
            times.push(self.t_max);
        }
        times
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub p: f64,
    pub q: f64,
    #[serde(rename = "H")]
    pub h: f64,
}

/// `H = m g q`. There is no term in `p`.
pub fn hamiltonian(ctx: &OrbitContext, pt: &OrbitPoint) -> f64 {
    ctx.mg() * pt.q
}

/// `H` as an affine observable on the chart.
pub fn hamiltonian_observable(ctx: &OrbitContext) -> AffineObservable {
    AffineObservable::new(0.0, ctx.mg(), 0.0)
}

/// Closed-form flow for time `t`: the canonical action of the time
/// translation `(t, 0)`.
pub fn evolve_exact(ctx: &OrbitContext, pt: &OrbitPoint, t: f64) -> OrbitPoint {
    canonical_act(ctx, BaseElement::new(t, 0.0), pt)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E,
    P,
}

/// Left-action generator `d/ds phi(exp(-s X))(pt)` at `s = 0`.
pub fn generator_left(ctx: &OrbitContext, which: Generator) -> OrbitTangent {
    match which {
        Generator::E => OrbitTangent::new(-ctx.mg(), 0.0),
        Generator::P => OrbitTangent::new(0.0, -1.0),
    }
}

/// `(dp/dt, dq/dt)` of the physical flow.
pub fn physical_drift(ctx: &OrbitContext) -> OrbitTangent {
    -generator_left(ctx, Generator::E)
}

/// One step of symplectic Euler for an affine Hamiltonian: kick `p` with the
/// current field, then drift `q` with the field at the updated point.
pub fn symplectic_euler_step(h: &AffineObservable, pt: &OrbitPoint, dt: f64) -> OrbitPoint {
    // The field of an affine observable is constant over the chart.
    let field = hamiltonian_vector_field(h);
    let p = pt.p + dt * field.dp;
    let q = pt.q + dt * field.dq;
    OrbitPoint::new(p, q)
}

pub fn simulate(cfg: &SimulationConfig) -> Result<Vec<TrajectorySample>, SimulationError> {
    let ctx = cfg.validate()?;
    let start = OrbitPoint::new(cfg.p0, cfg.q0);
    let times = cfg.time_grid();
    let h_obs = hamiltonian_observable(&ctx);

    let mut samples = Vec::with_capacity(times.len());
    let mut state = start;
    let mut prev_t = 0.0;
    for t in times {
        let pt = match cfg.integrator {
            Integrator::Exact => evolve_exact(&ctx, &start, t),
            Integrator::SymplecticEuler => {
                if t > prev_t {
                    state = symplectic_euler_step(&h_obs, &state, t - prev_t);
                }
                state
            }
        };
        prev_t = t;
        if !pt.is_finite() {
            return Err(SimulationError::Overflow(t));
        }
        samples.push(TrajectorySample {
            t,
            p: pt.p,
            q: pt.q,
            h: hamiltonian(&ctx, &pt),
        });
    }
    Ok(samples)
}

/// `max_i |H_i - H_0|`.
pub fn energy_drift(samples: &[TrajectorySample]) -> Result<f64, SimulationError> {
    let first = samples.first().ok_or(SimulationError::EmptyTrajectory)?;
    Ok(samples
        .iter()
        .map(|s| (s.h - first.h).abs())
        .fold(0.0, f64::max))
}
