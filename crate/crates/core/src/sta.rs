//! Super-twisting dynamics and perturbation signals.
//!
//! The controlled pair `(z1, z2)` obeys
//!
//! ```text
//! z1' = -alpha |z1|^{1/2} sgn(z1) + z2
//! z2' = -beta sgn(z1) + rho0(t)
//! ```
//!
//! with positive gains `(alpha, beta)` and a bounded perturbation `rho0`
//! whose derivative `rho1` is also bounded.

use crate::error::{Error, Result};
use crate::inclusions::{sgn_select, signed_power};

/// The sliding pair: sliding variable `z1` and auxiliary state `z2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaState {
    pub z1: f64,
    pub z2: f64,
}

impl StaState {
    pub fn new(z1: f64, z2: f64) -> Self {
        Self { z1, z2 }
    }
}

/// Positive super-twisting gains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainState {
    pub alpha: f64,
    pub beta: f64,
}

impl GainState {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                constraint: "must be finite and > 0",
            });
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: beta,
                constraint: "must be finite and > 0",
            });
        }
        Ok(Self { alpha, beta })
    }
}

/// Right-hand side of the super-twisting system with perturbation injected
/// at the `z2` level. Uses the midpoint signum selection, so this is the
/// explicit-integration view of the inclusion.
#[inline]
pub fn sta_rhs(s: StaState, g: GainState, rho0: f64) -> (f64, f64) {
    let dz1 = -g.alpha * signed_power(s.z1, 0.5) + s.z2;
    let dz2 = -g.beta * sgn_select(s.z1) + rho0;
    (dz1, dz2)
}

/// Perturbation signal with analytic derivative and magnitude bounds.
///
/// `l1` bounds `|rho0(t)|` and `l2` bounds `|rho0'(t)|`; both are declared
/// by the scenario and checked against samples at trace resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationSpec {
    pub kind: PerturbationKind,
    pub l1: f64,
    pub l2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PerturbationKind {
    /// `rho0(t) = a1 sin(omega1 t) + a2 cos(omega2 t)`.
    SinCos {
        a1: f64,
        omega1: f64,
        a2: f64,
        omega2: f64,
    },
    /// Constant `rho0(t) = value`.
    Constant { value: f64 },
    /// Piecewise-linear table of `(t, rho0)` samples; the derivative is the
    /// segment slope. Lookups outside the table are an error.
    Tabulated { times: Vec<f64>, values: Vec<f64> },
}

impl PerturbationSpec {
    pub fn new(kind: PerturbationKind, l1: f64, l2: f64) -> Result<Self> {
        if !(l1 >= 0.0) || !l1.is_finite() {
            return Err(Error::InvalidParameter {
                name: "l1",
                value: l1,
                constraint: "must be finite and >= 0",
            });
        }
        if !(l2 >= 0.0) || !l2.is_finite() {
            return Err(Error::InvalidParameter {
                name: "l2",
                value: l2,
                constraint: "must be finite and >= 0",
            });
        }
        if let PerturbationKind::Tabulated { times, values } = &kind {
            if times.len() < 2 || times.len() != values.len() {
                return Err(Error::Config(
                    "tabulated perturbation needs >= 2 samples and matching lengths".into(),
                ));
            }
            if times.windows(2).any(|w| w[1] <= w[0]) {
                return Err(Error::Config(
                    "tabulated perturbation times must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { kind, l1, l2 })
    }

    /// Evaluate `(rho0(t), rho0'(t))`.
    pub fn eval(&self, t: f64) -> Result<(f64, f64)> {
        match &self.kind {
            PerturbationKind::SinCos {
                a1,
                omega1,
                a2,
                omega2,
            } => {
                let rho0 = a1 * (omega1 * t).sin() + a2 * (omega2 * t).cos();
                let rho1 = a1 * omega1 * (omega1 * t).cos() - a2 * omega2 * (omega2 * t).sin();
                Ok((rho0, rho1))
            }
            PerturbationKind::Constant { value } => Ok((*value, 0.0)),
            PerturbationKind::Tabulated { times, values } => {
                let (t_min, t_max) = (times[0], *times.last().unwrap());
                if t < t_min || t > t_max {
                    return Err(Error::OutOfRange { t, t_min, t_max });
                }
                let idx = match times.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
                    Ok(i) => i.min(times.len() - 2),
                    Err(i) => i - 1,
                };
                let (t0, t1) = (times[idx], times[idx + 1]);
                let (v0, v1) = (values[idx], values[idx + 1]);
                let slope = (v1 - v0) / (t1 - t0);
                Ok((v0 + slope * (t - t0), slope))
            }
        }
    }

    /// The Fig.-2 style waveform `10 sin(2 pi t) + 5 cos(5 pi t)` with its
    /// conservative bounds `l1 = 15`, `l2 = 45 pi`.
    pub fn default_sin_cos() -> Self {
        use std::f64::consts::PI;
        Self {
            kind: PerturbationKind::SinCos {
                a1: 10.0,
                omega1: 2.0 * PI,
                a2: 5.0,
                omega2: 5.0 * PI,
            },
            l1: 15.0,
            l2: 45.0 * PI,
        }
    }
}
