use thiserror::Error;

/// Errors produced by gain design, scenario validation and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("invalid input to {op}: {value} is not finite")]
    InvalidInput { op: &'static str, value: f64 },

    /// A parameter violated its admissible range.
    #[error("invalid parameter {name} = {value}: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// The ellipse-center construction needs h*lambda > 1.
    #[error("infeasible center: h*lambda = {h_lambda} <= 1 (lambda = {lambda}, h = {h})")]
    InfeasibleCenter { lambda: f64, h: f64, h_lambda: f64 },

    /// A (theta1, theta2) pair does not lie strictly inside the design ellipse.
    #[error("infeasible gain pair (theta1 = {theta1}, theta2 = {theta2}): ellipse residual {residual} <= 0")]
    InfeasiblePair {
        theta1: f64,
        theta2: f64,
        residual: f64,
    },

    /// The variable-gain schedule produced lambda outside (0, 1).
    #[error("gain schedule infeasible: lambda = {lambda} outside (0, 1) for beta = {beta}")]
    ScheduleInfeasible { beta: f64, lambda: f64 },

    /// G*B is (numerically) zero, so the equivalent control is undefined.
    #[error("singular surface: G*B = {gb} is too close to zero")]
    SingularSurface { gb: f64 },

    /// Perturbation lookup outside the tabulated time range.
    #[error("time {t} outside tabulated perturbation range [{t_min}, {t_max}]")]
    OutOfRange { t: f64, t_min: f64, t_max: f64 },

    /// The brute-force inclusion solver found zero or multiple solutions.
    #[error("oracle failure for (beta_prev = {beta_prev}, zhat3 = {zhat3}): {n_solutions} distinct solutions")]
    OracleFailure {
        beta_prev: f64,
        zhat3: f64,
        n_solutions: usize,
    },

    /// Scenario configuration is malformed or inconsistent.
    #[error("config error: {0}")]
    Config(String),

    /// State norm exceeded the divergence guard during simulation.
    #[error("simulation diverged at t = {t}: |state| exceeded {guard}")]
    Divergence { t: f64, guard: f64 },

    /// Invariant violated inside the library itself.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
