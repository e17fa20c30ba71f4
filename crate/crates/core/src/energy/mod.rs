//! Weights, the log-energy of a point configuration, its analytic gradient
//! and Hessian, and the positivity conditions on them.
//!
//! Everything is kept in the log domain: `T_ω` itself overflows quickly.

mod conditions;
mod config;
mod derivatives;
mod matrix;
mod report;
mod weight;

pub use conditions::{
    boundary_decay, check_f_positivity, check_log_concavity, check_sufficient_conditions, f_function, BoundaryRay,
    ConditionFlags, GridCheck, IndexMargin, SufficientConditions, COINCIDENT_REAL_PART, CONCAVITY_TOL,
    DEFAULT_GRID_POINTS,
};
pub use config::{log_abs_t_sq, log_abs_t_sq_expanded, log_t, Configuration};
pub use derivatives::{fd_gradient, gradient, hessian, Convention};
pub use matrix::{
    check_diag_dominance, classify_eigenvalues, classify_hessian, symmetric_eigenvalues, HessianClass,
    DEFAULT_CLASSIFY_TOL,
};
pub use report::{critical_point_report, CriticalPointReport};
pub use weight::{Domain, WeightEval, WeightKind, WeightSpec};
