//! Stieltjes–Calogero sums of zeros and their predictions from the ODE the
//! polynomial satisfies, plus the conjugate-symmetry identities of the
//! stationary configuration.

mod conjugate;
mod ode;
mod report;
mod sums;

pub use conjugate::{conjugate_identity_complex, conjugate_identity_real, real_index_mu_sum, ComplexIdentityResidual};
pub use ode::{classical_with_ode, OdeCoefficients};
pub use report::{relation_report, RelationReport, RelationRow};
pub use sums::{direct_sum, OdeEval, COINCIDENCE_GUARD};
