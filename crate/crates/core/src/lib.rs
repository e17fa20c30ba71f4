//! Exceptional Hermite polynomials, their zeros, and the logarithmic energy
//! of the zero configuration.
//!
//! The crate is organised bottom-up:
//!
//! * [`polycore`]: exact polynomial algebra over `BigRational` (Hermite,
//!   Laguerre, Jacobi, Wronskians, double partitions, exceptional Hermite).
//! * [`roots`]: Aberth–Ehrlich root finding with Newton polishing, zero
//!   classification and the η-proximity diagnostic.
//! * [`stieltjes`]: Stieltjes–Calogero sums, their closed-form predictions
//!   from the ODE and the conjugate-symmetry identities.
//! * [`energy`]: weights, log-energy, analytic gradient and Hessian, and the
//!   positive-definiteness conditions.
//! * [`explorer`]: translation scans, multistart maximization and the
//!   three worked examples.
//!
//! Numeric code is generic over [`Real`]; use [`f64`] for 53-bit and
//! [`F256`] for 256-bit runs.

pub mod energy;
pub mod error;
pub mod explorer;
pub mod polycore;
pub mod roots;
pub mod scalar;
pub mod stieltjes;

pub use error::{Error, Result};
pub use scalar::{ComplexExt, MpFloat, Precision, Real};

/// Exact rational scalar used by the polynomial layer.
pub type ExactRational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type ExactPoly = polycore::Poly<ExactRational>;
/// 256-bit MPFR float.
pub type F256 = MpFloat<256>;

pub type Complex64 = num_complex::Complex<f64>;
pub type ZeroSet64 = roots::ZeroSet<f64>;
pub type ZeroSet256 = roots::ZeroSet<F256>;
