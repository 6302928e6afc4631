//! Numerical verification of the extended Glasser master theorem.
//!
//! Every identity in the catalog is checked three ways: the integral is
//! evaluated by adaptive quadrature, the theorem's prediction is assembled
//! from numerically computed residues inside the strip, and the printed
//! closed form is evaluated with the special-function kernel in [`specfun`].
//!
//! The numerical kernels (`specfun`, `quadrature`) are generic over the real
//! scalar type through [`Real`]; the catalog and the verification layer are
//! fixed to `f64`, which is what the aliases below name.

pub mod catalog;
pub mod error;
pub mod master;
pub mod oracles;
pub mod quadrature;
pub mod report;
pub mod residues;
pub mod scalar;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::Real;

/// Complex scalar used by the catalog and the verification layer.
pub type C64 = num_complex::Complex<f64>;

/// `f64` instantiation of the special-function context.
pub type Context = specfun::SpecialFunctionContext;

/// `f64` instantiation of the integration result.
pub type Integral = quadrature::IntegrationResult<f64>;
