//! Clifford-algebra ("gamma-number") calculus for the Dirac and Yang-Mills
//! field equations, with exact second-order jets for residual verification.
//!
//! The core is generic over the scalar type ([`Real`], implemented for `f32`
//! and `f64`); the aliases below fix it to `f64`.

pub mod clifford;
pub mod dirac;
pub mod error;
pub mod gauge;
pub mod jet;
pub mod linalg;
pub mod lie;
pub mod matrix;
pub mod sampling;
pub mod verify;
pub mod scalar;

pub use clifford::{AlgebraContext, BladeMask, Field, GammaNumber};
pub use error::{Error, Result};
pub use scalar::{Cx, Real};

/// Double-precision gamma-number.
pub type Gamma = GammaNumber<f64>;
/// Single-precision gamma-number.
pub type Gamma32 = GammaNumber<f32>;
/// Double-precision 4×4 complex matrix.
pub type Mat4f = matrix::Mat4<f64>;
