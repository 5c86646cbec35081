//! Hyperspherical functions of class-1 representations of the de Sitter
//! group SO₀(1,4).
//!
//! The double cover of SO₀(1,4) is Sp(1,1), a group of 2×2 quaternionic
//! matrices, and its Euler decomposition combines nine real angles into
//! quaternion-valued ones.  The "radial" part of a class-1 matrix element
//! is the hyperspherical function ℨ^σ_{mn}(cos θ^q), a matrix element of
//! the (2σ+1)-dimensional rotation representation continued to the
//! complexified angle θ^q = θ + ϕ − iτ.
//!
//! Two independent evaluation routes are provided and cross-checked:
//!
//! * [`harmonics::hyperspherical_z`] — an addition-theorem triple sum of
//!   per-axis Wigner-type factors (two compact rotations and one boost),
//!   each a terminating Gauss hypergeometric polynomial;
//! * [`harmonics::hyperspherical_z_hyp`] — a hypergeometric particular
//!   solution of the Fuchsian radial equation in z = cos θ^q.
//!
//! The [`verify`] module holds the independent oracles used to validate
//! both routes: a matrix-exponential oracle built from the tridiagonal
//! ladder generator, a finite-difference residual for the radial
//! equation, and the one-time phase/normalization calibration.
//! [`reductions`] walks the degeneration chain down to Jacobi functions
//! on H⁴, generalized spherical functions on S³, associated functions on
//! the quaternion 2-sphere and ordinary spherical harmonics on S².

pub mod error;
pub mod harmonics;
pub mod quat;
pub mod reductions;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use harmonics::{CompositeAngle, RepIndex};
pub use quat::{EulerAngles9, Quaternion, QuaternionAngles};

/// Complex value of a hyperspherical function.
pub type ComplexScalar = num::Complex<f64>;
