//! Physics-informed neural networks with a focus on extrapolation behavior.
//!
//! The crate bundles everything needed to train PINNs on a suite of 1-D
//! time-dependent PDEs, compare them against high-accuracy reference
//! solutions, and quantify temporal shifts in the solutions' Fourier
//! spectra via Wasserstein distances:
//!
//! - [`neural`] — scalar autodiff (reverse-mode tape + second-order forward
//!   jets), fully-connected networks, Fourier-feature embeddings.
//! - [`pdes`] — the PDE catalog: residual operators, domains, initial and
//!   boundary conditions.
//! - [`refsol`] — closed-form and high-accuracy numerical reference
//!   solutions evaluated on arbitrary space-time grids.
//! - [`training`] — collocation sampling, PINN losses, Adam, dynamic
//!   pulling, and transfer learning.
//! - [`spectral`] — DFT magnitude spectra, 1-D Wasserstein distance,
//!   pairwise Wasserstein-Fourier matrices, and the weighted
//!   Wasserstein-Fourier (WWF) distance.
//! - [`analysis`] — error metrics, parameter sweeps, and the
//!   spectra-based error predictor.

pub mod analysis;
pub mod artifacts;
pub mod error;
pub mod neural;
pub mod pdes;
pub mod refsol;
pub mod spectral;
pub mod training;

/// Scalar type used by all concrete numerical paths.
///
/// The math kernels are generic where that is natural: differentiable code
/// over [`neural::scalar::Scalar`], distance/DFT kernels over
/// `num_traits::Float`. Everything concrete (training, solvers, file
/// formats) is pinned to 64-bit floats; the finite-difference validation
/// tolerances assume it.
pub type Real = f64;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
