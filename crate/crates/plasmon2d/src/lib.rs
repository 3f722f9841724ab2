//! Plasmonic scattering and shape reconstruction in two dimensions.
//!
//! This crate simulates transverse-magnetic near-field scattering from a
//! sub-wavelength starlike inclusion with a boundary-integral (Nystrom)
//! solver, quantifies how sensitive the measurement is to the inclusion shape
//! near plasmon resonance, and reconstructs the boundary from noisy data with
//! a Levenberg-Marquardt iteration wrapped in a hierarchical-Bayesian update
//! of the regularization parameter, plus Laplace-approximation uncertainty
//! bands.
//!
//! Entry points:
//! - [`geometry`]: starlike curves, grids, perturbations, scalings.
//! - [`forward`]: transmission solve and the near-field measurement map.
//! - [`mie`]: closed-form disk series, the ground-truth oracle.
//! - [`np_spectrum`]: Neumann-Poincare spectrum in the energy inner product.
//! - [`sensitivity`]: shape-sensitivity functional and Jacobian diagnostics.
//! - [`inversion`] / [`laplace`]: reconstruction and posterior sampling.
//! - [`config`] / [`experiments`]: file-driven experiment runner used by the
//!   `plasmon2d` binary and the examples.

pub mod config;
pub mod error;
pub mod experiments;
pub mod forward;
pub mod geometry;
pub mod inversion;
pub mod laplace;
pub mod materials;
pub mod mie;
pub mod np_spectrum;
pub mod sensitivity;
pub mod special;

mod kernels;

pub use error::{Error, Result};
