//! Plug-and-play image reconstruction with linear kernel denoisers.
//!
//! A kernel denoiser such as nonlocal means applies `W = D⁻¹K`, where `K`
//! holds pairwise pixel affinities and `D` its row sums. `W` is row-stochastic
//! but not symmetric, so it is not non-expansive under the Euclidean norm.
//! Under the weighted inner product `⟨x, y⟩ = xᵀDy`, however, `W` becomes
//! self-adjoint and averaged, and it equals the proximal map of the quadratic
//! regularizer `g_D(x) = ½ xᵀD(K⁻¹D − I)x`. Running ISTA or ADMM with the
//! gradient and proximal operators taken in that space therefore yields
//! iterates that provably converge to a minimizer of `f + ρ g_D`.
//!
//! The crate provides:
//!
//! - [`space`]: the weighted inner product, norm, and gradient calculus;
//! - [`kernel`]: sparse NLM kernel filters and their class certification;
//! - [`fidelity`]: data-fidelity terms for superresolution and despeckling,
//!   with weighted gradients and proximal maps;
//! - [`forward`]: blur/decimation operators and synthetic observations;
//! - [`solver`]: the PnP-ISTA and PnP-ADMM loops with kernel adaptation,
//!   freezing, and trace recording;
//! - [`objective`]: explicit evaluation of `g_D` and dense minimizer oracles;
//! - [`verify`]: executable checks of the convergence properties on small
//!   dense instances;
//! - [`metrics`]: PSNR and SSIM.

pub mod error;
pub mod fidelity;
pub mod forward;
pub mod image;
pub mod kernel;
pub mod metrics;
pub mod objective;
pub mod solver;
pub mod space;
pub mod tol;
pub mod verify;

pub(crate) mod dense;
pub(crate) mod vecops;

pub use error::{Error, Result};
pub use image::Image;
pub use kernel::{KernelConfig, KernelFilter};
pub use solver::{SolverConfig, SolverTrace};
pub use space::WeightedSpace;
