//! Certified polynomial rootfinding built around Laguerre's iteration.
//!
//! The crate is organised bottom-up:
//!
//! * [`polynomial`]: coefficient storage, Horner evaluation with derivatives,
//!   deflation, Taylor shifts and reciprocal power sums.
//! * [`laguerre`]: the Laguerre step, guaranteed-convergence disks around
//!   simple roots and the iteration driver.
//! * [`spa`]: power-sum seeding that walks a shift point into a convergence disk.
//! * [`laspa`]: the complete solver combining seeding, iteration, polishing
//!   and certification.
//! * [`roots_iteration`]: the Laguerre step expressed through the roots only.
//! * [`viz`]: basin-of-attraction rasters and binary PPM output.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod laguerre;
pub mod laspa;
pub mod polynomial;
pub mod roots_iteration;
pub mod spa;
pub mod viz;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use laguerre::{
    a_priori_radius_bound, convergence_radius, iterate_to_root, laguerre_step, ConvergenceDisk,
    IterationOptions, IterationTrace, StopReason,
};
pub use laspa::{certify_root, find_all_roots, Rejection, RootEstimate, SolveConfig, SolveFailure};
pub use polynomial::{EvalTriple, Polynomial, PowerSums};
pub use roots_iteration::{laguerre_step_from_roots, sums_at, RootSet, SumPair};
pub use spa::{nearest_root_estimate, spa_seed, SpaOptions};
pub use viz::{
    colorize, iterate_pixel, pixel_grid, ppm_bytes, render_basins, render_basins_serial, write_ppm,
    write_stats, BasinImage, BasinPixel, RasterConfig,
};
