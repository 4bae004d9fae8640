//! Power-sum seeding.
//!
//! With `s_m = sum_j (rho_j - a)^(-m)` the ratio `s_(M-1) / s_M` tends to
//! `rho_near - a` as `M` grows, where `rho_near` is the root closest to the
//! shift `a`. Replacing the shift by that estimate and repeating walks the
//! shift into a convergence disk.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laguerre::{ConvergenceDisk, MIN_CERTIFIED_DEGREE};
use crate::polynomial::Polynomial;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Relative size below which `s_(M-1)` is treated as cancelled out.
const CANCELLATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaOptions {
    pub order: usize,
    pub max_shifts: usize,
    pub perturbation: f64,
}

impl Default for SpaOptions {
    fn default() -> Self {
        SpaOptions {
            order: 8,
            max_shifts: 40,
            perturbation: 1e-3,
        }
    }
}

impl SpaOptions {
    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(Error::InvalidConfig("power sum order must be at least 2"));
        }
        if self.max_shifts == 0 {
            return Err(Error::InvalidConfig("max_shifts must be at least 1"));
        }
        if !(self.perturbation > 0.0) || !self.perturbation.is_finite() {
            return Err(Error::InvalidConfig("perturbation must be positive"));
        }
        Ok(())
    }
}

/// Estimate of the root nearest to `shift`: `shift + s_(M-1) / s_M`.
///
/// Fails with [`Error::DegenerateSums`] when `s_M` vanishes or `s_(M-1)`
/// cancels, which happens when several roots are equidistant from `shift`.
pub fn nearest_root_estimate(p: &Polynomial, shift: Complex64, order: usize) -> Result<Complex64> {
    if order < 2 {
        return Err(Error::InvalidConfig("power sum order must be at least 2"));
    }
    let sums = match p.taylor_shift(shift).reciprocal_power_sums(order) {
        Ok(s) => s,
        Err(Error::NonFinite) => return Err(Error::DegenerateSums),
        Err(e) => return Err(e),
    };
    let last = sums.get(order);
    let prev = sums.get(order - 1);
    let last_mag = last.norm();
    if last_mag < 1e-300 {
        return Err(Error::DegenerateSums);
    }
    let expected = last_mag.powf((order - 1) as f64 / order as f64);
    if prev.norm() <= CANCELLATION_TOL * expected {
        return Err(Error::DegenerateSums);
    }
    let estimate = shift + prev / last;
    if !(estimate.re.is_finite() && estimate.im.is_finite()) {
        return Err(Error::DegenerateSums);
    }
    Ok(estimate)
}

/// Shift iteration shared by [`spa_seed`] and the full solver. `accept`
/// decides whether a shift point is good enough and returns a payload.
pub(crate) fn seed_with<T>(
    p: &Polynomial,
    opts: &SpaOptions,
    start: Complex64,
    mut accept: impl FnMut(Complex64) -> Option<T>,
) -> Result<(Complex64, T)> {
    opts.validate()?;
    let mut shift = start;
    let mut perturbations = 0usize;
    let mut last_step: Option<f64> = None;
    for _ in 0..opts.max_shifts {
        if let Some(hit) = accept(shift) {
            return Ok((shift, hit));
        }
        let next = match nearest_root_estimate(p, shift, opts.order) {
            Ok(est) => {
                let step = (est - shift).norm();
                // a growing step means the sums are dominated by several roots
                let stalled = step <= 1e-15 * shift.norm().max(1.0);
                if stalled || last_step.is_some_and(|prev| step > prev) {
                    None
                } else {
                    last_step = Some(step);
                    Some(est)
                }
            }
            Err(Error::DegenerateSums) | Err(Error::RootAtShiftPoint) => None,
            Err(e) => return Err(e),
        };
        shift = match next {
            Some(est) => est,
            None => {
                let turn = Complex64::from_polar(1.0, perturbations as f64 * GOLDEN_ANGLE);
                perturbations += 1;
                last_step = None;
                shift
                    + Complex64::new(1.0, 1.0) * turn * (opts.perturbation * shift.norm().max(1.0))
            }
        };
    }
    if let Some(hit) = accept(shift) {
        return Ok((shift, hit));
    }
    Err(Error::SeedingFailed {
        last: shift,
        shifts: opts.max_shifts,
    })
}

/// Walks the shift point from `start` until it lies strictly inside one of
/// `disks`; returns the point and the index of that disk.
pub fn spa_seed(
    p: &Polynomial,
    disks: &[ConvergenceDisk],
    opts: &SpaOptions,
    start: Complex64,
) -> Result<(Complex64, usize)> {
    let n = p.degree();
    if n < MIN_CERTIFIED_DEGREE {
        return Err(Error::DegreeTooLow {
            degree: n,
            min: MIN_CERTIFIED_DEGREE,
        });
    }
    if disks.is_empty() {
        return Err(Error::InvalidConfig(
            "at least one convergence disk is required",
        ));
    }
    seed_with(p, opts, start, |a| disks.iter().position(|d| d.contains(a)))
}
