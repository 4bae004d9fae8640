//! Laguerre's iteration and guaranteed-convergence disks around simple roots.
//!
//! # Convergence disks
//!
//! Let `rho` be a simple root of a degree-`n` polynomial and `delta` the
//! distance from `rho` to the nearest other root. Writing `w = z - rho` and
//! `t = |w| / (delta - |w|)`, the Laguerre step from `z` satisfies
//!
//! ```text
//! |w'| <= |w| * N(t) / (n - N(t)),
//! N(t) = (n - 1) t + (n - 1) g(eps(t)),
//! eps(t) = 2t + (2n - 1) t^2,   g(e) = e / (1 + sqrt(1 - e)),
//! ```
//!
//! and whenever `N(t) < 1` the maximal-denominator branch is the one aligned
//! with `1/w`. Since `N` increases with `t`, every start with `t < t*`
//! (where `N(t*) = 1`) contracts by at least `1/(n-1)` per step and stays in
//! the region, so the iteration converges to `rho`. In terms of distance the
//! guaranteed radius is `kappa(n) * delta` with `kappa = t* / (1 + t*)`.
//!
//! `delta` is not known from `p` alone, so [`convergence_radius`] replaces
//! it by the Cauchy lower bound for the roots of `p(rho + w) / w`, which
//! never exceeds `delta`. [`a_priori_radius_bound`] combines Mahler's root
//! separation bound with the worst-case ratio between the Cauchy bound and
//! the true nearest-root distance, `2^(1/(n-1)) - 1`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Minimum degree for which convergence disks are available.
pub const MIN_CERTIFIED_DEGREE: usize = 4;

/// Relative slack applied to strict disk membership.
const BOUNDARY_SLACK: f64 = 1e-12;

/// Threshold on `|p'(root)|` relative to the Taylor-coefficient scale.
const SIMPLE_ROOT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceDisk {
    pub center: Complex64,
    pub radius: f64,
}

impl ConvergenceDisk {
    /// Strict membership with a small relative guard at the boundary.
    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius * (1.0 - BOUNDARY_SLACK)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StopReason {
    ResidualBelowTolerance,
    StepBelowTolerance,
    EnteredCertifiedDisk,
    MaxIterations,
    SingularStep,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub iterates: Vec<Complex64>,
    pub stop_reason: StopReason,
    pub final_value: Complex64,
}

impl IterationTrace {
    /// Number of Laguerre steps taken.
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationOptions {
    pub max_iters: usize,
    pub residual_tol: f64,
    pub step_tol: f64,
}

impl Default for IterationOptions {
    fn default() -> Self {
        IterationOptions {
            max_iters: 80,
            residual_tol: 1e-13,
            step_tol: 1e-14,
        }
    }
}

impl IterationOptions {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1"));
        }
        if !(self.residual_tol > 0.0) || !(self.step_tol > 0.0) {
            return Err(Error::InvalidConfig("tolerances must be positive"));
        }
        Ok(())
    }
}

/// Picks `base + sqrt(disc)` or `base - sqrt(disc)` (principal root),
/// whichever is larger in magnitude; exact ties go to the `+` candidate.
pub(crate) fn max_denominator(base: Complex64, disc: Complex64) -> Option<Complex64> {
    let root = disc.sqrt();
    let plus = base + root;
    let minus = base - root;
    let (np, nm) = (plus.norm(), minus.norm());
    if np == 0.0 && nm == 0.0 {
        None
    } else if nm > np {
        Some(minus)
    } else {
        Some(plus)
    }
}

/// One Laguerre step `z - n p / (p' +- sqrt((n-1)((n-1) p'^2 - n p p'')))`.
pub fn laguerre_step(p: &Polynomial, z: Complex64) -> Result<Complex64> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { degree: n, min: 2 });
    }
    let t = p.eval_triple(z);
    if t.value.norm() <= f64::EPSILON * p.scale_at(z) {
        return Ok(z);
    }
    let nf = n as f64;
    let disc = (t.d1 * t.d1 * (nf - 1.0) - t.value * t.d2 * nf) * (nf - 1.0);
    let denom = max_denominator(t.d1, disc).ok_or(Error::SingularStep)?;
    Ok(z - t.value * nf / denom)
}

/// Upper bound `N(t)` on the perturbation terms of a Laguerre step at relative
/// distance `t`; infinite outside the region where the bound is defined.
fn perturbation_bound(n: usize, t: f64) -> f64 {
    let nf = n as f64;
    let eps = 2.0 * t + (2.0 * nf - 1.0) * t * t;
    if eps >= 1.0 {
        return f64::INFINITY;
    }
    (nf - 1.0) * t + (nf - 1.0) * eps / (1.0 + (1.0 - eps).sqrt())
}

/// Ratio `kappa(n)` between the guaranteed radius and the nearest-root distance.
pub fn radius_factor(n: usize) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if perturbation_bound(n, mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo / (1.0 + lo)
}

/// Positive root of `|a_1| = sum_{k>=2} |a_k| r^(k-1)`, a lower bound on the
/// modulus of every root of `a_1 + a_2 w + ... + a_n w^(n-1)`.
fn cauchy_lower_bound(taylor: &[Complex64]) -> f64 {
    let mags: Vec<f64> = taylor.iter().map(|c| c.norm()).collect();
    let a1 = mags[1];
    let f = |r: f64| mags[2..].iter().rev().fold(0.0, |acc, &m| acc * r + m) * r - a1;
    let mut hi = 1.0_f64;
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0_f64;
    for _ in 0..1100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Disk around `root` from which Laguerre's iteration is guaranteed to
/// converge to `root`.
///
/// The center may be an approximation: the distance to the exact root is
/// estimated as `2|p(root)| / |p'(root)|` and subtracted from both the
/// separation estimate and the resulting radius.
pub fn convergence_radius(p: &Polynomial, root: Complex64) -> Result<ConvergenceDisk> {
    let n = p.degree();
    if n < MIN_CERTIFIED_DEGREE {
        return Err(Error::DegreeTooLow {
            degree: n,
            min: MIN_CERTIFIED_DEGREE,
        });
    }
    let shifted = p.taylor_shift(root);
    let a = shifted.coeffs();
    let slope = a[1].norm();
    let scale: f64 = a[1..].iter().map(|c| c.norm()).sum();
    if !(slope > SIMPLE_ROOT_TOL * scale) {
        return Err(Error::NotASimpleRoot);
    }
    let offset = 2.0 * a[0].norm() / slope;
    let separation = cauchy_lower_bound(a) - offset;
    let radius = radius_factor(n) * separation - offset;
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::NotASimpleRoot);
    }
    Ok(ConvergenceDisk {
        center: root,
        radius,
    })
}

/// `ln |det m|` by Gaussian elimination with partial pivoting.
fn log_abs_det(mut m: Vec<Vec<Complex64>>) -> f64 {
    let size = m.len();
    let mut log_det = 0.0;
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        let pv = m[pivot][col];
        if pv.norm() == 0.0 {
            return f64::NEG_INFINITY;
        }
        m.swap(col, pivot);
        log_det += pv.norm().ln();
        for row in col + 1..size {
            let factor = m[row][col] / pv;
            if factor.norm() == 0.0 {
                continue;
            }
            let (upper, lower) = m.split_at_mut(row);
            for (t, &v) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *t -= factor * v;
            }
        }
    }
    log_det
}

/// Lower bound valid for the radii of all convergence disks of `p`, computed
/// from the coefficients only. Requires every root of `p` to be simple.
pub fn a_priori_radius_bound(p: &Polynomial) -> Result<f64> {
    let n = p.degree();
    if n < MIN_CERTIFIED_DEGREE {
        return Err(Error::DegreeTooLow {
            degree: n,
            min: MIN_CERTIFIED_DEGREE,
        });
    }
    let norm = p.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let c: Vec<Complex64> = p.coeffs().iter().map(|&x| x / norm).collect();
    let dc: Vec<Complex64> = (1..=n).map(|k| c[k] * k as f64).collect();

    // Sylvester matrix of p and p' with descending coefficients
    let size = 2 * n - 1;
    let zero = Complex64::new(0.0, 0.0);
    let mut sylvester = vec![vec![zero; size]; size];
    for row in 0..n - 1 {
        for (k, &v) in c.iter().rev().enumerate() {
            sylvester[row][row + k] = v;
        }
    }
    for row in 0..n {
        for (k, &v) in dc.iter().rev().enumerate() {
            sylvester[n - 1 + row][row + k] = v;
        }
    }
    let log_disc = log_abs_det(sylvester) - c[n].norm().ln();
    let nf = n as f64;
    // Mahler: sep > sqrt(3 |D|) n^(-(n+2)/2) M(p)^(-(n-1)), M(p) <= ||p||_2 = 1
    let log_sep = 0.5 * (3.0_f64.ln() + log_disc) - 0.5 * (nf + 2.0) * nf.ln();
    let cauchy_ratio = 2.0_f64.powf(1.0 / (nf - 1.0)) - 1.0;
    let bound = 0.5 * radius_factor(n) * cauchy_ratio * log_sep.exp();
    if !(bound > 0.0) || !bound.is_finite() {
        return Err(Error::NotASimpleRoot);
    }
    Ok(bound)
}

/// Runs Laguerre steps from `z0` until a stopping condition holds.
///
/// Checked in order at each iterate: relative residual, membership in any of
/// `disks`, then the step itself. A singular step ends the trace.
pub fn iterate_to_root(
    p: &Polynomial,
    z0: Complex64,
    opts: &IterationOptions,
    disks: Option<&[ConvergenceDisk]>,
) -> Result<IterationTrace> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { degree: n, min: 2 });
    }
    opts.validate()?;
    let mut iterates = vec![z0];
    let mut z = z0;
    let finish = |iterates: Vec<Complex64>, reason| IterationTrace {
        final_value: *iterates.last().unwrap(),
        iterates,
        stop_reason: reason,
    };
    for _ in 0..opts.max_iters {
        if p.eval(z).norm() <= opts.residual_tol * p.scale_at(z) {
            return Ok(finish(iterates, StopReason::ResidualBelowTolerance));
        }
        if disks.is_some_and(|ds| ds.iter().any(|d| d.contains(z))) {
            return Ok(finish(iterates, StopReason::EnteredCertifiedDisk));
        }
        let next = match laguerre_step(p, z) {
            Ok(next) => next,
            Err(Error::SingularStep) => {
                return Ok(finish(iterates, StopReason::SingularStep));
            }
            Err(e) => return Err(e),
        };
        iterates.push(next);
        if (next - z).norm() <= opts.step_tol * z.norm().max(1.0) {
            return Ok(finish(iterates, StopReason::StepBelowTolerance));
        }
        z = next;
    }
    if p.eval(z).norm() <= opts.residual_tol * p.scale_at(z) {
        return Ok(finish(iterates, StopReason::ResidualBelowTolerance));
    }
    Ok(finish(iterates, StopReason::MaxIterations))
}
