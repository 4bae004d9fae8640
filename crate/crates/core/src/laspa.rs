//! The full solver: seed with power sums, converge with Laguerre, polish
//! against the input polynomial, deflate, and certify every root.

use num_complex::Complex64;
use thiserror::Error;

use crate::error::Error;
use crate::laguerre::{
    convergence_radius, iterate_to_root, laguerre_step, ConvergenceDisk, IterationOptions,
    StopReason, MIN_CERTIFIED_DEGREE,
};
use crate::polynomial::Polynomial;
use crate::spa::{seed_with, SpaOptions};

/// Relative residual a root must reach before it can be certified.
pub const CERTIFY_RESIDUAL_TOL: f64 = 1e-10;

/// Why an estimate was left uncertified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    DegreeTooLow,
    ResidualTooLarge,
    NotASimpleRoot,
    OutsideDisk,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootEstimate {
    pub value: Complex64,
    /// Relative residual against the input polynomial.
    pub residual: f64,
    pub certified: bool,
    pub disk: Option<ConvergenceDisk>,
    pub rejection: Option<Rejection>,
}

impl RootEstimate {
    fn uncertified(p: &Polynomial, value: Complex64, why: Rejection) -> Self {
        RootEstimate {
            value,
            residual: p.relative_residual(value),
            certified: false,
            disk: None,
            rejection: Some(why),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub iteration: IterationOptions,
    pub spa: SpaOptions,
    pub polish_steps: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            iteration: IterationOptions::default(),
            spa: SpaOptions::default(),
            polish_steps: 2,
        }
    }
}

/// A solve that stopped early; `partial` holds the roots found so far.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{error} ({} roots found before failure)", partial.len())]
pub struct SolveFailure {
    pub partial: Vec<RootEstimate>,
    #[source]
    pub error: Error,
}

/// Refines `estimate` by one Laguerre step on `p`, then checks that the
/// result is a simple root with a convergence disk containing `estimate`.
pub fn certify_root(p: &Polynomial, estimate: Complex64) -> RootEstimate {
    if p.degree() < MIN_CERTIFIED_DEGREE {
        return RootEstimate::uncertified(p, estimate, Rejection::DegreeTooLow);
    }
    let refined = laguerre_step(p, estimate).unwrap_or(estimate);
    let residual = p.relative_residual(refined);
    if !(residual < CERTIFY_RESIDUAL_TOL) {
        return RootEstimate::uncertified(p, refined, Rejection::ResidualTooLarge);
    }
    let disk = match convergence_radius(p, refined) {
        Ok(d) => d,
        Err(_) => return RootEstimate::uncertified(p, refined, Rejection::NotASimpleRoot),
    };
    if !disk.contains(estimate) {
        return RootEstimate::uncertified(p, refined, Rejection::OutsideDisk);
    }
    RootEstimate {
        value: refined,
        residual,
        certified: true,
        disk: Some(disk),
        rejection: None,
    }
}

fn polish(p: &Polynomial, mut z: Complex64, steps: usize) -> Complex64 {
    if p.degree() < 2 {
        return z;
    }
    for _ in 0..steps {
        match laguerre_step(p, z) {
            Ok(next) if next.re.is_finite() && next.im.is_finite() => z = next,
            _ => break,
        }
    }
    z
}

fn perturb(z: Complex64) -> Complex64 {
    z + Complex64::new(1e-3, 1e-3) * z.norm().max(1.0)
}

/// Roots of `c0 + c1 z + c2 z^2` without cancellation.
fn quadratic_roots(p: &Polynomial) -> [Complex64; 2] {
    let (c, b, a) = (p.coeffs()[0], p.coeffs()[1], p.coeffs()[2]);
    let root = (b * b - a * c * 4.0).sqrt();
    // sign matched to b so that |b + root| is maximal
    let root = if (b.conj() * root).re < 0.0 {
        -root
    } else {
        root
    };
    let q = -(b + root) * 0.5;
    if q.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 2];
    }
    [q / a, c / q]
}

fn cubic_root(p: &Polynomial, opts: &IterationOptions) -> Complex64 {
    let mut start = Complex64::new(0.0, 0.0);
    for _ in 0..8 {
        match iterate_to_root(p, start, opts, None) {
            Ok(trace) if trace.stop_reason == StopReason::SingularStep => {
                start = perturb(trace.final_value);
            }
            Ok(trace) => return trace.final_value,
            Err(_) => break,
        }
    }
    start
}

/// Finds all `degree(p)` roots, sorted lexicographically by `(re, im)`.
pub fn find_all_roots(
    p: &Polynomial,
    cfg: &SolveConfig,
) -> Result<Vec<RootEstimate>, SolveFailure> {
    let fail = |partial: Vec<RootEstimate>, error| SolveFailure { partial, error };
    if let Err(e) = cfg.iteration.validate().and_then(|_| cfg.spa.validate()) {
        return Err(fail(Vec::new(), e));
    }
    let finish = |found: &[Complex64]| -> Vec<RootEstimate> {
        let mut out: Vec<RootEstimate> = found
            .iter()
            .map(|&z| {
                if p.degree() >= MIN_CERTIFIED_DEGREE {
                    certify_root(p, z)
                } else {
                    RootEstimate::uncertified(p, z, Rejection::DegreeTooLow)
                }
            })
            .collect();
        out.sort_by(|a, b| {
            a.value
                .re
                .total_cmp(&b.value.re)
                .then(a.value.im.total_cmp(&b.value.im))
        });
        out
    };

    let mut found = Vec::with_capacity(p.degree());
    let mut current = p.clone();
    while current.degree() >= MIN_CERTIFIED_DEGREE {
        let seeded = seed_with(&current, &cfg.spa, Complex64::new(0.0, 0.0), |a| {
            let trace = iterate_to_root(&current, a, &cfg.iteration, None).ok()?;
            let disk = convergence_radius(&current, trace.final_value).ok()?;
            disk.contains(a).then_some(trace.final_value)
        });
        let root = match seeded {
            Ok((_, root)) => root,
            Err(e) => return Err(fail(finish(&found), e)),
        };
        let root = polish(p, root, cfg.polish_steps);
        found.push(root);
        current = current.deflate(root).map_err(|e| fail(finish(&found), e))?;
    }
    if current.degree() == 3 {
        let root = polish(p, cubic_root(&current, &cfg.iteration), cfg.polish_steps);
        found.push(root);
        current = current.deflate(root).map_err(|e| fail(finish(&found), e))?;
    }
    if current.degree() == 2 {
        for root in quadratic_roots(&current) {
            found.push(polish(p, root, cfg.polish_steps));
        }
    } else {
        let c = current.coeffs();
        found.push(polish(p, -c[0] / c[1], cfg.polish_steps));
    }
    Ok(finish(&found))
}
