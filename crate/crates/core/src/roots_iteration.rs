//! The Laguerre step written in terms of the roots alone.
//!
//! With `S1 = sum 1/(z - rho_j) = p'/p` and `S2 = sum 1/(z - rho_j)^2 =
//! (p'/p)^2 - p''/p` the classical step becomes
//! `z - n / (S1 +- sqrt((n-1)(n S2 - S1^2)))`; no polynomial values appear.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laguerre::max_denominator;
use crate::polynomial::all_finite;

/// Pairwise distinct roots, at least two.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex64>,
}

impl RootSet {
    pub fn new(roots: Vec<Complex64>) -> Result<Self> {
        if roots.len() < 2 {
            return Err(Error::DegreeTooLow {
                degree: roots.len(),
                min: 2,
            });
        }
        if !all_finite(&roots) {
            return Err(Error::NonFinite);
        }
        for (i, a) in roots.iter().enumerate() {
            if roots[i + 1..].iter().any(|b| (a - b).norm() == 0.0) {
                return Err(Error::RepeatedRoot);
            }
        }
        Ok(RootSet { roots })
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumPair {
    pub s1: Complex64,
    pub s2: Complex64,
}

pub fn sums_at(rs: &RootSet, z: Complex64) -> Result<SumPair> {
    let mut s1 = Complex64::new(0.0, 0.0);
    let mut s2 = Complex64::new(0.0, 0.0);
    for &r in &rs.roots {
        let d = z - r;
        if d.norm() == 0.0 {
            return Err(Error::PoleAtRoot);
        }
        let inv = d.inv();
        s1 += inv;
        s2 += inv * inv;
    }
    Ok(SumPair { s1, s2 })
}

/// Laguerre step from the root sums. Branch and tie rules match
/// [`crate::laguerre::laguerre_step`].
pub fn laguerre_step_from_roots(rs: &RootSet, z: Complex64) -> Result<Complex64> {
    let SumPair { s1, s2 } = sums_at(rs, z)?;
    let n = rs.len() as f64;
    let disc = (s2 * n - s1 * s1) * (n - 1.0);
    let denom = max_denominator(s1, disc).ok_or(Error::SingularStep)?;
    Ok(z - n / denom)
}
