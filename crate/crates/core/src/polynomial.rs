//! Dense complex polynomials in ascending-power storage.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `p(z) = c_0 + c_1 z + ... + c_n z^n` with `coeffs[k] = c_k`.
///
/// A valid polynomial has degree at least one, a nonzero leading coefficient
/// and only finite coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

/// Value, first and second derivative at a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalTriple {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

/// Power sums `s_m = sum_j (rho_j - shift)^(-m)` for `m = 1..=order`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums {
    pub sums: Vec<Complex64>,
    pub shift: Complex64,
    pub order: usize,
}

impl PowerSums {
    /// `s_m`, 1-based.
    pub fn get(&self, m: usize) -> Complex64 {
        self.sums[m - 1]
    }
}

pub(crate) fn all_finite(z: &[Complex64]) -> bool {
    z.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite);
        }
        if coeffs.len() < 2 {
            return Err(Error::DegreeTooLow { degree: 0, min: 1 });
        }
        if coeffs[coeffs.len() - 1].norm() == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(Polynomial { coeffs })
    }

    /// Convenience constructor for real coefficient lists.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Second-order Horner scheme: `p`, `p'` and `p''` in one pass.
    pub fn eval_triple(&self, z: Complex64) -> EvalTriple {
        let n = self.degree();
        let mut p = self.coeffs[n];
        let mut d1 = Complex64::new(0.0, 0.0);
        // accumulates p''/2
        let mut half_d2 = Complex64::new(0.0, 0.0);
        for &c in self.coeffs[..n].iter().rev() {
            half_d2 = half_d2 * z + d1;
            d1 = d1 * z + p;
            p = p * z + c;
        }
        EvalTriple {
            value: p,
            d1,
            d2: half_d2 * 2.0,
        }
    }

    /// Magnitude scale `sum_j |c_j| max(1, |z|)^j` used for relative residuals.
    pub fn scale_at(&self, z: Complex64) -> f64 {
        let r = z.norm().max(1.0);
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// `|p(z)| / scale_at(z)`.
    pub fn relative_residual(&self, z: Complex64) -> f64 {
        self.eval(z).norm() / self.scale_at(z)
    }

    /// `leading * prod_j (z - roots[j])`, multiplied out in index order.
    pub fn from_roots(roots: &[Complex64], leading: Complex64) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::EmptyRootList);
        }
        if leading.norm() == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if !all_finite(roots) || !all_finite(&[leading]) {
            return Err(Error::NonFinite);
        }
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(leading);
        for &r in roots {
            coeffs.push(Complex64::new(0.0, 0.0));
            for k in (1..coeffs.len()).rev() {
                coeffs[k] = coeffs[k - 1] - r * coeffs[k];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Polynomial::new(coeffs)
    }

    /// Quotient of `p(z) / (z - root)` by forward synthetic division; the
    /// remainder is dropped.
    pub fn deflate(&self, root: Complex64) -> Result<Self> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooLow { degree: n, min: 2 });
        }
        let mut q = vec![Complex64::new(0.0, 0.0); n];
        q[n - 1] = self.coeffs[n];
        for k in (1..n).rev() {
            q[k - 1] = self.coeffs[k] + root * q[k];
        }
        Polynomial::new(q)
    }

    /// Coefficients of `p(z + a)`.
    pub fn taylor_shift(&self, a: Complex64) -> Self {
        let mut c = self.coeffs.clone();
        let n = self.degree();
        if a.norm() != 0.0 {
            for i in 0..n {
                for j in (i..n).rev() {
                    let next = c[j + 1];
                    c[j] += a * next;
                }
            }
        }
        Polynomial { coeffs: c }
    }

    /// Power sums of the reciprocal roots, `s_m = sum_j rho_j^(-m)`, from the
    /// Newton identities of the monic reversed polynomial.
    pub fn reciprocal_power_sums(&self, order: usize) -> Result<PowerSums> {
        if order == 0 {
            return Err(Error::InvalidConfig("power sum order must be at least 1"));
        }
        let c0 = self.coeffs[0];
        if c0.norm() == 0.0 {
            return Err(Error::RootAtShiftPoint);
        }
        let n = self.degree();
        // reversed monic: z^n + b_1 z^(n-1) + ... + b_n with b_k = c_k / c_0
        let b: Vec<Complex64> = self.coeffs.iter().map(|&c| c / c0).collect();
        let mut s: Vec<Complex64> = Vec::with_capacity(order);
        for m in 1..=order {
            let mut acc = if m <= n {
                b[m] * m as f64
            } else {
                Complex64::new(0.0, 0.0)
            };
            for k in 1..m.min(n + 1) {
                acc += b[k] * s[m - k - 1];
            }
            s.push(-acc);
        }
        if !all_finite(&s) {
            return Err(Error::NonFinite);
        }
        Ok(PowerSums {
            sums: s,
            shift: Complex64::new(0.0, 0.0),
            order,
        })
    }
}
