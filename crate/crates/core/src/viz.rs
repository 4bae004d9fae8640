//! Basin-of-attraction rasters for the root-form Laguerre iteration.
//!
//! Each pixel center is iterated until it enters the convergence disk of
//! some root; the pixel records which root and after how many steps.

use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laguerre::ConvergenceDisk;
use crate::roots_iteration::{laguerre_step_from_roots, RootSet};

/// Relative distance used as the stopping test when no disks are supplied.
pub const PROXIMITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RasterConfig {
    pub center: Complex64,
    /// Side length of the square in the complex plane.
    pub side: f64,
    /// The image is `px` by `px`.
    pub px: usize,
    pub max_iters: usize,
}

impl RasterConfig {
    pub fn new(center: Complex64, side: f64, px: usize, max_iters: usize) -> Result<Self> {
        let cfg = RasterConfig {
            center,
            side,
            px,
            max_iters,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.side > 0.0) || !self.side.is_finite() {
            return Err(Error::InvalidConfig("side must be positive"));
        }
        if self.px == 0 {
            return Err(Error::InvalidConfig("px must be at least 1"));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1"));
        }
        if !(self.center.re.is_finite() && self.center.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasinPixel {
    pub root_index: Option<usize>,
    pub iters: usize,
}

/// Row-major pixels; row 0 is the top (largest imaginary part).
#[derive(Debug, Clone, PartialEq)]
pub struct BasinImage {
    pub config: RasterConfig,
    pub pixels: Vec<BasinPixel>,
}

impl BasinImage {
    /// Pixel counts per root index, plus the count of unconverged pixels.
    pub fn counts(&self, n: usize) -> (Vec<usize>, usize) {
        let mut per_root = vec![0; n];
        let mut none = 0;
        for p in &self.pixels {
            match p.root_index {
                Some(k) if k < n => per_root[k] += 1,
                _ => none += 1,
            }
        }
        (per_root, none)
    }

    pub fn none_rate(&self) -> f64 {
        let none = self
            .pixels
            .iter()
            .filter(|p| p.root_index.is_none())
            .count();
        none as f64 / self.pixels.len() as f64
    }
}

/// Pixel centers in row-major order.
pub fn pixel_grid(cfg: &RasterConfig) -> Vec<Complex64> {
    let step = cfg.side / cfg.px as f64;
    let left = cfg.center.re - cfg.side / 2.0;
    let top = cfg.center.im + cfg.side / 2.0;
    (0..cfg.px)
        .flat_map(|i| {
            let im = top - (i as f64 + 0.5) * step;
            (0..cfg.px).map(move |j| Complex64::new(left + (j as f64 + 0.5) * step, im))
        })
        .collect()
}

fn stopped_at(rs: &RootSet, disks: &[ConvergenceDisk], z: Complex64) -> Option<usize> {
    if disks.is_empty() {
        rs.roots()
            .iter()
            .position(|r| (z - r).norm() < PROXIMITY_TOL * r.norm().max(1.0))
    } else {
        disks.iter().position(|d| d.contains(z))
    }
}

/// Iterates the root-form step from `z0`. `disks[k]` must belong to root
/// `k`; with no disks, stopping falls back to proximity to a root.
pub fn iterate_pixel(
    rs: &RootSet,
    disks: &[ConvergenceDisk],
    z0: Complex64,
    max_iters: usize,
) -> BasinPixel {
    let unconverged = BasinPixel {
        root_index: None,
        iters: max_iters,
    };
    let mut z = z0;
    for k in 0..=max_iters {
        if let Some(idx) = stopped_at(rs, disks, z) {
            return BasinPixel {
                root_index: Some(idx),
                iters: k,
            };
        }
        if k == max_iters {
            break;
        }
        z = match laguerre_step_from_roots(rs, z) {
            Ok(next) if next.re.is_finite() && next.im.is_finite() => next,
            Err(Error::PoleAtRoot) => {
                let idx = rs.roots().iter().position(|&r| r == z);
                return BasinPixel {
                    root_index: idx,
                    iters: if idx.is_some() { k } else { max_iters },
                };
            }
            _ => return unconverged,
        };
    }
    unconverged
}

/// Hue by root, brightness by iteration count; unconverged pixels are black.
pub fn colorize(pixel: &BasinPixel, n: usize, max_iters: usize) -> [u8; 3] {
    let Some(root) = pixel.root_index else {
        return [0, 0, 0];
    };
    let hue = 360.0 * root as f64 / n as f64;
    let value = 0.35 + 0.65 * (1.0 - pixel.iters as f64 / max_iters as f64);
    let chroma = value * 0.9;
    let sector = hue / 60.0;
    let x = chroma * (1.0 - (sector % 2.0 - 1.0).abs());
    let (r, g, b) = match sector as u32 {
        0 => (chroma, x, 0.0),
        1 => (x, chroma, 0.0),
        2 => (0.0, chroma, x),
        3 => (0.0, x, chroma),
        4 => (x, 0.0, chroma),
        _ => (chroma, 0.0, x),
    };
    let m = value - chroma;
    let byte = |c: f64| ((c + m) * 255.0).floor().clamp(0.0, 255.0) as u8;
    [byte(r), byte(g), byte(b)]
}

/// Renders every pixel in parallel. Each result is stored at its own index,
/// so the image does not depend on scheduling.
pub fn render_basins(rs: &RootSet, disks: &[ConvergenceDisk], cfg: &RasterConfig) -> BasinImage {
    let pixels = pixel_grid(cfg)
        .into_par_iter()
        .map(|z| iterate_pixel(rs, disks, z, cfg.max_iters))
        .collect();
    BasinImage {
        config: *cfg,
        pixels,
    }
}

pub fn render_basins_serial(
    rs: &RootSet,
    disks: &[ConvergenceDisk],
    cfg: &RasterConfig,
) -> BasinImage {
    let pixels = pixel_grid(cfg)
        .into_iter()
        .map(|z| iterate_pixel(rs, disks, z, cfg.max_iters))
        .collect();
    BasinImage {
        config: *cfg,
        pixels,
    }
}

/// Binary PPM (P6) with `n` roots in the palette.
pub fn write_ppm<W: Write>(img: &BasinImage, n: usize, mut out: W) -> io::Result<()> {
    let px = img.config.px;
    write!(out, "P6\n{px} {px}\n255\n")?;
    let mut payload = Vec::with_capacity(3 * img.pixels.len());
    for p in &img.pixels {
        payload.extend_from_slice(&colorize(p, n, img.config.max_iters));
    }
    out.write_all(&payload)?;
    out.flush()
}

pub fn ppm_bytes(img: &BasinImage, n: usize) -> Vec<u8> {
    let mut buf = Vec::new();
    write_ppm(img, n, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

/// Sidecar statistics: one `root_index count` line per root, then `none count`.
pub fn write_stats<W: Write>(img: &BasinImage, n: usize, mut out: W) -> io::Result<()> {
    let (per_root, none) = img.counts(n);
    for (k, count) in per_root.iter().enumerate() {
        writeln!(out, "{k} {count}")?;
    }
    writeln!(out, "none {none}")?;
    out.flush()
}
