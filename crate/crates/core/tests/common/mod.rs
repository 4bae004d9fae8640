#![allow(dead_code)]

use laspa_core::{Complex64, Polynomial};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the disk of radius `r` around `center`.
pub fn in_disk(rng: &mut impl Rng, center: Complex64, r: f64) -> Complex64 {
    let rho = r * rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    center + Complex64::from_polar(rho, theta)
}

/// `n` roots of modulus at most `max_mod` with pairwise distance at least `min_sep`.
pub fn separated_roots(rng: &mut impl Rng, n: usize, max_mod: f64, min_sep: f64) -> Vec<Complex64> {
    let mut roots: Vec<Complex64> = Vec::with_capacity(n);
    while roots.len() < n {
        let z = in_disk(rng, c(0.0, 0.0), max_mod);
        if roots.iter().all(|r| (r - z).norm() >= min_sep) {
            roots.push(z);
        }
    }
    roots
}

pub struct SuiteCase {
    pub roots: Vec<Complex64>,
    pub poly: Polynomial,
}

/// Random polynomials of degree `lo..=hi` with simple, separated roots
/// (pairwise distance >= 0.5, modulus <= 3).
pub fn suite(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<SuiteCase> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let roots = separated_roots(&mut rng, n, 3.0, 0.5);
            let lead = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen::<f64>() * 6.0);
            let poly = Polynomial::from_roots(&roots, lead).unwrap();
            SuiteCase { roots, poly }
        })
        .collect()
}

/// Eigenvalues of the companion matrix, via a complex Schur decomposition.
pub fn companion_roots(p: &Polynomial) -> Vec<Complex64> {
    let n = p.degree();
    let cs = p.coeffs();
    let lead = cs[n];
    let m = DMatrix::<Complex64>::from_fn(n, n, |i, j| {
        if i == 0 {
            -cs[n - 1 - j] / lead
        } else if i == j + 1 {
            c(1.0, 0.0)
        } else {
            c(0.0, 0.0)
        }
    });
    let schur = m.schur();
    let (_, t) = schur.unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Minimal bottleneck distance over all perfect matchings between `a` and `b`.
pub fn pairing_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut dists: Vec<f64> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (x - y).norm()))
        .collect();
    dists.sort_by(f64::total_cmp);
    dists.dedup();
    let matchable = |limit: f64| -> bool {
        let mut owner: Vec<Option<usize>> = vec![None; n];
        fn augment(
            i: usize,
            a: &[Complex64],
            b: &[Complex64],
            limit: f64,
            seen: &mut [bool],
            owner: &mut [Option<usize>],
        ) -> bool {
            for j in 0..b.len() {
                if !seen[j] && (a[i] - b[j]).norm() <= limit {
                    seen[j] = true;
                    if owner[j].is_none_or(|k| augment(k, a, b, limit, seen, owner)) {
                        owner[j] = Some(i);
                        return true;
                    }
                }
            }
            false
        }
        (0..n).all(|i| augment(i, a, b, limit, &mut vec![false; n], &mut owner))
    };
    let (mut lo, mut hi) = (0, dists.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matchable(dists[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    dists[lo]
}

/// Brute-force `sum_j rho_j^(-m)`.
pub fn brute_power_sum(roots: &[Complex64], m: i32) -> Complex64 {
    roots.iter().map(|r| r.powi(-m)).sum()
}
