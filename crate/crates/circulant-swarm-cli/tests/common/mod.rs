//! Oracle helpers for the acceptance suite, independent of the
//! closed-form paths they check.

use num_complex::Complex64;

use circulant_swarm::circulant::{DenseMatrix, FactorCirculant};
use circulant_swarm::rng::SplitMix64;

/// Eigenvalues of a dense complex matrix via faer's general eigensolver.
pub fn dense_eigenvalues(m: &DenseMatrix) -> Vec<Complex64> {
    let n = m.n();
    let mut a = faer::Mat::<Complex64>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            a[(r, c)] = m.get(r, c);
        }
    }
    a.eigenvalues().expect("eigendecomposition failed")
}

/// Greedy multiset matching: repeatedly pair the globally closest
/// remaining values and return the largest matched distance.
pub fn max_matched_distance(xs: &[Complex64], ys: &[Complex64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut used_x = vec![false; n];
    let mut used_y = vec![false; n];
    let mut worst = 0.0f64;
    for _ in 0..n {
        let mut best = (f64::INFINITY, 0, 0);
        for i in 0..n {
            if used_x[i] {
                continue;
            }
            for j in 0..n {
                if used_y[j] {
                    continue;
                }
                let d = (xs[i] - ys[j]).norm();
                if d < best.0 {
                    best = (d, i, j);
                }
            }
        }
        used_x[best.1] = true;
        used_y[best.2] = true;
        worst = worst.max(best.0);
    }
    worst
}

/// Seeded random factor circulant: weights uniform in the unit box,
/// factor with uniform angle and modulus uniform in [lo, hi].
pub fn random_instance(rng: &mut SplitMix64, n: usize, lo: f64, hi: f64) -> FactorCirculant {
    let m = (0..n)
        .map(|_| Complex64::new(rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0)))
        .collect();
    let factor = Complex64::from_polar(
        rng.next_in(lo, hi),
        rng.next_in(-std::f64::consts::PI, std::f64::consts::PI),
    );
    FactorCirculant::new(m, factor).unwrap()
}

/// Rescale the weights so the spectral radius equals `target`.
pub fn with_spectral_radius(phi: &FactorCirculant, target: f64) -> FactorCirculant {
    let radius = phi.eigenvalues().unwrap().spectral_radius();
    assert!(radius > 0.0, "zero spectrum cannot be rescaled");
    let s = target / radius;
    let m = phi.weights().iter().map(|w| w * s).collect();
    FactorCirculant::new(m, phi.factor()).unwrap()
}

/// Classical fixed-step fourth-order Runge-Kutta for y' = A y.
pub fn rk4_linear(a: &DenseMatrix, y0: &[Complex64], t: f64, h: f64) -> Vec<Complex64> {
    let steps = (t / h).round() as usize;
    let mut y = y0.to_vec();
    let axpy = |y: &[Complex64], k: &[Complex64], s: f64| -> Vec<Complex64> {
        y.iter().zip(k).map(|(yi, ki)| yi + ki * s).collect()
    };
    for _ in 0..steps {
        let k1 = a.mul_vec(&y);
        let k2 = a.mul_vec(&axpy(&y, &k1, h / 2.0));
        let k3 = a.mul_vec(&axpy(&y, &k2, h / 2.0));
        let k4 = a.mul_vec(&axpy(&y, &k3, h));
        for i in 0..y.len() {
            y[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (h / 6.0);
        }
    }
    y
}

/// Max deviation between two position vectors, relative to the larger
/// entry of the expected one.
pub fn relative_deviation(actual: &[Complex64], expected: &[Complex64]) -> f64 {
    let scale = expected.iter().map(|p| p.norm()).fold(1e-300, f64::max);
    actual
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
        / scale
}
