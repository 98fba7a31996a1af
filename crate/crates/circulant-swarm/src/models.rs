//! Named interaction families.
//!
//! Two families cover the classical cases: the midpoint (Darboux/cyclic
//! pursuit) stencil m = [1/2, 1/2, 0, ..., 0], and centroid gathering,
//! where each agent mixes its own position (weight α) with every agent
//! ahead of it (β_F) and behind it (β_B). The gathering matrix has α on
//! the diagonal, β_F strictly above and β_B strictly below, which makes
//! it a (β_B/β_F)-factor circulant.

use num_complex::Complex64;

use crate::circulant::{principal_root, FactorCirculant};
use crate::error::{Error, Result};

/// Midpoint smoothing: each agent moves to the midpoint of itself and
/// its cyclic successor, the wrap edge weighted by the factor. The
/// spectrum is μ_l = (1 + γ e^{-i2πl/N}) / 2.
pub fn darboux(n: usize, factor: Complex64) -> Result<FactorCirculant> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let mut m = vec![Complex64::new(0.0, 0.0); n];
    m[0] = Complex64::new(0.5, 0.0);
    m[1] = Complex64::new(0.5, 0.0);
    FactorCirculant::new(m, factor)
}

/// Parameters of the centroid-gathering family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentroidGatheringParams {
    n: usize,
    alpha: Complex64,
    beta_f: Complex64,
    beta_b: Complex64,
}

impl CentroidGatheringParams {
    /// β_F must be nonzero so the factor β_B/β_F exists.
    pub fn new(n: usize, alpha: Complex64, beta_f: Complex64, beta_b: Complex64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        if !(alpha.is_finite() && beta_f.is_finite() && beta_b.is_finite()) {
            return Err(Error::NonFinite("gathering parameters"));
        }
        if beta_f.norm() == 0.0 {
            return Err(Error::ZeroForwardWeight);
        }
        Ok(CentroidGatheringParams {
            n,
            alpha,
            beta_f,
            beta_b,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta_f(&self) -> Complex64 {
        self.beta_f
    }

    pub fn beta_b(&self) -> Complex64 {
        self.beta_b
    }
}

/// The gathering matrix: first row [α, β_F, ..., β_F], factor β_B/β_F.
pub fn centroid_gathering(params: &CentroidGatheringParams) -> FactorCirculant {
    let mut m = vec![params.beta_f; params.n];
    m[0] = params.alpha;
    let factor = params.beta_b / params.beta_f;
    FactorCirculant::new(m, factor).expect("validated parameters build a valid matrix")
}

/// Gathering with the row-normalized forward weight β_F = (1−α)/(N−1)
/// and β_B = factor·β_F. Stores the factor exactly as given rather than
/// re-deriving it from a β_B/β_F quotient.
pub fn normalized_gathering(
    n: usize,
    alpha: Complex64,
    factor: Complex64,
) -> Result<FactorCirculant> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    if !(alpha.is_finite() && factor.is_finite()) {
        return Err(Error::NonFinite("gathering parameters"));
    }
    let one = Complex64::new(1.0, 0.0);
    if alpha == one {
        return Err(Error::ZeroForwardWeight);
    }
    let beta_f = (one - alpha) / (n as f64 - 1.0);
    let mut m = vec![beta_f; n];
    m[0] = alpha;
    FactorCirculant::new(m, factor)
}

/// Closed form for μ_0 of the normalized gathering matrix, via the
/// geometric series Σ_{k=0}^{N-1} γ^k = (λ − 1)/(γ − 1):
///
/// ```text
/// μ_0 = α − β_F + β_F (λ − 1)/(γ − 1),   β_F = (1 − α)/(N − 1)
/// ```
///
/// For λ = 1 the series degenerates and μ_0 = 1 exactly.
pub fn gathering_mu0_closed_form(
    n: usize,
    alpha: Complex64,
    factor: Complex64,
) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let one = Complex64::new(1.0, 0.0);
    if alpha == one {
        return Err(Error::ZeroForwardWeight);
    }
    if factor == one {
        return Ok(one);
    }
    let gamma = principal_root(factor, n)?;
    let beta_f = (one - alpha) / (n as f64 - 1.0);
    Ok(alpha - beta_f + beta_f * (factor - one) / (gamma - one))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "expected {b}, got {a} (tol {tol})");
    }

    #[test]
    fn darboux_circulant_top_mode_is_one() {
        let s = darboux(7, c(1.0, 0.0)).unwrap().eigenvalues().unwrap();
        close(s.mu()[0], c(1.0, 0.0), 1e-15);
    }

    #[test]
    fn darboux_n2_modes_one_and_zero() {
        let s = darboux(2, c(1.0, 0.0)).unwrap().eigenvalues().unwrap();
        close(s.mu()[0], c(1.0, 0.0), 1e-12);
        close(s.mu()[1], c(0.0, 0.0), 1e-12);
    }

    #[test]
    fn darboux_factor_sixteen_n4() {
        let s = darboux(4, c(16.0, 0.0)).unwrap().eigenvalues().unwrap();
        close(s.gamma(), c(2.0, 0.0), 1e-12);
        close(s.mu()[0], c(1.5, 0.0), 1e-12);
        close(s.mu()[2], c(-0.5, 0.0), 1e-12);
    }

    #[test]
    fn darboux_spectrum_formula_across_indices() {
        let lam = c(0.3, 0.4);
        let phi = darboux(6, lam).unwrap();
        let s = phi.eigenvalues().unwrap();
        let gamma = s.gamma();
        for l in 0..6 {
            let w = Complex64::from_polar(1.0, -std::f64::consts::TAU * l as f64 / 6.0);
            close(
                s.mu()[l],
                (Complex64::new(1.0, 0.0) + gamma * w) * 0.5,
                1e-13,
            );
        }
    }

    #[test]
    fn gathering_params_reject_zero_forward_weight() {
        assert_eq!(
            CentroidGatheringParams::new(4, c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).err(),
            Some(Error::ZeroForwardWeight)
        );
    }

    #[test]
    fn gathering_dense_layout() {
        let p = CentroidGatheringParams::new(4, c(0.5, 0.0), c(0.2, 0.0), c(0.1, 0.0)).unwrap();
        let phi = centroid_gathering(&p);
        close(phi.factor(), c(0.5, 0.0), 1e-15);
        let d = phi.to_dense();
        for r in 0..4 {
            for col in 0..4 {
                let want = if r == col {
                    c(0.5, 0.0)
                } else if col > r {
                    c(0.2, 0.0)
                } else {
                    c(0.1, 0.0)
                };
                close(d.get(r, col), want, 1e-15);
            }
        }
    }

    #[test]
    fn gathering_symmetric_weights_normalized_spectrum() {
        // beta_f = beta_b = (1-alpha)/(N-1): mu_0 = 1 and every other
        // mode equals (N*alpha - 1)/(N-1).
        let n = 5;
        let alpha = c(0.1, 0.0);
        let beta = (c(1.0, 0.0) - alpha) / (n as f64 - 1.0);
        let p = CentroidGatheringParams::new(n, alpha, beta, beta).unwrap();
        let s = centroid_gathering(&p).eigenvalues().unwrap();
        close(s.mu()[0], c(1.0, 0.0), 1e-12);
        for l in 1..n {
            close(s.mu()[l], c(-0.125, 0.0), 1e-12);
        }
    }

    #[test]
    fn gathering_asymmetric_top_mode_frozen_value() {
        // N=4, alpha=0.5, beta_f=0.2, beta_b=0.1:
        // mu_0 = 0.5 + 0.2*(2^{-1/4} + 2^{-1/2} + 2^{-3/4}).
        let p = CentroidGatheringParams::new(4, c(0.5, 0.0), c(0.2, 0.0), c(0.1, 0.0)).unwrap();
        let s = centroid_gathering(&p).eigenvalues().unwrap();
        close(s.mu()[0], c(0.9285213507883245, 0.0), 1e-13);
    }

    #[test]
    fn normalized_gathering_alpha_one_over_n_collapses_in_one_step() {
        let s = normalized_gathering(5, c(0.2, 0.0), c(1.0, 0.0))
            .unwrap()
            .eigenvalues()
            .unwrap();
        close(s.mu()[0], c(1.0, 0.0), 1e-12);
        for l in 1..5 {
            close(s.mu()[l], c(0.0, 0.0), 1e-12);
        }
    }

    #[test]
    fn normalized_gathering_rejects_alpha_one() {
        assert_eq!(
            normalized_gathering(5, c(1.0, 0.0), c(0.5, 0.0)).err(),
            Some(Error::ZeroForwardWeight)
        );
    }

    #[test]
    fn mu0_closed_form_circulant_branch() {
        let v = gathering_mu0_closed_form(7, c(0.1, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn mu0_closed_form_hand_case() {
        // N=2, alpha=0, lambda=4: beta_f = 1, gamma = 2, so
        // mu_0 = 0 - 1 + (4-1)/(2-1) = 2; the dense matrix [[0,1],[4,0]]
        // has eigenvalues +-2.
        let v = gathering_mu0_closed_form(2, c(0.0, 0.0), c(4.0, 0.0)).unwrap();
        close(v, c(2.0, 0.0), 1e-12);
        let s = normalized_gathering(2, c(0.0, 0.0), c(4.0, 0.0))
            .unwrap()
            .eigenvalues()
            .unwrap();
        close(s.mu()[0], c(2.0, 0.0), 1e-12);
        close(s.mu()[1], c(-2.0, 0.0), 1e-12);
    }

    #[test]
    fn mu0_closed_form_matches_spectrum_sum() {
        let cases = [
            (4, c(0.5, 0.0), c(0.5, 0.0)),
            (7, c(0.1, 0.0), c(0.5, 0.0)),
            (5, c(0.3, -0.2), c(0.0, 1.0)),
            (9, c(-0.4, 0.1), c(-1.0, 0.0)),
            (
                6,
                c(0.25, 0.25),
                Complex64::from_polar(0.5, std::f64::consts::FRAC_PI_4),
            ),
        ];
        for (n, alpha, lam) in cases {
            let closed = gathering_mu0_closed_form(n, alpha, lam).unwrap();
            let spectral = normalized_gathering(n, alpha, lam)
                .unwrap()
                .eigenvalues()
                .unwrap()
                .mu()[0];
            let rel = (closed - spectral).norm() / spectral.norm().max(1e-300);
            assert!(
                rel < 1e-12,
                "n={n} alpha={alpha} lambda={lam}: rel {rel:.3e}"
            );
        }
    }

    #[test]
    fn straight_line_gathering_for_alpha_above_one_over_n() {
        // alpha in (1/N, 1) with symmetric weights: each displacement is a
        // real nonpositive multiple of (P_k(0) - centroid).
        use crate::dynamics::{step_discrete, SwarmState};
        let n = 6;
        let alpha = c(0.4, 0.0);
        let phi = normalized_gathering(n, alpha, c(1.0, 0.0)).unwrap();
        let mut state = SwarmState::random_uniform(n, 99).unwrap();
        let start = state.clone();
        let centroid = start.centroid();
        for _ in 0..8 {
            let next = step_discrete(&phi, &state).unwrap();
            for k in 0..n {
                let disp = next.positions()[k] - state.positions()[k];
                let radial = start.positions()[k] - centroid;
                let ratio = disp / radial;
                assert!(ratio.im.abs() <= 1e-10 * ratio.norm().max(1e-30));
                assert!(ratio.re <= 1e-10);
            }
            state = next;
        }
    }
}
