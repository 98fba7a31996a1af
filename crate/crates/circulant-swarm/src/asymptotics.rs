//! Long-term behavior: dominant modes, limit classification and the
//! predicted limiting formation.
//!
//! After diagonalization every mode evolves as μ_l^t, so the asymptotics
//! are read directly off the spectrum: the largest-modulus eigenvalues
//! decide growth or decay, and when a single mode dominates the swarm
//! collapses onto a rank-one formation — the column of γ powers, scaled
//! by the initial state's projection onto that mode. For the plain
//! circulant midpoint (Darboux) evolution the residual around the
//! centroid concentrates on the conjugate Fourier mode pair {1, N−1},
//! whose span is the set of affine images of the regular polygon
//! ("discrete ellipses").

use num_complex::Complex64;

use crate::circulant::{FactorCirculant, ModalSpectrum};
use crate::dynamics::{self, SwarmState};
use crate::error::{Error, Result};

/// Relative tie tolerance used by `classify` and `formation`.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

/// Tolerance deciding whether a modulus sits exactly on the unit circle.
const UNIT_TOLERANCE: f64 = 1e-12;

/// How the swarm behaves as t grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    /// Every mode has eigenvalue exactly 1: the state never changes.
    FixedPoint,
    /// The unit-eigenvalue modes persist and everything else decays, so
    /// the state converges to a fixed limit.
    ConvergeToPoint,
    /// Dominant modulus below 1: all positions decay to the origin.
    DecayToOrigin,
    /// Dominant modulus above 1: the constellation diverges.
    Diverge,
    /// Dominant modulus 1 with a dominant eigenvalue different from 1:
    /// a persistent rotating/oscillating formation.
    NeutralRotation,
}

/// Classification of the asymptotic behavior.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitClass {
    kind: LimitKind,
    dominant_indices: Vec<usize>,
    dominant_modulus: f64,
    limit_point: Option<Complex64>,
}

impl LimitClass {
    pub fn kind(&self) -> LimitKind {
        self.kind
    }

    pub fn dominant_indices(&self) -> &[usize] {
        &self.dominant_indices
    }

    pub fn dominant_modulus(&self) -> f64 {
        self.dominant_modulus
    }

    pub fn limit_point(&self) -> Option<Complex64> {
        self.limit_point
    }
}

/// Qualitative motion toward (or away from) the limit, read off the
/// phase of the dominant eigenvalue: zero phase means straight-line
/// marching, any rotation means spiralling arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionStyle {
    Line,
    Spiral,
}

pub fn motion_style(growth: Complex64) -> MotionStyle {
    if growth.arg().abs() <= UNIT_TOLERANCE {
        MotionStyle::Line
    } else {
        MotionStyle::Spiral
    }
}

/// The rank-one formation a uniquely dominant mode 0 produces.
#[derive(Debug, Clone, PartialEq)]
pub struct FormationPrediction {
    direction: Vec<Complex64>,
    amplitude: Complex64,
    growth: Complex64,
}

impl FormationPrediction {
    /// The shape vector [1, γ, ..., γ^{N−1}].
    pub fn direction(&self) -> &[Complex64] {
        &self.direction
    }

    /// Projection coefficient of the initial state onto the dominant mode.
    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    /// Dominant eigenvalue μ_0.
    pub fn growth(&self) -> Complex64 {
        self.growth
    }

    pub fn motion(&self) -> MotionStyle {
        motion_style(self.growth)
    }

    /// growth^t · amplitude · direction.
    pub fn state_at(&self, t: u64, time0: f64) -> Result<SwarmState> {
        let g = cpow(self.growth, t);
        let positions = self
            .direction
            .iter()
            .map(|d| g * self.amplitude * d)
            .collect();
        SwarmState::new(positions, time0 + t as f64)
    }
}

/// The two surviving residual amplitudes of the centroid-deflated
/// circulant (λ = 1) evolution, and the centroid they orbit.
///
/// `a` multiplies the counterclockwise regular polygon [e^{+i2πk/N}]
/// (which evolves with μ_{N−1}); `b` multiplies the clockwise polygon
/// [e^{−i2πk/N}] (which evolves with μ_1). Any combination of the two is
/// an affine image of the regular N-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipseLimit {
    a: Complex64,
    b: Complex64,
    mu1: Complex64,
    mu_n1: Complex64,
    centroid: Complex64,
    n: usize,
}

impl EllipseLimit {
    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn mu1(&self) -> Complex64 {
        self.mu1
    }

    pub fn mu_n1(&self) -> Complex64 {
        self.mu_n1
    }

    pub fn centroid(&self) -> Complex64 {
        self.centroid
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Predicted centroid-deflated residual at step t:
    /// a·μ_{N−1}^t·[e^{+i2πk/N}] + b·μ_1^t·[e^{−i2πk/N}].
    pub fn residual_at(&self, t: u64) -> Vec<Complex64> {
        let n = self.n;
        let ga = self.a * cpow(self.mu_n1, t);
        let gb = self.b * cpow(self.mu1, t);
        (0..n)
            .map(|k| {
                let angle = std::f64::consts::TAU * k as f64 / n as f64;
                let fwd = Complex64::from_polar(1.0, angle);
                ga * fwd + gb * fwd.conj()
            })
            .collect()
    }
}

fn cpow(z: Complex64, mut e: u64) -> Complex64 {
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e > 0 {
            base *= base;
        }
    }
    acc
}

/// Indices l with |μ_l| within the relative tie tolerance of the
/// largest modulus.
pub fn dominant_modes(spectrum: &ModalSpectrum, tie_tol: f64) -> Result<Vec<usize>> {
    if spectrum.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    if !(tie_tol > 0.0 && tie_tol <= 1e-3) {
        return Err(Error::InvalidTieTolerance(tie_tol));
    }
    let max = spectrum.spectral_radius();
    let cut = (1.0 - tie_tol) * max;
    Ok((0..spectrum.len())
        .filter(|&l| spectrum.mu()[l].norm() >= cut)
        .collect())
}

/// Classify the asymptotic behavior of Φ acting on the given state.
///
/// The limit point is the initial centroid exactly when the matrix is a
/// plain circulant (λ = 1) with unit row sums and mode 0 is the unique
/// unit-dominant mode; it is the origin for decaying spectra.
pub fn classify(phi: &FactorCirculant, state0: &SwarmState) -> Result<LimitClass> {
    if state0.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: phi.n(),
            actual: state0.n(),
        });
    }
    let spectrum = phi.eigenvalues()?;
    let dominant_indices = dominant_modes(&spectrum, DEFAULT_TIE_TOLERANCE)?;
    let dominant_modulus = spectrum.spectral_radius();
    let one = Complex64::new(1.0, 0.0);

    let kind;
    let mut limit_point = None;
    if dominant_modulus > 1.0 + UNIT_TOLERANCE {
        kind = LimitKind::Diverge;
    } else if dominant_modulus < 1.0 - UNIT_TOLERANCE {
        kind = LimitKind::DecayToOrigin;
        limit_point = Some(Complex64::new(0.0, 0.0));
    } else if dominant_indices
        .iter()
        .all(|&l| (spectrum.mu()[l] - one).norm() <= UNIT_TOLERANCE)
    {
        if dominant_indices.len() == spectrum.len() {
            // Every mode is fixed: the matrix acts as the identity.
            kind = LimitKind::FixedPoint;
        } else {
            kind = LimitKind::ConvergeToPoint;
            let circulant = (phi.factor() - one).norm() <= UNIT_TOLERANCE;
            let row_stochastic = dynamics::check_invariance(phi).discrete_ok();
            if circulant && row_stochastic && dominant_indices == [0] {
                limit_point = Some(state0.centroid());
            }
        }
    } else {
        kind = LimitKind::NeutralRotation;
    }

    Ok(LimitClass {
        kind,
        dominant_indices,
        dominant_modulus,
        limit_point,
    })
}

/// Rank-one formation prediction. Requires mode 0 to be the unique
/// dominant mode (within the tie tolerance); ties or a different
/// dominant index are reported as `MultiModal` rather than guessed.
pub fn formation(phi: &FactorCirculant, state0: &SwarmState) -> Result<FormationPrediction> {
    let n = phi.n();
    if state0.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: state0.n(),
        });
    }
    let spectrum = phi.eigenvalues()?;
    let dominant = dominant_modes(&spectrum, DEFAULT_TIE_TOLERANCE)?;
    if dominant != [0] {
        return Err(Error::MultiModal(dominant));
    }
    let gamma = spectrum.gamma();
    let direction: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(gamma.norm().powi(k as i32), gamma.arg() * k as f64))
        .collect();
    let amplitude = state0
        .positions()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            Complex64::from_polar(gamma.norm().powi(-(k as i32)), -gamma.arg() * k as f64) * p
        })
        .sum::<Complex64>()
        / n as f64;
    Ok(FormationPrediction {
        direction,
        amplitude,
        growth: spectrum.mu()[0],
    })
}

/// The dominant-mode approximation of the state at step t,
/// growth^t · amplitude · direction. Asymptotic, not exact: the error is
/// of order (|μ_sub| / |μ_0|)^t relative to the predicted state.
pub fn predicted_state(phi: &FactorCirculant, state0: &SwarmState, t: u64) -> Result<SwarmState> {
    formation(phi, state0)?.state_at(t, state0.time())
}

/// Subtract the exact mode-0 component in modal coordinates.
///
/// For λ = 1 this equals subtracting the centroid from every agent, but
/// the modal form stays meaningful for any factor.
pub fn deflate_mode_zero(phi: &FactorCirculant, state: &SwarmState) -> Result<SwarmState> {
    let diag = phi.diagonalize()?;
    let modal = dynamics::to_modal(&diag, state)?;
    let mut coords = modal.coords().to_vec();
    coords[0] = Complex64::new(0.0, 0.0);
    let positions = diag.t().mul_vec(&coords);
    SwarmState::new(positions, state.time())
}

/// Residual amplitudes of the centroid-deflated λ = 1 evolution.
///
/// Requires the factor to be 1, mode 0 to be the unique dominant mode
/// with μ_0 = 1, and the modes {1, N−1} to dominate the residual
/// spectrum; anything else fails the precondition rather than guessing
/// which pair survives.
pub fn ellipse_residual(phi: &FactorCirculant, state0: &SwarmState) -> Result<EllipseLimit> {
    let n = phi.n();
    if state0.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: state0.n(),
        });
    }
    let one = Complex64::new(1.0, 0.0);
    if (phi.factor() - one).norm() > UNIT_TOLERANCE {
        return Err(Error::PreconditionFailed(
            "ellipse residual requires factor 1",
        ));
    }
    let spectrum = phi.eigenvalues()?;
    let dominant = dominant_modes(&spectrum, DEFAULT_TIE_TOLERANCE)?;
    if dominant != [0] || (spectrum.mu()[0] - one).norm() > 1e-9 {
        return Err(Error::PreconditionFailed(
            "mode 0 must be the unique dominant mode with eigenvalue 1",
        ));
    }
    // The surviving residual pair must be {1, N-1}.
    let residual_max = (1..n).map(|l| spectrum.mu()[l].norm()).fold(0.0, f64::max);
    let cut = (1.0 - DEFAULT_TIE_TOLERANCE) * residual_max;
    let survivors: Vec<usize> = (1..n).filter(|&l| spectrum.mu()[l].norm() >= cut).collect();
    let expected: Vec<usize> = if n == 2 { vec![1] } else { vec![1, n - 1] };
    if survivors != expected {
        return Err(Error::PreconditionFailed(
            "modes 1 and N-1 must dominate the residual",
        ));
    }

    let tau = std::f64::consts::TAU;
    let mut a = Complex64::new(0.0, 0.0);
    let mut b = Complex64::new(0.0, 0.0);
    for (j, p) in state0.positions().iter().enumerate() {
        // rows [w^j] and [w^{(N-1)j}] with w = e^{-i2pi/N}
        a += Complex64::from_polar(1.0, -tau * j as f64 / n as f64) * p;
        b += Complex64::from_polar(1.0, tau * j as f64 / n as f64) * p;
    }
    a /= n as f64;
    b /= n as f64;
    Ok(EllipseLimit {
        a,
        b,
        mu1: spectrum.mu()[1],
        mu_n1: spectrum.mu()[n - 1],
        centroid: state0.centroid(),
        n,
    })
}
