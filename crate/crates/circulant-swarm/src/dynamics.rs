//! Swarm evolution under a factor-circulant interaction matrix.
//!
//! Agent positions are complex numbers stacked in index order. Discrete
//! time applies the matrix once per step; continuous time evolves each
//! decoupled mode by e^{μ_l t}. Closed-form evolution goes through the
//! modal coordinates P̃ = T⁻¹ P, where every mode scales independently,
//! so no numerical integration is ever needed (an integrator exists only
//! as a test oracle).
//!
//! An evolution commutes with similarity maps P ↦ ρP + τ1 only when the
//! row sums are 0 (continuous) or 1 (discrete). Matrices violating those
//! conditions can be repaired by adjoining one stationary "beacon" agent
//! whose coupling column absorbs the row-sum defect.

use num_complex::Complex64;

use crate::circulant::{DenseMatrix, Diagonalization, FactorCirculant};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Absolute per-entry tolerance for the row-sum invariance flags.
pub const INVARIANCE_TOLERANCE: f64 = 1e-10;

/// Positions of N agents at one time instant.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    positions: Vec<Complex64>,
    time: f64,
}

impl SwarmState {
    pub fn new(positions: Vec<Complex64>, time: f64) -> Result<Self> {
        if positions.len() < 2 {
            return Err(Error::TooSmall(positions.len()));
        }
        if !positions.iter().all(|p| p.is_finite()) {
            return Err(Error::NonFinite("positions"));
        }
        if !time.is_finite() || time < 0.0 {
            return Err(Error::NonFinite("time"));
        }
        Ok(SwarmState { positions, time })
    }

    /// n agents drawn uniformly from the unit square [0,1)², using the
    /// SplitMix64 stream for the given seed. Time starts at 0.
    pub fn random_uniform(n: usize, seed: u64) -> Result<Self> {
        let mut rng = SplitMix64::new(seed);
        let positions = (0..n)
            .map(|_| {
                let re = rng.next_f64();
                let im = rng.next_f64();
                Complex64::new(re, im)
            })
            .collect();
        Self::new(positions, 0.0)
    }

    /// The regular n-gon on the unit circle, P_k = e^{i 2π k / n}.
    pub fn regular_polygon(n: usize) -> Result<Self> {
        let positions = (0..n)
            .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64))
            .collect();
        Self::new(positions, 0.0)
    }

    pub fn positions(&self) -> &[Complex64] {
        &self.positions
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn centroid(&self) -> Complex64 {
        self.positions.iter().sum::<Complex64>() / self.positions.len() as f64
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> f64 {
        let mut d = 0.0f64;
        for (i, a) in self.positions.iter().enumerate() {
            for b in &self.positions[i + 1..] {
                d = d.max((a - b).norm());
            }
        }
        d
    }
}

/// The state in decoupled modal coordinates P̃ = T⁻¹ P.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalState {
    coords: Vec<Complex64>,
    time: f64,
}

impl ModalState {
    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn time(&self) -> f64 {
        self.time
    }
}

/// The map P ↦ ρP + τ1 (rotation/scaling plus translation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityTransform {
    scale: Complex64,
    shift: Complex64,
}

impl SimilarityTransform {
    pub fn new(scale: Complex64, shift: Complex64) -> Result<Self> {
        if !scale.is_finite() || !shift.is_finite() {
            return Err(Error::NonFinite("similarity transform"));
        }
        if scale.norm() == 0.0 {
            return Err(Error::PreconditionFailed(
                "similarity scale must be nonzero",
            ));
        }
        Ok(SimilarityTransform { scale, shift })
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    pub fn shift(&self) -> Complex64 {
        self.shift
    }
}

/// Row sums of the interaction matrix and the invariance verdicts they
/// imply at the stated tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    row_sums: Vec<Complex64>,
    continuous_ok: bool,
    discrete_ok: bool,
    tolerance: f64,
}

impl InvarianceReport {
    pub fn row_sums(&self) -> &[Complex64] {
        &self.row_sums
    }

    /// Every row sums to 0 (within tolerance): the continuous-time
    /// evolution is similarity invariant.
    pub fn continuous_ok(&self) -> bool {
        self.continuous_ok
    }

    /// Every row sums to 1 (within tolerance): the discrete-time
    /// evolution is similarity invariant.
    pub fn discrete_ok(&self) -> bool {
        self.discrete_ok
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

/// Which invariance condition a beacon embedding enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeMode {
    Continuous,
    Discrete,
}

/// An interaction matrix extended by one stationary beacon agent.
///
/// The embedded (N+1)×(N+1) matrix is `[[Φ, s], [0, z]]` with the
/// correction column chosen so the extended system satisfies the
/// applicable row-sum condition exactly: s = −Φ·1 and z = 0 for the
/// continuous mode, s = 1 − Φ·1 and z = 1 for the discrete mode.
#[derive(Debug, Clone, PartialEq)]
pub struct BeaconSystem {
    base: FactorCirculant,
    correction: Vec<Complex64>,
    beacon_value: Complex64,
    beacon_position: Complex64,
}

impl BeaconSystem {
    pub fn base(&self) -> &FactorCirculant {
        &self.base
    }

    pub fn correction(&self) -> &[Complex64] {
        &self.correction
    }

    pub fn beacon_value(&self) -> Complex64 {
        self.beacon_value
    }

    pub fn beacon_position(&self) -> Complex64 {
        self.beacon_position
    }

    /// The dense (N+1)×(N+1) embedded matrix.
    pub fn embedded_dense(&self) -> DenseMatrix {
        let n = self.base.n();
        let base = self.base.to_dense();
        DenseMatrix::from_fn(n + 1, |r, c| {
            if r < n && c < n {
                base.get(r, c)
            } else if r < n {
                self.correction[r]
            } else if c < n {
                Complex64::new(0.0, 0.0)
            } else {
                self.beacon_value
            }
        })
    }

    /// Invariance report of the embedded system (rows summed in column
    /// order, matching how the correction column was derived).
    pub fn embedded_invariance(&self) -> InvarianceReport {
        report_from_row_sums(self.embedded_dense().row_sums())
    }
}

/// One synchronous discrete step: positions ← Φ·positions, time + 1.
pub fn step_discrete(phi: &FactorCirculant, state: &SwarmState) -> Result<SwarmState> {
    let positions = phi.mul_vec(state.positions())?;
    Ok(SwarmState {
        positions,
        time: state.time + 1.0,
    })
}

/// Transform a state into modal coordinates, P̃ = T⁻¹ P.
pub fn to_modal(diag: &Diagonalization, state: &SwarmState) -> Result<ModalState> {
    if state.n() != diag.n() {
        return Err(Error::DimensionMismatch {
            expected: diag.n(),
            actual: state.n(),
        });
    }
    Ok(ModalState {
        coords: diag.t_inv().mul_vec(state.positions()),
        time: state.time,
    })
}

/// Transform modal coordinates back, P = T P̃.
pub fn from_modal(diag: &Diagonalization, modal: &ModalState) -> Result<SwarmState> {
    if modal.coords.len() != diag.n() {
        return Err(Error::DimensionMismatch {
            expected: diag.n(),
            actual: modal.coords.len(),
        });
    }
    Ok(SwarmState {
        positions: diag.t().mul_vec(&modal.coords),
        time: modal.time,
    })
}

/// z^e by binary exponentiation (z^0 = 1 exactly).
fn complex_pow(z: Complex64, mut e: u64) -> Complex64 {
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

/// Discrete evolution through the modal closed form:
/// T · Diag(μ_l^t) · T⁻¹ · P(0). t = 0 returns the state unchanged.
pub fn evolve_discrete(phi: &FactorCirculant, state0: &SwarmState, t: u64) -> Result<SwarmState> {
    if state0.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: phi.n(),
            actual: state0.n(),
        });
    }
    if t == 0 {
        return Ok(state0.clone());
    }
    let diag = phi.diagonalize()?;
    let mut modal = to_modal(&diag, state0)?;
    for (coord, mu) in modal.coords.iter_mut().zip(diag.spectrum().mu()) {
        *coord *= complex_pow(*mu, t);
    }
    modal.time = state0.time + t as f64;
    from_modal(&diag, &modal)
}

/// Continuous evolution through the modal closed form:
/// T · Diag(e^{μ_l t}) · T⁻¹ · P(0). t = 0 returns the state unchanged.
pub fn evolve_continuous(phi: &FactorCirculant, state0: &SwarmState, t: f64) -> Result<SwarmState> {
    if state0.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: phi.n(),
            actual: state0.n(),
        });
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::PreconditionFailed(
            "evolution time must be finite and nonnegative",
        ));
    }
    if t == 0.0 {
        return Ok(state0.clone());
    }
    let diag = phi.diagonalize()?;
    let mut modal = to_modal(&diag, state0)?;
    for (coord, mu) in modal.coords.iter_mut().zip(diag.spectrum().mu()) {
        *coord *= (mu * t).exp();
    }
    modal.time = state0.time + t;
    from_modal(&diag, &modal)
}

/// Apply P ↦ ρP + τ1 to every agent.
pub fn apply_similarity(state: &SwarmState, map: &SimilarityTransform) -> SwarmState {
    SwarmState {
        positions: state
            .positions
            .iter()
            .map(|p| map.scale * p + map.shift)
            .collect(),
        time: state.time,
    }
}

fn report_from_row_sums(row_sums: Vec<Complex64>) -> InvarianceReport {
    let one = Complex64::new(1.0, 0.0);
    let continuous_ok = row_sums.iter().all(|s| s.norm() <= INVARIANCE_TOLERANCE);
    let discrete_ok = row_sums
        .iter()
        .all(|s| (s - one).norm() <= INVARIANCE_TOLERANCE);
    InvarianceReport {
        row_sums,
        continuous_ok,
        discrete_ok,
        tolerance: INVARIANCE_TOLERANCE,
    }
}

/// Row sums Φ·1 and the invariance flags. For λ ≠ 1 the rows of a
/// factor circulant sum differently, so all N sums are reported.
pub fn check_invariance(phi: &FactorCirculant) -> InvarianceReport {
    report_from_row_sums(phi.to_dense().row_sums())
}

/// Embed the matrix in an (N+1)-agent system with one stationary beacon.
pub fn embed_beacon(
    phi: &FactorCirculant,
    kind: TimeMode,
    beacon_position: Complex64,
) -> Result<BeaconSystem> {
    if !beacon_position.is_finite() {
        return Err(Error::NonFinite("beacon position"));
    }
    let row_sums = phi.to_dense().row_sums();
    let one = Complex64::new(1.0, 0.0);
    let (correction, beacon_value) = match kind {
        TimeMode::Continuous => (
            row_sums.iter().map(|s| -s).collect(),
            Complex64::new(0.0, 0.0),
        ),
        TimeMode::Discrete => (row_sums.iter().map(|s| one - s).collect(), one),
    };
    Ok(BeaconSystem {
        base: phi.clone(),
        correction,
        beacon_value,
        beacon_position,
    })
}

/// One discrete step of the beacon-extended system on the N swarm
/// agents: positions ← Φ·positions + s·P_B. The beacon coordinate is
/// stored in the system and never changes.
pub fn step_beacon(system: &BeaconSystem, state: &SwarmState) -> Result<SwarmState> {
    let mut positions = system.base.mul_vec(state.positions())?;
    for (p, s) in positions.iter_mut().zip(&system.correction) {
        *p += s * system.beacon_position;
    }
    Ok(SwarmState {
        positions,
        time: state.time + 1.0,
    })
}
