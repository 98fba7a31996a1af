//! Factor-circulant interaction matrices and the planar swarm dynamics
//! they generate.
//!
//! N point agents in the plane, written as complex numbers, evolve under
//! a linear interaction matrix that is constant along wrapped diagonals,
//! with wrapped entries scaled by a factor λ (a "λ-circulant"; λ = 1 is
//! the plain circulant of cyclic pursuit and polygon smoothing). Such
//! matrices diagonalize in closed form through a scaled discrete Fourier
//! transform, so the evolution decouples into independent modes and the
//! limiting constellation can be predicted from the spectrum instead of
//! simulated.
//!
//! Module map:
//!
//! * [`circulant`] — construction, algebra and the closed-form spectral
//!   factorization of factor circulants.
//! * [`dynamics`] — discrete and continuous swarm evolution, modal
//!   coordinates, similarity invariance and beacon embedding.
//! * [`asymptotics`] — dominant modes, limit classification, formation
//!   prediction and the discrete-ellipse residual.
//! * [`models`] — the midpoint (Darboux) and centroid-gathering
//!   families with their closed-form spectra.
//! * [`rng`] — the pinned SplitMix64 generator behind every seeded
//!   initial constellation.
//!
//! All types are immutable after construction and every operation is a
//! pure function of its inputs, so values can be shared freely across
//! threads.

pub mod asymptotics;
pub mod circulant;
pub mod dynamics;
pub mod error;
pub mod models;
pub mod rng;

pub use num_complex::Complex64;

pub use asymptotics::{
    classify, dominant_modes, ellipse_residual, formation, motion_style, predicted_state,
    EllipseLimit, FormationPrediction, LimitClass, LimitKind, MotionStyle,
};
pub use circulant::{
    dft_matrix, principal_root, DenseMatrix, Diagonalization, FactorCirculant, MaskDecomposition,
    ModalSpectrum,
};
pub use dynamics::{
    apply_similarity, check_invariance, embed_beacon, evolve_continuous, evolve_discrete,
    from_modal, step_beacon, step_discrete, to_modal, BeaconSystem, InvarianceReport, ModalState,
    SimilarityTransform, SwarmState, TimeMode,
};
pub use error::{Error, Result};
pub use models::{
    centroid_gathering, darboux, gathering_mu0_closed_form, normalized_gathering,
    CentroidGatheringParams,
};
