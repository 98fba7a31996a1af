//! Scenario configuration: a JSON object selecting the interaction
//! model, the initial constellation, the time mode and the outputs.
//!
//! Complex numbers are written either as a plain number (real) or as a
//! two-element array `[re, im]`.

use num_complex::Complex64;
use serde::Deserialize;

use circulant_swarm::dynamics::TimeMode;
use circulant_swarm::models::CentroidGatheringParams;
use circulant_swarm::{
    centroid_gathering, darboux, embed_beacon, BeaconSystem, FactorCirculant, SwarmState,
};

use crate::error::CliError;

/// A complex scalar deserialized from `x` or `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CNum(pub Complex64);

impl<'de> Deserialize<'de> for CNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Real(f64),
            Pair([f64; 2]),
        }
        let z = match Repr::deserialize(d)? {
            Repr::Real(re) => Complex64::new(re, 0.0),
            Repr::Pair([re, im]) => Complex64::new(re, im),
        };
        if !z.is_finite() {
            return Err(serde::de::Error::custom("non-finite number"));
        }
        Ok(CNum(z))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Darboux,
    CentroidGathering,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeKind {
    Discrete,
    Continuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitKind {
    RandomUniform,
    RegularPolygon,
    Explicit,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeaconConfig {
    pub x: f64,
    pub y: f64,
    pub kind: ModeKind,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputsConfig {
    #[serde(default)]
    pub trajectory: Option<String>,
    #[serde(default)]
    pub plot: Option<String>,
}

/// Raw scenario file contents, validated by [`ScenarioConfig::build`].
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub model: ModelKind,
    pub n: usize,
    #[serde(default)]
    pub lambda: Option<CNum>,
    #[serde(default)]
    pub alpha: Option<CNum>,
    #[serde(default)]
    pub beta_f: Option<CNum>,
    #[serde(default)]
    pub beta_b: Option<CNum>,
    #[serde(default)]
    pub m: Option<Vec<CNum>>,
    pub mode: ModeKind,
    pub steps: u64,
    #[serde(default)]
    pub dt: Option<f64>,
    pub init: InitKind,
    pub seed: u64,
    #[serde(default)]
    pub points: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub beacon: Option<BeaconConfig>,
    #[serde(default)]
    pub outputs: Option<OutputsConfig>,
}

/// A validated, runnable scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub phi: FactorCirculant,
    pub initial: SwarmState,
    pub mode: ModeKind,
    pub steps: u64,
    /// Sampling interval for continuous mode; 1 for discrete.
    pub dt: f64,
    pub beacon: Option<BeaconSystem>,
    pub outputs: Option<OutputsConfig>,
}

/// Parse a JSON scenario. Errors carry the offending field where serde
/// or validation can name it.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
}

impl ScenarioConfig {
    /// Validate the cross-field rules and build the interaction matrix,
    /// the initial state and the optional beacon system.
    pub fn build(&self) -> Result<Scenario, CliError> {
        if self.n < 2 {
            return Err(CliError::config(format!(
                "n: must be at least 2, got {}",
                self.n
            )));
        }

        let phi = match self.model {
            ModelKind::Darboux => {
                let lambda = self.require_complex(self.lambda, "lambda")?;
                darboux(self.n, lambda).map_err(CliError::Numeric)?
            }
            ModelKind::CentroidGathering => {
                let alpha = self.require_complex(self.alpha, "alpha")?;
                let beta_f = self.require_complex(self.beta_f, "beta_f")?;
                let beta_b = self.require_complex(self.beta_b, "beta_b")?;
                let params = CentroidGatheringParams::new(self.n, alpha, beta_f, beta_b)
                    .map_err(|e| CliError::config(format!("beta_f: {e}")))?;
                centroid_gathering(&params)
            }
            ModelKind::Custom => {
                let lambda = self.require_complex(self.lambda, "lambda")?;
                let m = self
                    .m
                    .as_ref()
                    .ok_or_else(|| CliError::config("m: required for the custom model"))?;
                if m.len() != self.n {
                    return Err(CliError::config(format!(
                        "m: expected {} weights, got {}",
                        self.n,
                        m.len()
                    )));
                }
                let weights = m.iter().map(|w| w.0).collect();
                FactorCirculant::new(weights, lambda).map_err(CliError::Numeric)?
            }
        };

        let initial = match self.init {
            InitKind::RandomUniform => {
                SwarmState::random_uniform(self.n, self.seed).map_err(CliError::Numeric)?
            }
            InitKind::RegularPolygon => {
                SwarmState::regular_polygon(self.n).map_err(CliError::Numeric)?
            }
            InitKind::Explicit => {
                let points = self
                    .points
                    .as_ref()
                    .ok_or_else(|| CliError::config("points: required for explicit init"))?;
                if points.len() != self.n {
                    return Err(CliError::config(format!(
                        "points: expected {}, got {}",
                        self.n,
                        points.len()
                    )));
                }
                let positions = points.iter().map(|[x, y]| Complex64::new(*x, *y)).collect();
                SwarmState::new(positions, 0.0).map_err(CliError::Numeric)?
            }
        };

        let dt = match self.mode {
            ModeKind::Discrete => 1.0,
            ModeKind::Continuous => {
                let dt = self
                    .dt
                    .ok_or_else(|| CliError::config("dt: required for continuous mode"))?;
                if !(dt.is_finite() && dt > 0.0) {
                    return Err(CliError::config(format!("dt: must be positive, got {dt}")));
                }
                dt
            }
        };

        let beacon = match &self.beacon {
            None => None,
            Some(b) => {
                if b.kind != self.mode {
                    return Err(CliError::config(
                        "beacon.kind: must match the scenario mode",
                    ));
                }
                let kind = match b.kind {
                    ModeKind::Discrete => TimeMode::Discrete,
                    ModeKind::Continuous => TimeMode::Continuous,
                };
                let position = Complex64::new(b.x, b.y);
                Some(embed_beacon(&phi, kind, position).map_err(CliError::Numeric)?)
            }
        };

        Ok(Scenario {
            phi,
            initial,
            mode: self.mode,
            steps: self.steps,
            dt,
            beacon,
            outputs: self.outputs.clone(),
        })
    }

    fn require_complex(
        &self,
        field: Option<CNum>,
        name: &'static str,
    ) -> Result<Complex64, CliError> {
        field
            .map(|c| c.0)
            .ok_or_else(|| CliError::config(format!("{name}: required for this model")))
    }
}
