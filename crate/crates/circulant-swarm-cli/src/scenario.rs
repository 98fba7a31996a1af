//! Running a validated scenario into a trajectory of frames.

use num_complex::Complex64;

use circulant_swarm::dynamics::{evolve_continuous, step_beacon, step_discrete};
use circulant_swarm::SwarmState;

use crate::config::{ModeKind, Scenario};
use crate::error::CliError;

/// One sampled instant: the frame time and every agent position.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub time: f64,
    pub positions: Vec<Complex64>,
}

impl From<&SwarmState> for Frame {
    fn from(s: &SwarmState) -> Self {
        Frame {
            time: s.time(),
            positions: s.positions().to_vec(),
        }
    }
}

/// A sequence of frames with strictly increasing times and a constant
/// agent count. Unlike `SwarmState`, a frame may hold a single agent so
/// that externally produced trajectory files can still be plotted.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    frames: Vec<Frame>,
}

impl Trajectory {
    pub fn new(frames: Vec<Frame>) -> Result<Self, CliError> {
        if frames.is_empty() {
            return Err(CliError::Trajectory("no frames".into()));
        }
        let n = frames[0].positions.len();
        if n == 0 {
            return Err(CliError::Trajectory("frames hold no agents".into()));
        }
        for pair in frames.windows(2) {
            if pair[1].time <= pair[0].time {
                return Err(CliError::Trajectory(format!(
                    "frame times must strictly increase ({} then {})",
                    pair[0].time, pair[1].time
                )));
            }
        }
        if frames.iter().any(|f| f.positions.len() != n) {
            return Err(CliError::Trajectory(
                "agent count varies across frames".into(),
            ));
        }
        if frames
            .iter()
            .any(|f| !f.time.is_finite() || f.positions.iter().any(|p| !p.is_finite()))
        {
            return Err(CliError::Trajectory("non-finite value".into()));
        }
        Ok(Trajectory { frames })
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn n_agents(&self) -> usize {
        self.frames[0].positions.len()
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }
}

/// Run the scenario: frame 0 is the initial constellation, discrete mode
/// applies one matrix step per frame, continuous mode samples the closed
/// form at t = 0, dt, 2·dt, ..., steps·dt. Deterministic given the seed.
pub fn run_scenario(scenario: &Scenario) -> Result<Trajectory, CliError> {
    let mut frames = Vec::with_capacity(scenario.steps as usize + 1);
    frames.push(Frame::from(&scenario.initial));

    match scenario.mode {
        ModeKind::Discrete => {
            let mut state = scenario.initial.clone();
            for _ in 0..scenario.steps {
                state = match &scenario.beacon {
                    Some(system) => step_beacon(system, &state)?,
                    None => step_discrete(&scenario.phi, &state)?,
                };
                frames.push(Frame::from(&state));
            }
        }
        ModeKind::Continuous => {
            // With a beacon the evolution is the plain one in the frame
            // anchored at the beacon position.
            let (origin, base0) = match &scenario.beacon {
                Some(system) => {
                    let p = system.beacon_position();
                    let shifted = scenario.initial.positions().iter().map(|q| q - p).collect();
                    (p, SwarmState::new(shifted, scenario.initial.time())?)
                }
                None => (Complex64::new(0.0, 0.0), scenario.initial.clone()),
            };
            for k in 1..=scenario.steps {
                let t = k as f64 * scenario.dt;
                let evolved = evolve_continuous(&scenario.phi, &base0, t)?;
                let positions = evolved.positions().iter().map(|q| q + origin).collect();
                frames.push(Frame { time: t, positions });
            }
        }
    }

    Trajectory::new(frames)
}
