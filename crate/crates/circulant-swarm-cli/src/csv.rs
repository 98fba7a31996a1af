//! Trajectory CSV: header `t,agent,x,y`, one row per (frame, agent),
//! rows ordered by time then agent index. Floating-point columns carry
//! 17 significant digits, enough to reproduce every f64 bit-exactly on
//! read-back.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::CliError;
use crate::scenario::{Frame, Trajectory};

pub const HEADER: &str = "t,agent,x,y";

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_trajectory<W: Write>(traj: &Trajectory, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{HEADER}")?;
    for frame in traj.frames() {
        for (agent, p) in frame.positions.iter().enumerate() {
            writeln!(
                w,
                "{},{},{},{}",
                fmt(frame.time),
                agent,
                fmt(p.re),
                fmt(p.im)
            )?;
        }
    }
    Ok(())
}

pub fn write_trajectory_file(traj: &Trajectory, path: &std::path::Path) -> std::io::Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buf = std::io::BufWriter::new(file);
    write_trajectory(traj, &mut buf)?;
    buf.flush()
}

pub fn read_trajectory<R: BufRead>(r: R) -> Result<Trajectory, CliError> {
    let mut lines = r.lines();
    match lines.next() {
        Some(Ok(h)) if h.trim_end() == HEADER => {}
        Some(Ok(h)) => {
            return Err(CliError::Trajectory(format!(
                "expected header `{HEADER}`, got `{h}`"
            )))
        }
        Some(Err(e)) => return Err(CliError::Io(e)),
        None => return Err(CliError::Trajectory("empty file".into())),
    }

    let mut frames: Vec<Frame> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line.map_err(CliError::Io)?;
        let row = idx + 2; // 1-based, after the header
        if line.trim().is_empty() {
            continue;
        }
        let mut cols = line.split(',');
        let mut next = |name: &str| {
            cols.next()
                .ok_or_else(|| CliError::Trajectory(format!("row {row}: missing column {name}")))
        };
        let t: f64 = parse_field(next("t")?, row, "t")?;
        let agent: usize = parse_field(next("agent")?, row, "agent")?;
        let x: f64 = parse_field(next("x")?, row, "x")?;
        let y: f64 = parse_field(next("y")?, row, "y")?;
        if cols.next().is_some() {
            return Err(CliError::Trajectory(format!("row {row}: too many columns")));
        }

        let position = Complex64::new(x, y);
        let start_new_frame = frames.last().is_none_or(|f| t > f.time);
        if start_new_frame {
            if agent != 0 {
                return Err(CliError::Trajectory(format!(
                    "row {row}: frame at t={t} must start with agent 0"
                )));
            }
            frames.push(Frame {
                time: t,
                positions: vec![position],
            });
        } else {
            let frame = frames.last_mut().unwrap();
            if t != frame.time {
                return Err(CliError::Trajectory(format!(
                    "row {row}: time went backwards ({t} after {})",
                    frame.time
                )));
            }
            if agent != frame.positions.len() {
                return Err(CliError::Trajectory(format!(
                    "row {row}: expected agent {}, got {agent}",
                    frame.positions.len()
                )));
            }
            frame.positions.push(position);
        }
    }
    Trajectory::new(frames)
}

pub fn read_trajectory_file(path: &std::path::Path) -> Result<Trajectory, CliError> {
    let file = std::fs::File::open(path)?;
    read_trajectory(std::io::BufReader::new(file))
}

fn parse_field<T: std::str::FromStr>(s: &str, row: usize, name: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Trajectory(format!("row {row}: bad {name} value `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_frame_two_agents_is_three_lines() {
        let traj = Trajectory::new(vec![Frame {
            time: 0.0,
            positions: vec![c(0.25, -1.5), c(1.0 / 3.0, 2.0)],
        }])
        .unwrap();
        let mut out = Vec::new();
        write_trajectory(&traj, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "t,agent,x,y");
        assert!(lines[1].starts_with("0.0000000000000000e0,0,"));
    }

    #[test]
    fn round_trip_reproduces_positions_bit_exactly() {
        let frames = vec![
            Frame {
                time: 0.0,
                positions: vec![c(0.1, 0.2), c(-0.3, 1.0 / 7.0)],
            },
            Frame {
                time: 1.0,
                positions: vec![c(1e-17, 2e8), c(std::f64::consts::PI, -0.0)],
            },
        ];
        let traj = Trajectory::new(frames).unwrap();
        let mut out = Vec::new();
        write_trajectory(&traj, &mut out).unwrap();
        let back = read_trajectory(std::io::Cursor::new(out)).unwrap();
        assert_eq!(back.len(), traj.len());
        for (f, g) in traj.frames().iter().zip(back.frames()) {
            assert_eq!(f.time.to_bits(), g.time.to_bits());
            for (p, q) in f.positions.iter().zip(&g.positions) {
                assert_eq!(p.re.to_bits(), q.re.to_bits());
                assert_eq!(p.im.to_bits(), q.im.to_bits());
            }
        }
    }

    #[test]
    fn rejects_missing_header() {
        let err = read_trajectory(std::io::Cursor::new("a,b,c\n")).unwrap_err();
        assert!(err.to_string().contains("header"));
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn rejects_jumbled_agent_order() {
        let text = "t,agent,x,y\n0.0,1,0.0,0.0\n";
        let err = read_trajectory(std::io::Cursor::new(text)).unwrap_err();
        assert!(err.to_string().contains("agent 0"), "{err}");
    }

    #[test]
    fn single_agent_files_are_accepted() {
        let text = "t,agent,x,y\n0.0,0,1.0,2.0\n1.0,0,3.0,4.0\n";
        let traj = read_trajectory(std::io::Cursor::new(text)).unwrap();
        assert_eq!(traj.n_agents(), 1);
        assert_eq!(traj.len(), 2);
    }
}
