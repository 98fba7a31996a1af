//! Standalone SVG rendering of trajectory frames.
//!
//! Every frame is drawn as a closed polyline through the agents in index
//! order, plus a dot per agent (so single-agent frames still render).
//! The y axis is flipped on output so that positive imaginary parts
//! point up.

use std::io::Write;

use clap::ValueEnum;

use crate::scenario::{Frame, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum PlotStyle {
    /// Frame 0 in red and frame 1 in blue.
    OverlayFirstStep,
    /// Every frame, first in red, last in blue.
    FullEvolution,
    /// Only the last five frames, viewport tightened around them.
    FinalZoom,
}

const RED: &str = "#d32f2f";
const BLUE: &str = "#1565c0";
const GRAY: &str = "#9e9e9e";

/// How many trailing frames the final-zoom style shows.
pub const ZOOM_FRAMES: usize = 5;

/// Margin applied on each side of the viewport, as a fraction of the
/// larger bounding-box dimension.
pub const VIEW_MARGIN: f64 = 0.05;

fn visible_frames(traj: &Trajectory, style: PlotStyle) -> &[Frame] {
    let frames = traj.frames();
    match style {
        PlotStyle::OverlayFirstStep => &frames[..frames.len().min(2)],
        PlotStyle::FullEvolution => frames,
        PlotStyle::FinalZoom => &frames[frames.len().saturating_sub(ZOOM_FRAMES)..],
    }
}

fn color_for(style: PlotStyle, index: usize, count: usize) -> &'static str {
    match style {
        PlotStyle::OverlayFirstStep => {
            if index == 0 {
                RED
            } else {
                BLUE
            }
        }
        PlotStyle::FullEvolution | PlotStyle::FinalZoom => {
            if index == 0 && count > 1 {
                RED
            } else if index + 1 == count {
                BLUE
            } else {
                GRAY
            }
        }
    }
}

/// Axis-aligned bounding box of the drawn frames (plot coordinates,
/// y already flipped), expanded by the margin.
pub fn viewport(frames: &[Frame]) -> (f64, f64, f64, f64) {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for f in frames {
        for p in &f.positions {
            min_x = min_x.min(p.re);
            max_x = max_x.max(p.re);
            min_y = min_y.min(-p.im);
            max_y = max_y.max(-p.im);
        }
    }
    let span = (max_x - min_x).max(max_y - min_y);
    let pad = if span > 0.0 { VIEW_MARGIN * span } else { 0.5 };
    (
        min_x - pad,
        min_y - pad,
        (max_x - min_x) + 2.0 * pad,
        (max_y - min_y) + 2.0 * pad,
    )
}

pub fn render_plot<W: Write>(traj: &Trajectory, style: PlotStyle, mut w: W) -> std::io::Result<()> {
    let frames = visible_frames(traj, style);
    let (vx, vy, vw, vh) = viewport(frames);
    let dim = vw.max(vh);
    let stroke = 0.004 * dim;
    let radius = 0.008 * dim;

    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="{vx} {vy} {vw} {vh}" preserveAspectRatio="xMidYMid meet">"#
    )?;
    writeln!(
        w,
        r#"<rect x="{vx}" y="{vy}" width="{vw}" height="{vh}" fill="white"/>"#
    )?;

    let count = frames.len();
    for (i, frame) in frames.iter().enumerate() {
        let color = color_for(style, i, count);
        if frame.positions.len() >= 2 {
            let mut d = String::new();
            for (k, p) in frame.positions.iter().enumerate() {
                let cmd = if k == 0 { 'M' } else { 'L' };
                d.push_str(&format!("{cmd} {} {} ", p.re, -p.im));
            }
            d.push('Z');
            writeln!(
                w,
                r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="{stroke}"/>"#
            )?;
        }
        for p in &frame.positions {
            writeln!(
                w,
                r#"<circle cx="{}" cy="{}" r="{radius}" fill="{color}"/>"#,
                p.re, -p.im
            )?;
        }
    }
    writeln!(w, "</svg>")
}

pub fn render_plot_file(
    traj: &Trajectory,
    style: PlotStyle,
    path: &std::path::Path,
) -> std::io::Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buf = std::io::BufWriter::new(file);
    render_plot(traj, style, &mut buf)?;
    buf.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn two_frame_square() -> Trajectory {
        Trajectory::new(vec![
            Frame {
                time: 0.0,
                positions: vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)],
            },
            Frame {
                time: 1.0,
                positions: vec![c(0.5, 0.0), c(1.0, 0.5), c(0.5, 1.0), c(0.0, 0.5)],
            },
        ])
        .unwrap()
    }

    fn render_to_string(traj: &Trajectory, style: PlotStyle) -> String {
        let mut out = Vec::new();
        render_plot(traj, style, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn overlay_draws_red_then_blue_closed_paths() {
        let svg = render_to_string(&two_frame_square(), PlotStyle::OverlayFirstStep);
        let paths: Vec<&str> = svg.lines().filter(|l| l.starts_with("<path")).collect();
        assert_eq!(paths.len(), 2);
        assert!(paths[0].contains(RED) && paths[0].contains('Z'));
        assert!(paths[1].contains(BLUE) && paths[1].contains('Z'));
    }

    #[test]
    fn single_agent_renders_dots_without_paths() {
        let traj = Trajectory::new(vec![
            Frame {
                time: 0.0,
                positions: vec![c(0.3, 0.7)],
            },
            Frame {
                time: 1.0,
                positions: vec![c(0.4, 0.6)],
            },
        ])
        .unwrap();
        let svg = render_to_string(&traj, PlotStyle::OverlayFirstStep);
        assert!(!svg.contains("<path"));
        assert_eq!(svg.lines().filter(|l| l.starts_with("<circle")).count(), 2);
    }

    #[test]
    fn full_evolution_draws_every_frame() {
        let svg = render_to_string(&two_frame_square(), PlotStyle::FullEvolution);
        assert_eq!(svg.lines().filter(|l| l.starts_with("<path")).count(), 2);
        assert_eq!(svg.lines().filter(|l| l.starts_with("<circle")).count(), 8);
    }

    #[test]
    fn final_zoom_viewport_strictly_contains_last_frames() {
        let frames: Vec<Frame> = (0..12)
            .map(|k| {
                let s = 1.0 / (k as f64 + 1.0);
                Frame {
                    time: k as f64,
                    positions: vec![c(-s, -s), c(s, -s), c(s, s), c(-s, s)],
                }
            })
            .collect();
        let traj = Trajectory::new(frames).unwrap();
        let svg = render_to_string(&traj, PlotStyle::FinalZoom);

        let vb = svg
            .lines()
            .next()
            .and_then(|l| l.split("viewBox=\"").nth(1))
            .and_then(|l| l.split('"').next())
            .expect("viewBox attribute");
        let nums: Vec<f64> = vb.split(' ').map(|v| v.parse().unwrap()).collect();
        let (vx, vy, vw, vh) = (nums[0], nums[1], nums[2], nums[3]);

        // the last five frames fit strictly inside, older ones need not
        let last5 = &traj.frames()[traj.len() - ZOOM_FRAMES..];
        for f in last5 {
            for p in &f.positions {
                assert!(p.re > vx && p.re < vx + vw);
                assert!(-p.im > vy && -p.im < vy + vh);
            }
        }
        // the very first (largest) square lies outside this viewport
        assert!(vx > -1.0);
    }

    #[test]
    fn every_drawn_point_comes_from_the_trajectory() {
        let traj = two_frame_square();
        let svg = render_to_string(&traj, PlotStyle::FullEvolution);
        for line in svg.lines().filter(|l| l.starts_with("<circle")) {
            let cx: f64 = attr(line, "cx").parse().unwrap();
            let cy: f64 = attr(line, "cy").parse().unwrap();
            let found = traj
                .frames()
                .iter()
                .flat_map(|f| &f.positions)
                .any(|p| p.re == cx && -p.im == cy);
            assert!(found, "plotted point ({cx}, {cy}) not in trajectory");
        }
    }

    fn attr<'l>(line: &'l str, name: &str) -> &'l str {
        line.split(&format!("{name}=\""))
            .nth(1)
            .and_then(|rest| rest.split('"').next())
            .unwrap()
    }

    #[test]
    fn rendering_is_deterministic() {
        let traj = two_frame_square();
        let a = render_to_string(&traj, PlotStyle::FullEvolution);
        let b = render_to_string(&traj, PlotStyle::FullEvolution);
        assert_eq!(a, b);
    }
}
