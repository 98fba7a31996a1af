//! Text reports: the spectrum/classification summary and the verify
//! pass/fail table.

use std::fmt::Write as _;

use num_complex::Complex64;

use circulant_swarm::asymptotics::{classify, formation, MotionStyle};
use circulant_swarm::circulant::DenseMatrix;
use circulant_swarm::dynamics::{check_invariance, evolve_discrete, step_discrete};
use circulant_swarm::Error;

use crate::config::Scenario;
use crate::error::CliError;

fn fmt_c(z: Complex64) -> String {
    format!("{:+.6e} {:+.6e}i", z.re, z.im)
}

/// Eigenvalues, dominant set, limit classification and (when a single
/// mode dominates) the predicted formation.
pub fn spectrum_report(scenario: &Scenario) -> Result<String, CliError> {
    let phi = &scenario.phi;
    let spectrum = phi.eigenvalues()?;
    let mut out = String::new();

    let _ = writeln!(out, "n = {}, factor = {}", phi.n(), fmt_c(phi.factor()));
    let _ = writeln!(out, "gamma = {}", fmt_c(spectrum.gamma()));
    let _ = writeln!(
        out,
        "{:>3}  {:>14}  {:>14}  {:>13}",
        "l", "re", "im", "modulus"
    );
    for (l, mu) in spectrum.mu().iter().enumerate() {
        let _ = writeln!(
            out,
            "{l:>3}  {:>+14.6e}  {:>+14.6e}  {:>13.6e}",
            mu.re,
            mu.im,
            mu.norm()
        );
    }

    let limit = classify(phi, &scenario.initial)?;
    let _ = writeln!(
        out,
        "dominant modes: {:?} at modulus {:.6e}",
        limit.dominant_indices(),
        limit.dominant_modulus()
    );
    match limit.limit_point() {
        Some(p) => {
            let _ = writeln!(
                out,
                "classification: {:?}, limit point {}",
                limit.kind(),
                fmt_c(p)
            );
        }
        None => {
            let _ = writeln!(out, "classification: {:?}", limit.kind());
        }
    }

    match formation(phi, &scenario.initial) {
        Ok(f) => {
            let motion = match f.motion() {
                MotionStyle::Line => "line",
                MotionStyle::Spiral => "spiral",
            };
            let _ = writeln!(
                out,
                "formation: growth {}, motion {}",
                fmt_c(f.growth()),
                motion
            );
            let _ = writeln!(out, "  amplitude {}", fmt_c(f.amplitude()));
            for (k, d) in f.direction().iter().enumerate() {
                let _ = writeln!(out, "  direction[{k}] = {}", fmt_c(*d));
            }
        }
        Err(Error::MultiModal(modes)) => {
            let _ = writeln!(out, "formation: none (dominant modes tied: {modes:?})");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

/// Outcome of the verification run: the printable table and whether all
/// binding checks passed.
pub struct VerifyOutcome {
    pub table: String,
    pub all_pass: bool,
}

/// Closed-form self-checks on the configured scenario: diagonalization
/// consistency, unitarity when the factor is unimodular, and modal
/// versus direct stepping, plus informational invariance rows.
pub fn verify_report(scenario: &Scenario) -> Result<VerifyOutcome, CliError> {
    let phi = &scenario.phi;
    let n = phi.n();
    let mut rows: Vec<(String, f64, f64)> = Vec::new();

    let diag = phi.diagonalize()?;
    rows.push((
        "diagonalization reconstruction".into(),
        diag.reconstruct().max_abs_diff(&phi.to_dense()),
        1e-10,
    ));
    rows.push((
        "transform inverse (T T^-1 = I)".into(),
        diag.t()
            .mul(diag.t_inv())
            .max_abs_diff(&DenseMatrix::identity(n)),
        1e-10,
    ));
    if (phi.factor().norm() - 1.0).abs() <= 1e-12 {
        rows.push((
            "transform unitarity (T* T = I)".into(),
            diag.t()
                .conj_transpose()
                .mul(diag.t())
                .max_abs_diff(&DenseMatrix::identity(n)),
            1e-10,
        ));
    }

    let steps = scenario.steps.clamp(1, 200);
    let modal = evolve_discrete(phi, &scenario.initial, steps)?;
    let mut direct = scenario.initial.clone();
    for _ in 0..steps {
        direct = step_discrete(phi, &direct)?;
    }
    let scale = direct
        .positions()
        .iter()
        .map(|p| p.norm())
        .fold(1e-300, f64::max);
    let dev = modal
        .positions()
        .iter()
        .zip(direct.positions())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
        / scale;
    rows.push((
        format!("modal vs direct evolution (t = {steps})"),
        dev,
        1e-8,
    ));

    let mut table = String::new();
    let _ = writeln!(
        table,
        "{:<38} {:>12} {:>12} {:>7}",
        "check", "measured", "threshold", "status"
    );
    let mut all_pass = true;
    for (name, measured, threshold) in &rows {
        let pass = measured < threshold;
        all_pass &= pass;
        let _ = writeln!(
            table,
            "{name:<38} {measured:>12.3e} {threshold:>12.3e} {:>7}",
            if pass { "PASS" } else { "FAIL" }
        );
    }

    let report = check_invariance(phi);
    let max_zero = report
        .row_sums()
        .iter()
        .map(|s| s.norm())
        .fold(0.0, f64::max);
    let max_one = report
        .row_sums()
        .iter()
        .map(|s| (s - Complex64::new(1.0, 0.0)).norm())
        .fold(0.0, f64::max);
    let _ = writeln!(
        table,
        "{:<38} {max_zero:>12.3e} {:>12} {:>7}",
        "row sums = 0 (continuous invariance)",
        "-",
        if report.continuous_ok() { "yes" } else { "no" }
    );
    let _ = writeln!(
        table,
        "{:<38} {max_one:>12.3e} {:>12} {:>7}",
        "row sums = 1 (discrete invariance)",
        "-",
        if report.discrete_ok() { "yes" } else { "no" }
    );

    Ok(VerifyOutcome { table, all_pass })
}
