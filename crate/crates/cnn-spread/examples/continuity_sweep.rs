//! Speeds vary continuously along template sequences.
//!
//! The sequence `[0.5 + 2^-k, 1, 0.5]` descends to `[0.5, 1, 0.5]`; the
//! solved speeds of the entries converge to the limit's speeds, and the
//! suffix-extrema envelopes squeeze every entry from both sides. A second
//! sequence descends into the pinned set `alpha = 0`: the entries' interior
//! minimizers run off to infinity while their speeds still converge to the
//! limit's zero.
//!
//! ```bash
//! cargo run --example continuity_sweep
//! ```

use cnn_spread::{verify_speed_continuity, Template, TemplateSequence};

fn run(entries: Vec<Template>, limit: Template, tail_tol: f64, eps: f64) -> cnn_spread::Result<()> {
    let sequence = TemplateSequence::new(entries, limit, tail_tol)?;
    let report = verify_speed_continuity(&sequence, eps)?;
    println!(
        "limit c+ = {:.9}, c- = {:.9}",
        report.limit_c_plus, report.limit_c_minus
    );
    println!(
        "  {:>3} {:>14} {:>13} {:>13} {:>9}",
        "n", "c_plus(n)", "|err+|", "|err-|", "sandwich"
    );
    for row in &report.rows {
        println!(
            "  {:>3} {:>14.9} {:>13.3e} {:>13.3e} {:>9}",
            row.n, row.c_plus, row.abs_error_plus, row.abs_error_minus, row.sandwich_ok
        );
    }
    println!(
        "converged within eps = {eps}: {}; envelope sandwich everywhere: {}\n",
        report.converged, report.sandwich_ok
    );
    Ok(())
}

fn main() -> cnn_spread::Result<()> {
    let toward_interior: Vec<Template> = (1..=12)
        .map(|k| Template::new(0.5 + (0.5f64).powi(k), 1.0, 0.5).unwrap())
        .collect();
    run(toward_interior, Template::new(0.5, 1.0, 0.5)?, 1e-3, 1e-3)?;

    let toward_pinned: Vec<Template> = (1..=14)
        .map(|k| Template::new((0.5f64).powi(k), 1.0, 0.5).unwrap())
        .collect();
    run(toward_pinned, Template::new(0.0, 1.0, 0.5)?, 1e-3, 5e-3)?;
    Ok(())
}
