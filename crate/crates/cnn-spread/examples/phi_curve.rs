//! Tabulate the wave-speed candidate curve `Phi(mu) = h(mu)/mu`.
//!
//! Three shapes appear across templates:
//!   - an interior minimum (both couplings active),
//!   - a curve decreasing to zero at infinity (`alpha_eff = 0`, `a >= 1`,
//!     the pinned case: the infimum is never attained),
//!   - a negative interior minimum (`alpha_eff = 0`, `a < 1`, retreat).
//!
//! ```bash
//! cargo run --example phi_curve
//! ```

use cnn_spread::{solve_speed, Direction, DispersionCurve, MinimizerKind, Template, DEFAULT_TOL};

fn show(alpha: f64, a: f64, beta: f64, label: &str) -> cnn_spread::Result<()> {
    let template = Template::new(alpha, a, beta)?;
    let curve = DispersionCurve::new(template, Direction::Rightward);
    println!("[{alpha}, {a}, {beta}]  ({label})");
    println!("  {:>6} {:>12}", "mu", "phi");
    for k in 1..=8 {
        let mu = 0.5 * k as f64;
        println!("  {:>6.2} {:>12.6}", mu, curve.phi(mu)?);
    }
    let (speed, minimizer) = solve_speed(&curve, DEFAULT_TOL)?;
    match minimizer.kind {
        MinimizerKind::Interior { mu_star } => {
            println!("  infimum {speed:.6} attained at mu* = {mu_star:.6}\n");
        }
        MinimizerKind::AtInfinity => {
            println!("  infimum {speed:.6} approached only as mu -> infinity\n");
        }
    }
    Ok(())
}

fn main() -> cnn_spread::Result<()> {
    show(0.5, 1.0, 0.5, "interior minimum")?;
    show(0.0, 1.0, 0.5, "pinned: decreasing to zero")?;
    show(0.0, 0.55, 0.5, "retreating: negative minimum")?;
    Ok(())
}
