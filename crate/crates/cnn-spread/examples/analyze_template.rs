//! Solve both spreading speeds for a handful of benchmark templates.
//!
//! For each template `[alpha, a, beta]` the rightward speed is the infimum
//! of `Phi(mu) = h(mu)/mu` over `mu > 0`, and the leftward speed is the
//! same computation with `alpha` and `beta` swapped. The minimizer is an
//! interior critical point except when `alpha_eff = 0` and `a >= 1`, where
//! the infimum is only approached as `mu -> infinity`.
//!
//! ```bash
//! cargo run --example analyze_template
//! ```

use cnn_spread::{analyze, MinimizerKind, Template, DEFAULT_TOL};

fn mu_column(kind: MinimizerKind) -> String {
    match kind {
        MinimizerKind::Interior { mu_star } => format!("{mu_star:.6}"),
        MinimizerKind::AtInfinity => "infinity".into(),
    }
}

fn main() -> cnn_spread::Result<()> {
    let templates = [
        (0.5, 1.0, 0.5),
        (0.05, 0.5, 0.5),
        (0.125, 0.5, 0.5),
        (0.0, 1.0, 0.5),
        (0.0, 0.55, 0.5),
    ];

    println!(
        "{:<20} {:>10} {:>10} {:>10} {:>10} {:>9} {:>9}",
        "template", "c_plus", "c_minus", "mu*_plus", "mu*_minus", "sign+", "sign-"
    );
    for (alpha, a, beta) in templates {
        let template = Template::new(alpha, a, beta)?;
        let report = analyze(&template, DEFAULT_TOL)?;
        let speeds = report.speeds.expect("benchmark templates satisfy (H)");
        println!(
            "{:<20} {:>10.6} {:>10.6} {:>10} {:>10} {:>9} {:>9}",
            format!("[{alpha}, {a}, {beta}]"),
            speeds.plus.speed,
            speeds.minus.speed,
            mu_column(speeds.plus.minimizer.kind),
            mu_column(speeds.minus.minimizer.kind),
            speeds.plus.sign.to_string(),
            speeds.minus.sign.to_string(),
        );
    }

    // a template without (H) has no spreading-speed theory: the report
    // carries the flag instead of speeds
    let degenerate = Template::new(0.3, 0.3, 0.3)?;
    let report = analyze(&degenerate, DEFAULT_TOL)?;
    println!(
        "\n[0.3, 0.3, 0.3]: hypothesis (H) holds = {}, speeds = {:?}",
        report.h_flag,
        report.speeds.map(|s| (s.plus.speed, s.minus.speed)),
    );
    Ok(())
}
