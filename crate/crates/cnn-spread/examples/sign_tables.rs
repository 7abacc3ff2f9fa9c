//! Closed-form sign classification across the parameter cells.
//!
//! Under hypothesis (H) the sign of each directional speed is decided
//! without solving: with both couplings positive it is the sign
//! of `2 sqrt(alpha beta) + a - 1` on the weak side (`alpha < beta` for
//! rightward) and positive on the strong side; with one coupling absent the
//! pinned direction is zero for `a >= 1` and negative for `a < 1`.
//!
//! Every cell below is checked two ways: the closed form and the sign of
//! the actually solved speed.
//!
//! ```bash
//! cargo run --example sign_tables
//! ```

use cnn_spread::{analyze, classify_sign, numeric_sign, Direction, Template, DEFAULT_TOL};

fn main() -> cnn_spread::Result<()> {
    // a = 1 - 2 sqrt(alpha beta) lands exactly on the zero-speed surface
    let zero_a = |alpha: f64, beta: f64| 1.0 - 2.0 * (alpha * beta).sqrt();

    let cells: [(&str, f64, f64, f64); 11] = [
        ("alpha > beta, disc > 0", 0.5, 1.0, 0.3),
        ("alpha > beta, disc = 0", 0.4, zero_a(0.4, 0.1), 0.1),
        ("alpha > beta, disc < 0", 0.9, 0.1, 0.05),
        ("alpha = beta", 0.5, 1.0, 0.5),
        ("beta > alpha, disc > 0", 0.3, 1.0, 0.5),
        ("beta > alpha, disc = 0", 0.1, zero_a(0.1, 0.4), 0.4),
        ("beta > alpha, disc < 0", 0.05, 0.1, 0.9),
        ("alpha > beta = 0, a >= 1", 0.5, 1.0, 0.0),
        ("alpha > beta = 0, a < 1", 0.5, 0.55, 0.0),
        ("beta > alpha = 0, a >= 1", 0.0, 1.0, 0.5),
        ("beta > alpha = 0, a < 1", 0.0, 0.55, 0.5),
    ];

    println!(
        "{:<28} {:>24} {:>7} {:>7} {:>11} {:>11}",
        "cell", "template", "sign+", "sign-", "c_plus", "c_minus"
    );
    for (label, alpha, a, beta) in cells {
        let template = Template::new(alpha, a, beta)?;
        let plus = classify_sign(&template, Direction::Rightward)?;
        let minus = classify_sign(&template, Direction::Leftward)?;
        let report = analyze(&template, DEFAULT_TOL)?;
        let speeds = report.speeds.expect("all cells satisfy (H)");
        assert_eq!(plus, numeric_sign(speeds.plus.speed));
        assert_eq!(minus, numeric_sign(speeds.minus.speed));
        println!(
            "{label:<28} {:>24} {:>7} {:>7} {:>11.6} {:>11.6}",
            format!("[{alpha:.4}, {a:.4}, {beta:.4}]"),
            plus.to_string(),
            minus.to_string(),
            speeds.plus.speed,
            speeds.minus.speed,
        );
    }
    println!("\nclosed-form signs agree with the solved speeds in every cell");
    Ok(())
}
