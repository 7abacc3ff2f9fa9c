//! The degenerate limit: speeds as the template sum drops to one.
//!
//! The family `[0.7, 0.2, 0.1 + s]` satisfies (H) for every `s > 0` but its
//! `s = 0` member sits on the surface `alpha + a + beta = 1`, where the
//! spreading theory fails. Along `s -> 0+` the interior minimizers
//! `mu*(s)` collapse to zero and the speeds converge to `+-(alpha - beta)`
//! of the limit template even though no minimizer exists there.
//!
//! ```bash
//! cargo run --example limiting_case
//! ```

use cnn_spread::{limiting_speed_path, Direction, ParametrizedTemplate, Template};

fn main() -> cnn_spread::Result<()> {
    let base = Template::new(0.7, 0.2, 0.1)?;
    let family = ParametrizedTemplate::special(base, 1.0)?;
    let s_grid = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];

    for direction in [Direction::Rightward, Direction::Leftward] {
        let path = limiting_speed_path(&family, &s_grid, direction)?;
        println!("{direction}: limit speed = {:+.6}", path.limit_speed);
        println!(
            "  {:>8} {:>13} {:>13} {:>12}",
            "s", "c(s)", "mu*(s)", "|gap|"
        );
        for point in &path.points {
            println!(
                "  {:>8} {:>13.8} {:>13.8} {:>12.3e}",
                point.s,
                point.speed,
                point.minimizer.mu_star().expect("interior for s > 0"),
                (point.speed - path.limit_speed).abs(),
            );
        }
        println!(
            "  mu* strictly decreasing: {}; final gap {:.3e}\n",
            path.mu_star_decreasing, path.final_gap
        );
    }
    Ok(())
}
