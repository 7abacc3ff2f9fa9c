//! Integrate the lattice from a plateau and watch the profile evolve.
//!
//! Three coupling regimes from the same initial bump: spreading to both
//! sides, a pinned right edge, and a retreating right edge. Each snapshot
//! row maps site values to density characters (space = 0 through '@' = K).
//!
//! ```bash
//! cargo run --example simulate_lattice
//! ```

use cnn_spread::{simulate, SimConfig, Template};

const SHADES: &[u8] = b" .:-=+*#%@";

fn strip(values: &[f64], k: f64) -> String {
    values
        .iter()
        .map(|&v| {
            let idx = ((v / k) * (SHADES.len() - 1) as f64).round();
            SHADES[idx.clamp(0.0, (SHADES.len() - 1) as f64) as usize] as char
        })
        .collect()
}

fn show(alpha: f64, a: f64, beta: f64, label: &str) -> cnn_spread::Result<()> {
    let template = Template::new(alpha, a, beta)?;
    let config = SimConfig::builder(template)
        .t_end(12.0)
        .snapshot_stride(300)
        .build()?;
    let k = template.k();
    println!(
        "[{alpha}, {a}, {beta}]  ({label}); window |i| <= {}",
        config.half_width()
    );
    for snap in simulate(&config)? {
        // show the center of the window; fronts here move at most ~1.5
        // sites per time unit
        let view: Vec<f64> = (-30..=30).map(|i| snap.value(i).unwrap_or(0.0)).collect();
        println!("  t={:>4}  |{}|", snap.time(), strip(&view, k));
    }
    println!();
    Ok(())
}

fn main() -> cnn_spread::Result<()> {
    show(0.5, 1.0, 0.5, "spreads to both sides")?;
    show(0.0, 1.0, 0.5, "right edge pinned, spreads left")?;
    show(0.0, 0.55, 0.5, "right edge retreats, spreads left")?;
    Ok(())
}
