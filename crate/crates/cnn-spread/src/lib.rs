//! Spreading speeds for one-dimensional cellular neural network lattices.
//!
//! The model is the infinite system of coupled ODEs
//!
//! ```text
//! dx_i/dt = -x_i + alpha f(x_{i-1}) + a f(x_i) + beta f(x_{i+1})
//! ```
//!
//! with the saturation output `f(u) = (|u+1| - |u-1|)/2` and nonnegative
//! coupling weights `alpha, a, beta`. When `alpha + beta > 0` and
//! `K = alpha + a + beta > 1` (hypothesis (H)), compactly supported
//! nonnegative data spreads with definite rightward and leftward speeds.
//! This crate computes those speeds from the linearization's dispersion
//! relation, classifies their signs in closed form, studies their behavior
//! under template limits, and validates everything against direct lattice
//! simulation with level-set front tracking.
//!
//! ## Examples
//!
//! The `examples/` directory is the primary interface; each file is a
//! self-contained tour of one capability:
//!
//! ```text
//! examples/
//! ├── analyze_template.rs   # speeds, minimizers, sign classes for one template
//! ├── phi_curve.rs          # the curve Phi = h/mu whose infimum is the speed
//! ├── sign_tables.rs        # closed-form sign classification across parameter cells
//! ├── simulate_lattice.rs   # RK4 lattice run from a plateau, snapshot export
//! ├── estimate_speed.rs     # empirical speeds from front regression vs. formula
//! ├── dichotomy_check.rs    # decay/lock-in cones of the spreading dichotomy
//! ├── continuity_sweep.rs   # speeds along a template sequence with envelopes
//! └── limiting_case.rs      # degenerate limit K -> 1+, collapsing minimizers
//! ```
//!
//! ```bash
//! cargo run --example analyze_template
//! cargo run --example estimate_speed
//! ```
//!
//! The same capabilities ship as a thin CLI (`cnn-spread`) with subcommands
//! `analyze`, `phi-curve`, `simulate`, `estimate`, and `sweep`; see the
//! README for the command contract.
//!
//! ## Quickstart
//!
//! ```
//! use cnn_spread::{analyze, Template, DEFAULT_TOL};
//!
//! let template = Template::new(0.5, 1.0, 0.5)?;
//! let report = analyze(&template, DEFAULT_TOL)?;
//! let speeds = report.speeds.expect("this template satisfies (H)");
//! assert!((speeds.plus.speed - 1.5089).abs() < 1e-4);
//! assert_eq!(speeds.plus.speed, speeds.minus.speed); // symmetric template
//! # Ok::<(), cnn_spread::Error>(())
//! ```
//!
//! Speeds come from minimizing `Phi(mu) = h(mu)/mu` over `mu > 0`, where
//! `h` is the exponential growth rate of the linearized semiflow; the
//! minimizer is an interior critical point except in the pinned case
//! `alpha_eff = 0, a >= 1`, where the infimum (zero) is only approached as
//! `mu -> infinity`.

// validation guards are written `!(x > 0.0)` on purpose: the negation is
// true for NaN, so non-finite inputs fall into the rejecting branch
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod cli;
pub mod dispersion;
pub mod error;
pub mod front;
pub mod sim;
pub mod speed;

pub use asymptotics::{
    envelope, eval_g_path, limiting_speed_path, verify_speed_continuity, ContinuityReport,
    ContinuityRow, EnvelopePair, ParametrizedTemplate, PathPoint, PathReport, TemplateSequence,
};
pub use dispersion::{Direction, DispersionCurve, ShiftedCurve, Template};
pub use error::{Error, Result};
pub use front::{estimate_speed, front_position, verify_spreading_dichotomy, FrontTrace};
pub use sim::{
    initial_state, output_f, simulate, simulate_from, step, LatticeState, SimConfig,
    SimConfigBuilder, MEMORY_CAP,
};
pub use speed::{
    analyze, classify_sign, numeric_sign, solve_speed, DirectionalSpeed, Minimizer, MinimizerKind,
    SignClass, SpeedPair, SpeedReport, DEFAULT_TOL, ZERO_BAND,
};
