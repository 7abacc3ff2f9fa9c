//! Empirical front tracking over simulation snapshots.
//!
//! The front position of a snapshot is the outermost piecewise-linear
//! crossing of a threshold level; regressing position against time over the
//! tail of a run estimates the spreading speed. Leftward estimates negate
//! the slope so that both directions report positive values for outward
//! spreading, matching the analytical speed convention.

use crate::dispersion::Direction;
use crate::error::{Error, Result};
use crate::sim::{LatticeState, SimConfig};
use crate::speed::SpeedReport;

/// Level-set trace of one front across a run.
#[derive(Debug, Clone)]
pub struct FrontTrace {
    pub direction: Direction,
    pub threshold: f64,
    /// `(time, raw position)` for every snapshot where the front exists;
    /// strictly increasing in time.
    pub samples: Vec<(f64, f64)>,
    /// Least-squares speed over the fit window, negated for leftward so
    /// positive means spreading outward.
    pub fitted_speed: f64,
    /// RMS deviation of fit-window positions from the fitted line.
    pub fit_residual: f64,
}

/// Outermost threshold crossing of the interpolated profile, or `None` when
/// no site reaches the threshold.
///
/// Rightward: the largest `p` with values at or above the threshold
/// immediately to its left, found from the largest site `j` with
/// `x_j >= threshold` and linear interpolation toward `j + 1`. Leftward is
/// the mirror image. A front sitting on the window edge reports the edge
/// coordinate itself.
pub fn front_position(
    state: &LatticeState,
    threshold: f64,
    direction: Direction,
) -> Result<Option<f64>> {
    if !(threshold > 0.0 && threshold.is_finite()) {
        return Err(Error::Domain(format!(
            "threshold must be positive and finite, got {threshold}"
        )));
    }
    let l = state.half_width();
    let v = state.values();
    let n = v.len();
    Ok(match direction {
        Direction::Rightward => v.iter().rposition(|&x| x >= threshold).map(|j| {
            if j + 1 == n {
                l as f64
            } else {
                // v[j+1] < threshold <= v[j], so the divisor is positive
                (j as i64 - l) as f64 + (v[j] - threshold) / (v[j] - v[j + 1])
            }
        }),
        Direction::Leftward => v.iter().position(|&x| x >= threshold).map(|j| {
            if j == 0 {
                -(l as f64)
            } else {
                (j as i64 - l) as f64 - (v[j] - threshold) / (v[j] - v[j - 1])
            }
        }),
    })
}

/// Regresses front position against time over the last `fit_fraction` of
/// the run.
///
/// Needs at least 10 snapshots with a defined front inside the fit window;
/// fewer signals that the front died, never formed, or (for strongly
/// negative speeds) ran out of plateau; widen the initial plateau in that
/// case.
pub fn estimate_speed(
    snapshots: &[LatticeState],
    direction: Direction,
    threshold: f64,
    fit_fraction: f64,
) -> Result<FrontTrace> {
    if !(fit_fraction > 0.0 && fit_fraction < 1.0) {
        return Err(Error::Domain(format!(
            "fit fraction must lie in (0, 1), got {fit_fraction}"
        )));
    }
    if snapshots.len() < 2 {
        return Err(Error::InsufficientData(
            "speed estimation needs at least two snapshots".into(),
        ));
    }
    for w in snapshots.windows(2) {
        if !(w[1].time() > w[0].time()) {
            return Err(Error::Domain(
                "snapshots must be strictly increasing in time".into(),
            ));
        }
    }

    let mut samples = Vec::with_capacity(snapshots.len());
    for state in snapshots {
        if let Some(p) = front_position(state, threshold, direction)? {
            samples.push((state.time(), p));
        }
    }

    let t_first = snapshots[0].time();
    let t_last = snapshots[snapshots.len() - 1].time();
    let cut = t_last - fit_fraction * (t_last - t_first);
    let window: Vec<(f64, f64)> = samples.iter().copied().filter(|&(t, _)| t >= cut).collect();
    if window.len() < 10 {
        return Err(Error::InsufficientData(format!(
            "front fit needs at least 10 positions in the last {fit_fraction} of the run, found {}; \
             widen the initial plateau if the front retreats",
            window.len()
        )));
    }

    let nf = window.len() as f64;
    let t_mean = window.iter().map(|s| s.0).sum::<f64>() / nf;
    let p_mean = window.iter().map(|s| s.1).sum::<f64>() / nf;
    let sxx: f64 = window
        .iter()
        .map(|&(t, _)| (t - t_mean) * (t - t_mean))
        .sum();
    let sxy: f64 = window
        .iter()
        .map(|&(t, p)| (t - t_mean) * (p - p_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = p_mean - slope * t_mean;
    let ss: f64 = window
        .iter()
        .map(|&(t, p)| {
            let r = p - (intercept + slope * t);
            r * r
        })
        .sum();
    let fitted_speed = match direction {
        Direction::Rightward => slope,
        Direction::Leftward => -slope,
    };
    Ok(FrontTrace {
        direction,
        threshold,
        samples,
        fitted_speed,
        fit_residual: (ss / nf).sqrt(),
    })
}

/// Checks the spreading dichotomy on the final snapshot: sites beyond the
/// rightward cone `i >= (c_plus + margin) T` have decayed to at most
/// `0.05 K`, and sites inside the interior cone
/// `-(c_minus - margin) T <= i <= (c_plus - margin) T` have locked to at
/// least `0.95 K`. The interior check applies only when that cone is
/// nonempty, i.e. `(c_plus - margin) + (c_minus - margin) > 0`.
///
/// The report must come from the same template as the simulation and must
/// carry speeds; all-zero initial data is rejected since the dichotomy
/// presumes a nonzero compactly supported start.
pub fn verify_spreading_dichotomy(
    snapshots: &[LatticeState],
    config: &SimConfig,
    report: &SpeedReport,
    margin: f64,
) -> Result<bool> {
    if !(margin > 0.0 && margin.is_finite()) {
        return Err(Error::Domain(format!(
            "margin must be positive, got {margin}"
        )));
    }
    if report.template != config.template() {
        return Err(Error::Domain(
            "speed report and simulation use different templates".into(),
        ));
    }
    let Some((c_plus, c_minus)) = report.c_plus().zip(report.c_minus()) else {
        return Err(config.template().hypothesis_error());
    };
    let Some(first) = snapshots.first() else {
        return Err(Error::InsufficientData("no snapshots to verify".into()));
    };
    if first.values().iter().all(|&v| v == 0.0) {
        return Err(Error::InsufficientData(
            "the dichotomy presumes nonzero initial data".into(),
        ));
    }
    let last = snapshots.last().unwrap();
    let t = last.time();
    if !(t > 0.0) {
        return Err(Error::InsufficientData(
            "final snapshot time must be positive".into(),
        ));
    }

    let k = config.template().k();
    let decay_edge = (c_plus + margin) * t;
    let lock_left = -(c_minus - margin) * t;
    let lock_right = (c_plus - margin) * t;
    let lock_nonempty = (c_plus - margin) + (c_minus - margin) > 0.0;
    for (i, v) in last.sites() {
        let x = i as f64;
        if x >= decay_edge && v > 0.05 * k {
            return Ok(false);
        }
        if lock_nonempty && x >= lock_left && x <= lock_right && v < 0.95 * k {
            return Ok(false);
        }
    }
    Ok(true)
}
