//! Lattice ODE integration.
//!
//! Integrates
//!
//! ```text
//! dx_i/dt = -x_i + alpha f(x_{i-1}) + a f(x_i) + beta f(x_{i+1})
//! ```
//!
//! on the finite window `|i| <= L` with Dirichlet-zero ghosts, from a
//! compactly supported plateau, using classical fixed-step RK4. The window
//! bound `L > w0 + ceil((K+2) t_end)` keeps every front strictly inside the
//! window for the whole run (coupling magnitudes bound the propagation
//! speed by `K + 2`), so the truncation never feeds back into the tracked
//! region.

use crate::dispersion::Template;
use crate::error::{Error, Result};

/// Cap on total stored snapshot values across a run.
pub const MEMORY_CAP: usize = 100_000_000;

/// Piecewise-linear saturation output: identity on `[-1, 1]`, clamped
/// outside.
#[inline]
pub fn output_f(u: f64) -> f64 {
    u.clamp(-1.0, 1.0)
}

/// Validated simulation configuration. Construct through
/// [`SimConfig::builder`]; the builder owns the window and memory guards.
#[derive(Debug, Clone, Copy)]
pub struct SimConfig {
    template: Template,
    half_width: i64,
    dt: f64,
    t_end: f64,
    init_half_width: i64,
    init_level: f64,
    snapshot_stride: usize,
    n_steps: usize,
}

/// Builder with desk-scale defaults: `dt = 0.01`, `t_end = 60`, plateau
/// half-width `w0 = 5` at level `K`, one snapshot per time unit, window
/// auto-sized from the propagation bound.
#[derive(Debug, Clone)]
pub struct SimConfigBuilder {
    template: Template,
    half_width: Option<i64>,
    dt: f64,
    t_end: f64,
    init_half_width: i64,
    init_level: Option<f64>,
    snapshot_stride: Option<usize>,
}

impl SimConfig {
    pub fn builder(template: Template) -> SimConfigBuilder {
        SimConfigBuilder {
            template,
            half_width: None,
            dt: 0.01,
            t_end: 60.0,
            init_half_width: 5,
            init_level: None,
            snapshot_stride: None,
        }
    }

    pub fn template(&self) -> Template {
        self.template
    }

    /// Window half-width `L`; sites run over `[-L, L]`.
    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn init_half_width(&self) -> i64 {
        self.init_half_width
    }

    pub fn init_level(&self) -> f64 {
        self.init_level
    }

    pub fn snapshot_stride(&self) -> usize {
        self.snapshot_stride
    }

    /// Number of RK4 steps a run performs; the final time is
    /// `n_steps * dt`.
    pub fn n_steps(&self) -> usize {
        self.n_steps
    }
}

impl SimConfigBuilder {
    pub fn half_width(mut self, l: i64) -> Self {
        self.half_width = Some(l);
        self
    }

    pub fn dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    pub fn t_end(mut self, t_end: f64) -> Self {
        self.t_end = t_end;
        self
    }

    pub fn init_half_width(mut self, w0: i64) -> Self {
        self.init_half_width = w0;
        self
    }

    pub fn init_level(mut self, level: f64) -> Self {
        self.init_level = Some(level);
        self
    }

    pub fn snapshot_stride(mut self, stride: usize) -> Self {
        self.snapshot_stride = Some(stride);
        self
    }

    pub fn build(self) -> Result<SimConfig> {
        let k = self.template.k();
        if !(self.dt > 0.0 && self.dt <= 0.1) {
            return Err(Error::Config(format!(
                "dt must lie in (0, 0.1], got {}",
                self.dt
            )));
        }
        if !(self.t_end > 0.0 && self.t_end.is_finite()) {
            return Err(Error::Config(format!(
                "t_end must be positive and finite, got {}",
                self.t_end
            )));
        }
        if self.init_half_width < 0 {
            return Err(Error::Config(format!(
                "init half-width must be nonnegative, got {}",
                self.init_half_width
            )));
        }
        let init_level = self.init_level.unwrap_or(k);
        if !(init_level > 0.0 && init_level <= k) {
            return Err(Error::Config(format!(
                "init level must lie in (0, K] = (0, {k}], got {init_level}"
            )));
        }
        let stride = self
            .snapshot_stride
            .unwrap_or_else(|| ((1.0 / self.dt).round() as usize).max(1));
        if stride == 0 {
            return Err(Error::Config("snapshot stride must be positive".into()));
        }

        // propagation bound: no front crosses more than (K+2) sites per
        // unit time, so this many sites beyond the plateau stay untouched
        let reach = ((k + 2.0) * self.t_end).ceil();
        let min_half_width = self.init_half_width as f64 + reach;
        if !(min_half_width <= 5e7) {
            return Err(Error::Config(format!(
                "run needs a window of {min_half_width} sites per side, beyond the memory guard"
            )));
        }
        let min_half_width = min_half_width as i64;
        let half_width = self.half_width.unwrap_or(min_half_width + 1);
        if half_width <= min_half_width {
            return Err(Error::Config(format!(
                "window half-width must exceed w0 + ceil((K+2) t_end) = {min_half_width}, got {half_width}"
            )));
        }

        // the -1e-9 guard stops an epsilon-above-integer quotient from
        // adding a spurious extra step
        let n_steps = ((self.t_end / self.dt - 1e-9).ceil() as usize).max(1);
        let n_snapshots = n_steps / stride + 1 + usize::from(!n_steps.is_multiple_of(stride));
        let n_sites = 2 * half_width as usize + 1;
        match n_sites.checked_mul(n_snapshots) {
            Some(total) if total <= MEMORY_CAP => {}
            _ => {
                return Err(Error::Config(format!(
                    "run would store {n_snapshots} snapshots of {n_sites} sites, beyond the cap of {MEMORY_CAP} values"
                )));
            }
        }

        Ok(SimConfig {
            template: self.template,
            half_width,
            dt: self.dt,
            t_end: self.t_end,
            init_half_width: self.init_half_width,
            init_level,
            snapshot_stride: stride,
            n_steps,
        })
    }
}

/// Lattice values at one instant, indexed `i` in `[-L, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeState {
    time: f64,
    half_width: i64,
    values: Vec<f64>,
}

impl LatticeState {
    /// Wraps raw values; `values[j]` holds site `j - half_width`.
    pub fn new(time: f64, half_width: i64, values: Vec<f64>) -> Result<Self> {
        if half_width < 0 {
            return Err(Error::Domain(format!(
                "half-width must be nonnegative, got {half_width}"
            )));
        }
        if !time.is_finite() {
            return Err(Error::Domain(format!("time must be finite, got {time}")));
        }
        let expect = 2 * half_width as usize + 1;
        if values.len() != expect {
            return Err(Error::Domain(format!(
                "window [-{half_width}, {half_width}] needs {expect} values, got {}",
                values.len()
            )));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "value at site {} is not finite",
                j as i64 - half_width
            )));
        }
        Ok(Self {
            time,
            half_width,
            values,
        })
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    /// Values in site order, `-L` first.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at site `i`, or `None` outside the window.
    pub fn value(&self, i: i64) -> Option<f64> {
        if i.abs() <= self.half_width {
            Some(self.values[(i + self.half_width) as usize])
        } else {
            None
        }
    }

    /// `(site, value)` pairs in ascending site order.
    pub fn sites(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let l = self.half_width;
        self.values
            .iter()
            .enumerate()
            .map(move |(j, &v)| (j as i64 - l, v))
    }
}

struct Scratch {
    k1: Vec<f64>,
    k2: Vec<f64>,
    k3: Vec<f64>,
    k4: Vec<f64>,
    stage: Vec<f64>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            k1: vec![0.0; n],
            k2: vec![0.0; n],
            k3: vec![0.0; n],
            k4: vec![0.0; n],
            stage: vec![0.0; n],
        }
    }
}

fn rhs(template: &Template, x: &[f64], out: &mut [f64]) {
    let (alpha, a, beta) = (template.alpha(), template.a(), template.beta());
    let n = x.len();
    for i in 0..n {
        let left = if i == 0 { 0.0 } else { output_f(x[i - 1]) };
        let right = if i + 1 == n { 0.0 } else { output_f(x[i + 1]) };
        // grouping the neighbor terms keeps a site-reflected run bitwise
        // equal to the reflection of this one
        out[i] = (a * output_f(x[i]) - x[i]) + (alpha * left + beta * right);
    }
}

// indexed stage loops mirror the Butcher tableau more directly than zips
#[allow(clippy::needless_range_loop)]
fn rk4_in_place(template: &Template, dt: f64, x: &mut [f64], s: &mut Scratch) {
    let n = x.len();
    rhs(template, x, &mut s.k1);
    for i in 0..n {
        s.stage[i] = x[i] + 0.5 * dt * s.k1[i];
    }
    rhs(template, &s.stage, &mut s.k2);
    for i in 0..n {
        s.stage[i] = x[i] + 0.5 * dt * s.k2[i];
    }
    rhs(template, &s.stage, &mut s.k3);
    for i in 0..n {
        s.stage[i] = x[i] + dt * s.k3[i];
    }
    rhs(template, &s.stage, &mut s.k4);
    let w = dt / 6.0;
    for i in 0..n {
        x[i] += w * ((s.k1[i] + 2.0 * s.k2[i]) + (2.0 * s.k3[i] + s.k4[i]));
    }
}

fn check_finite(x: &[f64], half_width: i64, time: f64) -> Result<()> {
    if let Some(j) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::Blowup {
            time,
            site: j as i64 - half_width,
        });
    }
    Ok(())
}

/// One RK4 step of `state` under `config`; time advances by exactly `dt`.
pub fn step(state: &LatticeState, config: &SimConfig) -> Result<LatticeState> {
    if state.half_width() != config.half_width() {
        return Err(Error::Domain(format!(
            "state half-width {} does not match configured window {}",
            state.half_width(),
            config.half_width()
        )));
    }
    let mut values = state.values().to_vec();
    let mut scratch = Scratch::new(values.len());
    rk4_in_place(&config.template(), config.dt(), &mut values, &mut scratch);
    let time = state.time() + config.dt();
    check_finite(&values, config.half_width(), time)?;
    LatticeState::new(time, config.half_width(), values)
}

/// The configured plateau: `init_level` on `|i| <= w0`, zero elsewhere, at
/// time zero.
pub fn initial_state(config: &SimConfig) -> LatticeState {
    let l = config.half_width();
    let values: Vec<f64> = (-l..=l)
        .map(|i| {
            if i.abs() <= config.init_half_width() {
                config.init_level()
            } else {
                0.0
            }
        })
        .collect();
    LatticeState::new(0.0, l, values).expect("plateau data is finite by construction")
}

/// Runs the configured simulation from the plateau initial condition.
///
/// Returns snapshots at step 0, every `snapshot_stride` steps, and the final
/// step; snapshot times are `step_index * dt` exactly (no accumulation
/// drift).
pub fn simulate(config: &SimConfig) -> Result<Vec<LatticeState>> {
    simulate_from(&initial_state(config), config)
}

/// Runs from an arbitrary initial state on the configured window.
///
/// Snapshot times are `initial.time() + step_index * dt`. The caller owns
/// the quality of the data; the propagation-bound window guard is sized for
/// the plateau, so data already near the boundary will interact with it.
pub fn simulate_from(initial: &LatticeState, config: &SimConfig) -> Result<Vec<LatticeState>> {
    if initial.half_width() != config.half_width() {
        return Err(Error::Domain(format!(
            "initial state half-width {} does not match configured window {}",
            initial.half_width(),
            config.half_width()
        )));
    }
    let mut x = initial.values().to_vec();
    let mut scratch = Scratch::new(x.len());
    let t0 = initial.time();
    let stride = config.snapshot_stride();
    let n_steps = config.n_steps();

    let mut snapshots = Vec::with_capacity(n_steps / stride + 2);
    snapshots.push(initial.clone());
    for k in 1..=n_steps {
        rk4_in_place(&config.template(), config.dt(), &mut x, &mut scratch);
        let time = t0 + k as f64 * config.dt();
        check_finite(&x, config.half_width(), time)?;
        if k % stride == 0 || k == n_steps {
            snapshots.push(LatticeState::new(time, config.half_width(), x.clone())?);
        }
    }
    Ok(snapshots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpl(alpha: f64, a: f64, beta: f64) -> Template {
        Template::new(alpha, a, beta).unwrap()
    }

    #[test]
    fn output_f_saturates() {
        assert_eq!(output_f(0.0), 0.0);
        assert_eq!(output_f(0.5), 0.5);
        assert_eq!(output_f(3.0), 1.0);
        assert_eq!(output_f(-3.0), -1.0);
        // slope 1 at the origin
        let h = 1e-6;
        assert_eq!((output_f(h) - output_f(-h)) / (2.0 * h), 1.0);
    }

    #[test]
    fn output_f_matches_the_absolute_value_form() {
        // f(u) = ((u+1).abs() - (u-1).abs()) / 2; sixteenths keep both
        // expressions exact, so equality is bitwise
        for k in -48..=48 {
            let u = k as f64 / 16.0;
            assert_eq!(output_f(u), ((u + 1.0).abs() - (u - 1.0).abs()) / 2.0);
        }
    }

    #[test]
    fn builder_defaults() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5)).build().unwrap();
        assert_eq!(config.dt(), 0.01);
        assert_eq!(config.t_end(), 60.0);
        assert_eq!(config.init_half_width(), 5);
        assert_eq!(config.init_level(), 2.0);
        assert_eq!(config.snapshot_stride(), 100);
        // w0 + ceil((K+2) t_end) + 1 with K = 2
        assert_eq!(config.half_width(), 5 + 240 + 1);
        assert_eq!(config.n_steps(), 6000);
    }

    #[test]
    fn builder_rejects_bad_parameters() {
        let t = tpl(0.5, 1.0, 0.5);
        assert!(SimConfig::builder(t).dt(0.0).build().is_err());
        assert!(SimConfig::builder(t).dt(0.2).build().is_err());
        assert!(SimConfig::builder(t).t_end(0.0).build().is_err());
        assert!(SimConfig::builder(t).init_half_width(-1).build().is_err());
        assert!(SimConfig::builder(t).init_level(0.0).build().is_err());
        assert!(SimConfig::builder(t).init_level(2.1).build().is_err());
        assert!(SimConfig::builder(t).snapshot_stride(0).build().is_err());
        // window below the propagation bound
        assert!(SimConfig::builder(t).half_width(200).build().is_err());
        assert!(SimConfig::builder(t).half_width(246).build().is_ok());
    }

    #[test]
    fn builder_enforces_the_memory_cap() {
        // ~2.4e5 sites x ~1.2e6 snapshots
        let err = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(1e3)
            .dt(0.001)
            .snapshot_stride(1)
            .build();
        assert!(matches!(err, Err(Error::Config(_))));
    }

    #[test]
    fn lattice_state_validates_shape_and_values() {
        assert!(LatticeState::new(0.0, 2, vec![0.0; 5]).is_ok());
        assert!(LatticeState::new(0.0, 2, vec![0.0; 4]).is_err());
        assert!(LatticeState::new(0.0, -1, vec![]).is_err());
        assert!(LatticeState::new(f64::NAN, 0, vec![0.0]).is_err());
        assert!(LatticeState::new(0.0, 0, vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn site_indexing_is_centered() {
        let state = LatticeState::new(0.0, 1, vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(state.value(-1), Some(1.0));
        assert_eq!(state.value(0), Some(2.0));
        assert_eq!(state.value(1), Some(3.0));
        assert_eq!(state.value(2), None);
        let collected: Vec<(i64, f64)> = state.sites().collect();
        assert_eq!(collected, vec![(-1, 1.0), (0, 2.0), (1, 3.0)]);
    }

    #[test]
    fn zero_state_is_a_fixed_point() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(1.0)
            .build()
            .unwrap();
        let n = (2 * config.half_width() + 1) as usize;
        let zero = LatticeState::new(0.0, config.half_width(), vec![0.0; n]).unwrap();
        let snaps = simulate_from(&zero, &config).unwrap();
        for snap in &snaps {
            assert!(snap.values().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn all_k_state_is_an_interior_fixed_point() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(0.01)
            .snapshot_stride(1)
            .build()
            .unwrap();
        let l = config.half_width();
        let all_k = LatticeState::new(0.0, l, vec![2.0; (2 * l + 1) as usize]).unwrap();
        let next = step(&all_k, &config).unwrap();
        // K >= 1 saturates every f, so interior sites see rhs = -K + K = 0;
        // only boundary sites (missing one neighbor) decay
        for (i, v) in next.sites() {
            if i.abs() <= l - 4 {
                assert!((v - 2.0).abs() <= 1e-10, "site {i} moved to {v}");
            }
        }
        assert!(next.value(l).unwrap() < 2.0);
    }

    #[test]
    fn small_data_step_matches_a_hand_rolled_linear_rk4() {
        // below saturation the system is exactly linear, so the step must
        // reproduce an independently coded linear RK4 up to reordering noise
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(0.01)
            .build()
            .unwrap();
        let l = config.half_width();
        let n = (2 * l + 1) as usize;
        let delta = 1e-6;
        let mut values = vec![0.0; n];
        values[l as usize] = delta;
        let state = LatticeState::new(0.0, l, values.clone()).unwrap();
        let stepped = step(&state, &config).unwrap();

        let (alpha, a, beta) = (0.5, 1.0, 0.5);
        let lin_rhs = |x: &[f64]| -> Vec<f64> {
            (0..n)
                .map(|i| {
                    let xl = if i == 0 { 0.0 } else { x[i - 1] };
                    let xr = if i + 1 == n { 0.0 } else { x[i + 1] };
                    alpha * xl + a * x[i] + beta * xr - x[i]
                })
                .collect()
        };
        let dt = config.dt();
        let k1 = lin_rhs(&values);
        let s1: Vec<f64> = (0..n).map(|i| values[i] + 0.5 * dt * k1[i]).collect();
        let k2 = lin_rhs(&s1);
        let s2: Vec<f64> = (0..n).map(|i| values[i] + 0.5 * dt * k2[i]).collect();
        let k3 = lin_rhs(&s2);
        let s3: Vec<f64> = (0..n).map(|i| values[i] + dt * k3[i]).collect();
        let k4 = lin_rhs(&s3);
        for i in 0..n {
            let expect = values[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            assert!(
                (stepped.values()[i] - expect).abs() <= 1e-18,
                "site {i}: {} vs {expect}",
                stepped.values()[i]
            );
        }
    }

    #[test]
    fn snapshot_cadence_covers_start_and_end() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(0.25)
            .snapshot_stride(10)
            .build()
            .unwrap();
        let snaps = simulate(&config).unwrap();
        let times: Vec<f64> = snaps.iter().map(|s| s.time()).collect();
        assert_eq!(times, vec![0.0, 0.1, 0.2, 0.25]);

        // stride larger than the run still yields first and last
        let sparse = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(0.25)
            .build()
            .unwrap();
        let snaps = simulate(&sparse).unwrap();
        let times: Vec<f64> = snaps.iter().map(|s| s.time()).collect();
        assert_eq!(times, vec![0.0, 0.25]);
    }

    #[test]
    fn plateau_spreads_on_both_sides() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(5.0)
            .build()
            .unwrap();
        let snaps = simulate(&config).unwrap();
        let last = snaps.last().unwrap();
        assert_eq!(last.time(), 5.0);
        assert!(last.value(0).unwrap() >= 0.95 * 2.0);
        // fronts near +-c t = 7.5, far from the window edge
        assert!(last.value(3).unwrap() > last.value(12).unwrap());
        // the exponential tail at the window edge is tiny but not zero
        assert!(last.value(config.half_width()).unwrap().abs() < 1e-4);
        // grew beyond the initial plateau
        assert!(last.value(7).unwrap() > 0.5);
    }

    #[test]
    fn invariant_region_holds_on_a_short_run() {
        let config = SimConfig::builder(tpl(0.05, 0.5, 0.5))
            .t_end(10.0)
            .build()
            .unwrap();
        for snap in simulate(&config).unwrap() {
            for (i, v) in snap.sites() {
                assert!((-1e-9..=1.05 + 1e-9).contains(&v), "site {i} at {v}");
            }
        }
    }

    #[test]
    fn reflection_duality_is_bitwise() {
        let run = |template: Template| {
            let config = SimConfig::builder(template)
                .t_end(2.0)
                .init_half_width(2)
                .build()
                .unwrap();
            simulate(&config).unwrap()
        };
        let forward = run(tpl(0.05, 0.5, 0.5));
        let mirrored = run(tpl(0.5, 0.5, 0.05));
        assert_eq!(forward.len(), mirrored.len());
        for (f, m) in forward.iter().zip(&mirrored) {
            let reversed: Vec<f64> = m.values().iter().rev().cloned().collect();
            assert_eq!(f.values(), reversed.as_slice());
        }
    }

    #[test]
    fn translation_equivariance_is_exact() {
        // influence radius is 4 sites per step; 10 steps from support 3 stays
        // inside L = 50, so the shifted run is an exact shift
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5))
            .t_end(0.1)
            .init_half_width(2)
            .half_width(50)
            .snapshot_stride(1)
            .build()
            .unwrap();
        let base = simulate(&config).unwrap();

        let l = config.half_width();
        let shifted_values: Vec<f64> = (-l..=l)
            .map(|i| if (i - 1).abs() <= 2 { 2.0 } else { 0.0 })
            .collect();
        let shifted0 = LatticeState::new(0.0, l, shifted_values).unwrap();
        let shifted = simulate_from(&shifted0, &config).unwrap();

        for (b, s) in base.iter().zip(&shifted) {
            for i in (-l + 1)..=l {
                assert_eq!(s.value(i).unwrap(), b.value(i - 1).unwrap());
            }
        }
    }

    #[test]
    fn step_rejects_mismatched_windows() {
        let config = SimConfig::builder(tpl(0.5, 1.0, 0.5)).build().unwrap();
        let state = LatticeState::new(0.0, 3, vec![0.0; 7]).unwrap();
        assert!(step(&state, &config).is_err());
        assert!(simulate_from(&state, &config).is_err());
    }
}
