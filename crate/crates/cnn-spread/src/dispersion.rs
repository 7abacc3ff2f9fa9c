//! Cloning template and the direction-resolved dispersion functions.
//!
//! Linearizing the lattice equation around zero along an exponential profile
//! `e^{-mu i}` gives the growth rate
//!
//! ```text
//! h(mu) = a - 1 + alpha e^mu + beta e^{-mu}
//! ```
//!
//! for rightward propagation (`alpha` and `beta` swap for leftward). The
//! principal eigenvalue of the time-1 solution map is `lambda(mu) = e^h(mu)`,
//! and the candidate speed function is `Phi(mu) = h(mu)/mu`. Its infimum over
//! `mu > 0` is the spreading speed; the solver lives in [`crate::speed`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coupling weights `[alpha, a, beta]` of a cell to its left neighbor,
/// itself, and its right neighbor. All weights are nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTemplate")]
pub struct Template {
    alpha: f64,
    a: f64,
    beta: f64,
}

#[derive(Deserialize)]
struct RawTemplate {
    alpha: f64,
    a: f64,
    beta: f64,
}

impl TryFrom<RawTemplate> for Template {
    type Error = Error;

    fn try_from(raw: RawTemplate) -> Result<Self> {
        Template::new(raw.alpha, raw.a, raw.beta)
    }
}

impl Template {
    /// Builds a template, rejecting negative or non-finite weights.
    pub fn new(alpha: f64, a: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("a", a), ("beta", beta)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Domain(format!(
                    "template weight {name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(Self { alpha, a, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The positive equilibrium `K = alpha + a + beta` (exact sum).
    pub fn k(&self) -> f64 {
        self.alpha + self.a + self.beta
    }

    /// Hypothesis (H): `alpha + beta > 0` and `alpha + a + beta > 1`.
    ///
    /// Monostability condition; spreading speeds exist exactly when it holds.
    pub fn satisfies_h(&self) -> bool {
        self.alpha + self.beta > 0.0 && self.k() > 1.0
    }

    /// The template with `alpha` and `beta` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            a: self.a,
            beta: self.alpha,
        }
    }

    /// Error value for reporting (H) violations.
    pub(crate) fn hypothesis_error(&self) -> Error {
        Error::Hypothesis {
            alpha: self.alpha,
            a: self.a,
            beta: self.beta,
        }
    }
}

/// Propagation direction. Every leftward quantity equals the rightward one
/// of the swapped template, so solvers only ever work on `mu > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn opposite(&self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Direction::Rightward => write!(f, "rightward"),
            Direction::Leftward => write!(f, "leftward"),
        }
    }
}

/// Direction-resolved dispersion curve of a template.
///
/// Immutable; all evaluations are pure (no caching), so values are safe to
/// share across concurrent workers.
#[derive(Debug, Clone, Copy)]
pub struct DispersionCurve {
    template: Template,
    direction: Direction,
    // resolved coefficients: leftward swaps alpha and beta
    alpha_eff: f64,
    beta_eff: f64,
}

/// Multiplies a weight by an exponential, treating weight zero as an exact
/// zero so that `0 * exp(huge)` never produces NaN.
#[inline]
fn weighted(w: f64, e: f64) -> f64 {
    if w == 0.0 {
        0.0
    } else {
        w * e
    }
}

impl DispersionCurve {
    pub fn new(template: Template, direction: Direction) -> Self {
        let (alpha_eff, beta_eff) = match direction {
            Direction::Rightward => (template.alpha(), template.beta()),
            Direction::Leftward => (template.beta(), template.alpha()),
        };
        Self {
            template,
            direction,
            alpha_eff,
            beta_eff,
        }
    }

    pub fn template(&self) -> Template {
        self.template
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Resolved coefficient of `e^mu` (the `alpha` of the swapped view).
    pub fn alpha_eff(&self) -> f64 {
        self.alpha_eff
    }

    /// Resolved coefficient of `e^{-mu}`.
    pub fn beta_eff(&self) -> f64 {
        self.beta_eff
    }

    fn check_mu(mu: f64) -> Result<()> {
        if mu.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!("mu must be finite, got {mu}")))
        }
    }

    fn finite(value: f64, what: &'static str, mu: f64) -> Result<f64> {
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Overflow { what, mu })
        }
    }

    /// `h(mu) = a - 1 + alpha_eff e^mu + beta_eff e^{-mu}`.
    ///
    /// Defined for all real `mu`; overflow is reported as an error, never as
    /// a silent infinity.
    pub fn h(&self, mu: f64) -> Result<f64> {
        Self::check_mu(mu)?;
        let value = self.template.a() - 1.0
            + weighted(self.alpha_eff, mu.exp())
            + weighted(self.beta_eff, (-mu).exp());
        Self::finite(value, "h", mu)
    }

    /// `Psi(mu) = h'(mu) = alpha_eff e^mu - beta_eff e^{-mu}`.
    ///
    /// Strictly increasing whenever `alpha + beta > 0`. Evaluated on all of
    /// the real line: the positivity argument for `c*_+ + c*_-` needs values
    /// at negative `mu` even though the minimization itself stays on
    /// `mu > 0`.
    pub fn psi(&self, mu: f64) -> Result<f64> {
        Self::check_mu(mu)?;
        let value = weighted(self.alpha_eff, mu.exp()) - weighted(self.beta_eff, (-mu).exp());
        Self::finite(value, "psi", mu)
    }

    /// `Phi(mu) = h(mu)/mu`, the candidate speed at decay rate `mu > 0`.
    ///
    /// Computed through `h` directly; exponentiating to `lambda` and taking
    /// logs would overflow near `mu > 700` for no benefit.
    pub fn phi(&self, mu: f64) -> Result<f64> {
        if !(mu > 0.0) {
            return Err(Error::Domain(format!("phi requires mu > 0, got {mu}")));
        }
        Ok(self.h(mu)? / mu)
    }

    /// `g(mu) = mu h'(mu) - h(mu)`; `g(mu*) = 0` characterizes an interior
    /// minimizer of `Phi`. Nondecreasing on `mu >= 0` since
    /// `g'(mu) = mu h''(mu) >= 0`.
    pub fn g(&self, mu: f64) -> Result<f64> {
        let value = mu * self.psi(mu)? - self.h(mu)?;
        Self::finite(value, "g", mu)
    }

    /// Principal eigenvalue `lambda(mu) = e^{h(mu)}`. Diagnostic only; all
    /// internal work uses `h` to stay in range.
    pub fn lambda(&self, mu: f64) -> Result<f64> {
        let value = self.h(mu)?.exp();
        Self::finite(value, "lambda", mu)
    }

    /// The curve observed from a frame moving at speed `c0`: `h - c0 mu`.
    pub fn shifted(&self, c0: f64) -> ShiftedCurve {
        ShiftedCurve { base: *self, c0 }
    }
}

/// Dispersion curve shifted by a frame speed `c0`.
///
/// Its growth rate is `h(mu) - c0 mu`, so its speed function is
/// `Phi(mu) - c0` and its speed is the original speed minus `c0`. Used to
/// reduce finite-limit cases to the normalized one; note that `g` is
/// invariant under the shift.
#[derive(Debug, Clone, Copy)]
pub struct ShiftedCurve {
    base: DispersionCurve,
    c0: f64,
}

impl ShiftedCurve {
    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn h(&self, mu: f64) -> Result<f64> {
        Ok(self.base.h(mu)? - self.c0 * mu)
    }

    pub fn psi(&self, mu: f64) -> Result<f64> {
        Ok(self.base.psi(mu)? - self.c0)
    }

    pub fn phi(&self, mu: f64) -> Result<f64> {
        Ok(self.base.phi(mu)? - self.c0)
    }

    /// `mu (psi - c0) - (h - c0 mu) = mu psi - h`: the shift cancels.
    pub fn g(&self, mu: f64) -> Result<f64> {
        self.base.g(mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(alpha: f64, a: f64, beta: f64, direction: Direction) -> DispersionCurve {
        DispersionCurve::new(Template::new(alpha, a, beta).unwrap(), direction)
    }

    #[test]
    fn rejects_negative_weights() {
        assert!(Template::new(-0.1, 1.0, 0.5).is_err());
        assert!(Template::new(0.1, -1.0, 0.5).is_err());
        assert!(Template::new(0.1, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn k_is_exact_sum() {
        let t = Template::new(0.5, 1.0, 0.5).unwrap();
        assert_eq!(t.k(), 2.0);
    }

    #[test]
    fn hypothesis_flag() {
        assert!(Template::new(0.5, 1.0, 0.5).unwrap().satisfies_h());
        // sum below one
        assert!(!Template::new(0.3, 0.3, 0.3).unwrap().satisfies_h());
        // no neighbor coupling at all
        assert!(!Template::new(0.0, 2.0, 0.0).unwrap().satisfies_h());
    }

    #[test]
    fn h_at_zero_is_k_minus_one() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        assert_eq!(c.h(0.0).unwrap(), 1.0);
        let c = curve(0.05, 0.5, 0.5, Direction::Rightward);
        assert!((c.h(0.0).unwrap() - 0.05).abs() < 1e-15);
    }

    #[test]
    fn h_matches_cosh_for_symmetric_unit_template() {
        // alpha = beta = 1/2, a = 1: h(mu) = cosh(mu)
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        let expected = 1.5430806348152437; // cosh(1)
        assert!((c.h(1.0).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn psi_at_zero_is_alpha_minus_beta() {
        let c = curve(0.7, 0.2, 0.1, Direction::Rightward);
        assert!((c.psi(0.0).unwrap() - 0.6).abs() < 1e-15);
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        assert_eq!(c.psi(0.0).unwrap(), 0.0);
    }

    #[test]
    fn psi_value_cross_checked() {
        let c = curve(0.05, 0.5, 0.5, Direction::Rightward);
        // 0.05 e - 0.5 / e, independent high-precision value
        assert!((c.psi(1.0).unwrap() - (-0.048025629162768899)).abs() < 1e-15);
    }

    #[test]
    fn phi_rejects_nonpositive_mu() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        assert!(matches!(c.phi(0.0), Err(Error::Domain(_))));
        assert!(matches!(c.phi(-1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_near_minimizer_matches_oracle() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        // minimum of cosh(mu)/mu sits at mu* with mu* tanh(mu*) = 1
        let v = c.phi(1.1997).unwrap();
        assert!((v - 1.5089).abs() < 1e-4, "phi(1.1997) = {v}");
    }

    #[test]
    fn phi_tends_to_zero_from_above_when_alpha_absent() {
        let c = curve(0.0, 1.0, 0.5, Direction::Rightward);
        let mut prev = f64::INFINITY;
        for mu in [5.0, 20.0, 100.0, 500.0] {
            let v = c.phi(mu).unwrap();
            assert!(v > 0.0 && v < prev, "phi({mu}) = {v} not decreasing to 0");
            prev = v;
        }
        assert!(prev < 1e-2);
    }

    #[test]
    fn g_at_zero_is_one_minus_k() {
        let c = curve(0.05, 0.5, 0.5, Direction::Rightward);
        assert!((c.g(0.0).unwrap() - (1.0 - 1.05)).abs() < 1e-15);
    }

    #[test]
    fn g_vanishes_at_symmetric_minimizer() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        // root of mu tanh(mu) = 1, from a high-precision bisection oracle
        let mu_star = 1.1996786402577338;
        assert!(c.g(mu_star).unwrap().abs() < 1e-14);
    }

    #[test]
    fn leftward_equals_swapped_rightward() {
        let left = curve(0.05, 0.5, 0.5, Direction::Leftward);
        let right_swapped = curve(0.5, 0.5, 0.05, Direction::Rightward);
        for mu in [-2.0, -0.5, 0.0, 0.3, 1.0, 4.0] {
            assert_eq!(left.h(mu).unwrap(), right_swapped.h(mu).unwrap());
            assert_eq!(left.psi(mu).unwrap(), right_swapped.psi(mu).unwrap());
        }
    }

    #[test]
    fn symmetric_template_is_direction_blind() {
        let r = curve(0.5, 1.0, 0.5, Direction::Rightward);
        let l = curve(0.5, 1.0, 0.5, Direction::Leftward);
        for mu in [0.1, 0.7, 1.3, 2.9] {
            assert_eq!(r.phi(mu).unwrap(), l.phi(mu).unwrap());
        }
    }

    #[test]
    fn overflow_is_an_error_not_infinity() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        assert!(matches!(c.h(800.0), Err(Error::Overflow { .. })));
        assert!(matches!(c.psi(-800.0), Err(Error::Overflow { .. })));
        // lambda overflows much earlier: e^h(10) is already e^11013
        assert!(matches!(c.lambda(10.0), Err(Error::Overflow { .. })));
    }

    #[test]
    fn zero_weight_suppresses_overflow() {
        // alpha = 0 kills the e^mu term entirely, so huge mu stays finite
        let c = curve(0.0, 1.0, 0.5, Direction::Rightward);
        let v = c.h(800.0).unwrap();
        assert!((v - 0.0).abs() < 1e-300);
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        let s = c.shifted(0.0);
        for mu in [0.2, 1.0, 3.7] {
            assert_eq!(c.h(mu).unwrap(), s.h(mu).unwrap());
            assert_eq!(c.phi(mu).unwrap(), s.phi(mu).unwrap());
        }
    }

    #[test]
    fn shifted_phi_drops_by_c0() {
        let c = curve(0.5, 1.0, 0.5, Direction::Rightward);
        let s = c.shifted(0.75);
        for mu in [0.2, 1.0, 3.7] {
            let want = c.phi(mu).unwrap() - 0.75;
            assert!((s.phi(mu).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn shift_leaves_g_invariant() {
        let c = curve(0.3, 0.9, 0.6, Direction::Rightward);
        let s = c.shifted(-1.8);
        for mu in [0.0, 0.4, 2.2] {
            assert_eq!(c.g(mu).unwrap(), s.g(mu).unwrap());
        }
    }
}
