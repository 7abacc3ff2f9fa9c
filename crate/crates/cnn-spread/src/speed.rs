//! Spreading-speed solver and sign classification.
//!
//! The rightward speed is `c*_+ = inf_{mu>0} Phi(mu)`; leftward mirrors it
//! on the swapped template. Under hypothesis (H) the infimum is either
//! attained at the unique interior root of `g(mu) = mu h'(mu) - h(mu)` or
//! approached at `mu -> +infinity` (only possible when the `e^mu`
//! coefficient vanishes, where the limit of `Phi` is zero).

use crate::dispersion::{Direction, DispersionCurve, Template};
use crate::error::{Error, Result};

/// Default root tolerance on `|g|`; gives at least eight correct digits in
/// the speed, far beyond the two decimals any of the reference tables need.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Reported speeds with `|c*| <= ZERO_BAND` count as zero.
pub const ZERO_BAND: f64 = 1e-9;

/// Closed-form discriminant values within this band classify as zero sign;
/// covers rounding of `2 sqrt(alpha beta) + a - 1` for exact-rational
/// threshold inputs.
const DISCRIMINANT_BAND: f64 = 1e-12;

/// Where the infimum of `Phi` lives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MinimizerKind {
    /// Attained at the interior point `mu_star`, the unique root of `g`.
    Interior { mu_star: f64 },
    /// Approached as `mu -> +infinity`.
    AtInfinity,
}

/// Minimizer of `Phi` together with the attained (or limiting) value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimizer {
    pub kind: MinimizerKind,
    pub phi_value: f64,
}

impl Minimizer {
    /// The interior minimizer location, if there is one.
    pub fn mu_star(&self) -> Option<f64> {
        match self.kind {
            MinimizerKind::Interior { mu_star } => Some(mu_star),
            MinimizerKind::AtInfinity => None,
        }
    }
}

/// Sign of a spreading speed, with a `+-1e-9` band treated as zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Positive,
    Zero,
    Negative,
}

impl std::fmt::Display for SignClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignClass::Positive => write!(f, "positive"),
            SignClass::Zero => write!(f, "zero"),
            SignClass::Negative => write!(f, "negative"),
        }
    }
}

/// Numeric sign of a solved speed under the zero band.
pub fn numeric_sign(speed: f64) -> SignClass {
    if speed.abs() <= ZERO_BAND {
        SignClass::Zero
    } else if speed > 0.0 {
        SignClass::Positive
    } else {
        SignClass::Negative
    }
}

/// Solved speed, minimizer, and sign class for one direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionalSpeed {
    pub speed: f64,
    pub minimizer: Minimizer,
    pub sign: SignClass,
}

/// Both directions of a template, when hypothesis (H) holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedPair {
    pub plus: DirectionalSpeed,
    pub minus: DirectionalSpeed,
}

/// Full analysis of a template. `speeds` is `Some` exactly when `h_flag`
/// is true; without (H) no spreading-speed theory applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedReport {
    pub template: Template,
    pub h_flag: bool,
    pub speeds: Option<SpeedPair>,
}

impl SpeedReport {
    pub fn c_plus(&self) -> Option<f64> {
        self.speeds.map(|s| s.plus.speed)
    }

    pub fn c_minus(&self) -> Option<f64> {
        self.speeds.map(|s| s.minus.speed)
    }
}

/// Finds the unique root of `g` on `(0, infinity)` by bracket expansion and
/// bisection.
///
/// `g` is nondecreasing with `g(0) = 1 - K < 0` under (H), so the bracket
/// `[lo, hi]` with `g(lo) <= 0 < g(hi)` pins the root; bisection keeps the
/// invariant and is immune to the near-flat conditioning that appears when
/// the minimizer approaches zero (there the interval-width stop takes over
/// from the `|g|` stop). A flat zero plateau of `g` would need
/// `alpha_eff = beta_eff = 0`, which (H) excludes.
fn root_of_g(curve: &DispersionCurve, tol: f64) -> Result<f64> {
    let mut lo = 1e-6_f64;
    // K barely above 1 puts the root below the default lo; back off until
    // the bracket is genuine
    while curve.g(lo)? > 0.0 {
        lo /= 16.0;
        if lo < 1e-300 {
            return Err(Error::Inconsistency(
                "g has no sign change on (0, 1e-6]".into(),
            ));
        }
    }
    let mut hi = 1.0_f64.max(lo * 2.0);
    let mut guard = 0;
    while curve.g(hi)? <= 0.0 {
        hi *= 2.0;
        guard += 1;
        if guard > 60 {
            return Err(Error::Inconsistency(
                "no upper bracket for g within doubling range".into(),
            ));
        }
    }
    for _ in 0..500 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-13 * (1.0 + mid) {
            break;
        }
        let gm = curve.g(mid)?;
        if gm.abs() <= tol && hi - lo <= 1e-12 * (1.0 + mid) {
            return Ok(mid);
        }
        if gm > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Computes the directional spreading speed `inf_{mu>0} Phi(mu)`.
///
/// Returns the speed and its minimizer. With `alpha_eff > 0` the infimum is
/// interior (`Phi` blows up at both ends); with `alpha_eff = 0` the limit of
/// `Phi` at infinity is zero, attained or undercut according to whether the
/// saturated equilibrium is stable there: `a >= 1` pins the speed to zero at
/// infinity, `a < 1` yields a negative interior minimum.
///
/// Errors when (H) fails or `tol <= 0`.
pub fn solve_speed(curve: &DispersionCurve, tol: f64) -> Result<(f64, Minimizer)> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    let template = curve.template();
    if !template.satisfies_h() {
        return Err(template.hypothesis_error());
    }

    if curve.alpha_eff() == 0.0 {
        // lambda(+inf) = e^{a-1}: >= 1 exactly when a >= 1, and then the
        // infimum 0 of Phi is only approached at infinity
        if template.a() >= 1.0 {
            return Ok((
                0.0,
                Minimizer {
                    kind: MinimizerKind::AtInfinity,
                    phi_value: 0.0,
                },
            ));
        }
        // a < 1: g(+inf) = 1 - a > 0, so the root of g is interior and the
        // speed is negative
    }

    let mu_star = root_of_g(curve, tol)?;
    let speed = curve.phi(mu_star)?;
    let psi = curve.psi(mu_star)?;
    if (speed - psi).abs() > 1e-8 * (1.0 + speed.abs()) {
        return Err(Error::Inconsistency(format!(
            "Phi(mu*) = {speed} and Psi(mu*) = {psi} disagree at mu* = {mu_star}"
        )));
    }
    Ok((
        speed,
        Minimizer {
            kind: MinimizerKind::Interior { mu_star },
            phi_value: speed,
        },
    ))
}

/// Classifies the sign of the directional speed in closed form, without
/// numeric minimization.
///
/// With both effective weights positive, the infimum of `h` over `mu > 0`
/// is `h0 = 2 sqrt(alpha_eff beta_eff) + a - 1` when the real-line minimum
/// at `mu0 = ln(beta_eff/alpha_eff)/2` lies right of zero, and the sign of
/// `c*` is the sign of `h0`; when `mu0 <= 0` (that is,
/// `alpha_eff >= beta_eff`), `h` is increasing on `mu > 0` from
/// `h(0) = K - 1 > 0`, forcing a positive speed. The degenerate weights
/// follow the boundary cases of the sign tables.
pub fn classify_sign(template: &Template, direction: Direction) -> Result<SignClass> {
    if !template.satisfies_h() {
        return Err(template.hypothesis_error());
    }
    let curve = DispersionCurve::new(*template, direction);
    let (ae, be) = (curve.alpha_eff(), curve.beta_eff());
    if ae == 0.0 {
        return Ok(if template.a() >= 1.0 {
            SignClass::Zero
        } else {
            SignClass::Negative
        });
    }
    if be == 0.0 || ae >= be {
        return Ok(SignClass::Positive);
    }
    let discriminant = 2.0 * (ae * be).sqrt() + template.a() - 1.0;
    Ok(if discriminant.abs() <= DISCRIMINANT_BAND {
        SignClass::Zero
    } else if discriminant > 0.0 {
        SignClass::Positive
    } else {
        SignClass::Negative
    })
}

fn solve_direction(
    template: &Template,
    direction: Direction,
    tol: f64,
) -> Result<DirectionalSpeed> {
    let curve = DispersionCurve::new(*template, direction);
    let (speed, minimizer) = solve_speed(&curve, tol)?;
    let sign = classify_sign(template, direction)?;
    // the closed form and the solved value must not oppose each other
    // beyond the zero band; tiny speeds are compatible with either strict
    // class because near-threshold templates genuinely produce them
    let clash = match sign {
        SignClass::Positive => speed < -ZERO_BAND,
        SignClass::Negative => speed > ZERO_BAND,
        SignClass::Zero => speed.abs() > ZERO_BAND,
    };
    if clash {
        return Err(Error::Inconsistency(format!(
            "closed-form sign {sign} contradicts solved speed {speed} ({direction})"
        )));
    }
    Ok(DirectionalSpeed {
        speed,
        minimizer,
        sign,
    })
}

/// Solves and classifies both directions.
///
/// Never fails on an (H) violation: the report carries `h_flag = false` and
/// no speeds instead. Solver errors and closed-form/numeric sign clashes
/// propagate.
pub fn analyze(template: &Template, tol: f64) -> Result<SpeedReport> {
    if !template.satisfies_h() {
        return Ok(SpeedReport {
            template: *template,
            h_flag: false,
            speeds: None,
        });
    }
    let plus = solve_direction(template, Direction::Rightward, tol)?;
    let minus = solve_direction(template, Direction::Leftward, tol)?;
    Ok(SpeedReport {
        template: *template,
        h_flag: true,
        speeds: Some(SpeedPair { plus, minus }),
    })
}
