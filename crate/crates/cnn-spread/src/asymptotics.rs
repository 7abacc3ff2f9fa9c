//! Continuity of speeds along template sequences and the degenerate-sum
//! limiting case.
//!
//! Two regimes are covered. For a sequence of templates converging to a
//! limit template, the directional speeds converge to the limit's speeds,
//! and the suffix-extrema envelopes sandwich every term:
//! `c(lower_n) <= c_n <= c(upper_n)`. For a parametrized family `p(s)`
//! shrinking onto the degenerate surface `alpha + a + beta = 1` as
//! `s -> 0+`, the interior minimizer `mu*(s)` collapses to zero and the
//! speeds tend to `+-(alpha - beta)` of the limit template, even though the
//! limit itself has no spreading-speed theory.

use crate::dispersion::{Direction, DispersionCurve, Template};
use crate::error::{Error, Result};
use crate::speed::{solve_speed, Minimizer, DEFAULT_TOL};

/// Finite template sequence with a declared limit.
#[derive(Debug, Clone)]
pub struct TemplateSequence {
    entries: Vec<Template>,
    limit: Template,
    declared_tol: f64,
}

/// Largest componentwise distance between two templates.
fn component_distance(x: &Template, y: &Template) -> f64 {
    (x.alpha() - y.alpha())
        .abs()
        .max((x.a() - y.a()).abs())
        .max((x.beta() - y.beta()).abs())
}

impl TemplateSequence {
    /// Builds a sequence, checking that the last entry is within
    /// `declared_tol` of the limit componentwise.
    pub fn new(entries: Vec<Template>, limit: Template, declared_tol: f64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("template sequence must be nonempty".into()));
        }
        if !(declared_tol > 0.0) {
            return Err(Error::Domain(format!(
                "declared tolerance must be positive, got {declared_tol}"
            )));
        }
        let tail_gap = component_distance(entries.last().unwrap(), &limit);
        if tail_gap > declared_tol {
            return Err(Error::Domain(format!(
                "last entry is {tail_gap} from the limit, beyond declared tolerance {declared_tol}"
            )));
        }
        Ok(Self {
            entries,
            limit,
            declared_tol,
        })
    }

    pub fn entries(&self) -> &[Template] {
        &self.entries
    }

    pub fn limit(&self) -> Template {
        self.limit
    }

    pub fn declared_tol(&self) -> f64 {
        self.declared_tol
    }
}

/// Suffix-extrema envelopes of a sequence: `upper` is componentwise
/// nonincreasing, `lower` nondecreasing, and both converge to the same
/// limit, squeezing the original entries.
#[derive(Debug, Clone)]
pub struct EnvelopePair {
    pub upper: TemplateSequence,
    pub lower: TemplateSequence,
}

/// Builds the monotone envelopes `upper_n = max_{k>=n}(limit, entry_k)` and
/// `lower_n = min_{k>=n}(limit, entry_k)`, componentwise.
pub fn envelope(sequence: &TemplateSequence) -> EnvelopePair {
    let limit = sequence.limit();
    let n = sequence.entries().len();
    let mut upper = vec![limit; n];
    let mut lower = vec![limit; n];
    let mut hi = (limit.alpha(), limit.a(), limit.beta());
    let mut lo = hi;
    for (k, entry) in sequence.entries().iter().enumerate().rev() {
        hi = (
            hi.0.max(entry.alpha()),
            hi.1.max(entry.a()),
            hi.2.max(entry.beta()),
        );
        lo = (
            lo.0.min(entry.alpha()),
            lo.1.min(entry.a()),
            lo.2.min(entry.beta()),
        );
        // extrema of valid templates are valid templates
        upper[k] = Template::new(hi.0, hi.1, hi.2).expect("suffix max of valid templates");
        lower[k] = Template::new(lo.0, lo.1, lo.2).expect("suffix min of valid templates");
    }
    let tol = sequence.declared_tol();
    EnvelopePair {
        upper: TemplateSequence::new(upper, limit, tol).expect("upper envelope inherits the tail"),
        lower: TemplateSequence::new(lower, limit, tol).expect("lower envelope inherits the tail"),
    }
}

/// One entry of a continuity verification.
#[derive(Debug, Clone, Copy)]
pub struct ContinuityRow {
    /// 1-based position in the sequence.
    pub n: usize,
    pub template: Template,
    pub c_plus: f64,
    pub c_minus: f64,
    /// `None` when the infimum is only approached at infinity.
    pub mu_star_plus: Option<f64>,
    pub mu_star_minus: Option<f64>,
    pub abs_error_plus: f64,
    pub abs_error_minus: f64,
    /// Envelope sandwich held at this entry (where the envelopes admit
    /// speeds).
    pub sandwich_ok: bool,
}

/// Outcome of [`verify_speed_continuity`].
#[derive(Debug, Clone)]
pub struct ContinuityReport {
    pub rows: Vec<ContinuityRow>,
    /// 1-based indices of entries skipped because they violate (H).
    pub skipped: Vec<usize>,
    pub limit_c_plus: f64,
    pub limit_c_minus: f64,
    pub limit_mu_star_plus: Option<f64>,
    pub limit_mu_star_minus: Option<f64>,
    /// Last verified entry within `eps` of the limit speeds, both
    /// directions.
    pub converged: bool,
    /// Sandwich held at every verified entry.
    pub sandwich_ok: bool,
}

fn solve_both(template: &Template) -> Result<((f64, Minimizer), (f64, Minimizer))> {
    let plus = solve_speed(
        &DispersionCurve::new(*template, Direction::Rightward),
        DEFAULT_TOL,
    )?;
    let minus = solve_speed(
        &DispersionCurve::new(*template, Direction::Leftward),
        DEFAULT_TOL,
    )?;
    Ok((plus, minus))
}

/// Solves every (H)-satisfying entry of the sequence, compares against the
/// limit speeds, and checks the envelope sandwich at each entry.
///
/// `converged` reports whether the last verified entry is within `eps` of
/// the limit in both directions. Entries without (H) are skipped and
/// recorded; the limit template must satisfy (H).
pub fn verify_speed_continuity(sequence: &TemplateSequence, eps: f64) -> Result<ContinuityReport> {
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    let limit = sequence.limit();
    if !limit.satisfies_h() {
        return Err(limit.hypothesis_error());
    }
    let ((limit_plus, limit_min_plus), (limit_minus, limit_min_minus)) = solve_both(&limit)?;
    let envelopes = envelope(sequence);

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let mut sandwich_all = true;
    for (idx, entry) in sequence.entries().iter().enumerate() {
        let n = idx + 1;
        if !entry.satisfies_h() {
            skipped.push(n);
            continue;
        }
        let ((c_plus, min_plus), (c_minus, min_minus)) = solve_both(entry)?;

        // solver tolerance slack; envelope equality cases solve bitwise
        // identically, so the slack only matters for strict inequalities
        let slack = 1e-9;
        let mut sandwich_ok = true;
        let upper = &envelopes.upper.entries()[idx];
        if upper.satisfies_h() {
            let ((up_plus, _), (up_minus, _)) = solve_both(upper)?;
            sandwich_ok &= c_plus <= up_plus + slack && c_minus <= up_minus + slack;
        }
        let lower = &envelopes.lower.entries()[idx];
        if lower.satisfies_h() {
            let ((lo_plus, _), (lo_minus, _)) = solve_both(lower)?;
            sandwich_ok &= lo_plus <= c_plus + slack && lo_minus <= c_minus + slack;
        }
        sandwich_all &= sandwich_ok;

        rows.push(ContinuityRow {
            n,
            template: *entry,
            c_plus,
            c_minus,
            mu_star_plus: min_plus.mu_star(),
            mu_star_minus: min_minus.mu_star(),
            abs_error_plus: (c_plus - limit_plus).abs(),
            abs_error_minus: (c_minus - limit_minus).abs(),
            sandwich_ok,
        });
    }

    let converged = rows
        .last()
        .map(|row| row.abs_error_plus <= eps && row.abs_error_minus <= eps)
        .unwrap_or(false);
    Ok(ContinuityReport {
        rows,
        skipped,
        limit_c_plus: limit_plus,
        limit_c_minus: limit_minus,
        limit_mu_star_plus: limit_min_plus.mu_star(),
        limit_mu_star_minus: limit_min_minus.mu_star(),
        converged,
        sandwich_ok: sandwich_all,
    })
}

/// Template family `s -> p(s)` on `[0, s0)` whose `s = 0` member sits on the
/// degenerate surface `alpha + a + beta = 1`.
///
/// Construction validates, by finite differences with step `1e-5` and margin
/// `1e-8`: the degenerate sum and `alpha + beta > 0` at `s = 0`, strict
/// growth of the sum in `s` at `0`, convexity of the growth rate in `mu` on
/// a sample grid, and strict convexity in `mu` at the origin. Components
/// must be nondecreasing in `s` (sampled); the family's sum is what must
/// strictly increase.
pub struct ParametrizedTemplate {
    map: Box<dyn Fn(f64) -> Template + Send + Sync>,
    s0: f64,
}

impl std::fmt::Debug for ParametrizedTemplate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParametrizedTemplate")
            .field("s0", &self.s0)
            .finish_non_exhaustive()
    }
}

const FD_STEP: f64 = 1e-5;
const FD_MARGIN: f64 = 1e-8;

impl ParametrizedTemplate {
    pub fn new(map: impl Fn(f64) -> Template + Send + Sync + 'static, s0: f64) -> Result<Self> {
        if !(s0 > 0.0 && s0.is_finite()) {
            return Err(Error::Domain(format!("s0 must be positive, got {s0}")));
        }
        let p = Self {
            map: Box::new(map),
            s0,
        };
        p.validate()?;
        Ok(p)
    }

    /// The family `s -> [alpha, a, beta + s]` over a base template with
    /// `alpha + a + beta = 1` and `alpha + beta > 0`.
    pub fn special(base: Template, s0: f64) -> Result<Self> {
        Self::new(
            move |s| {
                Template::new(base.alpha(), base.a(), base.beta() + s)
                    .expect("nonnegative shift of a valid template")
            },
            s0,
        )
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    /// The member at `s`, for `s` in `[0, s0)`.
    pub fn template_at(&self, s: f64) -> Result<Template> {
        if !(s >= 0.0 && s < self.s0) {
            return Err(Error::Domain(format!(
                "s must lie in [0, {}), got {s}",
                self.s0
            )));
        }
        Ok((self.map)(s))
    }

    /// Growth rate `H(s, mu)` of the member at `s`, direction-resolved.
    fn big_h(&self, s: f64, mu: f64, direction: Direction) -> Result<f64> {
        DispersionCurve::new(self.template_at(s)?, direction).h(mu)
    }

    fn validate(&self) -> Result<()> {
        let at_zero = self.template_at(0.0)?;
        let sum0 = at_zero.k();
        if (sum0 - 1.0).abs() > FD_MARGIN {
            return Err(Error::Config(format!(
                "limit template must satisfy alpha+a+beta = 1, got {sum0}"
            )));
        }
        if !(at_zero.alpha() + at_zero.beta() > 0.0) {
            return Err(Error::Config(
                "limit template must have alpha + beta > 0".into(),
            ));
        }
        // strict growth of the sum at s = 0 (drives the eigenvalue above 1)
        let ds = FD_STEP.min(self.s0 / 4.0);
        let sum_slope = (self.template_at(ds)?.k() - sum0) / ds;
        if sum_slope <= FD_MARGIN {
            return Err(Error::Config(format!(
                "template sum must strictly increase in s at 0, slope {sum_slope}"
            )));
        }
        // strict convexity of H in mu at the origin: second difference
        // approximates alpha + beta > 0
        let d = FD_STEP;
        let curv = (self.big_h(0.0, d, Direction::Rightward)?
            - 2.0 * self.big_h(0.0, 0.0, Direction::Rightward)?
            + self.big_h(0.0, -d, Direction::Rightward)?)
            / (d * d);
        if curv <= FD_MARGIN {
            return Err(Error::Config(format!(
                "growth rate must be strictly convex in mu at the origin, curvature {curv}"
            )));
        }
        // convexity in mu and componentwise monotonicity in s, sampled
        let samples = [0.0, self.s0 / 4.0, self.s0 / 2.0, 3.0 * self.s0 / 4.0];
        for window in samples.windows(2) {
            let (t0, t1) = (self.template_at(window[0])?, self.template_at(window[1])?);
            if t1.alpha() < t0.alpha() - 1e-12
                || t1.a() < t0.a() - 1e-12
                || t1.beta() < t0.beta() - 1e-12
            {
                return Err(Error::Config(format!(
                    "template components must be nondecreasing in s (violated between s = {} and {})",
                    window[0], window[1]
                )));
            }
        }
        for &s in &samples {
            for mu in [-0.5, 0.0, 0.5] {
                let c = (self.big_h(s, mu + d, Direction::Rightward)?
                    - 2.0 * self.big_h(s, mu, Direction::Rightward)?
                    + self.big_h(s, mu - d, Direction::Rightward)?)
                    / (d * d);
                if c < -FD_MARGIN {
                    return Err(Error::Config(format!(
                        "growth rate must be convex in mu, curvature {c} at (s, mu) = ({s}, {mu})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `G(s, mu) = mu dH/dmu - H` for the member at `s`, direction-resolved.
///
/// `G(s, mu*(s)) = 0` along the minimizer path; at `mu = 0` it reduces to
/// `1 - (alpha(s) + a(s) + beta(s))`, which vanishes at `s = 0` on the
/// degenerate surface.
pub fn eval_g_path(p: &ParametrizedTemplate, s: f64, mu: f64, direction: Direction) -> Result<f64> {
    DispersionCurve::new(p.template_at(s)?, direction).g(mu)
}

/// One solved point of a limiting-speed path.
#[derive(Debug, Clone, Copy)]
pub struct PathPoint {
    pub s: f64,
    pub speed: f64,
    pub minimizer: Minimizer,
}

/// Speeds of `p(s)` along a grid of `s` values descending toward zero.
#[derive(Debug, Clone)]
pub struct PathReport {
    pub direction: Direction,
    pub points: Vec<PathPoint>,
    /// Interior minimizers strictly decrease along the grid (toward
    /// `s = 0`).
    pub mu_star_decreasing: bool,
    /// The limiting speed `Psi(0, 0)`: `alpha - beta` of the limit template
    /// for rightward, negated for leftward.
    pub limit_speed: f64,
    /// `|speed at the smallest s - limit_speed|`.
    pub final_gap: f64,
}

/// Solves the direction-resolved speed of `p(s)` for each `s` in the grid.
///
/// The grid must be strictly decreasing, inside `(0, s0)`. Every member
/// must satisfy (H); the error names the offending `s` otherwise. The
/// report carries the monotonicity and limit diagnostics that make the
/// degenerate-surface behavior checkable on finite grids.
pub fn limiting_speed_path(
    p: &ParametrizedTemplate,
    s_values: &[f64],
    direction: Direction,
) -> Result<PathReport> {
    if s_values.is_empty() {
        return Err(Error::Domain("s grid must be nonempty".into()));
    }
    for pair in s_values.windows(2) {
        if !(pair[1] < pair[0]) {
            return Err(Error::Domain(format!(
                "s grid must be strictly decreasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if !(*s_values.last().unwrap() > 0.0) || !(s_values[0] < p.s0()) {
        return Err(Error::Domain(format!(
            "s grid must lie inside (0, {})",
            p.s0()
        )));
    }

    let mut points = Vec::with_capacity(s_values.len());
    for &s in s_values {
        let template = p.template_at(s)?;
        if !template.satisfies_h() {
            return Err(Error::Domain(format!(
                "member at s = {s} violates hypothesis (H)"
            )));
        }
        let curve = DispersionCurve::new(template, direction);
        let (speed, minimizer) = solve_speed(&curve, DEFAULT_TOL)?;
        points.push(PathPoint {
            s,
            speed,
            minimizer,
        });
    }

    let mu_star_decreasing =
        points.windows(2).all(
            |w| match (w[0].minimizer.mu_star(), w[1].minimizer.mu_star()) {
                (Some(a), Some(b)) => b < a,
                _ => false,
            },
        );
    let limit = p.template_at(0.0)?;
    let limit_speed = match direction {
        Direction::Rightward => limit.alpha() - limit.beta(),
        Direction::Leftward => limit.beta() - limit.alpha(),
    };
    let final_gap = (points.last().unwrap().speed - limit_speed).abs();
    Ok(PathReport {
        direction,
        points,
        mu_star_decreasing,
        limit_speed,
        final_gap,
    })
}
