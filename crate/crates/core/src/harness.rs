//! Sweeps of the pedal point over loci, identity suites and the contrapedal
//! crossing check. Reports are plain serializable data.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::area::{
    closed_form_area, contrapedal_area, converged_area, interpolated_area, pedal_area,
    rotated_pedal_area, support_areas, AreaFamily, DEFAULT_REFINEMENT_TOL,
};
use crate::error::{GeometryError, Result};
use crate::kernel::{sample_curve, Ellipse, ParamGrid, Point2, SupportCurve};
use crate::pedal::{
    evolutoid_point, evolutoid_support, foot_point, general_feet, hybrid_point,
    negative_pedal_point, pseudo_talbot_point, self_intersections_refined, support_foot, FootKind,
    ON_ELLIPSE_TOL,
};
use crate::scalar::Scalar;

/// Where the pedal point travels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar", tag = "kind")]
pub enum LocusKind<F> {
    ConcentricCircle { r: F },
    EllipseBoundary,
    FixedList { points: Vec<Point2<F>> },
}

/// A locus sampled uniformly in angle starting at `phase`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct LocusSpec<F> {
    pub kind: LocusKind<F>,
    pub count: usize,
    pub phase: F,
}

impl<F: Scalar> LocusSpec<F> {
    pub const MIN_COUNT: usize = 4;

    pub fn concentric_circle(r: F, count: usize, phase: F) -> Result<Self> {
        if !(r > F::zero()) {
            return Err(GeometryError::DomainError(format!(
                "locus radius must be positive, got {r}"
            )));
        }
        Self::checked(LocusKind::ConcentricCircle { r }, count, phase)
    }

    pub fn ellipse_boundary(count: usize, phase: F) -> Result<Self> {
        Self::checked(LocusKind::EllipseBoundary, count, phase)
    }

    pub fn fixed(points: Vec<Point2<F>>) -> Result<Self> {
        let count = points.len();
        Self::checked(LocusKind::FixedList { points }, count, F::zero())
    }

    fn checked(kind: LocusKind<F>, count: usize, phase: F) -> Result<Self> {
        if count < Self::MIN_COUNT {
            return Err(GeometryError::DomainError(format!(
                "locus needs at least {} points, got {count}",
                Self::MIN_COUNT
            )));
        }
        Ok(Self { kind, count, phase })
    }

    /// Pedal points in locus order, each with its ellipse parameter when it lies on `e`.
    pub fn points(&self, e: &Ellipse<F>) -> Vec<(Point2<F>, Option<F>)> {
        let angle = |k: usize| {
            self.phase + F::two_pi() * F::from_usize_lossy(k) / F::from_usize_lossy(self.count)
        };
        match &self.kind {
            LocusKind::ConcentricCircle { r } => (0..self.count)
                .map(|k| (Point2::from_angle(angle(k)) * *r, None))
                .collect(),
            LocusKind::EllipseBoundary => (0..self.count)
                .map(|k| {
                    let s = angle(k);
                    (e.point(s), Some(s))
                })
                .collect(),
            LocusKind::FixedList { points } => points
                .iter()
                .map(|&m| {
                    let s = e
                        .on_boundary(m, F::lit(ON_ELLIPSE_TOL))
                        .then(|| e.param_of(m));
                    (m, s)
                })
                .collect(),
        }
    }
}

/// Boxed point evaluator of a closed curve.
pub type CurveFn<F> = Box<dyn Fn(F) -> Result<Point2<F>> + Send + Sync>;

/// Point evaluator `t ↦ point` of `fam` for pedal point `m`.
///
/// `s` is the ellipse parameter of `m` when `m` lies on the ellipse; the
/// pseudo-Talbot curve is only defined in that case.
pub fn family_evaluator<F: Scalar>(
    fam: AreaFamily<F>,
    e: Ellipse<F>,
    m: Point2<F>,
    s: Option<F>,
) -> Result<CurveFn<F>> {
    Ok(match fam {
        AreaFamily::Ellipse => Box::new(move |t| Ok(e.point(t))),
        AreaFamily::Pedal => Box::new(move |t| Ok(foot_point(FootKind::Pedal, &e, m, t))),
        AreaFamily::Contrapedal => {
            Box::new(move |t| Ok(foot_point(FootKind::Contrapedal, &e, m, t)))
        }
        AreaFamily::Rotated(theta) => {
            Box::new(move |t| Ok(foot_point(FootKind::Rotated(theta), &e, m, t)))
        }
        AreaFamily::Interpolated(mu) => {
            Box::new(move |t| Ok(foot_point(FootKind::Interpolated(mu), &e, m, t)))
        }
        AreaFamily::Evolutoid(theta) => Box::new(move |t| Ok(evolutoid_point(&e, theta, t))),
        AreaFamily::Hybrid => {
            if e.implicit(m) > F::one() + F::lit(ON_ELLIPSE_TOL) {
                return Err(GeometryError::DomainError(format!(
                    "hybrid curve needs M inside or on the ellipse, got M = {m}"
                )));
            }
            Box::new(move |t| hybrid_point(&e, m, t))
        }
        AreaFamily::PseudoTalbot => {
            let s = match s {
                Some(s) => s,
                None if e.on_boundary(m, F::lit(ON_ELLIPSE_TOL)) => e.param_of(m),
                None => {
                    return Err(GeometryError::DomainError(format!(
                        "pseudo-talbot curve needs M on the ellipse, got M = {m}"
                    )))
                }
            };
            Box::new(move |t| Ok(pseudo_talbot_point(&e, s, t)))
        }
        AreaFamily::NegativePedal => Box::new(move |t| negative_pedal_point(&e, m, t)),
    })
}

/// Curve grid for one pedal point: families singular at `t = s` get a
/// half-step offset grid anchored at `s`.
pub fn grid_for<F: Scalar>(fam: AreaFamily<F>, s: Option<F>, grid: &ParamGrid<F>) -> Result<ParamGrid<F>> {
    match s {
        Some(s) if fam.singular_at_m_param() => ParamGrid::staggered(s, grid.count()),
        _ => Ok(*grid),
    }
}

/// Refinement-checked quadrature area of `fam` at pedal point `m`.
pub fn family_area<F: Scalar>(
    fam: AreaFamily<F>,
    e: &Ellipse<F>,
    m: Point2<F>,
    s: Option<F>,
    grid: &ParamGrid<F>,
) -> Result<F> {
    let f = family_evaluator(fam, *e, m, s)?;
    let g = grid_for(fam, s, grid)?;
    Ok(converged_area(f, &g, F::lit(DEFAULT_REFINEMENT_TOL))?.value)
}

/// One pedal point of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct ScanSample<F> {
    pub m: Point2<F>,
    pub area_quadrature: Option<F>,
    pub area_closed_form: Option<F>,
    /// Set when the sample could not be evaluated.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct InvarianceReport<F> {
    pub family: AreaFamily<F>,
    pub locus: LocusSpec<F>,
    pub a: F,
    pub b: F,
    pub grid_count: usize,
    pub samples: Vec<ScanSample<F>>,
    /// Mean quadrature area over the evaluated samples.
    pub mean: F,
    pub max_abs_dev: F,
    /// `max |area − mean| / |mean|`.
    pub max_rel_dev: F,
    /// Closed-form value when every sample has one and they agree.
    pub reference: Option<F>,
    /// `max |area − closed form| / |closed form|` over samples with a closed form.
    pub max_rel_err_closed_form: Option<F>,
    pub failed_samples: usize,
}

impl<F: Scalar> InvarianceReport<F> {
    pub fn passes(&self, threshold: F) -> bool {
        self.failed_samples == 0 && self.max_rel_dev < threshold
    }
}

fn check_admissible<F: Scalar>(fam: AreaFamily<F>, e: &Ellipse<F>, locus: &LocusSpec<F>) -> Result<()> {
    let pts = locus.points(e);
    if fam.requires_m_on_ellipse() && pts.iter().any(|(_, s)| s.is_none()) {
        return Err(GeometryError::DomainError(format!(
            "{fam} scans need every locus point on the ellipse"
        )));
    }
    if fam == AreaFamily::Hybrid
        && pts
            .iter()
            .any(|(m, _)| e.implicit(*m) > F::one() + F::lit(ON_ELLIPSE_TOL))
    {
        return Err(GeometryError::DomainError(
            "hybrid scans need every locus point inside or on the ellipse".into(),
        ));
    }
    Ok(())
}

/// Computes the area of `fam` for every pedal point on `locus`, by quadrature
/// and (where defined) in closed form, and aggregates the deviations.
///
/// Samples run in parallel; results are gathered in locus order.
pub fn scan<F: Scalar>(
    e: &Ellipse<F>,
    fam: AreaFamily<F>,
    locus: &LocusSpec<F>,
    grid: &ParamGrid<F>,
) -> Result<InvarianceReport<F>> {
    check_admissible(fam, e, locus)?;
    let samples: Vec<ScanSample<F>> = locus
        .points(e)
        .into_par_iter()
        .map(|(m, s)| {
            let closed = closed_form_area(fam, e, m).ok();
            match family_area(fam, e, m, s, grid) {
                Ok(q) => ScanSample {
                    m,
                    area_quadrature: Some(q),
                    area_closed_form: closed,
                    error: None,
                },
                Err(err) => ScanSample {
                    m,
                    area_quadrature: None,
                    area_closed_form: closed,
                    error: Some(err.to_string()),
                },
            }
        })
        .collect();
    aggregate(*e, fam, locus.clone(), grid.count(), samples)
}

fn aggregate<F: Scalar>(
    e: Ellipse<F>,
    fam: AreaFamily<F>,
    locus: LocusSpec<F>,
    grid_count: usize,
    samples: Vec<ScanSample<F>>,
) -> Result<InvarianceReport<F>> {
    let areas: Vec<F> = samples.iter().filter_map(|s| s.area_quadrature).collect();
    if areas.is_empty() {
        let first = samples
            .iter()
            .find_map(|s| s.error.clone())
            .unwrap_or_default();
        return Err(GeometryError::DomainError(format!(
            "no sample of the {fam} scan could be evaluated: {first}"
        )));
    }
    let n = F::from_usize_lossy(areas.len());
    let mean = areas.iter().fold(F::zero(), |acc, &x| acc + x) / n;
    let max_abs_dev = areas
        .iter()
        .fold(F::zero(), |acc, &x| acc.max((x - mean).abs()));
    let max_rel_dev = max_abs_dev / mean.abs();

    let closed: Vec<F> = samples.iter().filter_map(|s| s.area_closed_form).collect();
    let reference = if closed.len() == samples.len() {
        let first = closed[0];
        closed
            .iter()
            .all(|&c| (c - first).abs() <= F::lit(1e-12) * first.abs())
            .then_some(first)
    } else {
        None
    };
    let max_rel_err_closed_form = samples
        .iter()
        .filter_map(|s| Some((s.area_quadrature?, s.area_closed_form?)))
        .map(|(q, c)| (q - c).abs() / c.abs())
        .reduce(F::max);

    Ok(InvarianceReport {
        family: fam,
        locus,
        a: e.a(),
        b: e.b(),
        grid_count,
        failed_samples: samples.len() - areas.len(),
        samples,
        mean,
        max_abs_dev,
        max_rel_dev,
        reference,
        max_rel_err_closed_form,
    })
}

/// Residuals `|lhs − rhs|` of one identity over its sample set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct IdentityReport<F> {
    pub name: String,
    pub residuals: Vec<F>,
    pub max_residual: F,
}

impl<F: Scalar> IdentityReport<F> {
    pub fn new(name: impl Into<String>, residuals: Vec<F>) -> Self {
        let max_residual = residuals.iter().fold(F::zero(), |acc, &r| acc.max(r));
        Self {
            name: name.into(),
            residuals,
            max_residual,
        }
    }

    pub fn passes(&self, threshold: F) -> bool {
        self.max_residual < threshold
    }
}

fn identity<F: Scalar>(
    name: &str,
    cases: impl IntoParallelIterator<Item = impl Fn() -> Result<F> + Send>,
) -> Result<IdentityReport<F>> {
    let residuals = cases
        .into_par_iter()
        .map(|case| case().map(|r| r.abs()))
        .collect::<Result<Vec<F>>>()?;
    Ok(IdentityReport::new(name, residuals))
}

/// Area identities of the ellipse, each checked twice: from the closed forms
/// and from independent quadratures of the sampled curves.
///
/// * `A_p − A_c = A` over `ms`
/// * `A_p − A_θ = A sin²θ` over `ms × thetas`
/// * `A_μ = (1 − 2μ)[(1 − μ)A_p − μA_c] + μ(1 − μ)A` over `ms × mus`
/// * the μ = 0 and μ = 1 endpoints of the closed form
pub fn identity_suite<F: Scalar>(
    e: &Ellipse<F>,
    ms: &[Point2<F>],
    thetas: &[F],
    mus: &[F],
    grid: &ParamGrid<F>,
) -> Result<Vec<IdentityReport<F>>> {
    let base = e.area();
    let quad = |fam: AreaFamily<F>, m: Point2<F>| family_area(fam, e, m, None, grid);
    let pairs = |xs: &[F]| -> Vec<(Point2<F>, F)> {
        ms.iter()
            .flat_map(|&m| xs.iter().map(move |&x| (m, x)))
            .collect()
    };

    let mut out = Vec::new();
    out.push(identity(
        "pedal-minus-contrapedal/closed-form",
        ms.iter()
            .map(|&m| move || Ok(pedal_area(e, m) - contrapedal_area(e, m) - base))
            .collect::<Vec<_>>(),
    )?);
    out.push(identity(
        "pedal-minus-contrapedal/quadrature",
        ms.iter()
            .map(|&m| {
                move || Ok(quad(AreaFamily::Pedal, m)? - quad(AreaFamily::Contrapedal, m)? - base)
            })
            .collect::<Vec<_>>(),
    )?);

    let sin2 = |th: F| th.sin() * th.sin();
    out.push(identity(
        "pedal-minus-rotated/closed-form",
        pairs(thetas)
            .into_iter()
            .map(|(m, th)| {
                move || Ok(pedal_area(e, m) - rotated_pedal_area(e, m, th) - base * sin2(th))
            })
            .collect::<Vec<_>>(),
    )?);
    out.push(identity(
        "pedal-minus-rotated/quadrature",
        pairs(thetas)
            .into_iter()
            .map(|(m, th)| {
                move || {
                    Ok(quad(AreaFamily::Pedal, m)?
                        - quad(AreaFamily::Rotated(th), m)?
                        - base * sin2(th))
                }
            })
            .collect::<Vec<_>>(),
    )?);

    out.push(identity(
        "interpolated/closed-form-vs-quadrature",
        pairs(mus)
            .into_iter()
            .map(|(m, mu)| {
                move || {
                    let fam = AreaFamily::Interpolated(mu);
                    Ok(quad(fam, m)? - closed_form_area(fam, e, m)?)
                }
            })
            .collect::<Vec<_>>(),
    )?);
    out.push(identity(
        "interpolated/quadrature",
        pairs(mus)
            .into_iter()
            .map(|(m, mu)| {
                move || {
                    let lhs = quad(AreaFamily::Interpolated(mu), m)?;
                    let (ap, ac) = (quad(AreaFamily::Pedal, m)?, quad(AreaFamily::Contrapedal, m)?);
                    Ok(lhs - interpolated_area(mu, ap, ac, base))
                }
            })
            .collect::<Vec<_>>(),
    )?);
    out.push(identity(
        "interpolated/endpoints",
        ms.iter()
            .flat_map(|&m| {
                [
                    (F::zero(), pedal_area(e, m), m),
                    (F::one(), contrapedal_area(e, m), m),
                ]
            })
            .map(|(mu, want, m)| {
                move || Ok(closed_form_area(AreaFamily::Interpolated(mu), e, m)? - want)
            })
            .collect::<Vec<_>>(),
    )?);
    Ok(out)
}

/// Pedal and contrapedal areas of a support-function curve from the
/// integrals `½∫(h − M·u)²` and `½∫(h′ − M·u′)²`, `u = (cos t, sin t)`.
pub fn support_pedal_integrals<F: Scalar>(s: &SupportCurve<F>, m: Point2<F>, grid: &ParamGrid<F>) -> (F, F) {
    let (mut ip, mut ic) = (F::zero(), F::zero());
    for t in grid.nodes() {
        let u = Point2::from_angle(t);
        let rp = s.h(t) - m.dot(u);
        let rc = s.dh(t) - m.dot(u.perp());
        ip = ip + rp * rp;
        ic = ic + rc * rc;
    }
    let w = F::half() * grid.step();
    (ip * w, ic * w)
}

fn support_quad<F: Scalar>(
    s: &SupportCurve<F>,
    kind: FootKind<F>,
    m: Point2<F>,
    grid: &ParamGrid<F>,
) -> Result<F> {
    Ok(converged_area(|t| Ok(support_foot(kind, s, m, t)), grid, F::lit(DEFAULT_REFINEMENT_TOL))?.value)
}

/// Identities for a convex support-function curve:
///
/// * `A(P_M) − A(C_M) = A(C)` by the pedal integrals and by quadrature
/// * `A(P_M) − A(P_θM) = sin²θ A(C)` with `P_θM` the pedal of the θ-evolutoid
pub fn support_identity_suite<F: Scalar>(
    s: &SupportCurve<F>,
    ms: &[Point2<F>],
    thetas: &[F],
    grid: &ParamGrid<F>,
) -> Result<Vec<IdentityReport<F>>> {
    let base = support_areas(s)?.area;
    let pairs: Vec<(Point2<F>, F)> = ms
        .iter()
        .flat_map(|&m| thetas.iter().map(move |&th| (m, th)))
        .collect();
    Ok(vec![
        identity(
            "support/pedal-minus-contrapedal/integrals",
            ms.iter()
                .map(|&m| {
                    move || {
                        let (ap, ac) = support_pedal_integrals(s, m, grid);
                        Ok(ap - ac - base)
                    }
                })
                .collect::<Vec<_>>(),
        )?,
        identity(
            "support/pedal-minus-contrapedal/quadrature",
            ms.iter()
                .map(|&m| {
                    move || {
                        Ok(support_quad(s, FootKind::Pedal, m, grid)?
                            - support_quad(s, FootKind::Contrapedal, m, grid)?
                            - base)
                    }
                })
                .collect::<Vec<_>>(),
        )?,
        identity(
            "support/pedal-minus-rotated/quadrature",
            pairs
                .into_iter()
                .map(|(m, th)| {
                    move || {
                        let rotated = evolutoid_support(s, th);
                        Ok(support_quad(s, FootKind::Pedal, m, grid)?
                            - support_quad(&rotated, FootKind::Pedal, m, grid)?
                            - base * th.sin() * th.sin())
                    }
                })
                .collect::<Vec<_>>(),
        )?,
    ])
}

/// A regular closed curve given by position and velocity.
pub trait ParametricCurve<F>: Sync {
    fn point(&self, t: F) -> Point2<F>;
    fn velocity(&self, t: F) -> Point2<F>;
}

/// Polar curve `r(t) = 1 + ε cos 2t`; non-convex for ε > 1/5.
#[derive(Debug, Clone, Copy)]
pub struct PolarCos2<F> {
    pub eps: F,
}

impl<F: Scalar> ParametricCurve<F> for PolarCos2<F> {
    fn point(&self, t: F) -> Point2<F> {
        Point2::from_angle(t) * (F::one() + self.eps * (t + t).cos())
    }

    fn velocity(&self, t: F) -> Point2<F> {
        let r = F::one() + self.eps * (t + t).cos();
        let dr = -F::two() * self.eps * (t + t).sin();
        Point2::from_angle(t) * dr + Point2::from_angle(t).perp() * r
    }
}

/// `A_μ = (1 − 2μ)[(1 − μ)A_p − μA_c] + μ(1 − μ)A` for a general curve, every
/// area by quadrature, over `ms × mus`.
pub fn general_interpolated_identity<F: Scalar>(
    curve: &impl ParametricCurve<F>,
    ms: &[Point2<F>],
    mus: &[F],
    grid: &ParamGrid<F>,
) -> Result<IdentityReport<F>> {
    let tol = F::lit(DEFAULT_REFINEMENT_TOL);
    let base = converged_area(|t| Ok(curve.point(t)), grid, tol)?.value;
    let foot = |m: Point2<F>, mu: F| {
        move |t: F| {
            let (qp, qc) = general_feet(m, curve.point(t), curve.velocity(t));
            Ok(qp.lerp(qc, mu))
        }
    };
    let cases: Vec<(Point2<F>, F)> = ms
        .iter()
        .flat_map(|&m| mus.iter().map(move |&mu| (m, mu)))
        .collect();
    identity(
        "general/interpolated/quadrature",
        cases
            .into_iter()
            .map(|(m, mu)| {
                move || {
                    let ap = converged_area(foot(m, F::zero()), grid, tol)?.value;
                    let ac = converged_area(foot(m, F::one()), grid, tol)?.value;
                    let am = converged_area(foot(m, mu), grid, tol)?.value;
                    Ok(am - interpolated_area(mu, ap, ac, base))
                }
            })
            .collect::<Vec<_>>(),
    )
}

/// Central-difference gradient of `area(M)` at `k` with step `h`.
pub fn area_gradient<F: Scalar>(
    area: impl Fn(Point2<F>) -> Result<F>,
    k: Point2<F>,
    h: F,
) -> Result<Point2<F>> {
    let dx = Point2::new(h, F::zero());
    let dy = Point2::new(F::zero(), h);
    let two_h = h + h;
    Ok(Point2::new(
        (area(k + dx)? - area(k - dx)?) / two_h,
        (area(k + dy)? - area(k - dy)?) / two_h,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureStatus {
    Checked,
    /// `M` at the center or on an axis: the predicted crossings merge with `M`.
    DegenerateM,
}

/// Self-crossings of the contrapedal curve compared with `(x_M, 0)` and `(0, y_M)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct ConjectureReport<F> {
    pub m: Point2<F>,
    pub status: ConjectureStatus,
    /// Crossings other than those at `M`.
    pub crossings: Vec<Point2<F>>,
    pub crossings_at_m: usize,
    pub distance_x_axis: Option<F>,
    pub distance_y_axis: Option<F>,
}

impl<F: Scalar> ConjectureReport<F> {
    pub fn max_distance(&self) -> Option<F> {
        Some(self.distance_x_axis?.max(self.distance_y_axis?))
    }
}

/// Runs the self-intersection detector on the sampled contrapedal of `m`.
///
/// Crossings within `1e-7·a` of `M` (where the normals through `M` meet it)
/// are counted separately.
pub fn conjecture_check_contrapedal<F: Scalar>(
    e: &Ellipse<F>,
    m: Point2<F>,
    grid: &ParamGrid<F>,
) -> Result<ConjectureReport<F>> {
    let axis_tol = F::lit(1e-12) * e.a();
    if m.x.abs() <= axis_tol || m.y.abs() <= axis_tol {
        return Ok(ConjectureReport {
            m,
            status: ConjectureStatus::DegenerateM,
            crossings: Vec::new(),
            crossings_at_m: 0,
            distance_x_axis: None,
            distance_y_axis: None,
        });
    }
    let f = move |t: F| Ok(foot_point(FootKind::Contrapedal, e, m, t));
    let curve = sample_curve(f, grid)?;
    let found = self_intersections_refined(&curve, &f)?;
    let near_m = F::lit(1e-7) * e.a();
    let (at_m, crossings): (Vec<_>, Vec<_>) =
        found.into_iter().partition(|x| x.point.distance(m) <= near_m);
    let crossings: Vec<Point2<F>> = crossings.into_iter().map(|x| x.point).collect();
    let nearest = |target: Point2<F>| {
        crossings
            .iter()
            .map(|p| p.distance(target))
            .reduce(F::min)
    };
    Ok(ConjectureReport {
        m,
        status: ConjectureStatus::Checked,
        distance_x_axis: nearest(Point2::new(m.x, F::zero())),
        distance_y_axis: nearest(Point2::new(F::zero(), m.y)),
        crossings,
        crossings_at_m: at_m.len(),
    })
}
