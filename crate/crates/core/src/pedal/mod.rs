//! Point evaluators for the pedal-like curves of an ellipse (and of
//! support-function curves), plus cusp and self-intersection detectors.
//!
//! Every evaluator is a pure function of its parameter; sample them with
//! [`crate::kernel::sample_curve`].

mod cusps;
mod envelope;
mod intersect;

pub use cusps::{find_cusps, CuspFinder};
pub use envelope::{envelope_point, EnvelopeSolver, Line, LineFamily};
pub use intersect::{self_intersections, self_intersections_refined, Crossing};

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::kernel::{Ellipse, Point2, SupportCurve};
use crate::scalar::Scalar;

/// Which foot of perpendicular from `M` is traced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub enum FootKind<F> {
    /// Onto the tangent line.
    Pedal,
    /// Onto the normal line.
    Contrapedal,
    /// Onto the line through `P(t)` along the tangent rotated counter-clockwise by θ.
    Rotated(F),
    /// Affine combination `(1 − μ)·Q_p + μ·Q_c`.
    Interpolated(F),
}

/// Orthogonal projection of `m` onto the line through `p` with direction `dir`.
#[inline]
pub fn project_onto_line<F: Scalar>(m: Point2<F>, p: Point2<F>, dir: Point2<F>) -> Point2<F> {
    p + dir * ((m - p).dot(dir) / dir.norm_sq())
}

/// Foot of `kind` for the ellipse `P(t)` with respect to `m`.
pub fn foot_point<F: Scalar>(kind: FootKind<F>, e: &Ellipse<F>, m: Point2<F>, t: F) -> Point2<F> {
    match kind {
        FootKind::Pedal => pedal_foot(e, m, t),
        FootKind::Contrapedal => contrapedal_foot(e, m, t),
        FootKind::Rotated(theta) => {
            let dir = e.velocity(t).rotated(theta);
            project_onto_line(m, e.point(t), dir)
        }
        FootKind::Interpolated(mu) => pedal_foot(e, m, t).lerp(contrapedal_foot(e, m, t), mu),
    }
}

fn pedal_foot<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, t: F) -> Point2<F> {
    let (a, b) = (e.a(), e.b());
    let (s, c) = t.sin_cos();
    let den = b * b * c * c + a * a * s * s;
    let x = a * a * m.x * s * s - a * b * m.y * c * s + a * b * b * c;
    let y = b * b * m.y * c * c - a * b * m.x * c * s + a * a * b * s;
    Point2::new(x / den, y / den)
}

fn contrapedal_foot<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, t: F) -> Point2<F> {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let (s, c) = t.sin_cos();
    let den = b * b * c * c + a * a * s * s;
    let x = b * b * m.x * c * c + c * s * (a * b * m.y + a * c2 * s);
    let y = a * a * m.y * s * s + c * s * (a * b * m.x - b * c2 * c);
    Point2::new(x / den, y / den)
}

/// Tangent-line and normal-line feet from `m` for a general regular curve
/// with point `p` and velocity `v`. Their sum is always `p + m`.
pub fn general_feet<F: Scalar>(m: Point2<F>, p: Point2<F>, v: Point2<F>) -> (Point2<F>, Point2<F>) {
    let q_p = project_onto_line(m, p, v);
    (q_p, p + m - q_p)
}

/// Pedal or contrapedal of a support-function curve at normal angle `t`.
///
/// `Rotated(θ)` uses the pedal with respect to the θ-evolutoid
/// ([`evolutoid_support`]) and `Interpolated(μ)` the affine combination.
pub fn support_foot<F: Scalar>(
    kind: FootKind<F>,
    curve: &SupportCurve<F>,
    m: Point2<F>,
    t: F,
) -> Point2<F> {
    let (s, c) = t.sin_cos();
    match kind {
        FootKind::Pedal => {
            let h = curve.h(t);
            Point2::new(
                m.x * s * s + (h - m.y * s) * c,
                (h - m.x * c) * s + m.y * c * c,
            )
        }
        FootKind::Contrapedal => {
            let dh = curve.dh(t);
            Point2::new(
                m.x * c * c + m.y * c * s - dh * s,
                m.y * s * s + m.x * c * s + dh * c,
            )
        }
        FootKind::Rotated(theta) => {
            support_foot(FootKind::Pedal, &evolutoid_support(curve, theta), m, t)
        }
        FootKind::Interpolated(mu) => support_foot(FootKind::Pedal, curve, m, t)
            .lerp(support_foot(FootKind::Contrapedal, curve, m, t), mu),
    }
}

/// Lines through `P(t)` perpendicular to `P(t) − M`, with analytic derivative.
pub fn negative_pedal_family<F: Scalar>(e: Ellipse<F>, m: Point2<F>) -> LineFamily<F> {
    let tol = F::lit(1e-12) * e.a();
    LineFamily::new(
        move |t| {
            let p = e.point(t);
            let n = p - m;
            if n.norm() <= tol {
                return Err(GeometryError::DegenerateLine { t: t.as_f64() });
            }
            Ok(Line::through(p, n))
        },
        move |t| {
            let p = e.point(t);
            let v = e.velocity(t);
            // d/dt [(P − M)·P] = P′·(2P − M)
            Ok(Line::new(v, v.dot(p * F::two() - m)))
        },
    )
}

/// Point of the negative pedal curve (envelope of [`negative_pedal_family`]).
pub fn negative_pedal_point<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, t: F) -> Result<Point2<F>> {
    envelope_point(&negative_pedal_family(*e, m), t)
}

/// Relative tolerance on the implicit equation for "M on the ellipse".
pub const ON_ELLIPSE_TOL: f64 = 1e-9;

fn require_not_exterior<F: Scalar>(e: &Ellipse<F>, m: Point2<F>) -> Result<()> {
    if e.implicit(m) > F::one() + F::lit(ON_ELLIPSE_TOL) {
        return Err(GeometryError::DomainError(format!(
            "M = {m} lies outside the ellipse"
        )));
    }
    Ok(())
}

/// Hybrid pedal point: intersection of `L(t)` with the line from `M` to the pedal foot.
///
/// `M` must be inside or on the ellipse. For `M = P(s)` the denominator is
/// `4ab(cos(t − s) − 1)`, so `t = s` is singular.
pub fn hybrid_point<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, t: F) -> Result<Point2<F>> {
    require_not_exterior(e, m)?;
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let (x0, y0) = (m.x, m.y);
    let four = F::lit(4.0);
    let three = F::lit(3.0);
    let (s1, c1) = t.sin_cos();
    let (s2, c2t) = (t + t).sin_cos();
    let (s3, c3) = (three * t).sin_cos();
    let den = four * (a * y0 * s1 + b * x0 * c1 - a * b);
    if den.abs() < F::lit(1e-9) * four * a * b {
        return Err(GeometryError::SingularParameter { t: t.as_f64() });
    }
    let x = -b * (three * a * a + b * b + four * y0 * y0) * c1 + four * a * b * x0 * c2t
        - b * c2 * c3
        + four * a * x0 * y0 * s1
        + four * b * b * y0 * s2;
    let y = -a * (a * a + three * b * b + four * x0 * x0) * s1 + four * a * a * x0 * s2
        - a * c2 * s3
        + four * b * x0 * y0 * c1
        - four * a * b * y0 * c2t;
    Ok(Point2::new(x / den, y / den))
}

/// Geometric route to the hybrid point: `M + u·N(t)` (the line to the pedal
/// foot, along the normal) intersected with `L(t)`.
pub fn hybrid_oracle_point<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, t: F) -> Result<Point2<F>> {
    let p = e.point(t);
    let n = e.velocity(t).perp();
    let w = p - m;
    let den = w.dot(n);
    if den.abs() <= F::lit(1e-12) * w.norm() * n.norm() {
        return Err(GeometryError::SingularParameter { t: t.as_f64() });
    }
    Ok(m + n * (w.dot(w) / den))
}

/// Pseudo-Talbot point (negative pedal of the hybrid curve) for `M = P(s)`,
/// at curve parameter `t`. Closed form, valid only for `M` on the ellipse.
pub fn pseudo_talbot_point<F: Scalar>(e: &Ellipse<F>, s: F, t: F) -> Point2<F> {
    let (a, b) = (e.a(), e.b());
    let (a2, b2) = (a * a, b * b);
    let (a4, b4) = (a2 * a2, b2 * b2);
    let c4 = e.c2() * e.c2();
    let two = F::two();
    let (st, ct) = t.sin_cos();
    let (su, cu) = s.sin_cos();
    let ct2 = ct * ct;
    let kx = two * ct2 * ct2 - F::lit(3.0) * ct2;
    let ky = two * ct2 * ct2 - ct2;
    let x = -((kx + F::one()) * a4 - two * (kx + F::one()) * b2 * a2 + kx * b4) * cu / (b2 * a)
        - two * c4 * st.powi(3) * ct * su / (b2 * a)
        + ct * (a2 + b2) * (-a2 * st * st - b2 * ct2 + two * b2) / (b2 * a);
    let y = -two * c4 * st * ct.powi(3) * cu / (a2 * b)
        - ((ky - F::one()) * a4 - two * ky * b2 * a2 + ky * b4) * su / (a2 * b)
        + st * (a2 + b2) * ((a2 - b2) * ct2 + a2) / (a2 * b);
    Point2::new(x, y)
}

/// Lines through the hybrid point `Q*(t)` perpendicular to `Q*(t) − M`,
/// differentiated numerically.
pub fn hybrid_negative_pedal_family<F: Scalar>(e: Ellipse<F>, m: Point2<F>) -> LineFamily<F> {
    let tol = F::lit(1e-12) * e.a();
    LineFamily::with_numeric_derivative(
        move |t| {
            let q = hybrid_point(&e, m, t)?;
            let n = q - m;
            if n.norm() <= tol {
                return Err(GeometryError::DegenerateLine { t: t.as_f64() });
            }
            Ok(Line::through(q, n))
        },
        F::lit(1e-3),
    )
}

/// Envelope route to the pseudo-Talbot point, independent of [`pseudo_talbot_point`].
pub fn pseudo_talbot_oracle_point<F: Scalar>(e: &Ellipse<F>, s: F, t: F) -> Result<Point2<F>> {
    envelope_point(&hybrid_negative_pedal_family(*e, e.point(s)), t)
}

/// θ-evolutoid of the ellipse: envelope of the tangents rotated by θ.
/// θ = 0 gives the ellipse, θ = π/2 its evolute.
pub fn evolutoid_point<F: Scalar>(e: &Ellipse<F>, theta: F, t: F) -> Point2<F> {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let (st, ct) = t.sin_cos();
    let (sth, cth) = theta.sin_cos();
    let x = a * cth * cth * ct + c2 * sth * sth * ct.powi(3) / a
        - st * sth * cth * (b * b * ct * ct + a * a * st * st) / b;
    let y = a * sth * cth * ct - c2 * sth * ct * ct * (b * ct * cth - a * sth * st) / (a * b)
        + st * (b * b * cth * cth - c2 * sth * sth) / b;
    Point2::new(x, y)
}

/// Support function of the θ-evolutoid: `h_θ(t) = h(t − θ)cos θ + h′(t − θ)sin θ`.
///
/// The second derivative needs `h‴`, taken analytically when the input
/// provides it and by central differences otherwise.
pub fn evolutoid_support<F: Scalar>(curve: &SupportCurve<F>, theta: F) -> SupportCurve<F> {
    if theta == F::zero() {
        return curve.clone();
    }
    let (s, c) = theta.sin_cos();
    let (c0, c1, c2) = (curve.clone(), curve.clone(), curve.clone());
    SupportCurve::new(
        move |t| c0.h(t - theta) * c + c0.dh(t - theta) * s,
        move |t| c1.dh(t - theta) * c + c1.d2h(t - theta) * s,
        move |t| c2.d2h(t - theta) * c + c2.d3h(t - theta) * s,
    )
}
