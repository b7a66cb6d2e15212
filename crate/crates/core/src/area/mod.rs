//! Signed areas (quadrature and closed form), perimeters, support-function
//! integrals and Steiner's curvature centroid for polygons and curves.

mod quadrature;

pub use quadrature::{
    converged_area, perimeter_quadrature, perimeter_with_check, polyline_length,
    signed_area_quadrature, spectral_velocity, AreaEstimate, DEFAULT_REFINEMENT_TOL,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::kernel::{Ellipse, ParamGrid, Point2, SupportCurve};
use crate::pedal::{project_onto_line, ON_ELLIPSE_TOL};
use crate::scalar::Scalar;

/// Closed polygon, vertices in traversal order (counter-clockwise for positive area).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct Polygon<F> {
    vertices: Vec<Point2<F>>,
}

impl<F: Scalar> Polygon<F> {
    pub fn new(vertices: Vec<Point2<F>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2<F>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn vertex(&self, k: isize) -> Point2<F> {
        let n = self.vertices.len() as isize;
        self.vertices[k.rem_euclid(n) as usize]
    }

    /// Interior angle at every vertex; reflex vertices exceed π.
    pub fn internal_angles(&self) -> Vec<F> {
        let orientation = polygon_signed_area(self).signum();
        (0..self.len() as isize)
            .map(|k| {
                let e_in = self.vertex(k) - self.vertex(k - 1);
                let e_out = self.vertex(k + 1) - self.vertex(k);
                let turn = e_in.cross(e_out).atan2(e_in.dot(e_out));
                F::PI() - orientation * turn
            })
            .collect()
    }
}

/// Shoelace area, positive for counter-clockwise vertex order.
pub fn polygon_signed_area<F: Scalar>(p: &Polygon<F>) -> F {
    shoelace(p.vertices())
}

pub(crate) fn shoelace<F: Scalar>(v: &[Point2<F>]) -> F {
    let n = v.len();
    let twice = (0..n).fold(F::zero(), |acc, k| acc + v[k].cross(v[(k + 1) % n]));
    twice * F::half()
}

/// Curve family whose area is evaluated in closed form and by quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar", tag = "kind", content = "param")]
pub enum AreaFamily<F> {
    Ellipse,
    Pedal,
    Contrapedal,
    Rotated(F),
    Interpolated(F),
    Evolutoid(F),
    Hybrid,
    PseudoTalbot,
    /// Envelope of lines through `P(t)` perpendicular to `P(t) − M`; no closed form.
    NegativePedal,
}

impl<F: Scalar> AreaFamily<F> {
    /// Families defined only for `M` on the ellipse.
    pub fn requires_m_on_ellipse(&self) -> bool {
        matches!(self, AreaFamily::PseudoTalbot)
    }

    /// Families singular at the curve parameter of `M` when `M` is on the ellipse.
    pub fn singular_at_m_param(&self) -> bool {
        matches!(
            self,
            AreaFamily::Hybrid | AreaFamily::PseudoTalbot | AreaFamily::NegativePedal
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            AreaFamily::Ellipse => "ellipse",
            AreaFamily::Pedal => "pedal",
            AreaFamily::Contrapedal => "contrapedal",
            AreaFamily::Rotated(_) => "rotated",
            AreaFamily::Interpolated(_) => "interpolated",
            AreaFamily::Evolutoid(_) => "evolutoid",
            AreaFamily::Hybrid => "hybrid",
            AreaFamily::PseudoTalbot => "pseudo-talbot",
            AreaFamily::NegativePedal => "negative-pedal",
        }
    }
}

impl<F: Scalar> fmt::Display for AreaFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AreaFamily::Rotated(x) => write!(f, "rotated(theta={x})"),
            AreaFamily::Interpolated(x) => write!(f, "interpolated(mu={x})"),
            AreaFamily::Evolutoid(x) => write!(f, "evolutoid(theta={x})"),
            other => f.write_str(other.name()),
        }
    }
}

/// `A_p = (π/2)(a² + b² + |M|²)`.
pub fn pedal_area<F: Scalar>(e: &Ellipse<F>, m: Point2<F>) -> F {
    let (a, b) = (e.a(), e.b());
    F::FRAC_PI_2() * (a * a + b * b + m.norm_sq())
}

/// `A_c = (π/2)(a² + b² − 2ab + |M|²)`.
pub fn contrapedal_area<F: Scalar>(e: &Ellipse<F>, m: Point2<F>) -> F {
    let (a, b) = (e.a(), e.b());
    F::FRAC_PI_2() * (a * a + b * b - F::two() * a * b + m.norm_sq())
}

/// `A_θ = (π/2)(a² + b² − 2ab sin²θ + |M|²)`.
pub fn rotated_pedal_area<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, theta: F) -> F {
    let (a, b) = (e.a(), e.b());
    let s = theta.sin();
    F::FRAC_PI_2() * (a * a + b * b - F::two() * a * b * s * s + m.norm_sq())
}

/// Area of the μ-interpolated locus from the pedal, contrapedal and base areas:
/// `(1 − 2μ)[(1 − μ)A_p − μA_c] + μ(1 − μ)A`.
///
/// Follows from bilinearity of the area form and `A_{1/2} = A/4`; reduces to
/// `A_p` at μ = 0 and `A_c` at μ = 1.
pub fn interpolated_area<F: Scalar>(mu: F, pedal: F, contrapedal: F, base: F) -> F {
    let one = F::one();
    (one - F::two() * mu) * ((one - mu) * pedal - mu * contrapedal) + mu * (one - mu) * base
}

/// `π(3a⁴ + 2a²b² + 3b⁴) / (2ab)`.
pub fn hybrid_area<F: Scalar>(e: &Ellipse<F>) -> F {
    let (a2, b2) = (e.a() * e.a(), e.b() * e.b());
    let three = F::lit(3.0);
    F::PI() * (three * a2 * a2 + F::two() * a2 * b2 + three * b2 * b2) / (F::two() * e.a() * e.b())
}

/// Closed-form pseudo-Talbot area
/// `π(3a⁴ + 2a²b² + 3b⁴)(a² − 2ab − b²)(a² + 2ab − b²) / (8a³b³)`.
///
/// Its sign is opposite to the signed quadrature of the curve traversed in
/// increasing parameter.
pub fn pseudo_talbot_area<F: Scalar>(e: &Ellipse<F>) -> F {
    let (a, b) = (e.a(), e.b());
    let (a2, b2) = (a * a, b * b);
    let three = F::lit(3.0);
    let two_ab = F::two() * a * b;
    F::PI() * (three * a2 * a2 + F::two() * a2 * b2 + three * b2 * b2) * (a2 - two_ab - b2)
        * (a2 + two_ab - b2)
        / (F::lit(8.0) * a2 * a * b2 * b)
}

/// Legacy θ-evolutoid area formula `πab cos²θ − (3c²/(8ab)) sin²θ`.
///
/// Disagrees with the support integrals for θ ≠ 0; kept for comparison only.
pub fn legacy_evolutoid_area<F: Scalar>(e: &Ellipse<F>, theta: F) -> F {
    let (a, b) = (e.a(), e.b());
    let (s, c) = theta.sin_cos();
    F::PI() * a * b * c * c - F::lit(3.0) * e.c2() / (F::lit(8.0) * a * b) * s * s
}

/// θ-evolutoid area from the support integrals, `S cos²θ + S_evolute sin²θ`.
pub fn evolutoid_area<F: Scalar>(e: &Ellipse<F>, theta: F) -> Result<F> {
    let sa = support_areas(&e.support())?;
    let (s, c) = theta.sin_cos();
    Ok(sa.area * c * c + sa.evolute_area * s * s)
}

fn require_on_ellipse<F: Scalar>(e: &Ellipse<F>, m: Point2<F>, fam: AreaFamily<F>) -> Result<()> {
    if !e.on_boundary(m, F::lit(ON_ELLIPSE_TOL)) {
        return Err(GeometryError::DomainError(format!(
            "{fam} area requires M on the ellipse, got M = {m}"
        )));
    }
    Ok(())
}

/// Closed-form area of `fam` for ellipse `e` and pedal point `m`.
pub fn closed_form_area<F: Scalar>(fam: AreaFamily<F>, e: &Ellipse<F>, m: Point2<F>) -> Result<F> {
    match fam {
        AreaFamily::Ellipse => Ok(e.area()),
        AreaFamily::Pedal => Ok(pedal_area(e, m)),
        AreaFamily::Contrapedal => Ok(contrapedal_area(e, m)),
        AreaFamily::Rotated(theta) => Ok(rotated_pedal_area(e, m, theta)),
        AreaFamily::Interpolated(mu) => Ok(interpolated_area(
            mu,
            pedal_area(e, m),
            contrapedal_area(e, m),
            e.area(),
        )),
        AreaFamily::Evolutoid(theta) => evolutoid_area(e, theta),
        AreaFamily::Hybrid => {
            require_on_ellipse(e, m, fam)?;
            Ok(hybrid_area(e))
        }
        AreaFamily::PseudoTalbot => {
            require_on_ellipse(e, m, fam)?;
            Ok(pseudo_talbot_area(e))
        }
        AreaFamily::NegativePedal => Err(GeometryError::NoClosedForm(fam.name().into())),
    }
}

/// `½∫(h² − h′²)` and `½∫(h′² − h″²)` over one period.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct SupportAreas<F> {
    pub area: F,
    pub evolute_area: F,
}

pub const SUPPORT_NODES: usize = 2048;

fn support_integrals<F: Scalar>(s: &SupportCurve<F>, n: usize) -> SupportAreas<F> {
    let grid = ParamGrid::new(n).expect("support grid");
    let (mut i0, mut i1) = (F::zero(), F::zero());
    for t in grid.nodes() {
        let (h, h1, h2) = (s.h(t), s.dh(t), s.d2h(t));
        i0 = i0 + (h * h - h1 * h1);
        i1 = i1 + (h1 * h1 - h2 * h2);
    }
    let w = F::half() * grid.step();
    SupportAreas {
        area: i0 * w,
        evolute_area: i1 * w,
    }
}

/// Signed areas of a support curve and of its evolute by periodic trapezoid
/// on 2048 nodes, checked against 4096 nodes.
pub fn support_areas<F: Scalar>(s: &SupportCurve<F>) -> Result<SupportAreas<F>> {
    let coarse = support_integrals(s, SUPPORT_NODES);
    let fine = support_integrals(s, 2 * SUPPORT_NODES);
    let scale = fine.area.abs() + fine.evolute_area.abs() + F::min_positive_value();
    let change = (fine.area - coarse.area)
        .abs()
        .max((fine.evolute_area - coarse.evolute_area).abs());
    if change > F::lit(DEFAULT_REFINEMENT_TOL) * scale {
        return Err(GeometryError::NotConverged {
            coarse: coarse.area.as_f64(),
            fine: fine.area.as_f64(),
        });
    }
    Ok(fine)
}

/// First moments `(∫h cos t, ∫h sin t)` over one period.
pub fn support_first_moments<F: Scalar>(s: &SupportCurve<F>) -> Point2<F> {
    let grid = ParamGrid::new(SUPPORT_NODES).expect("support grid");
    let (mut cx, mut cy) = (F::zero(), F::zero());
    for t in grid.nodes() {
        let h = s.h(t);
        cx = cx + h * t.cos();
        cy = cy + h * t.sin();
    }
    Point2::new(cx * grid.step(), cy * grid.step())
}

/// Largest θ for which the θ-evolutoid of `s` stays free of cusps, so that
/// its length is `L cos θ`: `atan(1 / max |ρ′/ρ|)` with `ρ = h + h″`,
/// maximized over 4096 nodes.
pub fn perimeter_validity_bound<F: Scalar>(s: &SupportCurve<F>) -> F {
    let grid = ParamGrid::new(4096).expect("bound grid");
    let worst = grid.nodes().fold(F::zero(), |acc, t| {
        let rho = s.h(t) + s.d2h(t);
        let drho = s.dh(t) + s.d3h(t);
        acc.max((drho / rho).abs())
    });
    if worst == F::zero() {
        F::FRAC_PI_2()
    } else {
        worst.recip().atan()
    }
}

/// Steiner curvature centroid of a polygon: `Σ sin(2θᵢ)Pᵢ / Σ sin(2θᵢ)`.
pub fn curvature_centroid_polygon<F: Scalar>(p: &Polygon<F>) -> Result<Point2<F>> {
    let angles = p.internal_angles();
    let (mut num, mut den) = (Point2::origin(), F::zero());
    for (v, theta) in p.vertices().iter().zip(angles) {
        let w = (theta + theta).sin();
        num = num + *v * w;
        den = den + w;
    }
    if den.abs() <= F::lit(1e-12) * F::from_usize_lossy(p.len()) {
        return Err(GeometryError::ZeroTotalWeight);
    }
    Ok(num * (F::one() / den))
}

/// Curvature centroid of a support curve: `(1/π)(∫h cos t, ∫h sin t)`.
pub fn curvature_centroid_support<F: Scalar>(s: &SupportCurve<F>) -> Point2<F> {
    support_first_moments(s) * F::FRAC_1_PI()
}

/// Discretized `∫κP ds / ∫κ ds` from per-sample curvature and arc-length weights.
pub fn curvature_centroid_samples<F: Scalar>(
    points: &[Point2<F>],
    curvatures: &[F],
    arc_steps: &[F],
) -> Result<Point2<F>> {
    if points.len() != curvatures.len() {
        return Err(GeometryError::LengthMismatch(points.len(), curvatures.len()));
    }
    if points.len() != arc_steps.len() {
        return Err(GeometryError::LengthMismatch(points.len(), arc_steps.len()));
    }
    let (mut num, mut den) = (Point2::origin(), F::zero());
    for ((p, k), ds) in points.iter().zip(curvatures).zip(arc_steps) {
        let w = *k * *ds;
        num = num + *p * w;
        den = den + w;
    }
    if den.abs() <= F::lit(1e-9) {
        return Err(GeometryError::ZeroRotationIndex);
    }
    Ok(num * (F::one() / den))
}

/// Points, signed curvatures and arc-length weights of a parametric curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureSamples<F> {
    pub points: Vec<Point2<F>>,
    pub curvatures: Vec<F>,
    pub arc_steps: Vec<F>,
}

/// Samples `t ↦ (P, P′, P″)` on `grid`.
pub fn curvature_samples<F: Scalar>(
    f: impl Fn(F) -> (Point2<F>, Point2<F>, Point2<F>),
    grid: &ParamGrid<F>,
) -> CurvatureSamples<F> {
    let step = grid.step();
    let mut out = CurvatureSamples {
        points: Vec::with_capacity(grid.count()),
        curvatures: Vec::with_capacity(grid.count()),
        arc_steps: Vec::with_capacity(grid.count()),
    };
    for t in grid.nodes() {
        let (p, v, acc) = f(t);
        let speed = v.norm();
        out.points.push(p);
        out.curvatures.push(v.cross(acc) / speed.powi(3));
        out.arc_steps.push(speed * step);
    }
    out
}

/// Feet of the perpendiculars from `m` onto each side line, in side order.
pub fn pedal_polygon<F: Scalar>(p: &Polygon<F>, m: Point2<F>) -> Result<Polygon<F>> {
    let v = p.vertices();
    let n = v.len();
    let feet = (0..n)
        .map(|k| {
            let dir = v[(k + 1) % n] - v[k];
            if dir.norm_sq() == F::zero() {
                return Err(GeometryError::ZeroLengthSide(k));
            }
            Ok(project_onto_line(m, v[k], dir))
        })
        .collect::<Result<Vec<_>>>()?;
    Polygon::new(feet)
}

/// Circumcenter of the first three vertices.
pub fn circumcenter<F: Scalar>(p: &Polygon<F>) -> Result<Point2<F>> {
    let v = p.vertices();
    if v.len() != 3 {
        return Err(GeometryError::DomainError(format!(
            "circumcenter needs a triangle, got {} vertices",
            v.len()
        )));
    }
    let (a, b, c) = (v[0], v[1], v[2]);
    let (ab, ac) = (b - a, c - a);
    let d = F::two() * ab.cross(ac);
    let scale = ab.norm_sq().max(ac.norm_sq());
    if d.abs() <= F::lit(1e-12) * scale {
        return Err(GeometryError::CollinearVertices);
    }
    let (l1, l2) = (ab.norm_sq(), ac.norm_sq());
    let ux = (ac.y * l1 - ab.y * l2) / d;
    let uy = (ab.x * l2 - ac.x * l1) / d;
    Ok(a + Point2::new(ux, uy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::sample_smooth;
    use std::f64::consts::PI;

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn tri() -> Polygon<f64> {
        Polygon::new(vec![pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0)]).unwrap()
    }

    fn square() -> Polygon<f64> {
        Polygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap()
    }

    fn equilateral() -> Polygon<f64> {
        let h = 3f64.sqrt() / 2.0;
        Polygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, h)]).unwrap()
    }

    #[test]
    fn shoelace_examples() {
        assert_eq!(polygon_signed_area(&square()), 1.0);
        let mut cw = square().vertices().to_vec();
        cw.reverse();
        assert_eq!(polygon_signed_area(&Polygon::new(cw).unwrap()), -1.0);
        assert_eq!(polygon_signed_area(&tri()), 6.0);
        assert!(Polygon::<f64>::new(vec![pt(0.0, 0.0), pt(1.0, 0.0)]).is_err());
    }

    #[test]
    fn internal_angles_sum_and_reflex() {
        let a = tri().internal_angles();
        assert!((a.iter().sum::<f64>() - PI).abs() < 1e-14);
        assert!((a[0] - PI / 2.0).abs() < 1e-15);
        // arrowhead with a reflex vertex at (1, 0.5)
        let arrow =
            Polygon::new(vec![pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.5), pt(2.0, 2.0)]).unwrap();
        let ang = arrow.internal_angles();
        assert!(ang[2] > PI);
        assert!((ang.iter().sum::<f64>() - 2.0 * PI).abs() < 1e-13);
        // clockwise order gives the same interior angles
        let mut rev = tri().vertices().to_vec();
        rev.reverse();
        let r = Polygon::new(rev).unwrap().internal_angles();
        assert!((r.iter().sum::<f64>() - PI).abs() < 1e-14);
    }

    #[test]
    fn curvature_centroid_polygon_examples() {
        let k = curvature_centroid_polygon(&tri()).unwrap();
        assert!(k.distance(pt(2.0, 1.5)) < 1e-14);
        let eq = equilateral();
        let k = curvature_centroid_polygon(&eq).unwrap();
        assert!(k.distance(pt(0.5, 3f64.sqrt() / 6.0)) < 1e-14);
        assert_eq!(
            curvature_centroid_polygon(&square()).unwrap_err(),
            GeometryError::ZeroTotalWeight
        );
    }

    #[test]
    fn circumcenter_examples() {
        assert!(circumcenter(&tri()).unwrap().distance(pt(2.0, 1.5)) < 1e-15);
        let c = circumcenter(&equilateral()).unwrap();
        assert!(c.distance(pt(0.5, 3f64.sqrt() / 6.0)) < 1e-15);
        let line = Polygon::new(vec![pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)]).unwrap();
        assert_eq!(
            circumcenter(&line).unwrap_err(),
            GeometryError::CollinearVertices
        );
    }

    #[test]
    fn pedal_polygon_examples() {
        let med = pedal_polygon(&tri(), pt(2.0, 1.5)).unwrap();
        let want = [pt(2.0, 0.0), pt(2.0, 1.5), pt(0.0, 1.5)];
        for (g, w) in med.vertices().iter().zip(want) {
            assert!(g.distance(w) < 1e-14);
        }
        let simson = pedal_polygon(&tri(), pt(4.0, 3.0)).unwrap();
        assert!(polygon_signed_area(&simson).abs() < 1e-10);
        let sq = pedal_polygon(&square(), pt(0.5, 0.5)).unwrap();
        assert!((polygon_signed_area(&sq) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn closed_form_examples() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let m = pt(1.0, 0.5);
        let ap = closed_form_area(AreaFamily::Pedal, &e, m).unwrap();
        let ac = closed_form_area(AreaFamily::Contrapedal, &e, m).unwrap();
        assert!((ap - 3.125 * PI).abs() < 1e-14);
        assert!((ac - 1.125 * PI).abs() < 1e-14);
        assert!((ap - ac - 2.0 * PI).abs() < 1e-14);
        let o = Point2::origin();
        let at = closed_form_area(AreaFamily::Rotated(PI / 6.0), &e, o).unwrap();
        assert!((at - 2.0 * PI).abs() < 1e-14);
        let ap0 = closed_form_area(AreaFamily::Pedal, &e, o).unwrap();
        assert!((ap0 - at - 0.5 * PI).abs() < 1e-14);
        for m in [o, pt(1.0, -2.0), pt(0.3, 0.1)] {
            let half = closed_form_area(AreaFamily::Interpolated(0.5), &e, m).unwrap();
            assert_eq!(half, e.area() / 4.0);
        }
        let on = e.point(0.4);
        let h = closed_form_area(AreaFamily::Hybrid, &e, on).unwrap();
        assert!((h - 59.0 * PI / 4.0).abs() < 1e-13);
        let d = closed_form_area(AreaFamily::PseudoTalbot, &e, on).unwrap();
        assert!((d + 413.0 * PI / 64.0).abs() < 1e-13);
        assert!(matches!(
            closed_form_area(AreaFamily::Hybrid, &e, o),
            Err(GeometryError::DomainError(_))
        ));
        assert!(matches!(
            closed_form_area(AreaFamily::NegativePedal, &e, on),
            Err(GeometryError::NoClosedForm(_))
        ));
    }

    #[test]
    fn interpolated_endpoints() {
        let (ap, ac, a) = (7.0, 3.0, 2.5);
        assert_eq!(interpolated_area(0.0, ap, ac, a), ap);
        assert_eq!(interpolated_area(1.0, ap, ac, a), ac);
    }

    #[test]
    fn support_area_examples() {
        let c = support_areas(&SupportCurve::circle(1.5)).unwrap();
        assert!((c.area - PI * 2.25).abs() < 1e-13);
        assert!(c.evolute_area.abs() < 1e-13);
        let s = support_areas(&SupportCurve::fourier(10.0, &[(3, 1.0, 0.0)])).unwrap();
        assert!((s.area - 96.0 * PI).abs() < 1e-11);
        assert!((s.evolute_area + 36.0 * PI).abs() < 1e-11);
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let es = support_areas(&e.support()).unwrap();
        assert!((es.area - 2.0 * PI).abs() < 1e-12);
        assert!((es.evolute_area + 27.0 * PI / 16.0).abs() < 1e-12);
    }

    #[test]
    fn validity_bound_of_ellipse_is_first_cusp_angle() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let theta0 = (2.0 * 2.0 * 1.0 / (3.0 * 3.0f64)).atan();
        assert!((perimeter_validity_bound(&e.support()) - theta0).abs() < 1e-6);
        assert_eq!(perimeter_validity_bound(&SupportCurve::circle(1.0)), PI / 2.0);
    }

    #[test]
    fn support_centroids() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        assert!(curvature_centroid_support(&e.support()).norm() < 1e-14);
        let k = curvature_centroid_support(&SupportCurve::fourier(1.0, &[(1, 0.2, 0.0)]));
        assert!(k.distance(pt(0.2, 0.0)) < 1e-14);
        let k = curvature_centroid_support(&SupportCurve::fourier(10.0, &[(3, 1.0, 0.0)]));
        assert!(k.norm() < 1e-13);
    }

    #[test]
    fn sampled_centroids() {
        let g = ParamGrid::new(512).unwrap();
        let circle = curvature_samples(
            |t: f64| (Point2::from_angle(t), Point2::from_angle(t).perp(), -Point2::from_angle(t)),
            &g,
        );
        let k = curvature_centroid_samples(&circle.points, &circle.curvatures, &circle.arc_steps)
            .unwrap();
        assert!(k.norm() < 1e-14);
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let es = curvature_samples(|t| (e.point(t), e.velocity(t), e.acceleration(t)), &g);
        let k = curvature_centroid_samples(&es.points, &es.curvatures, &es.arc_steps).unwrap();
        assert!(k.norm() < 1e-9);
        let eight = curvature_samples(
            |t: f64| {
                (
                    pt(t.sin(), (2.0 * t).sin()),
                    pt(t.cos(), 2.0 * (2.0 * t).cos()),
                    pt(-t.sin(), -4.0 * (2.0 * t).sin()),
                )
            },
            &g,
        );
        assert_eq!(
            curvature_centroid_samples(&eight.points, &eight.curvatures, &eight.arc_steps)
                .unwrap_err(),
            GeometryError::ZeroRotationIndex
        );
        assert!(curvature_centroid_samples(&es.points, &es.curvatures[1..], &es.arc_steps).is_err());
    }

    #[test]
    fn evolute_quadrature_matches_support_integral() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let c = sample_smooth(
            |t| crate::pedal::evolutoid_point(&e, PI / 2.0, t),
            &ParamGrid::new(4096).unwrap(),
        );
        let q = signed_area_quadrature(&c);
        assert!((q + 27.0 * PI / 16.0).abs() < 1e-10);
        let s = support_areas(&e.support()).unwrap();
        assert!((q - s.evolute_area).abs() < 1e-10);
        let legacy = legacy_evolutoid_area(&e, PI / 2.0);
        assert!((legacy - q).abs() > 1.0);
    }
}
