//! Geometric primitives shared by the whole crate: points, the ellipse,
//! support-function curves, periodic parameter grids and sampled curves.
//!
//! Two parametrizations coexist and are never converted pointwise:
//! the ellipse angle `t` in `P(t) = (a cos t, b sin t)`, and the
//! outward-normal angle used by [`SupportCurve`]. Quantities derived from
//! the two (areas, point sets) are compared instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct Point2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Scalar> Point2<F> {
    #[inline]
    pub fn new(x: F, y: F) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite point");
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self {
            x: F::zero(),
            y: F::zero(),
        }
    }

    /// Unit vector at angle `t`.
    #[inline]
    pub fn from_angle(t: F) -> Self {
        Self::new(t.cos(), t.sin())
    }

    #[inline]
    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Self) -> F {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> F {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> F {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, o: Self) -> F {
        (self - o).norm()
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Self {
        Self {
            x: -self.y,
            y: self.x,
        }
    }

    /// Counter-clockwise rotation by `angle`.
    #[inline]
    pub fn rotated(self, angle: F) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    #[inline]
    pub fn lerp(self, o: Self, mu: F) -> Self {
        self * (F::one() - mu) + o * mu
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<F: Scalar> Add for Point2<F> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl<F: Scalar> Sub for Point2<F> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl<F: Scalar> Mul<F> for Point2<F> {
    type Output = Self;
    #[inline]
    fn mul(self, k: F) -> Self {
        Self {
            x: self.x * k,
            y: self.y * k,
        }
    }
}

impl<F: Scalar> Neg for Point2<F> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl<F: Scalar> fmt::Display for Point2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Axis-aligned ellipse centered at the origin with semi-axes `a >= b > 0`.
///
/// `a == b` (a circle) is allowed; nothing downstream divides by `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct Ellipse<F> {
    a: F,
    b: F,
}

impl<F: Scalar> Ellipse<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > F::zero() && a >= b) {
            return Err(GeometryError::InvalidEllipse {
                a: a.as_f64(),
                b: b.as_f64(),
            });
        }
        Ok(Self { a, b })
    }

    #[inline]
    pub fn a(&self) -> F {
        self.a
    }

    #[inline]
    pub fn b(&self) -> F {
        self.b
    }

    /// `c² = a² − b²`.
    #[inline]
    pub fn c2(&self) -> F {
        self.a * self.a - self.b * self.b
    }

    /// `δ = √(a⁴ − a²b² + b⁴)`.
    pub fn delta(&self) -> F {
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        (a2 * a2 - a2 * b2 + b2 * b2).sqrt()
    }

    /// `πab`.
    pub fn area(&self) -> F {
        F::PI() * self.a * self.b
    }

    /// `P(t) = (a cos t, b sin t)`.
    #[inline]
    pub fn point(&self, t: F) -> Point2<F> {
        let (s, c) = t.sin_cos();
        Point2::new(self.a * c, self.b * s)
    }

    /// `P′(t) = (−a sin t, b cos t)`; never zero since `b > 0`.
    #[inline]
    pub fn velocity(&self, t: F) -> Point2<F> {
        let (s, c) = t.sin_cos();
        Point2::new(-self.a * s, self.b * c)
    }

    /// `P″(t) = −P(t)`.
    #[inline]
    pub fn acceleration(&self, t: F) -> Point2<F> {
        -self.point(t)
    }

    /// `x²/a² + y²/b²`: 1 on the boundary, < 1 inside.
    #[inline]
    pub fn implicit(&self, p: Point2<F>) -> F {
        let u = p.x / self.a;
        let v = p.y / self.b;
        u * u + v * v
    }

    /// Whether `p` lies on the boundary to relative tolerance `tol` on the implicit equation.
    pub fn on_boundary(&self, p: Point2<F>, tol: F) -> bool {
        (self.implicit(p) - F::one()).abs() <= tol
    }

    /// Ellipse angle of a point: the `t` with `P(t)` on the same ray through the scaled circle.
    pub fn param_of(&self, p: Point2<F>) -> F {
        (p.y / self.b).atan2(p.x / self.a)
    }

    /// Center-based support function `h(t) = √(a² cos² t + b² sin² t)`
    /// with analytic derivatives up to third order.
    pub fn support(&self) -> SupportCurve<F> {
        let b2 = self.b * self.b;
        let c2 = self.c2();
        // g = b² + c² cos² t, h = √g
        let g = move |t: F| b2 + c2 * t.cos().powi(2);
        let g1 = move |t: F| -c2 * (F::two() * t).sin();
        let g2 = move |t: F| -F::two() * c2 * (F::two() * t).cos();
        let g3 = move |t: F| F::lit(4.0) * c2 * (F::two() * t).sin();
        let two = F::two();
        let h = move |t: F| g(t).sqrt();
        let h1 = move |t: F| g1(t) / (two * h(t));
        let h2 = move |t: F| {
            let hv = h(t);
            g2(t) / (two * hv) - g1(t).powi(2) / (F::lit(4.0) * hv.powi(3))
        };
        let h3 = move |t: F| {
            let hv = h(t);
            let d1 = h1(t);
            let (a1, a2, a3) = (g1(t), g2(t), g3(t));
            a3 / (two * hv) - a2 * d1 / (two * hv * hv) - a1 * a2 / (two * hv.powi(3))
                + F::lit(3.0) * a1 * a1 * d1 / (F::lit(4.0) * hv.powi(4))
        };
        SupportCurve::new(h, h1, h2).with_third_derivative(h3)
    }
}

type RealFn<F> = Arc<dyn Fn(F) -> F + Send + Sync>;

/// A closed curve given by a 2π-periodic support function `h` and its derivatives.
///
/// The point with outward normal angle `t` is
/// `(h cos t − h′ sin t, h sin t + h′ cos t)`.
#[derive(Clone)]
pub struct SupportCurve<F> {
    h: RealFn<F>,
    dh: RealFn<F>,
    d2h: RealFn<F>,
    d3h: Option<RealFn<F>>,
}

impl<F: Scalar> fmt::Debug for SupportCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportCurve")
            .field("h(0)", &(self.h)(F::zero()))
            .field("analytic_d3h", &self.d3h.is_some())
            .finish()
    }
}

impl<F: Scalar> SupportCurve<F> {
    pub fn new(
        h: impl Fn(F) -> F + Send + Sync + 'static,
        dh: impl Fn(F) -> F + Send + Sync + 'static,
        d2h: impl Fn(F) -> F + Send + Sync + 'static,
    ) -> Self {
        Self {
            h: Arc::new(h),
            dh: Arc::new(dh),
            d2h: Arc::new(d2h),
            d3h: None,
        }
    }

    pub fn with_third_derivative(mut self, d3h: impl Fn(F) -> F + Send + Sync + 'static) -> Self {
        self.d3h = Some(Arc::new(d3h));
        self
    }

    /// Circle of radius `r` about the origin.
    pub fn circle(r: F) -> Self {
        Self::fourier(r, &[])
    }

    /// Trigonometric polynomial `h(t) = c₀ + Σ (αₖ cos kt + βₖ sin kt)`.
    ///
    /// `terms` holds `(k, αₖ, βₖ)`. A circle of radius `r` centered at
    /// `(p, q)` is `fourier(r, &[(1, p, q)])`.
    pub fn fourier(constant: F, terms: &[(u32, F, F)]) -> Self {
        let terms: Arc<[(F, F, F)]> = terms
            .iter()
            .map(|&(k, a, b)| (F::from_u32(k).expect("harmonic index"), a, b))
            .collect();
        // derivative of order n of a cos kt + b sin kt
        let deriv = move |order: i32, t: F, terms: &[(F, F, F)]| -> F {
            terms.iter().fold(F::zero(), |acc, &(k, a, b)| {
                let (s, c) = (k * t).sin_cos();
                let kn = k.powi(order);
                let v = match order.rem_euclid(4) {
                    0 => a * c + b * s,
                    1 => -a * s + b * c,
                    2 => -a * c - b * s,
                    _ => a * s - b * c,
                };
                acc + kn * v
            })
        };
        let (t0, t1, t2, t3) = (terms.clone(), terms.clone(), terms.clone(), terms);
        Self::new(
            move |t| constant + deriv(0, t, &t0),
            move |t| deriv(1, t, &t1),
            move |t| deriv(2, t, &t2),
        )
        .with_third_derivative(move |t| deriv(3, t, &t3))
    }

    #[inline]
    pub fn h(&self, t: F) -> F {
        (self.h)(t)
    }

    #[inline]
    pub fn dh(&self, t: F) -> F {
        (self.dh)(t)
    }

    #[inline]
    pub fn d2h(&self, t: F) -> F {
        (self.d2h)(t)
    }

    /// Third derivative: analytic when supplied, else a five-point central
    /// difference of `h″`.
    pub fn d3h(&self, t: F) -> F {
        match &self.d3h {
            Some(f) => f(t),
            None => five_point_derivative(&*self.d2h, t, F::lit(1e-3)),
        }
    }

    pub fn has_analytic_d3h(&self) -> bool {
        self.d3h.is_some()
    }

    /// Curve point with outward normal angle `t`.
    #[inline]
    pub fn point(&self, t: F) -> Point2<F> {
        let (s, c) = t.sin_cos();
        let (h, dh) = (self.h(t), self.dh(t));
        Point2::new(h * c - dh * s, h * s + dh * c)
    }

    /// Radius of curvature `h + h″`.
    #[inline]
    pub fn radius_of_curvature(&self, t: F) -> F {
        self.h(t) + self.d2h(t)
    }

    /// `h + h″ > 0` on a 1024-node grid.
    pub fn is_convex(&self) -> bool {
        uniform_nodes(1024, F::zero(), F::zero())
            .all(|t| self.radius_of_curvature(t) > F::zero())
    }

    /// `|h(t + 2π) − h(t)| <= tol` on a 64-node grid.
    pub fn is_periodic(&self, tol: F) -> bool {
        uniform_nodes(64, F::zero(), F::zero())
            .all(|t| (self.h(t + F::two_pi()) - self.h(t)).abs() <= tol)
    }
}

/// Fourth-order central difference `f′(t)`.
pub fn five_point_derivative<F: Scalar>(f: &dyn Fn(F) -> F, t: F, step: F) -> F {
    let eight = F::lit(8.0);
    (eight * (f(t + step) - f(t - step)) - (f(t + step + step) - f(t - step - step)))
        / (F::lit(12.0) * step)
}

/// Fourth-order central difference of a point-valued function.
pub fn five_point_velocity<F: Scalar>(
    f: &dyn Fn(F) -> Result<Point2<F>>,
    t: F,
    step: F,
) -> Result<Point2<F>> {
    let eight = F::lit(8.0);
    let p1 = f(t + step)?;
    let m1 = f(t - step)?;
    let p2 = f(t + step + step)?;
    let m2 = f(t - step - step)?;
    Ok(((p1 - m1) * eight - (p2 - m2)) * (F::one() / (F::lit(12.0) * step)))
}

fn uniform_nodes<F: Scalar>(count: usize, start: F, offset: F) -> impl Iterator<Item = F> {
    let step = F::two_pi() / F::from_usize_lossy(count);
    (0..count).map(move |k| start + (F::from_usize_lossy(k) + offset) * step)
}

/// Uniform periodic quadrature nodes `t_k = start + (k + offset)·2π/count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct ParamGrid<F> {
    start: F,
    count: usize,
    offset: F,
}

impl<F: Scalar> ParamGrid<F> {
    pub const MIN_COUNT: usize = 8;

    pub fn new(count: usize) -> Result<Self> {
        Self::with_layout(F::zero(), count, F::zero())
    }

    pub fn with_layout(start: F, count: usize, offset: F) -> Result<Self> {
        if count < Self::MIN_COUNT {
            return Err(GeometryError::GridTooSmall(count));
        }
        if !(offset >= F::zero() && offset < F::one()) || !start.is_finite() {
            return Err(GeometryError::InvalidOffset(offset.as_f64()));
        }
        Ok(Self {
            start,
            count,
            offset,
        })
    }

    /// Half-step offset grid starting at `start`; never contains `start` itself.
    pub fn staggered(start: F, count: usize) -> Result<Self> {
        Self::with_layout(start, count, F::half())
    }

    pub fn start(&self) -> F {
        self.start
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn offset(&self) -> F {
        self.offset
    }

    pub fn step(&self) -> F {
        F::two_pi() / F::from_usize_lossy(self.count)
    }

    pub fn node(&self, k: usize) -> F {
        self.start + (F::from_usize_lossy(k) + self.offset) * self.step()
    }

    pub fn nodes(&self) -> impl Iterator<Item = F> + '_ {
        (0..self.count).map(move |k| self.node(k))
    }

    /// Same layout with twice as many nodes.
    pub fn refined(&self) -> Self {
        Self {
            count: self.count * 2,
            ..*self
        }
    }
}

/// Ordered closed polyline with the parameter value of each vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct SampledCurve<F> {
    params: Vec<F>,
    points: Vec<Point2<F>>,
    closed: bool,
}

impl<F: Scalar> SampledCurve<F> {
    pub fn new(params: Vec<F>, points: Vec<Point2<F>>) -> Result<Self> {
        if params.len() != points.len() {
            return Err(GeometryError::LengthMismatch(params.len(), points.len()));
        }
        if params.len() < 3 {
            return Err(GeometryError::MalformedCurve(format!(
                "closed curve needs at least 3 samples, got {}",
                params.len()
            )));
        }
        if params.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(GeometryError::MalformedCurve(
                "parameters not strictly increasing".into(),
            ));
        }
        if params[params.len() - 1] - params[0] >= F::two_pi() {
            return Err(GeometryError::MalformedCurve(
                "parameters span more than one period".into(),
            ));
        }
        if let Some(k) = points.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::MalformedCurve(format!(
                "non-finite point at index {k}"
            )));
        }
        Ok(Self {
            params,
            points,
            closed: true,
        })
    }

    /// Closed polyline through `points`, with uniform parameters over one period.
    pub fn from_points(points: Vec<Point2<F>>) -> Result<Self> {
        let n = points.len();
        let step = F::two_pi() / F::from_usize_lossy(n.max(1));
        let params = (0..n).map(|k| F::from_usize_lossy(k) * step).collect();
        Self::new(params, points)
    }

    pub fn params(&self) -> &[F] {
        &self.params
    }

    pub fn points(&self) -> &[Point2<F>] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(t, p)` pairs in parameter order.
    pub fn iter(&self) -> impl Iterator<Item = (F, Point2<F>)> + '_ {
        self.params.iter().copied().zip(self.points.iter().copied())
    }

    /// Segments `(p_k, p_{k+1})`, including the closing one.
    pub fn segments(&self) -> impl Iterator<Item = (Point2<F>, Point2<F>)> + '_ {
        let n = self.points.len();
        (0..n).map(move |k| (self.points[k], self.points[(k + 1) % n]))
    }
}

/// Samples a fallible evaluator on every grid node.
pub fn sample_curve<F: Scalar>(
    f: impl Fn(F) -> Result<Point2<F>>,
    grid: &ParamGrid<F>,
) -> Result<SampledCurve<F>> {
    let mut params = Vec::with_capacity(grid.count());
    let mut points = Vec::with_capacity(grid.count());
    for t in grid.nodes() {
        let p = f(t).map_err(|e| GeometryError::Evaluation {
            t: t.as_f64(),
            source: Box::new(e),
        })?;
        if !p.is_finite() {
            return Err(GeometryError::Evaluation {
                t: t.as_f64(),
                source: Box::new(GeometryError::MalformedCurve("non-finite point".into())),
            });
        }
        params.push(t);
        points.push(p);
    }
    SampledCurve::new(params, points)
}

/// Samples an evaluator that cannot fail.
pub fn sample_smooth<F: Scalar>(f: impl Fn(F) -> Point2<F>, grid: &ParamGrid<F>) -> SampledCurve<F> {
    sample_curve(|t| Ok(f(t)), grid).expect("infallible evaluator produced a valid curve")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    fn close(p: Point2<f64>, x: f64, y: f64, tol: f64) -> bool {
        (p.x - x).abs() <= tol && (p.y - y).abs() <= tol
    }

    #[test]
    fn ellipse_point_examples() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        assert!(close(e.point(0.0), 2.0, 0.0, 1e-15));
        assert!(close(e.point(FRAC_PI_2), 0.0, 1.0, 1e-15));
        assert!(close(e.point(FRAC_PI_4), SQRT_2, SQRT_2 / 2.0, 1e-15));
    }

    #[test]
    fn ellipse_velocity_examples() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        assert!(close(e.velocity(0.0), 0.0, 1.0, 1e-15));
        assert!(close(e.velocity(FRAC_PI_2), -2.0, 0.0, 1e-15));
        let unit = Ellipse::new(1.0, 1.0).unwrap();
        for k in 0..16 {
            let t = k as f64 * 0.4;
            assert!((unit.velocity(t).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_axes() {
        assert!(Ellipse::new(1.0, 2.0).is_err());
        assert!(Ellipse::new(1.0, 0.0).is_err());
        assert!(Ellipse::new(f64::NAN, 1.0).is_err());
        assert!(Ellipse::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn delta_and_c2() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        assert_eq!(e.c2(), 3.0);
        assert!((e.delta() - 13f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn circle_support_point() {
        let s = SupportCurve::circle(3.0);
        assert!(close(s.point(0.0), 3.0, 0.0, 1e-15));
        assert!(s.is_convex());
    }

    #[test]
    fn translated_circle_support() {
        let s = SupportCurve::fourier(1.0, &[(1, 0.2, 0.0)]);
        for k in 0..32 {
            let p = s.point(k as f64 * 0.2);
            assert!((p.distance(Point2::new(0.2, 0.0)) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn ellipse_support_values() {
        let e = Ellipse::new(2.0f64, 1.0).unwrap();
        let s = e.support();
        assert!((s.h(0.0) - 2.0).abs() < 1e-15);
        assert!((s.h(FRAC_PI_2) - 1.0).abs() < 1e-15);
        let unit = Ellipse::new(1.0f64, 1.0).unwrap().support();
        for k in 0..10 {
            assert!((unit.h(k as f64) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn ellipse_support_points_lie_on_ellipse_with_normal_t() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let s = e.support();
        for k in 0..200 {
            let t = k as f64 * 0.0314159 - 1.0;
            let p = s.point(t);
            assert!((e.implicit(p) - 1.0).abs() < 1e-12, "t={t}");
            let n = Point2::from_angle(t);
            assert!((p - n * s.h(t)).dot(n).abs() < 1e-12);
        }
    }

    #[test]
    fn ellipse_support_derivatives_match_finite_differences() {
        let s = Ellipse::new(3.0, 1.2).unwrap().support();
        let step = 1e-3;
        for k in 0..50 {
            let t = k as f64 * 0.13;
            let fd1 = five_point_derivative(&|u| s.h(u), t, step);
            let fd2 = five_point_derivative(&|u| s.dh(u), t, step);
            let fd3 = five_point_derivative(&|u| s.d2h(u), t, step);
            assert!((fd1 - s.dh(t)).abs() < 1e-9);
            assert!((fd2 - s.d2h(t)).abs() < 1e-9);
            assert!((fd3 - s.d3h(t)).abs() < 1e-8, "t={t} {fd3} {}", s.d3h(t));
        }
    }

    #[test]
    fn fourier_support_derivatives() {
        let s = SupportCurve::fourier(10.0, &[(3, 1.0, 0.0)]);
        let t: f64 = 0.37;
        assert!((s.h(t) - (10.0 + (3.0 * t).cos())).abs() < 1e-14);
        assert!((s.dh(t) + 3.0 * (3.0 * t).sin()).abs() < 1e-14);
        assert!((s.d2h(t) + 9.0 * (3.0 * t).cos()).abs() < 1e-13);
        assert!((s.d3h(t) - 27.0 * (3.0 * t).sin()).abs() < 1e-13);
        assert!(s.is_convex());
        assert!(s.is_periodic(1e-12));
    }

    #[test]
    fn nonconvex_support_detected() {
        // h + h'' = 1 - 8 cos 3t changes sign
        let s = SupportCurve::fourier(1.0, &[(3, 1.0, 0.0)]);
        assert!(!s.is_convex());
    }

    #[test]
    fn grid_nodes_and_validation() {
        assert_eq!(
            ParamGrid::<f64>::new(7).unwrap_err(),
            GeometryError::GridTooSmall(7)
        );
        assert!(ParamGrid::<f64>::with_layout(0.0, 8, 1.0).is_err());
        let g = ParamGrid::<f64>::staggered(0.0, 8).unwrap();
        let nodes: Vec<f64> = g.nodes().collect();
        assert!((nodes[0] - PI / 8.0).abs() < 1e-15);
        assert!(nodes.iter().all(|&t| t != 0.0));
        assert!(nodes.windows(2).all(|w| w[1] > w[0]));
        assert!(nodes[7] - nodes[0] < 2.0 * PI);
        assert_eq!(g.refined().count(), 16);
    }

    #[test]
    fn sample_curve_builds_closed_polygon() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let g = ParamGrid::new(256).unwrap();
        let c = sample_smooth(|t| e.point(t), &g);
        assert_eq!(c.len(), 256);
        assert!(c.is_closed());
        assert_eq!(c.segments().count(), 256);
    }

    #[test]
    fn sample_curve_reports_offending_node() {
        let g = ParamGrid::new(8).unwrap();
        let err = sample_curve(
            |t: f64| {
                if t > 3.0 {
                    Err(GeometryError::SingularParameter { t })
                } else {
                    Ok(Point2::new(t, 0.0))
                }
            },
            &g,
        )
        .unwrap_err();
        match err {
            GeometryError::Evaluation { t, .. } => assert!((t - PI).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sampled_curve_validation() {
        let p = Point2::new(0.0, 0.0);
        assert!(SampledCurve::new(vec![0.0, 1.0], vec![p]).is_err());
        assert!(SampledCurve::new(vec![0.0, 1.0, 0.5], vec![p; 3]).is_err());
        assert!(SampledCurve::new(vec![0.0, 1.0, 7.0], vec![p; 3]).is_err());
    }

    #[test]
    fn f32_scalar_works() {
        let e = Ellipse::<f32>::new(2.0, 1.0).unwrap();
        let p = e.point(std::f32::consts::FRAC_PI_2);
        assert!((p.y - 1.0).abs() < 1e-6);
    }
}
