//! Characteristic points of one-parameter line families.

use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::kernel::Point2;
use crate::scalar::Scalar;

/// The line `normal · X = offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<F> {
    pub normal: Point2<F>,
    pub offset: F,
}

impl<F: Scalar> Line<F> {
    pub fn new(normal: Point2<F>, offset: F) -> Self {
        Self { normal, offset }
    }

    /// Line through `p` with unit-free normal `normal`.
    pub fn through(p: Point2<F>, normal: Point2<F>) -> Self {
        Self::new(normal, normal.dot(p))
    }

    /// `normal · X − offset`.
    #[inline]
    pub fn residual(&self, p: Point2<F>) -> F {
        self.normal.dot(p) - self.offset
    }
}

type LineFn<F> = Arc<dyn Fn(F) -> Result<Line<F>> + Send + Sync>;

/// `t ↦ L(t)` together with `t ↦ dL/dt` (componentwise derivative of normal and offset).
#[derive(Clone)]
pub struct LineFamily<F> {
    eval: LineFn<F>,
    deriv: LineFn<F>,
}

impl<F: Scalar> LineFamily<F> {
    pub fn new(
        eval: impl Fn(F) -> Result<Line<F>> + Send + Sync + 'static,
        deriv: impl Fn(F) -> Result<Line<F>> + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            deriv: Arc::new(deriv),
        }
    }

    /// Family whose derivative is a fourth-order central difference with the given step.
    pub fn with_numeric_derivative(
        eval: impl Fn(F) -> Result<Line<F>> + Send + Sync + 'static,
        step: F,
    ) -> Self {
        let eval: LineFn<F> = Arc::new(eval);
        let e = eval.clone();
        let deriv = move |t: F| -> Result<Line<F>> {
            let eight = F::lit(8.0);
            let scale = F::one() / (F::lit(12.0) * step);
            let p1 = e(t + step)?;
            let m1 = e(t - step)?;
            let p2 = e(t + step + step)?;
            let m2 = e(t - step - step)?;
            let n = ((p1.normal - m1.normal) * eight - (p2.normal - m2.normal)) * scale;
            let d = (eight * (p1.offset - m1.offset) - (p2.offset - m2.offset)) * scale;
            Ok(Line::new(n, d))
        };
        Self {
            eval,
            deriv: Arc::new(deriv),
        }
    }

    pub fn line(&self, t: F) -> Result<Line<F>> {
        (self.eval)(t)
    }

    pub fn derivative(&self, t: F) -> Result<Line<F>> {
        (self.deriv)(t)
    }
}

/// Solves `{n·X = d, n′·X = d′}` for the characteristic point.
#[derive(Debug, Clone, Copy)]
pub struct EnvelopeSolver<F> {
    /// Singular when `|det| < eps_det · |n|·|n′|`.
    pub eps_det: F,
}

impl<F: Scalar> Default for EnvelopeSolver<F> {
    fn default() -> Self {
        Self {
            eps_det: F::lit(1e-12),
        }
    }
}

impl<F: Scalar> EnvelopeSolver<F> {
    pub fn solve(&self, family: &LineFamily<F>, t: F) -> Result<Point2<F>> {
        let l = family.line(t)?;
        let dl = family.derivative(t)?;
        self.solve_lines(&l, &dl, t)
    }

    pub fn solve_lines(&self, l: &Line<F>, dl: &Line<F>, t: F) -> Result<Point2<F>> {
        let det = l.normal.cross(dl.normal);
        let scale = l.normal.norm() * dl.normal.norm();
        if !(det.abs() >= self.eps_det * scale) || scale == F::zero() {
            return Err(GeometryError::SingularFamily { t: t.as_f64() });
        }
        let x = (l.offset * dl.normal.y - dl.offset * l.normal.y) / det;
        let y = (l.normal.x * dl.offset - dl.normal.x * l.offset) / det;
        Ok(Point2::new(x, y))
    }
}

/// Characteristic point of `family` at `t` with the default singularity threshold.
pub fn envelope_point<F: Scalar>(family: &LineFamily<F>, t: F) -> Result<Point2<F>> {
    EnvelopeSolver::default().solve(family, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_tangent_family() {
        let fam = LineFamily::new(
            |t: f64| Ok(Line::new(Point2::from_angle(t), 1.0)),
            |t: f64| Ok(Line::new(Point2::from_angle(t).perp(), 0.0)),
        );
        for k in 0..20 {
            let t = k as f64 * 0.31;
            let p = envelope_point(&fam, t).unwrap();
            assert!(p.distance(Point2::from_angle(t)) < 1e-14);
        }
    }

    #[test]
    fn parabola_family() {
        // y = 2tx − t²  ⇔  (−2t, 1)·X = −t²
        let fam = LineFamily::new(
            |t: f64| Ok(Line::new(Point2::new(-2.0 * t, 1.0), -t * t)),
            |t: f64| Ok(Line::new(Point2::new(-2.0, 0.0), -2.0 * t)),
        );
        for t in [-2.0, -0.5, 0.0, 0.7, 3.0] {
            let p = envelope_point(&fam, t).unwrap();
            assert!((p.x - t).abs() < 1e-14 && (p.y - t * t).abs() < 1e-13);
        }
    }

    #[test]
    fn parallel_lines_are_singular() {
        let fam = LineFamily::new(
            |t: f64| Ok(Line::new(Point2::new(1.0, 0.0), t)),
            |_t: f64| Ok(Line::new(Point2::new(0.0, 0.0), 1.0)),
        );
        assert!(matches!(
            envelope_point(&fam, 0.3),
            Err(GeometryError::SingularFamily { .. })
        ));
    }

    #[test]
    fn numeric_derivative_matches_analytic() {
        let fam = LineFamily::with_numeric_derivative(
            |t: f64| Ok(Line::new(Point2::new(-2.0 * t, 1.0), -t * t)),
            1e-3,
        );
        let p = envelope_point(&fam, 1.3).unwrap();
        assert!((p.x - 1.3).abs() < 1e-10 && (p.y - 1.69).abs() < 1e-10);
    }
}
