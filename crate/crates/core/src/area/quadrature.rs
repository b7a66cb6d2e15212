//! Periodic quadrature on uniformly sampled closed curves.
//!
//! Derivatives are taken spectrally (FFT of `x + iy`), so the trapezoid sum
//! of `x y′ − y x′` converges geometrically for analytic parametrizations,
//! cusped ones included.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::kernel::{sample_curve, ParamGrid, Point2, SampledCurve};
use crate::scalar::Scalar;

/// Spectral derivative `dP/dt` at every node of a uniform periodic sample.
pub fn spectral_velocity<F: Scalar>(points: &[Point2<F>]) -> Vec<Point2<F>> {
    let n = points.len();
    let mut buf: Vec<Complex<F>> = points.iter().map(|p| Complex::new(p.x, p.y)).collect();
    let mut planner = FftPlanner::<F>::new();
    planner.plan_fft_forward(n).process(&mut buf);
    for (j, z) in buf.iter_mut().enumerate() {
        let k = if 2 * j < n {
            F::from_usize_lossy(j)
        } else if 2 * j == n {
            F::zero()
        } else {
            -F::from_usize_lossy(n - j)
        };
        // multiply by i·k
        *z = Complex::new(-z.im * k, z.re * k);
        if k == F::zero() {
            *z = Complex::new(F::zero(), F::zero());
        }
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let inv_n = F::one() / F::from_usize_lossy(n);
    buf.into_iter()
        .map(|z| Point2::new(z.re * inv_n, z.im * inv_n))
        .collect()
}

/// Signed area `½∮(x dy − y dx)` of a curve sampled on a uniform periodic grid.
///
/// Positive for counter-clockwise traversal in increasing parameter.
pub fn signed_area_quadrature<F: Scalar>(c: &SampledCurve<F>) -> F {
    let pts = c.points();
    let vel = spectral_velocity(pts);
    let h = F::two_pi() / F::from_usize_lossy(pts.len());
    // fixed index order keeps results bit-identical between runs
    let mut sum = F::zero();
    for (p, v) in pts.iter().zip(vel.iter()) {
        sum = sum + (p.x * v.y - p.y * v.x);
    }
    F::half() * sum * h
}

/// Closed polyline length.
pub fn polyline_length<F: Scalar>(points: &[Point2<F>]) -> F {
    let n = points.len();
    (0..n).fold(F::zero(), |acc, k| acc + points[k].distance(points[(k + 1) % n]))
}

/// Perimeter of a sampled closed curve.
///
/// For an even number of samples the chord sum is Richardson-extrapolated
/// against the every-other-node subsample, `(4 L_N − L_{N/2}) / 3`.
pub fn perimeter_quadrature<F: Scalar>(c: &SampledCurve<F>) -> F {
    perimeter_with_check(c).0
}

/// `(perimeter, |L_N − L_{N/2}|)`; the second value measures how resolved the sample is.
pub fn perimeter_with_check<F: Scalar>(c: &SampledCurve<F>) -> (F, F) {
    let pts = c.points();
    let fine = polyline_length(pts);
    if !pts.len().is_multiple_of(2) || pts.len() < 8 {
        return (fine, F::zero());
    }
    let half: Vec<Point2<F>> = pts.iter().step_by(2).copied().collect();
    let coarse = polyline_length(&half);
    ((F::lit(4.0) * fine - coarse) / F::lit(3.0), (fine - coarse).abs())
}

/// Area at `N` nodes and at `2N` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Scalar")]
pub struct AreaEstimate<F> {
    pub value: F,
    pub coarse: F,
    pub rel_change: F,
}

/// Default N→2N agreement required before an area is reported.
pub const DEFAULT_REFINEMENT_TOL: f64 = 1e-9;

/// Samples `f` on `grid` and on its refinement and returns the refined area,
/// failing with `NotConverged` if the two disagree by more than `rel_tol`.
pub fn converged_area<F: Scalar>(
    f: impl Fn(F) -> Result<Point2<F>>,
    grid: &ParamGrid<F>,
    rel_tol: F,
) -> Result<AreaEstimate<F>> {
    let coarse = signed_area_quadrature(&sample_curve(&f, grid)?);
    let value = signed_area_quadrature(&sample_curve(&f, &grid.refined())?);
    let scale = value.abs().max(F::min_positive_value());
    let rel_change = (value - coarse).abs() / scale;
    if !(rel_change <= rel_tol) && (value - coarse).abs() > F::epsilon() * F::lit(64.0) {
        return Err(GeometryError::NotConverged {
            coarse: coarse.as_f64(),
            fine: value.as_f64(),
        });
    }
    Ok(AreaEstimate {
        value,
        coarse,
        rel_change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{sample_smooth, Ellipse};
    use std::f64::consts::PI;

    #[test]
    fn unit_circle_area() {
        let c = sample_smooth(Point2::<f64>::from_angle, &ParamGrid::new(256).unwrap());
        assert!((signed_area_quadrature(&c) - PI).abs() < 1e-12);
    }

    #[test]
    fn ellipse_area_and_orientation() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let g = ParamGrid::new(256).unwrap();
        let c = sample_smooth(|t| e.point(t), &g);
        assert!((signed_area_quadrature(&c) - 2.0 * PI).abs() < 1e-12);
        let cw = sample_smooth(|t: f64| e.point(-t), &g);
        assert!((signed_area_quadrature(&cw) + 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn spectral_velocity_of_ellipse() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let g = ParamGrid::with_layout(0.3, 64, 0.5).unwrap();
        let c = sample_smooth(|t| e.point(t), &g);
        for ((t, _), v) in c.iter().zip(spectral_velocity(c.points())) {
            assert!(v.distance(e.velocity(t)) < 1e-13);
        }
    }

    #[test]
    fn perimeter_examples() {
        let c = sample_smooth(Point2::<f64>::from_angle, &ParamGrid::new(1024).unwrap());
        assert!((perimeter_quadrature(&c) - 2.0 * PI).abs() < 1e-5);
        assert!((perimeter_quadrature(&c) - 2.0 * PI).abs() < 1e-10);
        let square: Vec<Point2<f64>> = [
            (0.0, 0.0),
            (0.5, 0.0),
            (1.0, 0.0),
            (1.0, 0.5),
            (1.0, 1.0),
            (0.5, 1.0),
            (0.0, 1.0),
            (0.0, 0.5),
        ]
        .iter()
        .map(|&(x, y)| Point2::new(x, y))
        .collect();
        let sq = SampledCurve::from_points(square).unwrap();
        assert!((perimeter_quadrature(&sq) - 4.0).abs() < 1e-15);
        let corners = SampledCurve::from_points(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(perimeter_quadrature(&corners), 4.0);
    }

    #[test]
    fn converged_area_flags_unresolved_curves() {
        // 40 lobes cannot be resolved on 8/16 nodes
        let g = ParamGrid::new(8).unwrap();
        let res = converged_area(
            |t: f64| Ok(Point2::from_angle(t) * (1.0 + 0.3 * (40.0 * t).cos())),
            &g,
            1e-9,
        );
        assert!(matches!(res, Err(GeometryError::NotConverged { .. })));
        let ok = converged_area(|t: f64| Ok(Point2::from_angle(t)), &g, 1e-9).unwrap();
        assert!((ok.value - PI).abs() < 1e-12);
    }
}
