use crate::error::Result;
use crate::kernel::{five_point_velocity, Point2, SampledCurve};
use crate::scalar::Scalar;

/// A transverse self-crossing of a closed curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing<F> {
    pub point: Point2<F>,
    /// Parameters of the two branches through `point` (`t1 < t2`, second may exceed 2π).
    pub params: (F, F),
    /// Indices of the two crossing segments.
    pub segments: (usize, usize),
}

fn segment_params<F: Scalar>(c: &SampledCurve<F>, k: usize) -> (F, F) {
    let t = c.params();
    let n = t.len();
    if k + 1 < n {
        (t[k], t[k + 1])
    } else {
        (t[n - 1], t[0] + F::two_pi())
    }
}

/// All transverse crossings between non-adjacent segments of the closed polyline.
pub fn self_intersections<F: Scalar>(c: &SampledCurve<F>) -> Vec<Crossing<F>> {
    let pts = c.points();
    let n = pts.len();
    let eps = F::lit(1e-12);
    let boxes: Vec<(Point2<F>, Point2<F>)> = (0..n)
        .map(|k| {
            let (p, q) = (pts[k], pts[(k + 1) % n]);
            (
                Point2::new(p.x.min(q.x), p.y.min(q.y)),
                Point2::new(p.x.max(q.x), p.y.max(q.y)),
            )
        })
        .collect();

    let mut found: Vec<Crossing<F>> = Vec::new();
    for i in 0..n {
        let (p, p2) = (pts[i], pts[(i + 1) % n]);
        let r = p2 - p;
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (lo_i, hi_i) = boxes[i];
            let (lo_j, hi_j) = boxes[j];
            if lo_i.x > hi_j.x || lo_j.x > hi_i.x || lo_i.y > hi_j.y || lo_j.y > hi_i.y {
                continue;
            }
            let (q, q2) = (pts[j], pts[(j + 1) % n]);
            let s = q2 - q;
            let denom = r.cross(s);
            if denom.abs() <= eps * r.norm() * s.norm() {
                continue;
            }
            let w = q - p;
            let u = w.cross(s) / denom;
            let v = w.cross(r) / denom;
            if u < -eps || u > F::one() + eps || v < -eps || v > F::one() + eps {
                continue;
            }
            let (a0, a1) = segment_params(c, i);
            let (b0, b1) = segment_params(c, j);
            found.push(Crossing {
                point: p + r * u,
                params: (a0 + (a1 - a0) * u, b0 + (b1 - b0) * v),
                segments: (i, j),
            });
        }
    }
    dedup_vertex_hits(found, c)
}

// A crossing through a shared vertex is reported by up to four segment pairs.
fn dedup_vertex_hits<F: Scalar>(found: Vec<Crossing<F>>, c: &SampledCurve<F>) -> Vec<Crossing<F>> {
    let n = c.len();
    let near = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(n - d) <= 1
    };
    let mut out: Vec<Crossing<F>> = Vec::new();
    for x in found {
        let dup = out.iter().any(|y| {
            let (a, b) = (x.segments, y.segments);
            ((near(a.0, b.0) && near(a.1, b.1)) || (near(a.0, b.1) && near(a.1, b.0)))
                && x.point.distance(y.point) <= F::lit(1e-9) * (F::one() + x.point.norm())
        });
        if !dup {
            out.push(x);
        }
    }
    out
}

/// Crossings of the sampled curve, each polished by Newton iteration on
/// `f(t₁) = f(t₂)` using the underlying evaluator. A crossing whose
/// iteration wanders off its two segments keeps the polyline estimate.
pub fn self_intersections_refined<F: Scalar>(
    c: &SampledCurve<F>,
    f: &dyn Fn(F) -> Result<Point2<F>>,
) -> Result<Vec<Crossing<F>>> {
    let step = F::two_pi() / F::from_usize_lossy(c.len());
    let fd = step * F::lit(1e-2);
    let mut out = Vec::new();
    for x in self_intersections(c) {
        let (mut t1, mut t2) = x.params;
        let mut ok = true;
        for _ in 0..30 {
            let g = f(t1)? - f(t2)?;
            let v1 = five_point_velocity(f, t1, fd)?;
            let v2 = five_point_velocity(f, t2, fd)?;
            // J = [v1, −v2]; solve J·δ = −g
            let det = -v1.cross(v2);
            if det.abs() <= F::lit(1e-14) * v1.norm() * v2.norm() {
                ok = false;
                break;
            }
            let rhs = -g;
            let d1 = (rhs.x * (-v2.y) - (-v2.x) * rhs.y) / det;
            let d2 = (v1.x * rhs.y - v1.y * rhs.x) / det;
            t1 = t1 + d1;
            t2 = t2 + d2;
            if d1.abs().max(d2.abs()) < F::lit(1e-15) * (F::one() + t2.abs()) {
                break;
            }
        }
        let stays = (t1 - x.params.0).abs() <= step + step && (t2 - x.params.1).abs() <= step + step;
        if ok && stays {
            let p = (f(t1)? + f(t2)?) * F::half();
            out.push(Crossing {
                point: p,
                params: (t1, t2),
                segments: x.segments,
            });
        } else {
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{sample_smooth, Ellipse, ParamGrid};

    #[test]
    fn convex_polyline_has_no_crossings() {
        let e = Ellipse::new(2.0, 1.0).unwrap();
        let c = sample_smooth(|t| e.point(t), &ParamGrid::new(256).unwrap());
        assert!(self_intersections(&c).is_empty());
    }

    #[test]
    fn figure_eight_has_one_crossing() {
        let f = |t: f64| Point2::new(t.sin(), (2.0 * t).sin());
        let c = sample_smooth(f, &ParamGrid::with_layout(0.0, 200, 0.25).unwrap());
        let x = self_intersections(&c);
        assert_eq!(x.len(), 1, "{x:?}");
        let r = self_intersections_refined(&c, &|t| Ok(f(t))).unwrap();
        assert!(r[0].point.norm() < 1e-12);
    }

    #[test]
    fn vertex_crossing_counted_once() {
        // Figure-eight with nodes exactly on the crossing (t = 0 and t = π).
        let f = |t: f64| Point2::new(t.sin(), (2.0 * t).sin());
        let c = sample_smooth(f, &ParamGrid::new(64).unwrap());
        let x = self_intersections(&c);
        assert_eq!(x.len(), 1, "{x:?}");
    }
}
