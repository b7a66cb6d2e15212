use std::f64::consts::PI;

use pedallab::area::{
    circumcenter, closed_form_area, curvature_centroid_polygon, signed_area_quadrature, AreaFamily,
    Polygon,
};
use pedallab::cli::curve_csv;
use pedallab::kernel::sample_smooth;
use pedallab::pedal::{
    evolutoid_point, foot_point, hybrid_oracle_point, hybrid_point, negative_pedal_family,
    negative_pedal_point, FootKind,
};
use pedallab::{Ellipse32, Ellipse64, ParamGrid32, ParamGrid64, Point32, Point64};
use proptest::prelude::*;

fn ellipse_strategy() -> impl Strategy<Value = Ellipse64> {
    (0.2f64..4.0, 0.05f64..1.0).prop_map(|(a, ratio)| Ellipse64::new(a, a * ratio).unwrap())
}

fn point_strategy(r: f64) -> impl Strategy<Value = Point64> {
    (-r..r, -r..r).prop_map(|(x, y)| Point64::new(x, y))
}

fn angle() -> impl Strategy<Value = f64> {
    0.0..2.0 * PI
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pedal_foot_is_perpendicular_foot_on_tangent(e in ellipse_strategy(), m in point_strategy(3.0), t in angle()) {
        let (p, v) = (e.point(t), e.velocity(t));
        let q = foot_point(FootKind::Pedal, &e, m, t);
        let scale = 1.0 + m.norm() + e.a();
        prop_assert!((q - p).cross(v).abs() <= 1e-10 * scale * v.norm());
        prop_assert!((m - q).dot(v).abs() <= 1e-10 * scale * v.norm());
    }

    #[test]
    fn contrapedal_foot_is_perpendicular_foot_on_normal(e in ellipse_strategy(), m in point_strategy(3.0), t in angle()) {
        let (p, v) = (e.point(t), e.velocity(t));
        let q = foot_point(FootKind::Contrapedal, &e, m, t);
        let scale = 1.0 + m.norm() + e.a();
        prop_assert!((q - p).dot(v).abs() <= 1e-10 * scale * v.norm());
        prop_assert!((m - q).cross(v).abs() <= 1e-10 * scale * v.norm());
    }

    #[test]
    fn rotated_feet_interpolate_pedal_and_contrapedal(e in ellipse_strategy(), m in point_strategy(3.0), t in angle()) {
        let scale = 1.0 + m.norm() + e.a();
        let r0 = foot_point(FootKind::Rotated(0.0), &e, m, t);
        let r90 = foot_point(FootKind::Rotated(PI / 2.0), &e, m, t);
        prop_assert!(r0.distance(foot_point(FootKind::Pedal, &e, m, t)) <= 1e-12 * scale);
        prop_assert!(r90.distance(foot_point(FootKind::Contrapedal, &e, m, t)) <= 1e-12 * scale);
    }

    #[test]
    fn interpolated_feet_are_affine(e in ellipse_strategy(), m in point_strategy(3.0), t in angle(), mu in -1.0f64..2.0) {
        let p = foot_point(FootKind::Pedal, &e, m, t);
        let c = foot_point(FootKind::Contrapedal, &e, m, t);
        let q = foot_point(FootKind::Interpolated(mu), &e, m, t);
        prop_assert!(q.distance(p + (c - p) * mu) <= 1e-12 * (1.0 + m.norm() + e.a()));
    }

    #[test]
    fn evolutoid_is_centrally_symmetric(e in ellipse_strategy(), theta in 0.0f64..PI / 2.0, t in angle()) {
        let p = evolutoid_point(&e, theta, t);
        let q = evolutoid_point(&e, theta, t + PI);
        prop_assert!((p + q).norm() <= 1e-10 * e.a() * e.a() / e.b());
    }

    #[test]
    fn hybrid_formula_matches_geometric_route(e in ellipse_strategy(), u in 0.0f64..0.95, phi in angle(), t in angle()) {
        let m = Point64::new(e.a() * u * phi.cos(), e.b() * u * phi.sin());
        match (hybrid_point(&e, m, t), hybrid_oracle_point(&e, m, t)) {
            (Ok(p), Ok(q)) => prop_assert!(p.distance(q) <= 1e-9 * (1.0 + q.norm())),
            (Err(_), _) | (_, Err(_)) => {}
        }
    }

    #[test]
    fn negative_pedal_points_lie_on_their_lines(e in ellipse_strategy(), m in point_strategy(1.0), t in angle()) {
        let fam = negative_pedal_family(e, m);
        if let (Ok(line), Ok(q)) = (fam.line(t), negative_pedal_point(&e, m, t)) {
            let scale = line.normal.norm() * (1.0 + q.norm());
            prop_assert!(line.residual(q).abs() <= 1e-9 * scale);
            // the envelope is tangent to the line: its velocity is orthogonal to the normal
            let h = 1e-5;
            if let (Ok(a), Ok(b)) = (negative_pedal_point(&e, m, t + h), negative_pedal_point(&e, m, t - h)) {
                let v = (a - b) * (0.5 / h);
                prop_assert!(v.dot(line.normal).abs() <= 1e-4 * (1.0 + v.norm()) * line.normal.norm());
            }
        }
    }

    #[test]
    fn pedal_area_closed_form_matches_quadrature(e in ellipse_strategy(), m in point_strategy(3.0)) {
        let g = ParamGrid64::new(512).unwrap();
        for fam in [AreaFamily::Pedal, AreaFamily::Contrapedal, AreaFamily::Rotated(0.7)] {
            let c = sample_smooth(|t| match fam {
                AreaFamily::Pedal => foot_point(FootKind::Pedal, &e, m, t),
                AreaFamily::Contrapedal => foot_point(FootKind::Contrapedal, &e, m, t),
                _ => foot_point(FootKind::Rotated(0.7), &e, m, t),
            }, &g);
            let q = signed_area_quadrature(&c);
            let want = closed_form_area(fam, &e, m).unwrap();
            prop_assert!((q - want).abs() <= 1e-9 * want.abs().max(e.a() * e.a()), "{fam}: {q} vs {want}");
        }
    }

    #[test]
    fn triangle_curvature_centroid_is_circumcenter(
        x in prop::array::uniform3(-1.0f64..1.0),
        y in prop::array::uniform3(-1.0f64..1.0),
    ) {
        let p = Polygon::new((0..3).map(|k| Point64::new(x[k], y[k])).collect()).unwrap();
        let twice_area = (p.vertices()[1] - p.vertices()[0]).cross(p.vertices()[2] - p.vertices()[0]);
        prop_assume!(twice_area.abs() > 0.1);
        let k = curvature_centroid_polygon(&p);
        let c = circumcenter(&p).unwrap();
        if let Ok(k) = k {
            prop_assert!(k.distance(c) <= 1e-9 * (1.0 + c.norm()));
        }
    }

    #[test]
    fn csv_rows_round_trip_bitwise(a in 0.5f64..3.0, x in -2.0f64..2.0, y in -2.0f64..2.0) {
        let e = Ellipse64::new(a, a / 2.0).unwrap();
        let m = Point64::new(x, y);
        let c = sample_smooth(|t| foot_point(FootKind::Pedal, &e, m, t), &ParamGrid64::new(64).unwrap());
        let csv = curve_csv(&c);
        for (line, (t, p)) in csv.lines().skip(1).zip(c.iter()) {
            let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
            prop_assert_eq!(v[0].to_bits(), t.to_bits());
            prop_assert_eq!(v[1].to_bits(), p.x.to_bits());
            prop_assert_eq!(v[2].to_bits(), p.y.to_bits());
        }
    }

    #[test]
    fn single_precision_tracks_double(a in 0.5f32..3.0, ratio in 0.2f32..1.0, x in -2.0f32..2.0, y in -2.0f32..2.0) {
        let e32 = Ellipse32::new(a, a * ratio).unwrap();
        let e64 = Ellipse64::new(a as f64, (a * ratio) as f64).unwrap();
        let m32 = Point32::new(x, y);
        let m64 = Point64::new(x as f64, y as f64);
        let q32 = signed_area_quadrature(&sample_smooth(|t| foot_point(FootKind::Pedal, &e32, m32, t), &ParamGrid32::new(128).unwrap()));
        let q64 = closed_form_area(AreaFamily::Pedal, &e64, m64).unwrap();
        prop_assert!(((q32 as f64) - q64).abs() <= 1e-4 * q64.abs());
    }
}
