use crate::error::Result;
use crate::kernel::{five_point_velocity, ParamGrid, Point2};
use crate::scalar::Scalar;

/// Locates parameters where the speed `|f′|` of a closed curve vanishes.
///
/// Candidate minima of the finite-difference speed on the grid are refined by
/// golden-section search over the two neighbouring cells and kept when the
/// refined speed falls below `tol · median speed`.
#[derive(Debug, Clone, Copy)]
pub struct CuspFinder<F> {
    /// Relative speed threshold.
    pub tol: F,
    /// Step of the five-point stencil for the speed.
    pub fd_step: F,
    /// Golden-section stopping width in `t`.
    pub t_tol: F,
}

impl<F: Scalar> Default for CuspFinder<F> {
    fn default() -> Self {
        Self {
            tol: F::lit(1e-5),
            fd_step: F::lit(1e-3),
            t_tol: F::lit(1e-10),
        }
    }
}

impl<F: Scalar> CuspFinder<F> {
    pub fn with_tol(tol: F) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    fn speed(&self, f: &dyn Fn(F) -> Result<Point2<F>>, t: F) -> Result<F> {
        Ok(five_point_velocity(f, t, self.fd_step)?.norm())
    }

    /// Cusp parameters reduced to `[0, 2π)`, sorted.
    pub fn find(
        &self,
        f: &dyn Fn(F) -> Result<Point2<F>>,
        grid: &ParamGrid<F>,
    ) -> Result<Vec<F>> {
        let n = grid.count();
        let nodes: Vec<F> = grid.nodes().collect();
        let speeds = nodes
            .iter()
            .map(|&t| self.speed(f, t))
            .collect::<Result<Vec<F>>>()?;
        let mut sorted = speeds.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        let median = sorted[n / 2];
        let threshold = self.tol * median;
        let step = grid.step();

        let mut cusps: Vec<F> = Vec::new();
        for k in 0..n {
            let prev = speeds[(k + n - 1) % n];
            let next = speeds[(k + 1) % n];
            if !(speeds[k] <= prev && speeds[k] < next) {
                continue;
            }
            let (t, v) = self.golden_min(f, nodes[k] - step, nodes[k] + step)?;
            if v < threshold {
                let t = wrap_angle(t);
                if !cusps
                    .iter()
                    .any(|&c| angular_gap(c, t) < F::lit(1e-7))
                {
                    cusps.push(t);
                }
            }
        }
        cusps.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        Ok(cusps)
    }

    fn golden_min(
        &self,
        f: &dyn Fn(F) -> Result<Point2<F>>,
        mut lo: F,
        mut hi: F,
    ) -> Result<(F, F)> {
        let inv_phi = (F::lit(5.0).sqrt() - F::one()) / F::two();
        let mut x1 = hi - inv_phi * (hi - lo);
        let mut x2 = lo + inv_phi * (hi - lo);
        let mut f1 = self.speed(f, x1)?;
        let mut f2 = self.speed(f, x2)?;
        while hi - lo > self.t_tol {
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = self.speed(f, x1)?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = self.speed(f, x2)?;
            }
        }
        let t = (lo + hi) * F::half();
        Ok((t, self.speed(f, t)?))
    }
}

/// Cusps of `f` on `grid` with relative speed threshold `tol`.
pub fn find_cusps<F: Scalar>(
    f: impl Fn(F) -> Result<Point2<F>>,
    grid: &ParamGrid<F>,
    tol: F,
) -> Result<Vec<F>> {
    CuspFinder::with_tol(tol).find(&f, grid)
}

pub(crate) fn wrap_angle<F: Scalar>(t: F) -> F {
    let tau = F::two_pi();
    let r = t % tau;
    if r < F::zero() {
        r + tau
    } else {
        r
    }
}

/// Distance between two angles on the circle.
pub(crate) fn angular_gap<F: Scalar>(a: F, b: F) -> F {
    let d = wrap_angle(a - b);
    d.min(F::two_pi() - d)
}
