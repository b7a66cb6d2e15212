//! Pedal-like curves of the ellipse and of support-function curves:
//! construction, signed areas by quadrature and in closed form, curvature
//! centroids, and invariance sweeps over loci of pedal points.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64` and
//! `*32` aliases below fix the scalar type.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod area;
pub mod cli;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod pedal;
pub mod scalar;

pub use error::{GeometryError, Result};
pub use kernel::{Ellipse, ParamGrid, Point2, SampledCurve, SupportCurve};
pub use scalar::Scalar;

pub type Point64 = Point2<f64>;
pub type Point32 = Point2<f32>;
pub type Ellipse64 = Ellipse<f64>;
pub type Ellipse32 = Ellipse<f32>;
pub type SupportCurve64 = SupportCurve<f64>;
pub type SupportCurve32 = SupportCurve<f32>;
pub type ParamGrid64 = ParamGrid<f64>;
pub type ParamGrid32 = ParamGrid<f32>;
pub type SampledCurve64 = SampledCurve<f64>;
pub type SampledCurve32 = SampledCurve<f32>;
pub type Polygon64 = area::Polygon<f64>;
pub type Polygon32 = area::Polygon<f32>;
pub type AreaFamily64 = area::AreaFamily<f64>;
