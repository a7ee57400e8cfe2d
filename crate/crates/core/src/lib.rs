//! Two congruent disks covering a convex polygon.
//!
//! Two constructions are provided: a single-pass streaming cover that keeps
//! only the four coordinate extremes ([`stream`]), and a linear-time cover
//! aligned with the polygon's diameter ([`batch`]). Alongside them:
//! lower-bound certificates ([`bounds`]), exact coverage verification
//! ([`check`]) and a sampled reference optimum ([`oracle`]).

pub mod batch;
pub mod bounds;
pub mod calipers;
pub mod check;
pub mod error;
pub mod geom;
pub mod io;
pub mod mec;
pub mod oracle;
pub mod polygon;
pub mod report;
pub mod stream;
pub mod svg;

pub use batch::batch_cover;
pub use bounds::{
    certificate, certified_ratio, extreme_subpolygon, lower_bound_rho, LowerBoundCert,
};
pub use calipers::{diameter, DiameterResult};
pub use check::{edge_coverage, polygon_covered};
pub use error::{Error, Result};
pub use geom::{Disk, Point, Rect, Segment, EPS_GEOM};
pub use mec::min_enclosing_circle;
pub use oracle::{arc_two_center, brute_two_center, empirical_ratio, OracleResult};
pub use polygon::{
    gen_random_convex, gen_regular, gen_square_diamond, sample_boundary, ConvexPolygon,
};
pub use stream::{stream_cover, CoverSolution, Method, StreamState};
