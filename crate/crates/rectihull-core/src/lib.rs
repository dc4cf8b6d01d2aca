//! Rectilinear (biconvex) hulls of planar point samples and the statistical
//! machinery around them: support-set models with uniform sampling, hull
//! construction at an arbitrary axis angle, set distances, an axis-angle
//! estimator, and slow reference oracles for verification.
//!
//! The hull of a sample at angle `theta` is the intersection of the
//! complements of all open quadrants, oriented along the axes rotated by
//! `theta`, that contain no sample point. It is computed exactly through
//! four monotone staircase envelopes and evaluated in `O(log n)` per
//! membership query.

pub mod alpha;
pub mod error;
pub mod estimate;
pub mod geom;
pub mod hull;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod region;

pub use error::{Error, Result};
pub use geom::{Frame, Point2, Polygon, Rect};
pub use hull::{build_hull, BiconvexHull, Orientation, Polyline, Slab, StepEnvelope};
pub use region::{s5_region, uniform_sample, Region, SampleBatch};
